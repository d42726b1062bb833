#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rmcov/core/anf.hpp"
#include "rmcov/core/text_format.hpp"

namespace rmcov::verify {

/// A named 6-variable fixture function.
struct Representative {
    std::string id;
    AnfTermSet anf;
};

/// Fixture ANFs: fun1..fun5 (nl2 = 16 classes), fun6..fun12 (nl2 = 15
/// classes) and g0 (the nl2 = 18 class).
inline const std::vector<std::pair<std::string_view, std::string_view>>& fixture_sources()
{
    static const std::vector<std::pair<std::string_view, std::string_view>> sources = {
        {"fun1", "126+135+234"},
        {"fun2", "1234+126+145+235"},
        {"fun3", "1234+135+146+235+236+245"},
        {"fun4", "1236+1245+135+145+146+234"},
        {"fun5", "12345+135+146+235+236+245"},
        {"fun6", "123456+126+135+234"},
        {"fun7", "123456+1234+126+145+235+45"},
        {"fun8", "123456+1234+135+146+235+236+245"},
        {"fun9", "123456+1236+1245+135+145+146+234+46"},
        {"fun10", "123456+1234+134+156+234+236+245+34+36+45"},
        {"fun11", "123456+1236+1245+135+145+146+234+236+245+35+45+46"},
        {"fun12", "123456+2345+1256+1346+124+125+235+345+126+346"},
        {"g0", "123+145+246+356+456"},
    };
    return sources;
}

inline std::vector<Representative> default_representatives()
{
    std::vector<Representative> out;
    for (const auto& [id, anf] : fixture_sources()) {
        out.push_back({std::string(id), parse_anf(anf, 6)});
    }
    return out;
}

inline bool is_fixture_name(std::string_view name)
{
    const auto& s = fixture_sources();
    return std::any_of(s.begin(), s.end(), [&](const auto& p) { return p.first == name; });
}

inline AnfTermSet fixture_anf(std::string_view name)
{
    for (const auto& [id, anf] : fixture_sources()) {
        if (id == name) {
            return parse_anf(anf, 6);
        }
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "' (expected fun1..fun12 or g0)");
}

} // namespace rmcov::verify
