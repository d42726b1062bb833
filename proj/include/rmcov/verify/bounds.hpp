#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmcov::verify {

struct BoundRow {
    int n = 0;
    int lower = 0;
    int upper = 0;
    bool propagated = false;  // upper obtained from the n-1 row here
};

/// Covering-radius bounds of RM(2, n), 8 <= n <= 12.
struct BoundTable {
    std::vector<BoundRow> rows;
    std::map<int, int> rm1_bounds;  // n -> upper bound on nl of any n-variable function

    [[nodiscard]] const BoundRow& row(int n) const
    {
        for (const auto& r : rows) {
            if (r.n == n) {
                return r;
            }
        }
        throw std::out_of_range("no bound row for n=" + std::to_string(n));
    }
};

/// Imported covering radii of RM(1, n): 56 for n=7, 120 for n=8, 244 for n=9.
inline const std::map<int, int>& rm1_covering_bounds()
{
    static const std::map<int, int> b = {{7, 56}, {8, 120}, {9, 244}};
    return b;
}

/// Writing f in B_{n+1} as f1 || f2 gives nl2(f) <= nl2(f1) + nl(f2 + q1) for the
/// quadratic q1 nearest to f1, so upper(n+1) = upper(n) + rm1(n). Lower bounds and
/// the n = 11, 12 uppers are the published values.
inline BoundTable propagate_bounds(int cr27)
{
    BoundTable t;
    t.rm1_bounds = rm1_covering_bounds();
    static const std::map<int, int> known_lower = {{8, 84}, {9, 196}, {10, 400}, {11, 848}, {12, 1760}};
    static const std::map<int, int> known_upper = {{11, 956}, {12, 1946}};
    int upper = cr27;
    for (int n = 8; n <= 12; ++n) {
        BoundRow r{n, known_lower.at(n), 0, false};
        if (auto it = t.rm1_bounds.find(n - 1); it != t.rm1_bounds.end()) {
            upper += it->second;
            r.upper = upper;
            r.propagated = true;
        } else {
            r.upper = known_upper.at(n);
        }
        t.rows.push_back(r);
    }
    return t;
}

} // namespace rmcov::verify
