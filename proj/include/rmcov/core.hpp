#pragma once

#include "rmcov/core/affine.hpp"
#include "rmcov/core/anf.hpp"
#include "rmcov/core/text_format.hpp"
#include "rmcov/core/truth_table.hpp"
#include "rmcov/core/walsh.hpp"
