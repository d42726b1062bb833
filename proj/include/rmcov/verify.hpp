#pragma once

#include "rmcov/verify/bounds.hpp"
#include "rmcov/verify/checks.hpp"
#include "rmcov/verify/pipeline.hpp"
#include "rmcov/verify/report.hpp"
#include "rmcov/verify/representatives.hpp"
#include "rmcov/verify/witness.hpp"
