#pragma once

#include "rmcov/secondorder/coset_scan.hpp"
#include "rmcov/secondorder/quadratic_form.hpp"
#include "rmcov/secondorder/second_order.hpp"
