#pragma once

#include "rmcov/cli/app.hpp"
#include "rmcov/cli/command.hpp"
