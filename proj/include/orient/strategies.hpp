#pragma once

#include "orient/strategies/registry.hpp"
