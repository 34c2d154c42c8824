#pragma once

#include "orient/oracles/coloring.hpp"
#include "orient/oracles/cycles.hpp"
#include "orient/oracles/embedding.hpp"
#include "orient/oracles/expansion.hpp"
#include "orient/oracles/fas.hpp"
