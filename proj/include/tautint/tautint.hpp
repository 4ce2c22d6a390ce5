#pragma once

#include "tautint/combinatorics.hpp"
#include "tautint/engine.hpp"
#include "tautint/errors.hpp"
#include "tautint/graph.hpp"
#include "tautint/heights.hpp"
#include "tautint/hodge.hpp"
#include "tautint/rational.hpp"
#include "tautint/symbolic.hpp"
#include "tautint/verify.hpp"
