// pizza.hpp
// Everything in one include.

#pragma once

#include "pizza/analysis.hpp"
#include "pizza/bench.hpp"
#include "pizza/cutting.hpp"
#include "pizza/cuttings.hpp"
#include "pizza/engines.hpp"
#include "pizza/fixtures.hpp"
#include "pizza/game.hpp"
#include "pizza/rational.hpp"
#include "pizza/serialize.hpp"
#include "pizza/solver.hpp"
#include "pizza/strategies.hpp"
