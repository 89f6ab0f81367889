#pragma once

#include "quboforge/build.hpp"
#include "quboforge/graph.hpp"
#include "quboforge/io.hpp"
#include "quboforge/normalize.hpp"
#include "quboforge/qubo.hpp"
#include "quboforge/solve.hpp"
#include "quboforge/tour.hpp"
#include "quboforge/tsplib.hpp"
