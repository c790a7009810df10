#pragma once

// Umbrella header for the whole library.

#include "socrank/axioms.hpp"
#include "socrank/io.hpp"
#include "socrank/order.hpp"
#include "socrank/ranking.hpp"
#include "socrank/scores.hpp"
#include "socrank/solutions.hpp"
#include "socrank/types.hpp"
#include "socrank/verify.hpp"
