#pragma once

// Spectral radii, fractional matchings, the extremal family H(d,k), and
// automated checkers tying them together.

#include "specmatch/families.hpp"
#include "specmatch/graph.hpp"
#include "specmatch/half_integer.hpp"
#include "specmatch/matching.hpp"
#include "specmatch/rational.hpp"
#include "specmatch/spectral.hpp"
#include "specmatch/verify.hpp"
