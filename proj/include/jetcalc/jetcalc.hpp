#pragma once

// Umbrella header for the jetcalc library.

#include "cache.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "invariants.hpp"
#include "jet.hpp"
#include "local_algebra.hpp"
#include "monomial_order.hpp"
#include "parser.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "resolution.hpp"
