#pragma once

// Closed-form roots for polynomials of degree <= 4 via circulant
// superposition, classical resolvents and an independent iterative oracle.

#include "radical/bench.hpp"
#include "radical/cardano.hpp"
#include "radical/errors.hpp"
#include "radical/euler.hpp"
#include "radical/ferrari.hpp"
#include "radical/matrices.hpp"
#include "radical/numerics.hpp"
#include "radical/oracle.hpp"
#include "radical/parse.hpp"
#include "radical/polynomial.hpp"
#include "radical/quadratic.hpp"
#include "radical/solve.hpp"
#include "radical/superposition.hpp"
#include "radical/transforms.hpp"
