#pragma once

// Umbrella header for the Riemann boundary-problem factorization library.

#include "rhfactor/errors.hpp"
#include "rhfactor/rational.hpp"
#include "rhfactor/scalar.hpp"
#include "rhfactor/intervals.hpp"
#include "rhfactor/piecewise.hpp"
#include "rhfactor/circle.hpp"
#include "rhfactor/quadrature.hpp"
#include "rhfactor/kernels.hpp"
#include "rhfactor/factor.hpp"
#include "rhfactor/sigma.hpp"
#include "rhfactor/joukowski.hpp"
#include "rhfactor/solver.hpp"
#include "rhfactor/factorize.hpp"
#include "rhfactor/verification.hpp"
#include "rhfactor/qrand.hpp"
