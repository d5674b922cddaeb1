#pragma once

#include "dopfactor/arith/matrix.hpp"
#include "dopfactor/arith/polynomial.hpp"
#include "dopfactor/arith/quad_scalar.hpp"
#include "dopfactor/arith/rational.hpp"
#include "dopfactor/arith/rational_function.hpp"
#include "dopfactor/detfactor.hpp"
#include "dopfactor/nabla.hpp"
#include "dopfactor/reduce.hpp"
#include "dopfactor/weyl/airy.hpp"
#include "dopfactor/weyl/diff_op.hpp"
