#pragma once

#include "flagdual/complex.hpp"
#include "flagdual/dilog.hpp"
#include "flagdual/duality.hpp"
#include "flagdual/errors.hpp"
#include "flagdual/flags.hpp"
#include "flagdual/formal_sum.hpp"
#include "flagdual/gaussian_factor.hpp"
#include "flagdual/gaussian_rational.hpp"
#include "flagdual/io.hpp"
#include "flagdual/mat3.hpp"
#include "flagdual/prebloch.hpp"
#include "flagdual/projective_line.hpp"
#include "flagdual/scalar.hpp"
#include "flagdual/solver.hpp"
#include "flagdual/tetra.hpp"
#include "flagdual/triangulation.hpp"
