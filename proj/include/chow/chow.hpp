#pragma once

// Umbrella header: exact Segre-class calculus over Q and the radicality
// pipeline built on it.

#include "budget.hpp"
#include "degmu.hpp"
#include "dimension.hpp"
#include "equidim.hpp"
#include "errors.hpp"
#include "factor.hpp"
#include "groebner.hpp"
#include "handle.hpp"
#include "ideal_ops.hpp"
#include "monomial.hpp"
#include "mult.hpp"
#include "numeric.hpp"
#include "order.hpp"
#include "parse.hpp"
#include "polynomial.hpp"
#include "projdeg.hpp"
#include "quotient.hpp"
#include "radical.hpp"
#include "report.hpp"
#include "ring.hpp"
#include "rur.hpp"
#include "sample.hpp"
#include "scalars.hpp"
#include "segre.hpp"
#include "univariate.hpp"
#include "zero_dim.hpp"
