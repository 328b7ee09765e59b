#pragma once

#include "infoscale/error.hpp"
#include "infoscale/numkernel/matrix.hpp"
#include "infoscale/numkernel/optimize.hpp"
#include "infoscale/numkernel/quadrature.hpp"
#include "infoscale/numkernel/rng.hpp"
#include "infoscale/numkernel/softmax.hpp"
#include "infoscale/numkernel/special.hpp"
#include "infoscale/numkernel/sphere.hpp"
#include "infoscale/numkernel/stats.hpp"
