#pragma once

#include "infoscale/attention.hpp"
#include "infoscale/diagx.hpp"
#include "infoscale/entropy.hpp"
#include "infoscale/numkernel.hpp"
#include "infoscale/positional.hpp"
#include "infoscale/theory.hpp"
