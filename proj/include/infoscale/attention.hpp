#pragma once

#include "infoscale/attention/attend.hpp"
#include "infoscale/attention/mask.hpp"
#include "infoscale/attention/presets.hpp"
#include "infoscale/attention/temperature.hpp"
#include "infoscale/positional.hpp"
