// Umbrella header: the whole library in one include.
#pragma once

#include "dkmaxwell/angular.hpp"
#include "dkmaxwell/dkp_algebra.hpp"
#include "dkmaxwell/geometry.hpp"
#include "dkmaxwell/hypergeom.hpp"
#include "dkmaxwell/matrix10.hpp"
#include "dkmaxwell/modes.hpp"
#include "dkmaxwell/radial.hpp"
#include "dkmaxwell/verify.hpp"
