#pragma once

#include "mwisp/error.hpp"
#include "mwisp/geom/point.hpp"
#include "mwisp/geom/polygon.hpp"
#include "mwisp/geom/predicates.hpp"
#include "mwisp/geom/pslg.hpp"
#include "mwisp/geom/rational.hpp"
#include "mwisp/geom/region.hpp"
