#pragma once

#include "qframes/matrix.hpp"
#include "qframes/frames.hpp"
#include "qframes/opframes.hpp"
#include "qframes/weylref.hpp"
#include "qframes/composite.hpp"
#include "qframes/analysis.hpp"
#include "qframes/projection.hpp"
#include "qframes/tomo.hpp"
#include "qframes/io.hpp"
