#pragma once

#include "circact/circle_homeo.hpp"
#include "circact/conjugacy.hpp"
#include "circact/errors.hpp"
#include "circact/fiber_curve.hpp"
#include "circact/gap_set.hpp"
#include "circact/interval_homeo.hpp"
#include "circact/intervals.hpp"
#include "circact/line_homeo.hpp"
#include "circact/pl_function.hpp"
#include "circact/rational.hpp"
#include "circact/recovery.hpp"
#include "circact/serialization.hpp"
#include "circact/surface_map.hpp"
