#pragma once

#include "floorsum/dedekind.hpp"
#include "floorsum/exact.hpp"
#include "floorsum/floor_sums.hpp"
#include "floorsum/verify.hpp"
#include "floorsum/w_function.hpp"
