#pragma once

#include "amicable/integer.hpp"
#include "amicable/lattice.hpp"
#include "amicable/radical.hpp"
#include "amicable/rectangles.hpp"
#include "amicable/reports.hpp"
#include "amicable/search.hpp"
#include "amicable/triangles.hpp"
#include "amicable/verify.hpp"
