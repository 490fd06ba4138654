#pragma once

#include "partitions.hpp"
#include "field.hpp"
#include "laurent.hpp"
#include "plabic.hpp"
#include "charts.hpp"
#include "mirror.hpp"
#include "polyhedra.hpp"
#include "census.hpp"
#include "verify.hpp"
