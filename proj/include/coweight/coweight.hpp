#pragma once

#include "coweight/aut_group.hpp"
#include "coweight/burnside.hpp"
#include "coweight/checked.hpp"
#include "coweight/count_table.hpp"
#include "coweight/duality.hpp"
#include "coweight/enumerate.hpp"
#include "coweight/hnf.hpp"
#include "coweight/int_matrix.hpp"
#include "coweight/parallel.hpp"
#include "coweight/simplex.hpp"
