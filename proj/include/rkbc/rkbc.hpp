#pragma once

#include "rkbc/types.hpp"
#include "rkbc/tableau.hpp"
#include "rkbc/grid.hpp"
#include "rkbc/weno.hpp"
#include "rkbc/problem.hpp"
#include "rkbc/euler.hpp"
#include "rkbc/problems.hpp"
#include "rkbc/flux.hpp"
#include "rkbc/boundary.hpp"
#include "rkbc/integrator.hpp"
#include "rkbc/jet.hpp"
#include "rkbc/solver2d.hpp"
#include "rkbc/vortex2d.hpp"
#include "rkbc/harness.hpp"
