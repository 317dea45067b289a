#pragma once

#include "pentabeam/bands.hpp"
#include "pentabeam/commands.hpp"
#include "pentabeam/dense_matrix.hpp"
#include "pentabeam/explicit_inverse.hpp"
#include "pentabeam/fixed_point.hpp"
#include "pentabeam/norms.hpp"
#include "pentabeam/oracle.hpp"
#include "pentabeam/problem.hpp"
#include "pentabeam/report.hpp"
