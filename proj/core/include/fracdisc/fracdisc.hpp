#pragma once

#include "fracdisc/analysis.hpp"
#include "fracdisc/errors.hpp"
#include "fracdisc/fde_core.hpp"
#include "fracdisc/oracle.hpp"
#include "fracdisc/problems.hpp"
#include "fracdisc/schemes.hpp"
#include "fracdisc/special_functions.hpp"
