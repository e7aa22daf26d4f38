#pragma once

#include "logizono/binvec.hpp"
#include "logizono/cases.hpp"
#include "logizono/errors.hpp"
#include "logizono/eval.hpp"
#include "logizono/explicit_reach.hpp"
#include "logizono/explicit_set.hpp"
#include "logizono/expr.hpp"
#include "logizono/lfsr.hpp"
#include "logizono/limits.hpp"
#include "logizono/logical_zonotope.hpp"
#include "logizono/model.hpp"
#include "logizono/poly_zonotope.hpp"
#include "logizono/reach.hpp"
#include "logizono/report.hpp"
#include "logizono/serialize.hpp"
