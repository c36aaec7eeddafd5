#pragma once

#include "knotd/cfk.hpp"
#include "knotd/correction_terms.hpp"
#include "knotd/errors.hpp"
#include "knotd/knot_expr.hpp"
#include "knotd/knot_models.hpp"
#include "knotd/obstructions.hpp"
#include "knotd/profile_cache.hpp"
#include "knotd/rational.hpp"
#include "knotd/report_json.hpp"
#include "knotd/slopes.hpp"
#include "knotd/surgery_calculus.hpp"
