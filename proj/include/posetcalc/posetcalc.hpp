#pragma once

#include "posetcalc/abindex.hpp"
#include "posetcalc/chow.hpp"
#include "posetcalc/error.hpp"
#include "posetcalc/io.hpp"
#include "posetcalc/ncpoly.hpp"
#include "posetcalc/poly.hpp"
#include "posetcalc/poset.hpp"
#include "posetcalc/rlabeling.hpp"
#include "posetcalc/rng.hpp"
