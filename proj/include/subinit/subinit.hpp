#pragma once

#include "subinit/errors.hpp"
#include "subinit/rational.hpp"
#include "subinit/polynomial.hpp"
#include "subinit/order.hpp"
#include "subinit/groebner.hpp"
#include "subinit/parse.hpp"
#include "subinit/linalg.hpp"
#include "subinit/lp.hpp"
#include "subinit/configspace.hpp"
#include "subinit/subdivision.hpp"
#include "subinit/bounds.hpp"
#include "subinit/fixtures.hpp"
#include "subinit/census.hpp"
