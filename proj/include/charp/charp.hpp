#pragma once

// Umbrella header for the characteristic-p threshold toolkit.

#include "charp/budget.hpp"
#include "charp/field.hpp"
#include "charp/frobenius.hpp"
#include "charp/groebner.hpp"
#include "charp/ideal.hpp"
#include "charp/idealfile.hpp"
#include "charp/linkage.hpp"
#include "charp/monomial.hpp"
#include "charp/order.hpp"
#include "charp/parse.hpp"
#include "charp/poly.hpp"
#include "charp/rational.hpp"
#include "charp/ring.hpp"
#include "charp/thresholds.hpp"
