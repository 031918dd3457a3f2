#pragma once

#include "ordcalc/cardinal.hpp"
#include "ordcalc/error.hpp"
#include "ordcalc/generators.hpp"
#include "ordcalc/invariant_sum.hpp"
#include "ordcalc/io.hpp"
#include "ordcalc/mixed_sum.hpp"
#include "ordcalc/notation.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/properties.hpp"
#include "ordcalc/random.hpp"
#include "ordcalc/sequence.hpp"
#include "ordcalc/transfinite_sum.hpp"
#include "ordcalc/tree_size.hpp"
