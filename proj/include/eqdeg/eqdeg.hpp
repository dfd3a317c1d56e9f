#pragma once

#include "eqdeg/bezout.hpp"
#include "eqdeg/bezout_harness.hpp"
#include "eqdeg/degree.hpp"
#include "eqdeg/errors.hpp"
#include "eqdeg/field.hpp"
#include "eqdeg/groebner.hpp"
#include "eqdeg/hilbert.hpp"
#include "eqdeg/ideal.hpp"
#include "eqdeg/ideal_ops.hpp"
#include "eqdeg/monomial.hpp"
#include "eqdeg/parse.hpp"
#include "eqdeg/polynomial.hpp"
