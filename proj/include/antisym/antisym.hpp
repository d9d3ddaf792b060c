#pragma once

#include "antisym/errors.hpp"
#include "antisym/rational.hpp"
#include "antisym/monomial.hpp"
#include "antisym/polynomial.hpp"
#include "antisym/factored_rational.hpp"
#include "antisym/permutation.hpp"
#include "antisym/identity.hpp"
#include "antisym/q_limit.hpp"
#include "antisym/simplex_integral.hpp"
