#pragma once

#include "lef/rational.hpp"

namespace lef {

/// Exact Bernoulli number b_n from the recurrence
/// sum_{k=0..n} C(n+1,k) b_k = 0 with b_0 = 1.
/// Convention: b_1 = -1/2; b_n = 0 for odd n > 1.
Rational bernoulli(long n);

}  // namespace lef
