#pragma once

#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

/// B_n with generating function t/(e^t - 1), so B_1 = -1/2.
Rational bernoulli(unsigned n);

/// B_0 .. B_n via sum_{k<=n} C(n+1, k) B_k = 0.
std::vector<Rational> bernoulli_table(unsigned n);

}  // namespace tautring
