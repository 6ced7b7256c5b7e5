#pragma once

#include <map>

#include "flatdirac/lattice.hpp"

namespace flatdirac {

/// Krawtchouk polynomial value K_p^n(x) = sum_t (-1)^t C(x,t) C(n-x,p-t).
long long krawtchouk(int p, int n, int x);

/// Trace of the p-th exterior power on a signed permutation: Krawtchouk
/// shortcut for involutions, elementary symmetric polynomial of the
/// eigenvalue multiset (via the characteristic polynomial) in general.
long long exterior_trace(const SignedPermMatrix& b, int p);

/// Hodge Laplacian multiplicities on p-forms, keyed by 4 mu^2 (mu = |v|).
std::map<long long, long long> pform_spectrum(const BieberbachGroup& g, int p, long long max4,
                                              bool parallel = true);

/// Betti number beta_p = dim (Lambda^p R^n)^F.
long long betti(const BieberbachGroup& g, int p);

}  // namespace flatdirac
