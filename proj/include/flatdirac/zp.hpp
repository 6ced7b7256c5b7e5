#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatdirac/rational.hpp"

namespace flatdirac {

/// Legendre symbol (k/p) via Euler's criterion; p must be an odd prime.
int legendre(long long k, long long p);

bool is_prime(long long p);

/// Eta invariants of the p-dimensional Z_p manifold (p = 4r+3 prime) for its
/// two spin structures; chi is chi_rho(gamma).  Values are rounded to exact
/// rationals (denominator 3 at p = 3, integers beyond), residual < 1e-6.
std::pair<Rational, Rational> zp_eta(long long p, double chi = 1.0);

/// Eta series of (M_p, eps_h), h in {1,2}, evaluated through Hurwitz zetas.
double zp_eta_series(long long p, int h, double s, double chi = 1.0);

/// Harmonic spinor count d_0(eps_1); exact rounding guaranteed for p <= 71,
/// extended mode stretches to p <= 113 via long double.
long long zp_harmonic(long long p, bool extended = false);

struct ZpRow {
    long long r, p;
    Rational eta1, eta2;
    std::optional<long long> d0;
};

/// Table rows for all primes p = 4r+3 <= p_max (deterministic order).
std::vector<ZpRow> zp_table(long long p_max, bool with_harmonic = true, bool parallel = true);

}  // namespace flatdirac
