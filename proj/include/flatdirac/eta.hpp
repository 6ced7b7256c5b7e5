#pragma once

#include <vector>

#include "flatdirac/dirac.hpp"

namespace flatdirac {

/// Hurwitz zeta zeta(s, a) = sum_{j>=0} (j+a)^{-s}, a in (0,1], s != 1;
/// Euler-Maclaurin with 8 Bernoulli terms, relative error <= 1e-12 on
/// s in [-2, 20].
double hurwitz_zeta(double s, double a);

/// zeta'(0, a) = log Gamma(a) - (1/2) log(2 pi).
double hurwitz_zeta_deriv0(double a);

struct EtaReport {
    bool identically_zero = true;
    Rational eta0;                                // exact
    double eta_prime0 = 0.0;
    std::vector<std::pair<double, double>> samples;  // (s, eta(s))
};

/// Closed-form eta series/invariant of a Z_2^k manifold.
EtaReport eta_z2k(const BieberbachGroup& g, const SpinStructure& eps, const HolonomyCharacter& rho,
                  const std::vector<double>& sample_s);

/// Partial sum of sgn(lambda)/|lambda|^s over the asymmetric spectrum in the
/// table, extended along the mu_j progression for tail_terms further terms.
double eta_partial_sum(const SpectrumTable& table, double s, long long tail_terms);

}  // namespace flatdirac
