#include "flatdirac/eta.hpp"

#include <cmath>

namespace flatdirac {

double hurwitz_zeta(double s, double a) {
    if (!(a > 0.0 && a <= 1.0)) throw Error("hurwitz_zeta needs a in (0,1]");
    if (s == 1.0) throw Error("hurwitz_zeta pole at s = 1");
    if (s == 0.0) return 0.5 - a;
    // shift so N + a >= 20, then Euler-Maclaurin with B_2..B_16
    int N = 20;
    double sum = 0.0;
    for (int j = 0; j < N; ++j) sum += std::pow(j + a, -s);
    double x = N + a;
    sum += std::pow(x, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(x, -s);
    static const double bern[8] = {1.0 / 6,  -1.0 / 30,    1.0 / 42,  -1.0 / 30,
                                   5.0 / 66, -691.0 / 2730, 7.0 / 6,   -3617.0 / 510};
    double poch = s;           // s (s+1) ... (s+2k-2)
    double fact = 2.0;         // (2k)!
    double xpow = std::pow(x, -s - 1.0);
    for (int k = 1; k <= 8; ++k) {
        sum += bern[k - 1] * poch / fact * xpow;
        poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        xpow /= x * x;
    }
    return sum;
}

double hurwitz_zeta_deriv0(double a) { return std::lgamma(a) - 0.5 * std::log(2.0 * M_PI); }

EtaReport eta_z2k(const BieberbachGroup& g, const SpinStructure& eps, const HolonomyCharacter& rho,
                  const std::vector<double>& sample_s) {
    if (g.holonomy_type() != HolonomyType::Z2k && g.holonomy_type() != HolonomyType::Trivial)
        throw Error("eta_z2k: holonomy is not Z_2^k");
    EtaReport rep;
    auto asym = detect_z2k_asymmetry(g, eps, rho);
    if (!asym) {
        rep.identically_zero = true;
        rep.eta0 = Rational(0);
        for (double s : sample_s) rep.samples.emplace_back(s, 0.0);
        return rep;
    }
    int n = g.dim();
    int m = n / 2;
    int k = g.z2k_rank();
    rep.identically_zero = false;
    // eta(0) = (-1)^r sigma_gamma chi_rho(gamma) 2^{m-k}
    Rational sgn((asym->r % 2 == 0 ? 1 : -1) * asym->sigma_gamma);
    Rational p2(1);
    for (int i = 0; i < m - k; ++i) p2 = p2 * Rational(2);
    for (int i = 0; i > m - k; --i) p2 = p2 * Rational(1, 2);
    rep.eta0 = sgn * asym->chi_gamma * p2;
    double fnorm = std::sqrt(asym->f_norm_sq.to_double());
    rep.eta_prime0 = (4.0 * std::lgamma(0.25) + std::log(fnorm) - 3.0 * std::log(2.0 * M_PI)) *
                     rep.eta0.to_double();
    double coef = rep.eta0.to_double() * 2.0;  // (-1)^r sigma chi 2^{m-k+1}
    for (double s : sample_s) {
        double v = coef * std::pow(fnorm / (4.0 * M_PI), s) *
                   (hurwitz_zeta(s, 0.25) - hurwitz_zeta(s, 0.75));
        rep.samples.emplace_back(s, v);
    }
    return rep;
}

double eta_partial_sum(const SpectrumTable& table, double s, long long tail_terms) {
    double acc = 0.0;
    bool any_asym = false;
    for (const auto& [key, dm] : table.entries) {
        if (dm.first == dm.second) continue;
        any_asym = true;
        double mu = std::sqrt((double)key) / 2.0;
        acc += (double)(dm.first - dm.second) / std::pow(2.0 * M_PI * mu, s);
    }
    if (table.asymmetric && !table.asym)
        throw Error("asymmetric table without asymmetry data");
    if (table.asym) {
        any_asym = true;
        const auto& a = *table.asym;
        double fnorm = std::sqrt(a.f_norm_sq.to_double());
        // difference d+ - d- on mu_j: 2^{m-k+1} sigma (-1)^{r+j} chi; recover
        // the constant from the last in-table asymmetric shell
        double base = 0.0;
        long long j0 = 0;
        for (long long j = 0;; ++j) {
            double mu = (j + 0.5) / fnorm;
            long long key = (long long)std::llround(4.0 * mu * mu);
            if (key > table.max_key || !table.entries.count(key)) {
                j0 = j;
                break;
            }
            auto dm = table.entries.at(key);
            base = std::abs((double)(dm.first - dm.second));
        }
        double sgn0 = (a.r % 2 == 0 ? 1.0 : -1.0) * a.sigma_gamma * a.chi_gamma.to_double();
        for (long long j = j0; j < j0 + tail_terms; ++j) {
            double mu = (j + 0.5) / fnorm;
            double diff = base * sgn0 * ((j % 2 == 0) ? 1.0 : -1.0);
            acc += diff / std::pow(2.0 * M_PI * mu, s);
        }
    }
    (void)any_asym;
    return acc;
}

}  // namespace flatdirac
