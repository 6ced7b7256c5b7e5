#include "flatdirac/zp.hpp"

#include <cmath>

#include "flatdirac/eta.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flatdirac {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

int legendre(long long k, long long p) {
    if (!is_prime(p) || p == 2) throw Error("legendre symbol needs an odd prime");
    long long a = ((k % p) + p) % p;
    if (a == 0) return 0;
    // a^((p-1)/2) mod p
    long long e = (p - 1) / 2, base = a, r = 1;
    while (e) {
        if (e & 1) r = (__int128)r * base % p;
        base = (__int128)base * base % p;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

namespace {

void check_p(long long p) {
    if (!is_prime(p) || p % 4 != 3) throw Error("Z_p family needs a prime p = 3 mod 4");
}

Rational round_eta(double v, long long p) {
    // table values are integers for p >= 7 and thirds at p = 3
    long long den = p == 3 ? 3 : 1;
    double scaled = v * (double)den;
    long long r = (long long)std::llround(scaled);
    if (std::abs(scaled - (double)r) > 1e-6 * den)
        throw Error("eta value does not round to denominator " + std::to_string(den));
    return Rational(r, den);
}

}  // namespace

std::pair<Rational, Rational> zp_eta(long long p, double chi) {
    check_p(p);
    long double e1 = 0, e2 = 0;
    long double sp = std::sqrt((long double)p);
    for (long long k = 1; k <= (p - 1) / 2; ++k) {
        int leg = legendre(k, p);
        long double t = (long double)M_PI * k / p;
        e1 += leg / std::tan(t);
        e2 += (k % 2 == 0 ? leg : -leg) / std::sin(t);
    }
    e1 *= -2.0L * chi / sp;
    e2 *= -2.0L * chi / sp;
    return {round_eta((double)e1, p), round_eta((double)e2, p)};
}

double zp_eta_series(long long p, int h, double s, double chi) {
    check_p(p);
    if (h != 1 && h != 2) throw Error("spin structure index must be 1 or 2");
    double total = 0.0;
    for (long long k = 1; k < p; ++k) {
        int leg = legendre(k, p);
        double inner = 0.0;
        if (h == 1) {
            for (long long l = 1; l < p; ++l)
                inner += std::sin(2.0 * M_PI * l * k / p) * hurwitz_zeta(s, (double)l / p);
            total += leg * inner;
        } else {
            for (long long l = 0; l < p; ++l)
                inner += std::sin(M_PI * (2 * l + 1) * k / p) *
                         hurwitz_zeta(s, (double)(2 * l + 1) / (2 * p));
            total += (k % 2 == 0 ? leg : -leg) * inner;
        }
    }
    return -2.0 * chi / (std::sqrt((double)p) * std::pow(2.0 * M_PI * p, s)) * total;
}

long long zp_harmonic(long long p, bool extended) {
    check_p(p);
    long long cap = extended ? 113 : 71;
    if (p > cap)
        throw Error("zp_harmonic: p exceeds precision guard (" + std::to_string(cap) +
                    (extended ? ", extended)" : "; use extended mode)"));
    long long r = (p - 3) / 4;
    long long m = (p - 1) / 2;
    long double total = 0.0L;
    for (long long k = 0; k < p; ++k) {
        long double prod = 1.0L;
        for (long long j = 1; j <= m; ++j) prod *= std::cos((long double)M_PI * j * k / p);
        if (((r + 1) * k) % 2 != 0) prod = -prod;
        total += prod;
    }
    long double v = std::pow(2.0L, (long double)m) / p * total;
    long long rounded = (long long)std::llroundl(v);
    if (std::abs((double)(v - rounded)) > 1e-3) throw Error("zp_harmonic rounding residual too large");
    return rounded;
}

std::vector<ZpRow> zp_table(long long p_max, bool with_harmonic, bool parallel) {
    std::vector<long long> primes;
    for (long long p = 3; p <= p_max; ++p)
        if (p % 4 == 3 && is_prime(p)) primes.push_back(p);
    std::vector<ZpRow> rows(primes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long i = 0; i < (long long)primes.size(); ++i) {
        long long p = primes[i];
        ZpRow row;
        row.p = p;
        row.r = (p - 3) / 4;
        auto [e1, e2] = zp_eta(p);
        row.eta1 = e1;
        row.eta2 = e2;
        if (with_harmonic && p <= 71) row.d0 = zp_harmonic(p);
        rows[i] = std::move(row);
    }
    (void)parallel;
    return rows;
}

}  // namespace flatdirac
