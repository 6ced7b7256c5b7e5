#include "flatdirac/hodge.hpp"

namespace flatdirac {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Coefficients of prod over cycles (x^c - sigma_c) = char poly of B.
std::vector<long long> char_poly(const SignedPermMatrix& b) {
    std::vector<long long> poly{1};
    for (const auto& cyc : b.cycles()) {
        int c = (int)cyc.idx.size();
        std::vector<long long> next(poly.size() + c, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + c] += poly[i];
            next[i] -= cyc.sign_product * poly[i];
        }
        poly.swap(next);
    }
    return poly;  // poly[j] = coefficient of x^j
}

}  // namespace

long long krawtchouk(int p, int n, int x) {
    if (p < 0 || p > n || x < 0 || x > n) throw Error("krawtchouk arguments out of range");
    long long acc = 0;
    for (int t = 0; t <= p; ++t) {
        long long term = binom(x, t) * binom(n - x, p - t);
        acc += (t % 2 == 0) ? term : -term;
    }
    return acc;
}

long long exterior_trace(const SignedPermMatrix& b, int p) {
    if (p < 0 || p > b.n) throw Error("exterior power index out of range");
    bool involution = b.is_identity() || b.order() <= 2;
    if (involution) return krawtchouk(p, b.n, b.minus_one_count());
    // tr_p = e_p(eigenvalues) = (-1)^p [x^{n-p}] char(x)
    std::vector<long long> poly = char_poly(b);
    long long c = poly[b.n - p];
    return (p % 2 == 0) ? c : -c;
}

std::map<long long, long long> pform_spectrum(const BieberbachGroup& g, int p, long long max4,
                                              bool parallel) {
    int n = g.dim();
    if (p < 0 || p > n) throw Error("p-form index out of range");
    LatticeCharacter triv(n, 1);
    auto tables = theta_tables(g, triv, max4, parallel);
    std::map<long long, long long> out;
    for (long long key = 0; key <= max4; ++key) {
        GaussianRational acc;
        std::complex<double> acc_a{0, 0};
        bool exact = true;
        for (int ci = 0; ci < g.order(); ++ci) {
            const ShellCount& s = tables[ci][key];
            long long tr = exterior_trace(g.cosets()[ci].mat, p);
            if (s.exact)
                acc += s.e_sum * GaussianRational(Rational(tr));
            else
                exact = false;
            acc_a += (double)tr * s.e_approx;
        }
        long long d;
        if (exact) {
            GaussianRational v = acc * GaussianRational(Rational(1, g.order()));
            if (!v.im.is_zero() || !v.re.is_integer() || v.re.num() < 0)
                throw Error("p-form multiplicity not a non-negative integer");
            d = v.re.num();
        } else {
            std::complex<double> v = acc_a / (double)g.order();
            d = (long long)std::llround(v.real());
            if (std::abs(v.imag()) > 1e-6 || std::abs(v.real() - (double)d) > 1e-6)
                throw Error("p-form multiplicity rounding residual too large");
        }
        out[key] = d;
    }
    return out;
}

long long betti(const BieberbachGroup& g, int p) {
    if (p < 0 || p > g.dim()) return 0;
    long long acc = 0;
    for (const auto& c : g.cosets()) acc += exterior_trace(c.mat, p);
    if (acc % g.order() != 0) throw Error("betti number not integral");
    return acc / g.order();
}

}  // namespace flatdirac
