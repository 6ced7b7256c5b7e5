#include "flatdirac/spin_oracle.hpp"

#include <bit>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flatdirac {

CMat CMat::eye(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

CMat CMat::mul(const CMat& o) const {
    CMat r(d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            cplx v = at(i, k);
            if (v == cplx(0, 0)) continue;
            for (int j = 0; j < d; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

CMat CMat::add(const CMat& o) const {
    CMat r(d);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

CMat CMat::scale(cplx s) const {
    CMat r(d);
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * s;
    return r;
}

cplx CMat::trace() const {
    cplx t(0, 0);
    for (int i = 0; i < d; ++i) t += at(i, i);
    return t;
}

namespace {

CMat kron(const CMat& a, const CMat& b) {
    CMat r(a.d * b.d);
    for (int i = 0; i < a.d; ++i)
        for (int j = 0; j < a.d; ++j)
            for (int k = 0; k < b.d; ++k)
                for (int l = 0; l < b.d; ++l)
                    r.at(i * b.d + k, j * b.d + l) = a.at(i, j) * b.at(k, l);
    return r;
}

CMat pauli(int which) {
    CMat m(2);
    switch (which) {
        case 1: m.at(0, 1) = 1; m.at(1, 0) = 1; break;
        case 2: m.at(0, 1) = cplx(0, -1); m.at(1, 0) = cplx(0, 1); break;
        default: m.at(0, 0) = 1; m.at(1, 1) = -1; break;
    }
    return m;
}

}  // namespace

SpinRep::SpinRep(int n) : n_(n) {
    if (n < 2 || n > 8) throw Error("spin oracle supports 2 <= n <= 8");
    int m = n / 2;
    dim_ = 1 << m;
    // L(e_{2j-1}) = s3^(j-1) x (i s1) x I..., L(e_{2j}) = s3^(j-1) x (i s2) x I...
    for (int j = 1; j <= m; ++j) {
        for (int w = 1; w <= 2; ++w) {
            CMat acc = CMat::eye(1);
            acc.at(0, 0) = 1;
            for (int s = 1; s < j; ++s) acc = kron(acc, pauli(3));
            acc = kron(acc, pauli(w).scale(cplx(0, 1)));
            for (int s = j + 1; s <= m; ++s) acc = kron(acc, CMat::eye(2));
            L_.push_back(acc);
        }
    }
    if (n % 2 == 1) {
        CMat acc = CMat::eye(1);
        acc.at(0, 0) = 1;
        for (int s = 1; s <= m; ++s) acc = kron(acc, pauli(3));
        // L(e_n) = i (-1)^(m+1) s3^m, matching L(e_n) = -+ i on S^{+-}_{n-1}
        L_.push_back(acc.scale(cplx(0, m % 2 == 1 ? 1 : -1)));
    }
    // machine check: L(e_i)L(e_j) + L(e_j)L(e_i) = -2 delta_ij
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            CMat s = L_[i].mul(L_[j]).add(L_[j].mul(L_[i]));
            for (int r = 0; r < dim_; ++r)
                for (int c = 0; c < dim_; ++c) {
                    cplx want = (i == j && r == c) ? cplx(-2, 0) : cplx(0, 0);
                    if (std::abs(s.at(r, c) - want) > 1e-12)
                        throw Error("spin representation anticommutation check failed");
                }
        }
    // skew-Hermitian check
    for (int i = 0; i < n_; ++i)
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c)
                if (std::abs(L_[i].at(r, c) + std::conj(L_[i].at(c, r))) > 1e-12)
                    throw Error("L(e_i) not skew-Hermitian");
}

SpinRep build_spin_rep(int n) { return SpinRep(n); }

CMat SpinRep::evaluate(const CliffordElement& g) const {
    if (g.dim() != n_) throw Error("dimension mismatch in oracle evaluation");
    CMat out(dim_);
    for (const auto& [mask, coef] : g.terms()) {
        CMat term = CMat::eye(dim_);
        for (int i = 0; i < n_; ++i)
            if (mask & (1u << i)) term = term.mul(L_[i]);
        out = out.add(term.scale(coef.to_double()));
    }
    return out;
}

CMat SpinRep::torus_element(const TorusAngles& x) const {
    CMat out = CMat::eye(dim_);
    for (int j = 0; j < x.m(); ++j) {
        double t = M_PI * x.t_over_pi[j].to_double();
        CMat rot = CMat::eye(dim_).scale(std::cos(t)).add(L_[2 * j].mul(L_[2 * j + 1]).scale(std::sin(t)));
        out = out.mul(rot);
    }
    return out.scale((double)x.sign);
}

CMat SpinRep::su_projector(const std::vector<Rational>& u, int pm) const {
    double norm = 0;
    CMat lu(dim_);
    for (int i = 0; i < n_; ++i) {
        double ui = u[i].to_double();
        norm += ui * ui;
        if (ui != 0) lu = lu.add(L_[i].scale(ui));
    }
    norm = std::sqrt(norm);
    if (norm == 0) throw Error("S_u projector needs u != 0");
    // S_u^+ is the -i|u| eigenspace: P = (I + i L(u)/|u|)/2
    CMat p = CMat::eye(dim_).add(lu.scale(cplx(0, pm / norm))).scale(0.5);
    return p;
}

CMat SpinRep::half_spin_projector(int pm) const {
    if (n_ % 2 != 0) throw Error("half-spin projector needs n even");
    int m = n_ / 2;
    CMat g = CMat::eye(dim_);
    for (int i = 0; i < n_; ++i) g = g.mul(L_[i]);
    // S^+- = eigenspace of L(g_m) with eigenvalue +- i^m: P = (I +- (-i)^m g)/2
    static const cplx mitab[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};  // (-i)^m
    CMat p = CMat::eye(dim_).add(g.scale((double)pm * mitab[m % 4])).scale(0.5);
    return p;
}

std::pair<long long, long long> brute_multiplicity(const BieberbachGroup& g,
                                                   const SpinStructure& eps,
                                                   const std::vector<cplx>& chi_rho, long long key4,
                                                   bool parallel) {
    int n = g.dim();
    SpinRep rep(n);
    int nf = g.order();
    if ((int)chi_rho.size() != nf) throw Error("character table size mismatch");
    double norm = std::sqrt((double)key4) / 2.0;
    cplx dp(0, 0), dm(0, 0);
    for (int ci = 0; ci < nf; ++ci) {
        const Coset& c = g.cosets()[ci];
        CMat lg = rep.evaluate(spin_on_coset(g, eps, c));
        cplx tr_l = lg.trace();
        std::vector<cplx> tr_li(n);
        for (int i = 0; i < n; ++i) tr_li[i] = lg.mul(rep.L(i)).trace();
        // gather the B-fixed shell vectors into a flat buffer, reduce over them
        std::vector<double> us;
        collect_fixed_shell_vectors_f64(g, eps.delta, c, key4, us);
        std::vector<double> bd(n);
        for (int i = 0; i < n; ++i) bd[i] = c.b[i].to_double();
        long long count = (long long)us.size() / n;
        double re_p = 0, im_p = 0, re_m = 0, im_m = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : re_p, im_p, re_m, im_m) if (parallel)
#endif
        for (long long vi = 0; vi < count; ++vi) {
            const double* u = us.data() + vi * n;
            double ub = 0;
            cplx dot(0, 0);
            for (int i = 0; i < n; ++i) {
                ub += u[i] * bd[i];
                dot += u[i] * tr_li[i];
            }
            cplx phase(std::cos(-2 * M_PI * ub), std::sin(-2 * M_PI * ub));
            // tr L(eps(gamma)) P_u^+- = (tr L)/2 +- (i / 2|u|) tr(L L(u))
            cplx tp = phase * (0.5 * tr_l + cplx(0, 0.5 / norm) * dot);
            cplx tm = phase * (0.5 * tr_l - cplx(0, 0.5 / norm) * dot);
            re_p += tp.real();
            im_p += tp.imag();
            re_m += tm.real();
            im_m += tm.imag();
        }
        (void)parallel;
        dp += chi_rho[ci] * cplx(re_p, im_p);
        dm += chi_rho[ci] * cplx(re_m, im_m);
    }
    dp /= (double)nf;
    dm /= (double)nf;
    auto to_int = [](cplx v, const char* lbl) {
        double r = std::round(v.real());
        if (std::abs(v.imag()) > 1e-6 || std::abs(v.real() - r) > 1e-6)
            throw Error(std::string("oracle multiplicity not integral for ") + lbl);
        return (long long)r;
    };
    return {to_int(dp, "d+"), to_int(dm, "d-")};
}

int sigma_sign(const SpinRep& rep, const std::vector<Rational>& u, const TorusAngles& x_gamma,
               const CliffordElement& lift) {
    int n = rep.n();
    if (n % 2 != 1) throw Error("sigma sign is defined for n odd");
    bool zero = true;
    for (const auto& x : u) zero &= x.is_zero();
    if (zero) throw Error("sigma sign needs u != 0");
    TorusAngles xg = x_gamma;
    if (xg.n != n - 1) throw Error("x_gamma must live in Spin(n-1)");
    cplx chi_p = spin_character(xg, CharKind::Plus);
    cplx chi_m = spin_character(xg, CharKind::Minus);
    CMat lg = rep.evaluate(lift);
    cplx tr = lg.mul(rep.su_projector(u, +1)).trace();
    if (std::abs(chi_p - chi_m) < 1e-9) return 1;  // sign immaterial (n_B > 1 style)
    if (std::abs(tr - chi_p) < 1e-9) return 1;
    if (std::abs(tr - chi_m) < 1e-9) return -1;
    throw Error("restricted trace matches neither half-spin character");
}

}  // namespace flatdirac
