#include "flatdirac/dirac.hpp"

#include <cmath>

#include <memory>

#include "flatdirac/spin_oracle.hpp"

namespace flatdirac {

namespace {

Rational pow2(int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r = r * Rational(2);
    for (int i = 0; i > e; --i) r = r * Rational(1, 2);
    return r;
}

long long rational_to_count(const Rational& r, const char* what) {
    if (!r.is_integer() || r.num() < 0)
        throw Error(std::string(what) + " is not a non-negative integer: " + r.str());
    return r.num();
}

long long gaussian_to_count(const GaussianRational& v, const Rational& scale, const char* what) {
    GaussianRational s = v * GaussianRational(scale);
    if (!s.im.is_zero()) throw Error(std::string(what) + " has nonzero imaginary part");
    return rational_to_count(s.re, what);
}

}  // namespace

HolonomyCharacter HolonomyCharacter::trivial(const BieberbachGroup& g) {
    HolonomyCharacter c;
    c.d_rho = 1;
    c.values.assign(g.order(), Rational(1));
    return c;
}

HolonomyCharacter HolonomyCharacter::from_gen_values(const BieberbachGroup& g,
                                                     const std::vector<int>& gen_values) {
    if (gen_values.size() != g.generators().size())
        throw Error("character needs one value per generator");
    for (int v : gen_values)
        if (v != 1 && v != -1) throw Error("character generator values must be +-1");
    HolonomyCharacter c;
    c.d_rho = 1;
    c.values.reserve(g.order());
    for (const auto& cs : g.cosets()) {
        int v = 1;
        for (int gi : cs.word) v *= gen_values[gi];
        c.values.push_back(Rational(v));
    }
    return c;
}

std::vector<std::complex<double>> HolonomyCharacter::to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(values.size());
    for (const auto& v : values) out.emplace_back(v.to_double(), 0.0);
    return out;
}

SigmaProvider oracle_sigma_provider(int n) {
    auto rep = std::make_shared<SpinRep>(n);
    return [rep](const std::vector<Rational>& u, const TorusAngles& xg,
                 const CliffordElement& lift) { return sigma_sign(*rep, u, xg, lift); };
}

std::optional<AsymmetryData> detect_z2k_asymmetry(const BieberbachGroup& g,
                                                  const SpinStructure& eps,
                                                  const HolonomyCharacter& rho) {
    int n = g.dim();
    if (n % 4 != 3) return std::nullopt;
    for (int ci = 1; ci < g.order(); ++ci) {
        const Coset& c = g.cosets()[ci];
        if (c.mat.fixed_dim() != 1) continue;
        if (!c.mat.is_diagonal())
            throw Error("F_1 element not diagonal; contradicts simultaneous diagonalization");
        // B restricted to the lattice must equal -delta_eps Id
        bool match = true;
        int fix = -1;
        for (int i = 0; i < n; ++i) {
            if (c.mat.signs[i] != -eps.delta[i]) match = false;
            if (c.mat.signs[i] == 1) fix = i;
        }
        if (!match || rho.values[ci].is_zero()) continue;
        AsymmetryData a;
        a.coset = ci;
        a.f.assign(n, Rational(0));
        a.f[fix] = Rational(1);
        a.f_norm_sq = Rational(1);
        a.r = (n - 3) / 4;
        a.chi_gamma = rho.values[ci];
        // sigma_gamma = sigma((f . 2b) f, g_m) resolved by the oracle
        Rational c2 = Rational(2) * c.b[fix];
        if (!c2.is_integer() || c2.num() % 2 == 0)
            throw Error("asymmetric coset with f.2b not an odd integer");
        std::vector<Rational> u(n, Rational(0));
        u[fix] = c2;
        if (n > 8) throw Error("sigma_gamma resolution needs the oracle (n <= 8)");
        SpinRep rep(n);
        a.sigma_gamma =
            sigma_sign(rep, u, g_h_angles(n - 1, n / 2), spin_on_coset(g, eps, c));
        return a;
    }
    return std::nullopt;
}

SpectrumTable torus_spectrum(const BieberbachGroup& g, const SpinStructure& eps,
                             const HolonomyCharacter& rho, long long max4) {
    if (g.holonomy_type() != HolonomyType::Trivial)
        throw Error("torus_spectrum requires trivial holonomy");
    int n = g.dim();
    int m = n / 2;
    SpectrumTable t;
    t.n = n;
    t.max_key = max4;
    Rational f = pow2(m - 1) * Rational(rho.d_rho);
    auto shells = theta_table(g, eps.delta, g.cosets()[0], max4);
    for (const auto& s : shells) {
        if (s.key4 == 0) continue;
        long long d = rational_to_count(f * Rational(s.count), "torus multiplicity");
        t.entries[s.key4] = {d, d};
    }
    t.d0 = eps.trivial_type() ? rational_to_count(pow2(m) * Rational(rho.d_rho), "d0") : 0;
    if (n % 2 == 0) {
        long long h = eps.trivial_type()
                          ? rational_to_count(pow2(m - 1) * Rational(rho.d_rho), "d0+-")
                          : 0;
        t.d0_pm = {h, h};
    }
    t.asymmetric = false;
    return t;
}

SpectrumTable z2k_spectrum(const BieberbachGroup& g, const SpinStructure& eps,
                           const HolonomyCharacter& rho, long long max4, bool parallel) {
    if (g.holonomy_type() == HolonomyType::Trivial) return torus_spectrum(g, eps, rho, max4);
    if (g.holonomy_type() != HolonomyType::Z2k) throw Error("z2k_spectrum: holonomy is not Z_2^k");
    (void)parallel;
    int n = g.dim();
    int m = n / 2;
    int k = g.z2k_rank();
    SpectrumTable t;
    t.n = n;
    t.max_key = max4;
    Rational factor = pow2(m - k - 1);
    auto shells = theta_table(g, eps.delta, g.cosets()[0], max4);

    auto asym = detect_z2k_asymmetry(g, eps, rho);
    std::map<long long, int> asym_parity;  // key -> j parity sign (-1)^{r+j}
    if (asym) {
        for (long long j = 0;; ++j) {
            // 4 mu_j^2 = (2j+1)^2 / |f|^2
            Rational key = Rational((2 * j + 1) * (2 * j + 1)) / asym->f_norm_sq;
            if (key > Rational(max4)) break;
            if (key.is_integer())
                asym_parity[key.num()] = ((asym->r + j) % 2 == 0) ? 1 : -1;
        }
    }

    for (const auto& s : shells) {
        if (s.key4 == 0) continue;
        Rational base = Rational(rho.d_rho) * Rational(s.count);
        auto it = asym_parity.find(s.key4);
        if (it == asym_parity.end()) {
            long long d = rational_to_count(factor * base, "multiplicity");
            t.entries[s.key4] = {d, d};
        } else {
            Rational corr =
                Rational(2 * it->second * asym->sigma_gamma) * asym->chi_gamma;
            long long dp = rational_to_count(factor * (base + corr), "d+");
            long long dm = rational_to_count(factor * (base - corr), "d-");
            t.entries[s.key4] = {dp, dm};
            if (dp != dm) t.asymmetric = true;
        }
    }
    if (asym) t.asym = asym;
    t.d0 = eps.trivial_type()
               ? rational_to_count(pow2(m - k) * Rational(rho.d_rho), "d0")
               : 0;
    if (n % 2 == 0) {
        long long h =
            eps.trivial_type()
                ? rational_to_count(pow2(m - k - 1) * Rational(rho.d_rho), "d0+-")
                : 0;
        t.d0_pm = {h, h};
    }
    return t;
}

SpectrumTable dirac_spectrum(const BieberbachGroup& g, const SpinStructure& eps,
                             const HolonomyCharacter& rho, long long max4, bool parallel) {
    if (g.holonomy_type() == HolonomyType::Trivial) return torus_spectrum(g, eps, rho, max4);
    return z2k_spectrum(g, eps, rho, max4, parallel);
}

std::pair<long long, long long> general_multiplicity(const BieberbachGroup& g,
                                                     const SpinStructure& eps,
                                                     const HolonomyCharacter& rho, long long key4,
                                                     const SigmaProvider& sigma_in) {
    int n = g.dim();
    for (const auto& c : g.cosets())
        if (!c.mat.is_identity() && c.mat.order() != 2)
            throw Error("general_multiplicity supports holonomy elements of order <= 2");
    SigmaProvider sigma = sigma_in;
    GaussianRational accp, accm;
    for (int ci = 0; ci < g.order(); ++ci) {
        const Coset& c = g.cosets()[ci];
        if (rho.values[ci].is_zero()) continue;
        int h = c.mat.minus_one_count() / 2;
        if (2 * h != c.mat.minus_one_count()) throw Error("odd count of -1 eigenvalues");
        GaussianRational chr{rho.values[ci]};
        if (n % 2 == 0) {
            // x_gamma = g_h in Spin(n-1), n-1 odd: full character
            GaussianRational chi = spin_character_exact(g_h_angles(n - 1, h), CharKind::Full);
            if (chi.is_zero()) continue;
            ShellCount e = count_shifted_shell(g, eps.delta, c, key4);
            if (!e.exact) throw Error("inexact phases in exact multiplicity path");
            accp += chr * e.e_sum * chi;
            accm += chr * e.e_sum * chi;
        } else {
            bool in_f1 = !c.mat.is_identity() && c.mat.fixed_dim() == 1;
            if (!in_f1) {
                GaussianRational chip = spin_character_exact(g_h_angles(n - 1, h), CharKind::Plus);
                GaussianRational chim = spin_character_exact(g_h_angles(n - 1, h), CharKind::Minus);
                ShellCount e = count_shifted_shell(g, eps.delta, c, key4);
                if (!e.exact) throw Error("inexact phases in exact multiplicity path");
                accp += chr * e.e_sum * chip;
                accm += chr * e.e_sum * chim;
            } else {
                if (!sigma) sigma = oracle_sigma_provider(n);
                TorusAngles xg = g_h_angles(n - 1, n / 2);
                GaussianRational chip = spin_character_exact(xg, CharKind::Plus);
                GaussianRational chim = spin_character_exact(xg, CharKind::Minus);
                CliffordElement lift = spin_on_coset(g, eps, c);
                GaussianRational sp, sm;
                for_each_fixed_shell_vector(
                    g, eps.delta, c, key4, [&](const std::vector<Rational>& u) {
                        Rational ub(0);
                        for (int i = 0; i < n; ++i) ub += u[i] * c.b[i];
                        GaussianRational ph = quarter_phase(ub);
                        int s = sigma(u, xg, lift);
                        sp += ph * (s == 1 ? chip : chim);
                        sm += ph * (s == 1 ? chim : chip);
                    });
                accp += chr * sp;
                accm += chr * sm;
            }
        }
    }
    Rational inv_f(1, g.order());
    return {gaussian_to_count(accp, inv_f, "d+"), gaussian_to_count(accm, inv_f, "d-")};
}

long long harmonic_spinors(const BieberbachGroup& g, const SpinStructure& eps,
                           const HolonomyCharacter& rho) {
    if (!eps.trivial_type()) return 0;
    if (g.holonomy_type() != HolonomyType::Trivial && g.holonomy_type() != HolonomyType::Z2k)
        throw Error("harmonic_spinors: unsupported holonomy type");
    int n = g.dim();
    int m = n / 2;
    // chi_L(eps(gamma)) vanishes on every coset with an eigenvalue -1 pair,
    // so only the identity contributes: 2^m d_rho / |F|
    Rational v = pow2(m) * Rational(rho.d_rho) * Rational(1, g.order());
    return rational_to_count(v, "harmonic spinor count");
}

std::map<long long, long long> spinor_laplacian_spectrum(const BieberbachGroup& g,
                                                         const SpinStructure& eps,
                                                         const HolonomyCharacter& rho,
                                                         long long max4, bool parallel) {
    SpectrumTable t = dirac_spectrum(g, eps, rho, max4, parallel);
    std::map<long long, long long> out;
    out[0] = t.d0;
    for (const auto& [k, dm] : t.entries) out[k] = dm.first + dm.second;
    return out;
}

}  // namespace flatdirac
