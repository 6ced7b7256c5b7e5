#include "flatdirac/spin_structure.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace flatdirac {

bool SpinStructure::trivial_type() const {
    for (int d : delta)
        if (d < 0) return false;
    return true;
}

int SpinStructure::j_minus() const {
    int c = 0;
    for (int d : delta)
        if (d < 0) ++c;
    return c;
}

std::vector<Rational> SpinStructure::u_eps() const {
    std::vector<Rational> u(delta.size(), Rational(0));
    for (size_t i = 0; i < delta.size(); ++i)
        if (delta[i] < 0) u[i] = Rational(1, 2);
    return u;
}

StructureProps structure_props(const SpinStructure& eps) {
    return {eps.trivial_type(), eps.j_minus(), eps.u_eps()};
}

namespace {

/// scalar value of an element known to be +-1
int pm_scalar(const CliffordElement& e) {
    if (!e.is_scalar()) throw Error("expected scalar Clifford element");
    QSqrt2 s = e.scalar_part();
    if (s == QSqrt2(Rational(1))) return 1;
    if (s == QSqrt2(Rational(-1))) return -1;
    throw Error("expected +-1 scalar, got " + s.str());
}

std::vector<LatticeCharacter> delta_candidates(const BieberbachGroup& g) {
    int n = g.dim();
    // adjacent-in-cycle coordinate pairs of the generators force equal signs
    std::vector<std::pair<int, int>> ties;
    for (const auto& gen : g.generators())
        for (const auto& cyc : gen.mat.cycles())
            for (size_t r = 1; r < cyc.idx.size(); ++r)
                ties.emplace_back(cyc.idx[0], cyc.idx[r]);
    std::vector<LatticeCharacter> out;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& [i, j] : ties)
            if (((mask >> i) ^ (mask >> j)) & 1u) {
                ok = false;
                break;
            }
        if (!ok) continue;
        LatticeCharacter d(n, 1);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) d[i] = -1;
        out.push_back(std::move(d));
    }
    return out;
}

/// parity mask of an integral vector (bit i set when the i-th entry is odd)
uint32_t parity_mask(const std::vector<Rational>& lam) {
    uint32_t m = 0;
    for (size_t i = 0; i < lam.size(); ++i) {
        if (!lam[i].is_integer()) throw Error("character evaluated off the lattice");
        if (lam[i].num() % 2 != 0) m |= 1u << i;
    }
    return m;
}

uint32_t minus_mask(const LatticeCharacter& d) {
    uint32_t m = 0;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] < 0) m |= 1u << i;
    return m;
}

int delta_on_mask(uint32_t dmask, uint32_t lmask) {
    return (std::popcount(dmask & lmask) & 1) ? -1 : 1;
}

}  // namespace

std::vector<SpinStructure> enumerate_spin_structures(const BieberbachGroup& g) {
    if (!g.orientable()) return {};
    int n = g.dim();
    int k = (int)g.generators().size();
    std::vector<SpinStructure> out;

    if (g.holonomy_type() == HolonomyType::Trivial) {
        for (const auto& d : delta_candidates(g)) out.push_back({d, {}});
        return out;
    }

    std::vector<CliffordElement> lifts;
    for (const auto& gen : g.generators()) lifts.push_back(lift_orthogonal(gen.mat));

    if (g.holonomy_type() == HolonomyType::Z2k) {
        // epsilon with sigma = 1 on every coset representative, precomputed once
        std::vector<CliffordElement> eps1(g.order(), CliffordElement::one(n));
        for (int ci = 0; ci < g.order(); ++ci)
            for (int gi : g.cosets()[ci].word) eps1[ci] = eps1[ci] * lifts[gi];

        // generator relations: squares and pairwise commutators
        std::vector<std::pair<uint32_t, int>> relations;  // (lattice parity, lift sign)
        for (int i = 0; i < k; ++i) {
            AffineGen gi{g.generators()[i].mat, g.generators()[i].b};
            AffineGen p = affine_mul(gi, gi);
            if (!p.mat.is_identity()) throw Error("Z_2^k generator has order > 2");
            relations.emplace_back(parity_mask(p.b), pm_scalar(lifts[i] * lifts[i]));
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                AffineGen gi{g.generators()[i].mat, g.generators()[i].b};
                AffineGen gj{g.generators()[j].mat, g.generators()[j].b};
                AffineGen ij = affine_mul(gi, gj);
                AffineGen ji = affine_mul(gj, gi);
                if (!(ij.mat == ji.mat)) throw Error("non-commuting Z_2^k generators");
                std::vector<Rational> lam(n);
                for (int r = 0; r < n; ++r) lam[r] = ij.b[r] - ji.b[r];
                CliffordElement uij = lifts[i] * lifts[j];
                CliffordElement uji = lifts[j] * lifts[i];
                int sgn;
                if (uij == uji)
                    sgn = 1;
                else if (uij == -uji)
                    sgn = -1;
                else
                    throw Error("lifts do not commute up to sign");
                relations.emplace_back(parity_mask(lam), sgn);
            }
        // full multiplication table, reduced to (lattice parity, lift sign)
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) {
                const Coset& ca = g.cosets()[a];
                const Coset& cb = g.cosets()[b];
                AffineGen prod = affine_mul({ca.mat, ca.b}, {cb.mat, cb.b});
                int ci = g.coset_index(prod.mat);
                const Coset& cc = g.cosets()[ci];
                std::vector<Rational> lam(n);
                for (int r = 0; r < n; ++r) lam[r] = prod.b[r] - cc.b[r];
                CliffordElement lhs = eps1[a] * eps1[b];
                int sgn;
                if (lhs == eps1[ci])
                    sgn = 1;
                else if (lhs == -eps1[ci])
                    sgn = -1;
                else
                    throw Error("coset products do not close up to sign");
                relations.emplace_back(parity_mask(lam), sgn);
            }

        for (const auto& d : delta_candidates(g)) {
            uint32_t dm = minus_mask(d);
            bool ok = true;
            for (const auto& [lmask, sgn] : relations)
                if (delta_on_mask(dm, lmask) != sgn) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (uint32_t smask = 0; smask < (1u << k); ++smask) {
                std::vector<int> sigma(k, 1);
                for (int i = 0; i < k; ++i)
                    if (smask & (1u << i)) sigma[i] = -1;
                out.push_back({d, sigma});
            }
        }
        return out;
    }

    if (g.holonomy_type() == HolonomyType::CyclicOdd) {
        if (k != 1) throw Error("cyclic holonomy expects a single generator");
        int q = g.order();
        AffineGen gpow{SignedPermMatrix::identity(n), std::vector<Rational>(n, Rational(0))};
        for (int i = 0; i < q; ++i)
            gpow = affine_mul({g.generators()[0].mat, g.generators()[0].b}, gpow);
        if (!gpow.mat.is_identity()) throw Error("generator order does not match |F|");
        int usign = pm_scalar(lifts[0].pow(q));  // condition (eps_1'): eps(gamma^q) = u_B^q
        for (const auto& d : delta_candidates(g)) {
            int need = character_on(d, gpow.b);
            // odd order: sigma^q = sigma, so sigma is determined
            int sigma = need * usign;
            out.push_back({d, {sigma}});
        }
        return out;
    }

    throw Error("spin structure enumeration: unsupported holonomy type");
}

CliffordElement spin_on_coset(const BieberbachGroup& g, const SpinStructure& eps, const Coset& c) {
    int n = g.dim();
    CliffordElement e = CliffordElement::one(n);
    for (int gi : c.word) {
        CliffordElement u = lift_orthogonal(g.generators()[gi].mat);
        if (eps.sigma[gi] == -1) u = -u;
        e = e * u;
    }
    return e;
}

bool recheck_homomorphism(const BieberbachGroup& g, const SpinStructure& eps, int trials,
                          unsigned seed) {
    // random words w = g_{i1} ... g_{im} L_lambda; check
    // eps(word) == prod eps(g_i) * delta(lambda) against the coset evaluation
    std::mt19937 rng(seed);
    int n = g.dim();
    int k = (int)g.generators().size();
    if (k == 0) return true;
    std::uniform_int_distribution<int> pick(0, k - 1), len(1, 6), coord(-2, 2);
    for (int t = 0; t < trials; ++t) {
        AffineGen w{SignedPermMatrix::identity(n), std::vector<Rational>(n, Rational(0))};
        CliffordElement lift = CliffordElement::one(n);
        int m = len(rng);
        for (int s = 0; s < m; ++s) {
            int gi = pick(rng);
            w = affine_mul(w, {g.generators()[gi].mat, g.generators()[gi].b});
            CliffordElement u = lift_orthogonal(g.generators()[gi].mat);
            if (eps.sigma[gi] == -1) u = -u;
            lift = lift * u;
        }
        std::vector<Rational> lam(n);
        for (int i = 0; i < n; ++i) lam[i] = Rational(coord(rng));
        w = affine_mul(w, {SignedPermMatrix::identity(n), lam});
        lift = character_on(eps.delta, lam) == 1 ? lift : -lift;
        // compare against coset-rep evaluation: w = rep * L_mu
        int ci = g.coset_index(w.mat);
        if (ci < 0) return false;
        const Coset& rep = g.cosets()[ci];
        std::vector<Rational> mu = rep.mat.inverse().apply([&] {
            std::vector<Rational> d(n);
            for (int i = 0; i < n; ++i) d[i] = w.b[i] - rep.b[i];
            return d;
        }());
        CliffordElement expect = spin_on_coset(g, eps, rep);
        if (character_on(eps.delta, mu) == -1) expect = -expect;
        if (!(lift == expect)) return false;
        // and mu compose eps = r
        MuImage img = mu_project(lift);
        if (!img.is_signed_perm || !(img.sp == w.mat)) return false;
    }
    return true;
}

}  // namespace flatdirac
