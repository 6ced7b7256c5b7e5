#include <random>

#include "doctest.h"
#include "flatdirac/families.hpp"
#include "flatdirac/dirac.hpp"
#include "flatdirac/spin_oracle.hpp"

using namespace flatdirac;

namespace {

TorusAngles random_angles(int n, std::mt19937& rng, bool generic) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::vector<Rational> t;
    for (int i = 0; i < n / 2; ++i) {
        Rational q(num(rng), 41);  // denominator 41: never lands in pi Z
        if (!generic) q = Rational(num(rng), 2);
        t.push_back(q);
    }
    return TorusAngles(n, t, rng() % 2 ? 1 : -1);
}

}  // namespace

TEST_CASE("build_spin_rep verifies relations for 2 <= n <= 8") {
    for (int n = 2; n <= 8; ++n) {
        SpinRep rep = build_spin_rep(n);
        CHECK(rep.space_dim() == (1 << (n / 2)));
    }
    CHECK_THROWS_AS(build_spin_rep(9), Error);
}

TEST_CASE("matrix traces match the character formulas on random angles") {
    std::mt19937 rng(2024);
    for (int n = 2; n <= 8; ++n) {
        SpinRep rep(n);
        for (int trial = 0; trial < 25; ++trial) {
            TorusAngles x = random_angles(n, rng, true);
            CMat mx = rep.torus_element(x);
            cplx tr = mx.trace();
            CHECK(std::abs(tr - spin_character(x, CharKind::Full)) < 1e-10);
            if (n % 2 == 0) {
                cplx tp = mx.mul(rep.half_spin_projector(+1)).trace();
                cplx tm = mx.mul(rep.half_spin_projector(-1)).trace();
                CHECK(std::abs(tp - spin_character(x, CharKind::Plus)) < 1e-10);
                CHECK(std::abs(tm - spin_character(x, CharKind::Minus)) < 1e-10);
            }
        }
    }
}

TEST_CASE("g_m traces: +-2^{m-1} i^m on the half-spin spaces") {
    for (int m : {1, 2, 3}) {
        int n = 2 * m;
        SpinRep rep(n);
        CMat gm = rep.torus_element(g_h_angles(n, m));
        cplx want = std::ldexp(1.0, m - 1) * std::pow(cplx(0, 1), m);
        CHECK(std::abs(gm.mul(rep.half_spin_projector(+1)).trace() - want) < 1e-12);
        CHECK(std::abs(gm.mul(rep.half_spin_projector(-1)).trace() + want) < 1e-12);
        for (int h = 1; h < m; ++h)
            CHECK(std::abs(rep.torus_element(g_h_angles(n, h)).trace()) < 1e-12);
    }
}

TEST_CASE("conjugacy dichotomy: restricted traces land on a half-spin character") {
    std::mt19937 rng(7);
    for (int n : {3, 5, 7}) {
        SpinRep rep(n);
        for (int trial = 0; trial < 30; ++trial) {
            TorusAngles x = random_angles(n - 1, rng, true);
            CMat mx = rep.torus_element(TorusAngles(n, x.t_over_pi, x.sign));
            std::vector<Rational> u(n, Rational(0));
            u[n - 1] = Rational(1);
            cplx tr = mx.mul(rep.su_projector(u, +1)).trace();
            cplx cp = spin_character(x, CharKind::Plus);
            cplx cm = spin_character(x, CharKind::Minus);
            bool on_plus = std::abs(tr - cp) < 1e-9;
            bool on_minus = std::abs(tr - cm) < 1e-9;
            CHECK((on_plus || on_minus));
        }
    }
}

TEST_CASE("sigma sign: antisymmetry, scale invariance, degenerate convention") {
    std::mt19937 rng(13);
    int done = 0;
    for (int trial = 0; done < 50 && trial < 500; ++trial) {
        int n = (trial % 2 == 0) ? 3 : 7;
        SpinRep rep(n);
        TorusAngles x = random_angles(n - 1, rng, true);
        cplx cp = spin_character(x, CharKind::Plus), cm = spin_character(x, CharKind::Minus);
        if (std::abs(cp - cm) < 1e-6) continue;  // need distinguishable characters
        CMat mx = rep.torus_element(TorusAngles(n, x.t_over_pi, x.sign));
        auto sgn = [&](const std::vector<Rational>& v) {
            cplx tr = mx.mul(rep.su_projector(v, +1)).trace();
            if (std::abs(tr - cp) < 1e-9) return 1;
            if (std::abs(tr - cm) < 1e-9) return -1;
            throw Error("restricted trace off both characters");
        };
        std::vector<Rational> u(n, Rational(0)), au(n, Rational(0)), nu(n, Rational(0));
        u[n - 1] = Rational(1);
        au[n - 1] = Rational(3, 2);
        nu[n - 1] = Rational(-1);
        CHECK(sgn(au) == sgn(u));   // sigma(alpha u) = sigma(u), alpha > 0
        CHECK(sgn(nu) == -sgn(u));  // sigma(-u) = -sigma(u)
        ++done;
    }
    CHECK(done == 50);

    // equal half-spin characters (the n_B > 1 situation): +1 by convention
    SpinRep rep5(5);
    TorusAngles deg(4, {Rational(1, 3), Rational(0)});  // sin product vanishes
    std::vector<Rational> u5(5, Rational(0));
    u5[4] = Rational(1);
    CHECK(sigma_sign(rep5, u5, deg, CliffordElement::one(5)) == 1);
}

TEST_CASE("oracle multiplicities: torus shells match the closed form") {
    BieberbachGroup t3 = BieberbachGroup::build(3, {});
    auto rho = HolonomyCharacter::trivial(t3);
    for (const auto& eps : enumerate_spin_structures(t3)) {
        for (long long key : {1LL, 2LL, 3LL, 4LL, 8LL}) {
            auto [dp, dm] = brute_multiplicity(t3, eps, rho.to_complex(), key);
            long long want = count_shifted_shell(t3, eps.delta, t3.cosets()[0], key).count;
            CHECK(dp == want);  // 2^{m-1} d_rho |shell| with m = 1
            CHECK(dm == want);
        }
    }
}

TEST_CASE("oracle resolves the remark 3.5 asymmetry; serial == parallel") {
    BieberbachGroup g = registry_group("remark3.5");
    SpinStructure eps{{1, 1, -1}, {1}};
    auto rho = HolonomyCharacter::trivial(g).to_complex();
    auto [dp, dm] = brute_multiplicity(g, eps, rho, 1);
    CHECK(dp == 2);
    CHECK(dm == 0);
    SpinStructure eps_m{{1, 1, -1}, {-1}};
    auto [dp2, dm2] = brute_multiplicity(g, eps_m, rho, 1);
    CHECK(dp2 == 0);
    CHECK(dm2 == 2);
    for (long long key : {1LL, 4LL, 9LL, 12LL})
        CHECK(brute_multiplicity(g, eps, rho, key, true) ==
              brute_multiplicity(g, eps, rho, key, false));
}
