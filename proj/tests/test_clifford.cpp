#include <random>

#include "doctest.h"
#include "flatdirac/clifford.hpp"

using namespace flatdirac;

namespace {

CliffordElement e(int n, std::initializer_list<int> idx) {
    CliffordElement out = CliffordElement::one(n);
    for (int i : idx) out = out * CliffordElement::basis_vector(n, i);
    return out;
}

CliffordElement random_sparse(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), coef(-3, 3);
    std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
    CliffordElement out(n);
    for (int t = 0; t < nterms(rng); ++t)
        out.add_term(mask(rng), QSqrt2(Rational(coef(rng)), Rational(coef(rng), 2)));
    return out;
}

SignedPermMatrix random_signed_perm(int n, std::mt19937& rng, bool det_plus) {
    SignedPermMatrix m = SignedPermMatrix::identity(n);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(m.perm[i], m.perm[pick(rng)]);
    }
    std::uniform_int_distribution<int> s(0, 1);
    for (int i = 0; i < n; ++i) m.signs[i] = s(rng) ? 1 : -1;
    if (det_plus && m.det() != 1) m.signs[0] = -m.signs[0];
    return m;
}

}  // namespace

TEST_CASE("generator relations") {
    // e_i^2 = -1, e_i e_j = -e_j e_i
    int n = 5;
    for (int i = 0; i < n; ++i)
        CHECK(e(n, {i, i}) == -CliffordElement::one(n));
    CHECK(e(n, {0, 1}) == -e(n, {1, 0}));
    // 1 * x = x
    std::mt19937 rng(7);
    auto x = random_sparse(n, rng);
    CHECK((CliffordElement::one(n) * x) == x);
    // (e1 e2)(e2 e3) = -e1 e3
    CHECK((e(4, {0, 1}) * e(4, {1, 2})) == -e(4, {0, 2}));
    CHECK_THROWS_AS(CliffordElement::one(3) * CliffordElement::one(4), Error);
}

TEST_CASE("product is associative, distributive; reverse anti-multiplicative") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + (int)(rng() % 7);  // n <= 8
        auto a = random_sparse(n, rng), b = random_sparse(n, rng), c = random_sparse(n, rng);
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a * b).reverse() == (b.reverse() * a.reverse()));
    }
}

TEST_CASE("mu is a homomorphism with kernel {+-1}") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + (int)(rng() % 5);
        auto a = lift_orthogonal(random_signed_perm(n, rng, true));
        auto b = lift_orthogonal(random_signed_perm(n, rng, true));
        MuImage ia = mu_project(a), ib = mu_project(b), iab = mu_project(a * b);
        REQUIRE(ia.is_signed_perm);
        REQUIRE(iab.is_signed_perm);
        CHECK(iab.sp == ia.sp.compose(ib.sp));
        CHECK(mu_project(-a).sp == ia.sp);
    }
    CHECK(mu_project(CliffordElement::one(4)).sp.is_identity());
    // mu(e1 e2) = diag(-1,-1,1,...)
    auto img = mu_project(e(5, {0, 1}));
    REQUIRE(img.is_signed_perm);
    CHECK(img.sp.signs == std::vector<int>{-1, -1, 1, 1, 1});
    CHECK(img.sp.is_diagonal());
    CHECK_THROWS_AS(mu_project(CliffordElement::basis_vector(3, 0)), Error);
}

TEST_CASE("lift round trip on signed permutations") {
    // exhaustive n <= 3, randomized up to n = 10
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        do {
            for (uint32_t mask = 0; mask < (1u << n); ++mask) {
                SignedPermMatrix m;
                m.n = n;
                m.perm = perm;
                m.signs.assign(n, 1);
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) m.signs[i] = -1;
                if (m.det() != 1) {
                    CHECK_THROWS_AS(lift_orthogonal(m), Error);
                    continue;
                }
                CliffordElement u = lift_orthogonal(m);
                CHECK(u.is_spin());
                MuImage img = mu_project(u);
                REQUIRE(img.is_signed_perm);
                CHECK(img.sp == m);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 4 + (int)(rng() % 7);  // up to 10
        SignedPermMatrix m = random_signed_perm(n, rng, true);
        MuImage img = mu_project(lift_orthogonal(m));
        REQUIRE(img.is_signed_perm);
        CHECK(img.sp == m);
    }
}

TEST_CASE("distinguished diagonal lifts are the g_h") {
    // B = diag(-1,-1,1,...) lifts to e1 e2
    SignedPermMatrix m = SignedPermMatrix::identity(5);
    m.signs[0] = m.signs[1] = -1;
    CHECK(lift_orthogonal(m) == e(5, {0, 1}));
    CHECK(lift_orthogonal(SignedPermMatrix::identity(4)) == CliffordElement::one(4));
    // signed swap on 1,2 with diag(-1,-1) on 3,4 (det +1): even lift,
    // mu round-trips; the plain swap variant has det -1 and is rejected
    SignedPermMatrix j = SignedPermMatrix::identity(4);
    j.perm = {1, 0, 2, 3};
    j.signs = {1, -1, -1, -1};
    CliffordElement u = lift_orthogonal(j);
    CHECK(u.is_even());
    CHECK(mu_project(u).sp == j);
    SignedPermMatrix swp = SignedPermMatrix::identity(4);
    swp.perm = {1, 0, 2, 3};
    swp.signs = {1, 1, -1, -1};
    CHECK(swp.det() == -1);
    CHECK_THROWS_AS(lift_orthogonal(swp), Error);
}

TEST_CASE("spin characters on torus elements") {
    // identity: full character = 2^m
    CHECK(spin_character(TorusAngles(6, {Rational(0), Rational(0), Rational(0)}), CharKind::Full)
              .real() == doctest::Approx(8));
    // x = g_m at n = 2m: chi_{L+-}(g_m) = +- 2^{m-1} i^m
    for (int m : {1, 2, 3}) {
        int n = 2 * m;
        TorusAngles gm = g_h_angles(n, m);
        auto plus = spin_character(gm, CharKind::Plus);
        std::complex<double> want = std::ldexp(1.0, m - 1) * std::pow(std::complex<double>(0, 1), m);
        CHECK(std::abs(plus - want) < 1e-12);
        CHECK(std::abs(spin_character(gm, CharKind::Minus) + want) < 1e-12);
        GaussianRational pe = spin_character_exact(gm, CharKind::Plus);
        CHECK(std::abs(std::complex<double>(pe.re.to_double(), pe.im.to_double()) - want) < 1e-12);
    }
    // g_h with h < m has vanishing full character
    for (int n : {4, 5, 6, 7})
        for (int h = 1; h < n / 2; ++h)
            CHECK(spin_character(g_h_angles(n, h), CharKind::Full).real() == doctest::Approx(0));
    // full = plus + minus for n even
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ang(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> t;
        int m = 1 + (int)(rng() % 3);
        for (int i = 0; i < m; ++i) t.push_back(Rational((int)(rng() % 97) - 48, 24));
        TorusAngles x(2 * m, t, (rng() % 2) ? 1 : -1);
        auto f = spin_character(x, CharKind::Full);
        auto p = spin_character(x, CharKind::Plus);
        auto q = spin_character(x, CharKind::Minus);
        CHECK(std::abs(f - p - q) < 1e-10);
    }
}

TEST_CASE("conjugacy sign content: t_1 -> -t_1 swaps half-spin characters") {
    // for n = 2m+1 and generic angles, the half-spin characters of
    // Spin(n-1) distinguish x(t_1,...) from x(-t_1,...); with some t_j in
    // pi Z they agree
    std::vector<Rational> t{Rational(1, 3), Rational(2, 5)};
    TorusAngles x(4, t);
    std::vector<Rational> tneg{-Rational(1, 3), Rational(2, 5)};
    TorusAngles xneg(4, tneg);
    CHECK(std::abs(spin_character(x, CharKind::Plus) - spin_character(xneg, CharKind::Minus)) <
          1e-12);
    CHECK(std::abs(spin_character(x, CharKind::Plus) - spin_character(xneg, CharKind::Plus)) >
          1e-3);
    std::vector<Rational> tz{Rational(1), Rational(2, 5)};  // t_1 = pi
    TorusAngles z(4, tz), zneg(4, {-Rational(1), Rational(2, 5)});
    CHECK(std::abs(spin_character(z, CharKind::Plus) - spin_character(zneg, CharKind::Plus)) <
          1e-12);
}

TEST_CASE("torus angle reduction mod 2 pi") {
    TorusAngles x(4, {Rational(9, 4), Rational(-1, 4)});
    CHECK(x.t_over_pi[0] == Rational(1, 4));
    CHECK(x.t_over_pi[1] == Rational(7, 4));
    CHECK_THROWS_AS(TorusAngles(4, {Rational(1)}), Error);
}

TEST_CASE("mu image outside the signed permutations comes back as a dense matrix") {
    // g = ((e1+e2+e3+e4)/2) * e1 is an even unit whose image mixes axes
    int n = 4;
    QSqrt2 half{Rational(1, 2)};
    CliffordElement v(n);
    for (int i = 0; i < n; ++i) v = v + CliffordElement::basis_vector(n, i).scale(half);
    CliffordElement g = v * CliffordElement::basis_vector(n, 0);
    REQUIRE(g.is_spin());
    MuImage img = mu_project(g);
    CHECK(!img.is_signed_perm);
    // columns are exact and orthonormal over Q(sqrt2)
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            QSqrt2 dot;
            for (int i = 0; i < n; ++i) dot += img.dense[i][j] * img.dense[i][k];
            CHECK(dot == QSqrt2(Rational(j == k ? 1 : 0)));
        }
}
