#include "doctest.h"
#include "flatdirac/families.hpp"
#include "flatdirac/hodge.hpp"

using namespace flatdirac;

TEST_CASE("krawtchouk values") {
    for (int n : {3, 5, 8})
        for (int x = 0; x <= n; ++x) CHECK(krawtchouk(0, n, x) == 1);
    CHECK(krawtchouk(1, 4, 2) == 0);
    // trivial zeros: n even, x = n/2, p odd
    for (int n : {4, 6, 8, 10, 12})
        for (int p = 1; p <= n; p += 2) CHECK(krawtchouk(p, n, n / 2) == 0);
    CHECK_THROWS_AS(krawtchouk(3, 2, 0), Error);
    CHECK_THROWS_AS(krawtchouk(1, 2, 5), Error);
}

TEST_CASE("krawtchouk reciprocity on n <= 12: K_k(j) = 0 iff K_j(k) = 0") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            for (int j = 0; j <= n; ++j)
                CHECK((krawtchouk(k, n, j) == 0) == (krawtchouk(j, n, k) == 0));
}

TEST_CASE("exterior trace: involution shortcut equals the symmetric-polynomial path") {
    // J-block matrices have eigenvalues +-1, so both paths must agree
    for (auto [n, j, h] : std::vector<std::array<int, 3>>{{4, 1, 1}, {5, 2, 0}, {6, 1, 3}}) {
        BieberbachGroup g = mjh_group(n, j, h);
        const SignedPermMatrix& b = g.cosets()[1].mat;
        for (int p = 0; p <= n; ++p) {
            long long kr = krawtchouk(p, n, b.minus_one_count());
            CHECK(exterior_trace(b, p) == kr);
        }
    }
    // order-4 element: general path (char poly) against hand values
    SignedPermMatrix r = SignedPermMatrix::identity(2);
    r.perm = {1, 0};
    r.signs = {1, -1};  // rotation by pi/2, eigenvalues +-i
    CHECK(exterior_trace(r, 0) == 1);
    CHECK(exterior_trace(r, 1) == 0);   // i + (-i)
    CHECK(exterior_trace(r, 2) == 1);   // det
}

TEST_CASE("function spectra of Gamma_{j,h} match (d1)/(d2)") {
    for (int n = 3; n <= 8; ++n) {
        for (const auto& mem : z2_family(n)) {
            auto spec = pform_spectrum(mem.group, 0, 8);
            int l = mem.l, j = mem.j;
            CHECK(spec[4] == n + l - 2);
            CHECK(spec[8] == n * (n - 1) + j + (l - 1) * (l - 4));
        }
    }
}

TEST_CASE("general p-form formula: (1/2)(C(n,p) |shell| + K_p e)") {
    BieberbachGroup g = mjh_group(6, 1, 2);
    LatticeCharacter triv(6, 1);
    for (int p = 0; p <= 6; ++p) {
        auto spec = pform_spectrum(g, p, 8);
        for (long long key : {4LL, 8LL}) {
            long long shell = count_shifted_shell(g, triv, g.cosets()[0], key).count;
            auto e = count_shifted_shell(g, triv, g.cosets()[1], key);
            long long kp = krawtchouk(p, 6, 3);
            long long binom = exterior_trace(SignedPermMatrix::identity(6), p);
            CHECK(spec[key] == (binom * shell + kp * e.e_sum.re.num()) / 2);
        }
    }
}

TEST_CASE("betti numbers") {
    // beta_0 = 1 for all registry groups; Poincare duality for orientable;
    // Euler characteristic zero
    for (const char* name : {"torus:4", "remark3.5", "table2:m1", "table2:m2t", "hw:3:classic",
                             "hw:5:a", "dhw:3:classic", "mjh:6:1:3"}) {
        BieberbachGroup g = registry_group(name);
        int n = g.dim();
        CHECK(betti(g, 0) == 1);
        long long chi = 0;
        for (int p = 0; p <= n; ++p) {
            long long bp = betti(g, p);
            chi += (p % 2 == 0) ? bp : -bp;
            if (g.orientable()) CHECK(bp == betti(g, n - p));
        }
        CHECK(chi == 0);
    }
    // M_{0,2} in n = 3: beta_1 = 1
    CHECK(betti(mjh_group(3, 0, 2), 1) == 1);
    // HW manifolds are rational homology spheres
    for (const char* name : {"hw:3:classic", "hw:5:a", "hw:7:a", "hw:7:b"}) {
        BieberbachGroup g = registry_group(name);
        for (int p = 1; p < g.dim(); ++p) CHECK(betti(g, p) == 0);
    }
}

TEST_CASE("M_{j,h} Betti closed form: sum_i C(j+h, 2i) C(j+l, p-2i)") {
    auto binom = [](long long n, long long k) {
        if (k < 0 || k > n) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int n = 3; n <= 7; ++n)
        for (const auto& mem : z2_family(n))
            for (int p = 1; p <= n; ++p) {
                long long want = 0;
                for (int i = 0; 2 * i <= p; ++i)
                    want += binom(mem.j + mem.h, 2 * i) * binom(mem.j + mem.l, p - 2 * i);
                CHECK(betti(mem.group, p) == want);
            }
}

TEST_CASE("p-form spectrum at mu = 0 equals beta_p") {
    for (const char* name : {"remark3.5", "table2:m1", "mjh:5:1:2"}) {
        BieberbachGroup g = registry_group(name);
        for (int p = 0; p <= g.dim(); ++p) CHECK(pform_spectrum(g, p, 4)[0] == betti(g, p));
    }
}

TEST_CASE("odd-p isospectrality of the subfamily j+h = n/2") {
    for (int n : {4, 8}) {
        std::vector<BieberbachGroup> fam;
        for (const auto& mem : z2_family(n))
            if (mem.j + mem.h == n / 2) fam.push_back(mem.group);
        REQUIRE(fam.size() >= 2);
        for (int p = 1; p <= n; p += 2) {
            auto ref = pform_spectrum(fam[0], p, 100);
            for (size_t i = 1; i < fam.size(); ++i) CHECK(pform_spectrum(fam[i], p, 100) == ref);
        }
    }
}
