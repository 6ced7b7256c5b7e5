#include "doctest.h"
#include "flatdirac/families.hpp"
#include "flatdirac/isospec.hpp"

using namespace flatdirac;

TEST_CASE("torus lengths: lattice norms with F-orbit classes") {
    BieberbachGroup t = BieberbachGroup::build(2, {});
    auto weak = weak_length_spectrum(t, Rational(8));
    CHECK(weak == std::set<Rational>{Rational(1), Rational(2), Rational(4), Rational(5),
                                     Rational(8)});
    auto marked = marked_length_spectrum(t, Rational(4));
    // torus: classes are single lattice vectors
    CHECK(marked.at(Rational(1)) == 4);
    CHECK(marked.at(Rational(2)) == 4);
    CHECK(marked.at(Rational(4)) == 4);
}

TEST_CASE("weak spectrum invariant under lattice conjugation") {
    for (const char* name : {"remark3.5", "table2:m2", "mjh:5:1:2"}) {
        BieberbachGroup g = registry_group(name);
        std::vector<Rational> c(g.dim(), Rational(0));
        c[0] = Rational(1, 2);
        c[g.dim() - 1] = Rational(1, 4);
        BieberbachGroup conj = g.conjugate_by_translation(c);
        CHECK(weak_length_spectrum(g, Rational(16)) == weak_length_spectrum(conj, Rational(16)));
        CHECK(marked_length_spectrum(g, Rational(12)) ==
              marked_length_spectrum(conj, Rational(12)));
    }
}

TEST_CASE("table 2 pairs: M_1 pair marked-equal, M_2 pair weak-equal marked-unequal") {
    Rational cap(25);
    BieberbachGroup m1 = registry_group("table2:m1"), m1p = registry_group("table2:m1p");
    CHECK(weak_length_spectrum(m1, cap) == weak_length_spectrum(m1p, cap));
    CHECK(marked_length_spectrum(m1, cap) == marked_length_spectrum(m1p, cap));
    BieberbachGroup m2 = registry_group("table2:m2"), m2p = registry_group("table2:m2p");
    CHECK(weak_length_spectrum(m2, cap) == weak_length_spectrum(m2p, cap));
    CHECK(marked_length_spectrum(m2, cap) != marked_length_spectrum(m2p, cap));
    // serial == parallel
    CHECK(marked_length_spectrum(m2, cap, false) == marked_length_spectrum(m2, cap, true));
}

TEST_CASE("compare_spectra: torus criterion |J^-| for Dirac isospectrality") {
    BieberbachGroup t = BieberbachGroup::build(4, {});
    auto rho = HolonomyCharacter::trivial(t);
    auto structs = enumerate_spin_structures(t);
    for (const auto& ea : structs)
        for (const auto& eb : structs) {
            SpinSetting a{&t, ea, rho}, b{&t, eb, rho};
            auto v = compare_spectra(a, b, {"dirac"}, 100);
            CHECK(v[0].equal == (ea.j_minus() == eb.j_minus()));
        }
}

TEST_CASE("example 4.5 (i): Dirac verdict depends on the structures") {
    BieberbachGroup a = registry_group("table2:m1"), b = registry_group("table2:m1p");
    auto rho = HolonomyCharacter::trivial(a);
    auto pick = [](const BieberbachGroup& g, const LatticeCharacter& d) {
        for (const auto& e : enumerate_spin_structures(g))
            if (e.delta == d) return e;
        throw Error("structure not found");
    };
    SpinSetting ya{&a, pick(a, {-1, -1, -1, -1}), rho};
    SpinSetting yb{&b, pick(b, {-1, -1, -1, -1}), rho};
    CHECK(compare_spectra(ya, yb, {"dirac"}, 100)[0].equal);
    SpinSetting na{&a, pick(a, {1, -1, 1, -1}), rho};
    for (const auto& eb : enumerate_spin_structures(b)) {
        SpinSetting nb{&b, eb, rho};
        CHECK(!compare_spectra(na, nb, {"dirac"}, 100)[0].equal);  // |J^-| = 2 vs >= 3
    }
}

TEST_CASE("dirac isospectral implies spinor-laplacian isospectral on tested pairs") {
    BieberbachGroup a = registry_group("table2:m2t"), b = registry_group("table2:m2tp");
    auto rho = HolonomyCharacter::trivial(a);
    auto sa = enumerate_spin_structures(a);
    auto sb = enumerate_spin_structures(b);
    for (size_t i = 0; i < sa.size(); i += 7)
        for (size_t j = 0; j < sb.size(); j += 9) {
            SpinSetting x{&a, sa[i], rho}, y{&b, sb[j], rho};
            auto v = compare_spectra(x, y, {"dirac", "spinor_laplacian"}, 60);
            if (v[0].equal) CHECK(v[1].equal);
        }
}

TEST_CASE("table1 report verdicts match the expected pattern") {
    auto rows = table1_report(100, 25);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].label == "4.3 (i)");
    CHECK(rows[0].dirac == "Yes");
    CHECK(rows[0].spinor_laplacian == "Yes");
    CHECK(rows[0].pform.substr(0, 2) == "No");
    CHECK(rows[0].weak_length.substr(0, 2) == "No");
    CHECK(rows[0].marked_length.substr(0, 2) == "No");

    CHECK(rows[1].label == "4.3 (iii)");
    CHECK(rows[1].dirac == "Yes");
    CHECK(rows[1].pform.substr(0, 11) == "Yes (p odd)");
    CHECK(rows[1].weak_length.substr(0, 2) == "No");

    CHECK(rows[2].label == "4.4 (i)");
    CHECK(rows[2].dirac.substr(0, 2) == "No");
    CHECK(rows[2].spinor_laplacian == "Yes");
    CHECK(rows[2].pform.substr(0, 2) == "No");
    CHECK(rows[2].weak_length.substr(0, 2) == "No");

    CHECK(rows[3].label == "4.5 (i)");
    CHECK(rows[3].dirac == "Yes/No");
    CHECK(rows[3].spinor_laplacian == "Yes/No");
    CHECK(rows[3].pform == "Yes (all p)");
    CHECK(rows[3].marked_length == "Yes");
    CHECK(rows[3].weak_length == "Yes");

    CHECK(rows[4].label == "4.5 (ii)");
    CHECK(rows[4].dirac == "Yes/No");
    CHECK(rows[4].pform == "Yes (all p)");
    CHECK(rows[4].marked_length.substr(0, 2) == "No");
    CHECK(rows[4].weak_length == "Yes");
}
