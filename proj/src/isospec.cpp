#include "flatdirac/isospec.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "flatdirac/families.hpp"
#include "flatdirac/hodge.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flatdirac {

namespace {

std::string key_str(long long key4) {
    std::ostringstream os;
    os << "4mu^2=" << key4;
    return os.str();
}

KindVerdict compare_tables(const std::string& kind, const SpectrumTable& ta,
                           const SpectrumTable& tb, long long cap) {
    KindVerdict v{kind, true, cap, ""};
    if (ta.d0 != tb.d0) {
        v.equal = false;
        v.certificate = "d0: " + std::to_string(ta.d0) + " vs " + std::to_string(tb.d0);
        return v;
    }
    for (long long k = 1; k <= cap; ++k) {
        auto ia = ta.entries.find(k), ib = tb.entries.find(k);
        std::pair<long long, long long> da = ia == ta.entries.end() ? std::make_pair(0LL, 0LL) : ia->second;
        std::pair<long long, long long> db = ib == tb.entries.end() ? std::make_pair(0LL, 0LL) : ib->second;
        if (da != db) {
            std::ostringstream os;
            os << key_str(k) << ": (" << da.first << "," << da.second << ") vs (" << db.first
               << "," << db.second << ")";
            v.equal = false;
            v.certificate = os.str();
            return v;
        }
    }
    return v;
}

KindVerdict compare_maps(const std::string& kind, const std::map<long long, long long>& a,
                         const std::map<long long, long long>& b, long long cap) {
    KindVerdict v{kind, true, cap, ""};
    for (long long k = 0; k <= cap; ++k) {
        long long da = a.count(k) ? a.at(k) : 0;
        long long db = b.count(k) ? b.at(k) : 0;
        if (da != db) {
            v.equal = false;
            v.certificate = key_str(k) + ": " + std::to_string(da) + " vs " + std::to_string(db);
            return v;
        }
    }
    return v;
}

}  // namespace

std::vector<KindVerdict> compare_spectra(const SpinSetting& a, const SpinSetting& b,
                                         const std::vector<std::string>& kinds, long long max4,
                                         bool parallel) {
    if (a.g->dim() != b.g->dim()) throw Error("compare_spectra needs equal dimensions");
    std::vector<KindVerdict> out;
    for (const auto& kind : kinds) {
        if (kind == "dirac") {
            SpectrumTable ta = dirac_spectrum(*a.g, a.eps, a.rho, max4, parallel);
            SpectrumTable tb = dirac_spectrum(*b.g, b.eps, b.rho, max4, parallel);
            out.push_back(compare_tables(kind, ta, tb, max4));
        } else if (kind == "spinor_laplacian") {
            auto ma = spinor_laplacian_spectrum(*a.g, a.eps, a.rho, max4, parallel);
            auto mb = spinor_laplacian_spectrum(*b.g, b.eps, b.rho, max4, parallel);
            out.push_back(compare_maps(kind, ma, mb, max4));
        } else if (kind == "functions") {
            out.push_back(compare_maps(kind, pform_spectrum(*a.g, 0, max4, parallel),
                                       pform_spectrum(*b.g, 0, max4, parallel), max4));
        } else if (kind.rfind("pform:", 0) == 0) {
            std::string arg = kind.substr(6);
            std::vector<int> ps;
            if (arg == "all")
                for (int p = 0; p <= a.g->dim(); ++p) ps.push_back(p);
            else
                ps.push_back(std::stoi(arg));
            for (int p : ps) {
                auto va = compare_maps("pform:" + std::to_string(p),
                                       pform_spectrum(*a.g, p, max4, parallel),
                                       pform_spectrum(*b.g, p, max4, parallel), max4);
                out.push_back(va);
            }
        } else {
            throw Error("unknown spectrum kind '" + kind + "'");
        }
    }
    return out;
}

// --------------------------------------------------------------- lengths

namespace {

/// Per-cycle data for the orthogonal projection onto ker(B - Id):
/// squared length contribution (beta + a)^2 / len for a in Z.
struct ProjComponent {
    Rational beta;
    long long len;
    int first_coord;
};

std::vector<ProjComponent> proj_components(const Coset& c) {
    std::vector<ProjComponent> out;
    for (const auto& cyc : c.mat.cycles()) {
        if (cyc.sign_product != 1) continue;
        ProjComponent pc;
        pc.len = (long long)cyc.idx.size();
        pc.first_coord = cyc.idx[0];
        pc.beta = Rational(0);
        int rs = 1;
        int i = cyc.idx[0];
        for (size_t r = 0; r < cyc.idx.size(); ++r) {
            pc.beta += Rational(rs) * c.b[i];
            rs *= c.mat.signs[i];
            i = c.mat.perm[i];
        }
        out.push_back(pc);
    }
    return out;
}

void enumerate_proj_values(const std::vector<ProjComponent>& comps, const Rational& cap,
                           const std::function<void(const std::vector<long long>&, const Rational&)>& fn) {
    std::vector<long long> a(comps.size(), 0);
    std::function<void(size_t, Rational)> rec = [&](size_t k, Rational acc) {
        if (k == comps.size()) {
            fn(a, acc);
            return;
        }
        const auto& c = comps[k];
        // (beta + x)^2 / len <= cap - acc
        Rational room = cap - acc;
        double bound = std::sqrt(room.to_double() * (double)c.len) + 2.0;
        long long lo = (long long)std::floor(-c.beta.to_double() - bound);
        long long hi = (long long)std::ceil(-c.beta.to_double() + bound);
        for (long long x = lo; x <= hi; ++x) {
            Rational term = (c.beta + Rational(x)) * (c.beta + Rational(x)) / Rational(c.len);
            if (acc + term <= cap) {
                a[k] = x;
                rec(k + 1, acc + term);
            }
        }
    };
    rec(0, Rational(0));
}

}  // namespace

std::set<Rational> weak_length_spectrum(const BieberbachGroup& g, const Rational& cap_sq) {
    std::set<Rational> out;
    for (int ci = 0; ci < g.order(); ++ci) {
        const Coset& c = g.cosets()[ci];
        auto comps = proj_components(c);
        enumerate_proj_values(comps, cap_sq,
                              [&](const std::vector<long long>&, const Rational& v) {
                                  if (ci == 0 && v.is_zero()) return;  // identity
                                  out.insert(v);
                              });
        if (ci != 0 && out.count(Rational(0)))
            throw Error("zero-length non-trivial element: group has torsion?");
    }
    return out;
}

std::map<Rational, long long> marked_length_spectrum(const BieberbachGroup& g,
                                                     const Rational& cap_sq, bool parallel) {
    int n = g.dim();
    for (const auto& c : g.cosets())
        if (!c.mat.is_identity() && c.mat.order() != 2)
            throw Error("marked length spectrum supports holonomy of order <= 2");
    const long long D = 4;  // scale making all translations integral
    int nc = g.order();
    std::vector<std::map<Rational, long long>> per_coset(nc);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int ci = 0; ci < nc; ++ci) {
        const Coset& c = g.cosets()[ci];
        // reduction lattice (B - Id) Lambda, scaled by D
        std::vector<std::vector<long long>> cols(n, std::vector<long long>(n, 0));
        for (int k = 0; k < n; ++k) {
            cols[k][c.mat.perm[k]] += D * c.mat.signs[k];
            cols[k][k] -= D;
        }
        IntLattice red = IntLattice::from_columns(n, cols);
        auto comps = proj_components(c);
        // anti residues: one 0/1 flag per diagonal -1 coordinate
        std::vector<int> anti;
        for (const auto& cyc : c.mat.cycles())
            if (cyc.idx.size() == 1 && cyc.sign_product == -1) anti.push_back(cyc.idx[0]);
        std::map<std::vector<long long>, Rational> classes;  // canonical key -> length^2
        enumerate_proj_values(comps, cap_sq, [&](const std::vector<long long>& a,
                                                 const Rational& len_sq) {
            if (ci == 0 && len_sq.is_zero()) return;
            for (uint32_t rmask = 0; rmask < (1u << anti.size()); ++rmask) {
                std::vector<Rational> v = c.b;
                for (size_t k = 0; k < comps.size(); ++k)
                    v[comps[k].first_coord] += Rational(a[k]);
                for (size_t k = 0; k < anti.size(); ++k)
                    if (rmask & (1u << k)) v[anti[k]] += Rational(1);
                // canonical conjugacy key: min over cosets C of
                // reduce(C(v + (B - Id) b_C))
                std::vector<long long> best;
                for (const auto& conj : g.cosets()) {
                    std::vector<Rational> w(n);
                    auto bb = c.mat.apply(conj.b);
                    for (int i = 0; i < n; ++i) w[i] = v[i] + bb[i] - conj.b[i];
                    auto cw = conj.mat.apply(w);
                    std::vector<long long> wi(n);
                    for (int i = 0; i < n; ++i) {
                        Rational s = cw[i] * Rational(D);
                        if (!s.is_integer()) throw Error("length class scaling failed");
                        wi[i] = s.num();
                    }
                    auto r = red.reduce(wi);
                    if (best.empty() || r < best) best = r;
                }
                auto it = classes.find(best);
                if (it == classes.end())
                    classes.emplace(best, len_sq);
                else if (!(it->second == len_sq))
                    throw Error("conjugacy class with two lengths");
            }
        });
        for (const auto& [key, len] : classes) per_coset[ci][len] += 1;
    }
    (void)parallel;
    std::map<Rational, long long> out;
    for (const auto& m : per_coset)
        for (const auto& [len, cnt] : m) out[len] += cnt;
    return out;
}

// --------------------------------------------------------------- table 1

namespace {

SpinStructure find_structure(const BieberbachGroup& g, const LatticeCharacter& delta) {
    for (const auto& e : enumerate_spin_structures(g)) {
        if (e.delta != delta) continue;
        bool plus = true;
        for (int s : e.sigma) plus &= s == 1;
        if (plus) return e;
    }
    throw Error("requested spin structure not admissible on " + g.name);
}

std::string yn(bool b) { return b ? "Yes" : "No"; }

/// "Yes (0<=p<=n)" / "Yes (p odd)" / "No (pform:P at ...)"
std::string pform_verdict(const BieberbachGroup& a, const BieberbachGroup& b, long long max4) {
    bool all = true, odd = true;
    std::string cert;
    for (int p = 0; p <= a.dim(); ++p) {
        auto ma = pform_spectrum(a, p, max4);
        auto mb = pform_spectrum(b, p, max4);
        bool eq = ma == mb;
        if (!eq) {
            all = false;
            if (p % 2 == 1) odd = false;
            if (cert.empty())
                for (long long k = 0; k <= max4; ++k)
                    if (ma[k] != mb[k]) {
                        cert = "p=" + std::to_string(p) + " at " + key_str(k);
                        break;
                    }
        }
    }
    if (all) return "Yes (all p)";
    if (odd) return "Yes (p odd); " + cert;
    return "No (" + cert + ")";
}

std::string length_verdict(const std::set<Rational>& a, const std::set<Rational>& b) {
    if (a == b) return "Yes";
    for (const auto& x : a)
        if (!b.count(x)) return "No (length^2 " + x.str() + " on left only)";
    for (const auto& x : b)
        if (!a.count(x)) return "No (length^2 " + x.str() + " on right only)";
    return "No";
}

/// Weak and marked verdicts for one pair; equal marked spectra force equal
/// weak spectra, so a weak divergence settles the marked column too.
struct LengthVerdicts {
    std::string weak, marked;
};
LengthVerdicts length_verdicts(const BieberbachGroup& a, const BieberbachGroup& b,
                               const Rational& cap);

std::string marked_verdict(const std::map<Rational, long long>& a,
                           const std::map<Rational, long long>& b) {
    if (a == b) return "Yes";
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        long long w = it == b.end() ? 0 : it->second;
        if (v != w)
            return "No (length^2 " + k.str() + ": " + std::to_string(v) + " vs " +
                   std::to_string(w) + " classes)";
    }
    for (const auto& [k, v] : b)
        if (!a.count(k)) return "No (length^2 " + k.str() + " multiplicity differs)";
    return "No";
}

LengthVerdicts length_verdicts(const BieberbachGroup& a, const BieberbachGroup& b,
                               const Rational& cap) {
    LengthVerdicts v;
    auto wa = weak_length_spectrum(a, cap);
    auto wb = weak_length_spectrum(b, cap);
    v.weak = length_verdict(wa, wb);
    if (wa != wb) {
        v.marked = "No (weak length spectra already differ)";
        return v;
    }
    v.marked = marked_verdict(marked_length_spectrum(a, cap), marked_length_spectrum(b, cap));
    return v;
}

}  // namespace

std::vector<Table1Row> table1_report(long long max4, long long length_cap_sq) {
    std::vector<Table1Row> rows;
    Rational lcap(length_cap_sq);

    // --- 4.3 (i): trivial-type structures on M_{0,4} vs M_{2,0}, n = 7
    {
        BieberbachGroup a = registry_group("mjh:7:0:4"), b = registry_group("mjh:7:2:2");
        SpinStructure ea = find_structure(a, LatticeCharacter(7, 1));
        SpinStructure eb = find_structure(b, LatticeCharacter(7, 1));
        HolonomyCharacter ra = HolonomyCharacter::trivial(a), rb = HolonomyCharacter::trivial(b);
        auto vd = compare_spectra({&a, ea, ra}, {&b, eb, rb}, {"dirac", "spinor_laplacian"}, max4);
        Table1Row row;
        row.label = "4.3 (i)";
        row.pair_desc = "(M_{0,4}, eps_0) vs (M_{2,2}, eps_0), n=7";
        row.dirac = yn(vd[0].equal);
        row.spinor_laplacian = yn(vd[1].equal);
        row.pform = pform_verdict(a, b, max4);
        LengthVerdicts lv = length_verdicts(a, b, lcap);
        row.weak_length = lv.weak;
        row.marked_length = lv.marked;
        row.shell_cap = max4;
        row.length_cap = length_cap_sq;
        rows.push_back(row);
    }
    // --- 4.3 (iii): n = 8 = 4t, subfamily j+h = 4: M_{0,4} vs M_{1,3}
    {
        BieberbachGroup a = registry_group("mjh:8:0:4"), b = registry_group("mjh:8:1:3");
        SpinStructure ea = find_structure(a, LatticeCharacter(8, 1));
        SpinStructure eb = find_structure(b, LatticeCharacter(8, 1));
        HolonomyCharacter ra = HolonomyCharacter::trivial(a), rb = HolonomyCharacter::trivial(b);
        auto vd = compare_spectra({&a, ea, ra}, {&b, eb, rb}, {"dirac", "spinor_laplacian"}, max4);
        Table1Row row;
        row.label = "4.3 (iii)";
        row.pair_desc = "(M_{0,4}, eps_0) vs (M_{1,3}, eps_0), n=8=4t, j+h=t";
        row.dirac = yn(vd[0].equal);
        row.spinor_laplacian = yn(vd[1].equal);
        row.pform = pform_verdict(a, b, max4);
        LengthVerdicts lv = length_verdicts(a, b, lcap);
        row.weak_length = lv.weak;
        row.marked_length = lv.marked;
        row.shell_cap = max4;
        row.length_cap = length_cap_sq;
        rows.push_back(row);
    }
    // --- 4.4 (i): asymmetric vs symmetric pair in dimension 7
    {
        BieberbachGroup a = registry_group("example4.4:gamma");
        BieberbachGroup b = registry_group("example4.4:gammap");
        LatticeCharacter da{1, 1, 1, 1, 1, 1, -1}, db{-1, 1, 1, 1, 1, 1, 1};
        SpinStructure ea = find_structure(a, da), eb = find_structure(b, db);
        HolonomyCharacter ra = HolonomyCharacter::trivial(a), rb = HolonomyCharacter::trivial(b);
        auto vd = compare_spectra({&a, ea, ra}, {&b, eb, rb}, {"dirac", "spinor_laplacian"}, max4);
        Table1Row row;
        row.label = "4.4 (i)";
        row.pair_desc = "(Gamma, delta_7=-1) vs (Gamma', delta_1=-1), n=7";
        row.dirac = yn(vd[0].equal) + (vd[0].equal ? "" : " [" + vd[0].certificate + "]");
        row.spinor_laplacian = yn(vd[1].equal);
        row.pform = pform_verdict(a, b, max4);
        LengthVerdicts lv = length_verdicts(a, b, lcap);
        row.weak_length = lv.weak;
        row.marked_length = lv.marked;
        row.shell_cap = max4;
        row.length_cap = length_cap_sq;
        rows.push_back(row);
    }
    // --- 4.5 (i): M_1 vs M_1' (n=4); Dirac verdict depends on the structures
    {
        BieberbachGroup a = registry_group("table2:m1"), b = registry_group("table2:m1p");
        HolonomyCharacter ra = HolonomyCharacter::trivial(a), rb = HolonomyCharacter::trivial(b);
        SpinStructure e_yes_a = find_structure(a, {-1, -1, -1, -1});
        SpinStructure e_yes_b = find_structure(b, {-1, -1, -1, -1});
        SpinStructure e_no_a = find_structure(a, {1, -1, 1, -1});
        auto vy = compare_spectra({&a, e_yes_a, ra}, {&b, e_yes_b, rb},
                                  {"dirac", "spinor_laplacian"}, max4);
        auto vn = compare_spectra({&a, e_no_a, ra}, {&b, e_yes_b, rb},
                                  {"dirac", "spinor_laplacian"}, max4);
        Table1Row row;
        row.label = "4.5 (i)";
        row.pair_desc = "M_1 vs M_1' (n=4); delta=(-1,-1,-1,-1) both / (1,-1,1,-1) left";
        row.dirac = yn(vy[0].equal) + "/" + yn(vn[0].equal);
        row.spinor_laplacian = yn(vy[1].equal) + "/" + yn(vn[1].equal);
        row.pform = pform_verdict(a, b, max4);
        LengthVerdicts lv = length_verdicts(a, b, lcap);
        row.weak_length = lv.weak;
        row.marked_length = lv.marked;
        row.shell_cap = max4;
        row.length_cap = length_cap_sq;
        rows.push_back(row);
    }
    // --- 4.5 (ii): spectra on the orientable 6-dim extensions, lengths on
    // the 4-dim pair M_2 / M_2'
    {
        BieberbachGroup a = registry_group("table2:m2t"), b = registry_group("table2:m2tp");
        BieberbachGroup la = registry_group("table2:m2"), lb = registry_group("table2:m2p");
        HolonomyCharacter ra = HolonomyCharacter::trivial(a), rb = HolonomyCharacter::trivial(b);
        SpinStructure e_yes_a = find_structure(a, {1, 1, -1, -1, 1, 1});
        SpinStructure e_yes_b = find_structure(b, {1, -1, -1, 1, 1, 1});
        SpinStructure e_no_b = find_structure(b, {1, -1, 1, 1, 1, 1});
        auto vy = compare_spectra({&a, e_yes_a, ra}, {&b, e_yes_b, rb},
                                  {"dirac", "spinor_laplacian"}, max4);
        auto vn = compare_spectra({&a, e_yes_a, ra}, {&b, e_no_b, rb},
                                  {"dirac", "spinor_laplacian"}, max4);
        Table1Row row;
        row.label = "4.5 (ii)";
        row.pair_desc = "~M_2 vs ~M_2' (n=6) for spectra; M_2 vs M_2' (n=4) for lengths";
        row.dirac = yn(vy[0].equal) + "/" + yn(vn[0].equal);
        row.spinor_laplacian = yn(vy[1].equal) + "/" + yn(vn[1].equal);
        row.pform = pform_verdict(a, b, max4);
        LengthVerdicts lv = length_verdicts(la, lb, lcap);
        row.weak_length = lv.weak;
        row.marked_length = lv.marked;
        row.shell_cap = max4;
        row.length_cap = length_cap_sq;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace flatdirac
