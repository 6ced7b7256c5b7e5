// flatdirac: spectra of flat spin manifolds over the canonical lattice.
//
// Subcommands: describe, spin-list, dirac-spec, eta, hodge-spec, compare,
// zp-table, families, oracle-check, table1.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flatdirac/eta.hpp"
#include "flatdirac/families.hpp"
#include "flatdirac/hodge.hpp"
#include "flatdirac/isospec.hpp"
#include "flatdirac/serialize.hpp"
#include "flatdirac/spin_oracle.hpp"
#include "flatdirac/zp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace flatdirac;

namespace {

struct Options {
    std::string format = "json";
    long long max4 = 100;
    long long length_cap = 25;
    std::string rho_file;
};

SpinStructure pick_structure(const BieberbachGroup& g, const std::string& spec) {
    auto structs = enumerate_spin_structures(g);
    if (structs.empty()) throw Error(g.name + " admits no spin structure");
    if (spec.empty() || spec == "first") return structs[0];
    if (spec == "trivial") {
        for (const auto& e : structs)
            if (e.trivial_type()) return e;
        throw Error(g.name + " has no trivial-type structure");
    }
    // remark 3.5 conventions: plus/minus = (1,1,-1; +-e1e2)
    if (spec == "plus" || spec == "minus") {
        for (const auto& e : structs)
            if (e.delta == LatticeCharacter{1, 1, -1} && e.sigma[0] == (spec == "plus" ? 1 : -1))
                return e;
        throw Error("plus/minus selector needs the remark3.5 group");
    }
    if (spec.find('{') != std::string::npos) {  // inline JSON
        SpinStructure want = structure_from_json(json::parse(spec));
        for (const auto& e : structs)
            if (e.delta == want.delta && e.sigma == want.sigma) return e;
        throw Error("requested structure is not admissible");
    }
    // numeric index into the deterministic enumeration
    size_t idx = std::stoul(spec);
    if (idx >= structs.size()) throw Error("structure index out of range");
    return structs[idx];
}

HolonomyCharacter pick_rho(const BieberbachGroup& g, const std::string& file) {
    if (file.empty()) return HolonomyCharacter::trivial(g);
    std::ifstream in(file);
    if (!in) throw Error("cannot open character file " + file);
    json j;
    in >> j;
    std::vector<int> gv;
    for (const auto& v : j.at("gen_values")) gv.push_back(v.get<int>());
    return HolonomyCharacter::from_gen_values(g, gv);
}

void emit(const json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    throw Error("this subcommand only supports --format json");
}

std::string describe_markdown(const BieberbachGroup& g) {
    std::ostringstream os;
    os << "# " << (g.name.empty() ? "group" : g.name) << "\n";
    os << "n = " << g.dim() << ", |F| = " << g.order() << ", orientable = "
       << (g.orientable() ? "yes" : "no") << ", diagonal type = "
       << (g.diagonal_type() ? "yes" : "no") << "\n\n";
    os << "| coset | n_B | order | in F_1 |\n|---|---|---|---|\n";
    for (const auto& e : point_group_summary(g))
        os << "| " << e.coset << " | " << e.n_B << " | " << e.order << " | "
           << (e.in_F1 ? "yes" : "no") << " |\n";
    auto structs = enumerate_spin_structures(g);
    os << "\nspin structures: " << structs.size() << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat spin manifold spectra"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Options opt;
    app.add_option("--format", opt.format, "output format: json, csv, md")->capture_default_str();
    app.add_option("--max-4mu2", opt.max4, "shell cap on 4 mu^2")->capture_default_str();
    app.add_option("--length-cap", opt.length_cap, "squared length cap")->capture_default_str();
    app.add_option("--rho", opt.rho_file, "character file for the twist rho");

    std::string group_a, group_b, spin_a, spin_b = "first";
    int pform = 0;
    long long pmax = 503;
    bool harmonic = false, orientable_only = false;
    int family_n = 4;
    std::string kinds = "dirac,spinor_laplacian";
    std::vector<double> samples{5.0, 8.0, 12.0};

    auto* c_desc = app.add_subcommand("describe", "group summary");
    c_desc->add_option("--group", group_a)->required();

    auto* c_spin = app.add_subcommand("spin-list", "enumerate spin structures");
    c_spin->add_option("--group", group_a)->required();

    auto* c_dirac = app.add_subcommand("dirac-spec", "twisted Dirac spectrum");
    c_dirac->add_option("--group", group_a)->required();
    c_dirac->add_option("--spin", spin_a, "structure selector (index, 'trivial', 'plus', 'minus')");

    auto* c_eta = app.add_subcommand("eta", "eta series / invariant");
    c_eta->add_option("--group", group_a)->required();
    c_eta->add_option("--spin", spin_a);
    c_eta->add_option("--samples", samples, "s values for eta(s)");

    auto* c_hodge = app.add_subcommand("hodge-spec", "Hodge Laplacian on p-forms");
    c_hodge->add_option("--group", group_a)->required();
    c_hodge->add_option("--p", pform, "form degree")->required();

    auto* c_cmp = app.add_subcommand("compare", "pairwise isospectrality verdicts");
    c_cmp->add_option("--group-a", group_a)->required();
    c_cmp->add_option("--group-b", group_b)->required();
    c_cmp->add_option("--spin-a", spin_a);
    c_cmp->add_option("--spin-b", spin_b);
    c_cmp->add_option("--kinds", kinds, "comma list: dirac,spinor_laplacian,functions,pform:all,length");

    auto* c_zp = app.add_subcommand("zp-table", "eta table of the Z_p family");
    c_zp->add_option("--pmax", pmax)->capture_default_str();
    c_zp->add_flag("--harmonic", harmonic, "include d_0(eps_1) for p <= 71");

    auto* c_fam = app.add_subcommand("families", "list the Z_2 family M_{j,h}");
    c_fam->add_option("--n", family_n)->required();
    c_fam->add_flag("--orientable", orientable_only);

    auto* c_oracle = app.add_subcommand("oracle-check", "formula vs brute-force multiplicities");
    c_oracle->add_option("--group", group_a)->required();
    c_oracle->add_option("--spin", spin_a);

    auto* c_t1 = app.add_subcommand("table1", "recompute the isospectrality table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* threads = std::getenv("FLATDIRAC_THREADS")) {
#ifdef _OPENMP
        omp_set_num_threads(std::max(1, atoi(threads)));
#else
        (void)threads;
#endif
    }

    try {
        if (c_desc->parsed()) {
            BieberbachGroup g = resolve_group(group_a);
            if (opt.format == "md") {
                std::cout << describe_markdown(g);
            } else {
                json j = group_to_json(g);
                j["order"] = g.order();
                j["orientable"] = g.orientable();
                j["diagonal_type"] = g.diagonal_type();
                j["spin_structures"] = enumerate_spin_structures(g).size();
                if (g.diagonal_type()) {
                    json sun = json::array();
                    for (const auto& [dt, cnt] : sunada_numbers(g))
                        sun.push_back({{"d", dt.first}, {"t", dt.second}, {"count", cnt}});
                    j["sunada_numbers"] = sun;
                }
                emit(j, "json");
            }
        } else if (c_spin->parsed()) {
            BieberbachGroup g = resolve_group(group_a);
            json j = json::array();
            for (const auto& e : enumerate_spin_structures(g)) {
                json s = structure_to_json(e);
                s["trivial_type"] = e.trivial_type();
                s["j_minus"] = e.j_minus();
                j.push_back(s);
            }
            emit(j, opt.format);
        } else if (c_dirac->parsed()) {
            BieberbachGroup g = resolve_group(group_a);
            SpinStructure e = pick_structure(g, spin_a);
            HolonomyCharacter rho = pick_rho(g, opt.rho_file);
            SpectrumTable t = dirac_spectrum(g, e, rho, opt.max4);
            if (opt.format == "csv") {
                std::cout << "four_mu_sq,d_plus,d_minus\n0," << t.d0 << "," << t.d0 << "\n";
                for (const auto& [k, dm] : t.entries)
                    if (dm.first || dm.second)
                        std::cout << k << "," << dm.first << "," << dm.second << "\n";
            } else {
                emit(spectrum_to_json(t), "json");
            }
        } else if (c_eta->parsed()) {
            BieberbachGroup g = resolve_group(group_a);
            SpinStructure e = pick_structure(g, spin_a);
            HolonomyCharacter rho = pick_rho(g, opt.rho_file);
            emit(eta_report_to_json(eta_z2k(g, e, rho, samples)), opt.format);
        } else if (c_hodge->parsed()) {
            BieberbachGroup g = resolve_group(group_a);
            auto spec = pform_spectrum(g, pform, opt.max4);
            if (opt.format == "csv") {
                std::cout << "four_mu_sq,multiplicity\n";
                for (const auto& [k, d] : spec)
                    if (d || k == 0) std::cout << k << "," << d << "\n";
            } else {
                json j = json::array();
                for (const auto& [k, d] : spec)
                    if (d || k == 0) j.push_back({{"four_mu_sq", k}, {"multiplicity", d}});
                emit(j, "json");
            }
        } else if (c_cmp->parsed()) {
            BieberbachGroup a = resolve_group(group_a), b = resolve_group(group_b);
            json j;
            std::vector<std::string> spectral;
            bool lengths = false;
            std::stringstream ks(kinds);
            std::string kind;
            while (std::getline(ks, kind, ',')) {
                if (kind == "length")
                    lengths = true;
                else
                    spectral.push_back(kind);
            }
            if (!spectral.empty()) {
                // spin structures are needed only for the spinor kinds
                bool needs_spin = false;
                for (const auto& k : spectral)
                    needs_spin |= k == "dirac" || k == "spinor_laplacian";
                SpinSetting sa{&a, SpinStructure{}, pick_rho(a, opt.rho_file)};
                SpinSetting sb{&b, SpinStructure{}, pick_rho(b, opt.rho_file)};
                if (needs_spin) {
                    sa.eps = pick_structure(a, spin_a);
                    sb.eps = pick_structure(b, spin_b);
                }
                json vs = json::array();
                for (const auto& v : compare_spectra(sa, sb, spectral, opt.max4))
                    vs.push_back({{"kind", v.kind},
                                  {"equal_up_to_cap", v.equal},
                                  {"cap", v.cap},
                                  {"certificate", v.certificate}});
                j["spectra"] = vs;
            }
            if (lengths) {
                Rational cap(opt.length_cap);
                auto wa = weak_length_spectrum(a, cap), wb = weak_length_spectrum(b, cap);
                j["weak_length_equal_up_to_cap"] = wa == wb;
                auto ma = marked_length_spectrum(a, cap), mb = marked_length_spectrum(b, cap);
                j["marked_length_equal_up_to_cap"] = ma == mb;
                j["length_sq_cap"] = opt.length_cap;
            }
            emit(j, "json");
        } else if (c_zp->parsed()) {
            auto rows = zp_table(pmax, harmonic);
            if (opt.format == "md")
                std::cout << zp_rows_to_markdown(rows);
            else if (opt.format == "csv")
                std::cout << zp_rows_to_csv(rows);
            else
                emit(zp_rows_to_json(rows), "json");
        } else if (c_fam->parsed()) {
            json j = json::array();
            for (const auto& mem : z2_family(family_n, orientable_only)) {
                json e{{"j", mem.j}, {"h", mem.h}, {"l", mem.l}, {"name", mem.group.name}};
                e["orientable"] = mem.group.orientable();
                e["spin_structures"] = enumerate_spin_structures(mem.group).size();
                j.push_back(e);
            }
            emit(j, opt.format);
        } else if (c_oracle->parsed()) {
            BieberbachGroup g = resolve_group(group_a);
            if (g.dim() > 8) throw Error("oracle-check supports n <= 8");
            SpinStructure e = pick_structure(g, spin_a);
            HolonomyCharacter rho = pick_rho(g, opt.rho_file);
            SpectrumTable t = dirac_spectrum(g, e, rho, opt.max4);
            json j = json::array();
            bool all_ok = true;
            for (long long key = 1; key <= opt.max4; ++key) {
                auto brute = brute_multiplicity(g, e, rho.to_complex(), key);
                auto it = t.entries.find(key);
                std::pair<long long, long long> formula =
                    it == t.entries.end() ? std::make_pair(0LL, 0LL) : it->second;
                bool ok = brute == formula;
                all_ok &= ok;
                if (!ok || brute.first || brute.second)
                    j.push_back({{"four_mu_sq", key},
                                 {"formula", {formula.first, formula.second}},
                                 {"oracle", {brute.first, brute.second}},
                                 {"match", ok}});
            }
            json out{{"all_match", all_ok}, {"shells", j}};
            emit(out, "json");
            if (!all_ok) return 1;
        } else if (c_t1->parsed()) {
            auto rows = table1_report(opt.max4, opt.length_cap);
            if (opt.format == "md")
                std::cout << table1_to_markdown(rows);
            else
                emit(table1_to_json(rows), "json");
        }
    } catch (const Error& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
