#include "flatdirac/serialize.hpp"

#include <fstream>
#include <sstream>

#include "flatdirac/families.hpp"

namespace flatdirac {

json group_to_json(const BieberbachGroup& g) {
    json j;
    j["n"] = g.dim();
    if (!g.name.empty()) j["name"] = g.name;
    json gens = json::array();
    for (const auto& gen : g.generators()) {
        json e;
        json perm = json::array(), signs = json::array(), tr = json::array();
        for (int i = 0; i < g.dim(); ++i) {
            perm.push_back(gen.mat.perm[i] + 1);  // 1-based on the wire
            signs.push_back(gen.mat.signs[i]);
            tr.push_back(gen.b[i].str());
        }
        e["perm"] = perm;
        e["signs"] = signs;
        e["translation"] = tr;
        gens.push_back(e);
    }
    j["generators"] = gens;
    return j;
}

BieberbachGroup group_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<AffineGen> gens;
    for (const auto& e : j.at("generators")) {
        AffineGen g;
        g.mat.n = n;
        for (const auto& p : e.at("perm")) g.mat.perm.push_back(p.get<int>() - 1);
        for (const auto& s : e.at("signs")) g.mat.signs.push_back(s.get<int>());
        for (const auto& t : e.at("translation")) g.b.push_back(Rational::parse(t.get<std::string>()));
        if ((int)g.mat.perm.size() != n || (int)g.mat.signs.size() != n || (int)g.b.size() != n)
            throw Error("generator arrays must have length n");
        gens.push_back(std::move(g));
    }
    BieberbachGroup g = BieberbachGroup::build(n, gens);
    if (j.contains("name")) g.name = j.at("name").get<std::string>();
    return g;
}

json structure_to_json(const SpinStructure& e) {
    json j;
    j["delta"] = e.delta;
    j["sigma"] = e.sigma;
    return j;
}

SpinStructure structure_from_json(const json& j) {
    SpinStructure e;
    for (const auto& d : j.at("delta")) e.delta.push_back(d.get<int>());
    for (const auto& s : j.at("sigma")) e.sigma.push_back(s.get<int>());
    for (int d : e.delta)
        if (d != 1 && d != -1) throw Error("delta entries must be +-1");
    for (int s : e.sigma)
        if (s != 1 && s != -1) throw Error("sigma entries must be +-1");
    return e;
}

json spectrum_to_json(const SpectrumTable& t) {
    json j;
    j["n"] = t.n;
    j["max_four_mu_sq"] = t.max_key;
    json entries = json::array();
    for (const auto& [k, dm] : t.entries) {
        if (dm.first == 0 && dm.second == 0) continue;
        entries.push_back({{"four_mu_sq", k}, {"d_plus", dm.first}, {"d_minus", dm.second}});
    }
    j["entries"] = entries;
    j["d0"] = t.d0;
    if (t.d0_pm) j["d0_pm"] = {t.d0_pm->first, t.d0_pm->second};
    j["asymmetric"] = t.asymmetric;
    return j;
}

SpectrumTable spectrum_from_json(const json& j) {
    SpectrumTable t;
    t.n = j.at("n").get<int>();
    t.max_key = j.at("max_four_mu_sq").get<long long>();
    for (const auto& e : j.at("entries"))
        t.entries[e.at("four_mu_sq").get<long long>()] = {e.at("d_plus").get<long long>(),
                                                          e.at("d_minus").get<long long>()};
    t.d0 = j.at("d0").get<long long>();
    t.asymmetric = j.at("asymmetric").get<bool>();
    return t;
}

json eta_report_to_json(const EtaReport& r) {
    json j;
    j["identically_zero"] = r.identically_zero;
    j["eta0"] = r.eta0.str();
    j["eta_prime0"] = r.eta_prime0;
    json samples = json::array();
    for (const auto& [s, v] : r.samples) samples.push_back({s, v});
    j["samples"] = samples;
    return j;
}

json zp_rows_to_json(const std::vector<ZpRow>& rows) {
    json j = json::array();
    for (const auto& r : rows) {
        json e{{"r", r.r}, {"p", r.p}, {"eta1", r.eta1.str()}, {"eta2", r.eta2.str()}};
        if (r.d0) e["d0_eps1"] = *r.d0;
        j.push_back(e);
    }
    return j;
}

std::string zp_rows_to_csv(const std::vector<ZpRow>& rows) {
    std::ostringstream os;
    os << "r,p,eta1,eta2,d0_eps1\n";
    for (const auto& r : rows) {
        os << r.r << "," << r.p << "," << r.eta1.str() << "," << r.eta2.str() << ",";
        if (r.d0) os << *r.d0;
        os << "\n";
    }
    return os.str();
}

std::string zp_rows_to_markdown(const std::vector<ZpRow>& rows) {
    std::ostringstream os;
    os << "| r | p | eta_1 | eta_2 | d0(eps_1) |\n|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        os << "| " << r.r << " | " << r.p << " | " << r.eta1.str() << " | " << r.eta2.str()
           << " | ";
        if (r.d0) os << *r.d0;
        os << " |\n";
    }
    return os.str();
}

json table1_to_json(const std::vector<Table1Row>& rows) {
    json j = json::array();
    for (const auto& r : rows)
        j.push_back({{"row", r.label},
                     {"pair", r.pair_desc},
                     {"dirac", r.dirac},
                     {"spinor_laplacian", r.spinor_laplacian},
                     {"pform", r.pform},
                     {"marked_length", r.marked_length},
                     {"weak_length", r.weak_length},
                     {"shell_cap", r.shell_cap},
                     {"length_sq_cap", r.length_cap}});
    return j;
}

std::string table1_to_markdown(const std::vector<Table1Row>& rows) {
    std::ostringstream os;
    os << "| Ex. | D_rho | Delta_s | Delta_p | [L] | L |\n|---|---|---|---|---|---|\n";
    for (const auto& r : rows)
        os << "| " << r.label << " | " << r.dirac << " | " << r.spinor_laplacian << " | "
           << r.pform << " | " << r.marked_length << " | " << r.weak_length << " |\n";
    return os.str();
}

BieberbachGroup resolve_group(const std::string& spec) {
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
        std::ifstream in(spec);
        if (!in) throw Error("cannot open group file " + spec);
        json j;
        in >> j;
        return group_from_json(j);
    }
    return registry_group(spec);
}

}  // namespace flatdirac
