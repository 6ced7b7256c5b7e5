#include "flatdirac/families.hpp"

#include <fstream>
#include <sstream>

namespace flatdirac {

namespace {

std::vector<Rational> zero_vec(int n) { return std::vector<Rational>(n, Rational(0)); }

SignedPermMatrix diag_matrix(const std::vector<int>& signs) {
    SignedPermMatrix m = SignedPermMatrix::identity((int)signs.size());
    m.signs = signs;
    return m;
}

AffineGen diag_gen(const std::vector<int>& signs, const std::vector<int>& half_coords) {
    AffineGen g;
    g.mat = diag_matrix(signs);
    g.b = zero_vec((int)signs.size());
    for (int c : half_coords) g.b[c] = Rational(1, 2);
    return g;
}

}  // namespace

BieberbachGroup mjh_group(int n, int j, int h) {
    if (j < 0 || h < 0 || j + h == 0 || 2 * j + h >= n)
        throw Error("M_{j,h} needs j,h >= 0, j+h != 0, l = n-2j-h >= 1");
    SignedPermMatrix b = SignedPermMatrix::identity(n);
    for (int t = 0; t < j; ++t) {
        b.perm[2 * t] = 2 * t + 1;
        b.perm[2 * t + 1] = 2 * t;
    }
    for (int t = 2 * j; t < 2 * j + h; ++t) b.signs[t] = -1;
    AffineGen g{b, zero_vec(n)};
    g.b[n - 1] = Rational(1, 2);
    BieberbachGroup out = BieberbachGroup::build(n, {g});
    out.name = "mjh:" + std::to_string(n) + ":" + std::to_string(j) + ":" + std::to_string(h);
    return out;
}

std::vector<FamilyMember> z2_family(int n, bool orientable_only) {
    if (n < 2) throw Error("Z_2 family needs n >= 2");
    std::vector<FamilyMember> out;
    for (int j = 0; j <= (n - 1) / 2; ++j)
        for (int h = 0; h < n - 2 * j; ++h) {
            if (j + h == 0) continue;
            if (orientable_only && (j + h) % 2 != 0) continue;
            out.push_back({j, h, n - 2 * j - h, mjh_group(n, j, h)});
        }
    return out;
}

BieberbachGroup hw_group(int n, const std::vector<std::vector<int>>& half_coords) {
    if (n % 2 == 0) throw Error("Hantzsche-Wendt groups need n odd");
    if ((int)half_coords.size() != n - 1) throw Error("expected n-1 generator rows");
    std::vector<AffineGen> gens;
    for (int i = 0; i < n - 1; ++i) {
        std::vector<int> signs(n, -1);
        signs[i] = 1;
        gens.push_back(diag_gen(signs, half_coords[i]));
    }
    return BieberbachGroup::build(n, gens);
}

std::vector<std::vector<int>> load_hw_pattern(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open pattern file " + path);
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> flags;
        int flag;
        while (ls >> flag) {
            if (flag != 0 && flag != 1) throw Error("pattern flags must be 0 or 1");
            flags.push_back(flag);
        }
        if ((int)flags.size() != n) throw Error("pattern row must have n flags");
        std::vector<int> coords;
        for (int c = 0; c < n; ++c)
            if (flags[c]) coords.push_back(c);
        rows.push_back(coords);
    }
    return rows;
}

BieberbachGroup doubling(const BieberbachGroup& g) {
    int n = g.dim();
    std::vector<AffineGen> gens;
    for (const auto& gen : g.generators()) {
        AffineGen d;
        d.mat.n = 2 * n;
        d.mat.perm.resize(2 * n);
        d.mat.signs.resize(2 * n);
        for (int i = 0; i < n; ++i) {
            d.mat.perm[i] = gen.mat.perm[i];
            d.mat.perm[n + i] = n + gen.mat.perm[i];
            d.mat.signs[i] = gen.mat.signs[i];
            d.mat.signs[n + i] = gen.mat.signs[i];
        }
        d.b = gen.b;
        d.b.insert(d.b.end(), gen.b.begin(), gen.b.end());
        gens.push_back(std::move(d));
    }
    BieberbachGroup out = BieberbachGroup::build(2 * n, gens);
    out.name = g.name.empty() ? "d(?)" : "d(" + g.name + ")";
    return out;
}

std::map<std::pair<int, int>, long long> sunada_numbers(const BieberbachGroup& g) {
    if (!g.diagonal_type()) throw Error("Sunada numbers are defined for diagonal type");
    std::map<std::pair<int, int>, long long> out;
    for (const auto& c : g.cosets()) {
        int d = 0, t = 0;
        for (int i = 0; i < g.dim(); ++i) {
            if (c.mat.signs[i] != 1) continue;
            ++d;
            if (c.b[i].mod1() == Rational(1, 2)) ++t;
        }
        out[{d, t}] += 1;
    }
    return out;
}

namespace {

// Half-translation patterns for the built-in Hantzsche-Wendt groups
// (coordinates carrying 1/2 in b_i, 0-based; b_{ii} = 1/2 throughout).
const std::vector<std::vector<int>> kHw3{{0}, {1, 2}};
const std::vector<std::vector<int>> kHw5{{0}, {1, 2}, {2, 3}, {3, 4}};
const std::vector<std::vector<int>> kHw7a{{0}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
const std::vector<std::vector<int>> kHw7b{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};

BieberbachGroup table2_group(const std::string& which) {
    auto build4 = [](std::vector<int> s1, std::vector<int> b1, std::vector<int> s2,
                     std::vector<int> b2) {
        return BieberbachGroup::build(4, {diag_gen(s1, b1), diag_gen(s2, b2)});
    };
    auto build6 = [](std::vector<int> s1, std::vector<int> b1, std::vector<int> s2,
                     std::vector<int> b2) {
        return BieberbachGroup::build(6, {diag_gen(s1, b1), diag_gen(s2, b2)});
    };
    if (which == "m1") return build4({-1, -1, 1, 1}, {3}, {1, -1, -1, 1}, {1, 3});
    if (which == "m1p") return build4({-1, -1, 1, 1}, {2}, {1, -1, -1, 1}, {0, 1});
    if (which == "m2") return build4({1, 1, 1, -1}, {2}, {1, 1, -1, 1}, {1, 3});
    if (which == "m2p") return build4({1, 1, 1, -1}, {1}, {1, 1, -1, 1}, {0, 1});
    // tilde variants: adjoin the characters (-1,1,-1) and (1,-1,-1) on two
    // extra coordinates, translations unchanged
    if (which == "m2t") return build6({1, 1, 1, -1, -1, 1}, {2}, {1, 1, -1, 1, 1, -1}, {1, 3});
    if (which == "m2tp") return build6({1, 1, 1, -1, -1, 1}, {1}, {1, 1, -1, 1, 1, -1}, {0, 1});
    throw Error("unknown table2 group " + which);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> registry_list() {
    return {
        {"torus:N", "flat torus Z^N (any 1 <= N <= 16)"},
        {"remark3.5", "n=3 Z_2 group <diag(-1,-1,1) L_{e3/2}, Z^3>"},
        {"mjh:N:J:H", "Z_2 family member M_{j,h} in dimension N"},
        {"example4.4:gamma", "n=7 Z_2^2 group with asymmetric Dirac spectrum"},
        {"example4.4:gammap", "n=7 Z_2^2 companion with symmetric spectrum"},
        {"table2:m1", "n=4 Z_2^2 group M_1"},
        {"table2:m1p", "n=4 Z_2^2 group M_1'"},
        {"table2:m2", "n=4 Z_2^2 group M_2 (non-orientable)"},
        {"table2:m2p", "n=4 Z_2^2 group M_2' (non-orientable)"},
        {"table2:m2t", "n=6 orientable extension of M_2"},
        {"table2:m2tp", "n=6 orientable extension of M_2'"},
        {"hw:3:classic", "classical Hantzsche-Wendt 3-manifold group"},
        {"hw:5:a", "Hantzsche-Wendt group, n=5"},
        {"hw:7:a", "Hantzsche-Wendt group, n=7, consecutive-pair pattern"},
        {"hw:7:b", "Hantzsche-Wendt group, n=7, full consecutive-pair pattern"},
        {"dhw:3:classic", "doubling of hw:3:classic (dimension 6)"},
        {"dhw:5:a", "doubling of hw:5:a (dimension 10)"},
        {"dhw:7:a", "doubling of hw:7:a (dimension 14)"},
        {"dhw:7:b", "doubling of hw:7:b (dimension 14)"},
    };
}

BieberbachGroup registry_group(const std::string& name) {
    auto named = [&](BieberbachGroup g) {
        g.name = name;
        return g;
    };
    std::vector<std::string> parts;
    std::stringstream ss(name);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw Error("empty group name");

    if (parts[0] == "torus" && parts.size() == 2)
        return named(BieberbachGroup::build(std::stoi(parts[1]), {}));
    if (name == "remark3.5")
        return named(BieberbachGroup::build(3, {diag_gen({-1, -1, 1}, {2})}));
    if (parts[0] == "mjh" && parts.size() == 4)
        return named(mjh_group(std::stoi(parts[1]), std::stoi(parts[2]), std::stoi(parts[3])));
    if (name == "example4.4:gamma")
        return named(BieberbachGroup::build(
            7, {diag_gen({-1, -1, -1, -1, -1, -1, 1}, {6}),
                diag_gen({-1, -1, 1, 1, 1, 1, 1}, {0, 2, 6})}));
    if (name == "example4.4:gammap")
        return named(BieberbachGroup::build(7, {diag_gen({-1, -1, -1, -1, 1, 1, 1}, {6}),
                                                diag_gen({1, 1, -1, -1, -1, -1, 1}, {1})}));
    if (parts[0] == "table2" && parts.size() == 2) return named(table2_group(parts[1]));
    if (parts[0] == "hw" && parts.size() == 3) {
        if (name == "hw:3:classic") return named(hw_group(3, kHw3));
        if (name == "hw:5:a") return named(hw_group(5, kHw5));
        if (name == "hw:7:a") return named(hw_group(7, kHw7a));
        if (name == "hw:7:b") return named(hw_group(7, kHw7b));
    }
    if (parts[0] == "dhw") {
        std::string base = "hw" + name.substr(3);
        return named(doubling(registry_group(base)));
    }
    throw Error("unknown registry group '" + name + "'");
}

}  // namespace flatdirac
