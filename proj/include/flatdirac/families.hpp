#pragma once

#include <map>
#include <string>
#include <vector>

#include "flatdirac/lattice.hpp"

namespace flatdirac {

/// Member M_{j,h} of the Z_2 family in dimension n.
struct FamilyMember {
    int j, h, l;
    BieberbachGroup group;
};

/// Gamma_{j,h} = < B_{j,h} L_{e_n/2}, Z^n >,
/// B_{j,h} = diag(J,...,J, -1,...,-1, 1,...,1) with j J-blocks and h signs.
BieberbachGroup mjh_group(int n, int j, int h);

/// The full family (0 <= j <= (n-1)/2, 0 <= h < n-2j, j+h != 0); optionally
/// only the orientable members (j+h even).
std::vector<FamilyMember> z2_family(int n, bool orientable_only = false);

/// Hantzsche-Wendt group from a half-translation pattern: row i gives the
/// coordinates of b_i carrying 1/2 (generator B_i fixes e_i, negates the
/// rest); i = 0..n-2.
BieberbachGroup hw_group(int n, const std::vector<std::vector<int>>& half_coords);

/// Pattern file: one row per generator, n space-separated 0/1 flags.
std::vector<std::vector<int>> load_hw_pattern(const std::string& path, int n);

/// Doubling: dGamma = < dB L_{(b,b)}, Z^{2n} > with dB = diag(B,B).
BieberbachGroup doubling(const BieberbachGroup& g);

/// Sunada numbers c_{d,t} of a diagonal-type group.
std::map<std::pair<int, int>, long long> sunada_numbers(const BieberbachGroup& g);

/// Built-in example registry (named groups used across the test tables).
std::vector<std::pair<std::string, std::string>> registry_list();  // (name, description)
BieberbachGroup registry_group(const std::string& name);

}  // namespace flatdirac
