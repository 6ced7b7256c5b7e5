#pragma once

#include <vector>

#include "flatdirac/clifford.hpp"
#include "flatdirac/lattice.hpp"

namespace flatdirac {

/// Spin structure on M_Gamma, encoded against the canonical lifts u(B_i):
/// epsilon(L_{e_i}) = delta[i], epsilon(gamma_i) = sigma[i] * u(B_i).
struct SpinStructure {
    LatticeCharacter delta;
    std::vector<int> sigma;

    bool trivial_type() const;
    int j_minus() const;  // |J_eps^-|
    std::vector<Rational> u_eps() const;
};

/// All spin structures of Gamma, deterministic order (delta lexicographic
/// with +1 first, sigma nested inside).  Empty when none exist.
/// Holonomy F = Z_2^k or cyclic of odd order.
std::vector<SpinStructure> enumerate_spin_structures(const BieberbachGroup& g);

struct StructureProps {
    bool trivial_type;
    int j_minus;
    std::vector<Rational> u_eps;
};
StructureProps structure_props(const SpinStructure& eps);

/// epsilon evaluated on a coset representative (the exact element B L_b the
/// group stores), as an exact Clifford element.
CliffordElement spin_on_coset(const BieberbachGroup& g, const SpinStructure& eps, const Coset& c);

/// Validate the homomorphism property of eps on random words (testing aid):
/// evaluates eps two ways on `trials` random generator words.
bool recheck_homomorphism(const BieberbachGroup& g, const SpinStructure& eps, int trials,
                          unsigned seed = 1);

}  // namespace flatdirac
