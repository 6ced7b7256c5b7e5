#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flatdirac/clifford.hpp"
#include "flatdirac/rational.hpp"

namespace flatdirac {

/// Affine isometry B L_b acting by x -> Bx + b.
struct AffineGen {
    SignedPermMatrix mat;
    std::vector<Rational> b;
};

/// Coset representative of Lambda\Gamma: the exact affine product of the BFS
/// word in the generators.  b is NOT reduced mod the lattice, so that lifts
/// epsilon(word) and phases e^{-2 pi i u.b} stay paired to the same element.
struct Coset {
    SignedPermMatrix mat;
    std::vector<Rational> b;
    std::vector<int> word;  // generator indices, leftmost factor first
};

enum class HolonomyType { Trivial, Z2k, CyclicOdd, Other };

/// Bieberbach group over the canonical lattice Z^n with signed-permutation
/// holonomy.  Validated on construction: finite point group, translation
/// lattice exactly Z^n, torsion-free.
class BieberbachGroup {
public:
    static BieberbachGroup build(int n, std::vector<AffineGen> gens);

    int dim() const { return n_; }
    const std::vector<AffineGen>& generators() const { return gens_; }
    const std::vector<Coset>& cosets() const { return cosets_; }  // [0] = identity
    int order() const { return (int)cosets_.size(); }
    bool orientable() const { return orientable_; }
    bool diagonal_type() const { return diagonal_; }
    HolonomyType holonomy_type() const { return type_; }
    int z2k_rank() const;  // k with F = Z_2^k; throws for other types

    int coset_index(const SignedPermMatrix& m) const;  // -1 if absent

    /// Conjugate the whole group by the translation L_c (gens get
    /// b + (B - Id)c); same abstract group, shifted model.
    BieberbachGroup conjugate_by_translation(const std::vector<Rational>& c) const;

    std::string name;  // optional registry label

private:
    int n_ = 0;
    std::vector<AffineGen> gens_;
    std::vector<Coset> cosets_;
    bool orientable_ = false;
    bool diagonal_ = false;
    HolonomyType type_ = HolonomyType::Other;
};

/// Affine product (a then applied after b? composition g1 * g2 acts by
/// x -> g1(g2(x))).
AffineGen affine_mul(const AffineGen& g1, const AffineGen& g2);

struct PointGroupEntry {
    int coset;
    int n_B;
    int order;
    bool in_F1;
};
std::vector<PointGroupEntry> point_group_summary(const BieberbachGroup& g);

/// Lattice character delta: Lambda -> {+-1}, one sign per basis vector.
using LatticeCharacter = std::vector<int>;

/// delta evaluated on an integer lattice vector.
int character_on(const LatticeCharacter& delta, const std::vector<Rational>& lambda);

/// Is delta invariant under every holonomy matrix (condition (eps2))?
bool character_b_invariant(const LatticeCharacter& delta, const BieberbachGroup& g);

/// One shell of the B-fixed part of the shifted dual lattice.
struct ShellCount {
    long long key4;       // 4 mu^2
    long long count;      // |(Lambda*_{eps,mu})^B|
    bool exact;           // e-sum representable in Q(i)
    GaussianRational e_sum;
    std::complex<double> e_approx;  // always filled
};

/// Weighted count over the B-fixed shell; sign_fn (if given) multiplies each
/// summand by sign_fn(u) in {+-1}.
ShellCount count_shifted_shell(const BieberbachGroup& g, const LatticeCharacter& delta,
                               const Coset& coset, long long key4,
                               const std::function<int(const std::vector<Rational>&)>& sign_fn = {});

/// All shells 0..max4 for one coset, by convolution over the cycle structure.
std::vector<ShellCount> theta_table(const BieberbachGroup& g, const LatticeCharacter& delta,
                                    const Coset& coset, long long max4);

/// theta_table for every coset; parallel across cosets, deterministic output.
std::vector<std::vector<ShellCount>> theta_tables(const BieberbachGroup& g,
                                                  const LatticeCharacter& delta, long long max4,
                                                  bool parallel = true);

/// Enumerate the B-fixed vectors of one shell (exact coordinates).
void for_each_fixed_shell_vector(const BieberbachGroup& g, const LatticeCharacter& delta,
                                 const Coset& coset, long long key4,
                                 const std::function<void(const std::vector<Rational>&)>& fn);

/// Allocation-free variant: appends the vectors of the shell as n doubles
/// each to a flat buffer (for the float-precision oracle paths).
void collect_fixed_shell_vectors_f64(const BieberbachGroup& g, const LatticeCharacter& delta,
                                     const Coset& coset, long long key4,
                                     std::vector<double>& flat);

/// Echelonized integer lattice spanned by given columns; membership tests and
/// canonical residues.
class IntLattice {
public:
    IntLattice() = default;
    static IntLattice from_columns(int n, std::vector<std::vector<long long>> cols);
    bool contains(const std::vector<long long>& v) const;
    std::vector<long long> reduce(const std::vector<long long>& v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, std::vector<long long>>> pivots_;  // (row, column)
};

long long enumeration_budget_cap();  // hard cap on max4 for theta tables

}  // namespace flatdirac
