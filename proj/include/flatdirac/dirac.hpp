#pragma once

#include <functional>
#include <map>
#include <optional>

#include "flatdirac/lattice.hpp"
#include "flatdirac/spin_structure.hpp"

namespace flatdirac {

/// Character data of the twisting representation rho (rho trivial on the
/// lattice); the multiplicity formulas consume chi_rho and d_rho only.
struct HolonomyCharacter {
    long long d_rho = 1;
    std::vector<Rational> values;  // one per coset, values[0] = d_rho

    static HolonomyCharacter trivial(const BieberbachGroup& g);
    /// One-dimensional character from its values on the generators.
    static HolonomyCharacter from_gen_values(const BieberbachGroup& g,
                                             const std::vector<int>& gen_values);
    std::vector<std::complex<double>> to_complex() const;
};

/// The one holonomy element that can break spectral symmetry (Theorem 3.2 ii).
struct AsymmetryData {
    int coset = -1;
    std::vector<Rational> f;  // Lambda^B = Z f
    Rational f_norm_sq;
    int sigma_gamma = 1;
    int r = 0;  // n = 4r+3
    Rational chi_gamma;
};

struct SpectrumTable {
    int n = 0;
    long long max_key = 0;
    std::map<long long, std::pair<long long, long long>> entries;  // 4mu^2 -> (d+, d-)
    long long d0 = 0;
    std::optional<std::pair<long long, long long>> d0_pm;  // n even
    bool asymmetric = false;
    std::optional<AsymmetryData> asym;
};

using SigmaProvider =
    std::function<int(const std::vector<Rational>& u, const TorusAngles& x_gamma,
                      const CliffordElement& lift)>;

/// sigma(u, x_gamma) through the matrix oracle (requires n <= 8).
SigmaProvider oracle_sigma_provider(int n);

/// Dirac spectrum of the torus Z^n (Proposition: d+- = 2^{m-1} d_rho |shell|).
SpectrumTable torus_spectrum(const BieberbachGroup& g, const SpinStructure& eps,
                             const HolonomyCharacter& rho, long long max4);

/// Z_2^k closed form, with asymmetry detection and the mu_j = (j+1/2)/|f|
/// progression when present.
SpectrumTable z2k_spectrum(const BieberbachGroup& g, const SpinStructure& eps,
                           const HolonomyCharacter& rho, long long max4, bool parallel = true);

std::optional<AsymmetryData> detect_z2k_asymmetry(const BieberbachGroup& g,
                                                  const SpinStructure& eps,
                                                  const HolonomyCharacter& rho);

/// General multiplicity formula (trace averaging over cosets), independent of
/// the Z_2^k shortcut; supported for holonomy elements of order <= 2.
std::pair<long long, long long> general_multiplicity(const BieberbachGroup& g,
                                                     const SpinStructure& eps,
                                                     const HolonomyCharacter& rho, long long key4,
                                                     const SigmaProvider& sigma = {});

/// dim of harmonic spinors (0 unless eps restricts trivially to the lattice).
long long harmonic_spinors(const BieberbachGroup& g, const SpinStructure& eps,
                           const HolonomyCharacter& rho);

/// Spinor Laplacian multiplicities d = d+ + d-, keyed by 4 mu^2.
std::map<long long, long long> spinor_laplacian_spectrum(const BieberbachGroup& g,
                                                         const SpinStructure& eps,
                                                         const HolonomyCharacter& rho,
                                                         long long max4, bool parallel = true);

/// Dispatch on holonomy type (torus / Z_2^k).
SpectrumTable dirac_spectrum(const BieberbachGroup& g, const SpinStructure& eps,
                             const HolonomyCharacter& rho, long long max4, bool parallel = true);

}  // namespace flatdirac
