#pragma once

#include <map>
#include <set>
#include <string>

#include "flatdirac/dirac.hpp"
#include "flatdirac/spin_structure.hpp"

namespace flatdirac {

/// One bounded spectral comparison.  "equal" verdicts hold up to the stated
/// cap; "unequal" carries a concrete divergence certificate.
struct KindVerdict {
    std::string kind;
    bool equal = false;
    long long cap = 0;
    std::string certificate;  // empty when equal
};

struct SpinSetting {
    const BieberbachGroup* g;
    SpinStructure eps;
    HolonomyCharacter rho;
};

/// kinds: "dirac", "spinor_laplacian", "functions", "pform:P", "pform:all".
std::vector<KindVerdict> compare_spectra(const SpinSetting& a, const SpinSetting& b,
                                         const std::vector<std::string>& kinds, long long max4,
                                         bool parallel = true);

/// Weak length spectrum: set of squared geodesic lengths up to cap.
std::set<Rational> weak_length_spectrum(const BieberbachGroup& g, const Rational& cap_sq);

/// Marked version: squared length -> number of conjugacy classes.  Exact and
/// complete up to cap (conjugacy handled by coset-orbit reduction modulo
/// (B - Id)Lambda); supported for order <= 2 holonomy elements.
std::map<Rational, long long> marked_length_spectrum(const BieberbachGroup& g,
                                                     const Rational& cap_sq, bool parallel = true);

struct Table1Row {
    std::string label;
    std::string pair_desc;
    std::string dirac, spinor_laplacian, pform, marked_length, weak_length;
    long long shell_cap;
    long long length_cap;
};

/// Recompute the isospectrality table rows (Examples 4.3(i)/(iii), 4.4(i),
/// 4.5(i)/(ii)) with the given caps.
std::vector<Table1Row> table1_report(long long max4 = 100, long long length_cap_sq = 25);

}  // namespace flatdirac
