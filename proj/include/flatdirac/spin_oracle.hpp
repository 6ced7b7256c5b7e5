#pragma once

#include <complex>
#include <vector>

#include "flatdirac/clifford.hpp"
#include "flatdirac/lattice.hpp"
#include "flatdirac/spin_structure.hpp"

namespace flatdirac {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major, for the 2^m-dimensional spinor space.
struct CMat {
    int d = 0;
    std::vector<cplx> a;

    CMat() = default;
    explicit CMat(int dim) : d(dim), a((size_t)dim * dim, cplx(0, 0)) {}
    cplx& at(int i, int j) { return a[(size_t)i * d + j]; }
    const cplx& at(int i, int j) const { return a[(size_t)i * d + j]; }
    static CMat eye(int dim);
    CMat mul(const CMat& o) const;
    CMat add(const CMat& o) const;
    CMat scale(cplx s) const;
    cplx trace() const;
};

/// Explicit spin representation by the tensor-product construction;
/// anticommutation and skew-Hermitianity are machine-checked on build.
class SpinRep {
public:
    explicit SpinRep(int n);

    int n() const { return n_; }
    int space_dim() const { return dim_; }
    const CMat& L(int i) const { return L_[i]; }  // L(e_{i+1})

    CMat evaluate(const CliffordElement& g) const;
    CMat torus_element(const TorusAngles& x) const;

    /// Projector onto S_u^{+-}: eigenspace of L(u) with eigenvalue -+ i|u|.
    CMat su_projector(const std::vector<Rational>& u, int pm) const;

    /// Half-spin projector for n even: eigenspace of L(g_m) with eigenvalue
    /// +- i^m.
    CMat half_spin_projector(int pm) const;

private:
    int n_, dim_;
    std::vector<CMat> L_;
};

SpinRep build_spin_rep(int n);  // 2 <= n <= 8

/// Brute-force twisted Dirac multiplicities from the trace projection
/// formula; chi_rho given per coset index.
std::pair<long long, long long> brute_multiplicity(const BieberbachGroup& g,
                                                   const SpinStructure& eps,
                                                   const std::vector<cplx>& chi_rho, long long key4,
                                                   bool parallel = true);

/// Comparison sign sigma(u, x_gamma) via restricted traces (n odd).
int sigma_sign(const SpinRep& rep, const std::vector<Rational>& u, const TorusAngles& x_gamma,
               const CliffordElement& lift);

}  // namespace flatdirac
