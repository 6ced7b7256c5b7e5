#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "flatdirac/rational.hpp"

namespace flatdirac {

constexpr int kMaxDim = 16;

/// Orthogonal map e_i -> signs[i] * e_{perm[i]} (0-based indices).
struct SignedPermMatrix {
    int n = 0;
    std::vector<int> perm;
    std::vector<int> signs;

    static SignedPermMatrix identity(int n);
    bool is_identity() const;
    bool is_diagonal() const;

    SignedPermMatrix compose(const SignedPermMatrix& rhs) const;  // this after rhs
    SignedPermMatrix inverse() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    int det() const;
    int order() const;                 // throws past 2^16
    int fixed_dim() const;             // n_B = dim ker(B - Id)
    int minus_one_count() const;       // multiplicity of eigenvalue -1

    /// Cycles of the underlying permutation, each with its sign product,
    /// listed in ascending order of smallest member.
    struct Cycle {
        std::vector<int> idx;
        int sign_product;
    };
    std::vector<Cycle> cycles() const;

    /// Rotation angles (as multiples of pi) of the x_0-normal form,
    /// sorted descending; length floor(n/2), padded with zeros.
    /// Requires det = +1 when n is odd... (general: pairs up non-(+1)
    /// eigenvalues; throws if they cannot be paired).
    std::vector<Rational> rotation_angles_over_pi() const;

    bool operator==(const SignedPermMatrix& o) const { return perm == o.perm && signs == o.signs; }
    bool operator<(const SignedPermMatrix& o) const {
        if (perm != o.perm) return perm < o.perm;
        return signs < o.signs;
    }
};

/// Element of the maximal torus of Spin(n) up to sign:
/// sign * x(t_1,...,t_m), angles stored as rational multiples of pi,
/// reduced mod 2.
struct TorusAngles {
    int n = 0;
    std::vector<Rational> t_over_pi;  // m = floor(n/2) entries
    int sign = 1;

    TorusAngles() = default;
    TorusAngles(int n_, std::vector<Rational> t, int sign_ = 1);

    int m() const { return n / 2; }
};

enum class CharKind { Full, Plus, Minus };

/// Character of the (half-)spin representation on a torus element.
std::complex<double> spin_character(const TorusAngles& x, CharKind which);

/// Exact value when every angle is a multiple of pi/2 (throws otherwise).
GaussianRational spin_character_exact(const TorusAngles& x, CharKind which);

/// Sparse element of Cl(n) over Q(sqrt 2); monomials as bitmasks.
class CliffordElement {
public:
    CliffordElement() = default;
    explicit CliffordElement(int n) : n_(n) { check_dim(n); }

    static CliffordElement scalar(int n, const QSqrt2& c);
    static CliffordElement one(int n) { return scalar(n, QSqrt2(Rational(1))); }
    static CliffordElement basis_vector(int n, int i);  // e_{i+1}, 0-based i
    static CliffordElement monomial(int n, uint32_t mask, const QSqrt2& c);

    int dim() const { return n_; }
    const std::map<uint32_t, QSqrt2>& terms() const { return terms_; }
    void add_term(uint32_t mask, const QSqrt2& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_even() const;
    bool is_scalar() const;
    QSqrt2 scalar_part() const;

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator*(const CliffordElement& o) const;
    CliffordElement operator-() const;
    CliffordElement scale(const QSqrt2& c) const;
    CliffordElement reverse() const;
    CliffordElement pow(int k) const;

    bool operator==(const CliffordElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const CliffordElement& o) const { return !(*this == o); }

    /// g in Spin(n): even, and g * reverse(g) = 1.
    bool is_spin() const;

    std::string str() const;

private:
    static void check_dim(int n);
    int n_ = 0;
    std::map<uint32_t, QSqrt2> terms_;
};

/// Sign and resulting mask of e_A * e_B under e_i e_j = -e_j e_i, e_i^2 = -1.
std::pair<int, uint32_t> monomial_mul(uint32_t a, uint32_t b);

/// Image of a Spin element under the covering map mu (conjugation on each e_i).
/// Exact; returned as signed permutation when possible, dense Q(sqrt2) matrix
/// otherwise.
struct MuImage {
    bool is_signed_perm = false;
    SignedPermMatrix sp;
    std::vector<std::vector<QSqrt2>> dense;  // dense[i][j] = coefficient of e_{i+1} in mu(g)(e_{j+1})
};
MuImage mu_project(const CliffordElement& g);

/// Canonical lift u(B) in Spin(n) with mu(u(B)) = B; deterministic reflection
/// factorization (cycles by ascending minimum, sign flips ascending).
/// Requires det B = +1.
CliffordElement lift_orthogonal(const SignedPermMatrix& b);

/// g_h = e_1 ... e_{2h} as torus angles (pi/2 repeated h times).
TorusAngles g_h_angles(int n, int h);

}  // namespace flatdirac
