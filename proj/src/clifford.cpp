#include "flatdirac/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace flatdirac {

// ---------------------------------------------------------------- signed perms

SignedPermMatrix SignedPermMatrix::identity(int n) {
    SignedPermMatrix m;
    m.n = n;
    m.perm.resize(n);
    m.signs.assign(n, 1);
    for (int i = 0; i < n; ++i) m.perm[i] = i;
    return m;
}

bool SignedPermMatrix::is_identity() const {
    for (int i = 0; i < n; ++i)
        if (perm[i] != i || signs[i] != 1) return false;
    return true;
}

bool SignedPermMatrix::is_diagonal() const {
    for (int i = 0; i < n; ++i)
        if (perm[i] != i) return false;
    return true;
}

SignedPermMatrix SignedPermMatrix::compose(const SignedPermMatrix& rhs) const {
    if (n != rhs.n) throw Error("signed permutation dimension mismatch");
    SignedPermMatrix out;
    out.n = n;
    out.perm.resize(n);
    out.signs.resize(n);
    for (int i = 0; i < n; ++i) {
        out.perm[i] = perm[rhs.perm[i]];
        out.signs[i] = rhs.signs[i] * signs[rhs.perm[i]];
    }
    return out;
}

SignedPermMatrix SignedPermMatrix::inverse() const {
    SignedPermMatrix out;
    out.n = n;
    out.perm.resize(n);
    out.signs.resize(n);
    for (int i = 0; i < n; ++i) {
        out.perm[perm[i]] = i;
        out.signs[perm[i]] = signs[i];
    }
    return out;
}

std::vector<Rational> SignedPermMatrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(n, Rational(0));
    for (int i = 0; i < n; ++i) out[perm[i]] += Rational(signs[i]) * v[i];
    return out;
}

int SignedPermMatrix::det() const {
    std::vector<bool> seen(n, false);
    int d = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) d = -d;
    }
    for (int i = 0; i < n; ++i) d *= signs[i];
    return d;
}

int SignedPermMatrix::order() const {
    SignedPermMatrix cur = *this;
    int q = 1;
    while (!cur.is_identity()) {
        cur = compose(cur);
        if (++q > (1 << 16)) throw Error("signed permutation order exceeds 2^16");
    }
    return q;
}

std::vector<SignedPermMatrix::Cycle> SignedPermMatrix::cycles() const {
    std::vector<Cycle> out;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        Cycle c;
        c.sign_product = 1;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            c.idx.push_back(j);
            c.sign_product *= signs[j];
        }
        out.push_back(std::move(c));
    }
    return out;
}

int SignedPermMatrix::fixed_dim() const {
    int d = 0;
    for (const auto& c : cycles())
        if (c.sign_product == 1) ++d;
    return d;
}

int SignedPermMatrix::minus_one_count() const {
    // eigenvalues of a cycle of length c: c-th roots of sign_product... for
    // sign +1: roots of x^c = 1 (one -1 iff c even); for -1: x^c = -1
    // (one -1 iff c odd).
    int cnt = 0;
    for (const auto& c : cycles()) {
        int len = (int)c.idx.size();
        if (c.sign_product == 1 && len % 2 == 0) ++cnt;
        if (c.sign_product == -1 && len % 2 == 1) ++cnt;
    }
    return cnt;
}

std::vector<Rational> SignedPermMatrix::rotation_angles_over_pi() const {
    // Eigenvalues come from x^c = sign per cycle; collect angles in (0, 2)
    // (times pi), pair phi with 2-phi, -1 gives angle 1.
    std::map<Rational, int> ang;  // angle/pi in (0,1], multiplicity as pairs
    int plus_ones = 0;
    for (const auto& c : cycles()) {
        int len = (int)c.idx.size();
        for (int k = 0; k < len; ++k) {
            Rational t = c.sign_product == 1 ? Rational(2 * k, len) : Rational(2 * k + 1, len);
            // t in [0,2): eigenvalue e^{i pi t}
            if (t == Rational(0)) {
                ++plus_ones;
            } else if (t == Rational(1)) {
                ang[Rational(1)] += 1;  // paired below
            } else if (t < Rational(1)) {
                ang[t] += 2;            // counts e^{±i pi t} once paired with 2-t
            }
        }
    }
    std::vector<Rational> out;
    for (auto it = ang.rbegin(); it != ang.rend(); ++it) {
        int pairs = it->first == Rational(1) ? it->second / 2 : it->second / 2;
        if (it->first == Rational(1) && it->second % 2 != 0)
            throw Error("odd multiplicity of eigenvalue -1; matrix not in SO(n)?");
        for (int k = 0; k < pairs; ++k) out.push_back(it->first);
    }
    while ((int)out.size() < n / 2) out.push_back(Rational(0));
    if ((int)out.size() > n / 2) throw Error("cannot pair rotation angles");
    return out;
}

// ---------------------------------------------------------------- torus angles

TorusAngles::TorusAngles(int n_, std::vector<Rational> t, int sign_) : n(n_), sign(sign_) {
    if ((int)t.size() != n_ / 2) throw Error("torus element needs floor(n/2) angles");
    t_over_pi.reserve(t.size());
    for (auto& q : t) {
        Rational r = q;
        // reduce mod 2 (angle mod 2*pi)
        long long f = (r * Rational(1, 2)).floor();
        t_over_pi.push_back(r - Rational(2 * f));
    }
}

std::complex<double> spin_character(const TorusAngles& x, CharKind which) {
    int m = x.m();
    double pc = 1.0, ps = 1.0;
    for (const auto& q : x.t_over_pi) {
        pc *= std::cos(M_PI * q.to_double());
        ps *= std::sin(M_PI * q.to_double());
    }
    if (which == CharKind::Full)
        return std::complex<double>(x.sign * std::ldexp(pc, m), 0.0);
    if (x.n % 2 != 0) throw Error("half-spin characters require even n");
    static const std::complex<double> itab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> ipm = itab[m % 4];
    double s = which == CharKind::Plus ? 1.0 : -1.0;
    return (double)x.sign * std::ldexp(1.0, m - 1) *
           (std::complex<double>(pc, 0.0) + s * ipm * ps);
}

GaussianRational spin_character_exact(const TorusAngles& x, CharKind which) {
    int m = x.m();
    Rational pc(1), ps(1);
    for (const auto& q : x.t_over_pi) {
        Rational r = q * Rational(2);  // angle as multiple of pi/2
        if (!r.is_integer()) throw Error("exact spin character needs angles in (pi/2)Z");
        long long k = ((r.num() % 4) + 4) % 4;
        static const long long ctab[4] = {1, 0, -1, 0};
        static const long long stab[4] = {0, 1, 0, -1};
        pc = pc * Rational(ctab[k]);
        ps = ps * Rational(stab[k]);
    }
    GaussianRational sgn{Rational(x.sign)};
    Rational two_m(1);
    for (int i = 0; i < m; ++i) two_m = two_m * Rational(2);
    if (which == CharKind::Full) return sgn * GaussianRational(two_m * pc);
    if (x.n % 2 != 0) throw Error("half-spin characters require even n");
    GaussianRational term = GaussianRational(pc) + (which == CharKind::Plus
                                                        ? i_power(m) * GaussianRational(ps)
                                                        : -(i_power(m) * GaussianRational(ps)));
    return sgn * GaussianRational(two_m * Rational(1, 2)) * term;
}

// ---------------------------------------------------------------- clifford

std::pair<int, uint32_t> monomial_mul(uint32_t a, uint32_t b) {
    // reorder sign: (-1)^{sum over bits j of b of |{i in a : i > j}|}
    int swaps = 0;
    uint32_t bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        swaps += std::popcount(a >> (j + 1));
    }
    int sq = std::popcount(a & b);  // annihilated pairs, each e_i^2 = -1
    int sign = ((swaps + sq) % 2 == 0) ? 1 : -1;
    return {sign, a ^ b};
}

void CliffordElement::check_dim(int n) {
    if (n < 1 || n > kMaxDim) throw Error("Clifford dimension out of range [1,16]");
}

CliffordElement CliffordElement::scalar(int n, const QSqrt2& c) {
    CliffordElement e(n);
    e.add_term(0, c);
    return e;
}

CliffordElement CliffordElement::basis_vector(int n, int i) {
    if (i < 0 || i >= n) throw Error("basis vector index out of range");
    return monomial(n, 1u << i, QSqrt2(Rational(1)));
}

CliffordElement CliffordElement::monomial(int n, uint32_t mask, const QSqrt2& c) {
    CliffordElement e(n);
    if (mask >> n) throw Error("monomial mask exceeds dimension");
    e.add_term(mask, c);
    return e;
}

void CliffordElement::add_term(uint32_t mask, const QSqrt2& c) {
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(mask, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool CliffordElement::is_even() const {
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) % 2 != 0) return false;
    return true;
}

bool CliffordElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

QSqrt2 CliffordElement::scalar_part() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? QSqrt2() : it->second;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    if (n_ != o.n_) throw Error("Clifford dimension mismatch");
    CliffordElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const { return *this + (-o); }

CliffordElement CliffordElement::operator-() const {
    CliffordElement out(n_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

CliffordElement CliffordElement::scale(const QSqrt2& c) const {
    CliffordElement out(n_);
    if (c.is_zero()) return out;
    for (const auto& [m, cc] : terms_) out.terms_.emplace(m, cc * c);
    return out;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
    if (n_ != o.n_) throw Error("Clifford dimension mismatch");
    CliffordElement out(n_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            auto [s, m] = monomial_mul(ma, mb);
            QSqrt2 c = ca * cb;
            out.add_term(m, s == 1 ? c : -c);
        }
    return out;
}

CliffordElement CliffordElement::reverse() const {
    CliffordElement out(n_);
    for (const auto& [m, c] : terms_) {
        int k = std::popcount(m);
        bool flip = (k * (k - 1) / 2) % 2 != 0;
        out.terms_.emplace(m, flip ? -c : c);
    }
    return out;
}

CliffordElement CliffordElement::pow(int k) const {
    if (k < 0) throw Error("negative Clifford power");
    CliffordElement acc = one(n_);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool CliffordElement::is_spin() const {
    if (!is_even()) return false;
    CliffordElement p = *this * reverse();
    return p.is_scalar() && p.scalar_part() == QSqrt2(Rational(1));
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < n_; ++i)
            if (m & (1u << i)) os << "*e" << (i + 1);
    }
    return os.str();
}

MuImage mu_project(const CliffordElement& g) {
    if (!g.is_spin()) throw Error("mu_project: element not in Spin(n)");
    int n = g.dim();
    CliffordElement ginv = g.reverse();  // inverse of a unit spin element
    MuImage out;
    out.dense.assign(n, std::vector<QSqrt2>(n));
    for (int j = 0; j < n; ++j) {
        CliffordElement img = g * CliffordElement::basis_vector(n, j) * ginv;
        for (const auto& [m, c] : img.terms()) {
            if (std::popcount(m) != 1) throw Error("mu_project: image not a vector");
            out.dense[std::countr_zero(m)][j] = c;
        }
    }
    // signed permutation if each column has a single +-1 entry
    SignedPermMatrix sp;
    sp.n = n;
    sp.perm.assign(n, -1);
    sp.signs.assign(n, 0);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
        int cnt = 0;
        for (int i = 0; i < n; ++i) {
            const QSqrt2& c = out.dense[i][j];
            if (c.is_zero()) continue;
            ++cnt;
            if (c == QSqrt2(Rational(1)))
                sp.perm[j] = i, sp.signs[j] = 1;
            else if (c == QSqrt2(Rational(-1)))
                sp.perm[j] = i, sp.signs[j] = -1;
            else
                ok = false;
        }
        if (cnt != 1) ok = false;
    }
    if (ok) {
        out.is_signed_perm = true;
        out.sp = sp;
    }
    return out;
}

CliffordElement lift_orthogonal(const SignedPermMatrix& b) {
    if (b.det() != +1) throw Error("lift_orthogonal: matrix not in SO(n) (det = -1)");
    int n = b.n;
    // B = P o S with S the sign flips, P the permutation; reflections applied
    // right-to-left, so u(B) = u(P) * u(S).
    CliffordElement u = CliffordElement::one(n);
    const QSqrt2 inv_sqrt2(Rational(0), Rational(1, 2));  // 1/sqrt2 = (1/2)*sqrt2
    for (const auto& cyc : b.cycles()) {
        if (cyc.idx.size() < 2) continue;
        // cycle (c1 c2 ... ck): P = t_{c1 ck} ... t_{c1 c2}, t applied first = rightmost
        std::vector<CliffordElement> refl;
        for (size_t t = cyc.idx.size() - 1; t >= 1; --t) {
            int i = cyc.idx[0], j = cyc.idx[t];
            CliffordElement v =
                (CliffordElement::basis_vector(n, i) - CliffordElement::basis_vector(n, j))
                    .scale(inv_sqrt2);
            refl.push_back(v);
        }
        for (const auto& v : refl) u = u * v;
    }
    for (int i = 0; i < n; ++i)
        if (b.signs[i] == -1) u = u * CliffordElement::basis_vector(n, i);
    // round-trip guard: mu(u) must equal b exactly
    MuImage img = mu_project(u);
    if (!img.is_signed_perm || !(img.sp == b)) throw Error("lift_orthogonal: round trip failed");
    return u;
}

TorusAngles g_h_angles(int n, int h) {
    int m = n / 2;
    if (h < 0 || h > m) throw Error("g_h needs 0 <= h <= floor(n/2)");
    std::vector<Rational> t(m, Rational(0));
    for (int i = 0; i < h; ++i) t[i] = Rational(1, 2);
    return TorusAngles(n, t, 1);
}

}  // namespace flatdirac
