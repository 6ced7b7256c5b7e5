#include "flatdirac/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flatdirac {

namespace {

std::vector<Rational> zero_vec(int n) { return std::vector<Rational>(n, Rational(0)); }

bool is_integral(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (!x.is_integer()) return false;
    return true;
}

void check_denominator(const Rational& x) {
    long long d = x.den();
    if (d == 1 || d == 2 || d == 4) return;
    for (long long q = 2; q * q <= d; ++q)
        if (d % q == 0) throw Error("translation denominator " + std::to_string(d) + " unsupported");
}

}  // namespace

AffineGen affine_mul(const AffineGen& g1, const AffineGen& g2) {
    AffineGen out;
    out.mat = g1.mat.compose(g2.mat);
    out.b = g1.mat.apply(g2.b);
    for (size_t i = 0; i < out.b.size(); ++i) out.b[i] += g1.b[i];
    return out;
}

BieberbachGroup BieberbachGroup::build(int n, std::vector<AffineGen> gens) {
    if (n < 1 || n > kMaxDim) throw Error("dimension out of range [1,16]");
    BieberbachGroup g;
    g.n_ = n;
    for (auto& gen : gens) {
        if (gen.mat.n != n || (int)gen.b.size() != n) throw Error("generator dimension mismatch");
        for (const auto& x : gen.b) check_denominator(x);
    }
    g.gens_ = std::move(gens);

    // BFS closure of the point group, layer by layer, generators in order.
    Coset id{SignedPermMatrix::identity(n), zero_vec(n), {}};
    g.cosets_.push_back(id);
    std::map<SignedPermMatrix, int> index;
    index[id.mat] = 0;
    std::deque<int> frontier{0};
    while (!frontier.empty()) {
        int ci = frontier.front();
        frontier.pop_front();
        for (int gi = 0; gi < (int)g.gens_.size(); ++gi) {
            Coset cur = g.cosets_[ci];
            AffineGen prod = affine_mul({g.gens_[gi].mat, g.gens_[gi].b},
                                        {cur.mat, cur.b});
            auto it = index.find(prod.mat);
            if (it == index.end()) {
                if ((int)g.cosets_.size() >= (1 << 16)) throw Error("point group exceeds 2^16 elements");
                Coset c;
                c.mat = prod.mat;
                c.b = prod.b;
                c.word = {gi};
                c.word.insert(c.word.end(), cur.word.begin(), cur.word.end());
                index[c.mat] = (int)g.cosets_.size();
                g.cosets_.push_back(std::move(c));
                frontier.push_back((int)g.cosets_.size() - 1);
            }
        }
    }

    // translation lattice must be exactly Z^n: every generator*rep product
    // lands in a known coset with integral translation difference
    for (const auto& c : g.cosets_) {
        for (const auto& gen : g.gens_) {
            AffineGen prod = affine_mul({gen.mat, gen.b}, {c.mat, c.b});
            const Coset& rep = g.cosets_[index.at(prod.mat)];
            std::vector<Rational> diff(n);
            for (int i = 0; i < n; ++i) diff[i] = prod.b[i] - rep.b[i];
            if (!is_integral(diff))
                throw Error("generators force non-integral translations; lattice is not Z^n");
        }
    }

    // torsion-freeness: for gamma = B L_b of order q, gamma^q = L_t with
    // t = sum B^i b; torsion in the coset iff t lies in (sum B^i) Lambda
    for (size_t ci = 1; ci < g.cosets_.size(); ++ci) {
        const Coset& c = g.cosets_[ci];
        int q = c.mat.order();
        std::vector<Rational> t = zero_vec(n);
        std::vector<std::vector<long long>> ncols(n, std::vector<long long>(n, 0));
        SignedPermMatrix power = SignedPermMatrix::identity(n);
        for (int i = 0; i < q; ++i) {
            auto bi = power.apply(c.b);
            for (int r = 0; r < n; ++r) t[r] += bi[r];
            for (int k = 0; k < n; ++k) ncols[power.perm[k]][k] += power.signs[k];
            power = c.mat.compose(power);
        }
        if (!is_integral(t)) throw Error("closure failure: gamma^q translation not in lattice");
        std::vector<std::vector<long long>> cols(n, std::vector<long long>(n));
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < n; ++r) cols[k][r] = ncols[r][k];
        IntLattice nl = IntLattice::from_columns(n, cols);
        std::vector<long long> ti(n);
        for (int r = 0; r < n; ++r) ti[r] = t[r].num();
        if (nl.contains(ti)) {
            std::string w = "torsion detected at coset (word:";
            for (int wi : c.word) w += " g" + std::to_string(wi);
            throw Error(w + " )");
        }
        if (c.mat.fixed_dim() < 1) throw Error("holonomy element with n_B = 0");
    }

    g.orientable_ = true;
    g.diagonal_ = true;
    for (const auto& c : g.cosets_) {
        if (c.mat.det() != 1) g.orientable_ = false;
        if (!c.mat.is_diagonal()) g.diagonal_ = false;
    }

    std::size_t f = g.cosets_.size();
    bool exp2 = true;
    for (const auto& c : g.cosets_)
        if (!c.mat.is_identity() && c.mat.order() != 2) exp2 = false;
    if (f == 1)
        g.type_ = HolonomyType::Trivial;
    else if (exp2 && (f & (f - 1)) == 0)
        g.type_ = HolonomyType::Z2k;
    else {
        bool prime = f >= 3 && f % 2 == 1;
        for (std::size_t q = 3; q * q <= f && prime; q += 2)
            if (f % q == 0) prime = false;
        g.type_ = prime ? HolonomyType::CyclicOdd : HolonomyType::Other;
    }
    return g;
}

int BieberbachGroup::z2k_rank() const {
    if (type_ == HolonomyType::Trivial) return 0;
    if (type_ != HolonomyType::Z2k) throw Error("holonomy group is not Z_2^k");
    int k = 0;
    std::size_t f = cosets_.size();
    while (f > 1) {
        f >>= 1;
        ++k;
    }
    return k;
}

int BieberbachGroup::coset_index(const SignedPermMatrix& m) const {
    for (size_t i = 0; i < cosets_.size(); ++i)
        if (cosets_[i].mat == m) return (int)i;
    return -1;
}

BieberbachGroup BieberbachGroup::conjugate_by_translation(const std::vector<Rational>& c) const {
    std::vector<AffineGen> gens = gens_;
    for (auto& g : gens) {
        auto bc = g.mat.apply(c);
        for (int i = 0; i < n_; ++i) g.b[i] += bc[i] - c[i];
    }
    return build(n_, gens);
}

std::vector<PointGroupEntry> point_group_summary(const BieberbachGroup& g) {
    std::vector<PointGroupEntry> out;
    for (int i = 0; i < g.order(); ++i) {
        const auto& c = g.cosets()[i];
        PointGroupEntry e;
        e.coset = i;
        e.n_B = c.mat.fixed_dim();
        e.order = c.mat.order();
        e.in_F1 = !c.mat.is_identity() && e.n_B == 1;
        out.push_back(e);
    }
    return out;
}

int character_on(const LatticeCharacter& delta, const std::vector<Rational>& lambda) {
    int v = 1;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (!lambda[i].is_integer()) throw Error("character evaluated off the lattice");
        if (lambda[i].num() % 2 != 0 && delta[i] < 0) v = -v;
    }
    return v;
}

bool character_b_invariant(const LatticeCharacter& delta, const BieberbachGroup& g) {
    for (const auto& gen : g.generators())
        for (const auto& cyc : gen.mat.cycles())
            for (size_t r = 1; r < cyc.idx.size(); ++r)
                if (delta[cyc.idx[r]] != delta[cyc.idx[0]]) return false;
    return true;
}

// ------------------------------------------------------------- shells

namespace {

/// One free parameter of the B-fixed part of Lambda* + u_eps: coordinates of
/// a positive cycle all equal to +-x with x in Z or Z+1/2.
struct FixedParam {
    std::vector<int> coords;
    std::vector<int> rel_sign;
    long long weight;  // norm^2 contribution = weight * x^2
    bool shifted;
    Rational beta;  // u.b contribution = x * beta
};

struct FixedSublattice {
    bool empty = false;
    std::vector<FixedParam> params;
};

FixedSublattice fixed_sublattice(const LatticeCharacter& delta, const Coset& coset) {
    FixedSublattice out;
    for (const auto& cyc : coset.mat.cycles()) {
        int d0 = delta[cyc.idx[0]];
        for (int i : cyc.idx)
            if (delta[i] != d0) {
                out.empty = true;  // shift pattern incompatible with B-fixed vectors
                return out;
            }
        if (cyc.sign_product != 1) {
            if (d0 < 0) {
                out.empty = true;  // forced u=0 impossible on shifted coordinates
                return out;
            }
            continue;
        }
        FixedParam p;
        p.weight = (long long)cyc.idx.size();
        p.shifted = d0 < 0;
        p.beta = Rational(0);
        int rs = 1;
        // walk the cycle: u_{pi(i)} = s_i u_i
        int i = cyc.idx[0];
        for (size_t r = 0; r < cyc.idx.size(); ++r) {
            p.coords.push_back(i);
            p.rel_sign.push_back(rs);
            p.beta += Rational(rs) * coset.b[i];
            rs *= coset.mat.signs[i];
            i = coset.mat.perm[i];
        }
        out.params.push_back(std::move(p));
    }
    return out;
}

bool phases_exact(const FixedSublattice& fs) {
    for (const auto& p : fs.params) {
        long long d = p.beta.den();
        if (d > 4) return false;
        if (d == 4 && p.shifted) return false;  // odd y gives eighth phases
        if (d == 4 && !p.shifted) continue;     // y even: y*beta/2 quarter-integral
    }
    return true;
}

}  // namespace

long long enumeration_budget_cap() { return 1000000; }

ShellCount count_shifted_shell(const BieberbachGroup& g, const LatticeCharacter& delta,
                               const Coset& coset, long long key4,
                               const std::function<int(const std::vector<Rational>&)>& sign_fn) {
    if ((int)delta.size() != g.dim()) throw Error("character dimension mismatch");
    if (key4 < 0) throw Error("negative shell key");
    FixedSublattice fs = fixed_sublattice(delta, coset);
    ShellCount out{key4, 0, true, GaussianRational(), {0, 0}};
    if (fs.empty) return out;

    int np = (int)fs.params.size();
    std::vector<long long> ys(np, 0);
    bool exact = phases_exact(fs);
    GaussianRational acc_e;
    std::complex<double> acc_a{0, 0};
    long long count = 0;

    // depth-first over integer parameters y_c (u = y/2 on the cycle), with
    // parity fixed by the shift
    std::function<void(int, long long)> rec = [&](int k, long long rem) {
        if (k == np) {
            if (rem != 0) return;
            ++count;
            int s = 1;
            if (sign_fn) {
                std::vector<Rational> u(g.dim(), Rational(0));
                for (int c = 0; c < np; ++c)
                    for (size_t r = 0; r < fs.params[c].coords.size(); ++r)
                        u[fs.params[c].coords[r]] =
                            Rational(fs.params[c].rel_sign[r]) * Rational(ys[c], 2);
                s = sign_fn(u);
                if (s != 1 && s != -1) throw Error("sign_fn must return +-1");
            }
            Rational t(0);
            double td = 0;
            for (int c = 0; c < np; ++c) {
                Rational term = Rational(ys[c], 2) * fs.params[c].beta;
                td += term.to_double();
                if (exact) t += term;
            }
            if (exact) {
                GaussianRational ph = quarter_phase(t);
                acc_e += (s == 1) ? ph : -ph;
            }
            std::complex<double> ph(std::cos(-2 * M_PI * td), std::sin(-2 * M_PI * td));
            acc_a += (double)s * ph;
            return;
        }
        const auto& p = fs.params[k];
        long long parity = p.shifted ? 1 : 0;
        for (long long y = parity;; y += 2) {
            long long c = p.weight * y * y;
            if (c > rem) break;
            ys[k] = y;
            rec(k + 1, rem - c);
            if (y != 0) {
                ys[k] = -y;
                rec(k + 1, rem - c);
            }
        }
        ys[k] = 0;
    };
    rec(0, key4);
    out.count = count;
    out.exact = exact;
    out.e_sum = acc_e;
    out.e_approx = acc_a;
    return out;
}

void for_each_fixed_shell_vector(const BieberbachGroup& g, const LatticeCharacter& delta,
                                 const Coset& coset, long long key4,
                                 const std::function<void(const std::vector<Rational>&)>& fn) {
    FixedSublattice fs = fixed_sublattice(delta, coset);
    if (fs.empty) return;
    int np = (int)fs.params.size();
    std::vector<long long> ys(np, 0);
    std::function<void(int, long long)> rec = [&](int k, long long rem) {
        if (k == np) {
            if (rem != 0) return;
            std::vector<Rational> u(g.dim(), Rational(0));
            for (int c = 0; c < np; ++c)
                for (size_t r = 0; r < fs.params[c].coords.size(); ++r)
                    u[fs.params[c].coords[r]] =
                        Rational(fs.params[c].rel_sign[r]) * Rational(ys[c], 2);
            fn(u);
            return;
        }
        const auto& p = fs.params[k];
        long long parity = p.shifted ? 1 : 0;
        for (long long y = parity;; y += 2) {
            long long c = p.weight * y * y;
            if (c > rem) break;
            ys[k] = y;
            rec(k + 1, rem - c);
            if (y != 0) {
                ys[k] = -y;
                rec(k + 1, rem - c);
            }
        }
    };
    rec(0, key4);
}

void collect_fixed_shell_vectors_f64(const BieberbachGroup& g, const LatticeCharacter& delta,
                                     const Coset& coset, long long key4,
                                     std::vector<double>& flat) {
    FixedSublattice fs = fixed_sublattice(delta, coset);
    if (fs.empty) return;
    int n = g.dim();
    int np = (int)fs.params.size();
    std::vector<long long> ys(np, 0);
    std::vector<double> u(n, 0.0);
    std::function<void(int, long long)> rec = [&](int k, long long rem) {
        if (k == np) {
            if (rem != 0) return;
            std::fill(u.begin(), u.end(), 0.0);
            for (int c = 0; c < np; ++c)
                for (size_t r = 0; r < fs.params[c].coords.size(); ++r)
                    u[fs.params[c].coords[r]] = fs.params[c].rel_sign[r] * (double)ys[c] / 2.0;
            flat.insert(flat.end(), u.begin(), u.end());
            return;
        }
        const auto& p = fs.params[k];
        long long parity = p.shifted ? 1 : 0;
        for (long long y = parity;; y += 2) {
            long long c = p.weight * y * y;
            if (c > rem) break;
            ys[k] = y;
            rec(k + 1, rem - c);
            if (y != 0) {
                ys[k] = -y;
                rec(k + 1, rem - c);
            }
        }
    };
    rec(0, key4);
}

std::vector<ShellCount> theta_table(const BieberbachGroup& g, const LatticeCharacter& delta,
                                    const Coset& coset, long long max4) {
    if ((int)delta.size() != g.dim()) throw Error("character dimension mismatch");
    if (max4 < 0 || max4 > enumeration_budget_cap())
        throw Error("shell cap exceeds enumeration budget");
    FixedSublattice fs = fixed_sublattice(delta, coset);
    size_t sz = (size_t)max4 + 1;
    std::vector<long long> cnt(sz, 0);
    std::vector<GaussianRational> se(sz);
    std::vector<std::complex<double>> sa(sz, {0, 0});
    bool exact = phases_exact(fs);
    if (!fs.empty) {
        cnt[0] = 1;
        se[0] = GaussianRational(Rational(1));
        sa[0] = {1, 0};
        for (const auto& p : fs.params) {
            // one-dimensional series of this parameter
            std::vector<long long> c1(sz, 0);
            std::vector<GaussianRational> e1(sz);
            std::vector<std::complex<double>> a1(sz, {0, 0});
            long long parity = p.shifted ? 1 : 0;
            for (long long y = parity;; y += 2) {
                long long key = p.weight * y * y;
                if (key > max4) break;
                int reps = y == 0 ? 1 : 2;
                for (int rr = 0; rr < reps; ++rr) {
                    long long s = rr == 0 ? y : -y;
                    Rational t = Rational(s, 2) * p.beta;
                    c1[key] += 1;
                    if (exact) e1[key] += quarter_phase(t);
                    double td = t.to_double();
                    a1[key] += std::complex<double>(std::cos(-2 * M_PI * td),
                                                    std::sin(-2 * M_PI * td));
                }
            }
            // convolve
            std::vector<long long> cn(sz, 0);
            std::vector<GaussianRational> en(sz);
            std::vector<std::complex<double>> an(sz, {0, 0});
            for (size_t i = 0; i < sz; ++i) {
                if (cnt[i] == 0 && se[i].is_zero() && std::abs(sa[i]) == 0) continue;
                for (size_t j = 0; i + j < sz; ++j) {
                    if (c1[j] == 0) continue;
                    cn[i + j] += cnt[i] * c1[j];
                    if (exact) en[i + j] += se[i] * e1[j];
                    an[i + j] += sa[i] * a1[j];
                }
            }
            cnt.swap(cn);
            se.swap(en);
            sa.swap(an);
        }
    }
    std::vector<ShellCount> out;
    out.reserve(sz);
    for (size_t k = 0; k < sz; ++k) {
        ShellCount s{(long long)k, cnt[k], exact, se[k], sa[k]};
        if (exact) s.e_approx = {se[k].re.to_double(), se[k].im.to_double()};
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<ShellCount>> theta_tables(const BieberbachGroup& g,
                                                  const LatticeCharacter& delta, long long max4,
                                                  bool parallel) {
    int nc = g.order();
    std::vector<std::vector<ShellCount>> out(nc);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = 0; i < nc; ++i) out[i] = theta_table(g, delta, g.cosets()[i], max4);
    (void)parallel;
    return out;
}

// ------------------------------------------------------------- IntLattice

IntLattice IntLattice::from_columns(int n, std::vector<std::vector<long long>> cols) {
    IntLattice L;
    L.n_ = n;
    std::vector<std::vector<long long>> work;
    for (auto& c : cols) {
        bool nz = false;
        for (long long x : c) nz |= x != 0;
        if (nz) work.push_back(std::move(c));
    }
    for (int row = 0; row < n; ++row) {
        while (true) {
            std::vector<std::vector<long long>*> nzc;
            for (auto& c : work)
                if (c[row] != 0) nzc.push_back(&c);
            if (nzc.size() <= 1) break;
            std::sort(nzc.begin(), nzc.end(), [&](auto* a, auto* b) {
                return std::llabs((*a)[row]) < std::llabs((*b)[row]);
            });
            auto& a = *nzc[0];
            auto& b = *nzc[1];
            long long q = b[row] / a[row];
            for (int r = 0; r < n; ++r) b[r] -= q * a[r];
        }
        for (size_t i = 0; i < work.size(); ++i) {
            if (work[i][row] != 0) {
                auto col = work[i];
                if (col[row] < 0)
                    for (auto& x : col) x = -x;
                L.pivots_.emplace_back(row, col);
                work.erase(work.begin() + i);
                break;
            }
        }
    }
    return L;
}

std::vector<long long> IntLattice::reduce(const std::vector<long long>& v) const {
    std::vector<long long> r = v;
    for (const auto& [row, col] : pivots_) {
        long long p = col[row];
        long long q = r[row] >= 0 ? r[row] / p : -((-r[row] + p - 1) / p);
        for (int i = 0; i < n_; ++i) r[i] -= q * col[i];
    }
    return r;
}

bool IntLattice::contains(const std::vector<long long>& v) const {
    auto r = reduce(v);
    for (long long x : r)
        if (x != 0) return false;
    return true;
}

}  // namespace flatdirac
