#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace flatdirac {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (den > 0, gcd(num,den) = 1).  Intermediates go through __int128; any
/// value leaving that range throws.  All quantities in the engine are
/// tiny (denominators in {1,2,4,p}, numerators bounded by shell caps).
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    static Rational from_i128(__int128 n, __int128 d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const {
        return from_i128((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                         (__int128)den_ * o.den_);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        return from_i128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("rational division by zero");
        return from_i128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return *this == o || *this < o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    /// Representative of this value mod 1 in [0, 1).
    Rational mod1() const {
        long long r = num_ % den_;
        if (r < 0) r += den_;
        return Rational(r, den_);
    }
    /// Floor of the value as an integer.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long round_to_int() const;   // nearest integer, ties away from zero

    double to_double() const { return (double)num_ / (double)den_; }
    std::string str() const;
    static Rational parse(const std::string& s);

private:
    void assign(long long n, long long d);
    long long num_, den_;
};

/// Element a + b*sqrt(2) of Q(sqrt 2).  The reflection factorizations of
/// signed permutations only ever produce powers of 1/sqrt(2), so this ring
/// is closed under all lift arithmetic.
struct QSqrt2 {
    Rational a, b;

    QSqrt2() = default;
    QSqrt2(Rational ra) : a(ra), b(0) {}
    QSqrt2(Rational ra, Rational rb) : a(ra), b(rb) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    QSqrt2 operator-() const { return {-a, -b}; }
    QSqrt2 operator+(const QSqrt2& o) const { return {a + o.a, b + o.b}; }
    QSqrt2 operator-(const QSqrt2& o) const { return {a - o.a, b - o.b}; }
    QSqrt2 operator*(const QSqrt2& o) const {
        return {a * o.a + Rational(2) * b * o.b, a * o.b + b * o.a};
    }
    QSqrt2& operator+=(const QSqrt2& o) { return *this = *this + o; }
    bool operator==(const QSqrt2& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QSqrt2& o) const { return !(*this == o); }

    double to_double() const { return a.to_double() + b.to_double() * 1.4142135623730950488; }
    std::string str() const;
};

/// Gaussian rational a + b*i; carries the exact exponential sums
/// e_{mu,gamma} and the exact character sums of the multiplicity formulas.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(r), im(0) {}
    GaussianRational(Rational r, Rational i) : re(r), im(i) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational conj() const { return {re, -im}; }
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const;
};

/// e^{-2 pi i t} for t with denominator dividing 4; exact in Q(i).
/// Throws if t is not a quarter integer.
GaussianRational quarter_phase(const Rational& t);

/// i^k as a Gaussian rational.
GaussianRational i_power(long long k);

}  // namespace flatdirac
