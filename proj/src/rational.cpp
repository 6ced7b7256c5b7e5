#include "flatdirac/rational.hpp"

#include <cstdlib>
#include <limits>

namespace flatdirac {

namespace {
__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
constexpr long long kMax = std::numeric_limits<long long>::max();
}  // namespace

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n > kMax || n < -(__int128)kMax || d > kMax) throw Error("rational overflow");
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
}

void Rational::assign(long long n, long long d) {
    Rational r = from_i128(n, d);
    num_ = r.num_;
    den_ = r.den_;
}

long long Rational::round_to_int() const {
    long long f = floor();
    Rational frac = *this - Rational(f);
    if (frac * Rational(2) >= Rational(1)) return f + 1;
    return f;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error("cannot parse rational '" + s + "'");
    }
}

std::string QSqrt2::str() const {
    if (b.is_zero()) return a.str();
    if (a.is_zero()) return b.str() + "*sqrt2";
    return a.str() + (b > Rational(0) ? "+" : "") + b.str() + "*sqrt2";
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "i";
    return re.str() + (im > Rational(0) ? "+" : "") + im.str() + "i";
}

GaussianRational quarter_phase(const Rational& t) {
    Rational m = t.mod1();
    if (m == Rational(0)) return GaussianRational(Rational(1));
    if (m == Rational(1, 4)) return GaussianRational(Rational(0), Rational(-1));
    if (m == Rational(1, 2)) return GaussianRational(Rational(-1));
    if (m == Rational(3, 4)) return GaussianRational(Rational(0), Rational(1));
    throw Error("phase exponent " + t.str() + " is not a quarter integer");
}

GaussianRational i_power(long long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussianRational(Rational(1));
        case 1: return GaussianRational(Rational(0), Rational(1));
        case 2: return GaussianRational(Rational(-1));
        default: return GaussianRational(Rational(0), Rational(-1));
    }
}

}  // namespace flatdirac
