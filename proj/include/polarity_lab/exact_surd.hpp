#ifndef POLARITY_LAB_EXACT_SURD_HPP
#define POLARITY_LAB_EXACT_SURD_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "polarity_lab/support.hpp"

namespace plab {

/// Exact value (a + b*sqrt(rad)) / den with integer components; den > 0.
/// When rad is a perfect square the root part folds into the rational part,
/// so square plane orders come out as plain rationals.
struct Surd {
    int64_t a = 0;
    int64_t b = 0;
    int64_t den = 1;
    uint64_t rad = 0;

    static Surd rational(int64_t a, int64_t den = 1, uint64_t rad = 0) { return Surd{a, 0, den, rad}.normalized(); }
    static Surd root(int64_t b, uint64_t rad, int64_t den = 1) { return Surd{0, b, den, rad}.normalized(); }

    Surd normalized() const {
        Surd s = *this;
        if (s.den == 0) throw std::invalid_argument("surd: zero denominator");
        uint64_t r = 0;
        if (s.b != 0 && is_perfect_square(s.rad, &r)) {
            s.a += s.b * static_cast<int64_t>(r);
            s.b = 0;
        }
        if (s.den < 0) {
            s.den = -s.den;
            s.a = -s.a;
            s.b = -s.b;
        }
        int64_t g = std::gcd(std::gcd(s.a < 0 ? -s.a : s.a, s.b < 0 ? -s.b : s.b), s.den);
        if (g > 1) {
            s.a /= g;
            s.b /= g;
            s.den /= g;
        }
        return s;
    }

    static void same_radicand(const Surd& x, const Surd& y) {
        if (x.b != 0 && y.b != 0 && x.rad != y.rad) throw std::invalid_argument("surd: radicand mismatch");
    }

    uint64_t common_rad(const Surd& o) const { return b != 0 ? rad : o.rad; }

    Surd operator+(const Surd& o) const {
        same_radicand(*this, o);
        return Surd{a * o.den + o.a * den, b * o.den + o.b * den, den * o.den, common_rad(o)}.normalized();
    }

    Surd operator-(const Surd& o) const {
        same_radicand(*this, o);
        return Surd{a * o.den - o.a * den, b * o.den - o.b * den, den * o.den, common_rad(o)}.normalized();
    }

    Surd operator*(const Surd& o) const {
        same_radicand(*this, o);
        uint64_t r = common_rad(o);
        return Surd{a * o.a + b * o.b * static_cast<int64_t>(r), a * o.b + b * o.a, den * o.den, r}.normalized();
    }

    Surd operator/(const Surd& o) const {
        same_radicand(*this, o);
        uint64_t r = common_rad(o);
        // multiply numerator and denominator by the conjugate of the divisor
        int64_t norm = o.a * o.a - o.b * o.b * static_cast<int64_t>(r);
        if (norm == 0 && o.a == 0 && o.b == 0) throw std::invalid_argument("surd: division by zero");
        if (norm == 0) throw std::invalid_argument("surd: divisor norm vanishes");
        Surd res;
        res.a = (a * o.a - b * o.b * static_cast<int64_t>(r)) * o.den;
        res.b = (b * o.a - a * o.b) * o.den;
        res.den = den * norm;
        res.rad = r;
        return res.normalized();
    }

    int sign() const {
        __int128 A = a, B = b;
        if (A >= 0 && B >= 0) return (A != 0 || B != 0) ? 1 : 0;
        if (A <= 0 && B <= 0) return (A != 0 || B != 0) ? -1 : 0;
        __int128 a2 = A * A, b2r = B * B * static_cast<__int128>(rad);
        if (A > 0) return a2 > b2r ? 1 : (a2 < b2r ? -1 : 0);
        return a2 < b2r ? 1 : (a2 > b2r ? -1 : 0);
    }

    bool operator<(const Surd& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Surd& o) const { return (*this - o).sign() <= 0; }
    bool operator==(const Surd& o) const { return (*this - o).sign() == 0; }

    double approx() const {
        return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(rad))) /
               static_cast<double>(den);
    }

    /// smallest integer >= the exact value (double estimate, exact fix-up)
    int64_t ceil_int() const {
        int64_t m = static_cast<int64_t>(std::ceil(approx())) - 3;
        while (Surd::rational(m, 1, rad) < *this) ++m;
        while (!(Surd::rational(m - 1, 1, rad) < *this)) --m;
        return m;
    }

    std::string str() const {
        if (b == 0) {
            std::string s = std::to_string(a);
            if (den != 1) s += "/" + std::to_string(den);
            return s;
        }
        std::string s = "(" + std::to_string(a);
        s += b >= 0 ? "+" : "-";
        s += std::to_string(b >= 0 ? b : -b) + "*sqrt(" + std::to_string(rad) + "))";
        if (den != 1) s += "/" + std::to_string(den);
        return s;
    }
};

}  // namespace plab

#endif  // POLARITY_LAB_EXACT_SURD_HPP
