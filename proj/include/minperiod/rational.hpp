#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "minperiod/error.hpp"

namespace minperiod {

// Exact rational on 64-bit components with __int128 intermediates.
// Every operation normalizes (gcd 1, positive denominator) and throws
// NumericalBreakdown if a normalized component no longer fits in 64 bits.
// The magnitudes in this project (intersection numbers, small-genus Gram
// data) stay far below that.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw Error(Error::Code::BadInput, "rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        Rational r;
        r.num = narrow(n);
        r.den = narrow(d);
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return make((__int128)x.num * y.den + (__int128)y.num * x.den, (__int128)x.den * y.den);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return make((__int128)x.num * y.den - (__int128)y.num * x.den, (__int128)x.den * y.den);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return make((__int128)x.num * y.num, (__int128)x.den * y.den);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num == 0) throw Error(Error::Code::BadInput, "rational division by zero");
        return make((__int128)x.num * y.den, (__int128)x.den * y.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return (__int128)x.num * y.den < (__int128)y.num * x.den;
    }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "p" or "p/q" with optional signs; trailing junk is an error.
    static Rational parse(const std::string& s) {
        auto component = [&s](const std::string& part) {
            std::size_t used = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(part, &used);
            } catch (const std::invalid_argument&) {
                throw Error(Error::Code::BadInput, "cannot parse rational: " + s);
            } catch (const std::out_of_range&) {
                throw Error(Error::Code::BadInput, "rational out of range: " + s);
            }
            if (used != part.size())
                throw Error(Error::Code::BadInput, "cannot parse rational: " + s);
            return v;
        };
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(component(s));
        return Rational(component(s.substr(0, slash)), component(s.substr(slash + 1)));
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    static std::int64_t narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw Error(Error::Code::NumericalBreakdown, "rational overflow");
        return static_cast<std::int64_t>(v);
    }
};

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact inverse by Gauss-Jordan elimination with nonzero pivoting.
RatMatrix rat_inverse(const RatMatrix& m);

// Exact determinant (expansion via elimination).
Rational rat_determinant(RatMatrix m);

// Leading principal minors all positive (exact positive-definiteness test
// for symmetric rational matrices).
bool rat_positive_definite(const RatMatrix& m);

} // namespace minperiod
