#pragma once

// Exact scalar arithmetic. Every linear-algebra routine in this library is
// parametrized by a small field-context object (PrimeField or RationalField);
// no floating point is used anywhere.

#include <cstdint>
#include <numeric>
#include <string>

#include "graphfiber/errors.hpp"

namespace graphfiber {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Rational number with int64 numerator/denominator, always normalized
// (gcd 1, den > 0). Intermediate products go through __int128; magnitudes
// in this library are tiny, the overflow check is a safety net.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw input_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    bool is_positive_integer() const { return den == 1 && num > 0; }
    bool is_negative_integer() const { return den == 1 && num < 0; }
    bool is_zero() const { return num == 0; }

    friend bool operator==(const Rat& a, const Rat& b) = default;

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

namespace detail {
inline long long narrow128(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error(what);
    return (long long)v;
}
} // namespace detail

inline Rat rat_add(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    __int128 g = 1;
    { // shrink before narrowing
        __int128 x = n < 0 ? -n : n, y = d;
        while (y) { __int128 t = x % y; x = y; y = t; }
        g = x == 0 ? 1 : x;
    }
    return Rat(detail::narrow128(n / g, "rat_add"), detail::narrow128(d / g, "rat_add"));
}

inline Rat rat_neg(const Rat& a) { Rat r; r.num = -a.num; r.den = a.den; return r; }
inline Rat rat_sub(const Rat& a, const Rat& b) { return rat_add(a, rat_neg(b)); }

inline Rat rat_mul(const Rat& a, const Rat& b) {
    long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
    long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
    __int128 n = (__int128)(a.num / (g1 ? g1 : 1)) * (b.num / (g2 ? g2 : 1));
    __int128 d = (__int128)(a.den / (g2 ? g2 : 1)) * (b.den / (g1 ? g1 : 1));
    return Rat(detail::narrow128(n, "rat_mul"), detail::narrow128(d, "rat_mul"));
}

inline Rat rat_inv(const Rat& a) {
    if (a.num == 0) throw input_error("division by zero rational");
    return Rat(a.den, a.num);
}

inline Rat operator+(const Rat& a, const Rat& b) { return rat_add(a, b); }
inline Rat operator-(const Rat& a, const Rat& b) { return rat_sub(a, b); }
inline Rat operator*(const Rat& a, const Rat& b) { return rat_mul(a, b); }
inline Rat operator-(const Rat& a) { return rat_neg(a); }

// F_p with runtime prime modulus. Elements are canonical representatives
// in [0, p); the context object carries p.
struct PrimeField {
    long long p;
    using Elem = long long;

    explicit PrimeField(long long prime) : p(prime) {
        if (!is_prime(p)) throw input_error("PrimeField modulus must be prime, got " + std::to_string(prime));
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long long v) const { return ((v % p) + p) % p; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a - b + p) % p; }
    Elem mul(Elem a, Elem b) const { return (__int128)a * b % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }

    Elem inv(Elem a) const {
        // extended Euclid
        if (a == 0) throw input_error("inverse of zero in F_p");
        long long t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t; t = new_t; new_t = tmp;
            tmp = r - q * new_r; r = new_r; new_r = tmp;
        }
        return ((t % p) + p) % p;
    }

    std::string str(Elem a) const { return std::to_string(a); }
};

struct RationalField {
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long long v) const { return Rat(v); }
    bool is_zero(const Elem& a) const { return a.num == 0; }
    Elem add(const Elem& a, const Elem& b) const { return rat_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return rat_sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return rat_mul(a, b); }
    Elem neg(const Elem& a) const { return rat_neg(a); }
    Elem inv(const Elem& a) const { return rat_inv(a); }
    std::string str(const Elem& a) const { return a.str(); }
};

} // namespace graphfiber
