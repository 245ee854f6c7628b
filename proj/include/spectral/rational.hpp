#ifndef SPECTRAL_RATIONAL_HPP
#define SPECTRAL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "spectral/error.hpp"

namespace spectral {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a/b" or "a" into a canonical rational. Denominator must be nonzero.
Rational parse_rational(const std::string& text);

// "a/b" with positive denominator, or plain "a" when the denominator is 1.
std::string format_rational(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

// Gaussian rational a + bi, the scalar field for all exact matrix work and all
// region coordinates. Both components are kept canonical (lowest terms,
// positive denominator) by mpq_class.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int v) : re(v), im(0) {} // NOLINT: implicit by design (Eigen literals)
    explicit GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }

    // |z|^2 as an exact rational; the workhorse for all metric predicates.
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const {
        if (is_zero()) throw Error("division_by_zero", "inverse of zero Gaussian rational");
        Rational n = norm2();
        return {re / n, -im / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

// Lexicographic (re, im) order; used only as a deterministic tie-breaker for
// canonical forms, not as a field order.
bool lex_less(const GaussianRational& a, const GaussianRational& b);

// Parses "re,im" or "re" (imaginary part 0); components as in parse_rational.
GaussianRational parse_gaussian(const std::string& text);

std::string format_gaussian(const GaussianRational& z); // "re+im*i" style, for messages

} // namespace spectral

#endif
