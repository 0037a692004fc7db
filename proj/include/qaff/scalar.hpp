#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "qaff/errors.hpp"

namespace qaff {

using Rational = mpq_class;

// Element of Q(t) in canonical form:
//   value = t^shift * num(t) / den(t)
// num(0) != 0, den monic with den(0) != 0, gcd(num, den) = 1.
// An empty numerator is zero; an empty denominator stands for 1.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v);  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& v);  // NOLINT(google-explicit-constructor)

    static Scalar monomial(const Rational& c, long exponent);

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_constant() const { return den_.empty() && shift_ == 0 && num_.size() <= 1; }
    // c * t^k
    bool is_monomial() const { return den_.empty() && num_.size() == 1; }
    bool is_laurent() const { return den_.empty(); }

    Rational constant_value() const;  // requires is_constant()
    Rational leading_coeff() const;   // of the monomial; requires is_monomial()
    long low_exponent() const { return shift_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(long e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Exact evaluation at t = t0.
    Rational evaluate(const Rational& t0) const;

    // Exponent-indexed coefficient lists; numerator includes the shift.
    std::vector<std::pair<long, Rational>> numerator_terms() const;
    std::vector<std::pair<long, Rational>> denominator_terms() const;

    // Render as a reduced fraction of integer-coefficient Laurent polynomials in t.
    std::string str() const;

    // Total ordering on canonical forms, only for use as a map key.
    friend bool structural_less(const Scalar& a, const Scalar& b);

private:
    long shift_ = 0;
    std::vector<Rational> num_;
    std::vector<Rational> den_;

    void canonicalize(std::vector<Rational> num, long num_shift, std::vector<Rational> den, long den_shift);
};

// Evaluate at t0, raising PoleError when the denominator vanishes there.
Rational specialize(const Scalar& s, const Rational& t0);

enum class Backend { Symbolic, Specialized };

// Fixes the rank n and the embedding q = t^(2(n+1)), so that q^(1/2) and
// q^(1/(n+1)) are integral powers of t. Under the specialized backend every
// scalar is a rational constant obtained by substituting t = t0.
class ScalarContext {
public:
    explicit ScalarContext(int n, Backend backend = Backend::Symbolic, Rational t0 = Rational(5, 3));

    int n() const { return n_; }
    Backend backend() const { return backend_; }
    bool symbolic() const { return backend_ == Backend::Symbolic; }
    const Rational& t0() const { return t0_; }
    long q_degree() const { return 2L * (n_ + 1); }

    Scalar t_power(long k) const;
    Scalar q_power(const Rational& r) const;
    Scalar q_power(long r) const { return t_power(r * q_degree()); }
    Scalar q() const { return q_power(1L); }

    // If s equals q^m for an integer m, return true and set m.
    bool q_exponent_of(const Scalar& s, long& m) const;

    Scalar parse(std::string_view text) const;
    std::string render(const Scalar& s) const { return s.str(); }
    // Uses q when every exponent allows it, otherwise falls back to t.
    std::string render_q(const Scalar& s) const;
    std::string describe() const;

    // "symbolic" or "rational:<t0>"
    static ScalarContext from_backend_string(int n, std::string_view spec);

    bool same_field(const ScalarContext& o) const { return n_ == o.n_ && backend_ == o.backend_ && t0_ == o.t0_; }

private:
    int n_;
    Backend backend_;
    Rational t0_;
};

Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& r);

}  // namespace qaff
