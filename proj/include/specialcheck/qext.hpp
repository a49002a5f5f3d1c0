#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>

#include "specialcheck/errors.hpp"

namespace specialcheck::qext {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

int sign_of(const Rational& r);
std::optional<Rational> rational_sqrt(const Rational& r);

/// Exact element a + b*sqrt(d) of a real quadratic extension of Q.
/// d is a square-free positive integer fixed per context (0 marks a plain
/// rational that is compatible with any field). All comparisons are exact;
/// no floating point is used anywhere.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(long v) : a_(v), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, int d);

    static QuadExt sqrt_d(int d) { return QuadExt(0, 1, d); }
    static QuadExt from_parts(Rational num_a, Rational den_a, Rational num_b, Rational den_b, int d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    /// Field tag; 0 when the value is rational (belongs to every field).
    int d() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    /// Exact sign via rational comparisons only.
    int sign() const;

    bool operator==(const QuadExt& o) const;
    bool operator!=(const QuadExt& o) const { return !(*this == o); }
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const QuadExt& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const QuadExt& o) const { return (*this - o).sign() >= 0; }

    /// Exact square root inside the same field, if one exists.
    std::optional<QuadExt> sqrt() const;
    /// Exact square root inside the field Q(sqrt(d)); accepts rational inputs.
    std::optional<QuadExt> sqrt_in(int d) const;

    QuadExt inverse() const;

    /// Renders "a+b*sqrt(d)" with exact rationals, e.g. "3/11", "2+sqrt(2)".
    std::string str() const;
    /// Decimal approximation (for display only, always marked approximate by callers).
    double approx() const;

private:
    void merge_field(const QuadExt& o);
    Rational a_, b_;
    int d_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// Parses the exact-literal grammar used by CLI flags:
///   expr := term (('+'|'-') term)* ;  term := factor ('*' factor)* ;
///   factor := ['-'] (integer | integer '/' integer | 'sqrt' integer | '(' expr ')')
QuadExt parse_quadext(const std::string& text);

} // namespace specialcheck::qext
