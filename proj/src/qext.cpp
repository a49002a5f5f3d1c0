#include "specialcheck/qext.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace specialcheck::qext {

int sign_of(const Rational& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    Int num = numerator(r), den = denominator(r);
    Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

QuadExt::QuadExt(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_ == 0) d_ = 0;
    else require(d_ > 1, "FieldMismatch", "irrational part needs a field d > 1");
}

QuadExt QuadExt::from_parts(Rational na, Rational da, Rational nb, Rational db, int d) {
    require(da != 0 && db != 0, "BadLiteral", "zero denominator");
    return QuadExt(na / da, nb / db, d);
}

void QuadExt::merge_field(const QuadExt& o) {
    if (d_ == o.d_ || o.d_ == 0) return;
    if (d_ == 0) { d_ = o.d_; return; }
    fail("FieldMismatch", "mixing sqrt(" + std::to_string(d_) + ") with sqrt(" + std::to_string(o.d_) + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    merge_field(o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    merge_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    merge_field(o);
    Rational na = a_ * o.a_ + b_ * o.b_ * d_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    if (b_ == 0) d_ = 0;
    return *this;
}

QuadExt QuadExt::inverse() const {
    require(!is_zero(), "DivisionByZero", "inverse of zero");
    // 1/(a+b√d) = (a-b√d)/(a²-db²); the norm is nonzero since d is not a square.
    Rational norm = a_ * a_ - b_ * b_ * d_;
    require(norm != 0, "FieldMismatch", "non-square-free field");
    return QuadExt(a_ / norm, -b_ / norm, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

int QuadExt::sign() const {
    int sa = sign_of(a_), sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b have opposite signs: compare a² against d b².
    int cmp = sign_of(a_ * a_ - b_ * b_ * d_);
    return cmp == 0 ? 0 : cmp * sa;
}

bool QuadExt::operator==(const QuadExt& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    return b_ == 0 || d_ == o.d_;
}

std::optional<QuadExt> QuadExt::sqrt() const { return sqrt_in(d_); }

std::optional<QuadExt> QuadExt::sqrt_in(int d) const {
    int s = sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return QuadExt(0);
    if (b_ != 0 && d != d_) return std::nullopt;
    if (b_ == 0) {
        if (auto r = rational_sqrt(a_)) return QuadExt(*r);
        if (d > 1) {                      // maybe a pure multiple of √d: (y√d)² = d y²
            if (auto y = rational_sqrt(a_ / d)) return QuadExt(0, *y, d);
        }
        return std::nullopt;
    }
    // (x+y√d)² = x²+dy² + 2xy√d:  x² solves t² - a t + d(b/2)² = 0.
    Rational disc = a_ * a_ - Rational(d_) * b_ * b_;
    auto sd = rational_sqrt(disc);
    if (!sd) return std::nullopt;
    for (int pm : {1, -1}) {
        Rational x2 = (a_ + Rational(pm) * *sd) / 2;
        auto x = rational_sqrt(x2);
        if (!x || *x == 0) continue;
        Rational y = b_ / (2 * *x);
        QuadExt cand(*x, y, d_);
        if (cand * cand == *this && cand.sign() > 0) return cand;
        cand = -cand;
        if (cand * cand == *this && cand.sign() > 0) return cand;
    }
    return std::nullopt;
}

namespace {
std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}
} // namespace

std::string QuadExt::str() const {
    if (b_ == 0) return rational_str(a_);
    std::ostringstream os;
    bool have_a = (a_ != 0);
    if (have_a) os << rational_str(a_);
    Rational b = b_;
    if (b < 0) {
        os << "-";
        b = -b;
    } else if (have_a) {
        os << "+";
    }
    if (b != 1) os << rational_str(b) << "*";
    os << "sqrt(" << d_ << ")";
    return os.str();
}

double QuadExt::approx() const {
    double av = numerator(a_).convert_to<double>() / denominator(a_).convert_to<double>();
    double bv = numerator(b_).convert_to<double>() / denominator(b_).convert_to<double>();
    return av + bv * std::sqrt(double(d_));
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int integer() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        require(pos > start, "BadLiteral", "expected integer at offset " + std::to_string(start) + " in '" + s + "'");
        return Int(s.substr(start, pos - start));
    }

    QuadExt factor() {
        if (eat('-')) return -factor();
        if (eat('(')) {
            QuadExt v = expr();
            require(eat(')'), "BadLiteral", "missing ')' in '" + s + "'");
            return v;
        }
        skip();
        if (s.compare(pos, 4, "sqrt") == 0) {
            pos += 4;
            bool paren = eat('(');
            Int d = integer();
            if (paren) require(eat(')'), "BadLiteral", "missing ')' after sqrt in '" + s + "'");
            require(d > 1, "BadLiteral", "sqrt argument must exceed 1");
            return QuadExt::sqrt_d(d.convert_to<int>());
        }
        Int num = integer();
        if (eat('/')) {
            Int den = integer();
            require(den != 0, "BadLiteral", "division by zero");
            return QuadExt(Rational(num, den));
        }
        return QuadExt(Rational(num));
    }

    QuadExt term() {
        QuadExt v = factor();
        while (peek() == '*') {
            eat('*');
            v *= factor();
        }
        return v;
    }

    QuadExt expr() {
        QuadExt v = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                eat('+');
                v += term();
            } else if (c == '-') {
                eat('-');
                v -= term();
            } else {
                break;
            }
        }
        return v;
    }
};

} // namespace

QuadExt parse_quadext(const std::string& text) {
    Parser p(text);
    QuadExt v = p.expr();
    p.skip();
    require(p.pos == text.size(), "BadLiteral", "trailing characters in '" + text + "'");
    return v;
}

} // namespace specialcheck::qext
