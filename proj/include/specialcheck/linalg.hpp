#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "specialcheck/qext.hpp"

namespace specialcheck::lorentz {

using qext::QuadExt;
using qext::Rational;

struct Vec4 {
    std::array<QuadExt, 4> c;

    Vec4() = default;
    Vec4(QuadExt x, QuadExt y, QuadExt z, QuadExt w) : c{std::move(x), std::move(y), std::move(z), std::move(w)} {}

    QuadExt& operator[](int i) { return c[i]; }
    const QuadExt& operator[](int i) const { return c[i]; }

    bool operator==(const Vec4& o) const { return c == o.c; }
    bool operator!=(const Vec4& o) const { return !(*this == o); }
    bool operator<(const Vec4& o) const;

    Vec4 operator+(const Vec4& o) const;
    Vec4 operator-(const Vec4& o) const;
    Vec4 operator*(const QuadExt& s) const;

    std::string str() const;
};

struct Mat4 {
    std::array<std::array<QuadExt, 4>, 4> m;

    static Mat4 identity();
    static Mat4 diag(QuadExt a, QuadExt b, QuadExt c, QuadExt d);

    QuadExt& at(int r, int cidx) { return m[r][cidx]; }
    const QuadExt& at(int r, int cidx) const { return m[r][cidx]; }

    bool operator==(const Mat4& o) const { return m == o.m; }

    Mat4 operator*(const Mat4& o) const;
    Vec4 operator*(const Vec4& v) const;
    Mat4 transpose() const;
    QuadExt det() const;
    Mat4 inverse() const;
};

/// Lorentz inner product v1w1+v2w2+v3w3-v4w4.
QuadExt lorentz_form(const Vec4& v, const Vec4& w);
/// Standard Euclidean dot product on R^4.
QuadExt dot(const Vec4& v, const Vec4& w);

bool is_light_like(const Vec4& v);
bool is_future(const Vec4& v);

/// Exact check of MᵀJM = J with J = diag(1,1,1,-1), plus future-cone preservation.
bool is_lorentz_isometry(const Mat4& M);

/// Solves A x = b exactly by Gaussian elimination. Returns nullopt when the
/// system is inconsistent; `unique` reports whether the solution found is the
/// only one (full column rank).
struct LinearSolution {
    std::vector<QuadExt> x;
    bool unique = false;
    int rank = 0;
};
std::optional<LinearSolution> solve_linear(std::vector<std::vector<QuadExt>> a, std::vector<QuadExt> b);

/// The unique Lorentz isometry mapping src triple to dst triple with the
/// requested determinant sign (+1/-1). The Gram matrices of the two triples
/// must agree exactly (error GramMismatch); the triples must each span a
/// 3-dimensional subspace. Throws NotInField when the normalizing scale does
/// not exist in the working field.
Mat4 solve_triple_isometry(const std::array<Vec4, 3>& src, const std::array<Vec4, 3>& dst, int orientation);

} // namespace specialcheck::lorentz
