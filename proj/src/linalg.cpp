#include "specialcheck/linalg.hpp"

#include <sstream>

namespace specialcheck::lorentz {

bool Vec4::operator<(const Vec4& o) const {
    for (int i = 0; i < 4; ++i) {
        if (c[i] < o.c[i]) return true;
        if (o.c[i] < c[i]) return false;
    }
    return false;
}

Vec4 Vec4::operator+(const Vec4& o) const {
    return Vec4(c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]);
}

Vec4 Vec4::operator-(const Vec4& o) const {
    return Vec4(c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]);
}

Vec4 Vec4::operator*(const QuadExt& s) const { return Vec4(c[0] * s, c[1] * s, c[2] * s, c[3] * s); }

std::string Vec4::str() const {
    std::ostringstream os;
    os << "(" << c[0] << ", " << c[1] << ", " << c[2] << ", " << c[3] << ")";
    return os.str();
}

Mat4 Mat4::identity() { return diag(1, 1, 1, 1); }

Mat4 Mat4::diag(QuadExt a, QuadExt b, QuadExt c, QuadExt d) {
    Mat4 r;
    for (auto& row : r.m)
        for (auto& e : row) e = QuadExt(0);
    r.m[0][0] = std::move(a);
    r.m[1][1] = std::move(b);
    r.m[2][2] = std::move(c);
    r.m[3][3] = std::move(d);
    return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QuadExt s(0);
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = std::move(s);
        }
    return r;
}

Vec4 Mat4::operator*(const Vec4& v) const {
    Vec4 r;
    for (int i = 0; i < 4; ++i) {
        QuadExt s(0);
        for (int k = 0; k < 4; ++k) s += m[i][k] * v[k];
        r[i] = std::move(s);
    }
    return r;
}

Mat4 Mat4::transpose() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

QuadExt Mat4::det() const {
    // Laplace along the first row over 3x3 minors.
    auto minor3 = [&](int skip_col) {
        std::array<std::array<const QuadExt*, 3>, 3> a{};
        for (int i = 1; i < 4; ++i) {
            int cc = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == skip_col) continue;
                a[i - 1][cc++] = &m[i][j];
            }
        }
        return (*a[0][0]) * ((*a[1][1]) * (*a[2][2]) - (*a[1][2]) * (*a[2][1])) -
               (*a[0][1]) * ((*a[1][0]) * (*a[2][2]) - (*a[1][2]) * (*a[2][0])) +
               (*a[0][2]) * ((*a[1][0]) * (*a[2][1]) - (*a[1][1]) * (*a[2][0]));
    };
    QuadExt s(0);
    int sign = 1;
    for (int j = 0; j < 4; ++j) {
        if (!m[0][j].is_zero()) s += m[0][j] * minor3(j) * QuadExt(sign);
        sign = -sign;
    }
    return s;
}

Mat4 Mat4::inverse() const {
    // Gauss-Jordan with exact pivots.
    std::array<std::array<QuadExt, 8>, 4> w;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) w[i][j] = m[i][j];
        for (int j = 4; j < 8; ++j) w[i][j] = QuadExt(i == j - 4 ? 1 : 0);
    }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (!w[r][col].is_zero()) {
                piv = r;
                break;
            }
        require(piv >= 0, "Singular", "matrix not invertible");
        std::swap(w[col], w[piv]);
        QuadExt inv = w[col][col].inverse();
        for (int j = 0; j < 8; ++j) w[col][j] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || w[r][col].is_zero()) continue;
            QuadExt f = w[r][col];
            for (int j = 0; j < 8; ++j) w[r][j] -= f * w[col][j];
        }
    }
    Mat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.m[i][j] = w[i][j + 4];
    return out;
}

QuadExt lorentz_form(const Vec4& v, const Vec4& w) {
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2] - v[3] * w[3];
}

QuadExt dot(const Vec4& v, const Vec4& w) {
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2] + v[3] * w[3];
}

bool is_light_like(const Vec4& v) { return lorentz_form(v, v).is_zero(); }

bool is_future(const Vec4& v) { return v[3].sign() > 0; }

bool is_lorentz_isometry(const Mat4& M) {
    Mat4 J = Mat4::diag(1, 1, 1, -1);
    if (!(M.transpose() * J * M == J)) return false;
    return M.m[3][3].sign() > 0;
}

std::optional<LinearSolution> solve_linear(std::vector<std::vector<QuadExt>> a, std::vector<QuadExt> b) {
    const size_t rows = a.size();
    require(b.size() == rows, "BadInput", "solve_linear shape mismatch");
    const size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t piv = r;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        QuadExt inv = a[r][col].inverse();
        for (size_t j = col; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col].is_zero()) continue;
            QuadExt f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;

    LinearSolution sol;
    sol.rank = static_cast<int>(r);
    sol.unique = (r == cols);
    sol.x.assign(cols, QuadExt(0));
    for (size_t i = 0; i < r; ++i) sol.x[pivot_col[i]] = b[i];
    return sol;
}

Mat4 solve_triple_isometry(const std::array<Vec4, 3>& src, const std::array<Vec4, 3>& dst, int orientation) {
    require(orientation == 1 || orientation == -1, "BadInput", "orientation must be +1 or -1");
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            require(lorentz_form(src[i], src[j]) == lorentz_form(dst[i], dst[j]), "GramMismatch",
                    "Lorentz products of the triples disagree");

    // Working field: first non-rational entry decides.
    int d = 0;
    auto scan = [&](const Vec4& v) {
        for (const auto& e : v.c)
            if (e.d() > 1) d = e.d();
    };
    for (const auto& v : src) scan(v);
    for (const auto& v : dst) scan(v);

    // Lorentz-orthogonal complement generator of a 3-dim span.
    auto complement = [&](const std::array<Vec4, 3>& t) -> Vec4 {
        std::vector<std::vector<QuadExt>> rowsm(3, std::vector<QuadExt>(4));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) rowsm[i][j] = (j < 3 ? t[i][j] : -t[i][j]);
        // Find a kernel vector of the 3x4 system rowsm * x = 0 by trying a
        // free coordinate set to one.
        for (int freec = 3; freec >= 0; --freec) {
            std::vector<std::vector<QuadExt>> a(3, std::vector<QuadExt>(3));
            std::vector<QuadExt> b(3);
            for (int i = 0; i < 3; ++i) {
                int cc = 0;
                for (int j = 0; j < 4; ++j) {
                    if (j == freec) continue;
                    a[i][cc++] = rowsm[i][j];
                }
                b[i] = -rowsm[i][freec];
            }
            auto s = solve_linear(a, b);
            if (!s || !s->unique) continue;
            Vec4 k;
            int cc = 0;
            for (int j = 0; j < 4; ++j) k[j] = (j == freec) ? QuadExt(1) : s->x[cc++];
            return k;
        }
        fail("GramMismatch", "triple does not span a 3-dimensional subspace");
    };

    Vec4 s4 = complement(src);
    Vec4 d4 = complement(dst);
    QuadExt qs = lorentz_form(s4, s4), qd = lorentz_form(d4, d4);
    require(qs.sign() > 0 && qd.sign() > 0, "GramMismatch", "complement not spacelike");
    auto lam = (qs / qd).sqrt_in(d);
    require(lam.has_value(), "NotInField", "normalizing scale not in the working field");

    auto assemble = [&](const QuadExt& scale) {
        Mat4 S, D;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 3; ++j) {
                S.m[i][j] = src[j][i];
                D.m[i][j] = dst[j][i];
            }
            S.m[i][3] = s4[i];
            D.m[i][3] = d4[i] * scale;
        }
        return D * S.inverse();
    };

    Mat4 M = assemble(*lam);
    if (M.det().sign() != orientation) M = assemble(-*lam);
    require(M.det().sign() == orientation, "GramMismatch", "orientation not realizable");
    require(is_lorentz_isometry(M), "GramMismatch", "constructed map is not a Lorentz isometry");
    return M;
}

} // namespace specialcheck::lorentz
