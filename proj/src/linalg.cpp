#include "ifsx/linalg.hpp"

#include <cstddef>
#include <stdexcept>

namespace ifsx {

namespace {
void require_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}
} // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Scalar s = Scalar::exact(Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Scalar norm_sq(const Vec& v) { return dot(v, v); }

Scalar norm(const Vec& v) {
    if (v.size() == 1) return v[0].abs();
    return sqrt_scalar(norm_sq(v));
}

Scalar dist(const Vec& a, const Vec& b) { return norm(vec_sub(a, b)); }

Mat mat_identity(int d) {
    Mat m(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d), Scalar::exact(Rat(0))));
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar::exact(Rat(1));
    return m;
}

Mat mat_transpose(const Mat& m) {
    if (m.empty()) return m;
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw std::invalid_argument("matrix dimension mismatch");
    Mat r(a.size(), Vec(b[0].size(), Scalar::exact(Rat(0))));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.empty() || m[0].size() != v.size())
        throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec r(m.size(), Scalar::exact(Rat(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

std::optional<Vec> solve_linear(Mat a, Vec b) {
    const std::size_t n = a.size();
    if (n == 0 || b.size() != n) throw std::invalid_argument("solve dimension mismatch");
    for (auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve needs a square matrix");

    for (std::size_t col = 0; col < n; ++col) {
        // Pick the certifiably nonzero pivot with the largest |lo|-distance
        // from zero (any certified-nonzero pivot keeps elimination sound).
        std::size_t pivot = n;
        Rat best(0);
        for (std::size_t r = col; r < n; ++r) {
            const Scalar av = a[r][col].abs();
            if (av.lo().sign() > 0 && (pivot == n || av.lo() > best)) {
                pivot = r;
                best = av.lo();
            }
        }
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_exact_zero()) continue;
            const Scalar f = a[r][col] / a[col][col];
            a[r][col] = Scalar::exact(Rat(0));
            for (std::size_t c = col + 1; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    Vec x(n, Scalar::exact(Rat(0)));
    for (std::size_t i = n; i-- > 0;) {
        Scalar s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

} // namespace ifsx
