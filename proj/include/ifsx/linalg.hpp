#pragma once

#include "ifsx/scalar.hpp"

#include <optional>
#include <vector>

namespace ifsx {

// Dense small-dimension vectors/matrices over certified scalars.  Ambient
// dimensions here are tiny (1-3 in practice), so plain loops beat any
// library dependency and keep everything exact.
using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);

Scalar dot(const Vec& a, const Vec& b);
Scalar norm_sq(const Vec& v);
// Euclidean norm: exact |x| in dimension 1; certified sqrt enclosure otherwise.
Scalar norm(const Vec& v);
Scalar dist(const Vec& a, const Vec& b);

Mat mat_identity(int d);
Mat mat_transpose(const Mat& m);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);

// Gaussian elimination with certified pivoting.  Returns nullopt when no
// certifiably nonzero pivot exists (possible for wide interval data; never
// for exact nonsingular systems).
std::optional<Vec> solve_linear(Mat a, Vec b);

} // namespace ifsx
