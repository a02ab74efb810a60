#include "ifsx/orthogonal.hpp"

#include <cstddef>
#include <stdexcept>

namespace ifsx {

namespace {

// Certified bound on max |(MᵀM - I)_{ij}| computed directly with interval
// arithmetic on the entries.
Rat gram_residual(const Mat& m, bool* all_exact_out) {
    const Mat gram = mat_mul(mat_transpose(m), m);
    const Mat id = mat_identity(static_cast<int>(m.size()));
    bool all_exact = true;
    Rat residual(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            const Scalar diff = gram[i][j] - id[i][j];
            if (!diff.is_exact()) all_exact = false;
            residual = max(residual, max(diff.lo().abs(), diff.hi().abs()));
        }
    }
    if (all_exact_out) *all_exact_out = all_exact;
    return residual;
}

bool is_signed_permutation(const Mat& m) {
    const std::size_t d = m.size();
    std::vector<bool> col_used(d, false);
    for (std::size_t i = 0; i < d; ++i) {
        int hits = 0;
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar& e = m[i][j];
            if (!e.is_exact()) return false;
            if (e.value().is_zero()) continue;
            if (e.value().abs() != Rat(1)) return false;
            if (col_used[j]) return false;
            col_used[j] = true;
            ++hits;
        }
        if (hits != 1) return false;
    }
    return true;
}

} // namespace

OrthogonalMap make_orthogonal(Mat m, Mode mode, const Rat& tol) {
    const std::size_t d = m.size();
    if (d == 0) throw std::invalid_argument("orthogonal matrix must be nonempty");
    for (const auto& row : m)
        if (row.size() != d) throw std::invalid_argument("orthogonal matrix must be square");

    bool all_exact = true;
    const Rat residual = gram_residual(m, &all_exact);

    OrthogonalMap out;
    out.m = std::move(m);
    if (mode == Mode::exact) {
        if (!all_exact || !residual.is_zero())
            throw std::invalid_argument("matrix is not exactly orthogonal");
        out.kind = is_signed_permutation(out.m) ? OrthoKind::signed_permutation
                                                : OrthoKind::rational_orthogonal;
        out.residual = Rat(0);
        return out;
    }
    if (residual > tol)
        throw std::invalid_argument("matrix orthogonality residual exceeds tolerance: " +
                                    residual.decimal(15));
    if (all_exact && residual.is_zero())
        out.kind = is_signed_permutation(out.m) ? OrthoKind::signed_permutation
                                                : OrthoKind::rational_orthogonal;
    else
        out.kind = OrthoKind::interval_orthogonal;
    out.residual = residual;
    return out;
}

namespace {
OrthoKind join(OrthoKind a, OrthoKind b) {
    if (a == OrthoKind::interval_orthogonal || b == OrthoKind::interval_orthogonal)
        return OrthoKind::interval_orthogonal;
    if (a == OrthoKind::rational_orthogonal || b == OrthoKind::rational_orthogonal)
        return OrthoKind::rational_orthogonal;
    return OrthoKind::signed_permutation;
}
} // namespace

OrthogonalMap ortho_compose(const OrthogonalMap& a, const OrthogonalMap& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("orthogonal dimension mismatch");
    OrthogonalMap out;
    out.m = mat_mul(a.m, b.m);
    out.kind = join(a.kind, b.kind);
    out.residual = (out.kind == OrthoKind::interval_orthogonal)
                       ? gram_residual(out.m, nullptr)
                       : Rat(0);
    return out;
}

OrthogonalMap ortho_transpose(const OrthogonalMap& a) {
    OrthogonalMap out;
    out.m = mat_transpose(a.m);
    out.kind = a.kind;
    out.residual = a.residual;
    return out;
}

std::string ortho_kind_str(OrthoKind k) {
    switch (k) {
        case OrthoKind::signed_permutation: return "signed-permutation";
        case OrthoKind::rational_orthogonal: return "rational-orthogonal";
        case OrthoKind::interval_orthogonal: return "interval-orthogonal";
    }
    return "?";
}

} // namespace ifsx
