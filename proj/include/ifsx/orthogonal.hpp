#pragma once

#include "ifsx/linalg.hpp"

#include <string>

namespace ifsx {

// How the system's scalars are represented: exact rationals, or certified
// ranges with double-rounded endpoints.
enum class Mode { exact, interval };

// Structural knowledge about an orthogonal matrix, ordered from most to
// least structured.  Signed permutations map axis-aligned boxes to boxes,
// which the open-set-condition box checker relies on.
enum class OrthoKind { signed_permutation, rational_orthogonal, interval_orthogonal };

struct OrthogonalMap {
    Mat m;
    OrthoKind kind = OrthoKind::signed_permutation;
    // Certified bound on the max-norm of MᵀM - I (exactly 0 for the two
    // exact kinds; recorded residual for interval data).
    Rat residual = Rat(0);

    int dim() const { return static_cast<int>(m.size()); }
};

// Validates orthogonality and classifies the matrix.
//  - exact mode: MᵀM = I must hold exactly (throws std::invalid_argument
//    otherwise); kind is signed_permutation or rational_orthogonal.
//  - interval mode: every entry of MᵀM - I must be enclosed within
//    [-tol, tol]; the certified residual is recorded.
OrthogonalMap make_orthogonal(Mat m, Mode mode, const Rat& tol = Rat(1, 1000000000));

OrthogonalMap ortho_compose(const OrthogonalMap& a, const OrthogonalMap& b);
OrthogonalMap ortho_transpose(const OrthogonalMap& a);

std::string ortho_kind_str(OrthoKind k);

} // namespace ifsx
