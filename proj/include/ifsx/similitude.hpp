#pragma once

#include "ifsx/linalg.hpp"
#include "ifsx/orthogonal.hpp"

#include <optional>
#include <string>

namespace ifsx {

// A contracting similitude x ↦ ratio · R x + shift with 0 < ratio < 1 and R
// orthogonal.  Immutable after construction; all operations are certified.
struct Similitude {
    Scalar ratio;
    OrthogonalMap rot;
    Vec shift;

    int dim() const { return static_cast<int>(shift.size()); }

    Vec apply(const Vec& x) const;

    // The unique fixed point, solving (I - ratio·R) x = shift.  Always
    // succeeds on exact data; may fail (nullopt) for wide interval data.
    std::optional<Vec> fixed_point() const;

    // Human-readable one-liner, 1-based conventions ("0.2·x + (3/5)").
    std::string describe() const;
};

// Validates ratio ∈ (0,1) (certified) and dimension agreement.
Similitude make_similitude(Scalar ratio, OrthogonalMap rot, Vec shift);

// f ∘ g (apply g first).
Similitude compose(const Similitude& f, const Similitude& g);

// f⁻¹ ∘ g, the unique h with f ∘ h = g.  Requires ratio_g < ratio_f
// (certified) so the quotient is again a contraction.
Similitude left_quotient(const Similitude& f, const Similitude& g);

} // namespace ifsx
