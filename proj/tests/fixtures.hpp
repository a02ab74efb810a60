#pragma once

// Programmatic builders for the recurring example systems.

#include "ifsx/system.hpp"

namespace ifsx::testing {

inline Similitude sim1(const Rat& ratio, const Rat& shift, bool flip = false,
                       Mode mode = Mode::exact) {
    Mat m{{Scalar::exact(flip ? Rat(-1) : Rat(1))}};
    return make_similitude(Scalar::exact(ratio), make_orthogonal(std::move(m), mode),
                           Vec{Scalar::exact(shift)});
}

// Three fifth-scale maps on [0,1]; the middle and right pieces touch at 4/5.
inline IfsSystem f5() {
    return make_system(1, Mode::exact,
                       {sim1(Rat(1, 5), Rat(0)), sim1(Rat(1, 5), Rat(3, 5)),
                        sim1(Rat(1, 5), Rat(4, 5))},
                       OscStatus::declared);
}

// Two quarter-scale maps on [0,1]; strongly separated with gap 1/2.
inline IfsSystem c4() {
    return make_system(1, Mode::exact, {sim1(Rat(1, 4), Rat(0)), sim1(Rat(1, 4), Rat(3, 4))},
                       OscStatus::declared);
}

// Two half-scale maps whose attractor is the full interval [0,1].
inline IfsSystem conn2() {
    return make_system(1, Mode::exact, {sim1(Rat(1, 2), Rat(0)), sim1(Rat(1, 2), Rat(1, 2))},
                       OscStatus::declared);
}

// Planar helpers for dimension-2 coverage.
inline Similitude sim2(const Rat& ratio, const Rat& sx, const Rat& sy) {
    Mat m{{Scalar::exact(Rat(1)), Scalar::exact(Rat(0))},
          {Scalar::exact(Rat(0)), Scalar::exact(Rat(1))}};
    return make_similitude(Scalar::exact(ratio), make_orthogonal(std::move(m), Mode::exact),
                           Vec{Scalar::exact(sx), Scalar::exact(sy)});
}

// Three quarter-scale maps with translations spanning the plane.
inline IfsSystem planar3() {
    return make_system(2, Mode::exact,
                       {sim2(Rat(1, 4), Rat(0), Rat(0)), sim2(Rat(1, 4), Rat(3, 4), Rat(0)),
                        sim2(Rat(1, 4), Rat(0), Rat(3, 4))},
                       OscStatus::declared);
}

// Two maps on the x-axis embedded in the plane (degenerate affine hull).
inline IfsSystem planar_line() {
    return make_system(2, Mode::exact,
                       {sim2(Rat(1, 4), Rat(0), Rat(0)), sim2(Rat(1, 4), Rat(3, 4), Rat(0))},
                       OscStatus::declared);
}

} // namespace ifsx::testing
