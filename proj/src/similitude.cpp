#include "ifsx/similitude.hpp"

#include <stdexcept>

namespace ifsx {

Vec Similitude::apply(const Vec& x) const {
    return vec_add(vec_scale(ratio, mat_vec(rot.m, x)), shift);
}

std::optional<Vec> Similitude::fixed_point() const {
    const int d = dim();
    Mat a = mat_identity(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                ratio * rot.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return solve_linear(std::move(a), shift);
}

std::string Similitude::describe() const {
    std::string s = ratio.str() + "·R·x + (";
    for (int i = 0; i < dim(); ++i) {
        if (i) s += ", ";
        s += shift[static_cast<std::size_t>(i)].str();
    }
    s += ")";
    return s;
}

Similitude make_similitude(Scalar ratio, OrthogonalMap rot, Vec shift) {
    if (rot.dim() != static_cast<int>(shift.size()))
        throw std::invalid_argument("similitude dimension mismatch");
    if (!(ratio.lo().sign() > 0))
        throw std::invalid_argument("similitude ratio must be certifiably positive");
    if (!(ratio.hi() < Rat(1)))
        throw std::invalid_argument("similitude ratio must be certifiably below 1");
    Similitude s;
    s.ratio = std::move(ratio);
    s.rot = std::move(rot);
    s.shift = std::move(shift);
    return s;
}

Similitude compose(const Similitude& f, const Similitude& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("compose dimension mismatch");
    Similitude h;
    h.ratio = f.ratio * g.ratio;
    h.rot = ortho_compose(f.rot, g.rot);
    h.shift = f.apply(g.shift);
    return h;
}

Similitude left_quotient(const Similitude& f, const Similitude& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("quotient dimension mismatch");
    Scalar ratio = g.ratio / f.ratio;
    if (!(ratio.hi() < Rat(1)))
        throw std::invalid_argument(
            "left quotient requires the second ratio to be certifiably smaller");
    const OrthogonalMap ft = ortho_transpose(f.rot);
    Similitude h;
    h.ratio = std::move(ratio);
    h.rot = ortho_compose(ft, g.rot);
    h.shift = vec_scale(Scalar::exact(Rat(1)) / f.ratio, mat_vec(ft.m, vec_sub(g.shift, f.shift)));
    return h;
}

} // namespace ifsx
