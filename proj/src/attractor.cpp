#include "ifsx/attractor.hpp"

#include "ifsx/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace ifsx {

Ball invariant_ball(const IfsSystem& sys) {
    const auto c = sys.maps[0].fixed_point();
    if (!c)
        throw std::domain_error(
            "invariant ball: the first map's fixed point is not certifiable");
    Rat r(0);
    for (const auto& f : sys.maps) r = max(r, norm(vec_sub(f.apply(*c), *c)).hi());
    const Rat denom = Rat(1) - sys.max_ratio().hi();
    return Ball{*c, Scalar::exact(r / denom)};
}

namespace {

// One-dimensional affine form a·x + t of a similitude (exact mode).
struct Aff1 {
    Rat slope, shift;
    Rat at(const Rat& x) const { return slope * x + shift; }
};

struct EndpointPattern {
    int min_map = -1;
    bool min_at_hi = false;
    int max_map = -1;
    bool max_at_hi = false;
    bool operator==(const EndpointPattern&) const = default;
};

EndpointPattern hull_step(const std::vector<Aff1>& fs, Rat& lo, Rat& hi) {
    EndpointPattern p;
    Rat new_lo, new_hi;
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        for (int e = 0; e < 2; ++e) {
            const Rat v = fs[static_cast<std::size_t>(i)].at(e ? hi : lo);
            if (p.min_map < 0 || v < new_lo) {
                new_lo = v;
                p.min_map = i;
                p.min_at_hi = (e == 1);
            }
            if (p.max_map < 0 || v > new_hi) {
                new_hi = v;
                p.max_map = i;
                p.max_at_hi = (e == 1);
            }
        }
    }
    lo = new_lo;
    hi = new_hi;
    return p;
}

} // namespace

std::optional<std::pair<Rat, Rat>> exact_hull_1d(const IfsSystem& sys) {
    if (sys.dim != 1 || sys.mode != Mode::exact) return std::nullopt;
    std::vector<Aff1> fs;
    fs.reserve(sys.maps.size());
    for (const auto& f : sys.maps) {
        if (!f.ratio.is_exact() || !f.rot.m[0][0].is_exact() || !f.shift[0].is_exact())
            return std::nullopt;
        fs.push_back({f.ratio.value() * f.rot.m[0][0].value(), f.shift[0].value()});
    }
    const Ball b = invariant_ball(sys);
    Rat lo = b.center[0].value() - b.radius.value();
    Rat hi = b.center[0].value() + b.radius.value();

    EndpointPattern prev;
    for (int iter = 0; iter < 64; ++iter) {
        const EndpointPattern pat = hull_step(fs, lo, hi);
        if (iter > 0 && pat == prev) {
            // Solve a = f_p(x_p), b = f_q(x_q) with x chosen per the pattern.
            const Aff1& fp = fs[static_cast<std::size_t>(pat.min_map)];
            const Aff1& fq = fs[static_cast<std::size_t>(pat.max_map)];
            Mat m(2, Vec(2, Scalar::exact(Rat(0))));
            m[0][0] = Scalar::exact(pat.min_at_hi ? Rat(1) : Rat(1) - fp.slope);
            m[0][1] = Scalar::exact(pat.min_at_hi ? -fp.slope : Rat(0));
            m[1][0] = Scalar::exact(pat.max_at_hi ? Rat(0) : -fq.slope);
            m[1][1] = Scalar::exact(pat.max_at_hi ? Rat(1) - fq.slope : Rat(1));
            const Vec rhs = {Scalar::exact(fp.shift), Scalar::exact(fq.shift)};
            if (const auto sol = solve_linear(m, rhs)) {
                Rat a = (*sol)[0].value();
                Rat c = (*sol)[1].value();
                if (a <= c) {
                    Rat ta = a, tc = c;
                    hull_step(fs, ta, tc);
                    if (ta == a && tc == c) return std::make_pair(a, c);
                }
            }
        }
        prev = pat;
    }
    return std::nullopt;
}

Ball root_enclosure(const IfsSystem& sys) {
    if (const auto hull = exact_hull_1d(sys)) {
        const Rat mid = (hull->first + hull->second) / Rat(2);
        const Rat rad = (hull->second - hull->first) / Rat(2);
        return Ball{{Scalar::exact(mid)}, Scalar::exact(rad)};
    }
    return invariant_ball(sys);
}

AttractorContext make_context(const IfsSystem& sys) {
    AttractorContext ctx;
    ctx.sys = &sys;
    ctx.root = root_enclosure(sys);
    const int n = sys.count();
    const bool pairs = n <= 40 && (sys.dim == 1 || n <= 8);
    for (int i = 0; i < n; ++i) {
        if (const auto p = sys.maps[static_cast<std::size_t>(i)].fixed_point())
            ctx.pool.push_back({Word{}, Word{i}, *p});
    }
    if (pairs) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                const Word w{i, j};
                if (const auto p = cylinder_map(sys, w).fixed_point())
                    ctx.pool.push_back({Word{}, w, *p});
            }
        }
    }
    return ctx;
}

namespace {

void cover_dfs_depth(const AttractorContext& ctx, const Similitude* prefix, Word& word,
                     int remaining, std::vector<CoverEntry>& out) {
    const IfsSystem& sys = *ctx.sys;
    if (remaining == 0) {
        Ball b;
        if (prefix) {
            b.center = prefix->apply(ctx.root.center);
            b.radius = prefix->ratio * ctx.root.radius;
        } else {
            b = ctx.root;
        }
        out.push_back({word, std::move(b)});
        return;
    }
    for (int i = 0; i < sys.count(); ++i) {
        const Similitude& f = sys.maps[static_cast<std::size_t>(i)];
        Similitude next = prefix ? compose(*prefix, f) : f;
        word.push_back(i);
        cover_dfs_depth(ctx, &next, word, remaining - 1, out);
        word.pop_back();
    }
}

} // namespace

CylinderCover refine_cover(const AttractorContext& ctx, int depth, std::uint64_t budget) {
    if (depth < 0) throw std::invalid_argument("cover depth must be nonnegative");
    std::uint64_t total = 1;
    for (int i = 0; i < depth; ++i) {
        total *= static_cast<std::uint64_t>(ctx.sys->count());
        if (total > budget)
            throw BudgetError("cover of depth " + std::to_string(depth) + " needs " +
                              std::to_string(total) + "+ balls, over the budget of " +
                              std::to_string(budget));
    }
    CylinderCover cover;
    cover.depth = depth;
    cover.entries.reserve(total);
    Word w;
    cover_dfs_depth(ctx, nullptr, w, depth, cover.entries);
    cover.max_radius = Scalar::exact(Rat(0));
    for (const auto& e : cover.entries)
        if (e.ball.radius.hi() > cover.max_radius.hi()) cover.max_radius = e.ball.radius;
    return cover;
}

namespace {

void cover_dfs_radius(const AttractorContext& ctx, const Similitude* prefix, Word& word,
                      const Rat& target, std::uint64_t budget, std::vector<CoverEntry>& out) {
    const IfsSystem& sys = *ctx.sys;
    const Scalar radius = prefix ? prefix->ratio * ctx.root.radius : ctx.root.radius;
    if (radius.hi() <= target) {
        if (out.size() >= budget)
            throw BudgetError("radius-matched cover exceeds the budget of " +
                              std::to_string(budget) + " balls");
        Ball b;
        b.center = prefix ? prefix->apply(ctx.root.center) : ctx.root.center;
        b.radius = radius;
        out.push_back({word, std::move(b)});
        return;
    }
    for (int i = 0; i < sys.count(); ++i) {
        const Similitude& f = sys.maps[static_cast<std::size_t>(i)];
        Similitude next = prefix ? compose(*prefix, f) : f;
        word.push_back(i);
        cover_dfs_radius(ctx, &next, word, target, budget, out);
        word.pop_back();
    }
}

} // namespace

std::vector<CoverEntry> refine_to_radius(const AttractorContext& ctx, const Rat& target,
                                         std::uint64_t budget) {
    if (target.sign() <= 0) throw std::invalid_argument("target radius must be positive");
    std::vector<CoverEntry> out;
    Word w;
    cover_dfs_radius(ctx, nullptr, w, target, budget, out);
    return out;
}

Vec periodic_point(const IfsSystem& sys, const Word& u, const Word& w) {
    if (w.empty()) throw std::invalid_argument("periodic word must be nonempty");
    const auto fix = cylinder_map(sys, w).fixed_point();
    if (!fix) throw std::domain_error("periodic point not certifiable in interval mode");
    Vec p = *fix;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
        if (*it < 0 || *it >= sys.count())
            throw std::invalid_argument("preperiod symbol out of range");
        p = sys.maps[static_cast<std::size_t>(*it)].apply(p);
    }
    return p;
}

namespace {

// Exact sample points: pool points pushed through prefix words of growing
// length, stopping when the next batch would exceed `cap` points or the
// prefix length would exceed `max_len`.
std::vector<Vec> sample_points(const AttractorContext& ctx, std::size_t cap, int max_len) {
    const IfsSystem& sys = *ctx.sys;
    std::vector<Vec> pts;
    for (const auto& s : ctx.pool) pts.push_back(s.point);
    if (ctx.pool.empty()) return pts;
    std::vector<Similitude> frontier = sys.maps;
    for (int len = 1; len <= max_len; ++len) {
        if (pts.size() + frontier.size() * ctx.pool.size() > cap) break;
        for (const auto& f : frontier)
            for (const auto& s : ctx.pool) pts.push_back(f.apply(s.point));
        if (len == max_len) break;
        std::vector<Similitude> next;
        next.reserve(frontier.size() * static_cast<std::size_t>(sys.count()));
        for (const auto& f : frontier)
            for (const auto& g : sys.maps) next.push_back(compose(f, g));
        frontier = std::move(next);
    }
    return pts;
}

} // namespace

std::pair<Scalar, Scalar> diameter_bounds(const AttractorContext& ctx, int depth) {
    const IfsSystem& sys = *ctx.sys;
    // Lower bound from exact points.
    const std::size_t cap = sys.dim == 1 ? 600 : 64;
    std::vector<Vec> pts = sample_points(ctx, cap, std::max(depth, 1));
    Scalar lower = Scalar::exact(Rat(0));
    if (sys.dim == 1 && !pts.empty()) {
        Rat lo = pts[0][0].lo(), hi = pts[0][0].hi();
        for (const auto& p : pts) {
            lo = min(lo, p[0].lo());
            hi = max(hi, p[0].hi());
        }
        lower = Scalar::exact(hi - lo);
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const Scalar d = dist(pts[i], pts[j]);
                if (d.lo() > lower.lo()) lower = Scalar::exact(d.lo());
            }
    }

    // Upper bound from a cover bounding box.
    int use_depth = depth;
    std::uint64_t total = 1;
    for (int k = 0; k < depth; ++k) {
        total *= static_cast<std::uint64_t>(sys.count());
        if (total > 4096) {
            use_depth = k;
            break;
        }
    }
    const CylinderCover cover = refine_cover(ctx, use_depth, 1u << 20);
    Vec width(static_cast<std::size_t>(sys.dim));
    for (int a = 0; a < sys.dim; ++a) {
        Rat lo, hi;
        bool first = true;
        for (const auto& e : cover.entries) {
            const Rat l = e.ball.center[static_cast<std::size_t>(a)].lo() - e.ball.radius.hi();
            const Rat h = e.ball.center[static_cast<std::size_t>(a)].hi() + e.ball.radius.hi();
            if (first || l < lo) lo = l;
            if (first || h > hi) hi = h;
            first = false;
        }
        width[static_cast<std::size_t>(a)] = Scalar::exact(hi - lo);
    }
    const Scalar upper = Scalar::exact(norm(width).hi());
    return {lower, upper};
}

// max over entries of A of [r_a + min over B of (certified dist + r_b)].
// Any point of the A-attractor inside ball a is within r_a of its center,
// within dist+r_b of the chosen B-center's ball, and that ball meets the
// B-attractor — so the sum bounds sup_x d(x, E_B).  Restricting the min to a
// candidate subset only loosens (never unsounds) the bound.
Rat directed_cover_bound(const std::vector<CoverEntry>& a, const std::vector<CoverEntry>& b,
                         int dim) {
    Rat worst(0);
    if (dim == 1) {
        std::vector<std::size_t> order(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return b[x].ball.center[0].lo() < b[y].ball.center[0].lo();
        });
        std::vector<Rat> keys;
        keys.reserve(b.size());
        for (std::size_t i : order) keys.push_back(b[i].ball.center[0].lo());
        for (const auto& ea : a) {
            const Rat c = ea.ball.center[0].lo();
            auto it = std::lower_bound(keys.begin(), keys.end(), c);
            Rat best;
            bool have = false;
            auto consider = [&](std::size_t pos) {
                const CoverEntry& eb = b[order[pos]];
                const Scalar diff = ea.ball.center[0] - eb.ball.center[0];
                const Rat v = diff.abs().hi() + eb.ball.radius.hi();
                if (!have || v < best) {
                    best = v;
                    have = true;
                }
            };
            if (it != keys.end()) consider(static_cast<std::size_t>(it - keys.begin()));
            if (it != keys.begin()) consider(static_cast<std::size_t>(it - keys.begin()) - 1);
            const Rat total = ea.ball.radius.hi() + best;
            if (total > worst) worst = total;
        }
    } else {
        for (const auto& ea : a) {
            Rat best;
            bool have = false;
            for (const auto& eb : b) {
                const Rat v = dist(ea.ball.center, eb.ball.center).hi() + eb.ball.radius.hi();
                if (!have || v < best) {
                    best = v;
                    have = true;
                }
            }
            const Rat total = ea.ball.radius.hi() + best;
            if (total > worst) worst = total;
        }
    }
    return worst;
}

Scalar hausdorff_distance_bound(const AttractorContext& a, const AttractorContext& b,
                                int depth, std::uint64_t budget) {
    if (a.sys->dim != b.sys->dim)
        throw std::invalid_argument("hausdorff bound: ambient dimensions differ");
    if (depth < 0) throw std::invalid_argument("hausdorff depth must be nonnegative");
    const Rat rho_ref = max(a.sys->max_ratio().hi(), b.sys->max_ratio().hi());
    const Rat scale = rho_ref.pow_int(depth);
    const Rat ta = scale * a.root.radius.hi();
    const Rat tb = scale * b.root.radius.hi();
    const auto ca = ta.sign() > 0 ? refine_to_radius(a, ta, budget)
                                  : std::vector<CoverEntry>{{Word{}, a.root}};
    const auto cb = tb.sign() > 0 ? refine_to_radius(b, tb, budget)
                                  : std::vector<CoverEntry>{{Word{}, b.root}};
    const Rat ab = directed_cover_bound(ca, cb, a.sys->dim);
    const Rat ba = directed_cover_bound(cb, ca, a.sys->dim);
    return Scalar::exact(max(ab, ba));
}

AttractorEvidence attractor_evidence(const AttractorContext& a, const AttractorContext& b,
                                     const Rat& threshold, int depth_cap,
                                     std::uint64_t budget) {
    if (depth_cap < 0) throw std::invalid_argument("evidence depth cap must be nonnegative");
    const std::uint64_t cover_budget = a.sys->dim == 1 ? budget : std::min<std::uint64_t>(budget, 5000);
    AttractorEvidence out;
    // Depth-0 bound straight from the root balls.
    out.bound = hausdorff_distance_bound(a, b, 0, cover_budget);
    out.depth_used = 0;
    if (out.bound.hi() <= threshold) {
        out.within = true;
        return out;
    }
    for (int depth = 1; depth <= depth_cap; ++depth) {
        Scalar bound;
        try {
            bound = hausdorff_distance_bound(a, b, depth, cover_budget);
        } catch (const BudgetError&) {
            out.budget_stopped = true;
            return out;
        }
        if (bound.hi() < out.bound.hi()) {
            out.bound = bound;
            out.depth_used = depth;
        }
        if (out.bound.hi() <= threshold) {
            out.within = true;
            return out;
        }
    }
    return out;
}

AffineHull affine_hull(const AttractorContext& ctx, int depth) {
    const std::size_t cap = ctx.sys->dim == 1 ? 64 : 128;
    const std::vector<Vec> pts = sample_points(ctx, cap, std::max(depth, 1));
    AffineHull hull;
    if (pts.empty()) return hull;
    hull.base = pts[0];
    for (const auto& p : pts) {
        if (static_cast<int>(hull.directions.size()) >= ctx.sys->dim) break;
        Vec v = vec_sub(p, hull.base);
        for (const auto& d : hull.directions) {
            const Scalar coeff = dot(v, d) / norm_sq(d);
            v = vec_sub(v, vec_scale(coeff, d));
        }
        if (norm_sq(v).certainly_positive()) hull.directions.push_back(std::move(v));
    }
    hull.dimension = static_cast<int>(hull.directions.size());
    return hull;
}

} // namespace ifsx
