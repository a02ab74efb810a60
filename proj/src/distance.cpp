#include "ifsx/distance.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace ifsx {

namespace {

// Lazily built per-word state: the composed cylinder map (nullopt = identity
// for the empty word), its ball, and the exact sample points pushed through
// it (sorted by first coordinate in dimension 1).
struct WordData {
    std::optional<Similitude> sim;
    Ball ball;
    bool samples_ready = false;
    std::vector<std::pair<Vec, std::size_t>> samples; // (point, pool index)
};

struct Side {
    const AttractorContext* ctx;
    std::unordered_map<Word, WordData, WordHash> cache;

    WordData& data(const Word& w) {
        auto it = cache.find(w);
        if (it != cache.end()) return it->second;
        WordData d;
        if (w.empty()) {
            d.sim = std::nullopt;
            d.ball = ctx->root;
        } else {
            d.sim = cylinder_map(*ctx->sys, w);
            d.ball.center = d.sim->apply(ctx->root.center);
            d.ball.radius = d.sim->ratio * ctx->root.radius;
        }
        return cache.emplace(w, std::move(d)).first->second;
    }

    const std::vector<std::pair<Vec, std::size_t>>& samples(const Word& w) {
        WordData& d = data(w);
        if (!d.samples_ready) {
            d.samples.reserve(ctx->pool.size());
            for (std::size_t i = 0; i < ctx->pool.size(); ++i) {
                const Vec& p = ctx->pool[i].point;
                d.samples.emplace_back(d.sim ? d.sim->apply(p) : p, i);
            }
            if (ctx->sys->dim == 1) {
                std::sort(d.samples.begin(), d.samples.end(),
                          [](const auto& a, const auto& b) { return a.first[0].lo() < b.first[0].lo(); });
            }
            d.samples_ready = true;
        }
        return d.samples;
    }
};

struct Node {
    Rat gap; // certified lower bound on dist between the two balls
    Word wa, wb;
};

struct NodeOrder {
    // priority_queue keeps the LARGEST element on top, so this returns true
    // when `a` is worse (larger gap, or lexicographically later on ties).
    bool operator()(const Node& a, const Node& b) const {
        if (a.gap != b.gap) return a.gap > b.gap;
        if (a.wa != b.wa) return a.wa > b.wa;
        return a.wb > b.wb;
    }
};

Rat ball_gap(const Ball& x, const Ball& y) {
    return dist(x.center, y.center).lo() - x.radius.hi() - y.radius.hi();
}

PeriodicAddress sample_address(const AttractorContext& ctx, const Word& w, std::size_t pool_idx) {
    const PeriodicSample& s = ctx.pool[pool_idx];
    return PeriodicAddress{word_concat(w, s.preperiod), s.period};
}

} // namespace

DistanceBounds set_distance(const AttractorContext& a, const std::vector<Word>& words_a,
                            const AttractorContext& b, const std::vector<Word>& words_b,
                            const Budget& budget) {
    if (a.sys->dim != b.sys->dim)
        throw std::invalid_argument("set distance: ambient dimensions differ");
    if (words_a.empty() || words_b.empty())
        throw std::invalid_argument("set distance: word lists must be nonempty");

    Side sa{&a, {}};
    Side sb{&b, {}};

    DistanceBounds out;
    out.lower = Scalar::exact(Rat(0));

    // Upper bound and witness tracking over exact sample pairs; distances are
    // compared squared (exact) and rooted only at the end.
    std::optional<Rat> best_sq;
    std::optional<Rat> fallback_upper; // ball-based, for empty sample pools
    const int dim = a.sys->dim;

    auto scan_pair_samples = [&](const Word& wa, const Word& wb) -> bool {
        const auto& pa = sa.samples(wa);
        const auto& pb = sb.samples(wb);
        if (pa.empty() || pb.empty()) return false;
        auto consider = [&](const std::pair<Vec, std::size_t>& x,
                            const std::pair<Vec, std::size_t>& y) -> bool {
            const Vec diff = vec_sub(x.first, y.first);
            const Scalar sq = norm_sq(diff);
            if (!best_sq || sq.hi() < *best_sq) best_sq = sq.hi();
            if (sq.is_exact_zero()) {
                out.intersect = true;
                out.witness_a = sample_address(a, wa, x.second);
                out.witness_b = sample_address(b, wb, y.second);
                out.witness_point = x.first;
                return true;
            }
            return false;
        };
        if (dim == 1) {
            // Both lists are sorted by value; the classic smallest-difference
            // merge examines every locally-facing pair, which includes the
            // minimizing one.
            std::size_t i = 0, j = 0;
            while (i < pa.size() && j < pb.size()) {
                if (consider(pa[i], pb[j])) return true;
                if (pa[i].first[0].lo() <= pb[j].first[0].lo())
                    ++i;
                else
                    ++j;
            }
        } else {
            for (const auto& x : pa)
                for (const auto& y : pb)
                    if (consider(x, y)) return true;
        }
        return false;
    };

    std::priority_queue<Node, std::vector<Node>, NodeOrder> pq;
    for (const Word& wa : words_a) {
        for (const Word& wb : words_b) {
            const Ball& ba = sa.data(wa).ball;
            const Ball& bb = sb.data(wb).ball;
            pq.push({ball_gap(ba, bb), wa, wb});
            const Rat rough =
                dist(ba.center, bb.center).hi() + ba.radius.hi() + bb.radius.hi();
            if (!fallback_upper || rough < *fallback_upper) fallback_upper = rough;
            if (scan_pair_samples(wa, wb)) {
                out.lower = Scalar::exact(Rat(0));
                out.upper = Scalar::exact(Rat(0));
                return out;
            }
        }
    }

    std::optional<Rat> stalled_min;
    while (!pq.empty()) {
        const Node top = pq.top();
        if (top.gap.sign() > 0) break; // every remaining pair is separated
        pq.pop();
        out.depth_reached =
            std::max(out.depth_reached,
                     static_cast<int>(std::max(top.wa.size(), top.wb.size())));

        const bool can_a = static_cast<int>(top.wa.size()) < budget.max_depth;
        const bool can_b = static_cast<int>(top.wb.size()) < budget.max_depth;
        if (!can_a && !can_b) {
            if (!stalled_min || top.gap < *stalled_min) stalled_min = top.gap;
            continue;
        }
        if (out.nodes_expanded >= budget.max_nodes) {
            out.budget_exhausted = true;
            pq.push(top);
            break;
        }
        ++out.nodes_expanded;

        const Ball& ba = sa.data(top.wa).ball;
        const Ball& bb = sb.data(top.wb).ball;
        bool expand_a = can_a;
        if (can_a && can_b) expand_a = !(ba.radius.hi() < bb.radius.hi());
        if (expand_a) {
            for (int i = 0; i < a.sys->count(); ++i) {
                Word w = top.wa;
                w.push_back(i);
                const Ball& child = sa.data(w).ball;
                const Rat gap = ball_gap(child, bb);
                pq.push({gap, w, top.wb});
                // Only overlapping pairs can hold an intersection witness.
                if (gap.sign() <= 0 && scan_pair_samples(w, top.wb)) {
                    out.lower = Scalar::exact(Rat(0));
                    out.upper = Scalar::exact(Rat(0));
                    return out;
                }
            }
        } else {
            for (int i = 0; i < b.sys->count(); ++i) {
                Word w = top.wb;
                w.push_back(i);
                const Ball& child = sb.data(w).ball;
                const Rat gap = ball_gap(ba, child);
                pq.push({gap, top.wa, w});
                if (gap.sign() <= 0 && scan_pair_samples(top.wa, w)) {
                    out.lower = Scalar::exact(Rat(0));
                    out.upper = Scalar::exact(Rat(0));
                    return out;
                }
            }
        }
    }

    Rat lower(0);
    bool have_lower = false;
    if (!pq.empty()) {
        lower = pq.top().gap;
        have_lower = true;
    }
    if (stalled_min && (!have_lower || *stalled_min < lower)) {
        lower = *stalled_min;
        have_lower = true;
    }
    if (!have_lower) lower = Rat(0); // no pairs left to separate further
    out.lower = Scalar::exact(max(Rat(0), lower));

    if (best_sq) {
        // Exact when the squared distance is a perfect rational square
        // (always in dimension 1); a certified upper enclosure otherwise.
        out.upper = Scalar::exact(sqrt_scalar(Scalar::exact(*best_sq)).hi());
    } else {
        out.upper = Scalar::exact(*fallback_upper);
    }
    return out;
}

DistanceBounds set_distance(const AttractorContext& ctx, const std::vector<Word>& words_a,
                            const std::vector<Word>& words_b, const Budget& budget) {
    return set_distance(ctx, words_a, ctx, words_b, budget);
}

} // namespace ifsx
