#include "ifsx/separation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ifsx {

bool is_disjoint(const IntersectionVerdict& v) {
    return std::holds_alternative<CertifiedDisjoint>(v);
}
bool is_intersect(const IntersectionVerdict& v) {
    return std::holds_alternative<CertifiedIntersect>(v);
}
bool is_undecided(const IntersectionVerdict& v) {
    return std::holds_alternative<Undecided>(v);
}

std::string verdict_str(const IntersectionVerdict& v) {
    if (const auto* d = std::get_if<CertifiedDisjoint>(&v))
        return "disjoint (gap >= " + d->gap.lo().str() + ")";
    if (const auto* w = std::get_if<CertifiedIntersect>(&v)) {
        std::string s = "intersect (witness";
        for (const auto& c : w->witness) s += " " + c.str();
        s += ", addresses " + word_str(w->address_a.preperiod) + "·fix" +
             word_str(w->address_a.period) + " = " + word_str(w->address_b.preperiod) +
             "·fix" + word_str(w->address_b.period) + ")";
        return s;
    }
    const auto& u = std::get<Undecided>(v);
    return "undecided (distance <= " + u.upper.hi().decimal(9) + " after " +
           std::to_string(u.nodes_expanded) + " expansions)";
}

IntersectionVerdict decide_intersection(const AttractorContext& ctx, int i, int j,
                                        const Budget& budget) {
    const int n = ctx.sys->count();
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("map index out of range");
    if (i == j) throw std::invalid_argument("intersection verdict needs distinct indices");
    const DistanceBounds d = set_distance(ctx, {Word{i}}, {Word{j}}, budget);
    if (d.intersect)
        return CertifiedIntersect{d.witness_point, *d.witness_a, *d.witness_b};
    if (d.lower.lo().sign() > 0) return CertifiedDisjoint{d.lower};
    return Undecided{d.upper, d.nodes_expanded};
}

AdjacencyGraph adjacency_graph(const AttractorContext& ctx, const Budget& budget) {
    AdjacencyGraph g;
    g.n = ctx.sys->count();
    for (int i = 0; i < g.n; ++i) {
        for (int j = i + 1; j < g.n; ++j) {
            IntersectionVerdict v = decide_intersection(ctx, i, j, budget);
            if (is_intersect(v)) g.edges.emplace_back(i, j);
            if (is_undecided(v)) g.undecided.emplace_back(i, j);
            g.pairs.emplace_back(i, j);
            g.verdicts.push_back(std::move(v));
        }
    }
    return g;
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};
} // namespace

ComponentPartition components(const AdjacencyGraph& g) {
    UnionFind uf(g.n);
    for (const auto& [i, j] : g.edges) uf.unite(i, j);
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) buckets[static_cast<std::size_t>(uf.find(i))].push_back(i);
    ComponentPartition p;
    for (auto& b : buckets)
        if (!b.empty()) p.components.push_back(std::move(b));
    p.provisional = !g.undecided.empty();
    return p;
}

ComponentPropertyReport verify_component_properties(const AttractorContext& ctx,
                                                    const ComponentPartition& partition,
                                                    const Budget& budget) {
    // Sanity: the partition must cover {0..N-1} exactly once.
    std::vector<int> seen(static_cast<std::size_t>(ctx.sys->count()), 0);
    for (const auto& comp : partition.components)
        for (int i : comp) {
            if (i < 0 || i >= ctx.sys->count())
                throw std::invalid_argument("partition index out of range");
            ++seen[static_cast<std::size_t>(i)];
        }
    for (int c : seen)
        if (c != 1) throw std::invalid_argument("partition does not cover every map exactly once");

    const AdjacencyGraph g = adjacency_graph(ctx, budget);
    ComponentPropertyReport report;
    report.all_pass = true;
    for (std::size_t k = 0; k < partition.components.size(); ++k) {
        const auto& comp = partition.components[k];
        ComponentPropertyReport::PerComponent row;
        row.index = static_cast<int>(k);

        // (i) separation from the complement.
        std::vector<Word> inside, outside;
        for (int i : comp) inside.push_back(Word{i});
        for (int i = 0; i < ctx.sys->count(); ++i)
            if (std::find(comp.begin(), comp.end(), i) == comp.end())
                outside.push_back(Word{i});
        if (outside.empty()) {
            row.separation = Cmp::greater; // vacuous: single component
            row.gap = Scalar::exact(Rat(0));
        } else {
            const DistanceBounds d = set_distance(ctx, inside, outside, budget);
            row.gap = d.lower;
            if (d.intersect)
                row.separation = Cmp::less; // provably NOT separated
            else if (d.lower.lo().sign() > 0)
                row.separation = Cmp::greater;
            else
                row.separation = Cmp::unknown;
        }

        // (ii) connectivity via certified edges inside the component.
        UnionFind uf(ctx.sys->count());
        for (const auto& [i, j] : g.edges) {
            const bool i_in = std::find(comp.begin(), comp.end(), i) != comp.end();
            const bool j_in = std::find(comp.begin(), comp.end(), j) != comp.end();
            if (i_in && j_in) uf.unite(i, j);
        }
        row.connected = true;
        for (int i : comp)
            if (uf.find(i) != uf.find(comp[0])) row.connected = false;

        if (!(row.separation == Cmp::greater && row.connected)) report.all_pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

SscResult check_ssc(const AttractorContext& ctx, const Budget& budget) {
    SscResult r;
    r.status = SscResult::Status::certified_ssc;
    bool first = true;
    Rat delta(0);
    for (int i = 0; i < ctx.sys->count(); ++i) {
        for (int j = i + 1; j < ctx.sys->count(); ++j) {
            IntersectionVerdict v = decide_intersection(ctx, i, j, budget);
            if (const auto* d = std::get_if<CertifiedDisjoint>(&v)) {
                if (first || d->gap.lo() < delta) delta = d->gap.lo();
                first = false;
                continue;
            }
            if (is_intersect(v)) {
                r.status = SscResult::Status::certified_not_ssc;
                r.witness_pair = {i, j};
                r.witness_verdict = std::move(v);
                return r;
            }
            r.undecided_pairs.emplace_back(i, j);
        }
    }
    if (!r.undecided_pairs.empty()) {
        r.status = SscResult::Status::undecided;
        return r;
    }
    r.delta = Scalar::exact(delta);
    return r;
}

namespace {

// Closed axis-aligned box used during coverage subtraction.
struct ClosedBox {
    std::vector<Rat> lo, hi;
};

// Pieces of `piece` \ open(box); degenerate (zero-width) remainders are kept,
// since an uncovered point matters for open-cover semantics.
std::vector<ClosedBox> subtract_open(const ClosedBox& piece, const BoxU& box) {
    const std::size_t d = piece.lo.size();
    // Empty overlap: subtraction changes nothing.
    for (std::size_t ax = 0; ax < d; ++ax)
        if (piece.hi[ax] <= box.lo[ax] || piece.lo[ax] >= box.hi[ax]) return {piece};
    std::vector<ClosedBox> out;
    ClosedBox core = piece; // the part still inside the open box, per axis
    for (std::size_t ax = 0; ax < d; ++ax) {
        if (core.lo[ax] < box.lo[ax]) { // left slab, up to the closed boundary
            ClosedBox slab = core;
            slab.hi[ax] = box.lo[ax];
            out.push_back(std::move(slab));
            core.lo[ax] = box.lo[ax];
        }
        if (core.hi[ax] > box.hi[ax]) { // right slab
            ClosedBox slab = core;
            slab.lo[ax] = box.hi[ax];
            out.push_back(std::move(slab));
            core.hi[ax] = box.hi[ax];
        }
        // Boundary slabs at exactly lo/hi of the open box: the remaining core
        // touching the boundary is NOT inside the open box.  Keep degenerate
        // faces only when the core sits exactly on them.
        if (core.lo[ax] == box.lo[ax]) {
            ClosedBox face = core;
            face.hi[ax] = face.lo[ax];
            out.push_back(std::move(face));
        }
        if (core.hi[ax] == box.hi[ax]) {
            ClosedBox face = core;
            face.lo[ax] = face.hi[ax];
            out.push_back(std::move(face));
        }
    }
    return out;
}

bool intersects_open(const ClosedBox& piece, const BoxU& open) {
    for (std::size_t ax = 0; ax < piece.lo.size(); ++ax)
        if (!(piece.hi[ax] > open.lo[ax] && piece.lo[ax] < open.hi[ax])) return false;
    return true;
}

// Image of an open box under a signed-permutation similitude, as an open box.
BoxU box_image(const Similitude& f, const BoxU& box) {
    const int d = f.dim();
    BoxU out;
    out.lo.assign(static_cast<std::size_t>(d), Rat(0));
    out.hi.assign(static_cast<std::size_t>(d), Rat(0));
    const Rat rho = f.ratio.value();
    for (int r = 0; r < d; ++r) {
        // Exactly one nonzero entry ±1 in row r.
        int col = -1;
        Rat sgn(0);
        for (int c = 0; c < d; ++c) {
            const Rat& e = f.rot.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].value();
            if (!e.is_zero()) {
                col = c;
                sgn = e;
            }
        }
        const Rat a = rho * sgn * box.lo[static_cast<std::size_t>(col)] +
                      f.shift[static_cast<std::size_t>(r)].value();
        const Rat b = rho * sgn * box.hi[static_cast<std::size_t>(col)] +
                      f.shift[static_cast<std::size_t>(r)].value();
        out.lo[static_cast<std::size_t>(r)] = min(a, b);
        out.hi[static_cast<std::size_t>(r)] = max(a, b);
    }
    return out;
}

} // namespace

OscCheck check_osc_witness(const IfsSystem& sys, const std::vector<BoxU>& boxes) {
    if (boxes.empty()) throw std::invalid_argument("witness needs at least one box");
    for (const auto& b : boxes) {
        if (static_cast<int>(b.lo.size()) != sys.dim ||
            static_cast<int>(b.hi.size()) != sys.dim)
            throw std::invalid_argument("witness box dimension mismatch");
        for (int ax = 0; ax < sys.dim; ++ax)
            if (!(b.lo[static_cast<std::size_t>(ax)] < b.hi[static_cast<std::size_t>(ax)]))
                throw std::invalid_argument("witness box must be open and nonempty");
    }
    for (const auto& f : sys.maps) {
        if (f.rot.kind != OrthoKind::signed_permutation)
            throw std::invalid_argument(
                "unsupported witness shape: orthogonal part is not a signed permutation, "
                "so box images are not boxes");
        if (!f.ratio.is_exact())
            throw std::invalid_argument(
                "unsupported witness shape: interval ratios cannot certify box coverage");
        for (const auto& e : f.shift)
            if (!e.is_exact())
                throw std::invalid_argument(
                    "unsupported witness shape: interval translations cannot certify coverage");
    }

    // Images of every witness box under every map.
    std::vector<std::vector<BoxU>> images(sys.maps.size());
    for (std::size_t i = 0; i < sys.maps.size(); ++i)
        for (const auto& b : boxes) images[i].push_back(box_image(sys.maps[i], b));

    OscCheck res;
    // Containment: every image box must be covered by the union of witness boxes.
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t k = 0; k < images[i].size(); ++k) {
            const BoxU& img = images[i][k];
            std::vector<ClosedBox> remainder = {{img.lo, img.hi}};
            for (const auto& w : boxes) {
                std::vector<ClosedBox> next;
                for (const auto& piece : remainder) {
                    auto parts = subtract_open(piece, w);
                    next.insert(next.end(), parts.begin(), parts.end());
                }
                remainder = std::move(next);
                if (remainder.empty()) break;
            }
            for (const auto& piece : remainder) {
                if (intersects_open(piece, img)) {
                    res.verified = false;
                    res.detail = "map " + std::to_string(i + 1) + " image of box " +
                                 std::to_string(k + 1) + " is not covered by the witness";
                    return res;
                }
            }
        }
    }
    // Pairwise disjointness of image unions (open boxes).
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            for (const auto& bi : images[i]) {
                for (const auto& bj : images[j]) {
                    bool disjoint = false;
                    for (int ax = 0; ax < sys.dim; ++ax) {
                        if (bi.hi[static_cast<std::size_t>(ax)] <=
                                bj.lo[static_cast<std::size_t>(ax)] ||
                            bj.hi[static_cast<std::size_t>(ax)] <=
                                bi.lo[static_cast<std::size_t>(ax)]) {
                            disjoint = true;
                            break;
                        }
                    }
                    if (!disjoint) {
                        res.verified = false;
                        res.detail = "images of maps " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) + " overlap";
                        return res;
                    }
                }
            }
        }
    }
    res.verified = true;
    res.detail = "all map images covered and pairwise disjoint";
    return res;
}

OscFromSsc osc_witness_from_ssc(const AttractorContext& ctx, const Scalar& delta) {
    if (!(delta.lo().sign() > 0))
        throw std::invalid_argument(
            "an open-set witness from strong separation needs a certified positive gap");
    OscFromSsc out;
    out.epsilon = Scalar::exact(delta.lo() / Rat(3));
    out.description =
        "open " + out.epsilon.lo().str() +
        "-neighborhood of the attractor: images lie in the neighborhoods of the "
        "pairwise-disjoint pieces, separated by more than twice the radius";
    (void)ctx;
    return out;
}

} // namespace ifsx
