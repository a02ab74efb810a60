#include "ifsx/svg.hpp"

#include "ifsx/attractor.hpp"

#include <sstream>
#include <stdexcept>

namespace ifsx {

namespace {

const char* kPalette[10] = {
    "#4363d8", "#e6194b", "#3cb44b", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#808000", "#008080",
};

constexpr int kCanvas = 800;
constexpr int kMargin = 20;
constexpr int kBarHeight = 40;

std::string fixed(const Rat& r) { return r.decimal(4); }

// Color index: the component holding the first symbol of the word.
int component_of(const ComponentPartition& partition, int symbol) {
    for (std::size_t c = 0; c < partition.components.size(); ++c)
        for (int i : partition.components[c])
            if (i == symbol) return static_cast<int>(c);
    return 0;
}

} // namespace

std::string render_svg(const IfsSystem& sys, int depth, const ComponentPartition& partition,
                       std::uint64_t budget) {
    if (sys.dim > 2)
        throw std::invalid_argument("render_svg: only dimensions 1 and 2 are supported");
    if (depth < 1) throw std::invalid_argument("render_svg: depth must be at least 1");

    const AttractorContext ctx = make_context(sys);
    const CylinderCover cover = refine_cover(ctx, depth, budget);

    const int inner = kCanvas - 2 * kMargin;

    if (sys.dim == 1) {
        Rat world_lo = (ctx.root.center[0] - ctx.root.radius).lo();
        Rat world_hi = (ctx.root.center[0] + ctx.root.radius).hi();
        if (!(world_lo < world_hi)) {
            world_lo = world_lo - Rat(1, 2);
            world_hi = world_hi + Rat(1, 2);
        }
        const Rat span = world_hi - world_lo;
        const Rat scale = Rat(inner) / span;

        const int height = 2 * kMargin + kBarHeight;
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
           << height << "\" viewBox=\"0 0 " << kCanvas << " " << height << "\">\n";
        os << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << height
           << "\" fill=\"#ffffff\"/>\n";
        for (const CoverEntry& e : cover.entries) {
            const Rat lo = (e.ball.center[0] - e.ball.radius).lo();
            const Rat hi = (e.ball.center[0] + e.ball.radius).hi();
            const Rat x = Rat(kMargin) + (lo - world_lo) * scale;
            const Rat w = (hi - lo) * scale;
            const int color = component_of(partition, e.word.front()) % 10;
            os << "<rect class=\"bar\" x=\"" << fixed(x) << "\" y=\"" << kMargin
               << "\" width=\"" << fixed(w) << "\" height=\"" << kBarHeight << "\" fill=\""
               << kPalette[color] << "\"/>\n";
        }
        os << "</svg>\n";
        return os.str();
    }

    // Dimension 2: uniform scale fitted to the root box, y axis flipped.
    Rat lo_x = (ctx.root.center[0] - ctx.root.radius).lo();
    Rat hi_x = (ctx.root.center[0] + ctx.root.radius).hi();
    Rat lo_y = (ctx.root.center[1] - ctx.root.radius).lo();
    Rat hi_y = (ctx.root.center[1] + ctx.root.radius).hi();
    if (!(lo_x < hi_x)) {
        lo_x = lo_x - Rat(1, 2);
        hi_x = hi_x + Rat(1, 2);
    }
    if (!(lo_y < hi_y)) {
        lo_y = lo_y - Rat(1, 2);
        hi_y = hi_y + Rat(1, 2);
    }
    const Rat span = max(hi_x - lo_x, hi_y - lo_y);
    const Rat scale = Rat(inner) / span;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
       << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kCanvas << "\" height=\"" << kCanvas
       << "\" fill=\"#ffffff\"/>\n";
    for (const CoverEntry& e : cover.entries) {
        const Rat cx = Rat(kMargin) + (e.ball.center[0].lo() - lo_x) * scale;
        const Rat cy = Rat(kMargin) + (hi_y - e.ball.center[1].lo()) * scale;
        const Rat r = e.ball.radius.hi() * scale;
        const int color = component_of(partition, e.word.front()) % 10;
        os << "<circle class=\"cyl\" cx=\"" << fixed(cx) << "\" cy=\"" << fixed(cy)
           << "\" r=\"" << fixed(r) << "\" fill=\"" << kPalette[color]
           << "\" fill-opacity=\"0.6\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace ifsx
