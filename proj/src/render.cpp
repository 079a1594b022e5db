#include "apollo/render.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "apollo/replacement.hpp"

namespace apollo {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Drawn {
    bool line = false;
    int gen = 0;
    ExactReal x, y; // line: (0, height); round: exact center
    ExactReal radius;
    bool gray = false;
};

} // namespace

std::string render_svg(const RenderSpec& spec) {
    if (spec.width_px <= 0) throw NonPositiveInput("width_px must be positive");
    const ExactReal& lo = spec.window.first;
    const ExactReal& hi = spec.window.second;
    if (!(lo < hi)) throw EmptyWindow("window is empty");

    PackingContext ctx = make_packing(spec.alpha);

    EnumerateOptions opts;
    opts.include_offline = spec.include_offline_gasket;
    // A radius bound alone never leaves the wedge; the window supplies the
    // outward extent. A generation bound enumerates everything and lets the
    // x-extent test below decide.
    if (std::holds_alternative<MinRadius>(spec.depth)) opts.window = spec.window;
    Enumeration en = enumerate_packing(ctx, spec.depth, opts);

    std::vector<Label> gray;
    if (spec.highlight_trace) {
        if (*spec.highlight_trace < 0)
            throw NonPositiveInput("highlight_trace must be >= 0");
        ReplacementTrace tr =
            replace_trace(ctx, static_cast<std::size_t>(*spec.highlight_trace));
        std::size_t take = std::min(tr.states.size(),
                                    static_cast<std::size_t>(*spec.highlight_trace));
        for (std::size_t i = 0; i < take; ++i) {
            for (const Label* l : {&tr.states[i].x_label, &tr.states[i].y_label}) {
                if (sqrt_curvature(ctx, *l).is_zero()) continue; // halted line
                if (std::find(gray.begin(), gray.end(), *l) == gray.end())
                    gray.push_back(*l);
            }
        }
    }
    auto is_gray = [&](const Label& l) {
        return std::find(gray.begin(), gray.end(), l) != gray.end();
    };

    std::vector<Drawn> drawn;
    bool any_round = false;
    for (const Circle& c : en.circles) {
        if (const HLine* h = std::get_if<HLine>(&c.geom)) {
            drawn.push_back({true, c.generation, ExactReal(0), h->height, ExactReal(0), false});
            continue;
        }
        const Round& r = std::get<Round>(c.geom);
        if (r.cx + r.radius < lo || hi < r.cx - r.radius) continue;
        any_round = true;
        drawn.push_back({false, c.generation, r.cx, r.cy, r.radius,
                         c.label && is_gray(*c.label)});
    }
    for (const OfflineCircle& o : en.offline) {
        ExactReal r = o.curv.inverse();
        if (o.cx + r < lo || hi < o.cx - r) continue;
        any_round = true;
        drawn.push_back({false, o.generation, o.cx, o.cy, r, false});
    }
    if (!any_round) throw EmptyWindow("no circle intersects the window");

    std::sort(drawn.begin(), drawn.end(), [](const Drawn& p, const Drawn& q) {
        if (p.gen != q.gen) return p.gen < q.gen;
        if (p.line != q.line) return p.line; // lines first
        int c = ExactReal::compare(p.x, q.x);
        if (c != 0) return c < 0;
        return ExactReal::compare(p.y, q.y) < 0;
    });

    ExactReal top(0);
    for (const Drawn& d : drawn) {
        ExactReal t = d.line ? d.y : d.y + d.radius;
        if (t > top) top = t;
    }

    const double lo_f = lo.to_double();
    const double scale = spec.width_px / (hi.to_double() - lo_f);
    const double top_f = top.to_double();
    const double pad = 2.0;
    const double height_px = top_f * scale + 2 * pad;
    auto px = [&](double x) { return (x - lo_f) * scale; };
    auto py = [&](double y) { return pad + (top_f - y) * scale; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"";
    svg += fmt(spec.width_px);
    svg += "\" height=\"" + fmt(height_px);
    svg += "\" viewBox=\"0 0 " + fmt(spec.width_px) + " " + fmt(height_px);
    svg += "\" style=\"background-color:white\">\n";
    for (const Drawn& d : drawn) {
        if (d.line) {
            std::string y = fmt(py(d.y.to_double()));
            svg += "<line x1=\"0\" y1=\"" + y + "\" x2=\"" + fmt(spec.width_px) +
                   "\" y2=\"" + y + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        } else {
            svg += "<circle cx=\"" + fmt(px(d.x.to_double())) + "\" cy=\"" +
                   fmt(py(d.y.to_double())) + "\" r=\"" +
                   fmt(d.radius.to_double() * scale) + "\" stroke=\"black\" stroke-width=\"1\" fill=\"" +
                   (d.gray ? std::string("#c0c0c0") : std::string("none")) + "\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace apollo
