#include "apollo/packing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <utility>
#include <json.hpp>

namespace apollo {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

struct RawLabel {
    BigInt a, b;
};

RawLabel operator+(const RawLabel& x, const RawLabel& y) { return {x.a + y.a, x.b + y.b}; }
RawLabel operator-(const RawLabel& x, const RawLabel& y) { return {x.a - y.a, x.b - y.b}; }

BigInt det(const BigInt& a1, const BigInt& b1, const BigInt& a2, const BigInt& b2) {
    return a1 * b2 - b1 * a2;
}
BigInt det(const Label& l1, const Label& l2) { return det(l1.a, l1.b, l2.a, l2.b); }

ExactReal sqrt_curv_raw(const PackingContext& ctx, const BigInt& a, const BigInt& b) {
    return ExactReal(a) * ctx.alpha + ExactReal(b);
}

} // namespace

std::string to_string(const Label& l) {
    return "(" + l.a.str() + "," + l.b.str() + ")";
}

PackingContext make_packing(const ExactReal& alpha) {
    if (alpha.sign() <= 0) throw NonPositiveInput("alpha must be positive");
    return PackingContext{alpha};
}

Label normalize_label(const PackingContext& ctx, const BigInt& a, const BigInt& b) {
    if (gcd(abs(a), abs(b)) != 1) throw NotCoprime("label entries must be coprime");
    int s = sqrt_curv_raw(ctx, a, b).sign();
    if (s < 0 || (s == 0 && a < 0)) return Label{-a, -b};
    return Label{a, b};
}

ExactReal sqrt_curvature(const PackingContext& ctx, const Label& l) {
    if (gcd(abs(l.a), abs(l.b)) != 1) throw NotCoprime("label entries must be coprime");
    ExactReal s = sqrt_curv_raw(ctx, l.a, l.b);
    int sg = s.sign();
    if (sg < 0 || (sg == 0 && l.a < 0))
        throw UnnormalizedLabel("label is the mirror of a canonical one");
    return s;
}

ExactReal tangency_abscissa(const PackingContext& ctx, const Label& l) {
    ExactReal s = sqrt_curvature(ctx, l);
    if (s.is_zero()) throw LineOperand("a line has no tangency abscissa");
    return ExactReal(2 * l.b) / (ctx.alpha * s);
}

Circle base_line() { return Circle{std::nullopt, ExactReal(0), HLine{ExactReal(0)}, 0}; }

Circle circle_from_label(const PackingContext& ctx, const Label& l, int generation) {
    ExactReal s = sqrt_curvature(ctx, l);
    if (s.is_zero()) {
        // Top line of a strip; twice the radius of the row circles.
        ExactReal h = ExactReal(2 * l.a * l.a);
        return Circle{l, s, HLine{h}, generation};
    }
    ExactReal radius = (s * s).inverse();
    ExactReal t = ExactReal(2 * l.b) / (ctx.alpha * s);
    return Circle{l, s, Round{t, radius, radius}, generation};
}

Tangency tangent(const Circle& c1, const Circle& c2) {
    if (!c1.label || !c2.label) throw LineOperand("the base line carries no label");
    BigInt d = det(*c1.label, *c2.label);
    if (d == 1) return Tangency::LeftOf;
    if (d == -1) return Tangency::RightOf;
    return Tangency::None;
}

namespace {

bool is_line_circle(const Circle& c) { return std::holds_alternative<HLine>(c.geom); }

// Labels with the sign the pair's sides imply; a line member flips sign
// freely, a round member does not.
std::pair<RawLabel, RawLabel> effective_labels(const TangentPair& pair) {
    RawLabel l{pair.left.label->a, pair.left.label->b};
    RawLabel r{pair.right.label->a, pair.right.label->b};
    BigInt d = det(l.a, l.b, r.a, r.b);
    if (d == 1) return {l, r};
    if (d != -1) throw NotTangent("labels are not unimodular");
    if (is_line_circle(pair.left)) return {{-l.a, -l.b}, r};
    if (is_line_circle(pair.right)) return {l, {-r.a, -r.b}};
    throw InternalInconsistency("pair stored in reverse order");
}

} // namespace

TangentPair tangent_pair(const PackingContext& ctx, const Circle& c1, const Circle& c2) {
    if (!c1.label || !c2.label) throw LineOperand("the base line cannot join a pair");
    BigInt d = det(*c1.label, *c2.label);
    if (d != 1 && d != -1) throw NotTangent("circles are not tangent");
    if (is_line_circle(c1) || is_line_circle(c2)) return TangentPair{c1, c2};
    // Round-round order is forced: det +1 means c1 sits left of c2.
    if (d == 1) return TangentPair{c1, c2};
    TangentPair p{c2, c1};
    (void)ctx;
    return p;
}

Circle fill_bounded(const PackingContext& ctx, const TangentPair& pair) {
    auto [l, r] = effective_labels(pair);
    RawLabel sum = l + r;
    int gen = std::max(pair.left.generation, pair.right.generation) + 1;
    return circle_from_label(ctx, normalize_label(ctx, sum.a, sum.b), gen);
}

Circle fill_unbounded(const PackingContext& ctx, const TangentPair& pair, FillSide side) {
    if (is_line_circle(pair.left) || is_line_circle(pair.right))
        throw LineOperand("unbounded fill needs two circles");
    auto [l, r] = effective_labels(pair);
    RawLabel diff = side == FillSide::Left ? l - r : r - l;
    ExactReal s = sqrt_curv_raw(ctx, diff.a, diff.b);
    if (s.sign() < 0)
        throw SideMismatch("requested side does not hold the larger sqrt_curv");
    int gen = std::max(pair.left.generation, pair.right.generation) + 1;
    Circle out = circle_from_label(ctx, normalize_label(ctx, diff.a, diff.b), gen);
    if (const Round* round = std::get_if<Round>(&out.geom)) {
        const Circle& anchor = side == FillSide::Left ? pair.left : pair.right;
        const Round& ag = std::get<Round>(anchor.geom);
        bool ok = side == FillSide::Left ? round->cx < ag.cx : round->cx > ag.cx;
        if (!ok) throw InternalInconsistency("fill landed on the wrong side");
    }
    return out;
}

std::pair<BigInt, BigInt> unique_bezout(const BigInt& a, const BigInt& b) {
    if (a < 1 || b < 1) throw NonPositiveInput("bezout arguments must be positive");
    BigInt r0 = a, r1 = b, x0 = 1, x1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        x0 -= q * x1;
        std::swap(x0, x1);
    }
    if (r0 != 1) throw NotCoprime("bezout arguments must be coprime");
    BigInt u = ((x0 % b) + b) % b;
    if (u == 0) u = b;
    BigInt v = (a * u - 1) / b;
    return {u, v};
}

std::pair<Label, Label> parents(const Label& l) {
    if (l.a < 1 || l.b < 1)
        throw UnnormalizedLabel("parents exist for bounded wedge labels only");
    auto [u, v] = unique_bezout(l.a, l.b);
    Label second{v, u};
    Label first{l.a - v, l.b - u};
    return {first, second};
}

Label invert_label(const PackingContext& ctx, const Label& l, WedgeSide side) {
    (void)ctx; // the map is pure label arithmetic
    if (gcd(abs(l.a), abs(l.b)) != 1) throw NotCoprime("label entries must be coprime");
    Label m = side == WedgeSide::LeftOfX ? Label{l.a, -l.b} : Label{-l.a, l.b};
    // Generators are fixed points; fold the free sign so they return as themselves.
    if (m.b == 0 && m.a < 0) m.a = -m.a;
    if (m.a == 0 && m.b < 0) m.b = -m.b;
    return m;
}

namespace {

// Curvature and curvature-center vector; lines carry their unit normal in
// place of k * center, the base line (0,-1) and any top line (0,1).
struct GElem {
    ExactReal k, kzx, kzy;
};

GElem gelem_of(const Circle& c) {
    if (const Round* r = std::get_if<Round>(&c.geom)) {
        ExactReal k = r->radius.inverse();
        return {k, r->cx * k, r->cy * k};
    }
    const HLine& h = std::get<HLine>(c.geom);
    if (h.height.is_zero()) return {ExactReal(0), ExactReal(0), ExactReal(-1)};
    return {ExactReal(0), ExactReal(0), ExactReal(1)};
}

GElem reflect(const GElem& a, const GElem& b, const GElem& c, const GElem& out) {
    ExactReal two(2);
    return {two * (a.k + b.k + c.k) - out.k, two * (a.kzx + b.kzx + c.kzx) - out.kzx,
            two * (a.kzy + b.kzy + c.kzy) - out.kzy};
}

std::pair<ExactReal, ExactReal> complex_sq(const ExactReal& x, const ExactReal& y) {
    return {x * x - y * y, ExactReal(2) * x * y};
}

} // namespace

bool descartes_check(const PackingContext& ctx, const Circle& c1, const Circle& c2,
                     const Circle& c3, const Circle& c4) {
    (void)ctx;
    GElem g[4] = {gelem_of(c1), gelem_of(c2), gelem_of(c3), gelem_of(c4)};
    ExactReal ks, k2s, zx, zy, z2x, z2y;
    for (const GElem& e : g) {
        ks = ks + e.k;
        k2s = k2s + e.k * e.k;
        zx = zx + e.kzx;
        zy = zy + e.kzy;
        auto [sx, sy] = complex_sq(e.kzx, e.kzy);
        z2x = z2x + sx;
        z2y = z2y + sy;
    }
    if (!(ks * ks == ExactReal(2) * k2s)) return false;
    auto [tx, ty] = complex_sq(zx, zy);
    return tx == ExactReal(2) * z2x && ty == ExactReal(2) * z2y;
}

// ---- enumeration ---------------------------------------------------------

namespace {

struct Entry {
    Label label;
    ExactReal s, t; // t meaningless for a line entry
    int gen = 0;
    bool line = false;
};

// Frontier interstice between two tangent elements; effective labels carry
// the side-appropriate sign so the fill is a plain sum. At most one side is
// a line, making the gap one-sided infinite.
struct Gap {
    RawLabel left, right;
    int gen_left = 0, gen_right = 0;
    bool left_line = false, right_line = false;
    ExactReal t_left, t_right;
};

struct Triangle {
    GElem a, b, c, companion;
    int gen = 0;
};

struct Windowed {
    bool active = false;
    ExactReal lo, hi;

    bool contains(const ExactReal& t) const {
        return !active || (ExactReal::compare(lo, t) <= 0 && ExactReal::compare(t, hi) <= 0);
    }
    // Open interval (a, b) against [lo, hi].
    bool overlaps(const ExactReal& a, const ExactReal& b) const {
        return !active || (b > lo && a < hi);
    }
    bool overlaps_left_ray(const ExactReal& b) const { return !active || b > lo; }
    bool overlaps_right_ray(const ExactReal& a) const { return !active || a < hi; }
};

} // namespace

Enumeration enumerate_packing(const PackingContext& ctx, const Bound& bound,
                              const EnumerateOptions& opts) {
    const bool by_gen = std::holds_alternative<MaxGeneration>(bound);
    int max_gen = 0;
    ExactReal min_radius;
    if (by_gen) {
        max_gen = std::get<MaxGeneration>(bound).value;
        if (max_gen < 0) throw NonPositiveInput("generation bound must be >= 0");
    } else {
        min_radius = std::get<MinRadius>(bound).value;
        if (min_radius.sign() <= 0) throw NonPositiveInput("radius bound must be positive");
    }

    Windowed win;
    if (opts.window) {
        win.active = true;
        win.lo = opts.window->first;
        win.hi = opts.window->second;
        if (win.lo > win.hi) throw EmptyWindow("window is empty");
    }

    Label seed_a{1, 0}, seed_b{0, 1};
    if (opts.seed_pair) {
        seed_a = opts.seed_pair->first;
        seed_b = opts.seed_pair->second;
    }
    ExactReal s_a = sqrt_curvature(ctx, seed_a), s_b = sqrt_curvature(ctx, seed_b);
    if (s_a.is_zero() || s_b.is_zero()) throw LineOperand("seed circles must be round");
    ExactReal t_a = tangency_abscissa(ctx, seed_a), t_b = tangency_abscissa(ctx, seed_b);
    if (t_a > t_b) {
        std::swap(seed_a, seed_b);
        std::swap(s_a, s_b);
        std::swap(t_a, t_b);
    }
    if (det(seed_a, seed_b) != 1) throw NotTangent("seed circles are not tangent");

    auto radius_ok = [&](const ExactReal& s) {
        if (by_gen) return true;
        return (s * s) * min_radius <= ExactReal(1); // 1/s^2 >= min_radius
    };

    // Seeds drive the recursion regardless, but are reported only when they
    // themselves pass the filters.
    std::vector<Entry> entries;
    if (win.contains(t_a) && radius_ok(s_a)) entries.push_back({seed_a, s_a, t_a, 0, false});
    if (win.contains(t_b) && radius_ok(s_b)) entries.push_back({seed_b, s_b, t_b, 0, false});
    auto gelem_label = [&](const RawLabel& l, bool line) {
        if (line) return GElem{ExactReal(0), ExactReal(0), ExactReal(1)};
        ExactReal s = sqrt_curv_raw(ctx, l.a, l.b);
        ExactReal k = s * s;
        return GElem{k, ExactReal(2 * l.b) * s / ctx.alpha, ExactReal(1)};
    };

    std::vector<Gap> frontier;
    if (win.overlaps(t_a, t_b))
        frontier.push_back({{seed_a.a, seed_a.b}, {seed_b.a, seed_b.b}, 0, 0, false, false, t_a, t_b});

    // Outward chain state: the pair the next unbounded fill extends.
    RawLabel ox{seed_a.a, seed_a.b}, oy{seed_b.a, seed_b.b};
    ExactReal osx = s_a, osy = s_b, otx = t_a, oty = t_b;
    int ogenx = 0, ogeny = 0;
    bool outward_done = !by_gen && !win.active; // wedge-only MinRadius runs
    bool left_dead = false, right_dead = false;

    std::deque<Triangle> triangles;
    std::vector<OfflineCircle> offline;
    const GElem base{ExactReal(0), ExactReal(0), ExactReal(-1)};

    auto push_triangle = [&](const GElem& a, const GElem& b, const GElem& c, int gen) {
        if (!opts.include_offline) return;
        if (by_gen && gen > max_gen) return;
        triangles.push_back({a, b, c, base, gen});
    };

    std::optional<Entry> top_line;

    for (int g = 1;; ++g) {
        if (by_gen && g > max_gen) break;
        if (!by_gen && frontier.empty() && outward_done && triangles.empty()) break;
        if (g > 1000000) throw InternalInconsistency("enumeration failed to terminate");

        // Outward element of this generation.
        if (!outward_done && !(win.active && left_dead && right_dead)) {
            while (osx < osy) { // B swaps carry no circle
                std::swap(ox, oy);
                std::swap(osx, osy);
                std::swap(otx, oty);
                std::swap(ogenx, ogeny);
            }
            RawLabel diff = ox - oy;
            ExactReal s = osx - osy;
            if (s.is_zero()) {
                Label lam = normalize_label(ctx, diff.a, diff.b);
                top_line = Entry{lam, ExactReal(0), ExactReal(0), g, true};
                GElem gl = gelem_label({lam.a, lam.b}, true);
                push_triangle(gl, gelem_label(ox, false), gelem_label(oy, false), g + 1);
                // The line closes both ends: one gap beyond each extreme circle.
                RawLabel raw{lam.a, lam.b};
                const bool x_left = otx < oty;
                const RawLabel& lo_l = x_left ? ox : oy;
                const RawLabel& hi_l = x_left ? oy : ox;
                int lo_gen = x_left ? ogenx : ogeny, hi_gen = x_left ? ogeny : ogenx;
                const ExactReal& lo_t = x_left ? otx : oty;
                const ExactReal& hi_t = x_left ? oty : otx;
                RawLabel lam_left = det(raw.a, raw.b, lo_l.a, lo_l.b) == 1
                                        ? raw
                                        : RawLabel{-raw.a, -raw.b};
                RawLabel lam_right = det(hi_l.a, hi_l.b, raw.a, raw.b) == 1
                                         ? raw
                                         : RawLabel{-raw.a, -raw.b};
                if (win.overlaps_left_ray(lo_t))
                    frontier.push_back({lam_left, lo_l, g, lo_gen, true, false, ExactReal(0), lo_t});
                if (win.overlaps_right_ray(hi_t))
                    frontier.push_back({hi_l, lam_right, hi_gen, g, false, true, hi_t, ExactReal(0)});
                outward_done = true;
            } else {
                Label ul = normalize_label(ctx, diff.a, diff.b);
                ExactReal t = ExactReal(2 * diff.b) / (ctx.alpha * s);
                if (win.contains(t) && radius_ok(s))
                    entries.push_back({ul, s, t, g, false});
                push_triangle(gelem_label(diff, false), gelem_label(ox, false),
                              gelem_label(oy, false), g + 1);
                bool left_side = t < otx;
                if (left_side) {
                    if (win.overlaps(t, otx))
                        frontier.push_back({diff, ox, g, ogenx, false, false, t, otx});
                    if (win.active && t <= win.lo) left_dead = true;
                } else {
                    if (win.overlaps(otx, t))
                        frontier.push_back({ox, diff, ogenx, g, false, false, otx, t});
                    if (win.active && t >= win.hi) right_dead = true;
                }
                ox = diff;
                osx = s;
                otx = t;
                ogenx = g;
            }
        }
        if (win.active && left_dead && right_dead && !outward_done) {
            outward_done = true;
            // The strip's top line spans every window, so a rational packing
            // must still report it even though the chain died outside. The
            // chain would emit it after sum-of-quotient many steps (Euclid).
            if (ctx.alpha.is_rational() && !top_line) {
                BigInt total = 0, num = ctx.alpha.p(), den = ctx.alpha.r();
                while (den != 0) {
                    total += num / den;
                    num = std::exchange(den, num % den);
                }
                if (!by_gen || total <= max_gen) {
                    int line_gen = total > BigInt(std::numeric_limits<int>::max())
                                       ? std::numeric_limits<int>::max()
                                       : total.convert_to<int>();
                    Label lam = normalize_label(ctx, ctx.alpha.r(), -ctx.alpha.p());
                    top_line = Entry{lam, ExactReal(0), ExactReal(0), line_gen, true};
                }
            }
        }

        // Bounded fills of every frontier interstice due this generation;
        // gaps created during this iteration wait for the next one.
        std::vector<Gap> next;
        for (const Gap& gap : frontier) {
            int gen = std::max(gap.gen_left, gap.gen_right) + 1;
            if (gen > g) {
                next.push_back(gap);
                continue;
            }
            RawLabel sum = gap.left + gap.right;
            ExactReal s = sqrt_curv_raw(ctx, sum.a, sum.b);
            if (!radius_ok(s)) continue;
            ExactReal t = ExactReal(2 * sum.b) / (ctx.alpha * s);
            if (win.contains(t))
                entries.push_back({normalize_label(ctx, sum.a, sum.b), s, t, gen, false});
            push_triangle(gelem_label(gap.left, gap.left_line),
                          gelem_label(gap.right, gap.right_line),
                          gelem_label(sum, false), gen + 1);
            bool keep_left = gap.left_line ? win.overlaps_left_ray(t)
                                           : win.overlaps(gap.t_left, t);
            bool keep_right = gap.right_line ? win.overlaps_right_ray(t)
                                             : win.overlaps(t, gap.t_right);
            if (keep_left)
                next.push_back({gap.left, sum, gap.gen_left, gen, gap.left_line, false,
                                gap.t_left, t});
            if (keep_right)
                next.push_back({sum, gap.right, gen, gap.gen_right, false, gap.right_line,
                                t, gap.t_right});
        }
        frontier = std::move(next);

        // Off-line circles born this generation.
        size_t n = triangles.size();
        for (size_t i = 0; i < n; ++i) {
            Triangle tr = triangles.front();
            triangles.pop_front();
            if (tr.gen != g) {
                triangles.push_back(tr);
                continue;
            }
            GElem born = reflect(tr.a, tr.b, tr.c, tr.companion);
            if (born.k.sign() <= 0) throw InternalInconsistency("gasket reflection sign");
            if (!by_gen && (born.k * min_radius > ExactReal(1))) continue;
            offline.push_back({born.k, born.kzx / born.k, born.kzy / born.k, tr.gen});
            if (!by_gen || tr.gen + 1 <= max_gen) {
                triangles.push_back({born, tr.a, tr.b, tr.c, tr.gen + 1});
                triangles.push_back({born, tr.a, tr.c, tr.b, tr.gen + 1});
                triangles.push_back({born, tr.b, tr.c, tr.a, tr.gen + 1});
            }
        }
    }

    Enumeration out;
    out.circles.push_back(base_line());
    if (top_line) out.circles.push_back(circle_from_label(ctx, top_line->label, top_line->gen));
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return ExactReal::compare(x.t, y.t) < 0;
    });
    for (const Entry& e : entries)
        out.circles.push_back(circle_from_label(ctx, e.label, e.gen));
    std::sort(offline.begin(), offline.end(),
              [](const OfflineCircle& x, const OfflineCircle& y) {
                  if (x.generation != y.generation) return x.generation < y.generation;
                  int c = ExactReal::compare(x.cx, y.cx);
                  if (c != 0) return c < 0;
                  return ExactReal::compare(x.cy, y.cy) < 0;
              });
    out.offline = std::move(offline);
    return out;
}

std::string circle_jsonl(const Circle& c) {
    using nlohmann::json;
    auto big = [](const BigInt& v) {
        static const BigInt lo = BigInt(std::numeric_limits<long long>::min());
        static const BigInt hi = BigInt(std::numeric_limits<long long>::max());
        json j;
        if (v >= lo && v <= hi) j = v.convert_to<long long>();
        else j = v.str();
        return j;
    };
    json j;
    if (c.label) j["label"] = json::array({big(c.label->a), big(c.label->b)});
    else j["label"] = nullptr;
    j["sqrt_curv"] = c.sqrt_curv.format();
    ExactReal curv = c.sqrt_curv * c.sqrt_curv;
    j["curv_f64"] = curv.to_double();
    if (const Round* r = std::get_if<Round>(&c.geom)) {
        j["center"] = json::array({r->cx.to_double(), r->cy.to_double()});
        j["radius"] = r->radius.to_double();
        j["line_height"] = nullptr;
    } else {
        j["center"] = nullptr;
        j["radius"] = nullptr;
        j["line_height"] = std::get<HLine>(c.geom).height.to_double();
    }
    j["generation"] = c.generation;
    return j.dump();
}

} // namespace apollo
