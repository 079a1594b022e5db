#include "apollo/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <sstream>

#include "apollo/contfrac.hpp"
#include "apollo/exact_real.hpp"
#include "apollo/packing.hpp"
#include "apollo/render.hpp"
#include "apollo/replacement.hpp"
#include "apollo/symmetry.hpp"

namespace apollo::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json big(const BigInt& v) {
    static const BigInt lo = BigInt(std::numeric_limits<long long>::min());
    static const BigInt hi = BigInt(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return json(v.convert_to<long long>());
    return json(v.str());
}

json big_list(const std::vector<BigInt>& v) {
    json j = json::array();
    for (const BigInt& x : v) j.push_back(big(x));
    return j;
}

json matrix_json(const Matrix2& m) {
    return json::array({json::array({big(m.a), big(m.b)}),
                        json::array({big(m.c), big(m.d)})});
}

std::string matrix_text(const Matrix2& m) {
    return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() +
           "]]";
}

std::string fmt_f64(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Best rational with |value - result| <= 10^-digits / 2, by convergents.
ExactReal snap_decimal(const std::string& text, std::optional<int> digits,
                       std::ostream& err) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    std::string ip, fp;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ip += text[i++];
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            fp += text[i++];
    }
    if (i != text.size() || (ip.empty() && fp.empty()))
        throw UsageError("--approx expects a decimal literal");
    BigInt num(ip.empty() ? "0" : ip);
    BigInt den = 1;
    for (char c : fp) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    if (neg) num = -num;
    ExactReal value = ExactReal::fraction(num, den);
    int d = digits ? *digits : static_cast<int>(fp.size());
    if (d < 1) d = 1;
    BigInt pow10 = 1;
    for (int k = 0; k < d; ++k) pow10 *= 10;
    ExactReal tol = ExactReal::fraction(1, 2 * pow10);
    ExactReal best = value;
    if (value.sign() > 0) {
        CfExpansion e = cf_expand(value);
        for (size_t n = 0;; ++n) {
            std::vector<Convergent> cs = convergents(e, n);
            ExactReal c = ExactReal::fraction(cs.back().p, cs.back().q);
            ExactReal diff = c - value;
            if (diff.sign() < 0) diff = -diff;
            if (diff <= tol) {
                best = c;
                break;
            }
        }
    }
    err << "warning: --approx " << text << " snapped to " << best.format() << "\n";
    return best;
}

// Shared alpha input: a positional in the exact grammar, or the decimal
// convenience path which must be explicitly armed.
struct AlphaInput {
    std::string text;
    std::string approx;
    int digits = 0;
    bool digits_set = false;
    bool unsafe = false;

    void attach(CLI::App* sub) {
        sub->add_option("alpha", text, "number in the exact grammar");
        sub->add_option("--approx", approx, "decimal to snap to a rational");
        sub->add_option("--digits", digits, "snap precision in decimal digits")
            ->check(CLI::Range(1, 1000));
        sub->add_flag("--unsafe-approx", unsafe, "allow --approx");
    }
    ExactReal resolve(CLI::App* sub, std::ostream& err) const {
        if (!approx.empty()) {
            if (!unsafe)
                throw UsageError(
                    "--approx is disabled; pass --unsafe-approx to accept a snapped "
                    "rational");
            if (!text.empty()) throw UsageError("give either alpha or --approx");
            std::optional<int> dg;
            if (sub->count("--digits") > 0) dg = digits;
            return snap_decimal(approx, dg, err);
        }
        if (text.empty()) throw UsageError("missing alpha");
        return ExactReal::parse(text);
    }
    void require_digits_sanity(CLI::App* sub) const {
        if (sub->count("--digits") > 0 && approx.empty())
            throw UsageError("--digits needs --approx");
    }
};

std::pair<ExactReal, ExactReal> parse_window(const std::string& text) {
    size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError("--window expects LO,HI");
    ExactReal lo = ExactReal::parse(text.substr(0, comma));
    ExactReal hi = ExactReal::parse(text.substr(comma + 1));
    return {lo, hi};
}

std::string orientations_text(OrientationOptions o) {
    switch (o) {
        case OrientationOptions::None: return "none";
        case OrientationOptions::Both: return "both";
        case OrientationOptions::OnlyPreserving: return "preserving";
        case OrientationOptions::OnlyReversing: return "reversing";
    }
    return "none";
}

std::string class_text(const CfClass& c) {
    if (c.strip) return "strip";
    CfExpansion e;
    e.period = c.period;
    return format_expansion(e);
}

json class_json(const CfClass& c) {
    if (c.strip) return json("strip");
    return big_list(c.period);
}

void deliver(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot open " + out_path);
    f << text;
    if (!f) throw Error("cannot write " + out_path);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"half-plane Apollonian circle packings, exactly"};
    app.name("apollo");
    app.require_subcommand(1);

    // cf ------------------------------------------------------------------
    auto* cf_cmd = app.add_subcommand("cf", "continued fraction expansion");
    AlphaInput cf_alpha;
    cf_alpha.attach(cf_cmd);
    bool cf_json = false;
    std::string cf_out;
    cf_cmd->add_flag("--json", cf_json, "JSON output");
    cf_cmd->add_option("--out", cf_out, "write output to a file");
    cf_cmd->callback([&] {
        cf_alpha.require_digits_sanity(cf_cmd);
        ExactReal a = cf_alpha.resolve(cf_cmd, err);
        CfExpansion e = cf_expand(a);
        std::string text;
        if (cf_json) {
            json j;
            j["head"] = big_list(e.head);
            j["period"] = big_list(e.period);
            j["text"] = format_expansion(e);
            text = j.dump() + "\n";
        } else {
            text = format_expansion(e) + "\n";
        }
        deliver(text, cf_out, out);
    });

    // steps ----------------------------------------------------------------
    auto* steps_cmd = app.add_subcommand("steps", "elementary A/B/C move trace");
    AlphaInput steps_alpha;
    steps_alpha.attach(steps_cmd);
    std::size_t steps_max = 32;
    bool steps_json = false;
    std::string steps_out;
    steps_cmd->add_option("--max-steps", steps_max, "letter budget")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    steps_cmd->add_flag("--json", steps_json, "JSON output");
    steps_cmd->add_option("--out", steps_out, "write output to a file");
    steps_cmd->callback([&] {
        steps_alpha.require_digits_sanity(steps_cmd);
        ExactReal a = steps_alpha.resolve(steps_cmd, err);
        std::string trace = step_trace(a, steps_max);
        std::string text;
        if (steps_json) {
            json j;
            j["trace"] = trace;
            text = j.dump() + "\n";
        } else {
            text = trace + "\n";
        }
        deliver(text, steps_out, out);
    });

    // convergents ------------------------------------------------------------
    auto* conv_cmd = app.add_subcommand("convergents", "continued fraction convergents");
    AlphaInput conv_alpha;
    conv_alpha.attach(conv_cmd);
    int conv_n = -1;
    bool conv_json = false;
    std::string conv_out;
    conv_cmd->add_option("n", conv_n, "last convergent index")->required()
        ->check(CLI::Range(0, 1000000));
    conv_cmd->add_flag("--json", conv_json, "JSON output");
    conv_cmd->add_option("--out", conv_out, "write output to a file");
    conv_cmd->callback([&] {
        conv_alpha.require_digits_sanity(conv_cmd);
        ExactReal a = conv_alpha.resolve(conv_cmd, err);
        std::vector<Convergent> cs = convergents(cf_expand(a), static_cast<size_t>(conv_n));
        std::string text;
        if (conv_json) {
            json j = json::array();
            for (const Convergent& c : cs) j.push_back(json::array({big(c.p), big(c.q)}));
            text = j.dump() + "\n";
        } else {
            for (const Convergent& c : cs) text += c.p.str() + "/" + c.q.str() + "\n";
        }
        deliver(text, conv_out, out);
    });

    // circles ----------------------------------------------------------------
    auto* circ_cmd = app.add_subcommand("circles", "enumerate packing circles");
    AlphaInput circ_alpha;
    circ_alpha.attach(circ_cmd);
    int circ_gen = -1;
    std::string circ_minr, circ_window, circ_out;
    bool circ_json = false;
    circ_cmd->add_option("--max-generation", circ_gen, "generation bound");
    circ_cmd->add_option("--min-radius", circ_minr, "radius bound (exact grammar)");
    circ_cmd->add_option("--window", circ_window, "LO,HI tangency window");
    circ_cmd->add_flag("--json", circ_json, "JSON lines output");
    circ_cmd->add_option("--out", circ_out, "write output to a file");
    circ_cmd->callback([&] {
        circ_alpha.require_digits_sanity(circ_cmd);
        ExactReal a = circ_alpha.resolve(circ_cmd, err);
        bool has_gen = circ_cmd->count("--max-generation") > 0;
        bool has_minr = circ_cmd->count("--min-radius") > 0;
        if (has_gen == has_minr)
            throw UsageError("give exactly one of --max-generation, --min-radius");
        Bound bound = has_gen ? Bound{MaxGeneration{circ_gen}}
                              : Bound{MinRadius{ExactReal::parse(circ_minr)}};
        EnumerateOptions opts;
        if (!circ_window.empty()) opts.window = parse_window(circ_window);
        PackingContext ctx = make_packing(a);
        Enumeration en = enumerate_packing(ctx, bound, opts);
        std::string text;
        for (const Circle& c : en.circles) {
            if (circ_json) {
                text += circle_jsonl(c) + "\n";
                continue;
            }
            std::string label = c.label ? to_string(*c.label) : "-";
            if (const Round* r = std::get_if<Round>(&c.geom)) {
                text += "circle  label=" + label + "  s=" + c.sqrt_curv.format() +
                        "  center=(" + r->cx.format() + "," + r->cy.format() +
                        ")  radius=" + r->radius.format() +
                        "  gen=" + std::to_string(c.generation) + "\n";
            } else {
                text += "line,   label=" + label +
                        "  height=" + std::get<HLine>(c.geom).height.format() +
                        "  gen=" + std::to_string(c.generation) + "\n";
            }
        }
        deliver(text, circ_out, out);
    });

    // similar ----------------------------------------------------------------
    auto* sim_cmd = app.add_subcommand("similar", "similarity decision with witness");
    std::string sim_a, sim_b, sim_out;
    bool sim_json = false;
    sim_cmd->add_option("alpha", sim_a, "first number")->required();
    sim_cmd->add_option("beta", sim_b, "second number")->required();
    sim_cmd->add_flag("--json", sim_json, "JSON output");
    sim_cmd->add_option("--out", sim_out, "write output to a file");
    sim_cmd->callback([&] {
        ExactReal a = ExactReal::parse(sim_a), b = ExactReal::parse(sim_b);
        std::optional<Matrix2> w = similar(a, b);
        OrientationOptions oo = OrientationOptions::None;
        if (w) {
            if (orientation_reversing_exists(a)) oo = OrientationOptions::Both;
            else if (w->det() == 1) oo = OrientationOptions::OnlyPreserving;
            else oo = OrientationOptions::OnlyReversing;
        }
        std::string text;
        if (sim_json) {
            json j;
            j["similar"] = bool(w);
            j["witness"] = w ? matrix_json(*w) : json(nullptr);
            j["det"] = w ? json(static_cast<int>(w->det())) : json(nullptr);
            j["orientations"] = orientations_text(oo);
            text = j.dump() + "\n";
        } else if (w) {
            text = "similar\nwitness=" + matrix_text(*w) +
                   "\ndet=" + w->det().str() +
                   "\norientations=" + orientations_text(oo) + "\n";
        } else {
            text = "not similar\n";
        }
        deliver(text, sim_out, out);
    });

    // symm -------------------------------------------------------------------
    auto* symm_cmd = app.add_subcommand("symm", "self-similarity group");
    AlphaInput symm_alpha;
    symm_alpha.attach(symm_cmd);
    bool symm_json = false;
    std::string symm_out;
    symm_cmd->add_flag("--json", symm_json, "JSON output");
    symm_cmd->add_option("--out", symm_out, "write output to a file");
    symm_cmd->callback([&] {
        symm_alpha.require_digits_sanity(symm_cmd);
        ExactReal a = symm_alpha.resolve(symm_cmd, err);
        SymmDescription sd = symm_group(a);
        std::string kind = sd.kind == SymmKind::Strip    ? "strip"
                           : sd.kind == SymmKind::Cyclic ? "cyclic"
                                                         : "trivial";
        std::string text;
        if (symm_json) {
            json j;
            j["kind"] = kind;
            j["generator"] = sd.generator ? matrix_json(*sd.generator) : json(nullptr);
            j["det"] = sd.generator ? json(static_cast<int>(sd.generator->det()))
                                    : json(nullptr);
            j["scale_sq"] = sd.scale_sq ? json(sd.scale_sq->format()) : json(nullptr);
            if (sd.pell) {
                json p;
                p["x"] = big(sd.pell->x);
                p["y"] = big(sd.pell->y);
                p["rhs"] = sd.pell->rhs;
                j["pell"] = p;
            } else {
                j["pell"] = nullptr;
            }
            j["orientation_reversing"] = sd.orientation_reversing;
            j["class"] = class_json(sd.cf_class);
            text = j.dump() + "\n";
        } else {
            text = "kind=" + kind + "\n";
            if (sd.generator) {
                text += "generator=" + matrix_text(*sd.generator) + "\n";
                text += "det=" + sd.generator->det().str() + "\n";
                text += "scale_sq=" + sd.scale_sq->format() + "\n";
                text += "pell=(x=" + sd.pell->x.str() + ", y=" + sd.pell->y.str() +
                        ", rhs=" + std::to_string(sd.pell->rhs) + ")\n";
            }
            text += std::string("orientation_reversing=") +
                    (sd.orientation_reversing ? "true" : "false") + "\n";
            text += "class=" + class_text(sd.cf_class) + "\n";
        }
        deliver(text, symm_out, out);
    });

    // class ------------------------------------------------------------------
    auto* class_cmd = app.add_subcommand("class", "similarity class of the packing");
    AlphaInput class_alpha;
    class_alpha.attach(class_cmd);
    bool class_json_flag = false;
    std::string class_out;
    class_cmd->add_flag("--json", class_json_flag, "JSON output");
    class_cmd->add_option("--out", class_out, "write output to a file");
    class_cmd->callback([&] {
        class_alpha.require_digits_sanity(class_cmd);
        ExactReal a = class_alpha.resolve(class_cmd, err);
        CfClass c = canonical_class(cf_expand(a));
        std::string text;
        if (class_json_flag) {
            json j;
            j["class"] = class_json(c);
            text = j.dump() + "\n";
        } else {
            text = class_text(c) + "\n";
        }
        deliver(text, class_out, out);
    });

    // replace ----------------------------------------------------------------
    auto* rep_cmd = app.add_subcommand("replace", "circle replacement run");
    AlphaInput rep_alpha;
    rep_alpha.attach(rep_cmd);
    std::size_t rep_max = 32;
    bool rep_trace = false, rep_json = false;
    std::string rep_out;
    rep_cmd->add_option("--max-steps", rep_max, "step budget")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));
    rep_cmd->add_flag("--trace", rep_trace, "one line per step");
    rep_cmd->add_flag("--json", rep_json, "JSON output");
    rep_cmd->add_option("--out", rep_out, "write output to a file");
    rep_cmd->callback([&] {
        rep_alpha.require_digits_sanity(rep_cmd);
        ExactReal a = rep_alpha.resolve(rep_cmd, err);
        PackingContext ctx = make_packing(a);
        ReplacementTrace tr = replace_trace(ctx, rep_max);
        auto ratio_of = [](const ReplacementState& s) {
            return s.x_sqrt_curv / s.y_sqrt_curv;
        };
        std::string text;
        if (rep_json) {
            json states = json::array();
            for (const ReplacementState& s : tr.states) {
                json j;
                j["step"] = s.step_index;
                j["x"] = json::array({big(s.x_label.a), big(s.x_label.b)});
                j["y"] = json::array({big(s.y_label.a), big(s.y_label.b)});
                ExactReal ratio = ratio_of(s);
                j["ratio"] = ratio.format();
                j["ratio_f64"] = ratio.to_double();
                states.push_back(j);
            }
            json j;
            j["letters"] = tr.letters;
            j["states"] = states;
            text = j.dump() + "\n";
        } else if (rep_trace) {
            for (std::size_t n = 1; n <= tr.letters.size(); ++n) {
                const ReplacementState& s = tr.states[n - 1];
                ExactReal ratio = ratio_of(s);
                text += std::to_string(n) + "  " + tr.letters[n - 1] + std::string("  ") +
                        to_string(s.x_label) + "  " + to_string(s.y_label) + "  " +
                        ratio.format() + "  " + fmt_f64(ratio.to_double()) + "\n";
            }
        } else {
            text = tr.letters + "\n";
        }
        deliver(text, rep_out, out);
    });

    // render -----------------------------------------------------------------
    auto* ren_cmd = app.add_subcommand("render", "SVG picture of the packing");
    AlphaInput ren_alpha;
    ren_alpha.attach(ren_cmd);
    int ren_gen = -1, ren_width = 800, ren_highlight = -1;
    std::string ren_minr, ren_window, ren_out;
    bool ren_offline = false;
    ren_cmd->add_option("--max-generation", ren_gen, "generation bound");
    ren_cmd->add_option("--min-radius", ren_minr, "radius bound (exact grammar)");
    ren_cmd->add_option("--window", ren_window, "LO,HI x range");
    ren_cmd->add_option("--width", ren_width, "image width in px");
    ren_cmd->add_option("--highlight", ren_highlight,
                        "shade the first K replacement states gray");
    ren_cmd->add_flag("--offline", ren_offline, "include the off-line gasket");
    ren_cmd->add_option("--out", ren_out, "write the SVG to a file");
    ren_cmd->callback([&] {
        ren_alpha.require_digits_sanity(ren_cmd);
        RenderSpec spec;
        spec.alpha = ren_alpha.resolve(ren_cmd, err);
        bool has_gen = ren_cmd->count("--max-generation") > 0;
        bool has_minr = ren_cmd->count("--min-radius") > 0;
        if (has_gen == has_minr)
            throw UsageError("give exactly one of --max-generation, --min-radius");
        spec.depth = has_gen ? Bound{MaxGeneration{ren_gen}}
                             : Bound{MinRadius{ExactReal::parse(ren_minr)}};
        if (!ren_window.empty()) {
            spec.window = parse_window(ren_window);
        } else {
            ExactReal asq = spec.alpha * spec.alpha;
            spec.window = {-asq.inverse(), ExactReal(4)};
        }
        spec.width_px = ren_width;
        if (ren_cmd->count("--highlight") > 0) spec.highlight_trace = ren_highlight;
        spec.include_offline_gasket = ren_offline;
        deliver(render_svg(spec), ren_out, out);
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("apollo");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonPositiveValue& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace apollo::cli
