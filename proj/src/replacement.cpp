#include "apollo/replacement.hpp"

namespace apollo {

char step_letter(StepKind k) {
    switch (k) {
        case StepKind::A: return 'A';
        case StepKind::B: return 'B';
        case StepKind::C: return 'C';
        default: return '-';
    }
}

ReplacementState initial_replacement_state(const PackingContext& ctx) {
    ReplacementState s;
    s.x_label = Label{1, 0};
    s.y_label = Label{0, 1};
    s.x_sqrt_curv = sqrt_curvature(ctx, s.x_label);
    s.y_sqrt_curv = sqrt_curvature(ctx, s.y_label);
    return s;
}

ReplacementState replace_step(const PackingContext& ctx, const ReplacementState& s) {
    if (s.last_step == StepKind::C) throw Halted("the system already halted");
    ReplacementState n = s;
    n.step_index = s.step_index + 1;
    if (s.x_sqrt_curv.is_zero()) {
        n.last_step = StepKind::C;
        return n;
    }
    if (s.x_sqrt_curv >= s.y_sqrt_curv) {
        n.x_label = normalize_label(ctx, s.x_label.a - s.y_label.a, s.x_label.b - s.y_label.b);
        n.x_sqrt_curv = s.x_sqrt_curv - s.y_sqrt_curv;
        n.last_step = StepKind::A;
        return n;
    }
    std::swap(n.x_label, n.y_label);
    std::swap(n.x_sqrt_curv, n.y_sqrt_curv);
    n.last_step = StepKind::B;
    return n;
}

ReplacementTrace replace_trace(const PackingContext& ctx, std::size_t max_steps) {
    ReplacementTrace tr;
    tr.states.push_back(initial_replacement_state(ctx));
    while (tr.letters.size() < max_steps) {
        const ReplacementState& cur = tr.states.back();
        if (cur.last_step == StepKind::C) break;
        ReplacementState next = replace_step(ctx, cur);
        tr.letters += step_letter(next.last_step);
        tr.states.push_back(next);
    }
    return tr;
}

std::vector<Label> distinct_y_circles(const PackingContext& ctx, std::size_t k) {
    std::vector<Label> out;
    ReplacementState s = initial_replacement_state(ctx);
    if (k == 0) return out;
    out.push_back(s.y_label);
    size_t guard = 0;
    while (out.size() < k) {
        if (s.last_step == StepKind::C)
            throw ExhaustedRun("the system halted before producing enough circles");
        s = replace_step(ctx, s);
        if (s.last_step == StepKind::B && !(s.y_label == out.back()))
            out.push_back(s.y_label);
        if (++guard > 10000000) throw InternalInconsistency("runaway replacement");
    }
    return out;
}

} // namespace apollo
