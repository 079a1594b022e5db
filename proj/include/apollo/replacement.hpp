#ifndef APOLLO_REPLACEMENT_HPP
#define APOLLO_REPLACEMENT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apollo/packing.hpp"

namespace apollo {

enum class StepKind { None, A, B, C };

char step_letter(StepKind k);

/// One state of the subtractive two-circle system. The ratio
/// x_sqrt_curv / y_sqrt_curv replays the continued-fraction walk of alpha.
struct ReplacementState {
    int step_index = 0;
    Label x_label, y_label;
    ExactReal x_sqrt_curv, y_sqrt_curv;
    StepKind last_step = StepKind::None;
};

ReplacementState initial_replacement_state(const PackingContext& ctx);

/// (A) replaces x by x - y while sqrt_curv(x) >= sqrt_curv(y), (B) swaps the
/// two when x became smaller, (C) marks the halt once x degenerates to a
/// line. Stepping a C state throws Halted.
ReplacementState replace_step(const PackingContext& ctx, const ReplacementState& s);

struct ReplacementTrace {
    std::string letters;                  // one letter per step taken
    std::vector<ReplacementState> states; // letters.size() + 1 entries
};

ReplacementTrace replace_trace(const PackingContext& ctx, std::size_t max_steps);

/// Labels of the first k distinct circles the y slot holds, in order of
/// appearance; ExhaustedRun when the system halts with fewer.
std::vector<Label> distinct_y_circles(const PackingContext& ctx, std::size_t k);

} // namespace apollo

#endif
