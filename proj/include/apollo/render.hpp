#ifndef APOLLO_RENDER_HPP
#define APOLLO_RENDER_HPP

#include <optional>
#include <string>
#include <utility>

#include "apollo/packing.hpp"

namespace apollo {

struct RenderSpec {
    ExactReal alpha;
    /// Horizontal extent drawn; first < second (EmptyWindow otherwise).
    std::pair<ExactReal, ExactReal> window;
    Bound depth = MaxGeneration{3};
    int width_px = 800;
    /// Shade the distinct circles of the first k replacement states gray.
    std::optional<int> highlight_trace;
    bool include_offline_gasket = false;
};

/// Deterministic SVG document: one element per packing member whose
/// x-extent meets the window (lines always count), ordered by generation,
/// lines first, then center abscissa. EmptyWindow when no circle is drawn.
std::string render_svg(const RenderSpec& spec);

} // namespace apollo

#endif
