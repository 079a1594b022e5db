#ifndef APOLLO_PACKING_HPP
#define APOLLO_PACKING_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "apollo/exact_real.hpp"

namespace apollo {

/// Coprime pair (a, b) naming the circle of square curvature (a*alpha + b)^2.
/// Canonical: a*alpha + b >= 0, and when it is 0 the leading entry is positive.
struct Label {
    BigInt a, b;
    bool operator==(const Label&) const = default;
};

std::string to_string(const Label& l);

enum class WedgeSide { LeftOfX, RightOfY };
enum class FillSide { Left, Right };
enum class Tangency { None, LeftOf, RightOf };

struct Round {
    ExactReal cx, cy, radius;
    bool operator==(const Round&) const = default;
};
struct HLine {
    ExactReal height;
    bool operator==(const HLine&) const = default;
};
using Geometry = std::variant<Round, HLine>;

struct Circle {
    std::optional<Label> label; // absent exactly for the base line
    ExactReal sqrt_curv;
    Geometry geom;
    int generation = 0;
};

/// Gasket circle not tangent to the base line; exact curvature and center.
struct OfflineCircle {
    ExactReal curv, cx, cy;
    int generation = 0;
};

struct PackingContext {
    ExactReal alpha;
};

/// Validates alpha > 0 (NonPositiveInput otherwise).
PackingContext make_packing(const ExactReal& alpha);

/// Canonical form of (a, b); NotCoprime when gcd(a, b) != 1.
Label normalize_label(const PackingContext& ctx, const BigInt& a, const BigInt& b);

/// a*alpha + b of a canonical label (UnnormalizedLabel, NotCoprime otherwise).
ExactReal sqrt_curvature(const PackingContext& ctx, const Label& l);

/// x coordinate of the tangency with the base line; LineOperand when the
/// label names the top line of a strip.
ExactReal tangency_abscissa(const PackingContext& ctx, const Label& l);

Circle base_line();
Circle circle_from_label(const PackingContext& ctx, const Label& l, int generation);

/// Label-calculus tangency: |det| = 1 decides, the sign gives the side.
Tangency tangent(const Circle& c1, const Circle& c2);

/// Two tangent elements, left before right. For a line member the stored
/// label is canonical; its sign inside the pair is implied by the side.
struct TangentPair {
    Circle left, right;
};

/// Orders and validates (NotTangent, LineOperand for the unlabeled base line).
TangentPair tangent_pair(const PackingContext& ctx, const Circle& c1, const Circle& c2);

/// The circle in the bounded interstice between the pair and the base line.
Circle fill_bounded(const PackingContext& ctx, const TangentPair& pair);

/// The element in the unbounded interstice on the given side of the pair;
/// a top line when the square curvatures tie. SideMismatch when the side
/// does not hold the larger sqrt_curv.
Circle fill_unbounded(const PackingContext& ctx, const TangentPair& pair, FillSide side);

/// au - bv = 1 with 0 < u <= b and 0 <= v < a; a, b coprime and positive.
std::pair<BigInt, BigInt> unique_bezout(const BigInt& a, const BigInt& b);

/// Parents (A, B) with A + B = l and det[A; B] = 1, for a bounded wedge label.
std::pair<Label, Label> parents(const Label& l);

/// Mirror of a circle label across the generator named by side; an involution
/// fixing both generators.
Label invert_label(const PackingContext& ctx, const Label& l, WedgeSide side);

/// Exact Descartes quadruple test, curvature and curvature-center parts.
bool descartes_check(const PackingContext& ctx, const Circle& c1, const Circle& c2,
                     const Circle& c3, const Circle& c4);

struct MaxGeneration {
    int value = 0;
};
struct MinRadius {
    ExactReal value;
};
using Bound = std::variant<MaxGeneration, MinRadius>;

struct EnumerateOptions {
    /// Restrict to tangency abscissas inside [first, second]; also the only
    /// way a MinRadius enumeration reaches outward elements.
    std::optional<std::pair<ExactReal, ExactReal>> window;
    /// Alternative generation-0 circles (default: the two generators).
    std::optional<std::pair<Label, Label>> seed_pair;
    bool include_offline = false;
};

struct Enumeration {
    std::vector<Circle> circles;        // lines first, then by abscissa
    std::vector<OfflineCircle> offline; // by generation, then center
};

Enumeration enumerate_packing(const PackingContext& ctx, const Bound& bound,
                              const EnumerateOptions& opts = {});

/// One-line JSON record for a packing element.
std::string circle_jsonl(const Circle& c);

} // namespace apollo

#endif
