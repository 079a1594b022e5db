#ifndef APOLLO_SYMMETRY_HPP
#define APOLLO_SYMMETRY_HPP

#include <optional>

#include "apollo/contfrac.hpp"
#include "apollo/exact_real.hpp"

namespace apollo {

/// Integer 2x2 matrix acting as a Moebius map; |det| = 1 in this library.
struct Matrix2 {
    BigInt a, b, c, d;

    BigInt det() const { return a * d - b * c; }
    bool operator==(const Matrix2&) const = default;
};

Matrix2 mul(const Matrix2& m, const Matrix2& n);
Matrix2 adjugate(const Matrix2& m);
/// Sign representative with the first nonzero of (a, b, c, d) positive.
Matrix2 pgl_normalize(Matrix2 m);

/// (a x + b) / (c x + d); PoleInput when the denominator vanishes.
ExactReal apply_moebius(const Matrix2& m, const ExactReal& x);

struct PellSolution {
    BigInt x, y;
    int rhs = 4; // +4 or -4

    bool operator==(const PellSolution&) const = default;
};

/// Fundamental solution of x^2 - D y^2 = +-4 (minimal y; rhs -4 whenever
/// that side is solvable). BadDiscriminant unless D > 0, D = 0 or 1 mod 4,
/// and D is not a square.
PellSolution pell_fundamental(const BigInt& D);

/// Minimal solution with rhs +4; squares the -4 fundamental when needed.
PellSolution pell_plus4(const BigInt& D);

/// [[ (x-yq)/2, -yr ], [ yp, (x+yq)/2 ]] for the root of p t^2 + q t + r;
/// ParityViolation when x and yq disagree mod 2.
Matrix2 gamma_matrix(const IntPoly2& poly, const PellSolution& sol);

enum class SymmKind { Trivial, Strip, Cyclic };

struct SymmDescription {
    SymmKind kind = SymmKind::Trivial;
    std::optional<Matrix2> generator;  // Cyclic only; scale_sq > 1
    std::optional<ExactReal> scale_sq; // (c alpha + d)^2 of the generator
    std::optional<PellSolution> pell;  // fundamental solution
    bool generator_reverses = false;   // det(generator) = -1
    bool orientation_reversing = false;
    CfClass cf_class;
};

SymmDescription symm_group(const ExactReal& alpha);

/// Whether the packing of alpha admits an orientation-reversing similarity.
/// Computed two independent ways (period parity, Pell -4 solvability);
/// InternalInconsistency if they ever disagree.
bool orientation_reversing_exists(const ExactReal& alpha);

/// Witness W with W(alpha) = beta and |det W| = 1, when the packings are
/// similar; nullopt otherwise.
std::optional<Matrix2> similar(const ExactReal& alpha, const ExactReal& beta);

enum class OrientationOptions { None, Both, OnlyPreserving, OnlyReversing };

OrientationOptions similarity_orientations(const ExactReal& alpha, const ExactReal& beta);

/// For purely periodic alpha: the inverse of the canonical generator, taken
/// on label rows, must reproduce the replacement pair after n steps.
/// NotReduced unless alpha is reduced.
bool generator_action_check(const ExactReal& alpha, int n_steps);

} // namespace apollo

#endif
