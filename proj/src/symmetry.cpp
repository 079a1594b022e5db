#include "apollo/symmetry.hpp"

#include <algorithm>

#include "apollo/packing.hpp"
#include "apollo/replacement.hpp"

namespace apollo {

Matrix2 mul(const Matrix2& m, const Matrix2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
}

Matrix2 adjugate(const Matrix2& m) { return {m.d, -m.b, -m.c, m.a}; }

Matrix2 pgl_normalize(Matrix2 m) {
    const BigInt* first = nullptr;
    for (const BigInt* v : {&m.a, &m.b, &m.c, &m.d}) {
        if (*v != 0) {
            first = v;
            break;
        }
    }
    if (first && *first < 0) m = {-m.a, -m.b, -m.c, -m.d};
    return m;
}

ExactReal apply_moebius(const Matrix2& m, const ExactReal& x) {
    ExactReal den = ExactReal(m.c) * x + ExactReal(m.d);
    if (den.is_zero()) throw PoleInput("moebius pole");
    return (ExactReal(m.a) * x + ExactReal(m.b)) / den;
}

PellSolution pell_fundamental(const BigInt& D) {
    if (D <= 0) throw BadDiscriminant("D must be positive");
    BigInt rem = D % 4;
    if (rem != 0 && rem != 1) throw BadDiscriminant("D must be 0 or 1 mod 4");
    if (is_perfect_square(D)) throw BadDiscriminant("D must not be a square");

    // Canonical surd of discriminant exactly D; the convergent matrix over
    // one minimal period is the fundamental automorph.
    ExactReal omega = rem == 0 ? ExactReal::quadratic(0, 1, D / 4, 1)
                               : ExactReal::quadratic(1, 1, D, 2);
    CfExpansion e = cf_expand(omega);
    BigInt p2 = 0, p1 = 1, q2 = 1, q1 = 0;
    for (const BigInt& a : e.period) {
        BigInt p = a * p1 + p2, q = a * q1 + q2;
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
    }
    ExactReal tau = periodic_value(e.period);
    IntPoly2 poly = tau.minimal_polynomial();
    // (q1, q2 - p1, -p2) is y * (p, q, r) of tau's polynomial.
    if (q1 % poly.p != 0) throw InternalInconsistency("period matrix mismatch");
    BigInt y = q1 / poly.p;
    if (q2 - p1 != y * poly.q || -p2 != y * poly.r)
        throw InternalInconsistency("period matrix mismatch");
    BigInt x = p1 + q2;
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    int rhs = e.period.size() % 2 == 1 ? -4 : 4;
    if (x * x - D * y * y != rhs) throw InternalInconsistency("pell identity");
    return {x, y, rhs};
}

PellSolution pell_plus4(const BigInt& D) {
    PellSolution f = pell_fundamental(D);
    if (f.rhs == 4) return f;
    return {(f.x * f.x + D * f.y * f.y) / 2, f.x * f.y, 4};
}

Matrix2 gamma_matrix(const IntPoly2& poly, const PellSolution& sol) {
    BigInt t = sol.x - sol.y * poly.q;
    if (t % 2 != 0) throw ParityViolation("x and y*q must agree mod 2");
    return {t / 2, -sol.y * poly.r, sol.y * poly.p, (sol.x + sol.y * poly.q) / 2};
}

bool orientation_reversing_exists(const ExactReal& alpha) {
    if (alpha.sign() <= 0) throw NonPositiveInput("alpha must be positive");
    if (alpha.is_rational()) return true;
    bool odd_period = cf_expand(alpha).period.size() % 2 == 1;
    bool pell_minus = pell_fundamental(alpha.minimal_polynomial().discriminant()).rhs == -4;
    if (odd_period != pell_minus)
        throw InternalInconsistency("period parity disagrees with pell");
    return odd_period;
}

SymmDescription symm_group(const ExactReal& alpha) {
    if (alpha.sign() <= 0) throw NonPositiveInput("alpha must be positive");
    SymmDescription out;
    out.cf_class = canonical_class(cf_expand(alpha));
    if (alpha.is_rational()) {
        out.kind = SymmKind::Strip;
        out.orientation_reversing = true;
        return out;
    }
    out.kind = SymmKind::Cyclic;
    IntPoly2 poly = alpha.minimal_polynomial();
    PellSolution fund = pell_fundamental(poly.discriminant());
    Matrix2 g = gamma_matrix(poly, fund);
    ExactReal sc = ExactReal(g.c) * alpha + ExactReal(g.d);
    ExactReal scale = sc * sc;
    if (!(scale > ExactReal(1))) {
        // alpha is the smaller root of its polynomial; the inverse expands.
        g = adjugate(g);
        sc = ExactReal(g.c) * alpha + ExactReal(g.d);
        scale = sc * sc;
        if (!(scale > ExactReal(1))) throw InternalInconsistency("no expanding generator");
    }
    g = pgl_normalize(g);
    if (!(apply_moebius(g, alpha) == alpha))
        throw InternalInconsistency("generator does not stabilize alpha");
    out.generator = g;
    out.scale_sq = scale;
    out.pell = fund;
    out.generator_reverses = g.det() == -1;
    out.orientation_reversing = orientation_reversing_exists(alpha);
    return out;
}

namespace {

Matrix2 convergent_matrix(const std::vector<BigInt>& terms) {
    Matrix2 m{1, 0, 0, 1};
    for (const BigInt& t : terms) m = mul(m, Matrix2{t, 1, 1, 0});
    return m;
}

// head plus the rotation prefix aligning the period with its canonical form.
std::vector<BigInt> alignment_terms(const CfExpansion& e, const std::vector<BigInt>& canon) {
    std::vector<BigInt> terms = e.head;
    std::vector<BigInt> rot = e.period;
    for (size_t r = 0; r < e.period.size(); ++r) {
        if (rot == canon) return terms;
        terms.push_back(rot.front());
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
    throw InternalInconsistency("period does not reach its canonical rotation");
}

} // namespace

std::optional<Matrix2> similar(const ExactReal& alpha, const ExactReal& beta) {
    if (alpha.sign() <= 0 || beta.sign() <= 0)
        throw NonPositiveInput("inputs must be positive");
    CfExpansion ea = cf_expand(alpha), eb = cf_expand(beta);
    if (ea.is_finite() != eb.is_finite()) return std::nullopt;
    Matrix2 ma{1, 0, 0, 1}, mb{1, 0, 0, 1};
    if (ea.is_finite()) {
        ma = convergent_matrix(ea.head);
        mb = convergent_matrix(eb.head);
    } else {
        CfClass ca = canonical_class(ea), cb = canonical_class(eb);
        if (!(ca == cb)) return std::nullopt;
        ea = normalize_expansion(ea);
        eb = normalize_expansion(eb);
        ma = convergent_matrix(alignment_terms(ea, ca.period));
        mb = convergent_matrix(alignment_terms(eb, cb.period));
    }
    Matrix2 w = pgl_normalize(mul(mb, adjugate(ma)));
    if (!(apply_moebius(w, alpha) == beta))
        throw InternalInconsistency("witness fails to map alpha to beta");
    return w;
}

OrientationOptions similarity_orientations(const ExactReal& alpha, const ExactReal& beta) {
    std::optional<Matrix2> w = similar(alpha, beta);
    if (!w) return OrientationOptions::None;
    if (orientation_reversing_exists(alpha)) return OrientationOptions::Both;
    return w->det() == 1 ? OrientationOptions::OnlyPreserving
                         : OrientationOptions::OnlyReversing;
}

bool generator_action_check(const ExactReal& alpha, int n_steps) {
    if (n_steps < 0) throw IndexOutOfRange("step count must be nonnegative");
    if (!alpha.is_quadratic() || !alpha.is_reduced())
        throw NotReduced("alpha must be reduced (purely periodic)");
    SymmDescription sd = symm_group(alpha);
    Matrix2 m = pgl_normalize(adjugate(*sd.generator));
    PackingContext ctx = make_packing(alpha);
    ReplacementTrace tr = replace_trace(ctx, static_cast<size_t>(n_steps));
    if (tr.states.size() <= static_cast<size_t>(n_steps)) return false;
    const ReplacementState& st = tr.states[static_cast<size_t>(n_steps)];
    Label r1 = normalize_label(ctx, m.a, m.b);
    Label r2 = normalize_label(ctx, m.c, m.d);
    return r1 == st.x_label && r2 == st.y_label;
}

} // namespace apollo
