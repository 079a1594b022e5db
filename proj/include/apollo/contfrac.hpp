#ifndef APOLLO_CONTFRAC_HPP
#define APOLLO_CONTFRAC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "apollo/exact_real.hpp"

namespace apollo {

/// Continued fraction [head[0]; head[1], ..., (period...)].
/// Canonical form: head[0] >= 0, later head entries >= 1, the period (if any)
/// is primitive and cannot be rotated into the head; a finite expansion of
/// length > 1 ends with a term >= 2.
struct CfExpansion {
    std::vector<BigInt> head;
    std::vector<BigInt> period;

    bool is_finite() const { return period.empty(); }
    bool operator==(const CfExpansion&) const = default;
};

struct Convergent {
    BigInt p, q;
    bool operator==(const Convergent&) const = default;
};

/// Similarity class of a continued-fraction tail: the strip class (all
/// rationals) or the lexicographically least rotation of the period.
struct CfClass {
    bool strip = false;
    std::vector<BigInt> period;

    bool operator==(const CfClass&) const = default;
};

/// Expansion of alpha > 0; halts exactly for rationals, detects the minimal
/// period for quadratic irrationals. Throws NonPositiveInput otherwise.
CfExpansion cf_expand(const ExactReal& alpha);

/// Letter trace of the elementary moves: A subtracts 1 (x >= 1), B inverts
/// (0 < x < 1), C halts (x = 0). At most max_steps letters; a rational that
/// halts in time ends the trace with 'C'.
std::string step_trace(const ExactReal& alpha, std::size_t max_steps);

/// Term i of the (possibly unrolled) expansion; IndexOutOfRange past the end
/// of a finite expansion.
BigInt cf_term(const CfExpansion& e, std::size_t i);

/// Convergents p_0/q_0 ... p_n/q_n. IndexOutOfRange if a finite expansion
/// has fewer than n+1 terms.
std::vector<Convergent> convergents(const CfExpansion& e, std::size_t n);

/// Value of the purely periodic expansion [(period...)], always the root
/// greater than 1.
ExactReal periodic_value(const std::vector<BigInt>& period);

/// Exact value of an expansion.
ExactReal value_of(const CfExpansion& e);

/// Canonical form: merges a trailing 1 of a finite expansion, shrinks the
/// period to its primitive block, and absorbs head entries that merely
/// rotate the period.
CfExpansion normalize_expansion(CfExpansion e);

CfClass canonical_class(const CfExpansion& e);

/// Whether the two expansions have a common tail (after finitely many terms).
bool eventually_equal(const CfExpansion& a, const CfExpansion& b);

/// "[1; 2, 2]", "[1; (2)]", "[(1, 2)]", ...; parse accepts the same forms.
std::string format_expansion(const CfExpansion& e);
CfExpansion parse_expansion(const std::string& text);

} // namespace apollo

#endif
