#include <doctest.h>

#include <vector>

#include "apollo/contfrac.hpp"

using namespace apollo;

namespace {

std::vector<BigInt> terms(std::initializer_list<long long> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

ExactReal golden() { return ExactReal::quadratic(1, 1, 5, 2); }

} // namespace

TEST_CASE("rational expansions halt in canonical form") {
    CfExpansion e = cf_expand(ExactReal::fraction(7, 5));
    CHECK(e.head == terms({1, 2, 2}));
    CHECK(e.is_finite());

    CHECK(cf_expand(ExactReal(1)).head == terms({1}));
    CHECK(cf_expand(ExactReal(3)).head == terms({3}));
    CHECK(cf_expand(ExactReal::fraction(1, 3)).head == terms({0, 3}));
    CHECK(cf_expand(ExactReal::fraction(22, 7)).head == terms({3, 7}));
    CHECK(cf_expand(ExactReal::fraction(8, 13)).head == terms({0, 1, 1, 1, 1, 2}));
    // Canonical: never ends in 1 (except the single-term [1]).
    CHECK(cf_expand(ExactReal::fraction(3, 2)).head == terms({1, 2}));
    CHECK_THROWS_AS(cf_expand(ExactReal(0)), const NonPositiveInput&);
    CHECK_THROWS_AS(cf_expand(ExactReal::fraction(-7, 5)), const NonPositiveInput&);
}

TEST_CASE("quadratic expansions detect the minimal period") {
    CfExpansion g = cf_expand(golden());
    CHECK(g.head.empty());
    CHECK(g.period == terms({1}));

    CHECK(cf_expand(ExactReal::quadratic(1, 1, 2, 1)).period == terms({2}));
    CHECK(cf_expand(ExactReal::quadratic(1, 1, 2, 1)).head.empty());
    CHECK(cf_expand(ExactReal::quadratic(3, 1, 13, 2)).period == terms({3}));
    CHECK(cf_expand(ExactReal::quadratic(1, 1, 3, 2)).period == terms({1, 2}));
    CHECK(cf_expand(ExactReal::quadratic(1, 1, 3, 2)).head.empty());

    CfExpansion r2 = cf_expand(ExactReal::quadratic(0, 1, 2, 1));
    CHECK(r2.head == terms({1}));
    CHECK(r2.period == terms({2}));
    CfExpansion r3 = cf_expand(ExactReal::quadratic(0, 1, 3, 1));
    CHECK(r3.head == terms({1}));
    CHECK(r3.period == terms({1, 2}));
    CfExpansion r8 = cf_expand(ExactReal::quadratic(0, 1, 8, 1));
    CHECK(r8.head == terms({2}));
    CHECK(r8.period == terms({1, 4}));
    // (3+sqrt(5))/2 = [2; (1)]: head absorbs nothing here, tail is golden's.
    CfExpansion e = cf_expand(ExactReal::quadratic(3, 1, 5, 2));
    CHECK(e.head == terms({2}));
    CHECK(e.period == terms({1}));
}

TEST_CASE("step trace letters") {
    CHECK(step_trace(ExactReal(1), 32) == "AC");
    CHECK(step_trace(ExactReal::fraction(7, 5), 32) == "ABAABAAC");
    CHECK(step_trace(ExactReal::fraction(7, 5), 4) == "ABAA");
    CHECK(step_trace(ExactReal::fraction(1, 3), 32) == "BAAAC");
    // Irrationals never halt; the trace is just truncated.
    CHECK(step_trace(golden(), 6) == "ABABAB");
    CHECK(step_trace(ExactReal::quadratic(1, 1, 2, 1), 7) == "AABAABA");
    CHECK_THROWS_AS(step_trace(ExactReal(0), 8), const NonPositiveInput&);
}

TEST_CASE("convergents satisfy the standard recurrences") {
    CfExpansion e = cf_expand(ExactReal::fraction(7, 5));
    std::vector<Convergent> cs = convergents(e, 2);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == Convergent{1, 1});
    CHECK(cs[1] == Convergent{3, 2});
    CHECK(cs[2] == Convergent{7, 5});
    CHECK_THROWS_AS(convergents(e, 3), const IndexOutOfRange&);

    // Periodic expansions unroll forever.
    CfExpansion g = cf_expand(golden());
    std::vector<Convergent> fib = convergents(g, 7);
    CHECK(fib[6] == Convergent{21, 13});
    CHECK(fib[7] == Convergent{34, 21});

    ExactReal r3 = ExactReal::quadratic(0, 1, 3, 1);
    std::vector<Convergent> cr3 = convergents(cf_expand(r3), 9);
    for (std::size_t i = 1; i < cr3.size(); ++i) {
        // p_i q_{i-1} - p_{i-1} q_i = (-1)^{i-1}
        BigInt det = cr3[i].p * cr3[i - 1].q - cr3[i - 1].p * cr3[i].q;
        CHECK(det == (i % 2 == 1 ? 1 : -1));
        // |alpha - p/q| < 1/q^2  <=>  |q*alpha - p| * q < 1
        ExactReal diff = r3 * ExactReal(cr3[i].q) - ExactReal(cr3[i].p);
        ExactReal abs_diff = diff.sign() < 0 ? -diff : diff;
        CHECK(abs_diff * ExactReal(cr3[i].q) < ExactReal(1));
    }
}

TEST_CASE("cf_term unrolls the period") {
    CfExpansion e = cf_expand(ExactReal::quadratic(0, 1, 3, 1)); // [1; (1, 2)]
    CHECK(cf_term(e, 0) == 1);
    CHECK(cf_term(e, 1) == 1);
    CHECK(cf_term(e, 2) == 2);
    CHECK(cf_term(e, 3) == 1);
    CHECK(cf_term(e, 4) == 2);
    CHECK(cf_term(e, 101) == 1);
    CHECK(cf_term(e, 102) == 2);

    CfExpansion f = cf_expand(ExactReal::fraction(7, 5));
    CHECK(cf_term(f, 2) == 2);
    CHECK_THROWS_AS(cf_term(f, 3), const IndexOutOfRange&);
}

TEST_CASE("periodic_value returns the root greater than 1") {
    CHECK(periodic_value(terms({1})) == golden());
    CHECK(periodic_value(terms({2})) == ExactReal::quadratic(1, 1, 2, 1));
    CHECK(periodic_value(terms({3})) == ExactReal::quadratic(3, 1, 13, 2));
    CHECK(periodic_value(terms({1, 2})) == ExactReal::quadratic(1, 1, 3, 2));
    CHECK(periodic_value(terms({2, 2})) == ExactReal::quadratic(1, 1, 2, 1));
    CHECK(periodic_value(terms({1, 1, 10, 1})) == ExactReal::quadratic(1, 2, 2, 2));
    CHECK(periodic_value(terms({1, 4})) == ExactReal::quadratic(1, 1, 2, 2));
    for (const ExactReal& v :
         {periodic_value(terms({1})), periodic_value(terms({3, 1, 2}))})
        CHECK(v > ExactReal(1));
}

TEST_CASE("value_of inverts cf_expand") {
    for (const ExactReal& x : {
             ExactReal::fraction(7, 5),
             ExactReal::fraction(22, 7),
             ExactReal(1),
             golden(),
             ExactReal::quadratic(0, 1, 2, 1),
             ExactReal::quadratic(0, 1, 8, 1),
             ExactReal::quadratic(9, 7, 13, 3),
             ExactReal::quadratic(3, 1, 5, 2),
         })
        CHECK(value_of(cf_expand(x)) == x);
}

TEST_CASE("purely periodic expansions are exactly the reduced numbers") {
    for (const ExactReal& x : {
             golden(),
             ExactReal::quadratic(1, 1, 2, 1),
             ExactReal::quadratic(3, 1, 13, 2),
             ExactReal::quadratic(1, 1, 3, 2),
             ExactReal::quadratic(0, 1, 2, 1),
             ExactReal::quadratic(0, 1, 3, 1),
             ExactReal::quadratic(2, 1, 5, 1),
             ExactReal::quadratic(-1, 1, 5, 2),
         }) {
        if (!x.is_quadratic()) continue;
        CfExpansion e = cf_expand(x);
        CHECK(e.head.empty() == x.is_reduced());
    }
}

TEST_CASE("normalize_expansion") {
    // Trailing 1 merges: [1; 2, 1] == [1; 3].
    CfExpansion a;
    a.head = terms({1, 2, 1});
    CHECK(normalize_expansion(a).head == terms({1, 3}));

    // Period shrinks to its primitive block.
    CfExpansion b;
    b.period = terms({2, 2});
    CfExpansion nb = normalize_expansion(b);
    CHECK(nb.head.empty());
    CHECK(nb.period == terms({2}));

    // Head entries that merely rotate the period get absorbed.
    CfExpansion c;
    c.head = terms({1});
    c.period = terms({2, 1});
    CfExpansion nc = normalize_expansion(c);
    CHECK(nc.head.empty());
    CHECK(nc.period == terms({1, 2}));

    // Already-canonical survives untouched.
    CfExpansion d;
    d.head = terms({1});
    d.period = terms({2});
    CHECK(normalize_expansion(d) == d);

    // Normalization preserves the value.
    CHECK(value_of(normalize_expansion(c)) == value_of(c));
}

TEST_CASE("canonical_class") {
    CfExpansion rat = cf_expand(ExactReal::fraction(7, 5));
    CfClass cr = canonical_class(rat);
    CHECK(cr.strip);
    CHECK(canonical_class(cf_expand(ExactReal(9))) == cr);

    CfClass g = canonical_class(cf_expand(golden()));
    CHECK(!g.strip);
    CHECK(g.period == terms({1}));

    // The class is the lex-least rotation, blind to the head.
    CfExpansion a;
    a.period = terms({2, 1, 3});
    CfExpansion b;
    b.head = terms({5, 4});
    b.period = terms({3, 2, 1});
    CHECK(canonical_class(a) == canonical_class(b));
    CHECK(canonical_class(a).period == terms({1, 3, 2}));

    CHECK(canonical_class(cf_expand(ExactReal::quadratic(0, 1, 3, 1))).period ==
          terms({1, 2}));
}

TEST_CASE("eventually_equal") {
    ExactReal r2 = ExactReal::quadratic(0, 1, 2, 1);
    CHECK(eventually_equal(cf_expand(r2), cf_expand(ExactReal::quadratic(1, 1, 2, 1))));
    CHECK(eventually_equal(cf_expand(golden()),
                           cf_expand(ExactReal::quadratic(3, 1, 5, 2))));
    CHECK(!eventually_equal(cf_expand(golden()),
                            cf_expand(ExactReal::quadratic(1, 1, 3, 2))));
    CHECK(!eventually_equal(cf_expand(r2), cf_expand(ExactReal::quadratic(0, 1, 8, 1))));
    // All rationals share the terminating tail.
    CHECK(eventually_equal(cf_expand(ExactReal::fraction(7, 5)),
                           cf_expand(ExactReal(9))));
    CHECK(!eventually_equal(cf_expand(ExactReal::fraction(7, 5)), cf_expand(golden())));
}

TEST_CASE("format and parse") {
    CHECK(format_expansion(cf_expand(ExactReal::fraction(7, 5))) == "[1; 2, 2]");
    CHECK(format_expansion(cf_expand(ExactReal(2))) == "[2]");
    CHECK(format_expansion(cf_expand(golden())) == "[(1)]");
    CHECK(format_expansion(cf_expand(ExactReal::quadratic(0, 1, 2, 1))) == "[1; (2)]");
    CHECK(format_expansion(cf_expand(ExactReal::quadratic(1, 1, 3, 2))) == "[(1, 2)]");
    CHECK(format_expansion(cf_expand(ExactReal::quadratic(0, 1, 8, 1))) ==
          "[2; (1, 4)]");

    for (const char* text : {"[1; 2, 2]", "[1; (2)]", "[(1, 2)]", "[2]", "[0; 3]",
                             "[2; (1, 4)]", "[(3)]"}) {
        CfExpansion e = parse_expansion(text);
        CHECK(format_expansion(e) == text);
    }

    // Parse normalizes non-canonical but well-formed spellings.
    CHECK(parse_expansion("[1;2,1]") == parse_expansion("[1; 3]"));
    CHECK(parse_expansion("[(2, 2)]") == parse_expansion("[(2)]"));

    CHECK_THROWS_AS(parse_expansion(""), const SyntaxError&);
    CHECK_THROWS_AS(parse_expansion("[]"), const SyntaxError&);
    CHECK_THROWS_AS(parse_expansion("[1"), const SyntaxError&);
    CHECK_THROWS_AS(parse_expansion("[1; 0]"), const SyntaxError&);
    CHECK_THROWS_AS(parse_expansion("[1; (0)]"), const SyntaxError&);
    CHECK_THROWS_AS(parse_expansion("[1; -2]"), const SyntaxError&);
    CHECK_THROWS_AS(parse_expansion("1; 2"), const SyntaxError&);
    CHECK_THROWS_AS(parse_expansion("[1; 2] junk"), const SyntaxError&);
}
