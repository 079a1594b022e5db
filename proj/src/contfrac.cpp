#include "apollo/contfrac.hpp"

#include <algorithm>
#include <cctype>

namespace apollo {

namespace {

void require_positive(const ExactReal& alpha) {
    if (alpha.sign() <= 0) throw NonPositiveInput("alpha must be positive");
}

} // namespace

CfExpansion cf_expand(const ExactReal& alpha) {
    require_positive(alpha);
    CfExpansion e;
    if (alpha.is_rational()) {
        // Euclid; the final quotient is >= 2 whenever the expansion has
        // more than one term, so the result is already canonical.
        BigInt num = alpha.p(), den = alpha.r();
        for (;;) {
            e.head.push_back(num / den);
            BigInt rem = num % den;
            if (rem == 0) break;
            num = den;
            den = rem;
        }
        return e;
    }
    // Quadratic: iterate x -> 1/(x - floor x); the state sequence is
    // eventually periodic, and the first repeated state marks both the
    // minimal preperiod and the minimal period.
    std::vector<ExactReal> states;
    std::vector<BigInt> terms;
    ExactReal x = alpha;
    for (;;) {
        auto it = std::find(states.begin(), states.end(), x);
        if (it != states.end()) {
            size_t j = static_cast<size_t>(it - states.begin());
            e.head.assign(terms.begin(), terms.begin() + j);
            e.period.assign(terms.begin() + j, terms.end());
            return e;
        }
        states.push_back(x);
        BigInt a = x.floor();
        terms.push_back(a);
        x = (x - ExactReal(a)).inverse();
    }
}

std::string step_trace(const ExactReal& alpha, std::size_t max_steps) {
    require_positive(alpha);
    std::string trace;
    ExactReal x = alpha;
    while (trace.size() < max_steps) {
        if (x.is_zero()) {
            trace += 'C';
            break;
        }
        if (x >= ExactReal(1)) {
            BigInt k = x.floor();
            size_t room = max_steps - trace.size();
            BigInt emit = k;
            if (emit > BigInt(room)) emit = BigInt(room);
            trace.append(emit.convert_to<size_t>(), 'A');
            x = x - ExactReal(emit);
        } else {
            trace += 'B';
            x = x.inverse();
        }
    }
    return trace;
}

BigInt cf_term(const CfExpansion& e, std::size_t i) {
    if (i < e.head.size()) return e.head[i];
    if (e.period.empty()) throw IndexOutOfRange("past the end of a finite expansion");
    return e.period[(i - e.head.size()) % e.period.size()];
}

std::vector<Convergent> convergents(const CfExpansion& e, std::size_t n) {
    std::vector<Convergent> out;
    BigInt p2 = 0, p1 = 1, q2 = 1, q1 = 0; // p_{-2}, p_{-1}, q_{-2}, q_{-1}
    for (std::size_t i = 0; i <= n; ++i) {
        BigInt a = cf_term(e, i);
        BigInt p = a * p1 + p2, q = a * q1 + q2;
        out.push_back({p, q});
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
    }
    return out;
}

ExactReal periodic_value(const std::vector<BigInt>& period) {
    if (period.empty()) throw InternalInconsistency("empty period");
    // tau = (p1 tau + p2) / (q1 tau + q2) with the convergent matrix of one
    // period; the root greater than 1 is the larger one.
    BigInt p2 = 0, p1 = 1, q2 = 1, q1 = 0;
    for (const BigInt& a : period) {
        BigInt p = a * p1 + p2, q = a * q1 + q2;
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
    }
    return ExactReal::quadratic_root(q1, q2 - p1, -p2, 1);
}

ExactReal value_of(const CfExpansion& e) {
    ExactReal x;
    size_t i = e.head.size();
    if (e.is_finite()) {
        if (i == 0) throw InternalInconsistency("empty expansion");
        x = ExactReal(e.head[--i]);
    } else {
        x = periodic_value(e.period);
    }
    while (i > 0) x = ExactReal(e.head[--i]) + x.inverse();
    return x;
}

namespace {

// Smallest b with period = block^k; the primitive block length divides m.
size_t primitive_block(const std::vector<BigInt>& period) {
    size_t m = period.size();
    for (size_t b = 1; b < m; ++b) {
        if (m % b != 0) continue;
        bool ok = true;
        for (size_t i = b; i < m && ok; ++i) ok = period[i] == period[i - b];
        if (ok) return b;
    }
    return m;
}

} // namespace

CfExpansion normalize_expansion(CfExpansion e) {
    if (e.is_finite()) {
        // [..., a, 1] and [..., a+1] name the same number.
        if (e.head.size() >= 2 && e.head.back() == 1) {
            e.head.pop_back();
            e.head.back() += 1;
        }
        return e;
    }
    size_t b = primitive_block(e.period);
    e.period.resize(b);
    // A head entry equal to the last period entry only rotates the period.
    while (!e.head.empty() && e.head.back() == e.period.back()) {
        e.head.pop_back();
        std::rotate(e.period.begin(), e.period.end() - 1, e.period.end());
    }
    return e;
}

CfClass canonical_class(const CfExpansion& e) {
    if (e.is_finite()) return {true, {}};
    CfExpansion n = normalize_expansion(e);
    size_t m = n.period.size();
    std::vector<BigInt> best = n.period;
    for (size_t r = 1; r < m; ++r) {
        std::rotate(n.period.begin(), n.period.begin() + 1, n.period.end());
        if (std::lexicographical_compare(n.period.begin(), n.period.end(),
                                         best.begin(), best.end()))
            best = n.period;
    }
    return {false, best};
}

bool eventually_equal(const CfExpansion& a, const CfExpansion& b) {
    return canonical_class(a) == canonical_class(b);
}

std::string format_expansion(const CfExpansion& e) {
    std::string s = "[";
    for (size_t i = 0; i < e.head.size(); ++i) {
        if (i == 1) s += "; ";
        else if (i > 1) s += ", ";
        s += e.head[i].str();
    }
    if (!e.period.empty()) {
        if (e.head.size() == 1) s += "; ";
        else if (e.head.size() > 1) s += ", ";
        s += "(";
        for (size_t i = 0; i < e.period.size(); ++i) {
            if (i) s += ", ";
            s += e.period[i].str();
        }
        s += ")";
    }
    return s + "]";
}

CfExpansion parse_expansion(const std::string& text) {
    CfExpansion e;
    size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto eat = [&](char c) {
        skip();
        if (i < text.size() && text[i] == c) {
            ++i;
            return true;
        }
        return false;
    };
    auto integer = [&] {
        skip();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw SyntaxError("expected an integer");
        return BigInt(text.substr(start, i - start));
    };
    if (!eat('[')) throw SyntaxError("expected '['");
    bool in_period = false;
    bool first = true;
    for (;;) {
        skip();
        if (!in_period && eat('(')) in_period = true;
        BigInt v = integer();
        (in_period ? e.period : e.head).push_back(v);
        if (in_period && eat(')')) {
            if (!eat(']')) throw SyntaxError("expected ']' after period");
            break;
        }
        if (!in_period && eat(']')) break;
        if (first && !in_period) {
            if (!eat(';') && !eat(',')) throw SyntaxError("expected ';'");
        } else if (!eat(',')) {
            throw SyntaxError("expected ','");
        }
        first = false;
    }
    skip();
    if (i != text.size()) throw SyntaxError("trailing input");
    if (e.head.empty() && e.period.empty()) throw SyntaxError("empty expansion");
    if (!e.head.empty() && e.head[0] < 0) throw SyntaxError("negative leading term");
    for (size_t k = 1; k < e.head.size(); ++k)
        if (e.head[k] < 1) throw SyntaxError("head terms after the first must be >= 1");
    for (const BigInt& c : e.period)
        if (c < 1) throw SyntaxError("period terms must be >= 1");
    return normalize_expansion(e);
}

} // namespace apollo
