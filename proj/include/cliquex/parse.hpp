// parse.hpp - literal and grid parsing shared by the command-line front end
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliquex/errors.hpp"
#include "cliquex/rational.hpp"
#include "cliquex/real.hpp"

namespace cliquex {

// A probability literal: "1/2" selects exact rational handling, "0.5" becomes
// a high-precision Real. The verbatim literal is kept for echoing in reports.
struct ProbabilityLiteral {
    std::string literal;
    bool is_rational = false;       // literal was written as a fraction
    std::optional<Rational> exact;  // available for fractions and plain decimals
    Real value;                     // always usable
};

inline ProbabilityLiteral parse_probability(const std::string& s,
                                            prec_t prec = Real::default_precision()) {
    ProbabilityLiteral out;
    out.literal = s;
    if (s.find('/') != std::string::npos) {
        out.is_rational = true;
        out.exact = parse_rational(s);
        out.value = to_real(*out.exact, prec);
        return out;
    }
    out.value = Real::from_string(s, prec);
    try {
        out.exact = parse_rational(s); // fails for scientific notation, which has no plain form
    } catch (const DomainError&) {
    }
    return out;
}

// Nonnegative integer literal, optionally in the power form "2^20".
inline long parse_count(const std::string& s) {
    auto bad = [&] { return DomainError("unparseable count literal: '" + s + "'"); };
    auto plain = [&](const std::string& t) -> long {
        if (t.empty() || t.size() > 18) throw bad();
        long v = 0;
        for (char c : t) {
            if (c < '0' || c > '9') throw bad();
            v = v * 10 + (c - '0');
        }
        return v;
    };
    const std::size_t caret = s.find('^');
    if (caret == std::string::npos) return plain(s);
    const long base = plain(s.substr(0, caret));
    const long expo = plain(s.substr(caret + 1));
    if (base < 2 || expo < 0 || expo > 62) throw bad();
    long v = 1;
    for (long i = 0; i < expo; ++i) {
        if (v > (long{1} << 62) / base) throw DomainError("count literal overflows: '" + s + "'");
        v *= base;
    }
    return v;
}

// Inclusive sweep grid "start:stop:x2" (geometric) or "start:stop:+1000"
// (arithmetic); a bare count is a one-point grid. Stop is included exactly
// when the step lands on it.
inline std::vector<long> parse_grid(const std::string& s) {
    auto bad = [&] { return DomainError("unparseable grid: '" + s + "'"); };
    const std::size_t c1 = s.find(':');
    if (c1 == std::string::npos) return {parse_count(s)};
    const std::size_t c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos || s.find(':', c2 + 1) != std::string::npos) throw bad();
    const long start = parse_count(s.substr(0, c1));
    const long stop = parse_count(s.substr(c1 + 1, c2 - c1 - 1));
    const std::string step = s.substr(c2 + 1);
    if (start < 1 || stop < start || step.size() < 2) throw bad();

    std::vector<long> grid;
    const long k = parse_count(step.substr(1));
    if (step[0] == 'x') {
        if (k < 2) throw bad();
        for (long v = start; v <= stop; v *= k) {
            grid.push_back(v);
            if (v > stop / k) break;
        }
    } else if (step[0] == '+') {
        if (k < 1) throw bad();
        for (long v = start; v <= stop; v += k) grid.push_back(v);
    } else {
        throw bad();
    }
    return grid;
}

} // namespace cliquex
