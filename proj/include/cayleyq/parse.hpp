#pragma once

#include <string_view>

#include "cayleyq/ratfunc.hpp"
#include "cayleyq/rational.hpp"

namespace cayleyq {

// Text grammar for field elements ('e' is the infinitesimal):
//
//   rat   := '-'? digits ('/' digits)?
//   mono  := '-'? (rat ('*' 'e' ('^' digits)?)? | 'e' ('^' digits)?)
//   poly  := mono (('+'|'-') mono)*
//   elem  := poly | '(' poly ')' ('/' '(' poly ')')? | mono '/' '(' poly ')'
//
// Whitespace between tokens is ignored. The last alternative is what the
// printer emits for single-term numerators, e.g. "8*e^2/(1+e^2)".

struct ParseLimits {
    int max_degree = 64;
};

/// Throws ParseError (with byte offset) on malformed input, on a zero
/// denominator, and on exponents above limits.max_degree.
RatFunc parse_elem(std::string_view text, ParseLimits limits = {});

/// Same grammar, but the value must not depend on e.
Rat parse_rat(std::string_view text);

}  // namespace cayleyq
