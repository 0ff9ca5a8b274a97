#pragma once

#include <stdexcept>
#include <string>

#include "htp/laurent.hpp"
#include "htp/perm.hpp"
#include "htp/trace_algebra.hpp"

namespace htp {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "(0 2)(1 3)" — unlisted symbols are fixed points, degree is the largest
// symbol mentioned.  Separators inside a cycle may be spaces or commas.
Perm parse_perm_cycles(const std::string& text);

// "(0 1 2)[1,2]" — cycles then word.  The word length sets the degree; a key
// without a word must be degree 0.
TraceKey parse_trace_key(const std::string& text);

// Terms joined by top-level +/-, each "coeff * key", "key" or a bare scalar
// (a multiple of (0)).  Multi-term coefficients must be parenthesised.
TraceElement parse_trace_element(const std::string& text, Basis basis, int min_dim = 1);

std::string format_perm(const Perm& p);
std::string format_trace_key(const TraceKey& key);
std::string format_trace_element(const TraceElement& x);

std::string perm_to_json(const Perm& p);
std::string laurent_to_json(const Laurent& c);
std::string trace_element_to_json(const TraceElement& x);
TraceElement trace_element_from_json(const std::string& text);

}  // namespace htp
