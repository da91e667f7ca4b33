#pragma once

#include <stdexcept>
#include <string>

namespace rgc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed constructive input (bad edge list, invalid selection, bad sizes)
struct input_error : error {
    using error::error;
};

// exact solver asked to run above its configured size limit
struct size_limit_error : error {
    using error::error;
};

// input graph is not in the class an operation requires
// (not threshold, not chordal, not bipartite, parameter out of range)
struct family_error : error {
    using error::error;
};

// unreadable graph / certificate / annotation file
struct parse_error : error {
    using error::error;
};

} // namespace rgc
