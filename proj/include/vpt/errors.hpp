#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vpt {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph6 / edge-list / representation text.
struct parse_error : error {
    parse_error(std::size_t line, std::size_t offset, const std::string& what)
        : error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + what)
        , line(line)
        , offset(offset)
    {
    }
    std::size_t line;
    std::size_t offset;
};

// An operation was called outside its documented precondition.
struct precondition_error : error {
    using error::error;
};

// Input size above a configured cap (coloring, isomorphism).
struct cap_exceeded : error {
    using error::error;
};

// Clique-tree enumeration ran past its search budget; says nothing about VPT membership.
struct budget_exceeded : error {
    using error::error;
};

// Exhaustive search over host trees up to a size bound found nothing.
struct bound_exhausted : error {
    using error::error;
};

struct not_vpt : error {
    using error::error;
};

} // namespace vpt
