#ifndef DRAWINV_ERRORS_HPP
#define DRAWINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drawinv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input violates a general-position precondition.
struct degenerate_error : error {
    using error::error;
};

/// Segments were expected to cross properly but do not.
struct not_crossing_error : error {
    using error::error;
};

/// Query point lies on the curve.
struct on_curve_error : error {
    using error::error;
};

struct bad_size_error : error {
    using error::error;
};

struct too_large_error : error {
    using error::error;
};

struct exhausted_error : error {
    using error::error;
};

/// Vertex is incident to the edge where it must not be.
struct incidence_error : error {
    using error::error;
};

struct index_mismatch_error : error {
    using error::error;
};

struct host_mismatch_error : error {
    using error::error;
};

/// Geometry tuple matches neither shape profile of the r-fold formulas.
struct bad_profile_error : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& what, int line)
        : error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

}  // namespace drawinv

#endif
