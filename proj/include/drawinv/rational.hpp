#ifndef DRAWINV_RATIONAL_HPP
#define DRAWINV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "drawinv/errors.hpp"

namespace drawinv {

using Int = mpz_class;
using Rat = mpq_class;  // always kept canonical: den > 0, gcd(|num|, den) = 1

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& z) { return sgn(z); }

/// Parses "p", "-p" or "p/q"; canonicalizes.
inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw error("bad rational: '" + s + "'");
    q.canonicalize();
    if (sgn(q.get_den()) <= 0) throw error("bad rational: '" + s + "'");
    return q;
}

/// Emits "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

struct Point {
    Rat x, y;

    Point() = default;
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        int c = cmp(a.x, b.x);
        if (c != 0) return c < 0;
        return cmp(a.y, b.y) < 0;
    }
};

inline std::string point_to_string(const Point& p) {
    return rat_to_string(p.x) + " " + rat_to_string(p.y);
}

// Small-integer view of a coordinate, for exact int128 fast paths.
inline bool small_coord(const Rat& q, std::int64_t& out) {
    if (q.get_den() != 1) return false;
    const mpz_class& n = q.get_num();
    if (!n.fits_slong_p()) return false;
    long v = n.get_si();
    if (v > (std::int64_t(1) << 60) || v < -(std::int64_t(1) << 60)) return false;
    out = v;
    return true;
}

inline bool small_point(const Point& p, std::int64_t& x, std::int64_t& y) {
    return small_coord(p.x, x) && small_coord(p.y, y);
}

}  // namespace drawinv

#endif
