#pragma once

#include <stdexcept>
#include <string>

namespace famtune {

/// Closed parameter interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

/// A computation exceeded an explicit cap (piece budget, subset-search cap, ...).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, unwritable path).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; the message names the offending field or offset.
class ParseError : public IoError {
public:
    using IoError::IoError;
};

}  // namespace famtune
