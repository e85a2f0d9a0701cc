#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace specmatch {

// Exact half-integer: the value is halves/2. Fractional matching numbers are
// always half-integral, so they are stored and compared in half-units and
// never touch floating point.
struct HalfInt {
    std::int64_t halves = 0;

    static HalfInt from_halves(std::int64_t h) { return HalfInt{h}; }
    static HalfInt whole(std::int64_t w) { return HalfInt{2 * w}; }

    double to_double() const { return static_cast<double>(halves) / 2.0; }
    bool is_integer() const { return halves % 2 == 0; }

    // Rendered as "p/2" so exactness stays visible in reports.
    std::string str() const { return std::to_string(halves) + "/2"; }

    friend auto operator<=>(HalfInt, HalfInt) = default;
    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.halves + b.halves}; }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.halves - b.halves}; }
};

}  // namespace specmatch
