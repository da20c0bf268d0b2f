#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace bptk {

// Similarity and distance values. Telomeric adjacencies count one half, so
// every score is kept as an integer number of half units.
class Score {
public:
    constexpr Score() = default;

    static constexpr Score from_half_units(std::int64_t x2) { return Score(x2); }
    static constexpr Score whole(std::int64_t units) { return Score(2 * units); }

    constexpr std::int64_t half_units() const { return x2_; }
    constexpr bool is_integral() const { return x2_ % 2 == 0; }

    // Exact decimal rendering: "3", "2.5", "-0.5".
    std::string to_string() const;

    constexpr Score& operator+=(Score o) { x2_ += o.x2_; return *this; }
    constexpr Score& operator-=(Score o) { x2_ -= o.x2_; return *this; }
    friend constexpr Score operator+(Score a, Score b) { return Score(a.x2_ + b.x2_); }
    friend constexpr Score operator-(Score a, Score b) { return Score(a.x2_ - b.x2_); }
    friend constexpr Score operator*(std::int64_t k, Score a) { return Score(k * a.x2_); }
    friend constexpr auto operator<=>(Score, Score) = default;

private:
    explicit constexpr Score(std::int64_t x2) : x2_(x2) {}
    std::int64_t x2_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Score s) { return os << s.to_string(); }

} // namespace bptk
