#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace f2norm {

using Wide = __int128;

namespace wide {

// Checked 128-bit primitives. Every one of them throws ArithmeticOverflow
// instead of wrapping.
Wide add(Wide a, Wide b);
Wide sub(Wide a, Wide b);
Wide mul(Wide a, Wide b);
Wide shl(Wide a, int bits);
Wide abs(Wide a);
int trailing_zeros(Wide a);  // a != 0
int bit_length(Wide a);      // a >= 0
std::string to_string(Wide a);
Wide parse(std::string_view text);
bool fits_int64(Wide a);

}  // namespace wide

/// Exact rational num / 2^exp with exp >= 0.
///
/// Canonical form: num odd, or exp == 0 (in particular exp == 0 when num == 0).
/// Equality is therefore plain field comparison.
class DyadicScalar {
public:
    constexpr DyadicScalar() = default;
    DyadicScalar(std::int64_t integer) : num_(integer) {}  // NOLINT(google-explicit-constructor)

    /// num / 2^exp, reduced to canonical form. exp may be negative.
    static DyadicScalar from_parts(Wide num, int exp);

    Wide numerator() const { return num_; }
    int exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }
    bool is_integer() const { return exp_ == 0; }

    /// this * 2^k, exact for any k.
    DyadicScalar scaled_pow2(int k) const;

    /// Largest integer <= value.
    Wide floor() const;
    /// value - floor(value), in [0, 1).
    DyadicScalar frac() const;

    double to_double() const;
    /// "num/2^exp", or just "num" for integers.
    std::string to_string() const;

    /// Accepts "NUM/2^EXP", "NUM/DEN" with DEN a power of two, or "NUM".
    static DyadicScalar parse(std::string_view text);

    friend DyadicScalar operator+(const DyadicScalar& a, const DyadicScalar& b);
    friend DyadicScalar operator-(const DyadicScalar& a, const DyadicScalar& b);
    friend DyadicScalar operator*(const DyadicScalar& a, const DyadicScalar& b);
    friend DyadicScalar operator-(const DyadicScalar& a);
    DyadicScalar& operator+=(const DyadicScalar& o) { return *this = *this + o; }
    DyadicScalar& operator-=(const DyadicScalar& o) { return *this = *this - o; }
    DyadicScalar& operator*=(const DyadicScalar& o) { return *this = *this * o; }

    friend bool operator==(const DyadicScalar& a, const DyadicScalar& b) = default;
    friend std::strong_ordering operator<=>(const DyadicScalar& a, const DyadicScalar& b);

private:
    Wide num_ = 0;
    int exp_ = 0;
};

DyadicScalar abs(const DyadicScalar& x);

/// Compares x against the rational p/q (q > 0) without rounding.
std::strong_ordering compare_rational(const DyadicScalar& x, Wide p, Wide q);

/// (1/6)(4/3)^s, the per-level mass threshold, compared exactly.
bool meets_level_threshold(const DyadicScalar& mass, int s);

}  // namespace f2norm
