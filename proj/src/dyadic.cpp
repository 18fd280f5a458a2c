#include "f2norm/dyadic.hpp"

#include "f2norm/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace f2norm {
namespace wide {

namespace {
constexpr Wide kMax = static_cast<Wide>((static_cast<unsigned __int128>(1) << 127) - 1);
constexpr Wide kMin = -kMax - 1;
}  // namespace

Wide add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in addition");
    return r;
}

Wide sub(Wide a, Wide b) {
    Wide r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in subtraction");
    return r;
}

Wide mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit overflow in multiplication");
    return r;
}

Wide shl(Wide a, int bits) {
    if (bits < 0) throw std::invalid_argument("negative shift");
    if (a == 0) return 0;
    if (bits >= 127 || a > (kMax >> bits) || a < (kMin >> bits))
        throw ArithmeticOverflow("128-bit overflow in shift");
    return a * (static_cast<Wide>(1) << bits);
}

Wide abs(Wide a) {
    if (a == kMin) throw ArithmeticOverflow("128-bit overflow in abs");
    return a < 0 ? -a : a;
}

int trailing_zeros(Wide a) {
    auto u = static_cast<unsigned __int128>(a);
    auto lo = static_cast<std::uint64_t>(u);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(u >> 64));
}

int bit_length(Wide a) {
    auto u = static_cast<unsigned __int128>(a);
    auto hi = static_cast<std::uint64_t>(u >> 64);
    if (hi != 0) return 128 - __builtin_clzll(hi);
    auto lo = static_cast<std::uint64_t>(u);
    return lo == 0 ? 0 : 64 - __builtin_clzll(lo);
}

std::string to_string(Wide a) {
    if (a == 0) return "0";
    bool neg = a < 0;
    auto u = neg ? static_cast<unsigned __int128>(-(a + 1)) + 1 : static_cast<unsigned __int128>(a);
    std::string out;
    while (u != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

Wide parse(std::string_view text) {
    if (text.empty()) throw InputError("empty integer");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw InputError("malformed integer '" + std::string(text) + "'");
    Wide v = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw InputError("malformed integer '" + std::string(text) + "'");
        v = add(mul(v, 10), neg ? -(c - '0') : (c - '0'));
    }
    return v;
}

bool fits_int64(Wide a) {
    return a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace wide

DyadicScalar DyadicScalar::from_parts(Wide num, int exp) {
    DyadicScalar r;
    if (num == 0) return r;
    if (exp < 0) {
        r.num_ = wide::shl(num, -exp);
        return r;
    }
    int tz = std::min(wide::trailing_zeros(num), exp);
    r.num_ = num >> tz;
    r.exp_ = exp - tz;
    return r;
}

namespace {

// Brings both operands to the larger exponent.
std::pair<Wide, Wide> aligned(const DyadicScalar& a, const DyadicScalar& b, int& exp) {
    exp = std::max(a.exponent(), b.exponent());
    return {wide::shl(a.numerator(), exp - a.exponent()), wide::shl(b.numerator(), exp - b.exponent())};
}

}  // namespace

DyadicScalar operator+(const DyadicScalar& a, const DyadicScalar& b) {
    int e;
    auto [x, y] = aligned(a, b, e);
    return DyadicScalar::from_parts(wide::add(x, y), e);
}

DyadicScalar operator-(const DyadicScalar& a, const DyadicScalar& b) {
    int e;
    auto [x, y] = aligned(a, b, e);
    return DyadicScalar::from_parts(wide::sub(x, y), e);
}

DyadicScalar operator*(const DyadicScalar& a, const DyadicScalar& b) {
    return DyadicScalar::from_parts(wide::mul(a.num_, b.num_), a.exp_ + b.exp_);
}

DyadicScalar operator-(const DyadicScalar& a) {
    return DyadicScalar::from_parts(wide::sub(0, a.num_), a.exp_);
}

std::strong_ordering operator<=>(const DyadicScalar& a, const DyadicScalar& b) {
    if (a.sign() != b.sign()) return a.sign() <=> b.sign();
    if (a.exp_ == b.exp_) return a.num_ <=> b.num_;
    // Same sign: compare magnitudes via bit lengths before aligning, so that
    // wildly different exponents never overflow the shift.
    Wide ma = wide::abs(a.num_), mb = wide::abs(b.num_);
    int la = wide::bit_length(ma) - a.exp_, lb = wide::bit_length(mb) - b.exp_;
    std::strong_ordering mag = std::strong_ordering::equal;
    if (la != lb) {
        mag = la <=> lb;
    } else {
        int e = std::max(a.exp_, b.exp_);
        mag = wide::shl(ma, e - a.exp_) <=> wide::shl(mb, e - b.exp_);
    }
    if (a.sign() >= 0) return mag;
    return 0 <=> mag;
}

DyadicScalar DyadicScalar::scaled_pow2(int k) const {
    return from_parts(num_, exp_ - k);
}

Wide DyadicScalar::floor() const {
    return num_ >> exp_;  // arithmetic shift rounds toward -inf
}

DyadicScalar DyadicScalar::frac() const {
    if (exp_ == 0) return {};
    Wide mask = (static_cast<Wide>(1) << exp_) - 1;
    return from_parts(num_ & mask, exp_);
}

double DyadicScalar::to_double() const {
    return std::ldexp(static_cast<double>(num_), -exp_);
}

std::string DyadicScalar::to_string() const {
    if (exp_ == 0) return wide::to_string(num_);
    return wide::to_string(num_) + "/2^" + std::to_string(exp_);
}

DyadicScalar DyadicScalar::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_parts(wide::parse(text), 0);
    Wide num = wide::parse(text.substr(0, slash));
    auto den = text.substr(slash + 1);
    if (den.starts_with("2^")) {
        auto e = den.substr(2);
        int exp = 0;
        auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), exp);
        if (ec != std::errc{} || ptr != e.data() + e.size() || exp < 0 || exp > 120)
            throw InputError("malformed exponent in '" + std::string(text) + "'");
        return from_parts(num, exp);
    }
    Wide d = wide::parse(den);
    if (d <= 0 || (d & (d - 1)) != 0) throw InputError("denominator must be a power of two: '" + std::string(text) + "'");
    return from_parts(num, wide::bit_length(d) - 1);
}

DyadicScalar abs(const DyadicScalar& x) {
    return x.sign() < 0 ? -x : x;
}

std::strong_ordering compare_rational(const DyadicScalar& x, Wide p, Wide q) {
    if (q <= 0) throw std::invalid_argument("compare_rational: q must be positive");
    // x = num/2^e vs p/q  <=>  num*q vs p*2^e
    return wide::mul(x.numerator(), q) <=> wide::shl(p, x.exponent());
}

bool meets_level_threshold(const DyadicScalar& mass, int s) {
    if (s < 0) throw std::invalid_argument("negative level index");
    // (1/6)(4/3)^s = 2^(2s) / (2 * 3^(s+1))
    Wide three_pow = 1;
    for (int i = 0; i <= s; ++i) three_pow = wide::mul(three_pow, 3);
    return compare_rational(mass, wide::shl(1, 2 * s), wide::mul(2, three_pow)) >= 0;
}

}  // namespace f2norm
