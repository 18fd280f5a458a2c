#include "f2norm/point_set.hpp"

#include "f2norm/errors.hpp"

#include <algorithm>
#include <bit>

namespace f2norm {

PointSet::PointSet(GroupDim dim) : dim_(dim), words_((dim.order() + 63) / 64, 0) {}

PointSet::PointSet(GroupDim dim, const std::vector<PointMask>& members) : PointSet(dim) {
    for (PointMask x : members) insert(x);
}

PointSet PointSet::all(GroupDim dim) {
    PointSet s(dim);
    for (std::size_t x = 0; x < dim.order(); ++x) s.insert(static_cast<PointMask>(x));
    return s;
}

void PointSet::check(PointMask x) const {
    if (!dim_.contains(x)) throw InputError("point " + std::to_string(x) + " lies outside F_2^" + std::to_string(dim_.n()));
}

void PointSet::insert(PointMask x) {
    check(x);
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

void PointSet::erase(PointMask x) {
    check(x);
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
}

std::size_t PointSet::size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

DyadicScalar PointSet::density() const {
    return DyadicScalar::from_parts(static_cast<Wide>(size()), dim_.n());
}

std::vector<PointMask> PointSet::members() const {
    std::vector<PointMask> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(static_cast<PointMask>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string PointSet::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t digits = (dim_.order() + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            std::size_t x = 4 * d + b;
            if (x < dim_.order() && contains(static_cast<PointMask>(x))) nibble |= 1u << b;
        }
        out[digits - 1 - d] = kDigits[nibble];
    }
    return out;
}

PointSet PointSet::from_hex(GroupDim dim, const std::string& hex) {
    std::size_t digits = (dim.order() + 3) / 4;
    if (hex.size() != digits)
        throw InputError("hexbits must have " + std::to_string(digits) + " digits for n=" + std::to_string(dim.n()));
    PointSet s(dim);
    for (std::size_t d = 0; d < digits; ++d) {
        char c = hex[digits - 1 - d];
        unsigned nibble;
        if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') nibble = static_cast<unsigned>(c - 'A' + 10);
        else throw InputError(std::string("invalid hex digit '") + c + "'");
        for (std::size_t b = 0; b < 4; ++b) {
            if (!(nibble >> b & 1)) continue;
            std::size_t x = 4 * d + b;
            if (x >= dim.order()) throw InputError("hexbits sets a bit beyond 2^n");
            s.insert(static_cast<PointMask>(x));
        }
    }
    return s;
}

bool lexicographically_less(const PointSet& a, const PointSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace f2norm
