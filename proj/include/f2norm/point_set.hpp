#pragma once

#include "f2norm/dyadic.hpp"
#include "f2norm/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace f2norm {

/// Subset of F_2^n as a 2^n-bit set.
class PointSet {
public:
    explicit PointSet(GroupDim dim);
    PointSet(GroupDim dim, const std::vector<PointMask>& members);

    /// The whole group.
    static PointSet all(GroupDim dim);

    GroupDim dim() const { return dim_; }
    bool contains(PointMask x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
    void insert(PointMask x);
    void erase(PointMask x);

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    /// |A| / 2^n, exact.
    DyadicScalar density() const;
    std::vector<PointMask> members() const;

    /// Bitmap as a big-endian hexadecimal number: bit x set iff x in A,
    /// padded to ceil(2^n / 4) digits.
    std::string to_hex() const;
    static PointSet from_hex(GroupDim dim, const std::string& hex);

    friend bool operator==(const PointSet&, const PointSet&) = default;
    /// Lexicographic on the ascending member lists.
    friend bool lexicographically_less(const PointSet& a, const PointSet& b);

private:
    void check(PointMask x) const;

    GroupDim dim_;
    std::vector<std::uint64_t> words_;
};

}  // namespace f2norm
