#pragma once

// Brute-force reference implementations. Everything here is written from the
// definitions (O(4^n) sums, closure by enumeration) and shares no code path with
// the butterfly transform or the echelon-form subspace code.

#include "f2norm/dyadic.hpp"
#include "f2norm/fourier.hpp"
#include "f2norm/group.hpp"
#include "f2norm/point_set.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace oracle {

using f2norm::CharMask;
using f2norm::DyadicScalar;
using f2norm::FunctionTable;
using f2norm::GroupDim;
using f2norm::Mask;
using f2norm::PointMask;
using f2norm::PointSet;
using Q = boost::rational<long long>;

inline int parity(Mask a, Mask b) {
    int p = 0;
    for (Mask m = a & b; m; m >>= 1) p ^= static_cast<int>(m & 1);
    return p;
}

inline Q to_q(const DyadicScalar& x) {
    return Q(static_cast<long long>(x.numerator()), 1LL << x.exponent());
}

inline std::vector<Q> values(const FunctionTable& f) {
    std::vector<Q> out;
    for (std::size_t x = 0; x < f.size(); ++x) out.push_back(to_q(f[x]));
    return out;
}

inline std::vector<Q> indicator(const PointSet& a) {
    std::vector<Q> out(a.dim().order(), Q(0));
    for (PointMask x : a.members()) out[x] = 1;
    return out;
}

// fhat(gamma) = 2^-n sum_x f(x) (-1)^<gamma,x>
inline std::vector<Q> dft(const std::vector<Q>& f) {
    std::size_t size = f.size();
    std::vector<Q> out(size, Q(0));
    for (std::size_t g = 0; g < size; ++g) {
        Q acc = 0;
        for (std::size_t x = 0; x < size; ++x) acc += parity(static_cast<Mask>(g), static_cast<Mask>(x)) ? -f[x] : f[x];
        out[g] = acc / static_cast<long long>(size);
    }
    return out;
}

inline Q l1(const std::vector<Q>& v) {
    Q acc = 0;
    for (const Q& q : v) acc += abs(q);
    return acc;
}

inline Q a_norm(const PointSet& a) { return l1(dft(oracle::indicator(a))); }

inline Q mean_l1(const std::vector<Q>& f) { return l1(f) / static_cast<long long>(f.size()); }

inline Q mean_l2sq(const std::vector<Q>& f) {
    Q acc = 0;
    for (const Q& q : f) acc += q * q;
    return acc / static_cast<long long>(f.size());
}

// All elements of span(masks), sorted.
inline std::vector<Mask> span(const std::vector<Mask>& masks) {
    std::set<Mask> s{0};
    for (Mask m : masks) {
        std::vector<Mask> cur(s.begin(), s.end());
        for (Mask c : cur) s.insert(c ^ m);
    }
    return {s.begin(), s.end()};
}

inline std::vector<Mask> annihilator(const std::vector<Mask>& elements, GroupDim dim) {
    std::vector<Mask> out;
    for (Mask x = 0; x < dim.order(); ++x)
        if (std::all_of(elements.begin(), elements.end(), [&](Mask g) { return parity(g, x) == 0; })) out.push_back(x);
    return out;
}

inline Q frac(const Q& q) {
    long long fl = q.numerator() / q.denominator();
    if (q.numerator() < 0 && q.numerator() % q.denominator() != 0) --fl;
    return q - fl;
}

// 2 |V|^-1 {alpha |V|}(1 - {alpha |V|})
inline Q physical_bound(const Q& alpha, long long order) {
    Q t = frac(alpha * order);
    return Q(2, order) * t * (1 - t);
}

// f_V = chi_A - coset averages, by explicit coset enumeration.
inline std::vector<Q> residual(const PointSet& a, const std::vector<Mask>& v_elements) {
    GroupDim dim = a.dim();
    std::vector<Mask> perp = annihilator(v_elements, dim);
    std::vector<Q> chi = oracle::indicator(a), out(dim.order());
    for (Mask x = 0; x < dim.order(); ++x) {
        Q avg = 0;
        for (Mask y : perp) avg += chi[x ^ y];
        out[x] = chi[x] - avg / static_cast<long long>(perp.size());
    }
    return out;
}

inline double lp(const std::vector<Q>& f, double p) {
    double acc = 0;
    for (const Q& q : f) acc += std::pow(std::abs(boost::rational_cast<double>(q)), p);
    return std::pow(acc / static_cast<double>(f.size()), 1.0 / p);
}

}  // namespace oracle
