#include "f2norm/errors.hpp"
#include "f2norm/group.hpp"
#include "f2norm/random_inputs.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace f2norm;

TEST_CASE("group dimension bounds") {
    CHECK_THROWS_AS(GroupDim(0), InputError);
    CHECK_THROWS_AS(GroupDim(kHardMaxDim + 1), InputError);
    GroupDim d(3);
    CHECK(d.order() == 8);
    CHECK(d.full_mask() == 7u);
    CHECK(d.contains(7));
    CHECK_FALSE(d.contains(8));
}

TEST_CASE("subspace_insert examples") {
    DualSubspace zero;
    auto v = subspace_insert(zero, 0b01);
    CHECK(v.dim() == 1);
    CHECK(v.basis() == std::vector<Mask>{0b01});

    auto same = subspace_insert(v, 0b01);
    CHECK(same == v);

    auto full = subspace_insert(v, 0b11);
    CHECK(full.dim() == 2);
    CHECK(full == DualSubspace::full(GroupDim(2)));
}

TEST_CASE("annihilator_basis examples") {
    auto perp = annihilator_basis(DualSubspace::span_of({0b01}), GroupDim(2));
    REQUIRE(perp.size() == 1);
    CHECK(perp[0] == 0b10u);

    CHECK(annihilator_basis(DualSubspace{}, GroupDim(3)).size() == 3);
    CHECK(annihilator_basis(DualSubspace::full(GroupDim(2)), GroupDim(2)).empty());
}

TEST_CASE("coset_index examples") {
    auto v = DualSubspace::span_of({0b01});
    CHECK(coset_index(v, 0b00) == coset_index(v, 0b10));
    CHECK(coset_index(v, 0b00) == 0u);
    CHECK(coset_index(v, 0b01) == 1u);

    auto w = DualSubspace::span_of({0b001, 0b010});
    std::map<std::uint32_t, int> fibres;
    for (PointMask x = 0; x < 8; ++x) ++fibres[coset_index(w, x)];
    CHECK(fibres.size() == 4);
    for (auto [idx, count] : fibres) CHECK(count == 2);
}

TEST_CASE("reduced basis is canonical") {
    auto v = DualSubspace::span_of({0b110, 0b011, 0b101});
    REQUIRE(v.dim() == 2);
    Mask pivots = 0;
    for (std::size_t i = 0; i < v.basis().size(); ++i) {
        Mask row = v.basis()[i];
        Mask pivot = row & (~row + 1);
        CHECK((pivots & row) == 0);
        pivots |= pivot;
        if (i > 0) CHECK(pivot > (v.basis()[i - 1] & (~v.basis()[i - 1] + 1)));
    }
    for (std::size_t i = 0; i < v.basis().size(); ++i)
        for (std::size_t j = 0; j < v.basis().size(); ++j)
            if (i != j) CHECK((v.basis()[i] & (v.basis()[j] & (~v.basis()[j] + 1))) == 0);
}

TEST_CASE("elements enumerate the span") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        GroupDim dim(std::uniform_int_distribution<int>(1, 8)(rng));
        auto v = random_subspace(rng, dim);
        auto elems = v.elements();
        std::sort(elems.begin(), elems.end());
        CHECK(elems == oracle::span(v.basis()));
        for (Mask m = 0; m < dim.order(); ++m)
            CHECK(v.contains(m) == std::binary_search(elems.begin(), elems.end(), m));
    }
}

TEST_CASE("property: order duality |V||V^perp| = 2^n") {
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        GroupDim dim(std::uniform_int_distribution<int>(1, 12)(rng));
        auto v = random_subspace(rng, dim);
        auto perp = annihilator_basis(v, dim);
        CHECK(v.order() * (std::size_t{1} << perp.size()) == dim.order());
        CHECK(linearly_independent(perp));
        for (PointMask x : perp)
            for (CharMask g : v.basis()) CHECK(pairing(g, x) == 0);
    }
}

TEST_CASE("property: double annihilator recovers V") {
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        GroupDim dim(std::uniform_int_distribution<int>(1, 12)(rng));
        auto v = random_subspace(rng, dim);
        auto perp = DualSubspace::span_of(annihilator_basis(v, dim));
        CHECK(DualSubspace::span_of(annihilator_basis(perp, dim)) == v);
    }
}

TEST_CASE("property: annihilator matches brute-force enumeration") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        GroupDim dim(std::uniform_int_distribution<int>(1, 8)(rng));
        auto v = random_subspace(rng, dim);
        auto brute = oracle::annihilator(oracle::span(v.basis()), dim);
        auto elems = DualSubspace::span_of(annihilator_basis(v, dim)).elements();
        std::sort(elems.begin(), elems.end());
        CHECK(elems == brute);
    }
}

TEST_CASE("property: insertion order does not matter") {
    Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        GroupDim dim(std::uniform_int_distribution<int>(1, 12)(rng));
        std::vector<Mask> masks(std::uniform_int_distribution<int>(0, 8)(rng));
        for (auto& m : masks) m = static_cast<Mask>(rng() & dim.full_mask());
        DualSubspace a;
        for (Mask m : masks) a = subspace_insert(a, m);
        std::shuffle(masks.begin(), masks.end(), rng);
        DualSubspace b;
        for (Mask m : masks) b = subspace_insert(b, m);
        CHECK(a == b);
        CHECK(a == DualSubspace::span_of(masks));
    }
}

TEST_CASE("property: insert grows dim iff the vector is new") {
    Rng rng(15);
    for (int t = 0; t < 300; ++t) {
        GroupDim dim(std::uniform_int_distribution<int>(1, 10)(rng));
        auto v = random_subspace(rng, dim);
        Mask g = static_cast<Mask>(rng() & dim.full_mask());
        auto w = subspace_insert(v, g);
        CHECK(w.dim() == v.dim() + (v.contains(g) ? 0 : 1));
        CHECK(w.contains_subspace(v));
        CHECK(w.contains(g));
    }
}

TEST_CASE("property: coset fibres have 2^(n - dim V) points") {
    Rng rng(16);
    for (int t = 0; t < 200; ++t) {
        GroupDim dim(std::uniform_int_distribution<int>(1, 12)(rng));
        auto v = random_subspace(rng, dim);
        auto idx = coset_indices(v, dim);
        std::vector<std::size_t> counts(v.order(), 0);
        for (std::size_t x = 0; x < idx.size(); ++x) {
            REQUIRE(idx[x] < v.order());
            CHECK(idx[x] == coset_index(v, static_cast<PointMask>(x)));
            ++counts[idx[x]];
        }
        for (auto c : counts) CHECK(c == dim.order() / v.order());
        // Same index exactly when the difference lies in the annihilator.
        PointMask x = static_cast<PointMask>(rng() & dim.full_mask());
        PointMask y = static_cast<PointMask>(rng() & dim.full_mask());
        bool same_coset = std::all_of(v.basis().begin(), v.basis().end(), [&](Mask g) { return pairing(g, x ^ y) == 0; });
        CHECK((idx[x] == idx[y]) == same_coset);
    }
}

TEST_CASE("linear independence") {
    CHECK(linearly_independent({}));
    CHECK(linearly_independent({1, 2, 4}));
    CHECK_FALSE(linearly_independent({1, 2, 3}));
    CHECK_FALSE(linearly_independent({0}));
}
