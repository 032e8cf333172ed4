#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "addiso/kspace.hpp"

using namespace addiso;

namespace {

// q-Pascal recurrence, an oracle independent of the library's product formula
uint64_t pascal_gaussian(uint32_t k, uint32_t r, uint64_t q) {
    if (r > k) return 0;
    if (r == 0 || r == k) return 1;
    uint64_t qr = 1;
    for (uint32_t i = 0; i < r; ++i) qr *= q;
    return pascal_gaussian(k - 1, r - 1, q) + pascal_gaussian(k - 1, r, q) * qr;
}

KVec vec(std::initializer_list<uint32_t> init) {
    KVec v;
    for (uint32_t x : init) v.push_back({x});
    return v;
}

std::set<KVec> point_set(const FieldK& f, const KSubspace& s) {
    auto pts = enumerate_points(f, s);
    return std::set<KVec>(pts.begin(), pts.end());
}

KSubspace random_subspace(const FieldK& f, uint32_t ambient, std::mt19937& rng) {
    std::vector<KVec> vecs;
    uint32_t count = rng() % (ambient + 1);
    for (uint32_t i = 0; i < count; ++i) {
        KVec v(ambient);
        for (auto& e : v) e = {uint32_t(rng() % f.size())};
        vecs.push_back(std::move(v));
    }
    return span(f, ambient, vecs);
}

}  // namespace

TEST_CASE("rref") {
    FieldK f2 = FieldK::with_default_modulus(PrimeField(2), 1);
    KMatrix id = identity_matrix(3);
    auto [r1, rank1] = rref(f2, id);
    CHECK(r1 == id);
    CHECK(rank1 == 3);

    KMatrix m(3, 3);
    auto fill = [&](uint32_t r, std::initializer_list<uint32_t> row) {
        uint32_t c = 0;
        for (uint32_t x : row) m.at(r, c++) = {x};
    };
    fill(0, {1, 0, 1});
    fill(1, {0, 1, 0});
    fill(2, {1, 1, 1});  // sum of the first two
    CHECK(rref(f2, m).second == 2);

    KMatrix z(2, 4);
    auto [rz, rankz] = rref(f2, z);
    CHECK(rz == z);
    CHECK(rankz == 0);
}

TEST_CASE("span and canonical form") {
    FieldK f2 = FieldK::with_default_modulus(PrimeField(2), 1);
    KSubspace s = span(f2, 3, {vec({1, 0, 1}), vec({0, 1, 0})});
    CHECK(s.dim() == 2);
    CHECK(span(f2, 3, {vec({0, 0, 0})}) == KSubspace::zero(3));
    CHECK(span(f2, 2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}).dim() == 2);
    CHECK_THROWS_AS(span(f2, 3, {vec({1, 0})}), Error);

    SUBCASE("span of the canonical basis reproduces the subspace") {
        for (uint32_t q : {2u, 3u}) {
            FieldK f = FieldK::with_default_modulus(PrimeField(q), 1);
            for (const KSubspace& sub : enumerate_subspaces(f, 3))
                CHECK(span(f, 3, basis_rows(sub)) == sub);
        }
    }

    SUBCASE("span is invariant under invertible row operations") {
        std::mt19937 rng(7);
        FieldK f3 = FieldK::with_default_modulus(PrimeField(3), 1);
        auto gl2 = enumerate_invertible(f3, 2);
        for (int trial = 0; trial < 50; ++trial) {
            KVec a(3), b(3);
            for (auto& e : a) e = {uint32_t(rng() % 3)};
            for (auto& e : b) e = {uint32_t(rng() % 3)};
            KSubspace s1 = span(f3, 3, {a, b});
            const KMatrix& t = gl2[rng() % gl2.size()];
            KVec a2(3), b2(3);
            for (uint32_t j = 0; j < 3; ++j) {
                a2[j] = f3.add(f3.mul(t.at(0, 0), a[j]), f3.mul(t.at(0, 1), b[j]));
                b2[j] = f3.add(f3.mul(t.at(1, 0), a[j]), f3.mul(t.at(1, 1), b[j]));
            }
            CHECK(span(f3, 3, {a2, b2}) == s1);
            CHECK(span(f3, 3, {b, a}) == s1);
        }
    }
}

TEST_CASE("lattice operations") {
    FieldK f2 = FieldK::with_default_modulus(PrimeField(2), 1);
    KSubspace a = span(f2, 3, {vec({1, 0, 0}), vec({0, 1, 0})});
    KSubspace b = span(f2, 3, {vec({0, 1, 0}), vec({0, 0, 1})});

    CHECK(intersect_space(f2, a, a) == a);
    CHECK(sum_space(f2, a, a) == a);
    CHECK(intersect_space(f2, a, b) == span(f2, 3, {vec({0, 1, 0})}));
    CHECK(sum_space(f2, a, b).dim() == 3);
    CHECK(contains(f2, a, span(f2, 3, {vec({1, 1, 0})})));
    CHECK_FALSE(contains(f2, a, b));
    CHECK_THROWS_AS(sum_space(f2, a, KSubspace::zero(2)), Error);

    SUBCASE("intersection agrees with the point-set oracle") {
        std::mt19937 rng(11);
        for (uint32_t q : {2u, 3u}) {
            FieldK f = FieldK::with_default_modulus(PrimeField(q), 1);
            for (int trial = 0; trial < 100; ++trial) {
                KSubspace x = random_subspace(f, 3, rng);
                KSubspace y = random_subspace(f, 3, rng);
                auto px = point_set(f, x), py = point_set(f, y);
                std::vector<KVec> common;
                std::set_intersection(px.begin(), px.end(), py.begin(), py.end(),
                                      std::back_inserter(common));
                CHECK(intersect_space(f, x, y) == span(f, 3, common));
            }
        }
    }

    SUBCASE("dimension formula on random pairs") {
        std::mt19937 rng(13);
        for (int trial = 0; trial < 200; ++trial) {
            FieldK f = FieldK::with_default_modulus(PrimeField(trial % 2 ? 2 : 3), 1);
            KSubspace x = random_subspace(f, 4, rng);
            KSubspace y = random_subspace(f, 4, rng);
            CHECK(sum_space(f, x, y).dim() + intersect_space(f, x, y).dim() == x.dim() + y.dim());
        }
    }
}

TEST_CASE("point enumeration") {
    FieldK f2 = FieldK::with_default_modulus(PrimeField(2), 1);
    CHECK(enumerate_points(f2, KSubspace::zero(3)) == std::vector<KVec>{vec({0, 0, 0})});

    KSubspace plane = span(f2, 3, {vec({1, 0, 1}), vec({0, 1, 0})});
    auto pts = enumerate_points(f2, plane);
    CHECK(pts.size() == 4);
    std::set<KVec> uniq(pts.begin(), pts.end());
    CHECK(uniq.size() == 4);
    for (const KVec& x : pts)
        for (const KVec& y : pts) {
            KVec s(3);
            for (uint32_t j = 0; j < 3; ++j) s[j] = f2.add(x[j], y[j]);
            CHECK(uniq.count(s) == 1);
        }

    FieldK f3 = FieldK::with_default_modulus(PrimeField(3), 1);
    KSubspace full{2, identity_matrix(2)};
    auto all = enumerate_points(f3, full);
    CHECK(all.size() == 9);
    for (uint64_t i = 0; i < all.size(); ++i) {
        CHECK(point_index(f3, all[i]) == i);
        CHECK(point_from_index(f3, 2, i) == all[i]);
    }
}

TEST_CASE("subspace enumeration matches the q-Pascal oracle") {
    for (uint32_t q : {2u, 3u}) {
        FieldK f = FieldK::with_default_modulus(PrimeField(q), 1);
        for (uint32_t k = 1; k <= 4; ++k) {
            auto all = enumerate_subspaces(f, k);
            std::set<KSubspace, bool (*)(const KSubspace&, const KSubspace&)> uniq(subspace_less);
            uint64_t total = 0;
            for (uint32_t r = 0; r <= k; ++r) {
                auto level = enumerate_subspaces(f, k, r);
                CHECK(level.size() == pascal_gaussian(k, r, q));
                CHECK(level.size() == gaussian_binomial(f, k, r));
                total += level.size();
                for (auto& s : level) {
                    CHECK(s.dim() == r);
                    uniq.insert(s);
                }
            }
            CHECK(all.size() == total);
            CHECK(uniq.size() == total);
        }
    }
    FieldK f2 = FieldK::with_default_modulus(PrimeField(2), 1);
    CHECK(enumerate_subspaces(f2, 2, 1).size() == 3);
    CHECK(enumerate_subspaces(f2, 4, 2).size() == 35);
    CHECK(enumerate_subspaces(f2, 3).size() == 16);
}

TEST_CASE("hyperplanes through a codimension-2 subspace") {
    FieldK f2 = FieldK::with_default_modulus(PrimeField(2), 1);
    KSubspace plane{2, identity_matrix(2)};
    auto lines = hyperplanes_containing(f2, KSubspace::zero(2), plane);
    CHECK(lines.size() == 3);
    CHECK(lines == enumerate_subspaces(f2, 2, 1));

    KSubspace zaxis = span(f2, 3, {vec({0, 0, 1})});
    KSubspace full3{3, identity_matrix(3)};
    auto planes = hyperplanes_containing(f2, zaxis, full3);
    // oracle: filter all dimension-2 subspaces by containment
    std::vector<KSubspace> expect;
    for (const auto& s : enumerate_subspaces(f2, 3, 2))
        if (contains(f2, s, zaxis)) expect.push_back(s);
    CHECK(planes == expect);
    CHECK(planes.size() == 3);

    CHECK_THROWS_AS(hyperplanes_containing(f2, KSubspace::zero(3), full3), Error);

    SUBCASE("count is q+1 and pairwise intersections equal S") {
        for (uint32_t q : {2u, 3u}) {
            FieldK f = FieldK::with_default_modulus(PrimeField(q), 1);
            for (const KSubspace& v : enumerate_subspaces(f, 3)) {
                if (v.dim() < 2) continue;
                for (const KSubspace& s : enumerate_subspaces(f, 3, v.dim() - 2)) {
                    if (!contains(f, v, s)) continue;
                    auto hs = hyperplanes_containing(f, s, v);
                    CHECK(hs.size() == q + 1);
                    for (size_t i = 0; i < hs.size(); ++i) {
                        CHECK(contains(f, v, hs[i]));
                        CHECK(contains(f, hs[i], s));
                        CHECK(hs[i].dim() + 1 == v.dim());
                        for (size_t j = i + 1; j < hs.size(); ++j) {
                            CHECK_FALSE(hs[i] == hs[j]);
                            CHECK(intersect_space(f, hs[i], hs[j]) == s);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("invertible matrix enumeration") {
    FieldK f2 = FieldK::with_default_modulus(PrimeField(2), 1);
    FieldK f3 = FieldK::with_default_modulus(PrimeField(3), 1);
    CHECK(enumerate_invertible(f2, 1).size() == 1);
    auto gl2f2 = enumerate_invertible(f2, 2);
    CHECK(gl2f2.size() == 6);
    auto gl2f3 = enumerate_invertible(f3, 2);
    CHECK(gl2f3.size() == 48);
    CHECK(invertible_count(f2, 2) == (4 - 1) * (4 - 2));
    CHECK(invertible_count(f3, 2) == (9 - 1) * (9 - 3));

    // identity first, every matrix has a two-sided inverse in the list, no
    // duplicates
    CHECK(gl2f2.front() == identity_matrix(2));
    CHECK(gl2f3.front() == identity_matrix(2));
    for (int which = 0; which < 2; ++which) {
        const auto& list = which == 0 ? gl2f2 : gl2f3;
        const FieldK& f = which == 0 ? f2 : f3;
        std::set<std::vector<KElem>> seen;
        for (const KMatrix& m : list) {
            seen.insert(m.e);
            auto inv = invert(f, m);
            REQUIRE(inv.has_value());
            CHECK(mat_mul(f, m, *inv) == identity_matrix(2));
            CHECK(mat_mul(f, *inv, m) == identity_matrix(2));
            CHECK(std::find(list.begin(), list.end(), *inv) != list.end());
        }
        CHECK(seen.size() == list.size());
    }

    CHECK_THROWS_AS(enumerate_invertible(f2, 5), Error);  // ~1e7 matrices
    CHECK_FALSE(invert(f2, KMatrix(2, 2)).has_value());
}
