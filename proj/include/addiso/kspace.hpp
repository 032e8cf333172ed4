#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "addiso/gf_tower.hpp"

namespace addiso {

using KVec = std::vector<KElem>;

struct KMatrix {
    uint32_t rows = 0, cols = 0;
    std::vector<KElem> e;  // row-major

    KMatrix() = default;
    KMatrix(uint32_t r, uint32_t c) : rows(r), cols(c), e(size_t(r) * c) {}

    KElem& at(uint32_t r, uint32_t c) { return e[size_t(r) * cols + c]; }
    KElem at(uint32_t r, uint32_t c) const { return e[size_t(r) * cols + c]; }
    KVec row(uint32_t r) const { return KVec(e.begin() + size_t(r) * cols, e.begin() + size_t(r + 1) * cols); }

    friend bool operator==(const KMatrix&, const KMatrix&) = default;
};

/// A subspace of K^ambient in canonical form: the basis is the unique reduced
/// row echelon basis with no zero rows, so equality is structural.
struct KSubspace {
    uint32_t ambient = 0;
    KMatrix basis;  // dim x ambient, RREF

    uint32_t dim() const { return basis.rows; }
    static KSubspace zero(uint32_t ambient) { return {ambient, KMatrix(0, ambient)}; }

    friend bool operator==(const KSubspace&, const KSubspace&) = default;
};

// Deterministic total orders used for canonical sorting.
bool vec_less(const KVec& a, const KVec& b);
bool matrix_less(const KMatrix& a, const KMatrix& b);
bool subspace_less(const KSubspace& a, const KSubspace& b);

std::pair<KMatrix, uint32_t> rref(const FieldK& f, KMatrix m);
uint32_t rank(const FieldK& f, const KMatrix& m);

KSubspace span(const FieldK& f, uint32_t ambient, const std::vector<KVec>& vectors);
std::vector<KVec> basis_rows(const KSubspace& s);

KSubspace sum_space(const FieldK& f, const KSubspace& a, const KSubspace& b);
KSubspace intersect_space(const FieldK& f, const KSubspace& a, const KSubspace& b);
bool contains(const FieldK& f, const KSubspace& outer, const KSubspace& inner);

/// All points of the subspace; for the full space the position of a point in
/// this sequence equals point_index().
std::vector<KVec> enumerate_points(const FieldK& f, const KSubspace& s);
uint64_t point_index(const FieldK& f, const KVec& v);
KVec point_from_index(const FieldK& f, uint32_t ambient, uint64_t index);

/// Number of r-dimensional subspaces of a k-dimensional space over K.
uint64_t gaussian_binomial(const FieldK& f, uint32_t k, uint32_t r);

std::vector<KSubspace> enumerate_subspaces(const FieldK& f, uint32_t ambient,
                                           std::optional<uint32_t> dim_filter = std::nullopt);

/// The q+1 hyperplanes of V through S, where S has codimension 2 in V.
std::vector<KSubspace> hyperplanes_containing(const FieldK& f, const KSubspace& s, const KSubspace& v);

uint64_t invertible_count(const FieldK& f, uint32_t n);
std::vector<KMatrix> enumerate_invertible(const FieldK& f, uint32_t n);

KMatrix identity_matrix(uint32_t n);
KMatrix transpose(const KMatrix& m);
KMatrix mat_mul(const FieldK& f, const KMatrix& a, const KMatrix& b);
KVec mat_vec(const FieldK& f, const KMatrix& m, const KVec& v);
std::optional<KMatrix> invert(const FieldK& f, const KMatrix& m);

}  // namespace addiso
