#pragma once

#include <cstdint>
#include <vector>

#include "addiso/gf_tower.hpp"
#include "addiso/kspace.hpp"

namespace addiso {

using LWord = std::vector<LElem>;

/// Generator matrix of a K-linear code in L^m: k rows, each a word of length
/// m, with the rows K-linearly independent.
class GenMatrix {
  public:
    GenMatrix(FieldL field, uint32_t k, uint32_t m, std::vector<LElem> entries);

    const FieldL& field() const { return field_; }
    uint32_t k() const { return k_; }
    uint32_t m() const { return m_; }
    LElem at(uint32_t r, uint32_t c) const { return e_[size_t(r) * m_ + c]; }
    const std::vector<LElem>& entries() const { return e_; }
    LWord row(uint32_t r) const { return LWord(e_.begin() + size_t(r) * m_, e_.begin() + size_t(r + 1) * m_); }
    LWord column(uint32_t c) const;

    friend bool operator==(const GenMatrix& a, const GenMatrix& b) {
        return a.field_ == b.field_ && a.k_ == b.k_ && a.m_ == b.m_ && a.e_ == b.e_;
    }

  private:
    FieldL field_;
    uint32_t k_, m_;
    std::vector<LElem> e_;
};

struct SpaceTuple {
    uint32_t ambient = 0;
    std::vector<KSubspace> spaces;

    friend bool operator==(const SpaceTuple&, const SpaceTuple&) = default;
};

/// K-span of the n basis components of a column of L^k.
KSubspace column_space(const FieldL& field, const LWord& col);

/// Same space computed through the dual map: the image of b |-> M b, where M
/// is the matrix of the coordinate map u |-> column . u.
KSubspace column_space_dual(const FieldL& field, const LWord& col);

/// Matrix M in K^(k x n) with lambda(u) = M^T u for the column's coordinate map.
KMatrix column_map_matrix(const FieldL& field, const LWord& col);

SpaceTuple space_tuple(const GenMatrix& a);

/// Multiset equality of the two tuples' canonical subspaces.
bool tuples_equivalent(const SpaceTuple& a, const SpaceTuple& b);

KVec flatten_word(const FieldL& field, const LWord& w);
LWord unflatten_word(const FieldL& field, const KVec& v);

/// All q^k codewords A^T u, ordered by the point index of u.
std::vector<LWord> codewords(const GenMatrix& a);
LWord codeword_at(const GenMatrix& a, uint64_t u_index);

uint32_t weight(const FieldL& field, const LWord& w);
std::vector<uint64_t> weight_distribution(const GenMatrix& a);

/// dim_K C == dim_K (V_1 + ... + V_m), both sides computed independently.
bool check_dim_sum(const GenMatrix& a);

}  // namespace addiso
