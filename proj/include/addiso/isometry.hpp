#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "addiso/codes.hpp"
#include "addiso/solutions.hpp"

namespace addiso {

/// A K-linear map between codes, given by the images of the generators: the
/// i-th row of the source generator matrix maps to the i-th image row.
struct CodeMap {
    GenMatrix source;
    std::vector<LElem> image;  // k x m, row-major

    LElem image_at(uint32_t r, uint32_t c) const { return image[size_t(r) * source.m() + c]; }
    LWord image_row(uint32_t r) const {
        return LWord(image.begin() + size_t(r) * source.m(), image.begin() + size_t(r + 1) * source.m());
    }
    LWord image_column(uint32_t c) const;
    SpaceTuple image_tuple() const;
    LWord image_word_at(uint64_t u_index) const;

    friend bool operator==(const CodeMap&, const CodeMap&) = default;
};

CodeMap make_code_map(GenMatrix source, std::vector<LElem> image);

/// Permutation plus per-coordinate K-automorphisms of L: coordinate i of the
/// output is maps[i] applied to coordinate perm[i] of the input.
struct MonomialMap {
    std::vector<uint32_t> perm;   // 0-based
    std::vector<KMatrix> maps;    // n x n invertible over K

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

MonomialMap identity_monomial(const FieldL& field, uint32_t m);
LWord apply_monomial(const FieldL& field, const MonomialMap& h, const LWord& x);

/// Weight comparison of matching codewords over all of K^k.
bool is_isometry_direct(const CodeMap& f);

/// Equality of the two exact indicator tables (the scaled sides of the
/// indicator-sum identity).
bool is_isometry_criterion(const CodeMap& f);

/// Multiset equality of the two space tuples.
bool is_extendible_tuples(const CodeMap& f);

/// Constraint-driven search for a monomial map restricting to f: permutations
/// in lexicographic order, then for each coordinate the least invertible
/// solution of g * lambda_perm(i) = mu_i. Returns the first witness found.
std::optional<MonomialMap> is_extendible_bruteforce(const CodeMap& f);

/// Least invertible g with sigma = g . tau, where sigma, tau are k x n
/// matrices of maps U -> L; absent iff the dual images (column spans) differ.
std::optional<KMatrix> factor_through_aut(const FieldK& f, const KMatrix& sigma, const KMatrix& tau);

}  // namespace addiso
