#pragma once

#include <cstdint>
#include <vector>

#include "addiso/codes.hpp"
#include "addiso/kspace.hpp"

namespace addiso {

/// The function q^k * sum_i |V_i|^(-1) 1_{V_i} on K^k, tabulated exactly as
/// integers; the scaling clears every denominator since |V_i| divides q^k.
struct IndicatorTable {
    uint32_t ambient = 0;
    uint64_t q = 0;
    std::vector<uint64_t> values;  // indexed by point index

    friend bool operator==(const IndicatorTable&, const IndicatorTable&) = default;
};

IndicatorTable indicator_table(const FieldK& f, const SpaceTuple& t);

struct SolutionPair {
    SpaceTuple u_tuple;
    SpaceTuple v_tuple;

    friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

enum class PairClass { NotSolution, Trivial, Nontrivial };

PairClass classify_pair(const FieldK& f, const SolutionPair& p);

/// The nontrivial solution attached to a codimension-2 pair S < V: one side
/// is V repeated q times plus S, the other the q+1 hyperplanes of V through S.
SolutionPair family_solution(const FieldK& f, const KSubspace& v, const KSubspace& s);

struct CoveringBound {
    bool holds = false;
    uint64_t multisets_checked = 0;
};

/// No multiset of at most q proper subspaces covers K^k; verified exhaustively
/// over hyperplane multisets (a cover by proper subspaces refines to one).
CoveringBound check_covering_bound(const FieldK& f, uint32_t k);

struct MinCovering {
    std::vector<KSubspace> members;  // the q+1 hyperplanes, sorted
    KSubspace common;                // their common codimension-2 intersection
};

/// All multisets of q+1 proper subspaces of V whose union is V; verifies each
/// is the bundle of hyperplanes through a codimension-2 subspace.
std::vector<MinCovering> classify_min_coverings(const FieldK& f, const KSubspace& v);

/// All nontrivial solutions among pairs of length-m space multisets in K^k.
/// With the dimension hypothesis, pairs are filtered to max dim V > max dim U
/// and (for m = q+1) verified to be family instances.
std::vector<SolutionPair> search_nontrivial(const FieldK& f, uint32_t k, uint32_t m,
                                            bool dim_hypothesis);

}  // namespace addiso
