#include "addiso/solutions.hpp"

#include <algorithm>
#include <string>

namespace addiso {

namespace {

constexpr uint64_t kMaxTablePoints = uint64_t{1} << 20;
constexpr uint64_t kMaxTuples = 1'000'000;

uint64_t pow_checked(uint64_t base, uint32_t exp, uint64_t cap, const char* what) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) fail(Errc::TooLarge, what);
        r *= base;
    }
    return r;
}

// number of multisets of size m over t items, capped
uint64_t multiset_count(uint64_t t, uint32_t m, uint64_t cap) {
    unsigned __int128 num = 1, den = 1;
    for (uint32_t i = 0; i < m; ++i) {
        num *= (t + m - 1 - i);
        den *= (i + 1);
        if (num / den > cap) fail(Errc::TooLarge, "tuple enumeration too large");
    }
    return uint64_t(num / den);
}

uint32_t max_dim(const SpaceTuple& t) {
    uint32_t d = 0;
    for (const auto& s : t.spaces) d = std::max(d, s.dim());
    return d;
}

std::vector<KSubspace> sorted_spaces(const SpaceTuple& t) {
    auto s = t.spaces;
    std::sort(s.begin(), s.end(), subspace_less);
    return s;
}

}  // namespace

IndicatorTable indicator_table(const FieldK& f, const SpaceTuple& t) {
    uint64_t total = pow_checked(f.size(), t.ambient, kMaxTablePoints, "indicator table too large");
    IndicatorTable tab;
    tab.ambient = t.ambient;
    tab.q = f.size();
    tab.values.assign(total, 0);
    for (const KSubspace& s : t.spaces) {
        uint64_t w = pow_checked(f.size(), t.ambient - s.dim(), UINT64_MAX, "weight overflow");
        for (const KVec& p : enumerate_points(f, s)) tab.values[point_index(f, p)] += w;
    }
    return tab;
}

PairClass classify_pair(const FieldK& f, const SolutionPair& p) {
    if (indicator_table(f, p.u_tuple) != indicator_table(f, p.v_tuple)) return PairClass::NotSolution;
    return tuples_equivalent(p.u_tuple, p.v_tuple) ? PairClass::Trivial : PairClass::Nontrivial;
}

SolutionPair family_solution(const FieldK& f, const KSubspace& v, const KSubspace& s) {
    if (v.dim() < 2 || s.dim() + 2 != v.dim() || !contains(f, v, s))
        fail(Errc::BadCodimension, "S must be a codimension-2 subspace of V");
    SolutionPair p;
    p.v_tuple.ambient = v.ambient;
    for (uint64_t i = 0; i < f.size(); ++i) p.v_tuple.spaces.push_back(v);
    p.v_tuple.spaces.push_back(s);
    p.u_tuple.ambient = v.ambient;
    p.u_tuple.spaces = hyperplanes_containing(f, s, v);
    return p;
}

CoveringBound check_covering_bound(const FieldK& f, uint32_t k) {
    if (k < 1) fail(Errc::DimensionMismatch, "the covered space must be nonzero");
    uint64_t q = f.size();
    uint64_t points = pow_checked(q, k, kMaxTablePoints, "space too large");
    auto hyperplanes = enumerate_subspaces(f, k, k - 1);

    // point-index sets of the hyperplanes
    std::vector<std::vector<uint64_t>> pts;
    pts.reserve(hyperplanes.size());
    for (const auto& h : hyperplanes) {
        std::vector<uint64_t> v;
        for (const KVec& p : enumerate_points(f, h)) v.push_back(point_index(f, p));
        pts.push_back(std::move(v));
    }

    CoveringBound result;
    result.holds = true;
    std::vector<uint32_t> pick;
    std::vector<uint32_t> hits(points, 0);

    auto covers = [&]() {
        std::fill(hits.begin(), hits.end(), 0);
        for (uint32_t i : pick)
            for (uint64_t p : pts[i]) hits[p] = 1;
        for (uint32_t h : hits)
            if (!h) return false;
        return true;
    };

    // all multisets of 1..q hyperplanes
    auto rec = [&](auto&& self, uint32_t start) -> void {
        if (!pick.empty()) {
            ++result.multisets_checked;
            if (covers()) result.holds = false;
        }
        if (pick.size() == q) return;
        for (uint32_t i = start; i < hyperplanes.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return result;
}

std::vector<MinCovering> classify_min_coverings(const FieldK& f, const KSubspace& v) {
    if (v.dim() < 2) fail(Errc::BadCodimension, "V must have dimension >= 2");
    uint64_t q = f.size();

    // proper subspaces of V, as subspaces of the ambient space
    std::vector<KSubspace> propers;
    for (uint32_t d = 0; d < v.dim(); ++d)
        for (const auto& w : enumerate_subspaces(f, v.ambient, d))
            if (contains(f, v, w)) propers.push_back(w);

    std::vector<std::vector<uint64_t>> pts;
    pts.reserve(propers.size());
    for (const auto& w : propers) {
        std::vector<uint64_t> ps;
        for (const KVec& p : enumerate_points(f, w)) ps.push_back(point_index(f, p));
        pts.push_back(std::move(ps));
    }
    uint64_t v_points = pow_checked(q, v.dim(), kMaxTablePoints, "space too large");
    multiset_count(propers.size(), uint32_t(q + 1), kMaxTuples);

    std::vector<MinCovering> found;
    std::vector<uint32_t> pick;
    std::vector<uint64_t> marked;

    auto rec = [&](auto&& self, uint32_t start) -> void {
        if (pick.size() == q + 1) {
            marked.clear();
            for (uint32_t i : pick)
                for (uint64_t p : pts[i]) marked.push_back(p);
            std::sort(marked.begin(), marked.end());
            marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
            if (marked.size() != v_points) return;

            MinCovering cov;
            for (uint32_t i : pick) cov.members.push_back(propers[i]);
            // a minimum covering must be the hyperplane bundle through a
            // codimension-2 subspace
            for (size_t i = 1; i < cov.members.size(); ++i)
                if (cov.members[i] == cov.members[i - 1])
                    fail(Errc::Verification, "covering with a repeated member found");
            for (const auto& m : cov.members)
                if (m.dim() + 1 != v.dim())
                    fail(Errc::Verification, "covering member is not a hyperplane of V");
            cov.common = intersect_space(f, cov.members[0], cov.members[1]);
            for (size_t i = 2; i < cov.members.size(); ++i)
                cov.common = intersect_space(f, cov.common, cov.members[i]);
            if (cov.common.dim() + 2 != v.dim())
                fail(Errc::Verification, "covering members do not share a codimension-2 subspace");
            auto bundle = hyperplanes_containing(f, cov.common, v);
            if (bundle != cov.members)
                fail(Errc::Verification, "covering is not the full hyperplane bundle through S");
            found.push_back(std::move(cov));
            return;
        }
        for (uint32_t i = start; i < propers.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return found;
}

std::vector<SolutionPair> search_nontrivial(const FieldK& f, uint32_t k, uint32_t m,
                                            bool dim_hypothesis) {
    uint64_t q = f.size();
    auto all = enumerate_subspaces(f, k);
    multiset_count(all.size(), m, kMaxTuples);

    // enumerate multisets (non-decreasing index tuples); each represents one
    // tuple up to equivalence
    std::vector<SpaceTuple> tuples;
    std::vector<uint32_t> pick;
    auto rec = [&](auto&& self, uint32_t start) -> void {
        if (pick.size() == m) {
            SpaceTuple t;
            t.ambient = k;
            for (uint32_t i : pick) t.spaces.push_back(all[i]);
            tuples.push_back(std::move(t));
            return;
        }
        for (uint32_t i = start; i < all.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<IndicatorTable> tables;
    tables.reserve(tuples.size());
    for (const auto& t : tuples) tables.push_back(indicator_table(f, t));

    std::vector<SolutionPair> out;
    for (size_t i = 0; i < tuples.size(); ++i)
        for (size_t j = i + 1; j < tuples.size(); ++j) {
            if (tables[i] != tables[j]) continue;
            // distinct multisets with equal tables: a nontrivial solution;
            // orient so the V side carries the larger maximal dimension
            SolutionPair p;
            if (max_dim(tuples[j]) >= max_dim(tuples[i])) {
                p.u_tuple = tuples[i];
                p.v_tuple = tuples[j];
            } else {
                p.u_tuple = tuples[j];
                p.v_tuple = tuples[i];
            }
            if (dim_hypothesis && max_dim(p.v_tuple) <= max_dim(p.u_tuple)) continue;
            out.push_back(std::move(p));
        }

    if (m <= q && !out.empty())
        fail(Errc::Verification, "nontrivial solution found at m <= q");

    if (dim_hypothesis && m == q + 1) {
        // every pair must be a family instance: V repeated q times plus a
        // codimension-2 S against the hyperplane bundle
        for (const auto& p : out) {
            auto vs = sorted_spaces(p.v_tuple);
            const KSubspace& top = vs.back();
            uint64_t reps = 0;
            for (const auto& s : vs)
                if (s == top) ++reps;
            if (reps != q) fail(Errc::Verification, "dimension-hypothesis pair is not a family instance");
            const KSubspace& small = vs.front();
            if (small.dim() + 2 != top.dim() || !contains(f, top, small))
                fail(Errc::Verification, "dimension-hypothesis pair is not a family instance");
            SolutionPair expect = family_solution(f, top, small);
            if (!tuples_equivalent(expect.u_tuple, p.u_tuple) ||
                !tuples_equivalent(expect.v_tuple, p.v_tuple))
                fail(Errc::Verification, "dimension-hypothesis pair is not a family instance");
        }
    }
    return out;
}

}  // namespace addiso
