#include "addiso/isometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace addiso {

namespace {

constexpr uint64_t kMaxDirectWords = uint64_t{1} << 20;
constexpr uint32_t kMaxBruteLength = 6;
constexpr uint64_t kMaxBruteGL = 10'000;

// Solution set of X^T z = y for z in K^n, described by a particular solution
// and the kernel of X^T; shared by every row of the matrix equation G X = Y.
struct RowSystem {
    KMatrix red;                  // rref of [X^T | Y^T]
    uint32_t rank = 0;
    std::vector<uint32_t> pivots;  // pivot columns of X^T
    std::vector<uint32_t> free_cols;
    uint32_t n = 0, k = 0, rows_y = 0;
};

RowSystem build_row_system(const FieldK& f, const KMatrix& x, const KMatrix& y) {
    // x, y: n x k. Augment X^T (k x n) with Y^T (k x n_rows_of_y).
    RowSystem sys;
    sys.n = x.rows;
    sys.k = x.cols;
    sys.rows_y = y.rows;
    KMatrix aug(sys.k, sys.n + sys.rows_y);
    for (uint32_t i = 0; i < sys.k; ++i) {
        for (uint32_t j = 0; j < sys.n; ++j) aug.at(i, j) = x.at(j, i);
        for (uint32_t r = 0; r < sys.rows_y; ++r) aug.at(i, sys.n + r) = y.at(r, i);
    }
    auto [red, rank] = rref(f, std::move(aug));
    // pivots within the left block only; a pivot in the augmented block marks
    // an inconsistent row, detected per target column later
    sys.red = std::move(red);
    sys.rank = 0;
    std::vector<bool> is_pivot(sys.n, false);
    for (uint32_t i = 0; i < rank; ++i) {
        uint32_t c = 0;
        while (c < sys.n + sys.rows_y && f.is_zero(sys.red.at(i, c))) ++c;
        if (c < sys.n) {
            is_pivot[c] = true;
            sys.pivots.push_back(c);
            ++sys.rank;
        }
    }
    for (uint32_t j = 0; j < sys.n; ++j)
        if (!is_pivot[j]) sys.free_cols.push_back(j);
    return sys;
}

// All solutions z of X^T z = (column r of the augmented block), sorted
// ascending; empty when inconsistent.
std::vector<KVec> row_solutions_sorted(const FieldK& f, const RowSystem& sys, uint32_t r) {
    // consistency: rows of the rref whose left block is zero must have a zero
    // entry in the target column
    for (uint32_t i = sys.rank; i < sys.red.rows; ++i) {
        bool left_zero = true;
        for (uint32_t j = 0; j < sys.n && left_zero; ++j) left_zero = f.is_zero(sys.red.at(i, j));
        if (left_zero && !f.is_zero(sys.red.at(i, sys.n + r))) return {};
    }
    KVec particular(sys.n, f.zero());
    for (uint32_t i = 0; i < sys.rank; ++i) particular[sys.pivots[i]] = sys.red.at(i, sys.n + r);

    // kernel basis: one vector per free column
    std::vector<KVec> kernel;
    for (uint32_t j : sys.free_cols) {
        KVec z(sys.n, f.zero());
        z[j] = f.one();
        for (uint32_t i = 0; i < sys.rank; ++i) z[sys.pivots[i]] = f.neg(sys.red.at(i, j));
        kernel.push_back(std::move(z));
    }

    uint64_t combos = 1;
    for (size_t i = 0; i < kernel.size(); ++i) {
        if (combos > (uint64_t{1} << 20) / f.size())
            fail(Errc::TooLarge, "solution space too large to enumerate");
        combos *= f.size();
    }
    std::vector<KVec> out;
    out.reserve(combos);
    for (uint64_t t = 0; t < combos; ++t) {
        KVec z = particular;
        uint64_t v = t;
        for (const KVec& kb : kernel) {
            KElem c{uint32_t(v % f.size())};
            v /= f.size();
            if (f.is_zero(c)) continue;
            for (uint32_t j = 0; j < sys.n; ++j) z[j] = f.add(z[j], f.mul(c, kb[j]));
        }
        out.push_back(std::move(z));
    }
    std::sort(out.begin(), out.end(), vec_less);
    return out;
}

// Least invertible G (rows compared in point-index order, top row most
// significant) with G X = Y; X, Y are n x k.
std::optional<KMatrix> least_invertible_solution(const FieldK& f, const KMatrix& x, const KMatrix& y) {
    uint32_t n = x.rows;
    RowSystem sys = build_row_system(f, x, y);
    std::vector<std::vector<KVec>> cands(n);
    for (uint32_t r = 0; r < n; ++r) {
        cands[r] = row_solutions_sorted(f, sys, r);
        if (cands[r].empty()) return std::nullopt;
    }

    KMatrix g(n, n);
    std::vector<KVec> echelon;
    auto independent = [&](const KVec& v) {
        KVec red = v;
        for (const KVec& row : echelon) {
            uint32_t p = 0;
            while (p < n && f.is_zero(row[p])) ++p;
            if (p < n && !f.is_zero(red[p])) {
                KElem c = red[p];
                for (uint32_t j = 0; j < n; ++j) red[j] = f.sub(red[j], f.mul(c, row[j]));
            }
        }
        if (std::all_of(red.begin(), red.end(), [&](KElem e) { return f.is_zero(e); })) return std::make_pair(false, KVec{});
        uint32_t p = 0;
        while (f.is_zero(red[p])) ++p;
        KElem s = f.inv(red[p]);
        for (uint32_t j = 0; j < n; ++j) red[j] = f.mul(s, red[j]);
        return std::make_pair(true, std::move(red));
    };

    auto rec = [&](auto&& self, uint32_t depth) -> bool {
        if (depth == n) return true;
        for (const KVec& cand : cands[depth]) {
            auto [ok, red] = independent(cand);
            if (!ok) continue;
            echelon.push_back(std::move(red));
            for (uint32_t j = 0; j < n; ++j) g.at(depth, j) = cand[j];
            if (self(self, depth + 1)) return true;
            echelon.pop_back();
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return g;
}

}  // namespace

LWord CodeMap::image_column(uint32_t c) const {
    LWord col(source.k());
    for (uint32_t r = 0; r < source.k(); ++r) col[r] = image_at(r, c);
    return col;
}

SpaceTuple CodeMap::image_tuple() const {
    SpaceTuple t;
    t.ambient = source.k();
    for (uint32_t c = 0; c < source.m(); ++c)
        t.spaces.push_back(column_space(source.field(), image_column(c)));
    return t;
}

LWord CodeMap::image_word_at(uint64_t u_index) const {
    const FieldL& field = source.field();
    const FieldK& kf = field.subfield();
    LWord w(source.m(), field.zero());
    for (uint32_t r = 0; r < source.k(); ++r) {
        KElem ur{uint32_t(u_index % kf.size())};
        u_index /= kf.size();
        if (kf.is_zero(ur)) continue;
        for (uint32_t c = 0; c < source.m(); ++c)
            w[c] = field.add(w[c], field.scalar_mul(ur, image_at(r, c)));
    }
    return w;
}

CodeMap make_code_map(GenMatrix source, std::vector<LElem> image) {
    if (image.size() != size_t(source.k()) * source.m())
        fail(Errc::DimensionMismatch, "image entry count does not match k x m");
    for (LElem x : image)
        if (x.v >= source.field().size()) fail(Errc::DimensionMismatch, "image entry out of range");
    return CodeMap{std::move(source), std::move(image)};
}

MonomialMap identity_monomial(const FieldL& field, uint32_t m) {
    MonomialMap h;
    h.perm.resize(m);
    std::iota(h.perm.begin(), h.perm.end(), 0u);
    h.maps.assign(m, identity_matrix(field.degree()));
    return h;
}

LWord apply_monomial(const FieldL& field, const MonomialMap& h, const LWord& x) {
    if (h.perm.size() != x.size() || h.maps.size() != x.size())
        fail(Errc::DimensionMismatch, "monomial map length mismatch");
    const FieldK& kf = field.subfield();
    LWord out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        auto cs = field.coords(x[h.perm[i]]);
        KVec moved = mat_vec(kf, h.maps[i], cs);
        out[i] = field.from_coords(moved);
    }
    return out;
}

bool is_isometry_direct(const CodeMap& f) {
    const FieldL& field = f.source.field();
    uint64_t q = field.subfield().size();
    uint64_t total = 1;
    for (uint32_t i = 0; i < f.source.k(); ++i) {
        total *= q;
        if (total > kMaxDirectWords) fail(Errc::TooLarge, "too many codewords for the direct check");
    }
    for (uint64_t u = 0; u < total; ++u)
        if (weight(field, codeword_at(f.source, u)) != weight(field, f.image_word_at(u))) return false;
    return true;
}

bool is_isometry_criterion(const CodeMap& f) {
    const FieldK& kf = f.source.field().subfield();
    return indicator_table(kf, space_tuple(f.source)) == indicator_table(kf, f.image_tuple());
}

bool is_extendible_tuples(const CodeMap& f) {
    return tuples_equivalent(space_tuple(f.source), f.image_tuple());
}

std::optional<MonomialMap> is_extendible_bruteforce(const CodeMap& f) {
    const FieldL& field = f.source.field();
    const FieldK& kf = field.subfield();
    uint32_t m = f.source.m(), n = field.degree();
    if (m > kMaxBruteLength) fail(Errc::TooLarge, "code length too large for the brute-force search");
    if (invertible_count(kf, n) > kMaxBruteGL)
        fail(Errc::TooLarge, "automorphism group too large for the brute-force search");

    std::vector<KMatrix> lambda_t(m), mu_t(m);  // transposed column maps, n x k
    for (uint32_t i = 0; i < m; ++i) {
        lambda_t[i] = transpose(column_map_matrix(field, f.source.column(i)));
        mu_t[i] = transpose(column_map_matrix(field, f.image_column(i)));
    }

    std::vector<uint32_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        MonomialMap h;
        h.perm = perm;
        bool ok = true;
        for (uint32_t i = 0; i < m && ok; ++i) {
            auto g = least_invertible_solution(kf, lambda_t[perm[i]], mu_t[i]);
            if (!g)
                ok = false;
            else
                h.maps.push_back(std::move(*g));
        }
        if (!ok) continue;
        for (uint32_t r = 0; r < f.source.k(); ++r)
            if (apply_monomial(field, h, f.source.row(r)) != f.image_row(r))
                fail(Errc::Verification, "internal: witness fails on a generator");
        return h;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::optional<KMatrix> factor_through_aut(const FieldK& f, const KMatrix& sigma, const KMatrix& tau) {
    if (sigma.rows != tau.rows || sigma.cols != tau.cols)
        fail(Errc::DimensionMismatch, "map matrices have different shapes");
    return least_invertible_solution(f, transpose(tau), transpose(sigma));
}

}  // namespace addiso
