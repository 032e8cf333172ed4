#include "addiso/codes.hpp"

#include <algorithm>
#include <string>

namespace addiso {

namespace {

constexpr uint64_t kMaxWords = uint64_t{1} << 20;

}  // namespace

GenMatrix::GenMatrix(FieldL field, uint32_t k, uint32_t m, std::vector<LElem> entries)
    : field_(std::move(field)), k_(k), m_(m), e_(std::move(entries)) {
    if (m_ == 0) fail(Errc::DimensionMismatch, "code length must be positive");
    if (e_.size() != size_t(k_) * m_) fail(Errc::DimensionMismatch, "generator entry count does not match k x m");
    for (LElem x : e_)
        if (x.v >= field_.size()) fail(Errc::DimensionMismatch, "generator entry out of range");
    // rows must be K-independent: flatten into K^(n m) and check the rank
    const FieldK& kf = field_.subfield();
    uint32_t n = field_.degree();
    KMatrix flat(k_, n * m_);
    for (uint32_t r = 0; r < k_; ++r)
        for (uint32_t c = 0; c < m_; ++c) {
            auto cs = field_.coords(at(r, c));
            for (uint32_t j = 0; j < n; ++j) flat.at(r, c * n + j) = cs[j];
        }
    if (rank(kf, flat) != k_) fail(Errc::DependentRows, "generator rows are K-linearly dependent");
}

LWord GenMatrix::column(uint32_t c) const {
    LWord col(k_);
    for (uint32_t r = 0; r < k_; ++r) col[r] = at(r, c);
    return col;
}

KSubspace column_space(const FieldL& field, const LWord& col) {
    const FieldK& kf = field.subfield();
    uint32_t k = uint32_t(col.size()), n = field.degree();
    // component j of the expansion: the vector of j-th coordinates
    std::vector<KVec> comps(n, KVec(k));
    for (uint32_t r = 0; r < k; ++r) {
        auto cs = field.coords(col[r]);
        for (uint32_t j = 0; j < n; ++j) comps[j][r] = cs[j];
    }
    return span(kf, k, comps);
}

KMatrix column_map_matrix(const FieldL& field, const LWord& col) {
    const FieldK& kf = field.subfield();
    uint32_t k = uint32_t(col.size()), n = field.degree();
    KMatrix m(k, n);
    // row r of M holds the coordinates of lambda(e_r) = col_r, evaluated
    // through the field arithmetic
    for (uint32_t r = 0; r < k; ++r) {
        LElem val = field.zero();
        for (uint32_t s = 0; s < k; ++s) {
            KElem u = (s == r) ? kf.one() : kf.zero();
            val = field.add(val, field.scalar_mul(u, col[s]));
        }
        auto cs = field.coords(val);
        for (uint32_t j = 0; j < n; ++j) m.at(r, j) = cs[j];
    }
    return m;
}

KSubspace column_space_dual(const FieldL& field, const LWord& col) {
    const FieldK& kf = field.subfield();
    uint32_t k = uint32_t(col.size()), n = field.degree();
    KMatrix m = column_map_matrix(field, col);
    // image of b |-> M b: apply M to the coordinate images of the basis of L
    std::vector<KVec> images;
    images.reserve(n);
    for (uint32_t j = 0; j < n; ++j) {
        KVec b(n, kf.zero());
        b[j] = kf.one();
        images.push_back(mat_vec(kf, m, b));
    }
    return span(kf, k, images);
}

SpaceTuple space_tuple(const GenMatrix& a) {
    SpaceTuple t;
    t.ambient = a.k();
    t.spaces.reserve(a.m());
    for (uint32_t c = 0; c < a.m(); ++c) t.spaces.push_back(column_space(a.field(), a.column(c)));
    return t;
}

bool tuples_equivalent(const SpaceTuple& a, const SpaceTuple& b) {
    if (a.ambient != b.ambient || a.spaces.size() != b.spaces.size()) return false;
    auto sa = a.spaces, sb = b.spaces;
    std::sort(sa.begin(), sa.end(), subspace_less);
    std::sort(sb.begin(), sb.end(), subspace_less);
    return sa == sb;
}

KVec flatten_word(const FieldL& field, const LWord& w) {
    uint32_t n = field.degree();
    KVec v(w.size() * n);
    for (size_t c = 0; c < w.size(); ++c) {
        auto cs = field.coords(w[c]);
        for (uint32_t j = 0; j < n; ++j) v[c * n + j] = cs[j];
    }
    return v;
}

LWord unflatten_word(const FieldL& field, const KVec& v) {
    uint32_t n = field.degree();
    if (v.size() % n != 0) fail(Errc::DimensionMismatch, "flattened word length not divisible by the degree");
    LWord w(v.size() / n);
    for (size_t c = 0; c < w.size(); ++c)
        w[c] = field.from_coords(std::span<const KElem>(v).subspan(c * n, n));
    return w;
}

LWord codeword_at(const GenMatrix& a, uint64_t u_index) {
    const FieldL& field = a.field();
    const FieldK& kf = field.subfield();
    LWord w(a.m(), field.zero());
    for (uint32_t r = 0; r < a.k(); ++r) {
        KElem ur{uint32_t(u_index % kf.size())};
        u_index /= kf.size();
        if (kf.is_zero(ur)) continue;
        for (uint32_t c = 0; c < a.m(); ++c)
            w[c] = field.add(w[c], field.scalar_mul(ur, a.at(r, c)));
    }
    return w;
}

std::vector<LWord> codewords(const GenMatrix& a) {
    uint64_t q = a.field().subfield().size();
    uint64_t total = 1;
    for (uint32_t i = 0; i < a.k(); ++i) {
        total *= q;
        if (total > kMaxWords) fail(Errc::TooLarge, "too many codewords to enumerate");
    }
    std::vector<LWord> words;
    words.reserve(total);
    for (uint64_t u = 0; u < total; ++u) words.push_back(codeword_at(a, u));
    return words;
}

uint32_t weight(const FieldL& field, const LWord& w) {
    uint32_t wt = 0;
    for (LElem x : w)
        if (!field.is_zero(x)) ++wt;
    return wt;
}

std::vector<uint64_t> weight_distribution(const GenMatrix& a) {
    std::vector<uint64_t> dist(a.m() + 1, 0);
    for (const LWord& w : codewords(a)) ++dist[weight(a.field(), w)];
    return dist;
}

bool check_dim_sum(const GenMatrix& a) {
    const FieldK& kf = a.field().subfield();
    uint32_t n = a.field().degree();
    KMatrix flat(a.k(), n * a.m());
    for (uint32_t r = 0; r < a.k(); ++r)
        for (uint32_t c = 0; c < a.m(); ++c) {
            auto cs = a.field().coords(a.at(r, c));
            for (uint32_t j = 0; j < n; ++j) flat.at(r, c * n + j) = cs[j];
        }
    uint32_t code_dim = rank(kf, flat);

    SpaceTuple t = space_tuple(a);
    KSubspace total = KSubspace::zero(a.k());
    for (const KSubspace& s : t.spaces) total = sum_space(kf, total, s);
    return code_dim == total.dim();
}

}  // namespace addiso
