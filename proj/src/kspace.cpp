#include "addiso/kspace.hpp"

#include <algorithm>
#include <string>

namespace addiso {

namespace {

constexpr uint64_t kMaxPoints = uint64_t{1} << 20;
constexpr uint64_t kMaxSubspaces = 10'000'000;
constexpr uint64_t kMaxInvertible = 1'000'000;

void check_same_ambient(const KSubspace& a, const KSubspace& b) {
    if (a.ambient != b.ambient) fail(Errc::DimensionMismatch, "subspaces live in different ambient spaces");
}

uint64_t pow_checked(uint64_t base, uint32_t exp, uint64_t cap, const char* what) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) fail(Errc::TooLarge, what);
        r *= base;
    }
    return r;
}

}  // namespace

// Vectors compare in point-index order: the low coordinate is least
// significant, matching the element enumeration convention.
bool vec_less(const KVec& a, const KVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

// Matrices compare row by row, each row in point-index order. The identity is
// the least invertible matrix under this order.
bool matrix_less(const KMatrix& a, const KMatrix& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    for (uint32_t i = 0; i < a.rows; ++i) {
        for (uint32_t j = a.cols; j-- > 0;) {
            if (a.at(i, j) != b.at(i, j)) return a.at(i, j) < b.at(i, j);
        }
    }
    return false;
}

bool subspace_less(const KSubspace& a, const KSubspace& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return matrix_less(a.basis, b.basis);
}

std::pair<KMatrix, uint32_t> rref(const FieldK& f, KMatrix m) {
    uint32_t r = 0;
    for (uint32_t c = 0; c < m.cols && r < m.rows; ++c) {
        uint32_t pivot = m.rows;
        for (uint32_t i = r; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot == m.rows) continue;
        if (pivot != r)
            for (uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        KElem s = f.inv(m.at(r, c));
        for (uint32_t j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(s, m.at(r, j));
        for (uint32_t i = 0; i < m.rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            KElem t = m.at(i, c);
            for (uint32_t j = 0; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
        }
        ++r;
    }
    return {std::move(m), r};
}

uint32_t rank(const FieldK& f, const KMatrix& m) { return rref(f, m).second; }

KSubspace span(const FieldK& f, uint32_t ambient, const std::vector<KVec>& vectors) {
    KMatrix m(uint32_t(vectors.size()), ambient);
    for (uint32_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) fail(Errc::DimensionMismatch, "vector length differs from ambient dimension");
        for (uint32_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
    }
    auto [red, r] = rref(f, std::move(m));
    KMatrix basis(r, ambient);
    std::copy(red.e.begin(), red.e.begin() + size_t(r) * ambient, basis.e.begin());
    return {ambient, std::move(basis)};
}

std::vector<KVec> basis_rows(const KSubspace& s) {
    std::vector<KVec> rows;
    rows.reserve(s.dim());
    for (uint32_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis.row(i));
    return rows;
}

KSubspace sum_space(const FieldK& f, const KSubspace& a, const KSubspace& b) {
    check_same_ambient(a, b);
    auto rows = basis_rows(a);
    auto rb = basis_rows(b);
    rows.insert(rows.end(), rb.begin(), rb.end());
    return span(f, a.ambient, rows);
}

// Zassenhaus: reduce [[A|A],[B|0]]; rows with zero left half carry a basis of
// the intersection in the right half.
KSubspace intersect_space(const FieldK& f, const KSubspace& a, const KSubspace& b) {
    check_same_ambient(a, b);
    uint32_t k = a.ambient;
    KMatrix m(a.dim() + b.dim(), 2 * k);
    for (uint32_t i = 0; i < a.dim(); ++i)
        for (uint32_t j = 0; j < k; ++j) {
            m.at(i, j) = a.basis.at(i, j);
            m.at(i, k + j) = a.basis.at(i, j);
        }
    for (uint32_t i = 0; i < b.dim(); ++i)
        for (uint32_t j = 0; j < k; ++j) m.at(a.dim() + i, j) = b.basis.at(i, j);
    auto [red, r] = rref(f, std::move(m));
    std::vector<KVec> inter;
    for (uint32_t i = 0; i < r; ++i) {
        bool left_zero = true;
        for (uint32_t j = 0; j < k && left_zero; ++j) left_zero = f.is_zero(red.at(i, j));
        if (left_zero) {
            KVec v(k);
            for (uint32_t j = 0; j < k; ++j) v[j] = red.at(i, k + j);
            inter.push_back(std::move(v));
        }
    }
    return span(f, k, inter);
}

bool contains(const FieldK& f, const KSubspace& outer, const KSubspace& inner) {
    check_same_ambient(outer, inner);
    return sum_space(f, outer, inner) == outer;
}

std::vector<KVec> enumerate_points(const FieldK& f, const KSubspace& s) {
    uint64_t total = pow_checked(f.size(), s.dim(), kMaxPoints, "too many points to enumerate");
    std::vector<KVec> pts;
    pts.reserve(total);
    for (uint64_t t = 0; t < total; ++t) {
        KVec p(s.ambient, f.zero());
        uint64_t v = t;
        for (uint32_t i = 0; i < s.dim(); ++i) {
            KElem c{uint32_t(v % f.size())};
            v /= f.size();
            if (f.is_zero(c)) continue;
            for (uint32_t j = 0; j < s.ambient; ++j)
                p[j] = f.add(p[j], f.mul(c, s.basis.at(i, j)));
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

uint64_t point_index(const FieldK& f, const KVec& v) {
    uint64_t idx = 0;
    for (size_t i = v.size(); i-- > 0;) idx = idx * f.size() + v[i].v;
    return idx;
}

KVec point_from_index(const FieldK& f, uint32_t ambient, uint64_t index) {
    KVec v(ambient);
    for (uint32_t i = 0; i < ambient; ++i) {
        v[i] = {uint32_t(index % f.size())};
        index /= f.size();
    }
    return v;
}

uint64_t gaussian_binomial(const FieldK& f, uint32_t k, uint32_t r) {
    if (r > k) return 0;
    // [k r]_q = prod_{i<r} (q^(k-i) - 1) / (q^(i+1) - 1), computed stepwise;
    // every prefix product of this form is an integer.
    uint64_t q = f.size();
    unsigned __int128 num = 1;
    for (uint32_t i = 0; i < r; ++i) {
        uint64_t top = pow_checked(q, k - i, UINT64_MAX, "count overflow") - 1;
        uint64_t bot = pow_checked(q, i + 1, UINT64_MAX, "count overflow") - 1;
        num = num * top / bot;
        if (num > (unsigned __int128)UINT64_MAX) fail(Errc::TooLarge, "subspace count overflow");
    }
    return uint64_t(num);
}

std::vector<KSubspace> enumerate_subspaces(const FieldK& f, uint32_t ambient,
                                           std::optional<uint32_t> dim_filter) {
    uint64_t total = 0;
    uint32_t lo = dim_filter.value_or(0), hi = dim_filter.value_or(ambient);
    if (lo > ambient) fail(Errc::DimensionMismatch, "requested dimension exceeds ambient dimension");
    for (uint32_t r = lo; r <= hi; ++r) {
        total += gaussian_binomial(f, ambient, r);
        if (total > kMaxSubspaces) fail(Errc::TooLarge, "too many subspaces to enumerate");
    }

    std::vector<KSubspace> out;
    out.reserve(total);
    for (uint32_t r = lo; r <= hi; ++r) {
        std::vector<KSubspace> level;
        // pivot-column subsets in lexicographic order
        std::vector<uint32_t> piv(r);
        for (uint32_t i = 0; i < r; ++i) piv[i] = i;
        bool more = r <= ambient;
        if (r == 0) {
            out.push_back(KSubspace::zero(ambient));
            continue;
        }
        while (more) {
            std::vector<bool> is_piv(ambient, false);
            for (uint32_t p : piv) is_piv[p] = true;
            // free cells: row i, column j with j > piv[i] and j not a pivot
            std::vector<std::pair<uint32_t, uint32_t>> free_cells;
            for (uint32_t i = 0; i < r; ++i)
                for (uint32_t j = piv[i] + 1; j < ambient; ++j)
                    if (!is_piv[j]) free_cells.emplace_back(i, j);
            uint64_t fills = pow_checked(f.size(), uint32_t(free_cells.size()), kMaxSubspaces * 2, "too many subspaces");
            for (uint64_t t = 0; t < fills; ++t) {
                KMatrix basis(r, ambient);
                for (uint32_t i = 0; i < r; ++i) basis.at(i, piv[i]) = f.one();
                uint64_t v = t;
                for (auto [i, j] : free_cells) {
                    basis.at(i, j) = {uint32_t(v % f.size())};
                    v /= f.size();
                }
                level.push_back({ambient, std::move(basis)});
            }
            // next pivot subset
            more = false;
            for (int i = int(r) - 1; i >= 0; --i) {
                if (piv[size_t(i)] < ambient - (r - uint32_t(i))) {
                    ++piv[size_t(i)];
                    for (uint32_t j = uint32_t(i) + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
        std::sort(level.begin(), level.end(), subspace_less);
        out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
    }
    return out;
}

std::vector<KSubspace> hyperplanes_containing(const FieldK& f, const KSubspace& s, const KSubspace& v) {
    check_same_ambient(s, v);
    if (v.dim() < 2 || s.dim() + 2 != v.dim() || !contains(f, v, s))
        fail(Errc::BadCodimension, "S must be a codimension-2 subspace of V");
    // extend a basis of S by two vectors from the basis of V
    KSubspace cur = s;
    std::vector<KVec> ext;
    for (uint32_t i = 0; i < v.dim() && ext.size() < 2; ++i) {
        KVec cand = v.basis.row(i);
        auto rows = basis_rows(cur);
        rows.push_back(cand);
        KSubspace bigger = span(f, v.ambient, rows);
        if (bigger.dim() > cur.dim()) {
            ext.push_back(cand);
            cur = std::move(bigger);
        }
    }
    // the q+1 hyperplanes correspond to the lines of the 2-dimensional quotient V/S
    std::vector<KSubspace> planes;
    auto srows = basis_rows(s);
    for (uint64_t c = 0; c < f.size(); ++c) {
        KVec w(v.ambient);
        for (uint32_t j = 0; j < v.ambient; ++j) w[j] = f.add(ext[0][j], f.mul({uint32_t(c)}, ext[1][j]));
        auto rows = srows;
        rows.push_back(std::move(w));
        planes.push_back(span(f, v.ambient, rows));
    }
    {
        auto rows = srows;
        rows.push_back(ext[1]);
        planes.push_back(span(f, v.ambient, rows));
    }
    std::sort(planes.begin(), planes.end(), subspace_less);
    return planes;
}

uint64_t invertible_count(const FieldK& f, uint32_t n) {
    uint64_t qn = pow_checked(f.size(), n, UINT64_MAX, "count overflow");
    unsigned __int128 total = 1;
    uint64_t qi = 1;
    for (uint32_t i = 0; i < n; ++i) {
        total *= (qn - qi);
        if (total > (unsigned __int128)UINT64_MAX) fail(Errc::TooLarge, "general linear group too large");
        qi *= f.size();
    }
    return uint64_t(total);
}

std::vector<KMatrix> enumerate_invertible(const FieldK& f, uint32_t n) {
    uint64_t total = invertible_count(f, n);
    if (total > kMaxInvertible) fail(Errc::TooLarge, "general linear group too large to enumerate");
    uint64_t qn = 1;
    for (uint32_t i = 0; i < n; ++i) qn *= f.size();

    std::vector<KMatrix> out;
    out.reserve(total);
    KMatrix work(n, n);
    // chosen rows kept in echelon form for the independence test
    std::vector<KVec> echelon;

    auto reduce = [&](KVec v) {
        for (const KVec& row : echelon) {
            uint32_t p = 0;
            while (p < n && f.is_zero(row[p])) ++p;
            if (p < n && !f.is_zero(v[p])) {
                KElem c = v[p];
                for (uint32_t j = 0; j < n; ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
            }
        }
        return v;
    };

    auto rec = [&](auto&& self, uint32_t depth) -> void {
        if (depth == n) {
            out.push_back(work);
            return;
        }
        for (uint64_t idx = 0; idx < qn; ++idx) {
            KVec cand = point_from_index(f, n, idx);
            KVec red = reduce(cand);
            bool zero = std::all_of(red.begin(), red.end(), [&](KElem e) { return f.is_zero(e); });
            if (zero) continue;
            // normalize the reduced remainder for echelon storage
            uint32_t p = 0;
            while (f.is_zero(red[p])) ++p;
            KElem s = f.inv(red[p]);
            for (uint32_t j = 0; j < n; ++j) red[j] = f.mul(s, red[j]);
            echelon.push_back(std::move(red));
            for (uint32_t j = 0; j < n; ++j) work.at(depth, j) = cand[j];
            self(self, depth + 1);
            echelon.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

KMatrix identity_matrix(uint32_t n) {
    KMatrix m(n, n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = {1};
    return m;
}

KMatrix transpose(const KMatrix& m) {
    KMatrix t(m.cols, m.rows);
    for (uint32_t i = 0; i < m.rows; ++i)
        for (uint32_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

KMatrix mat_mul(const FieldK& f, const KMatrix& a, const KMatrix& b) {
    if (a.cols != b.rows) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
    KMatrix r(a.rows, b.cols);
    for (uint32_t i = 0; i < a.rows; ++i)
        for (uint32_t k = 0; k < a.cols; ++k) {
            KElem x = a.at(i, k);
            if (f.is_zero(x)) continue;
            for (uint32_t j = 0; j < b.cols; ++j)
                r.at(i, j) = f.add(r.at(i, j), f.mul(x, b.at(k, j)));
        }
    return r;
}

KVec mat_vec(const FieldK& f, const KMatrix& m, const KVec& v) {
    if (v.size() != m.cols) fail(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    KVec r(m.rows, f.zero());
    for (uint32_t i = 0; i < m.rows; ++i)
        for (uint32_t j = 0; j < m.cols; ++j)
            r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
    return r;
}

std::optional<KMatrix> invert(const FieldK& f, const KMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    uint32_t n = m.rows;
    KMatrix aug(n, 2 * n);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = {1};
    }
    auto [red, r] = rref(f, std::move(aug));
    (void)r;
    // invertible iff the left block reduced to the identity
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            if (red.at(i, j) != (i == j ? KElem{1} : KElem{0})) return std::nullopt;
    KMatrix inv(n, n);
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

}  // namespace addiso
