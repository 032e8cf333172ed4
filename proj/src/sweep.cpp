#include "addiso/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

namespace addiso {

namespace {

constexpr uint64_t kMaxWordSpace = uint64_t{1} << 20;

uint64_t pow_u64(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

std::string rows_to_text(const std::vector<uint32_t>& rows, uint32_t m) {
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r * m < rows.size(); ++r) {
        if (r) os << ",";
        os << "[";
        for (uint32_t c = 0; c < m; ++c) {
            if (c) os << ",";
            os << rows[r * m + c];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<uint32_t> word_rows_to_indices(const std::vector<LWord>& rows) {
    std::vector<uint32_t> out;
    for (const LWord& w : rows)
        for (LElem x : w) out.push_back(x.v);
    return out;
}

bool witness_less(const SweepWitness& a, const SweepWitness& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.code_rows != b.code_rows) return a.code_rows < b.code_rows;
    return a.image_rows < b.image_rows;
}

// Weight classes of L^m, in word-index order within each class.
std::vector<std::vector<LWord>> words_by_weight(const FieldL& field, uint32_t m) {
    uint64_t total = 1;
    for (uint32_t i = 0; i < m; ++i) {
        total *= field.size();
        if (total > kMaxWordSpace) fail(Errc::TooLarge, "word space too large to enumerate");
    }
    std::vector<std::vector<LWord>> classes(m + 1);
    for (uint64_t t = 0; t < total; ++t) {
        LWord w(m);
        uint64_t v = t;
        for (uint32_t j = 0; j < m; ++j) {
            w[j] = {uint32_t(v % field.size())};
            v /= field.size();
        }
        classes[weight(field, w)].push_back(std::move(w));
    }
    return classes;
}

// Enumerates all weight-preserving K-linear maps of the code by DFS over
// generator images, pruning on weight consistency of every new combination.
template <class OnMap>
void enumerate_isometries(const FieldL& field, const GenMatrix& gen,
                          const std::vector<std::vector<LWord>>& classes, OnMap&& on_map) {
    const FieldK& kf = field.subfield();
    uint64_t q = kf.size();
    uint32_t k = gen.k(), m = gen.m();
    std::vector<LWord> src = codewords(gen);
    std::vector<uint32_t> src_w(src.size());
    for (size_t t = 0; t < src.size(); ++t) src_w[t] = weight(field, src[t]);
    std::vector<LWord> img(src.size(), LWord(m, field.zero()));
    std::vector<LWord> images(k);
    std::vector<LWord> scaled(q, LWord(m, field.zero()));

    auto rec = [&](auto&& self, uint32_t depth) -> void {
        if (depth == k) {
            on_map(images);
            return;
        }
        uint64_t base = pow_u64(q, depth);
        uint32_t target = src_w[base];
        for (const LWord& cand : classes[target]) {
            for (uint64_t a = 1; a < q; ++a)
                for (uint32_t j = 0; j < m; ++j)
                    scaled[a][j] = field.scalar_mul({uint32_t(a)}, cand[j]);
            bool ok = true;
            for (uint64_t s = 0; s < base && ok; ++s) {
                for (uint64_t a = 1; a < q && ok; ++a) {
                    uint64_t t = s + a * base;
                    LWord& w = img[t];
                    uint32_t wt = 0;
                    for (uint32_t j = 0; j < m; ++j) {
                        w[j] = field.add(img[s][j], scaled[a][j]);
                        if (!field.is_zero(w[j])) ++wt;
                    }
                    if (wt != src_w[t]) ok = false;
                }
            }
            if (!ok) continue;
            images[depth] = cand;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
}

// Column spaces depend only on the column values, so classification work per
// map collapses to id lookups once each column vector has been seen. Valid
// for one code dimension at a time.
class ColumnSpaceCache {
  public:
    ColumnSpaceCache(const FieldL& field, uint32_t k) : field_(field), k_(k) {
        uint64_t lk = 1;
        bool small = true;
        for (uint32_t i = 0; i < k; ++i) {
            if (lk > (uint64_t{1} << 22) / field.size()) small = false;
            lk *= field.size();
            if (!small) break;
        }
        if (small) id_.assign(lk, -1);
    }

    int32_t column_id(const LWord& col) {
        if (id_.empty()) return intern(column_space(field_, col));
        uint64_t idx = 0;
        for (uint32_t r = k_; r-- > 0;) idx = idx * field_.size() + col[r].v;
        if (id_[idx] < 0) id_[idx] = intern(column_space(field_, col));
        return id_[idx];
    }

  private:
    int32_t intern(KSubspace s) {
        auto [it, fresh] = lookup_.try_emplace(std::move(s), int32_t(lookup_.size()));
        (void)fresh;
        return it->second;
    }

    struct SpaceLess {
        bool operator()(const KSubspace& a, const KSubspace& b) const { return subspace_less(a, b); }
    };
    const FieldL& field_;
    uint32_t k_;
    std::vector<int32_t> id_;
    std::map<KSubspace, int32_t, SpaceLess> lookup_;
};

struct Partial {
    uint64_t isometries = 0, extendible = 0, unextendible = 0;
    std::vector<SweepWitness> witnesses;
};

uint64_t next_rand(uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    uint64_t z = state;
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    return z;
}

}  // namespace

CodeMap build_counterexample(const FieldL& field, uint32_t m) {
    const FieldK& kf = field.subfield();
    uint64_t q = kf.size();
    if (m <= q) fail(Errc::LengthTooShort, "length must be at least |K| + 1");
    if (field.size() == q) fail(Errc::DegreeMismatch, "L must properly extend K");
    LElem omega = field.element(q);  // first enumerated element outside K

    std::vector<LElem> gen(size_t(2) * m, field.zero());
    std::vector<LElem> img(size_t(2) * m, field.zero());
    for (uint64_t j = 0; j < q; ++j) {
        gen[j] = field.one();
        gen[m + j] = field.embed(kf.element(j));
        img[j] = field.one();
        img[m + j] = omega;
    }
    gen[m + q] = field.one();
    return make_code_map(GenMatrix(field, 2, m, std::move(gen)), std::move(img));
}

SweepReport sweep_theorem(const FieldL& field, uint32_t m, uint32_t max_k, const SweepOptions& opts) {
    const FieldK& kf = field.subfield();
    uint64_t q = kf.size();
    uint32_t n = field.degree();
    uint32_t nm = n * m;
    if (max_k > nm) max_k = nm;  // no code has larger dimension

    // upfront cost estimate: codes x candidate images x per-map work
    long double words = std::pow((long double)q, (long double)nm);
    long double est = 0;
    for (uint32_t r = 0; r <= max_k; ++r)
        est += (long double)gaussian_binomial(kf, nm, r) * std::pow(words, (long double)r) *
               std::pow((long double)q, (long double)r) * m;
    if (est > (long double)opts.budget)
        fail(Errc::BudgetExceeded, "estimated sweep cost exceeds the budget");

    auto classes = words_by_weight(field, m);

    // all codes: canonical generator matrices from subspaces of K^(nm)
    std::vector<GenMatrix> codes;
    for (uint32_t r = 0; r <= max_k; ++r) {
        for (const KSubspace& s : enumerate_subspaces(kf, nm, r)) {
            std::vector<LElem> entries;
            entries.reserve(size_t(r) * m);
            for (uint32_t i = 0; i < r; ++i) {
                LWord w = unflatten_word(field, s.basis.row(i));
                entries.insert(entries.end(), w.begin(), w.end());
            }
            codes.emplace_back(field, r, m, std::move(entries));
        }
    }

    SweepReport report;
    report.q = q;
    report.n = n;
    report.m = m;
    report.max_k = max_k;
    report.dedup = opts.dedup;
    report.codes_enumerated = codes.size();

    // optional dedup by tuple-signature class
    std::vector<uint32_t> selected;
    if (opts.dedup) {
        std::set<std::vector<uint32_t>> seen;
        for (uint32_t i = 0; i < codes.size(); ++i) {
            auto spaces = space_tuple(codes[i]).spaces;
            std::sort(spaces.begin(), spaces.end(), subspace_less);
            std::vector<uint32_t> sig{codes[i].k()};
            for (const auto& s : spaces) {
                sig.push_back(s.dim());
                for (KElem e : s.basis.e) sig.push_back(e.v);
            }
            if (seen.insert(std::move(sig)).second) selected.push_back(i);
        }
    } else {
        selected.resize(codes.size());
        for (uint32_t i = 0; i < codes.size(); ++i) selected[i] = i;
    }
    report.codes_examined = selected.size();

    uint32_t threads = std::max(1u, opts.threads);
    std::vector<Partial> parts(threads);
    std::vector<uint64_t> per_code(selected.size(), 0);

    auto work = [&](uint32_t tid) {
        Partial& p = parts[tid];
        uint32_t cache_dim = UINT32_MAX;
        std::optional<ColumnSpaceCache> cache;
        for (size_t ci = tid; ci < selected.size(); ci += threads) {
            const GenMatrix& gen = codes[selected[ci]];
            uint32_t k = gen.k();
            if (k != cache_dim) {
                cache.emplace(field, k);
                cache_dim = k;
            }
            std::vector<int32_t> src_ids(m);
            for (uint32_t c = 0; c < m; ++c) src_ids[c] = cache->column_id(gen.column(c));
            std::sort(src_ids.begin(), src_ids.end());

            std::vector<int32_t> ids(m);
            LWord col(k);
            uint64_t local = 0;
            enumerate_isometries(field, gen, classes, [&](const std::vector<LWord>& images) {
                ++local;
                ++p.isometries;
                for (uint32_t c = 0; c < m; ++c) {
                    for (uint32_t r = 0; r < k; ++r) col[r] = images[r][c];
                    ids[c] = cache->column_id(col);
                }
                std::sort(ids.begin(), ids.end());
                if (ids == src_ids) {
                    ++p.extendible;
                } else {
                    ++p.unextendible;
                    SweepWitness w;
                    w.k = k;
                    w.m = gen.m();
                    for (uint32_t r = 0; r < k; ++r)
                        for (uint32_t c = 0; c < gen.m(); ++c) w.code_rows.push_back(gen.at(r, c).v);
                    w.image_rows = word_rows_to_indices(images);
                    p.witnesses.push_back(std::move(w));
                }
            });
            per_code[ci] = local;
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (uint32_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    for (const Partial& p : parts) {
        report.isometries += p.isometries;
        report.extendible += p.extendible;
        report.unextendible += p.unextendible;
        report.witnesses.insert(report.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    }
    std::sort(report.witnesses.begin(), report.witnesses.end(), witness_less);

    // brute-force oracle on a deterministic sample of the isometries
    uint64_t total = report.isometries;
    uint64_t want = std::min<uint64_t>(opts.sample_oracle, total);
    if (want > 0) {
        std::set<uint64_t> sample;
        uint64_t state = opts.seed ^ 0x9e3779b97f4a7c15ULL;
        uint64_t guard = 0;
        while (sample.size() < want && guard < 64 * want + 1024) {
            sample.insert(next_rand(state) % total);
            ++guard;
        }
        uint64_t offset = 0;
        for (size_t ci = 0; ci < selected.size(); ++ci) {
            uint64_t lo = offset, hi = offset + per_code[ci];
            offset = hi;
            auto first = sample.lower_bound(lo);
            if (first == sample.end() || *first >= hi) continue;
            const GenMatrix& gen = codes[selected[ci]];
            auto src_tuple = space_tuple(gen).spaces;
            std::sort(src_tuple.begin(), src_tuple.end(), subspace_less);
            uint64_t local = 0;
            enumerate_isometries(field, gen, classes, [&](const std::vector<LWord>& images) {
                uint64_t global = lo + local;
                ++local;
                if (!sample.count(global)) return;
                std::vector<LElem> flat;
                for (const LWord& w : images) flat.insert(flat.end(), w.begin(), w.end());
                CodeMap cm = make_code_map(gen, std::move(flat));
                bool tuples = is_extendible_tuples(cm);
                bool brute = is_extendible_bruteforce(cm).has_value();
                ++report.oracle_checked;
                if (tuples != brute) {
                    SweepWitness w;
                    for (uint32_t r = 0; r < gen.k(); ++r)
                        for (uint32_t c = 0; c < gen.m(); ++c) w.code_rows.push_back(gen.at(r, c).v);
                    w.image_rows = word_rows_to_indices(images);
                    fail(Errc::Verification,
                         "extendibility oracle mismatch: code=" + rows_to_text(w.code_rows, gen.m()) +
                             " image=" + rows_to_text(w.image_rows, gen.m()) +
                             " tuples=" + (tuples ? "yes" : "no") + " bruteforce=" + (brute ? "yes" : "no"));
                }
            });
        }
    }

    if (m <= q && report.unextendible > 0) {
        const SweepWitness& w = report.witnesses.front();
        fail(Errc::Verification,
             "unextendible isometry found at m <= |K|: code=" + rows_to_text(w.code_rows, w.m) +
                 " image=" + rows_to_text(w.image_rows, w.m));
    }
    return report;
}

}  // namespace addiso
