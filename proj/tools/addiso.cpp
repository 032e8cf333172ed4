// addiso: analysis and exhaustive verification of K-linear code isometries
// in L^m over a finite-field pair K < L.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "addiso/characters.hpp"
#include "addiso/report.hpp"
#include "addiso/sweep.hpp"
#include "addiso/textio.hpp"

namespace {

using namespace addiso;

struct Options {
    bool machine = false;
    uint64_t seed = 12345;
};

uint64_t rng_next(uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    uint64_t z = state;
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    return z;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) fail(Errc::Parse, "line 1, col 1: cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const Options& opt, const Report& rep) {
    if (opt.machine) {
        std::cout << rep.to_text();
    } else {
        std::cout << "addiso report\n-------------\n" << rep.to_text();
    }
}

uint32_t threads_from_env() {
    const char* env = std::getenv("ADDISO_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    return v > 0 ? uint32_t(v) : 1;
}

std::string uint_list(const std::vector<uint64_t>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

FieldK field_k_from_order(uint64_t q) {
    for (uint32_t p = 2; p <= q; ++p) {
        bool prime = true;
        for (uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime || q % p != 0) continue;
        uint64_t v = q;
        uint32_t deg = 0;
        while (v % p == 0) {
            v /= p;
            ++deg;
        }
        if (v == 1) return FieldK::with_default_modulus(PrimeField(p), deg);
        break;
    }
    fail(Errc::Parse, "line 1, col 1: q must be a prime power");
}

int cmd_field_info(const Options& opt, const std::string& desc, bool list_elements) {
    FieldL field = parse_field_descriptor(desc);
    const FieldK& kf = field.subfield();
    Report rep;
    rep.add("report", "field-info");
    rep.add("field", format_field_descriptor(field));
    rep.add("p", uint64_t(kf.p()));
    rep.add("d", uint64_t(kf.degree()));
    rep.add("q", kf.size());
    rep.add("n", uint64_t(field.degree()));
    rep.add("size", field.size());
    {
        std::vector<uint64_t> g(kf.modulus().begin(), kf.modulus().end());
        rep.add("modulus-g", "[" + uint_list(g) + "]");
        std::vector<uint64_t> h;
        for (KElem c : field.modulus()) h.push_back(c.v);
        rep.add("modulus-h", "[" + uint_list(h) + "]");
    }
    if (list_elements) {
        for (LElem x : field.elements())
            rep.add("element." + std::to_string(x.v), lelem_to_string(field, x));
    }
    emit(opt, rep);
    return 0;
}

int cmd_analyze_code(const Options& opt, const std::string& input) {
    GenMatrix a = parse_code_file(read_input(input));
    Report rep;
    rep.add("report", "analyze-code");
    rep.add("field", format_field_descriptor(a.field()));
    rep.add("k", uint64_t(a.k()));
    rep.add("m", uint64_t(a.m()));
    rep.add("codewords", uint64_t(codewords(a).size()));
    rep.add("weights", uint_list(weight_distribution(a)));
    SpaceTuple t = space_tuple(a);
    rep.add("tuple", space_tuple_to_string(t));
    {
        std::vector<uint64_t> dims;
        for (const auto& s : t.spaces) dims.push_back(s.dim());
        rep.add("tuple-dims", uint_list(dims));
    }
    KSubspace total = KSubspace::zero(a.k());
    for (const auto& s : t.spaces) total = sum_space(a.field().subfield(), total, s);
    rep.add("sum-dim", uint64_t(total.dim()));
    rep.add("dim-sum-check", check_dim_sum(a));
    emit(opt, rep);
    return 0;
}

int cmd_check_map(const Options& opt, const std::string& input) {
    CodeMap f = parse_map_file(read_input(input));
    Report rep;
    rep.add("report", "check-map");
    rep.add("field", format_field_descriptor(f.source.field()));
    rep.add("k", uint64_t(f.source.k()));
    rep.add("m", uint64_t(f.source.m()));
    bool direct = is_isometry_direct(f);
    bool criterion = is_isometry_criterion(f);
    bool tuples = is_extendible_tuples(f);
    auto witness = is_extendible_bruteforce(f);
    rep.add("isometry.direct", direct);
    rep.add("isometry.criterion", criterion);
    rep.add("extendible.tuples", tuples);
    rep.add("extendible.bruteforce", witness.has_value());
    rep.add("v-tuple", space_tuple_to_string(space_tuple(f.source)));
    rep.add("u-tuple", space_tuple_to_string(f.image_tuple()));
    std::string verdict = !direct ? "not-isometry" : (tuples ? "extendible-isometry" : "unextendible-isometry");
    rep.add("verdict", verdict);
    if (witness) rep.add("witness", monomial_to_string(*witness));
    emit(opt, rep);
    return 0;
}

GenMatrix random_gen_matrix(const FieldL& field, uint32_t k, uint32_t m, uint64_t& state) {
    for (;;) {
        std::vector<LElem> e(size_t(k) * m);
        for (auto& x : e) x = {uint32_t(rng_next(state) % field.size())};
        try {
            return GenMatrix(field, k, m, std::move(e));
        } catch (const Error&) {
            // dependent rows; draw again
        }
    }
}

int cmd_verify_characters(const Options& opt, const std::string& desc, uint64_t trials) {
    Report rep;
    rep.add("report", "verify-characters");
    uint64_t failures = 0;

    // per-coordinate weight identity over every element of every tested field
    std::vector<FieldL> fields;
    if (!desc.empty()) {
        fields.push_back(parse_field_descriptor(desc));
    } else {
        for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
            for (uint32_t d = 1; d <= 6; ++d)
                for (uint32_t n = 1; n <= 6; ++n) {
                    long double sz = std::pow((long double)p, (long double)d * n);
                    if (sz <= 64.0L) fields.push_back(make_field_pair(p, d, n));
                }
    }
    uint64_t coord_checked = 0, coord_failed = 0;
    for (const FieldL& field : fields)
        for (LElem a : field.elements()) {
            ++coord_checked;
            if (!coordinate_weight_identity(field, a)) ++coord_failed;
        }
    rep.add("coordinate-identity.fields", uint64_t(fields.size()));
    rep.add("coordinate-identity.checked", coord_checked);
    rep.add("coordinate-identity.failures", coord_failed);
    failures += coord_failed;

    // weight representation on random generator matrices
    uint64_t state = opt.seed ^ 0xabcdef12345ULL;
    uint64_t wr_failed = 0;
    std::vector<FieldL> wr_fields;
    if (!desc.empty())
        wr_fields.push_back(parse_field_descriptor(desc));
    else {
        wr_fields.push_back(make_field_pair(2, 1, 2));
        wr_fields.push_back(make_field_pair(3, 1, 2));
    }
    for (uint64_t t = 0; t < trials; ++t) {
        const FieldL& field = wr_fields[t % wr_fields.size()];
        uint32_t k = 1 + uint32_t(rng_next(state) % 3);
        uint32_t m = 1 + uint32_t(rng_next(state) % 4);
        if (k > field.degree() * m) k = field.degree() * m;
        GenMatrix a = random_gen_matrix(field, k, m, state);
        uint64_t qk = 1;
        for (uint32_t i = 0; i < k; ++i) qk *= field.subfield().size();
        KVec u = point_from_index(field.subfield(), k, rng_next(state) % qk);
        if (!weight_representation_check(a, u)) ++wr_failed;
    }
    rep.add("weight-representation.trials", trials);
    rep.add("weight-representation.failures", wr_failed);
    failures += wr_failed;

    // dual-map character identity: chi_b . sigma = chi_{sigma*(b)}
    uint64_t dg_checked = 0, dg_failed = 0;
    std::vector<FieldL> dg_fields =
        desc.empty() ? std::vector<FieldL>{make_field_pair(2, 1, 2), make_field_pair(3, 1, 2)} : fields;
    for (const FieldL& field : dg_fields) {
        const FieldK& kf = field.subfield();
        uint32_t n = field.degree(), k = 2;
        uint64_t mats = 1;
        bool skip = false;
        for (uint32_t i = 0; i < k * n; ++i) {
            mats *= kf.size();
            if (mats > 512) skip = true;
        }
        if (skip) continue;
        uint64_t qk = kf.size() * kf.size();
        for (uint64_t mi = 0; mi < mats; ++mi) {
            KMatrix sigma(k, n);
            uint64_t v = mi;
            for (auto& e : sigma.e) {
                e = {uint32_t(v % kf.size())};
                v /= kf.size();
            }
            for (uint64_t bi = 0; bi < field.size(); ++bi) {
                auto cb = field.coords({uint32_t(bi)});
                KVec img = mat_vec(kf, sigma, cb);
                for (uint64_t ui = 0; ui < qk; ++ui) {
                    KVec u = point_from_index(kf, k, ui);
                    KVec su = mat_vec(kf, transpose(sigma), u);
                    ++dg_checked;
                    if (!(char_value(kf, cb, su) == char_value(kf, img, u))) ++dg_failed;
                }
            }
        }
    }
    rep.add("dual-map-identity.checked", dg_checked);
    rep.add("dual-map-identity.failures", dg_failed);
    failures += dg_failed;

    // the same identities under an alternative nontrivial character
    uint64_t alt_checked = 0, alt_failed = 0;
    for (const FieldL& field : wr_fields) {
        const FieldK& kf = field.subfield();
        if (kf.size() < 3) continue;
        KElem twist = kf.element(2);
        for (LElem a : field.elements()) {
            ++alt_checked;
            if (!coordinate_weight_identity_twisted(field, twist, a)) ++alt_failed;
        }
        uint64_t st = opt.seed ^ 0x777ULL;
        for (uint64_t t = 0; t < 50; ++t) {
            GenMatrix a = random_gen_matrix(field, 2, 3, st);
            KVec u = point_from_index(kf, 2, rng_next(st) % (kf.size() * kf.size()));
            ++alt_checked;
            if (!weight_representation_check_twisted(a, twist, u)) ++alt_failed;
        }
    }
    rep.add("alt-character.checked", alt_checked);
    rep.add("alt-character.failures", alt_failed);
    failures += alt_failed;

    rep.add("status", failures == 0 ? std::string("pass") : std::string("fail"));
    emit(opt, rep);
    return failures == 0 ? 0 : 1;
}

int cmd_counterexample(const std::string& desc, uint32_t m, const std::string& output) {
    FieldL field = parse_field_descriptor(desc);
    CodeMap f = build_counterexample(field, m);
    std::string text = format_map_file(f);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) fail(Errc::Parse, "line 1, col 1: cannot open output file '" + output + "'");
        out << text;
    }
    return 0;
}

int cmd_coverings(const Options& opt, uint64_t q, uint32_t dim) {
    FieldK kf = field_k_from_order(q);
    Report rep;
    rep.add("report", "coverings");
    rep.add("q", q);
    rep.add("dim", uint64_t(dim));
    CoveringBound bound = check_covering_bound(kf, dim);
    rep.add("bound-holds", bound.holds);
    rep.add("multisets-checked", bound.multisets_checked);
    KSubspace full{dim, identity_matrix(dim)};
    auto coverings = classify_min_coverings(kf, full);
    rep.add("covering-count", uint64_t(coverings.size()));
    for (size_t i = 0; i < coverings.size(); ++i) {
        std::string base = "covering." + std::to_string(i);
        rep.add(base + ".common", subspace_to_string(coverings[i].common));
        std::ostringstream os;
        for (size_t j = 0; j < coverings[i].members.size(); ++j) {
            if (j) os << " ";
            os << subspace_to_string(coverings[i].members[j]);
        }
        rep.add(base + ".members", os.str());
    }
    emit(opt, rep);
    return 0;
}

int cmd_solutions(const Options& opt, uint64_t q, uint32_t k, uint32_t m, bool dim_hyp) {
    FieldK kf = field_k_from_order(q);
    Report rep;
    rep.add("report", "solutions");
    rep.add("q", q);
    rep.add("k", uint64_t(k));
    rep.add("m", uint64_t(m));
    rep.add("dim-hypothesis", dim_hyp);
    auto pairs = search_nontrivial(kf, k, m, dim_hyp);
    rep.add("nontrivial-count", uint64_t(pairs.size()));
    for (size_t i = 0; i < pairs.size(); ++i) {
        rep.add("pair." + std::to_string(i) + ".u", space_tuple_to_string(pairs[i].u_tuple));
        rep.add("pair." + std::to_string(i) + ".v", space_tuple_to_string(pairs[i].v_tuple));
    }
    emit(opt, rep);
    return 0;
}

int cmd_sweep(const Options& opt, const std::string& desc, uint32_t m, uint32_t max_k,
              uint32_t sample_oracle, bool dedup, uint64_t budget, uint64_t max_witnesses) {
    FieldL field = parse_field_descriptor(desc);
    SweepOptions so;
    so.budget = budget;
    so.sample_oracle = sample_oracle;
    so.seed = opt.seed;
    so.dedup = dedup;
    so.threads = threads_from_env();
    SweepReport r = sweep_theorem(field, m, max_k, so);
    Report rep;
    rep.add("report", "sweep");
    rep.add("field", format_field_descriptor(field));
    rep.add("m", uint64_t(r.m));
    rep.add("max-k", uint64_t(r.max_k));
    rep.add("dedup", r.dedup);
    rep.add("codes-enumerated", r.codes_enumerated);
    rep.add("codes-examined", r.codes_examined);
    rep.add("isometries", r.isometries);
    rep.add("extendible", r.extendible);
    rep.add("unextendible", r.unextendible);
    rep.add("oracle-checked", r.oracle_checked);
    rep.add("witness-count", uint64_t(r.witnesses.size()));
    auto rows_text = [](const std::vector<uint32_t>& rows, uint32_t m_) {
        std::ostringstream os;
        os << "[";
        for (size_t rr = 0; rr * m_ < rows.size(); ++rr) {
            if (rr) os << ",";
            os << "[";
            for (uint32_t c = 0; c < m_; ++c) {
                if (c) os << ",";
                os << rows[rr * m_ + c];
            }
            os << "]";
        }
        os << "]";
        return os.str();
    };
    size_t shown = r.witnesses.size();
    if (max_witnesses > 0) shown = std::min<size_t>(shown, max_witnesses);
    for (size_t i = 0; i < shown; ++i) {
        std::string base = "witness." + std::to_string(i);
        rep.add(base + ".code", rows_text(r.witnesses[i].code_rows, r.witnesses[i].m));
        rep.add(base + ".image", rows_text(r.witnesses[i].image_rows, r.witnesses[i].m));
    }
    emit(opt, rep);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis and exhaustive verification of additive-code isometries over field pairs"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--machine", opt.machine, "strict key/value output");
    app.add_option("--seed", opt.seed, "seed for randomized sampling");

    std::string field_desc, input_path = "-", output_path;
    uint32_t m = 3, max_k = 2, dim = 2, kdim = 2, sample_oracle = 32;
    uint64_t q = 2, trials = 1000, budget = 1'000'000'000, max_witnesses = 16;
    bool list_elements = false, dim_hyp = false, dedup = false;

    auto* fi = app.add_subcommand("field-info", "describe a field pair");
    fi->fallthrough();
    fi->add_option("--field", field_desc, "field descriptor, e.g. GF(2)^2")->required();
    fi->add_flag("--elements", list_elements, "list all elements of L");

    auto* ac = app.add_subcommand("analyze-code", "weights and column spaces of a code");
    ac->fallthrough();
    ac->add_option("--input", input_path, "code file ('-' for stdin)");

    auto* cm = app.add_subcommand("check-map", "isometry and extendibility of a generator map");
    cm->fallthrough();
    cm->add_option("--input", input_path, "map file ('-' for stdin)");

    auto* vc = app.add_subcommand("verify-characters", "run the exact character-identity suites");
    vc->fallthrough();
    vc->add_option("--field", field_desc, "restrict to one field pair");
    vc->add_option("--trials", trials, "random trials for the weight representation");

    auto* ce = app.add_subcommand("counterexample", "emit an unextendible-isometry map file");
    ce->fallthrough();
    ce->add_option("--field", field_desc, "field descriptor")->required();
    ce->add_option("--m", m, "code length (at least |K|+1)")->required();
    ce->add_option("--output,-o", output_path, "write to a file instead of stdout");

    auto* cv = app.add_subcommand("coverings", "covering bound and minimum coverings of K^dim");
    cv->fallthrough();
    cv->add_option("--q", q, "field order (prime power)")->required();
    cv->add_option("--dim", dim, "space dimension")->required();

    auto* so = app.add_subcommand("solutions", "search nontrivial indicator-sum solutions");
    so->fallthrough();
    so->add_option("--q", q, "field order (prime power)")->required();
    so->add_option("--k", kdim, "ambient dimension")->required();
    so->add_option("--m", m, "tuple length")->required();
    so->add_flag("--dim-hypothesis", dim_hyp, "filter to max dim V > max dim U and verify the family form");

    auto* sw = app.add_subcommand("sweep", "exhaustive extension-theorem sweep");
    sw->fallthrough();
    sw->add_option("--field", field_desc, "field descriptor")->required();
    sw->add_option("--m", m, "code length")->required();
    sw->add_option("--max-k", max_k, "maximum code dimension")->required();
    sw->add_option("--sample-oracle", sample_oracle, "brute-force cross-checks");
    sw->add_flag("--dedup", dedup, "one code per tuple-signature class");
    sw->add_option("--budget", budget, "elementary-step budget");
    sw->add_option("--max-witnesses", max_witnesses, "cap on printed witnesses (0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (fi->parsed()) return cmd_field_info(opt, field_desc, list_elements);
        if (ac->parsed()) return cmd_analyze_code(opt, input_path);
        if (cm->parsed()) return cmd_check_map(opt, input_path);
        if (vc->parsed()) return cmd_verify_characters(opt, field_desc, trials);
        if (ce->parsed()) return cmd_counterexample(field_desc, m, output_path);
        if (cv->parsed()) return cmd_coverings(opt, q, dim);
        if (so->parsed()) return cmd_solutions(opt, q, kdim, m, dim_hyp);
        if (sw->parsed())
            return cmd_sweep(opt, field_desc, m, max_k, sample_oracle, dedup, budget, max_witnesses);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::BudgetExceeded:
                return 3;
            case Errc::Verification:
                return 1;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
