#pragma once

#include <cstdint>
#include <vector>

#include "addiso/isometry.hpp"

namespace addiso {

/// The length-(q+1) unextendible-isometry construction, padded with zero
/// columns for longer codes: (1,...,1,0) and (x_1,...,x_q,1) map to
/// (1,...,1,0) and (w,...,w,0) for the first enumerated w outside K.
CodeMap build_counterexample(const FieldL& field, uint32_t m);

struct SweepOptions {
    uint64_t budget = 1'000'000'000;
    uint32_t sample_oracle = 32;  // brute-force cross-checks per sweep
    uint64_t seed = 12345;
    bool dedup = false;           // one code per tuple-signature class
    uint32_t threads = 1;
};

struct SweepWitness {
    uint32_t k = 0, m = 0;
    std::vector<uint32_t> code_rows;   // element indices, row-major
    std::vector<uint32_t> image_rows;

    friend bool operator==(const SweepWitness&, const SweepWitness&) = default;
};

struct SweepReport {
    uint64_t q = 0;
    uint32_t n = 0, m = 0, max_k = 0;
    bool dedup = false;
    uint64_t codes_enumerated = 0;
    uint64_t codes_examined = 0;
    uint64_t isometries = 0;
    uint64_t extendible = 0;
    uint64_t unextendible = 0;
    uint64_t oracle_checked = 0;
    std::vector<SweepWitness> witnesses;  // canonically sorted
};

/// Enumerates every K-linear code of dimension <= max_k in L^m (canonical
/// generator matrices) and every weight-preserving K-linear map out of it,
/// classifying each by tuple equivalence; a sample is cross-checked against
/// the brute-force witness search. Zero unextendible maps are asserted when
/// m <= |K|.
SweepReport sweep_theorem(const FieldL& field, uint32_t m, uint32_t max_k, const SweepOptions& opts = {});

}  // namespace addiso
