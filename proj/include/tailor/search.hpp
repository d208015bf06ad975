// Copyright 2026 The Tailor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tailor/channel.hpp"
#include "tailor/code.hpp"

namespace tailor {

/// Raised when the sampler exhausts its restart budget.
class SearchLimitError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

struct SearchConfig {
    std::size_t n = 7;
    std::size_t num_samples = 10000;
    std::size_t max_generator_weight = 4;
    std::size_t min_distance = 3;
    std::uint64_t seed = 1;
    bool dedup = false;
    /// Generator supports are drawn from {3, ..., max_generator_weight}
    /// unless this is set, in which case from {1, ..., max_generator_weight}.
    bool include_low_weight = false;
    /// Failed draws tolerated before a partial generator set is discarded.
    std::size_t max_draws_per_attempt = 256;
    /// Whole-code attempts (dead ends plus distance rejections) per sample.
    std::size_t max_attempts = 100000;
    /// 0 means hardware concurrency. Results do not depend on it.
    std::size_t threads = 1;

    /// Throws ValidationError on inconsistent settings.
    void validate() const;
    std::vector<std::size_t> support_sizes() const;
};

struct RejectionCounts {
    std::uint64_t noncommuting = 0;
    std::uint64_t dependent = 0;
    std::uint64_t dead_ends = 0;
    std::uint64_t distance_too_small = 0;
    std::uint64_t duplicate = 0;

    RejectionCounts& operator+=(const RejectionCounts& o);
};

/// One random code with n - 1 independent commuting generators of bounded
/// weight and distance >= min_distance. Deterministic in the engine state.
StabilizerCode random_code(std::mt19937_64& rng, const SearchConfig& config, RejectionCounts* counts = nullptr);

/// Reduced row-echelon form of the generator matrix (x bits low, z bits
/// high). Equal iff the generators span the same group.
std::vector<std::uint64_t> canonical_form(const StabilizerCode& code);
/// canonical_form rows as fixed-width hex, concatenated.
std::string fingerprint(const StabilizerCode& code);

/// Seed for sample `index` derived from the master seed.
std::uint64_t candidate_seed(std::uint64_t master, std::uint64_t index);

/// Reason the code breaks the search constraints, or nullopt. Re-derives
/// every property from the generators.
std::optional<std::string> constraint_violation(const StabilizerCode& code, std::size_t max_generator_weight,
                                                std::size_t min_distance);

struct CodePool {
    std::vector<StabilizerCode> codes;
    std::vector<std::size_t> sample_index;
    std::vector<std::string> fingerprints;
    RejectionCounts rejections;
};

/// Draws config.num_samples codes; with dedup, repeats of an earlier
/// fingerprint are dropped and counted.
CodePool sample_pool(const SearchConfig& config);

struct RankedCode {
    StabilizerCode code;
    double logical_error_rate;
    std::string fingerprint;
    std::size_t sample_index;
};

struct SearchResult {
    /// Ascending by rate; ties keep sample order.
    std::vector<RankedCode> ranked;
    RejectionCounts rejections;

    const RankedCode& best() const;
};

SearchResult rank_pool(const CodePool& pool, const PauliChannel& channel, std::size_t threads = 1);

SearchResult run_search(const SearchConfig& config, const PauliChannel& channel);

/// [{"rank": 1, "generators": [...], "logical_error_rate": x, "fingerprint": "..."}, ...]
std::string search_result_to_json(const SearchResult& result);

}  // namespace tailor
