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

#include "tailor/search.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <unordered_set>

#include "json.hpp"
#include "tailor/decoder.hpp"
#include "tailor/gf2.hpp"
#include "tailor/parallel.hpp"

namespace tailor {

void SearchConfig::validate() const {
    if (n < 2 || n > kMaxExhaustiveQubits) {
        throw ValidationError("search supports 2 to " + std::to_string(kMaxExhaustiveQubits) + " qubits");
    }
    if (num_samples < 1) {
        throw ValidationError("num_samples must be at least 1");
    }
    if (min_distance < 1) {
        throw ValidationError("min_distance must be at least 1");
    }
    if (max_generator_weight < 1 || max_generator_weight > n) {
        throw ValidationError("max_generator_weight must lie in 1.." + std::to_string(n));
    }
    if (support_sizes().empty()) {
        throw ValidationError("no generator weights allowed: max_generator_weight " +
                              std::to_string(max_generator_weight) + " is below 3 without include_low_weight");
    }
    if (max_draws_per_attempt < 1 || max_attempts < 1) {
        throw ValidationError("sampler budgets must be positive");
    }
}

std::vector<std::size_t> SearchConfig::support_sizes() const {
    std::vector<std::size_t> sizes;
    for (std::size_t w = include_low_weight ? 1 : 3; w <= std::min(max_generator_weight, n); ++w) {
        sizes.push_back(w);
    }
    return sizes;
}

RejectionCounts& RejectionCounts::operator+=(const RejectionCounts& o) {
    noncommuting += o.noncommuting;
    dependent += o.dependent;
    dead_ends += o.dead_ends;
    distance_too_small += o.distance_too_small;
    duplicate += o.duplicate;
    return *this;
}

namespace {

PauliOperator draw_generator(std::mt19937_64& rng, std::size_t n, const std::vector<std::size_t>& sizes) {
    std::uniform_int_distribution<std::size_t> pick_size(0, sizes.size() - 1);
    std::size_t w = sizes[pick_size(rng)];
    std::array<std::size_t, kMaxExhaustiveQubits> qubits;
    std::iota(qubits.begin(), qubits.begin() + static_cast<std::ptrdiff_t>(n), 0);
    // Partial Fisher-Yates: the first w entries become a uniform subset.
    for (std::size_t i = 0; i < w; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(qubits[i], qubits[pick(rng)]);
    }
    std::uniform_int_distribution<int> pick_letter(1, 3);
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < w; ++i) {
        int letter = pick_letter(rng);  // 1 = X, 2 = Z, 3 = Y
        if (letter & 1) {
            x |= std::uint64_t{1} << qubits[i];
        }
        if (letter & 2) {
            z |= std::uint64_t{1} << qubits[i];
        }
    }
    return PauliOperator(n, x, z);
}

// Every Pauli of weight 1..max_weight, in no particular order.
std::vector<PauliOperator> low_weight_paulis(std::size_t n, std::size_t max_weight) {
    std::vector<PauliOperator> out;
    std::vector<std::size_t> support;
    auto extend = [&](auto&& self, std::size_t start, std::uint64_t x, std::uint64_t z) -> void {
        if (!support.empty()) {
            out.emplace_back(n, x, z);
        }
        if (support.size() == max_weight) {
            return;
        }
        for (std::size_t q = start; q < n; ++q) {
            support.push_back(q);
            std::uint64_t bit = std::uint64_t{1} << q;
            self(self, q + 1, x | bit, z);
            self(self, q + 1, x, z | bit);
            self(self, q + 1, x | bit, z | bit);
            support.pop_back();
        }
    };
    extend(extend, 0, 0, 0);
    return out;
}

}  // namespace

StabilizerCode random_code(std::mt19937_64& rng, const SearchConfig& config, RejectionCounts* counts) {
    config.validate();
    RejectionCounts local;
    RejectionCounts& tally = counts ? *counts : local;
    const auto sizes = config.support_sizes();
    const std::size_t target = config.n - 1;
    // Cheap rejection: a light logical operator rules the draw out before the
    // exhaustive distance scan, which still decides acceptance.
    const auto light = low_weight_paulis(config.n, std::min(config.min_distance - 1, config.n));

    for (std::size_t attempt = 0; attempt < config.max_attempts; ++attempt) {
        std::vector<PauliOperator> gens;
        gf2::IncrementalBasis basis(2 * config.n);
        std::size_t failures = 0;
        while (gens.size() < target && failures < config.max_draws_per_attempt) {
            auto p = draw_generator(rng, config.n, sizes);
            bool commutes = std::none_of(gens.begin(), gens.end(),
                                         [&](const PauliOperator& g) { return symplectic_product(g, p); });
            if (!commutes) {
                ++tally.noncommuting;
                ++failures;
            } else if (!basis.add(p.symplectic_vector())) {
                ++tally.dependent;
                ++failures;
            } else {
                gens.push_back(p);
            }
        }
        if (gens.size() < target) {
            ++tally.dead_ends;
            continue;
        }
        bool has_light_logical = std::any_of(light.begin(), light.end(), [&](const PauliOperator& p) {
            return std::none_of(gens.begin(), gens.end(),
                                [&](const PauliOperator& g) { return symplectic_product(g, p); }) &&
                   !basis.contains(p.symplectic_vector());
        });
        if (has_light_logical) {
            ++tally.distance_too_small;
            continue;
        }
        CodeOptions options;
        options.max_generator_weight = config.max_generator_weight;
        auto code = StabilizerCode::create(std::move(gens), options);
        if (distance(code) < config.min_distance) {
            ++tally.distance_too_small;
            continue;
        }
        return code;
    }
    throw SearchLimitError("random code sampler gave up after " + std::to_string(config.max_attempts) +
                           " attempts (weight <= " + std::to_string(config.max_generator_weight) +
                           ", distance >= " + std::to_string(config.min_distance) + ")");
}

std::vector<std::uint64_t> canonical_form(const StabilizerCode& code) {
    std::vector<std::uint64_t> rows;
    for (const auto& g : code.generators()) {
        rows.push_back(g.symplectic_vector());
    }
    return gf2::reduce(rows, 2 * code.num_qubits()).rows;
}

std::string fingerprint(const StabilizerCode& code) {
    const std::size_t digits = (2 * code.num_qubits() + 3) / 4;
    std::string out;
    for (auto row : canonical_form(code)) {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%0*llx", static_cast<int>(digits), static_cast<unsigned long long>(row));
        out += buf;
    }
    return out;
}

std::uint64_t candidate_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 over a counter offset by the master seed.
    std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::optional<std::string> constraint_violation(const StabilizerCode& code, std::size_t max_generator_weight,
                                                std::size_t min_distance) {
    const auto& gens = code.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].weight() > max_generator_weight) {
            return "generator " + gens[i].to_string() + " exceeds weight " + std::to_string(max_generator_weight);
        }
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (symplectic_product(gens[i], gens[j])) {
                return "generators " + gens[i].to_string() + " and " + gens[j].to_string() + " anticommute";
            }
        }
    }
    std::vector<std::uint64_t> rows;
    for (const auto& g : gens) {
        rows.push_back(g.symplectic_vector());
    }
    if (gf2::rank(rows, 2 * code.num_qubits()) != code.num_qubits() - 1) {
        return std::string("generators do not have rank n - 1");
    }
    std::size_t d = distance(code);
    if (d < min_distance) {
        return "distance " + std::to_string(d) + " below " + std::to_string(min_distance);
    }
    return std::nullopt;
}

CodePool sample_pool(const SearchConfig& config) {
    config.validate();
    std::vector<std::optional<StabilizerCode>> drawn(config.num_samples);
    std::vector<RejectionCounts> counts(config.num_samples);
    parallel_for(config.num_samples, config.threads, [&](std::size_t i) {
        std::mt19937_64 rng(candidate_seed(config.seed, i));
        drawn[i] = random_code(rng, config, &counts[i]);
    });

    CodePool pool;
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < drawn.size(); ++i) {
        pool.rejections += counts[i];
        std::string fp = fingerprint(*drawn[i]);
        if (config.dedup && !seen.insert(fp).second) {
            ++pool.rejections.duplicate;
            continue;
        }
        drawn[i]->set_label("random_" + std::to_string(i));
        pool.codes.push_back(std::move(*drawn[i]));
        pool.sample_index.push_back(i);
        pool.fingerprints.push_back(std::move(fp));
    }
    return pool;
}

const RankedCode& SearchResult::best() const {
    if (ranked.empty()) {
        throw ValidationError("search produced no codes");
    }
    return ranked.front();
}

SearchResult rank_pool(const CodePool& pool, const PauliChannel& channel, std::size_t threads) {
    std::vector<double> rates(pool.codes.size());
    parallel_for(pool.codes.size(), threads,
                 [&](std::size_t i) { rates[i] = logical_error_rate(pool.codes[i], channel); });
    std::vector<std::size_t> order(pool.codes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rates[a] < rates[b]; });

    SearchResult result;
    result.rejections = pool.rejections;
    result.ranked.reserve(order.size());
    for (auto i : order) {
        result.ranked.push_back({pool.codes[i], rates[i], pool.fingerprints[i], pool.sample_index[i]});
    }
    return result;
}

SearchResult run_search(const SearchConfig& config, const PauliChannel& channel) {
    config.validate();
    if (channel.num_qubits() != config.n) {
        throw ValidationError("search channel acts on " + std::to_string(channel.num_qubits()) + " qubits, config has " +
                              std::to_string(config.n));
    }
    return rank_pool(sample_pool(config), channel, config.threads);
}

std::string search_result_to_json(const SearchResult& result) {
    auto doc = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < result.ranked.size(); ++r) {
        const auto& entry = result.ranked[r];
        nlohmann::ordered_json item;
        item["rank"] = r + 1;
        item["generators"] = nlohmann::ordered_json::array();
        for (const auto& g : entry.code.generators()) {
            item["generators"].push_back(g.to_string());
        }
        item["logical_error_rate"] = entry.logical_error_rate;
        item["fingerprint"] = entry.fingerprint;
        doc.push_back(std::move(item));
    }
    return doc.dump(2);
}

}  // namespace tailor
