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

#include "tailor/decoder.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "json.hpp"

namespace tailor {
namespace {

PauliChannel biased(double p, double eta, std::size_t n) {
    return iid(biased_single_qubit(BiasedParams::from_total_and_bias(p, eta)), n);
}

PauliChannel dephasing(double q, std::size_t n) { return iid(PauliChannel(1, {1 - q, 0.0, q, 0.0}), n); }

PauliChannel random_channel(std::size_t n, std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> v(pauli_count(n));
    for (auto& x : v) x = e(rng);
    double total = std::accumulate(v.begin(), v.end(), 0.0);
    for (auto& x : v) x /= total;
    return PauliChannel(n, v);
}

// Rate from a direct sum over all errors, grouped by (syndrome, class)
// with the per-operator code methods.
double brute_rate(const StabilizerCode& code, const PauliChannel& ch) {
    std::vector<std::array<double, 4>> cells(code.num_syndromes(), {0, 0, 0, 0});
    for (std::uint64_t idx = 0; idx < pauli_count(code.num_qubits()); ++idx) {
        auto e = PauliOperator::from_index(code.num_qubits(), idx);
        cells[code.syndrome(e).bits()][static_cast<std::size_t>(code.logical_class(e))] += ch[idx];
    }
    double success = 0.0;
    for (const auto& c : cells) success += *std::max_element(c.begin(), c.end());
    return 1.0 - success;
}

TEST(decoder, phase_flip_cells) {
    for (double q : {0.01, 0.1, 0.3}) {
        auto code = phase_flip3();
        auto cells = coset_probabilities(code, dephasing(q, 3));
        ASSERT_EQ(cells.size(), 4u);
        EXPECT_NEAR(cells[0][0], std::pow(1 - q, 3), 1e-15);
        EXPECT_NEAR(cells[0][3], std::pow(q, 3), 1e-15);
        for (std::size_t s = 1; s < 4; ++s) {
            // One Z or two Zs; which class is which depends on the pure error.
            double lo = std::min(cells[s][0], cells[s][3]);
            double hi = std::max(cells[s][0], cells[s][3]);
            EXPECT_NEAR(hi, q * (1 - q) * (1 - q), 1e-15);
            EXPECT_NEAR(lo, q * q * (1 - q), 1e-15);
            EXPECT_EQ(cells[s][1], 0.0);
            EXPECT_EQ(cells[s][2], 0.0);
        }
        EXPECT_NEAR(logical_error_rate(code, dephasing(q, 3)), 3 * q * q - 2 * q * q * q, 1e-12);
    }
}

TEST(decoder, unencoded_qubit) {
    auto code = StabilizerCode::create(1, {});
    for (double p : {0.0, 0.01, 0.2}) {
        EXPECT_NEAR(logical_error_rate(code, biased(p, 10.0, 1)), p, 1e-15);
    }
}

TEST(decoder, ties_prefer_earlier_class) {
    auto code = StabilizerCode::create(1, {});
    auto table = optimal_decoder(code, PauliChannel(1, {0.0, 0.5, 0.0, 0.5}));
    EXPECT_EQ(table.decisions()[0].chosen, LogicalClass::X);
    EXPECT_EQ(table.decisions()[0].recovery.to_string(), "X");
    auto flat = optimal_decoder(code, PauliChannel(1, {0.25, 0.25, 0.25, 0.25}));
    EXPECT_EQ(flat.decisions()[0].chosen, LogicalClass::I);
    EXPECT_NEAR(flat.logical_error_rate(), 0.75, 1e-15);
}

TEST(decoder, matches_brute_force) {
    std::mt19937_64 rng(31);
    for (const auto& code : {phase_flip3(), five_qubit(), steane(), cyclic7()}) {
        auto n = code.num_qubits();
        for (int trial = 0; trial < 2; ++trial) {
            auto ch = random_channel(n, rng);
            EXPECT_NEAR(logical_error_rate(code, ch), brute_rate(code, ch), 1e-12) << code.label();
        }
        auto ch = biased(0.05, 10.0, n);
        EXPECT_NEAR(logical_error_rate(code, ch), brute_rate(code, ch), 1e-14) << code.label();
    }
}

TEST(decoder, matches_density_matrix_oracle) {
    for (const auto& code : {phase_flip3(), five_qubit()}) {
        for (double p : {0.01, 0.05, 0.1}) {
            for (double eta : {1.0, 10.0, 100.0}) {
                auto ch = biased(p, eta, code.num_qubits());
                EXPECT_NEAR(logical_error_rate(code, ch), density_matrix_oracle(code, ch), 1e-9)
                    << code.label() << " p=" << p << " eta=" << eta;
            }
        }
    }
    std::mt19937_64 rng(2);
    auto ch = random_channel(5, rng);
    EXPECT_NEAR(logical_error_rate(five_qubit(), ch), density_matrix_oracle(five_qubit(), ch), 1e-9);
    EXPECT_THROW(density_matrix_oracle(StabilizerCode::create(8, {}, CodeOptions{.require_single_logical = false, .max_generator_weight = {}}),
                                       PauliChannel::identity(8)),
                 ValidationError);
}

TEST(decoder, invariant_under_representative_choice) {
    auto ch = biased(0.05, 30.0, 7);
    for (const auto& code : {steane(), cyclic7()}) {
        const auto& g = code.generators();
        double base = logical_error_rate(code, ch);
        auto alt_log = code.with_logicals(code.logical_x() * g[2], code.logical_z() * g[0] * g[4]);
        EXPECT_NEAR(logical_error_rate(alt_log, ch), base, 1e-15);
        auto destab = code.destabilizers();
        destab[0] *= g[1];
        destab[1] *= code.logical_x();
        destab[3] *= code.logical_z() * g[5];
        auto alt_destab = code.with_destabilizers(destab);
        EXPECT_NEAR(logical_error_rate(alt_destab, ch), base, 1e-15);
        // Both tables decode the same errors successfully.
        auto t0 = optimal_decoder(code, ch);
        auto t1 = optimal_decoder(alt_destab, ch);
        for (std::size_t s = 0; s < t0.decisions().size(); ++s) {
            auto r0 = t0.decisions()[s].recovery;
            auto r1 = t1.decisions()[s].recovery;
            EXPECT_EQ(code.syndrome(r0 * r1).bits(), 0u);
        }
    }
}

TEST(decoder, invariant_under_generator_basis) {
    auto ch = biased(0.02, 100.0, 7);
    double base = logical_error_rate(cyclic7(), ch);
    auto seed = PauliOperator::from_string("XZIZXII");
    for (std::size_t drop = 0; drop < 6; ++drop) {
        std::vector<PauliOperator> gens;
        for (std::size_t k = 0; k < 7; ++k) {
            if (k != drop) gens.push_back(seed.cyclic_shift(static_cast<long long>(k)));
        }
        EXPECT_NEAR(logical_error_rate(StabilizerCode::create(gens), ch), base, 1e-15);
    }
}

TEST(decoder, cyclic_code_ignores_channel_rotation) {
    std::mt19937_64 rng(44);
    // A product channel with distinct qubits, then its rotations.
    std::vector<double> probs(pauli_count(7), 0.0);
    std::vector<PauliChannel> singles;
    for (int q = 0; q < 7; ++q) singles.push_back(random_channel(1, rng));
    for (std::uint64_t idx = 0; idx < pauli_count(7); ++idx) {
        auto e = PauliOperator::from_index(7, idx);
        double v = 1.0;
        for (std::size_t q = 0; q < 7; ++q) {
            v *= singles[q].probability(PauliOperator::from_string(std::string(1, e.letter(q))));
        }
        probs[idx] = v;
    }
    PauliChannel product(7, probs);
    double base = logical_error_rate(cyclic7(), product);
    for (std::size_t k = 1; k < 7; ++k) {
        std::vector<std::size_t> perm(7);
        for (std::size_t i = 0; i < 7; ++i) perm[i] = (i + k) % 7;
        EXPECT_NEAR(logical_error_rate(cyclic7(), product.permuted(perm)), base, 1e-14);
    }
}

TEST(decoder, rate_bounds) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto ch = random_channel(5, rng);
        double r = logical_error_rate(five_qubit(), ch);
        EXPECT_GE(r, 0.0);
        EXPECT_LE(r, 0.75 + 1e-15);
    }
    EXPECT_EQ(logical_error_rate(steane(), PauliChannel::identity(7)), 0.0);
    EXPECT_EQ(logical_error_rate(steane(), biased(0.0, 1.0, 7)), 0.0);
    EXPECT_THROW(logical_error_rate(steane(), PauliChannel::identity(5)), ValidationError);
}

TEST(decoder, table_contents) {
    auto code = steane();
    auto ch = biased(0.01, 1.0, 7);
    auto table = optimal_decoder(code, ch);
    ASSERT_EQ(table.decisions().size(), 64u);
    const auto& d0 = table.decisions()[0];
    EXPECT_EQ(d0.chosen, LogicalClass::I);
    EXPECT_TRUE(d0.recovery.is_identity());
    // A single X on qubit 7 is corrected.
    auto e = PauliOperator::from_string("IIIIIIX");
    const auto& d = table.decision(code.syndrome(e));
    EXPECT_EQ(code.logical_class(e * d.recovery), LogicalClass::I);
    EXPECT_EQ(code.syndrome(d.recovery), code.syndrome(e));

    auto doc = nlohmann::json::parse(table.to_json());
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 64u);
    EXPECT_EQ(doc[7]["syndrome"], "111000");
    EXPECT_EQ(doc[7]["class_probs"].size(), 4u);
    double total = 0.0;
    for (const auto& row : doc) {
        for (const auto& v : row["class_probs"]) total += v.get<double>();
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

}  // namespace
}  // namespace tailor
