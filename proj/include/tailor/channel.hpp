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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tailor/pauli.hpp"

namespace tailor {

/// Independent X and Z flip processes with bare rates r_x and r_z.
struct BiasedParams {
    double r_x = 0.0;
    double r_z = 0.0;

    /// Both rates must lie in [0, 1).
    static BiasedParams from_rates(double r_x, double r_z);

    /// Inverts (p, eta) -> (r_x, r_z). Needs 0 <= p < 1 and eta > 0.
    /// eta < 1 is accepted as given (no X/Z swap) with a warning.
    static BiasedParams from_total_and_bias(double p, double eta);

    double p_x() const { return r_x * (1.0 - r_z); }
    double p_z() const { return r_z * (1.0 - r_x); }
    double p_y() const { return r_x * r_z; }
    /// 1 - (1 - r_x)(1 - r_z).
    double p() const { return p_x() + p_y() + p_z(); }
    /// p_z / p_x; infinite when p_x = 0 < p_z and NaN when both vanish.
    double eta() const { return p_z() / p_x(); }
};

/// Upper bound on qubits for dense channels (4^8 entries).
inline constexpr std::size_t kMaxDenseQubits = 8;

/// Probability distribution over the 4^n phaseless Paulis, indexed by the
/// PauliOperator enumeration order.
class PauliChannel {
   public:
    /// Entries must be non-negative and sum to 1 within 1e-9.
    PauliChannel(std::size_t n, std::vector<double> probabilities);

    static PauliChannel identity(std::size_t n);
    static PauliChannel point_mass(const PauliOperator& p);

    std::size_t num_qubits() const { return n_; }
    std::span<const double> probabilities() const { return probs_; }
    double operator[](std::size_t index) const { return probs_[index]; }
    double probability(const PauliOperator& p) const;

    /// Moves qubit i to position perm[i].
    PauliChannel permuted(std::span<const std::size_t> perm) const;

   private:
    std::size_t n_;
    std::vector<double> probs_;
};

/// Probabilities over (I, X, Y, Z) = (1 - p, p_x, p_y, p_z).
PauliChannel biased_single_qubit(const BiasedParams& params);

/// Same single-qubit channel independently on each of n qubits.
PauliChannel iid(const PauliChannel& single, std::size_t n);

/// Apply b then a (order is irrelevant: Pauli channels commute).
PauliChannel compose(const PauliChannel& a, const PauliChannel& b);
/// Explicit XOR convolution, O(16^n).
PauliChannel compose_direct(const PauliChannel& a, const PauliChannel& b);
/// Walsh-Hadamard transform route, O(n 4^n).
PauliChannel compose_transform(const PauliChannel& a, const PauliChannel& b);

/// Weighted mixture; weights must be non-negative and sum to 1 within 1e-9.
PauliChannel convex(std::span<const PauliChannel> channels, std::span<const double> weights);

/// Places a 2-qubit channel on qubits i and j (1-based, i != j) of an
/// n-qubit register: its first qubit lands on i, its second on j.
PauliChannel embed(const PauliChannel& two_qubit, std::size_t n, std::size_t i, std::size_t j);

enum class Extrapolation { Convex, ConvexProduct, Product };

std::string to_string(Extrapolation e);
/// Accepts "convex", "convex-product", "product".
Extrapolation parse_extrapolation(std::string_view name);

/// Qubits 1..n form a line; the pairs are (j, j+1).
/// Uniform mixture of the 2-qubit channel on one neighboring pair.
PauliChannel extrapolate_convex(const PauliChannel& two_qubit, std::size_t n = 7);
/// Half the time all pairs (1,2), (3,4), ... act; otherwise (2,3), (4,5), ...
PauliChannel extrapolate_convex_product(const PauliChannel& two_qubit, std::size_t n = 7);
/// Every neighboring pair acts.
PauliChannel extrapolate_product(const PauliChannel& two_qubit, std::size_t n = 7);
PauliChannel extrapolate(const PauliChannel& two_qubit, Extrapolation how, std::size_t n = 7);

/// Reads {"n": 2, "probs": {"II": 0.92, ...}}. Omitted strings have
/// probability 0. A total within 1e-6 of 1 is renormalized (with a warning if
/// it is off by more than 1e-12); anything further off is rejected.
PauliChannel channel_from_json(std::string_view text);
PauliChannel load_channel_file(const std::filesystem::path& path);
/// Nonzero entries only, keyed by Pauli string.
std::string channel_to_json(const PauliChannel& channel);

}  // namespace tailor
