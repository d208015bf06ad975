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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "tailor/channel.hpp"
#include "tailor/code.hpp"

namespace tailor {

/// Probability mass p(s, L) per syndrome s and logical class L (indexed by
/// LogicalClass values I, X, Y, Z).
using CosetProbabilities = std::vector<std::array<double, 4>>;

/// Exhaustive pass over all 4^n Paulis; every error's probability lands in
/// the cell (syndrome, logical class). Requires k = 1, n <= 8 and matching
/// qubit counts.
CosetProbabilities coset_probabilities(const StabilizerCode& code, const PauliChannel& channel);

struct SyndromeDecision {
    Syndrome syndrome;
    LogicalClass chosen;
    /// pure_error(syndrome) times the chosen logical operator.
    PauliOperator recovery;
    std::array<double, 4> class_probs;
};

/// Maximum-likelihood decoder for one code and one channel.
class DecoderTable {
   public:
    DecoderTable(StabilizerCode code, const CosetProbabilities& probs);

    const StabilizerCode& code() const { return code_; }
    const std::vector<SyndromeDecision>& decisions() const { return decisions_; }
    const SyndromeDecision& decision(const Syndrome& s) const { return decisions_.at(s.bits()); }

    /// Mass of every cell the decoder does not pick.
    double logical_error_rate() const;

    /// [{"syndrome": "101100", "recovery": "ZIIIIII", "class_probs": [pI, pX, pY, pZ]}, ...]
    std::string to_json() const;

   private:
    StabilizerCode code_;
    std::vector<SyndromeDecision> decisions_;
};

/// Per syndrome, picks the most probable class; ties go to the first of
/// I, X, Y, Z.
DecoderTable optimal_decoder(const StabilizerCode& code, const PauliChannel& channel);

/// Probability that the optimal decoder leaves a nontrivial logical error.
double logical_error_rate(const StabilizerCode& code, const PauliChannel& channel);

/// Largest code the density-matrix oracle accepts.
inline constexpr std::size_t kMaxOracleQubits = 7;

/// Recomputes the logical error rate of `table` by simulating the channel on
/// a maximally entangled code/reference state with dense matrices: stabilizer
/// projectors define the code space and each syndrome subspace, and the
/// table's recovery is applied as an explicit Pauli matrix. Returns one minus
/// the entanglement fidelity.
double density_matrix_oracle(const DecoderTable& table, const PauliChannel& channel);
double density_matrix_oracle(const StabilizerCode& code, const PauliChannel& channel);

}  // namespace tailor
