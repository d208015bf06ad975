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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tailor/pauli.hpp"

namespace tailor {

/// Logical coset of an error relative to its syndrome's canonical pure error.
/// The numeric order doubles as the decoder's tie-break order.
enum class LogicalClass : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr LogicalClass kLogicalClasses[4] = {LogicalClass::I, LogicalClass::X, LogicalClass::Y,
                                                    LogicalClass::Z};

char to_char(LogicalClass c);

/// Measurement outcomes against the ordered generators. Bit i is generator i;
/// the string form lists generator 1 first.
class Syndrome {
   public:
    Syndrome() = default;
    Syndrome(std::uint64_t bits, std::size_t size);

    bool operator[](std::size_t i) const { return (bits_ >> i) & 1u; }
    std::uint64_t bits() const { return bits_; }
    std::size_t size() const { return size_; }
    std::string to_string() const;

    friend bool operator==(const Syndrome&, const Syndrome&) = default;

   private:
    std::uint64_t bits_ = 0;
    std::size_t size_ = 0;
};

struct CodeOptions {
    /// Reject codes that do not encode exactly one logical qubit.
    bool require_single_logical = true;
    /// When set, reject any generator heavier than this.
    std::optional<std::size_t> max_generator_weight;
};

/// A stabilizer code given by independent, pairwise commuting generators.
///
/// For k = 1 the code also carries logical representatives, chosen as the
/// lightest normalizer elements outside the stabilizer group (ties broken by
/// enumeration index; logical X is chosen first, logical Z is the lightest
/// element anticommuting with it). Destabilizer i anticommutes with generator
/// i only and commutes with both logicals.
class StabilizerCode {
   public:
    /// Generators must be non-empty and share one qubit count.
    static StabilizerCode create(std::vector<PauliOperator> generators, const CodeOptions& options = {});

    /// As above, but an empty generator list is allowed (the trivial code).
    static StabilizerCode create(std::size_t n, std::vector<PauliOperator> generators,
                                 const CodeOptions& options = {});

    static StabilizerCode from_strings(const std::vector<std::string>& generators,
                                       const CodeOptions& options = {});

    std::size_t num_qubits() const { return n_; }
    std::size_t num_generators() const { return generators_.size(); }
    std::size_t num_logical() const { return n_ - generators_.size(); }
    std::size_t num_syndromes() const { return std::size_t{1} << generators_.size(); }

    const std::vector<PauliOperator>& generators() const { return generators_; }
    const std::vector<PauliOperator>& destabilizers() const { return destabilizers_; }

    bool has_logicals() const { return logical_x_.has_value(); }
    /// Throws ValidationError unless k = 1.
    const PauliOperator& logical_x() const;
    const PauliOperator& logical_z() const;

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    std::size_t max_generator_weight() const;

    Syndrome syndrome(const PauliOperator& e) const;

    /// Product of the destabilizers selected by s.
    PauliOperator pure_error(const Syndrome& s) const;

    LogicalClass logical_class(const PauliOperator& e) const;

    /// Representative error of coset (s, c): pure_error(s) times the logical
    /// operator for c.
    PauliOperator coset_representative(const Syndrome& s, LogicalClass c) const;

    bool in_stabilizer_group(const PauliOperator& e) const;

    /// Same code with replacement logicals; they must commute with every
    /// generator, lie outside the group, and anticommute with each other.
    StabilizerCode with_logicals(const PauliOperator& logical_x, const PauliOperator& logical_z) const;

    /// Same code with replacement destabilizers; syndrome(d_i) must be e_i.
    StabilizerCode with_destabilizers(std::vector<PauliOperator> destabilizers) const;

    /// Applies one qubit permutation (position i goes to perm[i]) to the
    /// generators, logicals and destabilizers.
    StabilizerCode permuted(std::span<const std::size_t> perm) const;

    /// Cell index syndrome * 4 + class for every Pauli in enumeration order.
    /// Requires k = 1 and n <= 8.
    std::vector<std::uint32_t> coset_cells() const;

   private:
    StabilizerCode() = default;

    void require_logicals(const char* what) const;

    std::size_t n_ = 0;
    std::vector<PauliOperator> generators_;
    std::vector<PauliOperator> destabilizers_;
    std::optional<PauliOperator> logical_x_;
    std::optional<PauliOperator> logical_z_;
    std::string label_;
};

/// Largest code the exhaustive routines (distance, logical scan, decoding)
/// accept.
inline constexpr std::size_t kMaxExhaustiveQubits = 8;

/// Minimum weight of a Pauli commuting with every generator whose logical
/// class is not I. Requires k = 1 and n <= 8.
std::size_t distance(const StabilizerCode& code);

/// [[7,1,3]] Steane code: three X checks of the Hamming code, then the same
/// three as Z checks.
StabilizerCode steane();
/// Shifts 0 through 5 of XZIZXII.
StabilizerCode cyclic7();
/// Shifts 0 through 3 of XZIZX.
StabilizerCode five_qubit();
/// Bit-flip checks XXI, IXX; protects against Z errors only.
StabilizerCode phase_flip3();

std::vector<std::string> named_code_labels();
std::optional<StabilizerCode> named_code(std::string_view label);

/// Reads {"n": 7, "generators": [...], "label": "..."}.
StabilizerCode code_from_json(std::string_view text, const CodeOptions& options = {});
StabilizerCode load_code_file(const std::filesystem::path& path, const CodeOptions& options = {});
std::string code_to_json(const StabilizerCode& code);

}  // namespace tailor
