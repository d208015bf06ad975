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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tailor/channel.hpp"

namespace tailor {

/// Row and column order of a 2-qubit Pauli transfer matrix: base 4 with the
/// first qubit most significant and letters ordered I, X, Y, Z.
inline constexpr std::array<std::string_view, 16> kPtmOrder = {"II", "IX", "IY", "IZ", "XI", "XX", "XY", "XZ",
                                                               "YI", "YX", "YY", "YZ", "ZI", "ZX", "ZY", "ZZ"};

/// Comma-joined kPtmOrder, as written in estimate files.
std::string ptm_order_string();

/// R[P][Q] = Tr(P Lambda(Q)) / 4.
using PtmMatrix = std::array<std::array<double, 16>, 16>;

/// A reconstructed 2-qubit process plus experiment metadata.
struct ChannelEstimate {
    PtmMatrix ptm{};
    double tau_ms = 0.0;
    std::string label;
    /// Non-fatal findings, e.g. R[II][II] != 1.
    std::vector<std::string> warnings;

    /// Checks entries lie within [-1 - 1e-6, 1 + 1e-6] and records a warning
    /// when R[II][II] is more than 1e-6 from 1.
    static ChannelEstimate from_ptm(const PtmMatrix& ptm, double tau_ms = 0.0, std::string label = {});
};

ChannelEstimate estimate_from_json(std::string_view text);
ChannelEstimate load_estimate(const std::filesystem::path& path);
std::string estimate_to_json(const ChannelEstimate& estimate);

/// Pauli transfer matrix of a 2-qubit Pauli channel (diagonal).
PtmMatrix pauli_channel_ptm(const PauliChannel& channel);

struct SanitizeReport {
    /// Total magnitude of the negative entries that were set to zero.
    double clipped_mass = 0.0;
    /// Sum after clipping, before renormalization.
    double total_before_renormalization = 1.0;
};

struct SanitizedChannel {
    PauliChannel channel;
    SanitizeReport report;
};

inline constexpr double kDefaultMaxClippedMass = 0.05;

/// Clips negative entries (indexed in PauliOperator enumeration order) and
/// renormalizes. Throws ValidationError when the clipped mass exceeds
/// `max_clipped_mass`.
SanitizedChannel sanitize(std::size_t n, std::vector<double> probs, double max_clipped_mass = kDefaultMaxClippedMass);

/// Averages the estimate over conjugation by the 16 two-qubit Paulis. Only
/// the PTM diagonal d survives: Pr(Q) = (1/16) sum_P d[P] (-1)^<P,Q>.
SanitizedChannel pauli_twirl(const ChannelEstimate& estimate, double max_clipped_mass = kDefaultMaxClippedMass);

/// The same sign transform on a bare diagonal, in kPtmOrder; no sanitizing.
/// Output is in kPtmOrder too.
std::array<double, 16> twirl_transform(const std::array<double, 16>& values);

/// A twirled PTM file or a Pauli-probability file, ready for extrapolation.
struct TwoQubitInput {
    PauliChannel channel;
    double tau_ms = 0.0;
    std::string label;
    SanitizeReport report;
    std::vector<std::string> warnings;
};

/// Files with a "ptm" key are twirled and sanitized; files with a "probs"
/// key are read as Pauli channels (optional "tau_ms" and "label" honored).
TwoQubitInput load_two_qubit_input(const std::filesystem::path& path,
                                   double max_clipped_mass = kDefaultMaxClippedMass);

}  // namespace tailor
