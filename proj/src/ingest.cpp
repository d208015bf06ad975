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

#include "tailor/ingest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tailor/numeric.hpp"

namespace tailor {

namespace {

constexpr double kEntryTolerance = 1e-6;

const std::array<PauliOperator, 16>& ptm_paulis() {
    static const std::array<PauliOperator, 16> paulis = [] {
        std::array<PauliOperator, 16> out;
        for (std::size_t i = 0; i < 16; ++i) {
            out[i] = PauliOperator::from_string(kPtmOrder[i]);
        }
        return out;
    }();
    return paulis;
}

nlohmann::json parse_json(std::string_view text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string ptm_order_string() {
    std::string out;
    for (auto s : kPtmOrder) {
        if (!out.empty()) {
            out += ',';
        }
        out += s;
    }
    return out;
}

ChannelEstimate ChannelEstimate::from_ptm(const PtmMatrix& ptm, double tau_ms, std::string label) {
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            double v = ptm[r][c];
            if (!std::isfinite(v) || std::abs(v) > 1.0 + kEntryTolerance) {
                throw ValidationError("PTM entry (" + std::string(kPtmOrder[r]) + "," + std::string(kPtmOrder[c]) +
                                      ") = " + std::to_string(v) + " lies outside [-1, 1]");
            }
        }
    }
    ChannelEstimate est;
    est.ptm = ptm;
    est.tau_ms = tau_ms;
    est.label = std::move(label);
    if (std::abs(ptm[0][0] - 1.0) > kEntryTolerance) {
        est.warnings.push_back("R[II][II] = " + std::to_string(ptm[0][0]) + ": estimate is not trace preserving");
    }
    return est;
}

ChannelEstimate estimate_from_json(std::string_view text) {
    auto doc = parse_json(text, "PTM file");
    if (!doc.is_object()) {
        throw ValidationError("PTM file must hold a JSON object");
    }
    if (!doc.contains("n")) {
        throw ValidationError("PTM file is missing \"n\"");
    }
    if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != 2) {
        throw ValidationError("PTM file must describe a 2-qubit channel (\"n\": 2)");
    }
    if (doc.contains("basis") && doc["basis"] != "pauli") {
        throw ValidationError("PTM basis must be \"pauli\"");
    }
    if (doc.contains("order") && doc["order"] != ptm_order_string()) {
        throw ValidationError("PTM order must be \"" + ptm_order_string() + "\"");
    }
    if (!doc.contains("ptm")) {
        throw ValidationError("PTM file is missing \"ptm\"");
    }
    const auto& rows = doc["ptm"];
    if (!rows.is_array() || rows.size() != 16) {
        throw ValidationError("PTM must have 16 rows, got " + std::to_string(rows.is_array() ? rows.size() : 0));
    }
    PtmMatrix ptm{};
    for (std::size_t r = 0; r < 16; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 16) {
            throw ValidationError("PTM row " + std::to_string(r + 1) + " must have 16 entries");
        }
        for (std::size_t c = 0; c < 16; ++c) {
            if (!rows[r][c].is_number()) {
                throw ValidationError("PTM entry is not a number");
            }
            ptm[r][c] = rows[r][c].get<double>();
        }
    }
    double tau = 0.0;
    if (doc.contains("tau_ms")) {
        if (!doc["tau_ms"].is_number()) {
            throw ValidationError("\"tau_ms\" must be a number");
        }
        tau = doc["tau_ms"].get<double>();
    }
    std::string label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw ValidationError("\"label\" must be a string");
        }
        label = doc["label"].get<std::string>();
    }
    return ChannelEstimate::from_ptm(ptm, tau, std::move(label));
}

ChannelEstimate load_estimate(const std::filesystem::path& path) {
    auto est = estimate_from_json(read_file(path));
    if (est.label.empty()) {
        est.label = path.stem().string();
    }
    return est;
}

std::string estimate_to_json(const ChannelEstimate& estimate) {
    nlohmann::ordered_json doc;
    doc["n"] = 2;
    doc["basis"] = "pauli";
    doc["order"] = ptm_order_string();
    doc["ptm"] = estimate.ptm;
    doc["tau_ms"] = estimate.tau_ms;
    doc["label"] = estimate.label;
    return doc.dump(2);
}

PtmMatrix pauli_channel_ptm(const PauliChannel& channel) {
    if (channel.num_qubits() != 2) {
        throw ValidationError("PTMs are supported for 2-qubit channels only");
    }
    PtmMatrix ptm{};
    const auto& paulis = ptm_paulis();
    for (std::size_t p = 0; p < 16; ++p) {
        CompensatedSum d;
        for (std::size_t e = 0; e < 16; ++e) {
            double q = channel.probability(paulis[e]);
            d.add(symplectic_product(paulis[e], paulis[p]) ? -q : q);
        }
        ptm[p][p] = d.value();
    }
    return ptm;
}

std::array<double, 16> twirl_transform(const std::array<double, 16>& values) {
    const auto& paulis = ptm_paulis();
    std::array<double, 16> out{};
    for (std::size_t q = 0; q < 16; ++q) {
        CompensatedSum s;
        for (std::size_t p = 0; p < 16; ++p) {
            s.add(symplectic_product(paulis[p], paulis[q]) ? -values[p] : values[p]);
        }
        out[q] = s.value();
    }
    return out;
}

SanitizedChannel sanitize(std::size_t n, std::vector<double> probs, double max_clipped_mass) {
    if (probs.size() != pauli_count(n)) {
        throw ValidationError("sanitize needs " + std::to_string(pauli_count(n)) + " entries");
    }
    SanitizeReport report;
    CompensatedSum clipped;
    for (double& v : probs) {
        if (!std::isfinite(v)) {
            throw ValidationError("channel estimate has a non-finite entry");
        }
        if (v < 0.0) {
            clipped.add(-v);
            v = 0.0;
        }
    }
    report.clipped_mass = clipped.value();
    if (report.clipped_mass > max_clipped_mass) {
        throw ValidationError("twirled channel has negative probability mass " + std::to_string(report.clipped_mass) +
                              " above the allowed " + std::to_string(max_clipped_mass));
    }
    report.total_before_renormalization = compensated_total(probs);
    if (!(report.total_before_renormalization > 0.0)) {
        throw ValidationError("twirled channel has no positive probability mass");
    }
    for (double& v : probs) {
        v /= report.total_before_renormalization;
    }
    return {PauliChannel(n, std::move(probs)), report};
}

SanitizedChannel pauli_twirl(const ChannelEstimate& estimate, double max_clipped_mass) {
    std::array<double, 16> diagonal{};
    for (std::size_t p = 0; p < 16; ++p) {
        diagonal[p] = estimate.ptm[p][p];
    }
    auto transformed = twirl_transform(diagonal);
    const auto& paulis = ptm_paulis();
    std::vector<double> probs(16, 0.0);
    for (std::size_t q = 0; q < 16; ++q) {
        probs[paulis[q].index()] = transformed[q] / 16.0;
    }
    return sanitize(2, std::move(probs), max_clipped_mass);
}

TwoQubitInput load_two_qubit_input(const std::filesystem::path& path, double max_clipped_mass) {
    std::string text = read_file(path);
    auto doc = parse_json(text, path.string().c_str());
    if (doc.is_object() && doc.contains("ptm")) {
        auto est = estimate_from_json(text);
        if (est.label.empty()) {
            est.label = path.stem().string();
        }
        auto twirled = pauli_twirl(est, max_clipped_mass);
        return {twirled.channel, est.tau_ms, est.label, twirled.report, est.warnings};
    }
    if (doc.is_object() && doc.contains("probs")) {
        auto channel = channel_from_json(text);
        if (channel.num_qubits() != 2) {
            throw ValidationError(path.string() + ": expected a 2-qubit channel");
        }
        double tau = doc.contains("tau_ms") && doc["tau_ms"].is_number() ? doc["tau_ms"].get<double>() : 0.0;
        std::string label = doc.contains("label") && doc["label"].is_string() ? doc["label"].get<std::string>()
                                                                              : path.stem().string();
        return {channel, tau, label, SanitizeReport{}, {}};
    }
    throw ValidationError(path.string() + ": neither a PTM file (\"ptm\") nor a Pauli-probability file (\"probs\")");
}

}  // namespace tailor
