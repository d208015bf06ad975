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

#include "tailor/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "tailor/diagnostics.hpp"
#include "tailor/numeric.hpp"

namespace tailor {

namespace {

constexpr double kNormalizationTolerance = 1e-9;

void check_dense_size(std::size_t n) {
    if (n == 0 || n > kMaxDenseQubits) {
        throw ValidationError("dense Pauli channels support 1 to " + std::to_string(kMaxDenseQubits) +
                              " qubits, got " + std::to_string(n));
    }
}

void check_same_size(const PauliChannel& a, const PauliChannel& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ValidationError("channels act on " + std::to_string(a.num_qubits()) + " and " +
                              std::to_string(b.num_qubits()) + " qubits");
    }
}

// In-place unnormalized Walsh-Hadamard transform over the index bits.
void walsh_hadamard(std::vector<double>& v) {
    for (std::size_t half = 1; half < v.size(); half <<= 1) {
        for (std::size_t block = 0; block < v.size(); block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                double a = v[i];
                double b = v[i + half];
                v[i] = a + b;
                v[i + half] = a - b;
            }
        }
    }
}

std::vector<double> clamp_and_normalize(std::vector<double> v) {
    for (double& x : v) {
        if (x < 0.0) {
            x = 0.0;
        }
    }
    double total = compensated_total(v);
    for (double& x : v) {
        x /= total;
    }
    return v;
}

}  // namespace

BiasedParams BiasedParams::from_rates(double r_x, double r_z) {
    for (double r : {r_x, r_z}) {
        if (!(r >= 0.0 && r < 1.0)) {
            throw ValidationError("bare flip rates must lie in [0, 1), got " + std::to_string(r));
        }
    }
    return BiasedParams{r_x, r_z};
}

BiasedParams BiasedParams::from_total_and_bias(double p, double eta) {
    if (!(p >= 0.0 && p < 1.0)) {
        throw ValidationError("total error probability must lie in [0, 1), got " + std::to_string(p));
    }
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw ValidationError("bias must be a positive finite number, got " + std::to_string(eta));
    }
    if (eta < 1.0) {
        warn("bias eta = " + std::to_string(eta) + " < 1: X errors dominate; parameters used as given");
    }
    if (p == 0.0) {
        return BiasedParams{0.0, 0.0};
    }
    // With p held fixed, r_z = 1 - (1 - p) / (1 - r_x) and the bias falls
    // monotonically from infinity at r_x = 0 to zero at r_x = p.
    auto r_z_of = [p](double r_x) { return std::max(0.0, 1.0 - (1.0 - p) / (1.0 - r_x)); };
    double lo = 0.0;
    double hi = p;
    for (int iter = 0; iter < 2000; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        BiasedParams trial{mid, r_z_of(mid)};
        if (trial.p_z() > eta * trial.p_x()) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    BiasedParams a{lo, r_z_of(lo)};
    BiasedParams b{hi, r_z_of(hi)};
    auto miss = [eta](const BiasedParams& q) { return std::abs(q.p_z() - eta * q.p_x()); };
    return miss(a) <= miss(b) ? a : b;
}

PauliChannel::PauliChannel(std::size_t n, std::vector<double> probabilities) : n_(n), probs_(std::move(probabilities)) {
    check_dense_size(n);
    if (probs_.size() != pauli_count(n)) {
        throw ValidationError("a channel on " + std::to_string(n) + " qubits needs " + std::to_string(pauli_count(n)) +
                              " probabilities, got " + std::to_string(probs_.size()));
    }
    for (double v : probs_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ValidationError("channel probabilities must be finite and non-negative, got " + std::to_string(v));
        }
    }
    double total = compensated_total(probs_);
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw ValidationError("channel probabilities sum to " + std::to_string(total) + ", expected 1");
    }
}

PauliChannel PauliChannel::identity(std::size_t n) {
    check_dense_size(n);
    std::vector<double> probs(pauli_count(n), 0.0);
    probs[0] = 1.0;
    return PauliChannel(n, std::move(probs));
}

PauliChannel PauliChannel::point_mass(const PauliOperator& p) {
    check_dense_size(p.num_qubits());
    std::vector<double> probs(pauli_count(p.num_qubits()), 0.0);
    probs[p.index()] = 1.0;
    return PauliChannel(p.num_qubits(), std::move(probs));
}

double PauliChannel::probability(const PauliOperator& p) const {
    if (p.num_qubits() != n_) {
        throw ValidationError("operator size does not match channel");
    }
    return probs_[p.index()];
}

PauliChannel PauliChannel::permuted(std::span<const std::size_t> perm) const {
    std::vector<double> out(probs_.size(), 0.0);
    for (std::uint64_t idx = 0; idx < probs_.size(); ++idx) {
        out[PauliOperator::from_index(n_, idx).permute(perm).index()] = probs_[idx];
    }
    return PauliChannel(n_, std::move(out));
}

PauliChannel biased_single_qubit(const BiasedParams& params) {
    BiasedParams checked = BiasedParams::from_rates(params.r_x, params.r_z);
    double none = (1.0 - checked.r_x) * (1.0 - checked.r_z);
    // Enumeration order per qubit is I, X, Z, Y.
    return PauliChannel(1, {none, checked.p_x(), checked.p_z(), checked.p_y()});
}

PauliChannel iid(const PauliChannel& single, std::size_t n) {
    if (single.num_qubits() != 1) {
        throw ValidationError("iid needs a single-qubit channel");
    }
    check_dense_size(n);
    std::vector<double> probs(pauli_count(n));
    for (std::uint64_t idx = 0; idx < probs.size(); ++idx) {
        double v = 1.0;
        for (std::size_t q = 0; q < n; ++q) {
            v *= single[(idx >> (2 * q)) & 3u];
        }
        probs[idx] = v;
    }
    return PauliChannel(n, std::move(probs));
}

PauliChannel compose_direct(const PauliChannel& a, const PauliChannel& b) {
    check_same_size(a, b);
    const std::size_t count = a.probabilities().size();
    std::vector<double> out(count);
    for (std::size_t q = 0; q < count; ++q) {
        CompensatedSum s;
        for (std::size_t p = 0; p < count; ++p) {
            s.add(a[q ^ p] * b[p]);
        }
        out[q] = s.value();
    }
    return PauliChannel(a.num_qubits(), clamp_and_normalize(std::move(out)));
}

PauliChannel compose_transform(const PauliChannel& a, const PauliChannel& b) {
    check_same_size(a, b);
    std::vector<double> fa(a.probabilities().begin(), a.probabilities().end());
    std::vector<double> fb(b.probabilities().begin(), b.probabilities().end());
    walsh_hadamard(fa);
    walsh_hadamard(fb);
    for (std::size_t i = 0; i < fa.size(); ++i) {
        fa[i] *= fb[i];
    }
    walsh_hadamard(fa);
    const double scale = 1.0 / static_cast<double>(fa.size());
    for (double& v : fa) {
        v *= scale;
    }
    // Round-off can leave entries a few ulps below zero.
    return PauliChannel(a.num_qubits(), clamp_and_normalize(std::move(fa)));
}

PauliChannel compose(const PauliChannel& a, const PauliChannel& b) {
    return a.num_qubits() <= 4 ? compose_direct(a, b) : compose_transform(a, b);
}

PauliChannel convex(std::span<const PauliChannel> channels, std::span<const double> weights) {
    if (channels.empty()) {
        throw ValidationError("convex combination of no channels");
    }
    if (channels.size() != weights.size()) {
        throw ValidationError("need one weight per channel");
    }
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw ValidationError("mixture weights must be non-negative");
        }
    }
    if (std::abs(compensated_total(weights) - 1.0) > kNormalizationTolerance) {
        throw ValidationError("mixture weights sum to " + std::to_string(compensated_total(weights)) + ", expected 1");
    }
    const std::size_t n = channels.front().num_qubits();
    std::vector<CompensatedSum> acc(pauli_count(n));
    for (std::size_t c = 0; c < channels.size(); ++c) {
        check_same_size(channels.front(), channels[c]);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i].add(weights[c] * channels[c][i]);
        }
    }
    std::vector<double> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        out[i] = acc[i].value();
    }
    return PauliChannel(n, std::move(out));
}

PauliChannel embed(const PauliChannel& two_qubit, std::size_t n, std::size_t i, std::size_t j) {
    if (two_qubit.num_qubits() != 2) {
        throw ValidationError("embed needs a 2-qubit channel");
    }
    check_dense_size(n);
    if (i < 1 || i > n || j < 1 || j > n) {
        throw ValidationError("qubit indices (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range 1.." +
                              std::to_string(n));
    }
    if (i == j) {
        throw ValidationError("embed needs two distinct qubits");
    }
    std::vector<double> probs(pauli_count(n), 0.0);
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        std::uint64_t first = (idx >> 2) & 3u;
        std::uint64_t second = idx & 3u;
        probs[(first << (2 * (n - i))) | (second << (2 * (n - j)))] = two_qubit[idx];
    }
    return PauliChannel(n, std::move(probs));
}

std::string to_string(Extrapolation e) {
    switch (e) {
        case Extrapolation::Convex:
            return "convex";
        case Extrapolation::ConvexProduct:
            return "convex-product";
        case Extrapolation::Product:
            return "product";
    }
    return "?";
}

Extrapolation parse_extrapolation(std::string_view name) {
    if (name == "convex") return Extrapolation::Convex;
    if (name == "convex-product") return Extrapolation::ConvexProduct;
    if (name == "product") return Extrapolation::Product;
    throw ValidationError("unknown extrapolation '" + std::string(name) +
                          "' (expected convex, convex-product or product)");
}

namespace {

void check_line(const PauliChannel& two_qubit, std::size_t n) {
    if (two_qubit.num_qubits() != 2) {
        throw ValidationError("extrapolation needs a 2-qubit channel");
    }
    if (n < 2) {
        throw ValidationError("extrapolation needs a line of at least 2 qubits");
    }
}

PauliChannel product_over_pairs(const PauliChannel& two_qubit, std::size_t n, std::size_t first, std::size_t step) {
    PauliChannel out = PauliChannel::identity(n);
    for (std::size_t j = first; j + 1 <= n; j += step) {
        out = compose(out, embed(two_qubit, n, j, j + 1));
    }
    return out;
}

}  // namespace

PauliChannel extrapolate_convex(const PauliChannel& two_qubit, std::size_t n) {
    check_line(two_qubit, n);
    std::vector<PauliChannel> parts;
    for (std::size_t j = 1; j < n; ++j) {
        parts.push_back(embed(two_qubit, n, j, j + 1));
    }
    std::vector<double> weights(parts.size(), 1.0 / static_cast<double>(parts.size()));
    return convex(parts, weights);
}

PauliChannel extrapolate_convex_product(const PauliChannel& two_qubit, std::size_t n) {
    check_line(two_qubit, n);
    std::vector<PauliChannel> branches{product_over_pairs(two_qubit, n, 1, 2)};
    if (n >= 3) {
        branches.push_back(product_over_pairs(two_qubit, n, 2, 2));
    } else {
        branches.push_back(branches.front());
    }
    const double half[2] = {0.5, 0.5};
    return convex(branches, half);
}

PauliChannel extrapolate_product(const PauliChannel& two_qubit, std::size_t n) {
    check_line(two_qubit, n);
    return product_over_pairs(two_qubit, n, 1, 1);
}

PauliChannel extrapolate(const PauliChannel& two_qubit, Extrapolation how, std::size_t n) {
    switch (how) {
        case Extrapolation::Convex:
            return extrapolate_convex(two_qubit, n);
        case Extrapolation::ConvexProduct:
            return extrapolate_convex_product(two_qubit, n);
        case Extrapolation::Product:
            return extrapolate_product(two_qubit, n);
    }
    throw ValidationError("unknown extrapolation");
}

PauliChannel channel_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("channel file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
        throw ValidationError("channel file needs a positive integer \"n\"");
    }
    if (!doc.contains("probs") || !doc["probs"].is_object()) {
        throw ValidationError("channel file needs a \"probs\" object");
    }
    auto n = doc["n"].get<std::size_t>();
    check_dense_size(n);
    std::vector<double> probs(pauli_count(n), 0.0);
    for (const auto& [key, value] : doc["probs"].items()) {
        auto p = PauliOperator::from_string(key);
        if (p.num_qubits() != n) {
            throw ValidationError("channel entry \"" + key + "\" does not have " + std::to_string(n) + " letters");
        }
        if (!value.is_number()) {
            throw ValidationError("channel entry \"" + key + "\" is not a number");
        }
        double v = value.get<double>();
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ValidationError("channel entry \"" + key + "\" is negative or not finite");
        }
        probs[p.index()] = v;
    }
    double total = compensated_total(probs);
    if (std::abs(total - 1.0) > 1e-6) {
        throw ValidationError("channel probabilities sum to " + std::to_string(total) + ", more than 1e-6 from 1");
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "channel probabilities sum to " << total << "; renormalized";
        warn(msg.str());
    }
    for (double& v : probs) {
        v /= total;
    }
    return PauliChannel(n, std::move(probs));
}

PauliChannel load_channel_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open channel file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return channel_from_json(buf.str());
}

std::string channel_to_json(const PauliChannel& channel) {
    nlohmann::json doc;
    doc["n"] = channel.num_qubits();
    doc["probs"] = nlohmann::json::object();
    for (std::uint64_t idx = 0; idx < channel.probabilities().size(); ++idx) {
        if (channel[idx] != 0.0) {
            doc["probs"][PauliOperator::from_index(channel.num_qubits(), idx).to_string()] = channel[idx];
        }
    }
    return doc.dump(2);
}

}  // namespace tailor
