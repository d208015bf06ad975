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

#include "tailor/code.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tailor/gf2.hpp"

namespace tailor {

namespace {

// Row whose parity against a symplectic vector v gives symplectic_product.
std::uint64_t commutation_row(const PauliOperator& p) {
    return p.z_bits() | (p.x_bits() << p.num_qubits());
}

LogicalClass class_from_bits(int anticommutes_z, int anticommutes_x) {
    static constexpr LogicalClass kTable[4] = {LogicalClass::I, LogicalClass::X, LogicalClass::Z, LogicalClass::Y};
    return kTable[anticommutes_z | (anticommutes_x << 1)];
}

std::string join_indices(std::uint64_t mask) {
    std::string out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1) {
        if (mask & 1u) {
            if (!out.empty()) {
                out += ", ";
            }
            out += std::to_string(i + 1);
        }
    }
    return out;
}

}  // namespace

char to_char(LogicalClass c) {
    switch (c) {
        case LogicalClass::I:
            return 'I';
        case LogicalClass::X:
            return 'X';
        case LogicalClass::Y:
            return 'Y';
        case LogicalClass::Z:
            return 'Z';
    }
    return '?';
}

Syndrome::Syndrome(std::uint64_t bits, std::size_t size) : bits_(bits), size_(size) {
    if (size > 64 || (size < 64 && (bits >> size))) {
        throw ValidationError("syndrome bits exceed its length");
    }
}

std::string Syndrome::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

StabilizerCode StabilizerCode::create(std::vector<PauliOperator> generators, const CodeOptions& options) {
    if (generators.empty()) {
        throw ValidationError("a stabilizer code needs at least one generator");
    }
    std::size_t n = generators.front().num_qubits();
    return create(n, std::move(generators), options);
}

StabilizerCode StabilizerCode::from_strings(const std::vector<std::string>& generators, const CodeOptions& options) {
    std::vector<PauliOperator> ops;
    ops.reserve(generators.size());
    for (const auto& g : generators) {
        ops.push_back(PauliOperator::from_string(g));
    }
    return create(std::move(ops), options);
}

StabilizerCode StabilizerCode::create(std::size_t n, std::vector<PauliOperator> generators,
                                      const CodeOptions& options) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw ValidationError("unsupported qubit count " + std::to_string(n));
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].num_qubits() != n) {
            throw ValidationError("generator " + std::to_string(i + 1) + " acts on " +
                                  std::to_string(generators[i].num_qubits()) + " qubits, expected " +
                                  std::to_string(n));
        }
        if (options.max_generator_weight && generators[i].weight() > *options.max_generator_weight) {
            throw ValidationError("generator " + std::to_string(i + 1) + " (" + generators[i].to_string() +
                                  ") has weight " + std::to_string(generators[i].weight()) + " > " +
                                  std::to_string(*options.max_generator_weight));
        }
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            if (symplectic_product(generators[i], generators[j])) {
                throw ValidationError("generators " + std::to_string(i + 1) + " (" + generators[i].to_string() +
                                      ") and " + std::to_string(j + 1) + " (" + generators[j].to_string() +
                                      ") anticommute");
            }
        }
    }
    gf2::IncrementalBasis basis(2 * n);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (auto dep = basis.dependency(generators[i].symplectic_vector())) {
            if (*dep == 0) {
                throw ValidationError("generator " + std::to_string(i + 1) + " is the identity");
            }
            throw ValidationError("generator " + std::to_string(i + 1) + " (" + generators[i].to_string() +
                                  ") is dependent: it equals the product of generators " + join_indices(*dep));
        }
        basis.add(generators[i].symplectic_vector());
    }

    StabilizerCode code;
    code.n_ = n;
    code.generators_ = std::move(generators);
    std::size_t k = code.num_logical();
    if (options.require_single_logical && k != 1) {
        throw ValidationError("code encodes " + std::to_string(k) + " logical qubits; exactly 1 is required");
    }

    std::vector<std::uint64_t> rows;
    for (const auto& g : code.generators_) {
        rows.push_back(commutation_row(g));
    }

    if (k == 1) {
        std::vector<PauliOperator> normalizer;
        if (n <= kMaxExhaustiveQubits) {
            // Syndromes are linear in the enumeration index.
            std::vector<std::uint64_t> basis_syndrome(2 * n);
            for (std::size_t b = 0; b < 2 * n; ++b) {
                auto v = PauliOperator::from_index(n, std::uint64_t{1} << b).symplectic_vector();
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    basis_syndrome[b] |= static_cast<std::uint64_t>(gf2::parity(rows[j] & v)) << j;
                }
            }
            std::uint64_t count = pauli_count(n);
            std::vector<std::uint64_t> syndromes(count, 0);
            for (std::uint64_t idx = 1; idx < count; ++idx) {
                syndromes[idx] = syndromes[idx & (idx - 1)] ^ basis_syndrome[std::countr_zero(idx)];
                if (syndromes[idx] == 0) {
                    auto p = PauliOperator::from_index(n, idx);
                    if (!basis.contains(p.symplectic_vector())) {
                        normalizer.push_back(p);
                    }
                }
            }
            std::stable_sort(normalizer.begin(), normalizer.end(),
                             [](const PauliOperator& a, const PauliOperator& b) { return a.weight() < b.weight(); });
        } else {
            for (auto v : gf2::nullspace(rows, 2 * n)) {
                auto p = PauliOperator::from_symplectic_vector(n, v);
                if (!basis.contains(v)) {
                    normalizer.push_back(p);
                }
            }
            // Any element outside the group pairs with some basis element.
            for (auto v : gf2::nullspace(rows, 2 * n)) {
                normalizer.push_back(PauliOperator::from_symplectic_vector(n, v));
            }
        }
        if (normalizer.empty()) {
            throw ValidationError("internal error: no logical operator found");
        }
        code.logical_x_ = normalizer.front();
        for (const auto& p : normalizer) {
            if (symplectic_product(p, *code.logical_x_)) {
                code.logical_z_ = p;
                break;
            }
        }
        if (!code.logical_z_) {
            throw ValidationError("internal error: no logical partner found");
        }
        rows.push_back(commutation_row(*code.logical_x_));
        rows.push_back(commutation_row(*code.logical_z_));
    }

    for (std::size_t i = 0; i < code.generators_.size(); ++i) {
        auto v = gf2::solve(rows, 2 * n, std::uint64_t{1} << i);
        if (!v) {
            throw ValidationError("internal error: destabilizer system is inconsistent");
        }
        code.destabilizers_.push_back(PauliOperator::from_symplectic_vector(n, *v));
    }
    return code;
}

void StabilizerCode::require_logicals(const char* what) const {
    if (!has_logicals()) {
        throw ValidationError(std::string(what) + " needs a code with exactly one logical qubit, this one has " +
                              std::to_string(num_logical()));
    }
}

const PauliOperator& StabilizerCode::logical_x() const {
    require_logicals("logical_x");
    return *logical_x_;
}

const PauliOperator& StabilizerCode::logical_z() const {
    require_logicals("logical_z");
    return *logical_z_;
}

std::size_t StabilizerCode::max_generator_weight() const {
    std::size_t w = 0;
    for (const auto& g : generators_) {
        w = std::max(w, g.weight());
    }
    return w;
}

Syndrome StabilizerCode::syndrome(const PauliOperator& e) const {
    if (e.num_qubits() != n_) {
        throw ValidationError("error acts on " + std::to_string(e.num_qubits()) + " qubits, code has " +
                              std::to_string(n_));
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        bits |= static_cast<std::uint64_t>(symplectic_product(e, generators_[i])) << i;
    }
    return Syndrome(bits, generators_.size());
}

PauliOperator StabilizerCode::pure_error(const Syndrome& s) const {
    if (s.size() != generators_.size()) {
        throw ValidationError("syndrome length does not match generator count");
    }
    PauliOperator t(n_);
    for (std::size_t i = 0; i < destabilizers_.size(); ++i) {
        if (s[i]) {
            t *= destabilizers_[i];
        }
    }
    return t;
}

LogicalClass StabilizerCode::logical_class(const PauliOperator& e) const {
    require_logicals("logical_class");
    PauliOperator normal = e * pure_error(syndrome(e));
    return class_from_bits(symplectic_product(normal, *logical_z_), symplectic_product(normal, *logical_x_));
}

PauliOperator StabilizerCode::coset_representative(const Syndrome& s, LogicalClass c) const {
    require_logicals("coset_representative");
    PauliOperator r = pure_error(s);
    if (c == LogicalClass::X || c == LogicalClass::Y) {
        r *= *logical_x_;
    }
    if (c == LogicalClass::Z || c == LogicalClass::Y) {
        r *= *logical_z_;
    }
    return r;
}

bool StabilizerCode::in_stabilizer_group(const PauliOperator& e) const {
    if (e.num_qubits() != n_) {
        throw ValidationError("operator size does not match code");
    }
    gf2::IncrementalBasis basis(2 * n_);
    for (const auto& g : generators_) {
        basis.add(g.symplectic_vector());
    }
    return basis.contains(e.symplectic_vector());
}

StabilizerCode StabilizerCode::with_logicals(const PauliOperator& logical_x, const PauliOperator& logical_z) const {
    require_logicals("with_logicals");
    for (const auto* l : {&logical_x, &logical_z}) {
        if (syndrome(*l).bits() != 0) {
            throw ValidationError("logical " + l->to_string() + " does not commute with the stabilizers");
        }
        if (in_stabilizer_group(*l)) {
            throw ValidationError("logical " + l->to_string() + " lies in the stabilizer group");
        }
    }
    if (!symplectic_product(logical_x, logical_z)) {
        throw ValidationError("logical X and Z must anticommute");
    }
    StabilizerCode copy = *this;
    copy.logical_x_ = logical_x;
    copy.logical_z_ = logical_z;
    return copy;
}

StabilizerCode StabilizerCode::with_destabilizers(std::vector<PauliOperator> destabilizers) const {
    if (destabilizers.size() != generators_.size()) {
        throw ValidationError("need one destabilizer per generator");
    }
    for (std::size_t i = 0; i < destabilizers.size(); ++i) {
        if (syndrome(destabilizers[i]).bits() != (std::uint64_t{1} << i)) {
            throw ValidationError("destabilizer " + std::to_string(i + 1) + " does not flip only generator " +
                                  std::to_string(i + 1));
        }
    }
    StabilizerCode copy = *this;
    copy.destabilizers_ = std::move(destabilizers);
    return copy;
}

StabilizerCode StabilizerCode::permuted(std::span<const std::size_t> perm) const {
    StabilizerCode copy = *this;
    for (auto& g : copy.generators_) {
        g = g.permute(perm);
    }
    for (auto& d : copy.destabilizers_) {
        d = d.permute(perm);
    }
    if (copy.logical_x_) {
        copy.logical_x_ = copy.logical_x_->permute(perm);
        copy.logical_z_ = copy.logical_z_->permute(perm);
    }
    return copy;
}

std::vector<std::uint32_t> StabilizerCode::coset_cells() const {
    require_logicals("coset_cells");
    if (n_ > kMaxExhaustiveQubits) {
        throw ValidationError("exhaustive enumeration is limited to " + std::to_string(kMaxExhaustiveQubits) +
                              " qubits");
    }
    const std::size_t m = generators_.size();
    const std::uint64_t count = pauli_count(n_);

    // (syndrome, commutation with the logicals) is linear in the index, so
    // fill it in from the basis operators; the pure-error correction then
    // depends only on the syndrome.
    std::vector<std::uint32_t> basis_signature(2 * n_);
    for (std::size_t b = 0; b < 2 * n_; ++b) {
        auto p = PauliOperator::from_index(n_, std::uint64_t{1} << b);
        auto raw = static_cast<std::uint32_t>(symplectic_product(p, *logical_z_) |
                                              (symplectic_product(p, *logical_x_) << 1));
        basis_signature[b] = static_cast<std::uint32_t>(syndrome(p).bits()) | (raw << m);
    }
    std::vector<std::uint32_t> correction(std::size_t{1} << m);
    for (std::uint64_t s = 0; s < correction.size(); ++s) {
        auto t = pure_error(Syndrome(s, m));
        correction[s] = static_cast<std::uint32_t>(symplectic_product(t, *logical_z_) |
                                                   (symplectic_product(t, *logical_x_) << 1));
    }

    static constexpr std::uint32_t kClassCode[4] = {0, 1, 3, 2};  // I, X, Z, Y bit pairs
    std::vector<std::uint32_t> signature(count);
    std::vector<std::uint32_t> cells(count);
    const std::uint32_t syndrome_mask = (std::uint32_t{1} << m) - 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (idx != 0) {
            signature[idx] = signature[idx & (idx - 1)] ^ basis_signature[std::countr_zero(idx)];
        }
        std::uint32_t s = signature[idx] & syndrome_mask;
        std::uint32_t pair = (signature[idx] >> m) ^ correction[s];
        cells[idx] = s * 4 + kClassCode[pair];
    }
    return cells;
}

std::size_t distance(const StabilizerCode& code) {
    if (code.num_logical() != 1) {
        throw ValidationError("distance needs a code with exactly one logical qubit");
    }
    if (code.num_qubits() > kMaxExhaustiveQubits) {
        throw ValidationError("distance scan is limited to " + std::to_string(kMaxExhaustiveQubits) + " qubits, code has " +
                              std::to_string(code.num_qubits()));
    }
    auto cells = code.coset_cells();
    std::size_t best = code.num_qubits() + 1;
    for (std::uint64_t idx = 0; idx < cells.size(); ++idx) {
        // Syndrome zero, class not I.
        if (cells[idx] >= 1 && cells[idx] <= 3) {
            auto w = static_cast<std::size_t>(std::popcount((idx | (idx >> 1)) & 0x5555555555555555ull));
            best = std::min(best, w);
        }
    }
    return best;
}

namespace {

StabilizerCode labeled(StabilizerCode code, std::string label) {
    code.set_label(std::move(label));
    return code;
}

std::vector<std::string> cyclic_shifts(const std::string& seed, std::size_t count) {
    auto p = PauliOperator::from_string(seed);
    std::vector<std::string> out;
    for (std::size_t k = 0; k < count; ++k) {
        out.push_back(p.cyclic_shift(static_cast<long long>(k)).to_string());
    }
    return out;
}

}  // namespace

StabilizerCode steane() {
    return labeled(StabilizerCode::from_strings({"XIXIXIX", "IXXIIXX", "IIIXXXX", "ZIZIZIZ", "IZZIIZZ", "IIIZZZZ"}),
                   "steane");
}

StabilizerCode cyclic7() { return labeled(StabilizerCode::from_strings(cyclic_shifts("XZIZXII", 6)), "cyclic7"); }

StabilizerCode five_qubit() { return labeled(StabilizerCode::from_strings(cyclic_shifts("XZIZX", 4)), "five_qubit"); }

StabilizerCode phase_flip3() { return labeled(StabilizerCode::from_strings({"XXI", "IXX"}), "phase_flip3"); }

std::vector<std::string> named_code_labels() { return {"steane", "cyclic7", "five_qubit", "phase_flip3"}; }

std::optional<StabilizerCode> named_code(std::string_view label) {
    if (label == "steane") return steane();
    if (label == "cyclic7") return cyclic7();
    if (label == "five_qubit") return five_qubit();
    if (label == "phase_flip3") return phase_flip3();
    return std::nullopt;
}

StabilizerCode code_from_json(std::string_view text, const CodeOptions& options) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("code file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array()) {
        throw ValidationError("code file needs a \"generators\" array");
    }
    std::vector<PauliOperator> gens;
    for (const auto& g : doc["generators"]) {
        if (!g.is_string()) {
            throw ValidationError("code generators must be Pauli strings");
        }
        gens.push_back(PauliOperator::from_string(g.get<std::string>()));
    }
    std::size_t n = 0;
    if (doc.contains("n")) {
        if (!doc["n"].is_number_unsigned()) {
            throw ValidationError("code field \"n\" must be a positive integer");
        }
        n = doc["n"].get<std::size_t>();
    } else if (!gens.empty()) {
        n = gens.front().num_qubits();
    } else {
        throw ValidationError("code file without generators must state \"n\"");
    }
    auto code = StabilizerCode::create(n, std::move(gens), options);
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw ValidationError("code field \"label\" must be a string");
        }
        code.set_label(doc["label"].get<std::string>());
    }
    return code;
}

StabilizerCode load_code_file(const std::filesystem::path& path, const CodeOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open code file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto code = code_from_json(buf.str(), options);
    if (code.label().empty()) {
        code.set_label(path.stem().string());
    }
    return code;
}

std::string code_to_json(const StabilizerCode& code) {
    nlohmann::json doc;
    doc["n"] = code.num_qubits();
    doc["generators"] = nlohmann::json::array();
    for (const auto& g : code.generators()) {
        doc["generators"].push_back(g.to_string());
    }
    if (!code.label().empty()) {
        doc["label"] = code.label();
    }
    return doc.dump(2);
}

}  // namespace tailor
