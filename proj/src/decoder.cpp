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

#include <algorithm>
#include <bit>
#include <complex>

#include "json.hpp"
#include "tailor/detail/pauli_matrix.hpp"
#include "tailor/numeric.hpp"

namespace tailor {

namespace {

void check_inputs(const StabilizerCode& code, const PauliChannel& channel) {
    if (code.num_qubits() != channel.num_qubits()) {
        throw ValidationError("code has " + std::to_string(code.num_qubits()) + " qubits but channel has " +
                              std::to_string(channel.num_qubits()));
    }
    if (code.num_logical() != 1) {
        throw ValidationError("decoding needs a code with exactly one logical qubit, this one has " +
                              std::to_string(code.num_logical()));
    }
    if (code.num_qubits() > kMaxExhaustiveQubits) {
        throw ValidationError("exhaustive decoding is limited to " + std::to_string(kMaxExhaustiveQubits) + " qubits");
    }
}

}  // namespace

CosetProbabilities coset_probabilities(const StabilizerCode& code, const PauliChannel& channel) {
    check_inputs(code, channel);
    auto cells = code.coset_cells();
    std::vector<CompensatedSum> acc(code.num_syndromes() * 4);
    for (std::size_t idx = 0; idx < cells.size(); ++idx) {
        acc[cells[idx]].add(channel[idx]);
    }
    CosetProbabilities out(code.num_syndromes());
    for (std::size_t s = 0; s < out.size(); ++s) {
        for (std::size_t c = 0; c < 4; ++c) {
            out[s][c] = acc[4 * s + c].value();
        }
    }
    return out;
}

DecoderTable::DecoderTable(StabilizerCode code, const CosetProbabilities& probs) : code_(std::move(code)) {
    if (probs.size() != code_.num_syndromes()) {
        throw ValidationError("coset table has " + std::to_string(probs.size()) + " syndromes, code has " +
                              std::to_string(code_.num_syndromes()));
    }
    decisions_.reserve(probs.size());
    for (std::size_t s = 0; s < probs.size(); ++s) {
        std::size_t best = 0;
        for (std::size_t c = 1; c < 4; ++c) {
            if (probs[s][c] > probs[s][best]) {
                best = c;
            }
        }
        Syndrome syn(s, code_.num_generators());
        auto chosen = static_cast<LogicalClass>(best);
        decisions_.push_back({syn, chosen, code_.coset_representative(syn, chosen), probs[s]});
    }
}

double DecoderTable::logical_error_rate() const {
    CompensatedSum failure;
    for (const auto& d : decisions_) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (c != static_cast<std::size_t>(d.chosen)) {
                failure.add(d.class_probs[c]);
            }
        }
    }
    return failure.value();
}

std::string DecoderTable::to_json() const {
    auto doc = nlohmann::json::array();
    for (const auto& d : decisions_) {
        doc.push_back({{"syndrome", d.syndrome.to_string()},
                       {"recovery", d.recovery.to_string()},
                       {"class_probs", d.class_probs}});
    }
    return doc.dump(2);
}

DecoderTable optimal_decoder(const StabilizerCode& code, const PauliChannel& channel) {
    return DecoderTable(code, coset_probabilities(code, channel));
}

double logical_error_rate(const StabilizerCode& code, const PauliChannel& channel) {
    check_inputs(code, channel);
    auto probs = coset_probabilities(code, channel);
    CompensatedSum failure;
    for (const auto& row : probs) {
        auto best = static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
        for (std::size_t c = 0; c < 4; ++c) {
            if (c != best) {
                failure.add(row[c]);
            }
        }
    }
    return failure.value();
}

namespace detail {

Eigen::MatrixXcd pauli_matrix(const PauliOperator& p) {
    using M2 = Eigen::Matrix2cd;
    const std::complex<double> i(0.0, 1.0);
    M2 id = M2::Identity();
    M2 x;
    x << 0, 1, 1, 0;
    M2 y;
    y << 0, -i, i, 0;
    M2 z;
    z << 1, 0, 0, -1;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t q = p.num_qubits(); q-- > 0;) {
        const M2* f = &id;
        switch (p.letter(q)) {
            case 'X':
                f = &x;
                break;
            case 'Y':
                f = &y;
                break;
            case 'Z':
                f = &z;
                break;
            default:
                break;
        }
        Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                next.block<2, 2>(2 * r, 2 * c) = m(r, c) * (*f);
            }
        }
        m = std::move(next);
    }
    return m;
}

Eigen::VectorXcd apply_pauli(const PauliOperator& p, const Eigen::VectorXcd& state, Eigen::Index stride) {
    const auto dim = Eigen::Index{1} << p.num_qubits();
    if (state.size() != dim * stride) {
        throw ValidationError("state size does not match Pauli operator");
    }
    static const std::complex<double> kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::uint64_t x = p.x_bits();
    const std::uint64_t z = p.z_bits();
    const auto global = kPowers[std::popcount(x & z) & 3];
    Eigen::VectorXcd out(state.size());
    for (Eigen::Index b = 0; b < dim; ++b) {
        auto target = static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ x);
        // Y = iXZ, so Z acts first and its sign depends on the incoming bit.
        double sign = (std::popcount(z & static_cast<std::uint64_t>(b)) & 1) ? -1.0 : 1.0;
        out.segment(target * stride, stride) = (global * sign) * state.segment(b * stride, stride);
    }
    return out;
}

}  // namespace detail

double density_matrix_oracle(const DecoderTable& table, const PauliChannel& channel) {
    const StabilizerCode& code = table.code();
    check_inputs(code, channel);
    const std::size_t n = code.num_qubits();
    if (n > kMaxOracleQubits) {
        throw ValidationError("density-matrix oracle is limited to " + std::to_string(kMaxOracleQubits) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

    std::vector<Eigen::MatrixXcd> generators;
    Eigen::MatrixXcd code_projector = id;
    for (const auto& g : code.generators()) {
        generators.push_back(detail::pauli_matrix(g));
        code_projector = code_projector * (0.5 * (id + generators.back()));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(code_projector);
    std::vector<Eigen::Index> code_columns;
    for (Eigen::Index c = 0; c < dim; ++c) {
        if (eig.eigenvalues()(c) > 0.5) {
            code_columns.push_back(c);
        }
    }
    if (code_columns.size() != 2) {
        throw ValidationError("code space does not have dimension 2");
    }

    // |phi> = (|c0>|0> + |c1>|1>) / sqrt(2), system index major.
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(2 * dim);
    for (Eigen::Index a = 0; a < 2; ++a) {
        const Eigen::VectorXcd v = eig.eigenvectors().col(code_columns[static_cast<std::size_t>(a)]);
        for (Eigen::Index b = 0; b < dim; ++b) {
            phi(2 * b + a) = v(b) / std::sqrt(2.0);
        }
    }

    // rho = sum_E p(E) (E x I)|phi><phi|(E x I)^dagger, accumulated in blocks.
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2 * dim, 2 * dim);
    constexpr Eigen::Index kBlock = 256;
    Eigen::MatrixXcd block(2 * dim, kBlock);
    Eigen::Index filled = 0;
    auto flush = [&]() {
        if (filled > 0) {
            rho.noalias() += block.leftCols(filled) * block.leftCols(filled).adjoint();
            filled = 0;
        }
    };
    for (std::uint64_t idx = 0; idx < channel.probabilities().size(); ++idx) {
        if (channel[idx] == 0.0) {
            continue;
        }
        auto e = PauliOperator::from_index(n, idx);
        block.col(filled++) = std::sqrt(channel[idx]) * detail::apply_pauli(e, phi, 2);
        if (filled == kBlock) {
            flush();
        }
    }
    flush();

    // For syndrome s the map is K_s = R_s Pi_s on the system; the overlap with
    // |phi> is <w|rho|w> with w = (Pi_s R_s^dagger x I)|phi>.
    CompensatedSum fidelity;
    for (const auto& d : table.decisions()) {
        Eigen::VectorXcd w = detail::apply_pauli(d.recovery, phi, 2);
        for (std::size_t j = 0; j < generators.size(); ++j) {
            const double sign = d.syndrome[j] ? -1.0 : 1.0;
            Eigen::VectorXcd gw(2 * dim);
            for (Eigen::Index a = 0; a < 2; ++a) {
                Eigen::VectorXcd part(dim);
                for (Eigen::Index b = 0; b < dim; ++b) {
                    part(b) = w(2 * b + a);
                }
                Eigen::VectorXcd mapped = generators[j] * part;
                for (Eigen::Index b = 0; b < dim; ++b) {
                    gw(2 * b + a) = mapped(b);
                }
            }
            w = 0.5 * (w + sign * gw);
        }
        fidelity.add(w.dot(rho * w).real());
    }
    return 1.0 - fidelity.value();
}

double density_matrix_oracle(const StabilizerCode& code, const PauliChannel& channel) {
    return density_matrix_oracle(optimal_decoder(code, channel), channel);
}

}  // namespace tailor
