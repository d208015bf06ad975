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

#include "tailor/pauli.hpp"

#include <bit>

namespace tailor {

PauliOperator::PauliOperator(std::size_t n) : PauliOperator(n, 0, 0) {}

PauliOperator::PauliOperator(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits)
    : n_(n), x_(x_bits), z_(z_bits) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw ValidationError("Pauli operator needs between 1 and " + std::to_string(kMaxPauliQubits) +
                              " qubits, got " + std::to_string(n));
    }
    if ((x_ | z_) & ~mask()) {
        throw ValidationError("Pauli bit mask has bits beyond qubit " + std::to_string(n));
    }
}

std::uint64_t PauliOperator::mask() const {
    return n_ >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
}

PauliOperator PauliOperator::from_string(std::string_view letters) {
    if (letters.empty()) {
        throw ValidationError("empty Pauli string");
    }
    if (letters.size() > kMaxPauliQubits) {
        throw ValidationError("Pauli string longer than " + std::to_string(kMaxPauliQubits) + " letters");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < letters.size(); ++q) {
        std::uint64_t bit = std::uint64_t{1} << q;
        switch (letters[q]) {
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw ValidationError("invalid Pauli letter '" + std::string(1, letters[q]) + "' at position " +
                                      std::to_string(q + 1) + " of \"" + std::string(letters) + "\"");
        }
    }
    return PauliOperator(letters.size(), x, z);
}

std::uint64_t pauli_count(std::size_t n) {
    if (n == 0 || n > 16) {
        throw ValidationError("cannot enumerate Paulis on " + std::to_string(n) + " qubits");
    }
    return std::uint64_t{1} << (2 * n);
}

PauliOperator PauliOperator::from_index(std::size_t n, std::uint64_t index) {
    if (index >= pauli_count(n)) {
        throw ValidationError("Pauli index out of range");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t shift = 2 * (n - 1 - q);
        x |= ((index >> shift) & 1u) << q;
        z |= ((index >> (shift + 1)) & 1u) << q;
    }
    return PauliOperator(n, x, z);
}

std::uint64_t PauliOperator::index() const {
    if (n_ > 16) {
        throw ValidationError("Pauli index needs at most 16 qubits");
    }
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < n_; ++q) {
        std::size_t shift = 2 * (n_ - 1 - q);
        index |= ((x_ >> q) & 1u) << shift;
        index |= ((z_ >> q) & 1u) << (shift + 1);
    }
    return index;
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char letter) {
    if (qubit >= n) {
        throw ValidationError("qubit index out of range");
    }
    std::string s(n, 'I');
    s[qubit] = letter;
    return from_string(s);
}

PauliOperator PauliOperator::from_symplectic_vector(std::size_t n, std::uint64_t v) {
    if (n == 0 || n > kMaxPauliQubits) {
        throw ValidationError("bad qubit count for symplectic vector");
    }
    std::uint64_t m = (std::uint64_t{1} << n) - 1;
    if (2 * n < 64 && (v >> (2 * n)) != 0) {
        throw ValidationError("symplectic vector has bits beyond 2n");
    }
    return PauliOperator(n, v & m, (v >> n) & m);
}

char PauliOperator::letter(std::size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[((x_ >> q) & 1u) | (((z_ >> q) & 1u) << 1)];
}

std::string PauliOperator::to_string() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) {
        s[q] = letter(q);
    }
    return s;
}

std::size_t PauliOperator::weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

PauliOperator PauliOperator::cyclic_shift(long long k) const {
    auto n = static_cast<long long>(n_);
    auto s = static_cast<std::size_t>(((k % n) + n) % n);
    if (s == 0) {
        return *this;
    }
    auto rotate = [&](std::uint64_t bits) { return ((bits << s) | (bits >> (n_ - s))) & mask(); };
    return PauliOperator(n_, rotate(x_), rotate(z_));
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
    if (n_ != other.n_) {
        throw ValidationError("cannot multiply Paulis on " + std::to_string(n_) + " and " +
                              std::to_string(other.n_) + " qubits");
    }
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

int symplectic_product(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw ValidationError("symplectic product of Paulis on " + std::to_string(p.num_qubits()) + " and " +
                              std::to_string(q.num_qubits()) + " qubits");
    }
    return std::popcount((p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits())) & 1;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) { return p * q; }

}  // namespace tailor
