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
#include <stdexcept>
#include <string>
#include <string_view>

namespace tailor {

/// Thrown for malformed or inconsistent inputs across the library.
class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Largest qubit count a PauliOperator can hold. Symplectic row vectors
/// (x bits followed by z bits) must fit in one 64-bit word.
inline constexpr std::size_t kMaxPauliQubits = 32;

/// A phaseless n-qubit Pauli operator stored as packed X and Z bit masks.
///
/// Qubit 1 (the leftmost letter of the string form) is bit 0 of both masks.
/// Position q carries X if only its x bit is set, Z if only its z bit is set,
/// and Y if both are set.
///
/// All 4^n operators are enumerated by an index whose bits interleave the
/// masks: qubit q (0-based from the left) owns index bits 2(n-1-q) (x) and
/// 2(n-1-q)+1 (z). So each qubit contributes a base-4 digit with
/// I=0, X=1, Z=2, Y=3, leftmost qubit most significant. Under this order,
/// phaseless multiplication is XOR of indices.
class PauliOperator {
   public:
    PauliOperator() = default;

    /// Identity on n qubits.
    explicit PauliOperator(std::size_t n);

    /// Throws ValidationError if n is out of range or a mask has bits above n.
    PauliOperator(std::size_t n, std::uint64_t x_bits, std::uint64_t z_bits);

    /// Parses a string over {I, X, Y, Z}.
    static PauliOperator from_string(std::string_view letters);

    /// Operator at position `index` of the fixed 4^n enumeration.
    static PauliOperator from_index(std::size_t n, std::uint64_t index);

    /// Single-qubit operator `letter` at 0-based position `qubit`.
    static PauliOperator single(std::size_t n, std::size_t qubit, char letter);

    std::string to_string() const;
    std::uint64_t index() const;

    std::size_t num_qubits() const { return n_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }

    /// Letter at 0-based position q.
    char letter(std::size_t q) const;

    /// x bits in the low n bits, z bits in the next n bits.
    std::uint64_t symplectic_vector() const { return x_ | (z_ << n_); }
    static PauliOperator from_symplectic_vector(std::size_t n, std::uint64_t v);

    std::size_t weight() const;
    bool is_identity() const { return (x_ | z_) == 0; }

    /// Moves the letter at position i to position (i + k) mod n.
    PauliOperator cyclic_shift(long long k) const;

    /// Output position perm[i] receives the letter at position i.
    template <typename Range>
    PauliOperator permute(const Range& perm) const {
        std::uint64_t x = 0;
        std::uint64_t z = 0;
        std::size_t i = 0;
        for (auto target : perm) {
            auto t = static_cast<std::size_t>(target);
            if (i >= n_ || t >= n_) {
                throw ValidationError("qubit permutation does not match operator size");
            }
            x |= ((x_ >> i) & 1u) << t;
            z |= ((z_ >> i) & 1u) << t;
            ++i;
        }
        if (i != n_) {
            throw ValidationError("qubit permutation does not match operator size");
        }
        return PauliOperator(n_, x, z);
    }

    PauliOperator& operator*=(const PauliOperator& other);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

   private:
    std::uint64_t mask() const;

    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// 0 if p and q commute, 1 if they anticommute.
int symplectic_product(const PauliOperator& p, const PauliOperator& q);

/// Phaseless product (XOR of both masks).
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

inline std::size_t weight(const PauliOperator& p) { return p.weight(); }

inline PauliOperator cyclic_shift(const PauliOperator& p, long long k) { return p.cyclic_shift(k); }

/// Number of operators in the 4^n enumeration; n must be small enough to
/// make that count a sensible dense size.
std::uint64_t pauli_count(std::size_t n);

}  // namespace tailor
