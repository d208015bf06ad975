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

// Dense GF(2) linear algebra on row vectors packed into 64-bit words.
// Column c of a row is bit c.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tailor::gf2 {

inline int parity(std::uint64_t v) { return __builtin_parityll(v); }

/// Reduced row-echelon form. Pivots are taken from the lowest column up, and
/// every pivot column is cleared in all other rows. `combination[i]` records
/// which input rows (bit r = input row r) sum to `rows[i]`; at most 64 rows.
struct Echelon {
    std::vector<std::uint64_t> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::uint64_t> combination;

    std::size_t rank() const { return pivots.size(); }
};

Echelon reduce(std::span<const std::uint64_t> rows, std::size_t num_cols);

std::size_t rank(std::span<const std::uint64_t> rows, std::size_t num_cols);

/// Basis of {v : parity(row & v) = 0 for every row}.
std::vector<std::uint64_t> nullspace(std::span<const std::uint64_t> rows, std::size_t num_cols);

/// Some v with parity(rows[i] & v) = bit i of rhs for every i, or nullopt.
/// Free variables are set to zero.
std::optional<std::uint64_t> solve(std::span<const std::uint64_t> rows, std::size_t num_cols, std::uint64_t rhs);

/// Incrementally built basis that remembers how each new vector decomposes.
class IncrementalBasis {
   public:
    explicit IncrementalBasis(std::size_t num_cols) : num_cols_(num_cols) {}

    /// Reduces v against the basis. Returns nullopt if v is independent,
    /// otherwise the mask of previously added vectors (by insertion order)
    /// whose sum is v.
    std::optional<std::uint64_t> dependency(std::uint64_t v) const;

    /// Adds v if independent; returns whether it was added.
    bool add(std::uint64_t v);

    bool contains(std::uint64_t v) const { return dependency(v).has_value(); }
    std::size_t size() const { return added_; }

   private:
    struct Entry {
        std::uint64_t row;
        std::size_t pivot;
        std::uint64_t combination;
    };

    std::size_t num_cols_;
    std::size_t added_ = 0;
    std::vector<Entry> entries_;
};

}  // namespace tailor::gf2
