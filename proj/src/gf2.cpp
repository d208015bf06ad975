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

#include "tailor/gf2.hpp"

#include <bit>

#include "tailor/pauli.hpp"

namespace tailor::gf2 {

namespace {

void check_shape(std::span<const std::uint64_t> rows, std::size_t num_cols) {
    if (num_cols > 64) {
        throw ValidationError("GF(2) rows are limited to 64 columns");
    }
    if (rows.size() > 64) {
        throw ValidationError("GF(2) elimination is limited to 64 rows");
    }
    if (num_cols < 64) {
        for (auto r : rows) {
            if (r >> num_cols) {
                throw ValidationError("GF(2) row has bits beyond its column count");
            }
        }
    }
}

}  // namespace

Echelon reduce(std::span<const std::uint64_t> rows, std::size_t num_cols) {
    check_shape(rows, num_cols);
    std::vector<std::uint64_t> work(rows.begin(), rows.end());
    std::vector<std::uint64_t> combo(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        combo[i] = std::uint64_t{1} << i;
    }

    Echelon out;
    std::size_t next = 0;
    for (std::size_t col = 0; col < num_cols && next < work.size(); ++col) {
        std::uint64_t bit = std::uint64_t{1} << col;
        std::size_t pivot_row = next;
        while (pivot_row < work.size() && !(work[pivot_row] & bit)) {
            ++pivot_row;
        }
        if (pivot_row == work.size()) {
            continue;
        }
        std::swap(work[next], work[pivot_row]);
        std::swap(combo[next], combo[pivot_row]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != next && (work[r] & bit)) {
                work[r] ^= work[next];
                combo[r] ^= combo[next];
            }
        }
        out.pivots.push_back(col);
        ++next;
    }
    work.resize(next);
    combo.resize(next);
    out.rows = std::move(work);
    out.combination = std::move(combo);
    return out;
}

std::size_t rank(std::span<const std::uint64_t> rows, std::size_t num_cols) {
    return reduce(rows, num_cols).rank();
}

std::vector<std::uint64_t> nullspace(std::span<const std::uint64_t> rows, std::size_t num_cols) {
    Echelon e = reduce(rows, num_cols);
    std::uint64_t pivot_mask = 0;
    for (auto p : e.pivots) {
        pivot_mask |= std::uint64_t{1} << p;
    }
    std::vector<std::uint64_t> basis;
    for (std::size_t f = 0; f < num_cols; ++f) {
        std::uint64_t fbit = std::uint64_t{1} << f;
        if (pivot_mask & fbit) {
            continue;
        }
        std::uint64_t v = fbit;
        for (std::size_t j = 0; j < e.rows.size(); ++j) {
            if (e.rows[j] & fbit) {
                v |= std::uint64_t{1} << e.pivots[j];
            }
        }
        basis.push_back(v);
    }
    return basis;
}

std::optional<std::uint64_t> solve(std::span<const std::uint64_t> rows, std::size_t num_cols, std::uint64_t rhs) {
    Echelon e = reduce(rows, num_cols);
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < e.rows.size(); ++j) {
        // Reduced row j is the sum of the input rows in combination[j].
        if (parity(e.combination[j] & rhs)) {
            v |= std::uint64_t{1} << e.pivots[j];
        }
    }
    // Inconsistent systems show up here.
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (parity(rows[i] & v) != static_cast<int>((rhs >> i) & 1u)) {
            return std::nullopt;
        }
    }
    return v;
}

std::optional<std::uint64_t> IncrementalBasis::dependency(std::uint64_t v) const {
    std::uint64_t combo = 0;
    for (const auto& e : entries_) {
        if ((v >> e.pivot) & 1u) {
            v ^= e.row;
            combo ^= e.combination;
        }
    }
    if (v != 0) {
        return std::nullopt;
    }
    return combo;
}

bool IncrementalBasis::add(std::uint64_t v) {
    if (num_cols_ < 64 && (v >> num_cols_)) {
        throw ValidationError("GF(2) vector has bits beyond its column count");
    }
    std::uint64_t combo = std::uint64_t{1} << added_;
    for (const auto& e : entries_) {
        if ((v >> e.pivot) & 1u) {
            v ^= e.row;
            combo ^= e.combination;
        }
    }
    if (v == 0) {
        return false;
    }
    auto pivot = static_cast<std::size_t>(std::countr_zero(v));
    for (auto& e : entries_) {
        if ((e.row >> pivot) & 1u) {
            e.row ^= v;
            e.combination ^= combo;
        }
    }
    entries_.push_back({v, pivot, combo});
    ++added_;
    return true;
}

}  // namespace tailor::gf2
