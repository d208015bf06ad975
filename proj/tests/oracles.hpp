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

// Brute-force reference computations for the tests. Everything here works on
// Pauli letter strings and explicit matrices, independent of the packed
// symplectic machinery under test.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tailor::oracle {

inline bool letters_anticommute(char a, char b) { return a != 'I' && b != 'I' && a != b; }

inline int commutation_parity(const std::string& a, const std::string& b) {
    int count = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        count += letters_anticommute(a[i], b[i]) ? 1 : 0;
    }
    return count & 1;
}

inline char letter_product(char a, char b) {
    if (a == 'I') return b;
    if (b == 'I') return a;
    if (a == b) return 'I';
    // The remaining letter of X, Y, Z.
    return static_cast<char>('X' + 'Y' + 'Z' - a - b);
}

inline std::string string_product(const std::string& a, const std::string& b) {
    std::string out(a.size(), 'I');
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = letter_product(a[i], b[i]);
    }
    return out;
}

inline std::size_t string_weight(const std::string& s) {
    std::size_t w = 0;
    for (char c : s) {
        w += c != 'I' ? 1 : 0;
    }
    return w;
}

inline std::vector<std::string> all_pauli_strings(std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t q = 0; q < n; ++q) {
        std::vector<std::string> next;
        for (const auto& s : out) {
            for (char c : {'I', 'X', 'Y', 'Z'}) {
                next.push_back(s + c);
            }
        }
        out = std::move(next);
    }
    return out;
}

/// Every product of a subset of generators; size 2^m iff independent.
inline std::set<std::string> group_elements(const std::vector<std::string>& gens, std::size_t n) {
    std::set<std::string> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
        std::string p(n, 'I');
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if ((mask >> i) & 1u) {
                p = string_product(p, gens[i]);
            }
        }
        out.insert(p);
    }
    return out;
}

inline bool commutes_with_all(const std::string& p, const std::vector<std::string>& gens) {
    for (const auto& g : gens) {
        if (commutation_parity(p, g)) return false;
    }
    return true;
}

/// Minimum weight of a Pauli in the normalizer but outside the group.
inline std::size_t brute_distance(const std::vector<std::string>& gens, std::size_t n) {
    auto group = group_elements(gens, n);
    std::size_t best = n + 1;
    for (const auto& p : all_pauli_strings(n)) {
        if (commutes_with_all(p, gens) && !group.count(p)) {
            best = std::min(best, string_weight(p));
        }
    }
    return best;
}

/// Every string with between 1 and max_weight non-identity letters.
inline std::vector<std::string> low_weight_strings(std::size_t n, std::size_t max_weight) {
    std::vector<std::string> out;
    std::vector<std::string> frontier{std::string(n, 'I')};
    for (std::size_t w = 1; w <= max_weight; ++w) {
        std::set<std::string> next;
        for (const auto& s : frontier) {
            for (std::size_t q = 0; q < n; ++q) {
                if (s[q] != 'I') continue;
                for (char c : {'X', 'Y', 'Z'}) {
                    auto t = s;
                    t[q] = c;
                    next.insert(t);
                }
            }
        }
        frontier.assign(next.begin(), next.end());
        out.insert(out.end(), frontier.begin(), frontier.end());
    }
    return out;
}

/// Empty string when gens satisfy every search constraint, else a reason.
inline std::string constraint_failure(const std::vector<std::string>& gens, std::size_t n, std::size_t max_weight,
                                      std::size_t min_distance) {
    if (gens.size() != n - 1) return "wrong generator count";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != n) return "wrong length";
        if (string_weight(gens[i]) > max_weight) return "generator too heavy";
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (commutation_parity(gens[i], gens[j])) return "generators anticommute";
        }
    }
    auto group = group_elements(gens, n);
    if (group.size() != (std::size_t{1} << gens.size())) return "generators dependent";
    for (const auto& p : low_weight_strings(n, min_distance - 1)) {
        if (commutes_with_all(p, gens) && !group.count(p)) return "logical " + p + " lighter than " + std::to_string(min_distance);
    }
    return "";
}

using Complex = std::complex<double>;
using Matrix4 = std::array<std::array<Complex, 4>, 4>;

inline std::array<std::array<Complex, 2>, 2> single_matrix(char c) {
    const Complex i(0, 1);
    switch (c) {
        case 'X':
            return {{{0, 1}, {1, 0}}};
        case 'Y':
            return {{{0, -i}, {i, 0}}};
        case 'Z':
            return {{{1, 0}, {0, -1}}};
        default:
            return {{{1, 0}, {0, 1}}};
    }
}

inline Matrix4 two_qubit_matrix(const std::string& p) {
    auto a = single_matrix(p[0]);
    auto b = single_matrix(p[1]);
    Matrix4 m{};
    for (int r1 = 0; r1 < 2; ++r1)
        for (int c1 = 0; c1 < 2; ++c1)
            for (int r2 = 0; r2 < 2; ++r2)
                for (int c2 = 0; c2 < 2; ++c2) m[2 * r1 + r2][2 * c1 + c2] = a[r1][c1] * b[r2][c2];
    return m;
}

inline Matrix4 mul(const Matrix4& a, const Matrix4& b) {
    Matrix4 m{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k) m[r][c] += a[r][k] * b[k][c];
    return m;
}

inline Complex trace(const Matrix4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

/// R[P][Q] = Tr(P Lambda(Q)) / 4 for Lambda(rho) = sum_E q_E E rho E, with
/// rows and columns in II, IX, IY, IZ, XI, ... order.
inline std::array<std::array<double, 16>, 16> explicit_ptm(const std::map<std::string, double>& probs) {
    const std::string letters = "IXYZ";
    std::vector<std::string> order;
    for (char a : letters)
        for (char b : letters) order.push_back(std::string{a, b});
    std::array<std::array<double, 16>, 16> r{};
    for (std::size_t q = 0; q < 16; ++q) {
        Matrix4 lam{};
        Matrix4 qm = two_qubit_matrix(order[q]);
        for (const auto& [e, pe] : probs) {
            Matrix4 em = two_qubit_matrix(e);
            Matrix4 term = mul(mul(em, qm), em);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) lam[i][j] += pe * term[i][j];
        }
        for (std::size_t p = 0; p < 16; ++p) {
            r[p][q] = (trace(mul(two_qubit_matrix(order[p]), lam)) / 4.0).real();
        }
    }
    return r;
}

}  // namespace tailor::oracle
