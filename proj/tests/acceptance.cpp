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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any gating criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tailor/channel.hpp"
#include "tailor/code.hpp"
#include "tailor/decoder.hpp"
#include "tailor/ingest.hpp"
#include "tailor/search.hpp"

using namespace tailor;

namespace {

const std::filesystem::path kFixtures = TAILOR_FIXTURE_DIR;

const std::vector<double> kGridP = {0.001, 0.01};
const std::vector<double> kGridEta = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

PauliChannel biased(double p, double eta, std::size_t n) {
    return iid(biased_single_qubit(BiasedParams::from_total_and_bias(p, eta)), n);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<std::string> strings_of(const StabilizerCode& code) {
    std::vector<std::string> out;
    for (const auto& g : code.generators()) out.push_back(g.to_string());
    return out;
}

PauliChannel random_channel(std::size_t n, std::mt19937_64& rng) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> v(pauli_count(n));
    for (auto& x : v) x = e(rng);
    double total = std::accumulate(v.begin(), v.end(), 0.0);
    for (auto& x : v) x /= total;
    return PauliChannel(n, v);
}

Outcome ordering_over_grid(bool unbiased_only) {
    Outcome o;
    double worst = INFINITY;
    std::size_t points = 0;
    for (double p : kGridP) {
        for (double eta : kGridEta) {
            if (unbiased_only && eta != 1.0) continue;
            auto ch = biased(p, eta, 7);
            double c = logical_error_rate(cyclic7(), ch);
            double s = logical_error_rate(steane(), ch);
            double margin = s - c;
            worst = std::min(worst, margin);
            ++points;
            if (!(margin > 1e-12)) {
                o.pass = false;
                o.notes.push_back("p=" + fmt(p) + " eta=" + fmt(eta) + ": cyclic7 " + fmt(c) + " vs steane " + fmt(s));
            } else if (unbiased_only) {
                o.notes.push_back("p=" + fmt(p) + " eta=1: cyclic7 " + fmt(c) + " < steane " + fmt(s));
            }
        }
    }
    o.detail = std::to_string(points) + " points, smallest margin " + fmt(worst);
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    double worst = 0.0;
    std::size_t points = 0;
    auto check = [&](const StabilizerCode& code, double p, double eta) {
        auto ch = biased(p, eta, code.num_qubits());
        double fast = logical_error_rate(code, ch);
        double slow = density_matrix_oracle(code, ch);
        double diff = std::abs(fast - slow);
        worst = std::max(worst, diff);
        ++points;
        if (!(diff <= 1e-9)) {
            o.pass = false;
            o.notes.push_back(code.label() + " p=" + fmt(p) + " eta=" + fmt(eta) + ": " + fmt(fast) + " vs " +
                              fmt(slow));
        }
    };
    for (const auto& code : {phase_flip3(), five_qubit()}) {
        for (double p : {0.01, 0.05, 0.1}) {
            for (double eta : {1.0, 10.0, 100.0}) check(code, p, eta);
        }
    }
    check(steane(), 0.05, 1.0);
    o.detail = std::to_string(points) + " points, largest difference " + fmt(worst);
    return o;
}

Outcome closed_form() {
    Outcome o;
    double worst = 0.0;
    for (double q : {0.01, 0.1, 0.3}) {
        auto ch = iid(PauliChannel(1, {1 - q, 0.0, q, 0.0}), 3);
        double r = logical_error_rate(phase_flip3(), ch);
        double expect = 3 * q * q - 2 * q * q * q;
        double diff = std::abs(r - expect);
        worst = std::max(worst, diff);
        if (!(diff <= 1e-12)) o.pass = false;
        o.notes.push_back("q=" + fmt(q) + ": " + fmt(r) + " (3q^2 - 2q^3 = " + fmt(expect) + ")");
    }
    o.detail = "largest difference " + fmt(worst);
    return o;
}

Outcome distances() {
    Outcome o;
    std::vector<std::pair<StabilizerCode, std::size_t>> expected = {
        {steane(), 3}, {cyclic7(), 3}, {five_qubit(), 3}, {phase_flip3(), 1}};
    std::string detail;
    for (const auto& [code, d] : expected) {
        auto fast = distance(code);
        auto brute = oracle::brute_distance(strings_of(code), code.num_qubits());
        if (fast != d || brute != d) o.pass = false;
        detail += (detail.empty() ? "" : ", ") + code.label() + "=" + std::to_string(fast);
        if (brute != fast) o.notes.push_back(code.label() + ": oracle distance " + std::to_string(brute));
    }
    o.detail = detail;
    return o;
}

Outcome scaling() {
    Outcome o;
    double lo = logical_error_rate(steane(), biased(1e-4, 1.0, 7));
    double hi = logical_error_rate(steane(), biased(1e-3, 1.0, 7));
    double slope = std::log(hi / lo) / std::log(1e-3 / 1e-4);
    o.pass = slope >= 1.8 && slope <= 2.2;
    o.detail = "slope " + fmt(slope) + " (rates " + fmt(lo) + ", " + fmt(hi) + ")";
    return o;
}

Outcome search_soundness() {
    Outcome o;
    SearchConfig config;
    config.num_samples = 10000;
    config.seed = 1;
    config.threads = 0;
    auto ch = biased(0.01, 100.0, 7);
    auto pool = sample_pool(config);
    std::size_t invalid = 0;
    for (const auto& code : pool.codes) {
        auto why = oracle::constraint_failure(strings_of(code), 7, config.max_generator_weight, config.min_distance);
        if (!why.empty()) {
            if (++invalid <= 5) o.notes.push_back(fingerprint(code) + ": " + why);
        }
    }
    auto result = rank_pool(pool, ch, config.threads);
    double best = result.best().logical_error_rate;
    double s = logical_error_rate(steane(), ch);
    double c = logical_error_rate(cyclic7(), ch);

    CodePool prefix;
    for (std::size_t i = 0; i < 1000; ++i) {
        prefix.codes.push_back(pool.codes[i]);
        prefix.sample_index.push_back(pool.sample_index[i]);
        prefix.fingerprints.push_back(pool.fingerprints[i]);
    }
    double best_prefix = rank_pool(prefix, ch, config.threads).best().logical_error_rate;

    o.pass = invalid == 0 && pool.codes.size() == config.num_samples && best <= s && best_prefix >= best;
    o.detail = std::to_string(pool.codes.size()) + " codes, " + std::to_string(invalid) + " invalid, best " +
               fmt(best) + " vs steane " + fmt(s);
    o.notes.push_back("best over first 1000 samples " + fmt(best_prefix));
    o.notes.push_back(std::string("soft check, not gating: best <= cyclic7 (") + fmt(c) + "): " +
                      (best <= c ? "yes" : "no"));
    o.notes.push_back("best generators:");
    for (const auto& g : result.best().code.generators()) o.notes.push_back("  " + g.to_string());
    return o;
}

Outcome extrapolation_properties() {
    Outcome o;
    const Extrapolation all[] = {Extrapolation::Convex, Extrapolation::ConvexProduct, Extrapolation::Product};
    auto ident = PauliChannel::identity(2);
    for (auto how : all) {
        auto ch = extrapolate(ident, how);
        bool exact = ch[0] == 1.0;
        for (std::size_t i = 1; i < pauli_count(7); ++i) exact = exact && ch[i] == 0.0;
        if (!exact) {
            o.pass = false;
            o.notes.push_back("identity not preserved by " + to_string(how));
        }
    }

    std::mt19937_64 rng(2024);
    std::size_t heavy = 0;
    for (int trial = 0; trial < 5; ++trial) {
        auto two = random_channel(2, rng);
        auto ch = extrapolate_convex(two);
        for (std::size_t i = 0; i < pauli_count(7); ++i) {
            if (ch[i] != 0.0 && PauliOperator::from_index(7, i).weight() > 2) ++heavy;
        }
    }
    if (heavy) {
        o.pass = false;
        o.notes.push_back(std::to_string(heavy) + " convex entries above weight 2");
    }

    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        auto two = random_channel(2, rng);
        std::vector<PauliChannel> pairs;
        for (std::size_t j = 1; j < 7; ++j) pairs.push_back(embed(two, 7, j, j + 1));
        auto reference = extrapolate_product(two);
        for (int order = 0; order < 4; ++order) {
            std::shuffle(pairs.begin(), pairs.end(), rng);
            auto acc = PauliChannel::identity(7);
            for (const auto& c : pairs) acc = compose(acc, c);
            for (std::size_t i = 0; i < pauli_count(7); ++i) worst = std::max(worst, std::abs(acc[i] - reference[i]));
        }
    }
    if (!(worst <= 1e-12)) o.pass = false;
    o.detail = "identity exact under all three, convex support weight <= 2, compose order difference " + fmt(worst);
    return o;
}

Outcome twirl_properties() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::exponential_distribution<double> e(1.0);
    double fixed_worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        std::map<std::string, double> probs;
        double total = 0.0;
        for (const auto& name : kPtmOrder) total += probs[std::string(name)] = e(rng) * (trial % 2 ? 1.0 : 0.01);
        probs["II"] += trial % 2 ? 0.0 : 1.0;
        total += trial % 2 ? 0.0 : 1.0;
        std::vector<double> dense(16);
        for (auto& [name, v] : probs) {
            v /= total;
            dense[PauliOperator::from_string(name).index()] = v;
        }
        auto out = pauli_twirl(ChannelEstimate::from_ptm(oracle::explicit_ptm(probs)));
        for (std::size_t i = 0; i < 16; ++i) fixed_worst = std::max(fixed_worst, std::abs(out.channel[i] - dense[i]));
    }

    double norm_worst = 0.0;
    bool offdiag_same = true;
    std::uniform_real_distribution<double> u(-0.02, 0.02);
    std::uniform_real_distribution<double> diag(0.9, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        PtmMatrix m{};
        m[0][0] = 1.0;
        for (std::size_t i = 1; i < 16; ++i) m[i][i] = diag(rng);
        auto base = pauli_twirl(ChannelEstimate::from_ptm(m), 1.0);
        for (std::size_t r = 0; r < 16; ++r) {
            for (std::size_t c = 0; c < 16; ++c) {
                if (r != c) m[r][c] = u(rng);
            }
        }
        auto perturbed = pauli_twirl(ChannelEstimate::from_ptm(m), 1.0);
        double total = 0.0;
        for (std::size_t i = 0; i < 16; ++i) {
            total += perturbed.channel[i];
            offdiag_same = offdiag_same && perturbed.channel[i] == base.channel[i];
        }
        norm_worst = std::max(norm_worst, std::abs(total - 1.0));
    }
    o.pass = fixed_worst <= 1e-12 && norm_worst <= 1e-9 && offdiag_same;
    o.detail = "fixed-point difference " + fmt(fixed_worst) + ", normalization error " + fmt(norm_worst) +
               ", off-diagonal perturbations " + (offdiag_same ? "ignored" : "CHANGED the output");
    return o;
}

Outcome zz_fixture_ordering() {
    Outcome o;
    auto input = load_two_qubit_input(kFixtures / "zz_heavy_ptm.json");
    const std::pair<const char*, double> expected[] = {{"ZZ", 0.04}, {"ZI", 0.02}, {"IZ", 0.02}, {"II", 0.92}};
    for (const auto& [name, v] : expected) {
        if (std::abs(input.channel.probability(PauliOperator::from_string(name)) - v) > 1e-12) {
            o.pass = false;
            o.notes.push_back(std::string("fixture twirl gives unexpected Pr(") + name + ")");
        }
    }
    auto convex7 = extrapolate_convex(input.channel);
    double c = logical_error_rate(cyclic7(), convex7);
    double s = logical_error_rate(steane(), convex7);
    if (!(c < s)) o.pass = false;
    o.detail = "convex: cyclic7 " + fmt(c) + " vs steane " + fmt(s);
    auto prod = extrapolate_product(input.channel);
    o.notes.push_back("product: cyclic7 " + fmt(logical_error_rate(cyclic7(), prod)) + ", steane " +
                      fmt(logical_error_rate(steane(), prod)));
    return o;
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"biased-noise ordering: cyclic7 < steane on the 20-point (p, eta) grid", [] { return ordering_over_grid(false); }},
        {"unbiased points: cyclic7 < steane at eta = 1", [] { return ordering_over_grid(true); }},
        {"coset enumeration matches the density-matrix oracle within 1e-9", oracle_equivalence},
        {"phase_flip3 under dephasing equals 3q^2 - 2q^3 within 1e-12", closed_form},
        {"brute-force distances: steane, cyclic7, five_qubit = 3; phase_flip3 = 1", distances},
        {"steane log-log slope at eta = 1 between p = 1e-4 and 1e-3 in [1.8, 2.2]", scaling},
        {"random search (10000 samples, seed 1, p = 0.01, eta = 100): valid codes, best <= steane", search_soundness},
        {"extrapolations: identity preserved, convex weight <= 2, compose order-independent", extrapolation_properties},
        {"twirl: Pauli fixed points within 1e-12, normalized within 1e-9, off-diagonals ignored", twirl_properties},
        {"ZZ-heavy synthetic fixture, convex extrapolation: cyclic7 < steane", zz_fixture_ordering},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("%s  %s  [%s; %.1fs]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        for (const auto& n : o.notes) std::printf("        %s\n", n.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu of %zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
