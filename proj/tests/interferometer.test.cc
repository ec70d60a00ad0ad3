// Copyright 2026 The Entangle Authors
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

#include "entangle/interferometer.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"
#include "support/random_states.h"

using namespace entangle;
using namespace entangle::testing;

namespace {

void expect_consistent(const RateTable &t) {
    double total = 0;
    for (size_t i = 0; i < 2; i++) {
        EXPECT_NEAR(t.coincidences[i][0] + t.coincidences[i][1], t.singles_1[i], 1e-12);
        EXPECT_NEAR(t.coincidences[0][i] + t.coincidences[1][i], t.singles_2[i], 1e-12);
        for (size_t j = 0; j < 2; j++) {
            EXPECT_GE(t.coincidences[i][j], 0);
            EXPECT_LE(t.coincidences[i][j], 1 + 1e-12);
            total += t.coincidences[i][j];
        }
    }
    EXPECT_NEAR(total, 1, 1e-12);
}

double complementarity(double v1, double v12) {
    return v1 * v1 + v12 * v12;
}

}  // namespace

TEST(interferometer, rates_examples) {
    ParamUnitaryPair identity;
    RateTable zero = rates(TwoQubitState::basis(0), identity);
    EXPECT_NEAR(zero.coincidences[0][0], 1, 1e-15);
    EXPECT_NEAR(zero.coincidences[0][1] + zero.coincidences[1][0] + zero.coincidences[1][1], 0, 1e-15);

    RateTable bell = rates(TwoQubitState::bell(), identity);
    EXPECT_NEAR(bell.coincidences[0][0], 0.5, 1e-15);
    EXPECT_NEAR(bell.coincidences[1][1], 0.5, 1e-15);
    EXPECT_NEAR(bell.coincidences[0][1], 0, 1e-15);
    for (size_t k = 0; k < 2; k++) {
        EXPECT_NEAR(bell.singles_1[k], 0.5, 1e-15);
        EXPECT_NEAR(bell.singles_2[k], 0.5, 1e-15);
    }

    RateTable three = rates(three_term_state(), identity);
    EXPECT_NEAR(three.coincidences[0][0], 1.0 / 3, 1e-15);
    EXPECT_NEAR(three.coincidences[0][1], 1.0 / 3, 1e-15);
    EXPECT_NEAR(three.coincidences[1][0], 0, 1e-15);
    EXPECT_NEAR(three.coincidences[1][1], 1.0 / 3, 1e-15);
}

TEST(interferometer, rates_are_consistent_for_random_pairs) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 2000; trial++) {
        expect_consistent(rates(random_state(rng), random_pair(rng)));
    }
}

TEST(interferometer, corrected_coincidence_examples) {
    ParamUnitaryPair identity;
    EXPECT_NEAR(corrected_coincidence(rates(TwoQubitState::product({1, 2}, {3, kI}), identity)), 0.25, 1e-15);
    EXPECT_NEAR(corrected_coincidence(rates(TwoQubitState::bell(), identity)), 0.5, 1e-15);

    RateTable t = rates(three_term_state(), identity);
    EXPECT_NEAR(corrected_coincidence(t), 1.0 / 3 - (2.0 / 3) * (1.0 / 3) + 0.25, 1e-15);
    EXPECT_NEAR(corrected_coincidence(t), 1.0 / 9 + 0.25, 1e-15);
}

TEST(interferometer, covariance_identity) {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 10000; trial++) {
        TwoQubitState s = random_state(rng);
        ParamUnitaryPair pair = random_pair(rng);
        Vec4 a = tensor2x2(pair.first(), pair.second()) * s.amplitudes();
        double expected = std::norm(a[0] * a[3]) - std::norm(a[1] * a[2]);
        EXPECT_NEAR(coincidence_covariance(rates(s, pair)), expected, 1e-12);
    }
}

TEST(interferometer, two_particle_visibility_examples) {
    VisibilityReport bell = two_particle_visibility(TwoQubitState::bell());
    EXPECT_NEAR(bell.v12, 1, 1e-2);
    EXPECT_EQ(bell.offset_A, 0.25);

    VisibilityReport product = two_particle_visibility(TwoQubitState::basis(0));
    EXPECT_NEAR(product.v12, 0, 1e-2);

    VisibilityReport three = two_particle_visibility(three_term_state());
    EXPECT_NEAR(three.v12, 2.0 / 3, 1e-2);
    EXPECT_NEAR(three.v12, (three.corrected_max - three.corrected_min) / (three.corrected_max + three.corrected_min),
                1e-15);

    EXPECT_THROW(two_particle_visibility(three_term_state(), {7, 10}), std::invalid_argument);
}

TEST(interferometer, two_particle_visibility_settings_attain_extremes) {
    TwoQubitState s = three_term_state();
    VisibilityReport r = two_particle_visibility(s);
    TwoQubitState source = schmidt_source(s);
    EXPECT_NEAR(corrected_coincidence(rates(source, r.setting_max)), r.corrected_max, 1e-12);
    EXPECT_NEAR(corrected_coincidence(rates(source, r.setting_min)), r.corrected_min, 1e-12);
    EXPECT_NEAR(std::sin(r.setting_max.phase_sum()), 0, 1e-12);
    EXPECT_NEAR(std::sin(r.setting_min.phase_sum()), 0, 1e-12);
}

TEST(interferometer, schmidt_source_has_same_entanglement) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; trial++) {
        TwoQubitState s = random_state(rng);
        SchmidtForm f = schmidt(s);
        TwoQubitState src = schmidt_source(s);
        EXPECT_NEAR(std::abs(src[0] * src[3] - src[1] * src[2]), f.kappa1 * f.kappa2, 1e-12);
    }
}

TEST(interferometer, two_particle_visibility_random_states) {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 10; trial++) {
        TwoQubitState s = random_state(rng);
        double pe = 2 * std::abs(s[0] * s[3] - s[1] * s[2]);
        VisibilityReport r = two_particle_visibility(s);
        EXPECT_NEAR(r.v12, pe, 1e-2);
        EXPECT_NEAR(complementarity(r.v1, r.v12), 1, 3e-2);
        EXPECT_GE(r.v12, 0);
        EXPECT_LE(r.v12, 1);
    }
}

TEST(interferometer, one_particle_visibility_examples) {
    EXPECT_NEAR(one_particle_visibility(TwoQubitState::bell(), Subsystem::First), 0, 1e-15);
    EXPECT_NEAR(one_particle_visibility(TwoQubitState::basis(0), Subsystem::Second), 1, 1e-15);
    EXPECT_NEAR(one_particle_visibility(three_term_state(), Subsystem::First), std::sqrt(5.0) / 3, 1e-12);
    EXPECT_NEAR(one_particle_visibility(three_term_state(), Subsystem::Second), std::sqrt(5.0) / 3, 1e-12);
}

TEST(interferometer, one_particle_visibility_closed_form_properties) {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 2000; trial++) {
        TwoQubitState s = random_state(rng);
        double pe = 2 * std::abs(s[0] * s[3] - s[1] * s[2]);
        double v1 = one_particle_visibility(s, Subsystem::First);
        EXPECT_NEAR(v1, std::sqrt(1 - pe * pe), 1e-12);
        EXPECT_NEAR(complementarity(v1, pe), 1, 1e-10);
    }
}

TEST(interferometer, one_particle_visibility_sweep_matches_closed_form) {
    std::mt19937_64 rng(56);
    for (int trial = 0; trial < 10; trial++) {
        TwoQubitState s = random_state(rng);
        for (Subsystem which : {Subsystem::First, Subsystem::Second}) {
            EXPECT_NEAR(one_particle_visibility_sweep(s, which), one_particle_visibility(s, which), 1e-2);
        }
    }
}

TEST(interferometer, offset_quantity_reaches_one_quarter) {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 5; trial++) {
        OffsetProbe probe = max_offset_quantity(random_state(rng));
        EXPECT_NEAR(probe.value, 0.25, 1e-3);
        EXPECT_LE(probe.value, 0.25 + 1e-12);
        const Vec4 &a = probe.amplitudes;
        EXPECT_NEAR(std::abs((a[0] * a[3] + a[1] * a[2]) / 2.0), probe.value, 1e-12);
        EXPECT_NEAR(std::abs(a[0]), std::abs(a[3]), 1e-2);
        EXPECT_NEAR(std::abs(a[1]), std::abs(a[2]), 1e-2);
    }
}

TEST(interferometer, sample_counts_deterministic_table) {
    CountTable c = sample_counts(rates(TwoQubitState::basis(0), {}), 100, 1);
    EXPECT_EQ(c.coincidences[0][0], 100u);
    EXPECT_EQ(c.coincidences[0][1] + c.coincidences[1][0] + c.coincidences[1][1], 0u);
    EXPECT_EQ(c.singles_1[0], 100u);
    EXPECT_EQ(c.total, 100u);
    EXPECT_THROW(sample_counts(rates(TwoQubitState::basis(0), {}), 0, 1), std::invalid_argument);
}

TEST(interferometer, sample_counts_bell_statistics) {
    RateTable t = rates(TwoQubitState::bell(), {});
    for (uint64_t seed : {1u, 2u, 3u}) {
        CountTable c = sample_counts(t, 1000000, seed);
        EXPECT_EQ(c.coincidences[0][1], 0u);
        EXPECT_EQ(c.coincidences[1][0], 0u);
        EXPECT_EQ(c.coincidences[0][0] + c.coincidences[1][1], 1000000u);
        EXPECT_NEAR(static_cast<double>(c.coincidences[0][0]), 500000, 4 * 500);
        EXPECT_EQ(c.singles_1[0], c.coincidences[0][0]);
        EXPECT_EQ(c.singles_2[1], c.coincidences[1][1]);
    }
}

TEST(interferometer, sample_counts_is_seeded) {
    std::mt19937_64 rng(58);
    RateTable t = rates(random_state(rng), random_pair(rng));
    CountTable a = sample_counts(t, 12345, 9);
    CountTable b = sample_counts(t, 12345, 9);
    EXPECT_EQ(a.coincidences, b.coincidences);
    expect_consistent(a.frequencies());
}

TEST(interferometer, empirical_visibility_close_to_exact) {
    TwoQubitState s = three_term_state();
    VisibilityReport r = two_particle_visibility(s);
    double counted = empirical_visibility(s, r, 1000000, 7);
    EXPECT_NEAR(counted, r.v12, 0.02);
}
