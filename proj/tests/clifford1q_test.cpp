// Copyright 2026 The Mirrorbench Authors
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

#include "mirrorbench/clifford1q.hpp"

#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"

using namespace mirrorbench;

TEST(Clifford1q, identity_has_index_two) {
    EXPECT_EQ(clifford1q::identity(), 2);
    const auto &im = clifford1q::images(2);
    EXPECT_EQ(im.x, (SignedLetter{Letter::X, false}));
    EXPECT_EQ(im.z, (SignedLetter{Letter::Z, false}));
}

TEST(Clifford1q, enumeration_is_sorted_by_image_codes) {
    auto code = [](SignedLetter s) {
        int rank = s.letter == Letter::X ? 0 : s.letter == Letter::Y ? 1 : 2;
        return 2 * rank + static_cast<int>(s.negative);
    };
    for (int i = 0; i + 1 < clifford1q::kCount; i++) {
        const auto &a = clifford1q::images(i);
        const auto &b = clifford1q::images(i + 1);
        EXPECT_LT(std::make_pair(code(a.x), code(a.z)), std::make_pair(code(b.x), code(b.z)));
    }
}

TEST(Clifford1q, index_round_trips) {
    for (int i = 0; i < clifford1q::kCount; i++) {
        EXPECT_EQ(clifford1q::index_of(clifford1q::images(i)), i);
    }
    EXPECT_THROW(clifford1q::index_from_images({Letter::X, false}, {Letter::X, false}), std::exception);
}

TEST(Clifford1q, conjugation_matches_matrices) {
    const auto &mats = oracle::clifford_matrices();
    for (int i = 0; i < clifford1q::kCount; i++) {
        for (Letter p : {Letter::X, Letter::Y, Letter::Z}) {
            SignedLetter s = clifford1q::conjugate(i, p);
            oracle::Matrix expect = oracle::pauli_matrix(s.letter);
            if (s.negative) {
                for (auto &v : expect.a) {
                    v = -v;
                }
            }
            oracle::Matrix got = mats[i] * oracle::pauli_matrix(p) * oracle::adjoint(mats[i]);
            EXPECT_LT(oracle::max_abs_diff(got, expect), 1e-9) << "gate " << i;
        }
    }
}

TEST(Clifford1q, compose_and_inverse_match_matrices) {
    const auto &mats = oracle::clifford_matrices();
    for (int a = 0; a < clifford1q::kCount; a++) {
        EXPECT_TRUE(oracle::equal_up_to_phase(mats[a] * mats[clifford1q::inverse(a)], oracle::Matrix::identity(2)));
        for (int b = 0; b < clifford1q::kCount; b++) {
            EXPECT_TRUE(oracle::equal_up_to_phase(mats[clifford1q::compose(a, b)], mats[a] * mats[b]));
        }
    }
}

TEST(Clifford1q, paulis) {
    for (Letter p : {Letter::I, Letter::X, Letter::Y, Letter::Z}) {
        int g = clifford1q::pauli(p);
        EXPECT_EQ(clifford1q::as_pauli(g), p);
        EXPECT_TRUE(oracle::equal_up_to_phase(oracle::clifford_matrices()[g], oracle::pauli_matrix(p)));
    }
    std::set<int> non_pauli;
    for (int i = 0; i < clifford1q::kCount; i++) {
        if (!clifford1q::as_pauli(i)) {
            non_pauli.insert(i);
        }
    }
    EXPECT_EQ(non_pauli.size(), 20u);
}

TEST(Clifford1q, names_round_trip) {
    for (int i = 0; i < clifford1q::kCount; i++) {
        EXPECT_EQ(clifford1q::parse_name(clifford1q::name(i)), i);
        EXPECT_EQ(clifford1q::parse_name("C" + std::to_string(i)), i);
    }
    EXPECT_FALSE(clifford1q::parse_name("T"));
    EXPECT_FALSE(clifford1q::parse_name("C24"));
    EXPECT_TRUE(oracle::equal_up_to_phase(oracle::clifford_matrices()[*clifford1q::parse_name("H")], oracle::hadamard()));
    EXPECT_TRUE(oracle::equal_up_to_phase(oracle::clifford_matrices()[*clifford1q::parse_name("S")], oracle::phase_s()));
}
