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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mirrorbench {

/// Single-qubit Pauli letter. The numeric values double as the (x, z) bit
/// pair used in symplectic representations: I=00, X=10, Z=01, Y=11.
enum class Letter : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool letter_x(Letter p) {
    return static_cast<uint8_t>(p) & 1;
}
constexpr bool letter_z(Letter p) {
    return static_cast<uint8_t>(p) & 2;
}
constexpr Letter letter_from_bits(bool x, bool z) {
    return static_cast<Letter>(static_cast<uint8_t>(x) | (static_cast<uint8_t>(z) << 1));
}

/// A signed single-qubit Pauli; `negative` means a -1 prefactor.
struct SignedLetter {
    Letter letter;
    bool negative;

    bool operator==(const SignedLetter &) const = default;
};

/// The 24 single-qubit Clifford gates, identified up to global phase by their
/// conjugation action X -> ximage, Z -> zimage.
///
/// Canonical index order: lexicographic in (code(ximage), code(zimage)) where
/// code(letter, sign) = 2 * rank(letter) + sign with rank X=0, Y=1, Z=2 and
/// sign + = 0, - = 1. Under this order the identity has index 2.
namespace clifford1q {

constexpr int kCount = 24;

struct Images {
    SignedLetter x;
    SignedLetter z;
};

const Images &images(int index);
std::optional<int> index_of(const Images &images);

/// Index of the gate whose conjugation action is `images`; throws on an
/// invalid (commuting or identity) image pair.
int index_from_images(SignedLetter x, SignedLetter z);

/// Conjugation of a (signed) Pauli letter: returns U P U^dagger.
SignedLetter conjugate(int index, Letter p);

/// compose(a, b) is the gate with unitary U(a) U(b), i.e. b applied first.
int compose(int a, int b);
int inverse(int index);

int identity();
int pauli(Letter p);
/// The Pauli letter implemented by `index`, or nullopt when not a Pauli.
std::optional<Letter> as_pauli(int index);

/// Short human name ("I", "H", "S", ...) when one exists, else "C<index>".
std::string name(int index);
/// Accepts "C<k>" and the aliases produced by `name`.
std::optional<int> parse_name(std::string_view text);

}  // namespace clifford1q

}  // namespace mirrorbench
