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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mirrorbench/circuits.hpp"
#include "mirrorbench/clifford1q.hpp"

namespace mirrorbench {

/// A w-qubit Pauli operator i^phase * P_0 (x) P_1 (x) ... with the letters
/// stored bit-packed (x, z) and Y = (1, 1) meaning the Hermitian Y = iXZ.
class PauliOp {
   public:
    PauliOp() = default;
    /// Identity on `width` qubits.
    explicit PauliOp(size_t width);

    static PauliOp from_letters(const std::vector<Letter> &letters, bool negative = false);
    static PauliOp single(size_t width, size_t qubit, Letter letter);
    /// Accepts an optional sign prefix ("+", "-", "i", "-i", "+i") followed by
    /// one of I/X/Y/Z (or '_' for I) per qubit, e.g. "-XIZ".
    static PauliOp parse(std::string_view text);

    size_t width() const {
        return width_;
    }
    bool x(size_t q) const {
        return (xs[q >> 6] >> (q & 63)) & 1;
    }
    bool z(size_t q) const {
        return (zs[q >> 6] >> (q & 63)) & 1;
    }
    Letter letter(size_t q) const {
        return letter_from_bits(x(q), z(q));
    }
    void set(size_t q, Letter letter);

    /// Power of i in the prefactor, in [0, 4).
    uint8_t phase() const {
        return phase_;
    }
    void set_phase(uint8_t power) {
        phase_ = power & 3;
    }
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    bool negative() const {
        return phase_ == 2;
    }
    /// True when every letter is I (the phase is not inspected).
    bool is_identity_letters() const;
    size_t weight() const;
    bool commutes(const PauliOp &other) const;

    std::string str() const;

    bool operator==(const PauliOp &other) const;
    bool operator!=(const PauliOp &other) const {
        return !(*this == other);
    }

    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;

   private:
    size_t width_ = 0;
    uint8_t phase_ = 0;
};

/// Group product P * Q with the exact phase.
PauliOp pauli_compose(const PauliOp &p, const PauliOp &q);
/// In-place p <- p * q.
void pauli_mul_inplace(PauliOp &p, const PauliOp &q);

/// Tableau of a w-qubit Clifford: the images U X_j U^dag and U Z_j U^dag.
class CliffordOp {
   public:
    CliffordOp() = default;
    /// Identity tableau.
    explicit CliffordOp(size_t width);

    size_t width() const {
        return width_;
    }
    const PauliOp &x_image(size_t q) const {
        return images_[q];
    }
    const PauliOp &z_image(size_t q) const {
        return images_[width_ + q];
    }
    PauliOp &x_image(size_t q) {
        return images_[q];
    }
    PauliOp &z_image(size_t q) {
        return images_[width_ + q];
    }

    /// U P U^dag.
    PauliOp conjugate(const PauliOp &p) const;
    /// Images of X_j, Z_j anticommute for equal j and commute otherwise, and
    /// every image is Hermitian.
    bool is_symplectic() const;
    bool is_identity() const;

    bool operator==(const CliffordOp &other) const {
        return width_ == other.width_ && images_ == other.images_;
    }

   private:
    size_t width_ = 0;
    std::vector<PauliOp> images_;
};

CliffordOp clifford_from_layer(const Layer &layer);
PauliOp clifford_conjugate(const CliffordOp &c, const PauliOp &p);
/// compose(A, B) has unitary U(A) U(B): B acts first.
CliffordOp clifford_compose(const CliffordOp &a, const CliffordOp &b);
CliffordOp clifford_inverse(const CliffordOp &a);

/// In place p <- U(L) p U(L)^dag, gate by gate without building a tableau.
void conjugate_by_layer(const Layer &layer, PauliOp &p);

/// The Pauli equal (up to global phase) to the product of `layers`, applied
/// first to last. The returned operator is Hermitian with sign +.
PauliOp net_pauli(const std::vector<Layer> &layers, size_t width);
PauliOp net_pauli(const Circuit &circuit);

/// Outcome bit string produced by Q' acting on |0...0>: character i is '1'
/// iff Q' flips qubit i. Qubit 0 is the leftmost character.
std::string target_bitstring(const PauliOp &net);
/// Deterministic outcome of a FI/CO circuit whose unitary layers multiply to a Pauli.
std::string target_bitstring(const Circuit &circuit);

}  // namespace mirrorbench
