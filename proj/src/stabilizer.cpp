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

#include "mirrorbench/stabilizer.hpp"

#include <bit>

#include "mirrorbench/error.hpp"

namespace mirrorbench {

namespace {

size_t num_words(size_t width) {
    return (width + 63) / 64;
}

void require_same_width(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw Error(
            ErrorCode::ContractViolation,
            std::string(what) + ": width mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

inline void set_bit(std::vector<uint64_t> &words, size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    if (v) {
        words[q >> 6] |= mask;
    } else {
        words[q >> 6] &= ~mask;
    }
}

}  // namespace

PauliOp::PauliOp(size_t width) : xs(num_words(width), 0), zs(num_words(width), 0), width_(width) {
}

PauliOp PauliOp::from_letters(const std::vector<Letter> &letters, bool negative) {
    PauliOp p(letters.size());
    for (size_t q = 0; q < letters.size(); q++) {
        p.set(q, letters[q]);
    }
    p.phase_ = negative ? 2 : 0;
    return p;
}

PauliOp PauliOp::single(size_t width, size_t qubit, Letter letter) {
    PauliOp p(width);
    p.set(qubit, letter);
    return p;
}

PauliOp PauliOp::parse(std::string_view text) {
    uint8_t phase = 0;
    size_t k = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        phase = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase += 1;
        k++;
    }
    std::vector<Letter> letters;
    for (; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
            case '_':
                letters.push_back(Letter::I);
                break;
            case 'X':
                letters.push_back(Letter::X);
                break;
            case 'Y':
                letters.push_back(Letter::Y);
                break;
            case 'Z':
                letters.push_back(Letter::Z);
                break;
            default:
                throw Error(
                    ErrorCode::Parse,
                    "column " + std::to_string(k + 1) + ": bad Pauli character '" + std::string(1, text[k]) + "'");
        }
    }
    PauliOp p = from_letters(letters);
    p.set_phase(phase);
    return p;
}

void PauliOp::set(size_t q, Letter letter) {
    set_bit(xs, q, letter_x(letter));
    set_bit(zs, q, letter_z(letter));
}

bool PauliOp::is_identity_letters() const {
    for (size_t k = 0; k < xs.size(); k++) {
        if (xs[k] | zs[k]) {
            return false;
        }
    }
    return true;
}

size_t PauliOp::weight() const {
    size_t n = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        n += std::popcount(xs[k] | zs[k]);
    }
    return n;
}

bool PauliOp::commutes(const PauliOp &other) const {
    require_same_width(width_, other.width_, "commutes");
    int parity = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        parity ^= std::popcount((xs[k] & other.zs[k]) ^ (zs[k] & other.xs[k])) & 1;
    }
    return parity == 0;
}

std::string PauliOp::str() const {
    static const char *kSigns[] = {"+", "+i", "-", "-i"};
    std::string out = kSigns[phase_];
    for (size_t q = 0; q < width_; q++) {
        out += "IXZY"[static_cast<int>(letter(q))];
    }
    return out;
}

bool PauliOp::operator==(const PauliOp &other) const {
    return width_ == other.width_ && phase_ == other.phase_ && xs == other.xs && zs == other.zs;
}

void pauli_mul_inplace(PauliOp &p, const PauliOp &q) {
    require_same_width(p.width(), q.width(), "pauli_compose");
    // Bit-sliced two-bit counter of the per-qubit log_i contributions.
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (size_t k = 0; k < p.xs.size(); k++) {
        uint64_t x1 = p.xs[k];
        uint64_t z1 = p.zs[k];
        uint64_t x2 = q.xs[k];
        uint64_t z2 = q.zs[k];
        uint64_t nx = x1 ^ x2;
        uint64_t nz = z1 ^ z2;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti = (x2 & z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ nx ^ nz ^ x1z2) & anti;
        cnt1 ^= anti;
        p.xs[k] = nx;
        p.zs[k] = nz;
    }
    int log_i = std::popcount(cnt1) + 2 * std::popcount(cnt2);
    p.set_phase(static_cast<uint8_t>(p.phase() + q.phase() + log_i));
}

PauliOp pauli_compose(const PauliOp &p, const PauliOp &q) {
    PauliOp r = p;
    pauli_mul_inplace(r, q);
    return r;
}

CliffordOp::CliffordOp(size_t width) : width_(width) {
    images_.reserve(2 * width);
    for (size_t q = 0; q < width; q++) {
        images_.push_back(PauliOp::single(width, q, Letter::X));
    }
    for (size_t q = 0; q < width; q++) {
        images_.push_back(PauliOp::single(width, q, Letter::Z));
    }
}

PauliOp CliffordOp::conjugate(const PauliOp &p) const {
    require_same_width(width_, p.width(), "clifford_conjugate");
    // p = i^(phase + #Y) * prod_j X_j^x_j Z_j^z_j.
    PauliOp r(width_);
    size_t num_y = 0;
    for (size_t k = 0; k < p.xs.size(); k++) {
        num_y += std::popcount(p.xs[k] & p.zs[k]);
    }
    r.set_phase(static_cast<uint8_t>(p.phase() + num_y));
    for (size_t q = 0; q < width_; q++) {
        if (p.x(q)) {
            pauli_mul_inplace(r, x_image(q));
        }
        if (p.z(q)) {
            pauli_mul_inplace(r, z_image(q));
        }
    }
    return r;
}

bool CliffordOp::is_symplectic() const {
    for (size_t i = 0; i < 2 * width_; i++) {
        if (!images_[i].is_hermitian() || images_[i].is_identity_letters()) {
            return false;
        }
        for (size_t j = i + 1; j < 2 * width_; j++) {
            bool should_anticommute = j == i + width_;
            if (images_[i].commutes(images_[j]) == should_anticommute) {
                return false;
            }
        }
    }
    return true;
}

bool CliffordOp::is_identity() const {
    return *this == CliffordOp(width_);
}

CliffordOp clifford_from_layer(const Layer &layer) {
    size_t w = layer.width();
    CliffordOp c(w);
    for (size_t q = 0; q < w; q++) {
        uint8_t g = layer.one_qubit[q];
        if (g == Layer::kInPair) {
            continue;
        }
        if (g >= clifford1q::kCount) {
            throw Error(ErrorCode::UnsupportedGate, "gate index " + std::to_string(g) + " on qubit " + std::to_string(q));
        }
        SignedLetter xi = clifford1q::conjugate(g, Letter::X);
        SignedLetter zi = clifford1q::conjugate(g, Letter::Z);
        c.x_image(q) = PauliOp::single(w, q, xi.letter);
        c.x_image(q).set_phase(xi.negative ? 2 : 0);
        c.z_image(q) = PauliOp::single(w, q, zi.letter);
        c.z_image(q).set_phase(zi.negative ? 2 : 0);
    }
    for (const auto &g : layer.two_qubit) {
        uint32_t a = g.first;
        uint32_t b = g.second;
        if (g.kind == TwoQubitKind::CNOT) {
            c.x_image(a).set(b, Letter::X);
            c.z_image(b).set(a, Letter::Z);
        } else {
            c.x_image(a).set(b, Letter::Z);
            c.x_image(b).set(a, Letter::Z);
        }
    }
    return c;
}

PauliOp clifford_conjugate(const CliffordOp &c, const PauliOp &p) {
    return c.conjugate(p);
}

CliffordOp clifford_compose(const CliffordOp &a, const CliffordOp &b) {
    require_same_width(a.width(), b.width(), "clifford_compose");
    size_t w = a.width();
    CliffordOp r(w);
    for (size_t q = 0; q < w; q++) {
        r.x_image(q) = a.conjugate(b.x_image(q));
        r.z_image(q) = a.conjugate(b.z_image(q));
    }
    return r;
}

CliffordOp clifford_inverse(const CliffordOp &a) {
    size_t w = a.width();
    // Symplectic inverse M^-1 = Omega M^T Omega: coordinate i of the inverse
    // image of generator k is coordinate sigma(k) of the image of generator
    // sigma(i), sigma swapping the X and Z halves.
    auto coord = [&](size_t gen, size_t c) -> bool {
        const PauliOp &img = gen < w ? a.x_image(gen) : a.z_image(gen - w);
        return c < w ? img.x(c) : img.z(c - w);
    };
    auto sigma = [&](size_t k) { return k < w ? k + w : k - w; };
    CliffordOp r(w);
    for (size_t k = 0; k < 2 * w; k++) {
        PauliOp img(w);
        for (size_t q = 0; q < w; q++) {
            bool xb = coord(sigma(q), sigma(k));
            bool zb = coord(sigma(q + w), sigma(k));
            img.set(q, letter_from_bits(xb, zb));
        }
        // Fix the sign so that a maps the candidate back to +generator.
        PauliOp back = a.conjugate(img);
        if (back.negative()) {
            img.set_phase(2);
        }
        if (k < w) {
            r.x_image(k) = img;
        } else {
            r.z_image(k - w) = img;
        }
    }
    return r;
}

void conjugate_by_layer(const Layer &layer, PauliOp &p) {
    size_t w = layer.width();
    require_same_width(w, p.width(), "conjugate_by_layer");
    bool negate = false;
    for (size_t q = 0; q < w; q++) {
        uint8_t g = layer.one_qubit[q];
        if (g == Layer::kInPair) {
            continue;
        }
        Letter l = p.letter(q);
        if (l == Letter::I) {
            continue;
        }
        SignedLetter s = clifford1q::conjugate(g, l);
        p.set(q, s.letter);
        negate ^= s.negative;
    }
    for (const auto &g : layer.two_qubit) {
        uint32_t a = g.first;
        uint32_t b = g.second;
        bool xa = p.x(a), za = p.z(a), xb = p.x(b), zb = p.z(b);
        if (g.kind == TwoQubitKind::CNOT) {
            negate ^= xa && zb && !(xb ^ za);
            xb ^= xa;
            za ^= zb;
        } else {
            negate ^= xa && xb && (za ^ zb);
            za ^= xb;
            zb ^= xa;
        }
        p.set(a, letter_from_bits(xa, za));
        p.set(b, letter_from_bits(xb, zb));
    }
    if (negate) {
        p.set_phase(static_cast<uint8_t>(p.phase() + 2));
    }
}

PauliOp net_pauli(const std::vector<Layer> &layers, size_t width) {
    PauliOp result(width);
    for (size_t j = 0; j < width; j++) {
        for (Letter gen : {Letter::X, Letter::Z}) {
            PauliOp p = PauliOp::single(width, j, gen);
            for (const auto &layer : layers) {
                conjugate_by_layer(layer, p);
            }
            if (p != PauliOp::single(width, j, gen)) {
                PauliOp neg = PauliOp::single(width, j, gen);
                neg.set_phase(2);
                if (p != neg) {
                    throw Error(
                        ErrorCode::NotAPauli,
                        std::string("generator ") + (gen == Letter::X ? "X" : "Z") + std::to_string(j) + " maps to " +
                            p.str());
                }
                // Q' anticommutes with X_j iff it has a Z component on j.
                if (gen == Letter::X) {
                    result.set(j, letter_from_bits(result.x(j), true));
                } else {
                    result.set(j, letter_from_bits(true, result.z(j)));
                }
            }
        }
    }
    return result;
}

PauliOp net_pauli(const Circuit &circuit) {
    return net_pauli(circuit.layers, circuit.width());
}

std::string target_bitstring(const PauliOp &net) {
    std::string out(net.width(), '0');
    for (size_t q = 0; q < net.width(); q++) {
        if (net.x(q)) {
            out[q] = '1';
        }
    }
    return out;
}

std::string target_bitstring(const Circuit &circuit) {
    return target_bitstring(net_pauli(circuit));
}

}  // namespace mirrorbench
