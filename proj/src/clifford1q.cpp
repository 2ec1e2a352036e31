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

#include <stdexcept>
#include <vector>

namespace mirrorbench::clifford1q {

namespace {

// Rank used by the canonical ordering: X < Y < Z.
int letter_rank(Letter p) {
    switch (p) {
        case Letter::X:
            return 0;
        case Letter::Y:
            return 1;
        case Letter::Z:
            return 2;
        default:
            return -1;
    }
}

constexpr std::array<Letter, 3> kByRank = {Letter::X, Letter::Y, Letter::Z};

// Levi-Civita sign for the cyclic order X -> Y -> Z.
int levi_civita(Letter a, Letter b) {
    int ra = letter_rank(a);
    int rb = letter_rank(b);
    return (rb - ra + 3) % 3 == 1 ? +1 : -1;
}

struct Tables {
    std::array<Images, kCount> images{};
    std::array<std::array<SignedLetter, 4>, kCount> conj{};
    std::array<std::array<int, kCount>, kCount> compose{};
    std::array<int, kCount> inverse{};
    int identity = -1;
    std::array<int, 4> pauli{};

    Tables() {
        int k = 0;
        for (int cx = 0; cx < 6; cx++) {
            for (int cz = 0; cz < 6; cz++) {
                if (cx / 2 == cz / 2) {
                    continue;
                }
                images[k] = Images{
                    SignedLetter{kByRank[cx / 2], (cx & 1) != 0},
                    SignedLetter{kByRank[cz / 2], (cz & 1) != 0}};
                k++;
            }
        }
        for (int g = 0; g < kCount; g++) {
            const Images &im = images[g];
            conj[g][static_cast<int>(Letter::I)] = {Letter::I, false};
            conj[g][static_cast<int>(Letter::X)] = im.x;
            conj[g][static_cast<int>(Letter::Z)] = im.z;
            // Y = iXZ  ->  i * x' * z' = i * (i eps c) = -eps c, since x' != z'.
            Letter c = kByRank[3 - letter_rank(im.x.letter) - letter_rank(im.z.letter)];
            bool negative = (levi_civita(im.x.letter, im.z.letter) > 0) ^ im.x.negative ^ im.z.negative;
            conj[g][static_cast<int>(Letter::Y)] = {c, negative};
        }
        for (int a = 0; a < kCount; a++) {
            for (int b = 0; b < kCount; b++) {
                // U(a)U(b) X (..)^dag = a(b(X)).
                auto apply = [&](SignedLetter s) {
                    SignedLetter r = conj[a][static_cast<int>(s.letter)];
                    r.negative ^= s.negative;
                    return r;
                };
                Images im{apply(images[b].x), apply(images[b].z)};
                compose[a][b] = find(im);
            }
        }
        identity = find(Images{{Letter::X, false}, {Letter::Z, false}});
        for (int a = 0; a < kCount; a++) {
            for (int b = 0; b < kCount; b++) {
                if (compose[a][b] == identity) {
                    inverse[a] = b;
                }
            }
        }
        pauli[static_cast<int>(Letter::I)] = identity;
        pauli[static_cast<int>(Letter::X)] = find(Images{{Letter::X, false}, {Letter::Z, true}});
        pauli[static_cast<int>(Letter::Z)] = find(Images{{Letter::X, true}, {Letter::Z, false}});
        pauli[static_cast<int>(Letter::Y)] = find(Images{{Letter::X, true}, {Letter::Z, true}});
    }

    int find(const Images &im) const {
        for (int g = 0; g < kCount; g++) {
            if (images[g].x == im.x && images[g].z == im.z) {
                return g;
            }
        }
        return -1;
    }
};

const Tables &tables() {
    static const Tables t;
    return t;
}

struct Alias {
    const char *name;
    Images images;
};

// Names are fixed by conjugation action; see the matrix cross-check in tests.
const std::array<Alias, 9> kAliases = {{
    {"I", {{Letter::X, false}, {Letter::Z, false}}},
    {"X", {{Letter::X, false}, {Letter::Z, true}}},
    {"Y", {{Letter::X, true}, {Letter::Z, true}}},
    {"Z", {{Letter::X, true}, {Letter::Z, false}}},
    {"H", {{Letter::Z, false}, {Letter::X, false}}},
    {"S", {{Letter::Y, false}, {Letter::Z, false}}},
    {"SDG", {{Letter::Y, true}, {Letter::Z, false}}},
    {"SX", {{Letter::X, false}, {Letter::Y, true}}},
    {"SXDG", {{Letter::X, false}, {Letter::Y, false}}},
}};

}  // namespace

const Images &images(int index) {
    return tables().images.at(index);
}

std::optional<int> index_of(const Images &im) {
    int g = tables().find(im);
    if (g < 0) {
        return std::nullopt;
    }
    return g;
}

int index_from_images(SignedLetter x, SignedLetter z) {
    auto g = index_of(Images{x, z});
    if (!g) {
        throw std::invalid_argument("not a single-qubit Clifford image pair");
    }
    return *g;
}

SignedLetter conjugate(int index, Letter p) {
    return tables().conj.at(index)[static_cast<int>(p)];
}

int compose(int a, int b) {
    return tables().compose.at(a).at(b);
}

int inverse(int index) {
    return tables().inverse.at(index);
}

int identity() {
    return tables().identity;
}

int pauli(Letter p) {
    return tables().pauli[static_cast<int>(p)];
}

std::optional<Letter> as_pauli(int index) {
    const auto &t = tables();
    for (int p = 0; p < 4; p++) {
        if (t.pauli[p] == index) {
            return static_cast<Letter>(p);
        }
    }
    return std::nullopt;
}

std::string name(int index) {
    const Images &im = images(index);
    for (const auto &a : kAliases) {
        if (a.images.x == im.x && a.images.z == im.z) {
            return a.name;
        }
    }
    return "C" + std::to_string(index);
}

std::optional<int> parse_name(std::string_view text) {
    for (const auto &a : kAliases) {
        if (text == a.name) {
            return index_of(a.images);
        }
    }
    if (text.size() >= 2 && text.size() <= 3 && text[0] == 'C') {
        int v = 0;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9') {
                return std::nullopt;
            }
            v = v * 10 + (c - '0');
        }
        if (v < kCount) {
            return v;
        }
    }
    return std::nullopt;
}

}  // namespace mirrorbench::clifford1q
