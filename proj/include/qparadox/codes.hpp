// Copyright 2026 The qparadox Authors
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
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qparadox/errors.hpp"
#include "qparadox/stabilizer.hpp"
#include "qparadox/statevector.hpp"

namespace qparadox {

struct CodeDefinition {
    std::string name;
    std::size_t num_qubits = 0;
    StateVector codeword0;
    StateVector codeword1;
    /// <c|c> for each codeword. Codewords whose true normalization is
    /// irrational are stored with integer amplitudes and this tag.
    DyadicGaussian codeword_norm_sq;
    std::vector<StabilizerElement> generators;
    std::size_t expected_group_order = 0;

    const StateVector &codeword(Codeword c) const {
        return c == Codeword::Zero ? codeword0 : codeword1;
    }

    StabilizerGroup group() const {
        StabilizerGroup g = StabilizerGroup::close(generators, num_qubits);
        if (g.order() != expected_group_order) {
            throw ClosureError(name + ": closed group has order " + std::to_string(g.order()) + ", expected " +
                               std::to_string(expected_group_order));
        }
        return g;
    }
};

/// The five-qubit code. |0_L> has sixteen kets of amplitude +/-1/4;
/// |1_L> swaps 0 and 1 in every ket. Both are invariant under cyclic
/// permutation of the qubits.
inline CodeDefinition five_qubit_code() {
    static constexpr std::array<std::string_view, 6> kMinus = {"00000", "11000", "01100",
                                                                "00110", "00011", "10001"};
    static constexpr std::array<std::string_view, 10> kPlus = {"10010", "10100", "01001", "01010", "00101",
                                                               "11110", "11101", "11011", "10111", "01111"};
    CodeDefinition code;
    code.name = "five";
    code.num_qubits = 5;
    StateVector zero(5);
    for (auto label : kMinus) {
        zero[StateVector::index_of_label(label)] = DyadicGaussian(-1, 0, 2);
    }
    for (auto label : kPlus) {
        zero[StateVector::index_of_label(label)] = DyadicGaussian(1, 0, 2);
    }
    code.codeword0 = zero;
    code.codeword1 = zero.bit_complement();
    code.codeword_norm_sq = DyadicGaussian(1);

    PauliString base = PauliString::parse("XZIZX");
    for (int k = 0; k < 4; k++) {
        code.generators.emplace_back(base.cyclic_shift(k), 1, 1);
    }
    code.generators.emplace_back(PauliString::parse("ZZZZZ"), 1, -1);
    code.expected_group_order = 32;
    return code;
}

/// The three-qubit states |000> +/- |111> (stored unnormalized, <c|c> = 2)
/// with their eight-element group.
inline CodeDefinition mermin_code() {
    CodeDefinition code;
    code.name = "mermin";
    code.num_qubits = 3;
    StateVector ghz0 = StateVector::ket("000");
    StateVector ghz1 = StateVector::ket("111");
    code.codeword0 = ghz0 + ghz1;
    code.codeword1 = ghz0 - ghz1;
    code.codeword_norm_sq = DyadicGaussian(2);
    // XYY * YXY = ZZI, so the third generator must not be ZZI.
    code.generators.emplace_back(PauliString::parse("XYY"), -1, 1);
    code.generators.emplace_back(PauliString::parse("YXY"), -1, 1);
    code.generators.emplace_back(PauliString::parse("IZZ"), 1, 1);
    code.expected_group_order = 8;
    return code;
}

/// Rows of the [7,4,3] Hamming parity-check matrix, site 1 first.
inline constexpr std::array<std::string_view, 3> kHammingRows = {"0001111", "0110011", "1010101"};

/// Steane's seven-qubit code: X- and Z-type copies of the Hamming checks
/// plus ZZZZZZZ as the logical sign operator. Codewords are stored with
/// amplitude 1 on each of their eight kets (<c|c> = 8).
///
/// Throws if any non-identity element of the closed group has weight
/// outside [3, 7].
inline CodeDefinition steane_code() {
    CodeDefinition code;
    code.name = "steane";
    code.num_qubits = 7;
    for (PauliLetter letter : {PauliLetter::X, PauliLetter::Z}) {
        for (auto row : kHammingRows) {
            PauliString p(7);
            for (std::size_t k = 0; k < 7; k++) {
                if (row[k] == '1') {
                    p.set_letter(k, letter);
                }
            }
            code.generators.emplace_back(p, 1, 1);
        }
    }
    code.generators.emplace_back(PauliString::parse("ZZZZZZZ"), 1, -1);
    code.expected_group_order = 128;

    // |0_L> is the uniform sum over the span of the Hamming rows.
    std::array<std::size_t, 3> rows{};
    for (std::size_t r = 0; r < 3; r++) {
        rows[r] = StateVector::index_of_label(kHammingRows[r]);
    }
    StateVector zero(7);
    for (std::size_t mask = 0; mask < 8; mask++) {
        std::size_t idx = 0;
        for (std::size_t r = 0; r < 3; r++) {
            if (mask & (std::size_t{1} << r)) {
                idx ^= rows[r];
            }
        }
        zero[idx] = DyadicGaussian(1);
    }
    code.codeword0 = zero;
    code.codeword1 = zero.bit_complement();
    code.codeword_norm_sq = DyadicGaussian(8);

    StabilizerGroup g = code.group();
    for (const auto &e : g.elements()) {
        if (!e.op.is_identity() && (e.op.weight() < 3 || e.op.weight() > 7)) {
            throw ClosureError("steane: group element " + e.op.str() + " has weight " +
                               std::to_string(e.op.weight()) + ", outside [3, 7]");
        }
    }
    return code;
}

/// Looks up "five", "mermin" or "steane".
inline CodeDefinition code_by_name(std::string_view name) {
    if (name == "five") {
        return five_qubit_code();
    }
    if (name == "mermin") {
        return mermin_code();
    }
    if (name == "steane") {
        return steane_code();
    }
    throw InputError("unknown code '" + std::string(name) + "' (expected five, mermin or steane)");
}

}  // namespace qparadox
