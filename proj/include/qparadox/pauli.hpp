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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qparadox/errors.hpp"

namespace qparadox {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

inline char letter_char(PauliLetter p) {
    return "IXZY"[static_cast<std::uint8_t>(p)];
}

inline PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I': case 'u': return PauliLetter::I;
        case 'X': case 'x': return PauliLetter::X;
        case 'Y': case 'y': return PauliLetter::Y;
        case 'Z': case 'z': return PauliLetter::Z;
        default:
            throw ParseError(std::string("not a Pauli letter: '") + c + "'");
    }
}

/// An n-qubit Pauli operator i^phase * P_1 (x) P_2 (x) ... (x) P_n.
///
/// Letters are stored symplectically: X=(1,0), Z=(0,1), Y=(1,1). Bit
/// (n-1-k) of each mask belongs to site k, so the masks line up with
/// computational-basis indices where site 0 is the most significant bit
/// (|10010> has index 0b10010). Sites are 0-based in code and 1-based in
/// every piece of user-facing text.
///
/// Y is stored as the letter Y itself (not X*Z), so a phase of 0 always
/// means a Hermitian tensor product of the usual Pauli matrices.
class PauliString {
   public:
    static constexpr std::size_t kMaxQubits = 64;

    PauliString() = default;

    explicit PauliString(std::size_t num_qubits) : n_(num_qubits) {
        if (num_qubits == 0 || num_qubits > kMaxQubits) {
            throw DimensionError("PauliString supports 1.." + std::to_string(kMaxQubits) + " qubits, got " +
                                 std::to_string(num_qubits));
        }
    }

    PauliString(std::size_t num_qubits, std::uint64_t xs, std::uint64_t zs, int phase_exp = 0)
        : PauliString(num_qubits) {
        std::uint64_t m = mask();
        if ((xs & ~m) || (zs & ~m)) {
            throw DimensionError("symplectic bits outside of qubit range");
        }
        x_ = xs;
        z_ = zs;
        phase_ = static_cast<std::uint8_t>(((phase_exp % 4) + 4) % 4);
    }

    static PauliString identity(std::size_t num_qubits) {
        return PauliString(num_qubits);
    }

    /// A single-site operator on an otherwise-identity register.
    static PauliString single(std::size_t num_qubits, std::size_t site, PauliLetter letter) {
        PauliString p(num_qubits);
        p.set_letter(site, letter);
        return p;
    }

    static PauliString from_letters(std::span<const PauliLetter> letters, int phase_exp = 0) {
        PauliString p(letters.size());
        for (std::size_t k = 0; k < letters.size(); k++) {
            p.set_letter(k, letters[k]);
        }
        p.phase_ = static_cast<std::uint8_t>(((phase_exp % 4) + 4) % 4);
        return p;
    }

    /// Parses `[+-]?i?[IXYZ]+`. Lower-case x, y, z and `u` (identity) are
    /// accepted as letters too.
    static PauliString parse(std::string_view text) {
        int phase = 0;
        std::size_t pos = 0;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            phase = text[pos] == '-' ? 2 : 0;
            pos++;
        }
        // 'i' prefix only counts as a phase when something follows it.
        if (pos + 1 < text.size() && text[pos] == 'i') {
            phase += 1;
            pos++;
        }
        if (pos >= text.size()) {
            throw ParseError("empty Pauli string: '" + std::string(text) + "'");
        }
        std::vector<PauliLetter> letters;
        letters.reserve(text.size() - pos);
        for (; pos < text.size(); pos++) {
            letters.push_back(letter_from_char(text[pos]));
        }
        if (letters.size() > kMaxQubits) {
            throw ParseError("Pauli string too long");
        }
        return from_letters(letters, phase);
    }

    std::size_t num_qubits() const {
        return n_;
    }
    int phase_exp() const {
        return phase_;
    }
    std::uint64_t x_bits() const {
        return x_;
    }
    std::uint64_t z_bits() const {
        return z_;
    }

    std::uint64_t site_bit(std::size_t site) const {
        if (site >= n_) {
            throw DimensionError("site " + std::to_string(site) + " out of range for " + std::to_string(n_) +
                                 " qubits");
        }
        return std::uint64_t{1} << (n_ - 1 - site);
    }

    PauliLetter letter(std::size_t site) const {
        std::uint64_t b = site_bit(site);
        return static_cast<PauliLetter>(((x_ & b) ? 1 : 0) | ((z_ & b) ? 2 : 0));
    }

    void set_letter(std::size_t site, PauliLetter letter) {
        std::uint64_t b = site_bit(site);
        auto v = static_cast<std::uint8_t>(letter);
        x_ = (v & 1) ? (x_ | b) : (x_ & ~b);
        z_ = (v & 2) ? (z_ | b) : (z_ & ~b);
    }

    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    bool is_identity_up_to_phase() const {
        return x_ == 0 && z_ == 0;
    }
    bool is_identity() const {
        return is_identity_up_to_phase() && phase_ == 0;
    }
    std::size_t weight() const {
        return static_cast<std::size_t>(std::popcount(x_ | z_));
    }

    /// Same letters, phase dropped.
    PauliString unsigned_part() const {
        PauliString r = *this;
        r.phase_ = 0;
        return r;
    }

    PauliString with_phase(int phase_exp) const {
        PauliString r = *this;
        r.phase_ = static_cast<std::uint8_t>(((phase_exp % 4) + 4) % 4);
        return r;
    }

    PauliString operator-() const {
        return with_phase(phase_ + 2);
    }

    PauliString &operator*=(const PauliString &rhs) {
        check_same_size(rhs, "multiply");
        // Per site, the letter product picks up +i for XY, YZ, ZX and -i for
        // the reversed orders.
        std::uint64_t ax = x_ & ~z_, ay = x_ & z_, az = ~x_ & z_;
        std::uint64_t bx = rhs.x_ & ~rhs.z_, by = rhs.x_ & rhs.z_, bz = ~rhs.x_ & rhs.z_;
        std::uint64_t plus = (ax & by) | (ay & bz) | (az & bx);
        std::uint64_t minus = (ax & bz) | (ay & bx) | (az & by);
        int log_i = phase_ + rhs.phase_ + std::popcount(plus) - std::popcount(minus);
        phase_ = static_cast<std::uint8_t>(((log_i % 4) + 4) % 4);
        x_ ^= rhs.x_;
        z_ ^= rhs.z_;
        return *this;
    }

    friend PauliString operator*(PauliString lhs, const PauliString &rhs) {
        lhs *= rhs;
        return lhs;
    }

    bool commutes(const PauliString &other) const {
        check_same_size(other, "commutes");
        return (std::popcount((x_ & other.z_) ^ (z_ & other.x_)) & 1) == 0;
    }

    /// Rotates letters so that the letter at site j moves to site (j+k) mod n.
    PauliString cyclic_shift(long long k) const {
        long long n = static_cast<long long>(n_);
        auto r = static_cast<unsigned>(((k % n) + n) % n);
        PauliString out = *this;
        out.x_ = rotate_right(x_, r);
        out.z_ = rotate_right(z_, r);
        return out;
    }

    /// Qubit indices with a non-identity letter, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < n_; k++) {
            if (letter(k) != PauliLetter::I) {
                out.push_back(k);
            }
        }
        return out;
    }

    /// Keeps the letters on `sites`, identity elsewhere, phase 0.
    PauliString restrict_to(std::span<const std::size_t> sites) const {
        std::uint64_t keep = 0;
        for (std::size_t s : sites) {
            keep |= site_bit(s);
        }
        return PauliString(n_, x_ & keep, z_ & keep, 0);
    }

    /// Letters everywhere except `site`, phase 0.
    PauliString without_site(std::size_t site) const {
        std::uint64_t keep = mask() & ~site_bit(site);
        return PauliString(n_, x_ & keep, z_ & keep, 0);
    }

    /// Canonical text: optional '-', optional 'i', then letters, site 1 first.
    std::string str() const {
        std::string out;
        if (phase_ & 2) {
            out += '-';
        }
        if (phase_ & 1) {
            out += 'i';
        }
        for (std::size_t k = 0; k < n_; k++) {
            out += letter_char(letter(k));
        }
        return out;
    }

    /// Product notation over the support, e.g. "X1 Z2 X3"; "I" for identity.
    std::string sparse_str() const {
        std::string out;
        if (phase_ & 2) {
            out += '-';
        }
        if (phase_ & 1) {
            out += 'i';
        }
        bool any = false;
        for (std::size_t k = 0; k < n_; k++) {
            PauliLetter p = letter(k);
            if (p == PauliLetter::I) {
                continue;
            }
            if (any) {
                out += ' ';
            }
            out += letter_char(p);
            out += std::to_string(k + 1);
            any = true;
        }
        if (!any) {
            out += 'I';
        }
        return out;
    }

    bool operator==(const PauliString &) const = default;

    /// Orders by qubit count, then by letter text (I < X < Y < Z), then phase.
    std::strong_ordering operator<=>(const PauliString &other) const {
        if (auto c = n_ <=> other.n_; c != 0) {
            return c;
        }
        for (std::size_t k = 0; k < n_; k++) {
            char a = letter_char(letter(k));
            char b = letter_char(other.letter(k));
            if (auto c = a <=> b; c != 0) {
                return c;
            }
        }
        return phase_ <=> other.phase_;
    }

   private:
    std::uint64_t mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }

    std::uint64_t rotate_right(std::uint64_t v, unsigned r) const {
        if (r == 0) {
            return v;
        }
        return ((v >> r) | (v << (n_ - r))) & mask();
    }

    void check_same_size(const PauliString &other, const char *what) const {
        if (n_ != other.n_) {
            throw DimensionError(std::string(what) + ": qubit counts differ (" + std::to_string(n_) + " vs " +
                                 std::to_string(other.n_) + ")");
        }
    }

    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    std::uint8_t phase_ = 0;
};

inline PauliString multiply(const PauliString &a, const PauliString &b) {
    return a * b;
}

inline bool commutes(const PauliString &a, const PauliString &b) {
    return a.commutes(b);
}

inline PauliString cyclic_shift(const PauliString &p, long long k) {
    return p.cyclic_shift(k);
}

inline std::ostream &operator<<(std::ostream &out, const PauliString &p) {
    return out << p.str();
}

}  // namespace qparadox

template <>
struct std::hash<qparadox::PauliString> {
    std::size_t operator()(const qparadox::PauliString &p) const noexcept {
        std::size_t h = std::hash<std::uint64_t>{}(p.x_bits() * 0x9E3779B97F4A7C15ULL ^ p.z_bits());
        return h ^ (p.num_qubits() << 3) ^ static_cast<std::size_t>(p.phase_exp());
    }
};
