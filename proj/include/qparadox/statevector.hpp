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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qparadox/dyadic.hpp"
#include "qparadox/errors.hpp"
#include "qparadox/pauli.hpp"

namespace qparadox {

/// Dense amplitude vector over the computational basis |0...0> .. |1...1>,
/// site 1 being the most significant bit of the index.
///
/// Vectors are not required to be normalized. Constructions that would
/// need an irrational normalization (|000> + |111>, Steane codewords) keep
/// integer amplitudes and callers consult squared_norm() instead.
class StateVector {
   public:
    static constexpr std::size_t kMaxQubits = 16;

    StateVector() = default;

    /// The zero vector on `num_qubits` qubits.
    explicit StateVector(std::size_t num_qubits) : n_(num_qubits) {
        if (num_qubits == 0 || num_qubits > kMaxQubits) {
            throw DimensionError("StateVector supports 1.." + std::to_string(kMaxQubits) + " qubits");
        }
        amps_.assign(std::size_t{1} << num_qubits, DyadicGaussian{});
    }

    static StateVector basis(std::size_t num_qubits, std::size_t index) {
        StateVector v(num_qubits);
        if (index >= v.dimension()) {
            throw DimensionError("basis index out of range");
        }
        v.amps_[index] = DyadicGaussian(1);
        return v;
    }

    /// Basis ket from a bit label such as "10010".
    static StateVector ket(std::string_view label) {
        return basis(label.size(), index_of_label(label));
    }

    static std::size_t index_of_label(std::string_view label) {
        if (label.empty() || label.size() > kMaxQubits) {
            throw ParseError("bad ket label: '" + std::string(label) + "'");
        }
        std::size_t index = 0;
        for (char c : label) {
            if (c != '0' && c != '1') {
                throw ParseError("bad ket label: '" + std::string(label) + "'");
            }
            index = (index << 1) | static_cast<std::size_t>(c - '0');
        }
        return index;
    }

    static std::string label_of_index(std::size_t num_qubits, std::size_t index) {
        std::string s(num_qubits, '0');
        for (std::size_t k = 0; k < num_qubits; k++) {
            if ((index >> (num_qubits - 1 - k)) & 1) {
                s[k] = '1';
            }
        }
        return s;
    }

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t dimension() const {
        return amps_.size();
    }
    std::span<const DyadicGaussian> amplitudes() const {
        return amps_;
    }

    const DyadicGaussian &operator[](std::size_t index) const {
        return amps_[index];
    }
    DyadicGaussian &operator[](std::size_t index) {
        return amps_[index];
    }

    const DyadicGaussian &amplitude(std::string_view label) const {
        if (label.size() != n_) {
            throw DimensionError("ket label length does not match qubit count");
        }
        return amps_[index_of_label(label)];
    }

    bool is_zero() const {
        for (const auto &a : amps_) {
            if (!a.is_zero()) {
                return false;
            }
        }
        return true;
    }

    StateVector &operator+=(const StateVector &rhs) {
        check_same_size(rhs);
        for (std::size_t k = 0; k < amps_.size(); k++) {
            amps_[k] += rhs.amps_[k];
        }
        return *this;
    }
    StateVector &operator-=(const StateVector &rhs) {
        check_same_size(rhs);
        for (std::size_t k = 0; k < amps_.size(); k++) {
            amps_[k] -= rhs.amps_[k];
        }
        return *this;
    }
    StateVector &operator*=(const DyadicGaussian &s) {
        for (auto &a : amps_) {
            a *= s;
        }
        return *this;
    }

    friend StateVector operator+(StateVector a, const StateVector &b) {
        return a += b;
    }
    friend StateVector operator-(StateVector a, const StateVector &b) {
        return a -= b;
    }
    friend StateVector operator*(const DyadicGaussian &s, StateVector v) {
        return v *= s;
    }
    StateVector operator-() const {
        return DyadicGaussian(-1) * *this;
    }

    bool operator==(const StateVector &) const = default;

    /// <this|this>, exact.
    DyadicGaussian squared_norm() const;

    /// Permutes amplitudes so that the qubit at site j moves to site j+k.
    StateVector cyclic_shift(long long k) const {
        long long n = static_cast<long long>(n_);
        auto r = static_cast<unsigned>(((k % n) + n) % n);
        StateVector out(n_);
        std::size_t mask = dimension() - 1;
        for (std::size_t idx = 0; idx < dimension(); idx++) {
            std::size_t to = r == 0 ? idx : (((idx >> r) | (idx << (n_ - r))) & mask);
            out.amps_[to] = amps_[idx];
        }
        return out;
    }

    /// Flips every qubit (|0> <-> |1> in every ket label).
    StateVector bit_complement() const {
        StateVector out(n_);
        std::size_t mask = dimension() - 1;
        for (std::size_t idx = 0; idx < dimension(); idx++) {
            out.amps_[idx ^ mask] = amps_[idx];
        }
        return out;
    }

    /// The same ray with the global phase i^k chosen so that the first
    /// nonzero amplitude has positive real part and non-negative imaginary
    /// part. Two vectors that differ by a power of i map to the same result.
    StateVector canonical_phase() const {
        for (const auto &a : amps_) {
            if (a.is_zero()) {
                continue;
            }
            for (int k = 0; k < 4; k++) {
                DyadicGaussian b = a * DyadicGaussian::i_pow(k);
                if (b.re_numerator() > 0 && b.im_numerator() >= 0) {
                    return DyadicGaussian::i_pow(k) * *this;
                }
            }
        }
        return *this;
    }

    /// Nonzero entries as (ket label, amplitude text) pairs, index order.
    std::vector<std::pair<std::string, std::string>> serialize() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (std::size_t idx = 0; idx < dimension(); idx++) {
            if (!amps_[idx].is_zero()) {
                out.emplace_back(label_of_index(n_, idx), amps_[idx].str());
            }
        }
        return out;
    }

    static StateVector deserialize(std::size_t num_qubits,
                                   std::span<const std::pair<std::string, std::string>> entries) {
        StateVector v(num_qubits);
        for (const auto &[label, amp] : entries) {
            if (label.size() != num_qubits) {
                throw ParseError("ket label '" + label + "' has wrong length");
            }
            v.amps_[index_of_label(label)] += DyadicGaussian::parse(amp);
        }
        return v;
    }

    void check_same_size(const StateVector &other) const {
        if (n_ != other.n_) {
            throw DimensionError("state vectors have different qubit counts (" + std::to_string(n_) + " vs " +
                                 std::to_string(other.n_) + ")");
        }
    }

   private:
    std::size_t n_ = 0;
    std::vector<DyadicGaussian> amps_;
};

/// <u|v>, conjugate-linear in u.
inline DyadicGaussian inner(const StateVector &u, const StateVector &v) {
    u.check_same_size(v);
    DyadicGaussian acc;
    for (std::size_t k = 0; k < u.dimension(); k++) {
        if (u[k].is_zero() || v[k].is_zero()) {
            continue;
        }
        acc += u[k].conj() * v[k];
    }
    return acc;
}

inline DyadicGaussian StateVector::squared_norm() const {
    return inner(*this, *this);
}

/// p|v>. X and Y flip index bits, Z and Y contribute (-1)^bit, each Y adds
/// a factor i, and the string's own phase i^k multiplies the result.
inline StateVector apply(const PauliString &p, const StateVector &v) {
    if (p.num_qubits() != v.num_qubits()) {
        throw DimensionError("apply: Pauli string has " + std::to_string(p.num_qubits()) + " qubits, state has " +
                             std::to_string(v.num_qubits()));
    }
    auto xs = static_cast<std::size_t>(p.x_bits());
    auto zs = static_cast<std::size_t>(p.z_bits());
    int num_y = std::popcount(p.x_bits() & p.z_bits());
    StateVector out(v.num_qubits());
    for (std::size_t idx = 0; idx < v.dimension(); idx++) {
        if (v[idx].is_zero()) {
            continue;
        }
        // Z acts on the input bit; Y = iXZ, so Y|b> = i(-1)^b |b^1>.
        int log_i = p.phase_exp() + num_y + 2 * (std::popcount(idx & zs) & 1);
        out[idx ^ xs] = DyadicGaussian::i_pow(log_i) * v[idx];
    }
    return out;
}

/// +1 or -1 if p|v> = +/-|v> exactly; nullopt if v is not an eigenvector
/// (or is zero). p must be Hermitian.
inline std::optional<int> eigensign(const PauliString &p, const StateVector &v) {
    if (!p.is_hermitian()) {
        throw InputError("eigensign: " + p.str() + " is not Hermitian");
    }
    if (v.is_zero()) {
        return std::nullopt;
    }
    StateVector w = apply(p, v);
    if (w == v) {
        return 1;
    }
    if (w == -v) {
        return -1;
    }
    return std::nullopt;
}

/// An orthogonal projector given by a set of mutually orthogonal, nonzero
/// spanning vectors. Vectors are kept unnormalized; rank is the set size.
class Projector {
   public:
    Projector() = default;

    static Projector from_vectors(std::vector<StateVector> vs) {
        if (vs.empty()) {
            throw InputError("projector needs at least one spanning vector");
        }
        for (std::size_t a = 0; a < vs.size(); a++) {
            vs[a].check_same_size(vs[0]);
            if (vs[a].is_zero()) {
                throw InputError("projector spanning vector is zero");
            }
            for (std::size_t b = a + 1; b < vs.size(); b++) {
                vs[a].check_same_size(vs[b]);
                if (!inner(vs[a], vs[b]).is_zero()) {
                    throw InputError("projector spanning vectors are not orthogonal");
                }
            }
        }
        Projector p;
        p.n_ = vs[0].num_qubits();
        p.vectors_ = std::move(vs);
        return p;
    }

    static Projector from_vector(StateVector v) {
        std::vector<StateVector> vs;
        vs.push_back(std::move(v));
        return from_vectors(std::move(vs));
    }

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t rank() const {
        return vectors_.size();
    }
    const std::vector<StateVector> &basis_vectors() const {
        return vectors_;
    }

    /// Exact P|v> = sum_s |s><s|v> / <s|s>. Requires every <s|s> to be a
    /// power of two so the result stays dyadic.
    StateVector apply(const StateVector &v) const {
        v.check_same_size(vectors_.front());
        StateVector out(n_);
        for (const auto &s : vectors_) {
            DyadicGaussian c = inner(s, v);
            if (c.is_zero()) {
                continue;
            }
            out += c.scaled_pow2(-log2_norm(s)) * s;
        }
        return out;
    }

    /// Dense matrix, row-major, dimension x dimension.
    std::vector<DyadicGaussian> matrix() const {
        std::size_t d = std::size_t{1} << n_;
        std::vector<DyadicGaussian> m(d * d);
        for (const auto &s : vectors_) {
            int k = log2_norm(s);
            for (std::size_t r = 0; r < d; r++) {
                if (s[r].is_zero()) {
                    continue;
                }
                for (std::size_t c = 0; c < d; c++) {
                    if (!s[c].is_zero()) {
                        m[r * d + c] += (s[r] * s[c].conj()).scaled_pow2(-k);
                    }
                }
            }
        }
        return m;
    }

    /// True iff every spanning vector is orthogonal to v.
    bool annihilates(const StateVector &v) const {
        for (const auto &s : vectors_) {
            if (!inner(s, v).is_zero()) {
                return false;
            }
        }
        return true;
    }

   private:
    static int log2_norm(const StateVector &s) {
        auto k = s.squared_norm().log2_if_power_of_two();
        if (!k) {
            throw InputError("spanning vector norm is not a power of two; projector is not dyadic");
        }
        return *k;
    }

    std::size_t n_ = 0;
    std::vector<StateVector> vectors_;
};

/// PQ = 0, i.e. every spanning vector of P is orthogonal to every spanning
/// vector of Q.
inline bool orthogonal(const Projector &p, const Projector &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw DimensionError("projectors have different qubit counts");
    }
    for (const auto &s : p.basis_vectors()) {
        if (!q.annihilates(s)) {
            return false;
        }
    }
    return true;
}

/// Ranks sum to the full dimension and all pairs are orthogonal; this is
/// equivalent to the projectors summing to the identity.
inline bool resolves_identity(std::span<const Projector> ps) {
    if (ps.empty()) {
        return false;
    }
    std::size_t total = 0;
    for (std::size_t a = 0; a < ps.size(); a++) {
        if (ps[a].num_qubits() != ps[0].num_qubits()) {
            throw DimensionError("projectors have different qubit counts");
        }
        total += ps[a].rank();
        for (std::size_t b = a + 1; b < ps.size(); b++) {
            if (!orthogonal(ps[a], ps[b])) {
                return false;
            }
        }
    }
    return total == (std::size_t{1} << ps[0].num_qubits());
}

/// Sums the dense matrices and compares with the identity entry by entry.
inline bool sums_to_identity(std::span<const Projector> ps) {
    if (ps.empty()) {
        return false;
    }
    std::size_t d = std::size_t{1} << ps[0].num_qubits();
    std::vector<DyadicGaussian> acc(d * d);
    for (const auto &p : ps) {
        if (p.num_qubits() != ps[0].num_qubits()) {
            throw DimensionError("projectors have different qubit counts");
        }
        auto m = p.matrix();
        for (std::size_t k = 0; k < m.size(); k++) {
            acc[k] += m[k];
        }
    }
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            if (acc[r * d + c] != DyadicGaussian(r == c ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace qparadox
