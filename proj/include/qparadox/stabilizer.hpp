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

#include <algorithm>
#include <bit>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "qparadox/errors.hpp"
#include "qparadox/pauli.hpp"
#include "qparadox/statevector.hpp"

namespace qparadox {

enum class Codeword { Zero = 0, One = 1 };

/// A Hermitian Pauli operator together with its eigenvalue on each of the
/// two codewords.
///
/// The operator is always stored with phase 0; an input like -XYY with
/// eigenvalue +1 is stored as XYY with eigenvalue -1.
struct StabilizerElement {
    PauliString op;
    int sign0 = 1;
    int sign1 = 1;

    StabilizerElement() = default;
    StabilizerElement(PauliString p, int s0, int s1) : op(std::move(p)), sign0(s0), sign1(s1) {
        if (!op.is_hermitian()) {
            throw InputError("stabilizer element " + op.str() + " is not Hermitian");
        }
        if ((s0 != 1 && s0 != -1) || (s1 != 1 && s1 != -1)) {
            throw InputError("stabilizer signs must be +1 or -1");
        }
        if (op.phase_exp() == 2) {
            op = op.unsigned_part();
            sign0 = -sign0;
            sign1 = -sign1;
        }
    }

    int sign(Codeword c) const {
        return c == Codeword::Zero ? sign0 : sign1;
    }
    bool sign_stable() const {
        return sign0 == sign1;
    }

    friend StabilizerElement operator*(const StabilizerElement &a, const StabilizerElement &b) {
        PauliString p = a.op * b.op;
        if (!p.is_hermitian()) {
            throw ClosureError(a.op.str() + " and " + b.op.str() + " do not commute");
        }
        return StabilizerElement(p, a.sign0 * b.sign0, a.sign1 * b.sign1);
    }

    bool operator==(const StabilizerElement &) const = default;
};

/// Closed, Abelian, sign-consistent set of stabilizer elements, sorted by
/// operator text with the identity first.
class StabilizerGroup {
   public:
    StabilizerGroup() = default;

    std::size_t num_qubits() const {
        return n_;
    }
    std::size_t order() const {
        return elements_.size();
    }
    const std::vector<StabilizerElement> &elements() const {
        return elements_;
    }

    std::optional<StabilizerElement> find(const PauliString &op) const {
        auto it = index_.find(op.unsigned_part());
        if (it == index_.end()) {
            return std::nullopt;
        }
        StabilizerElement e = elements_[it->second];
        if (op.phase_exp() == 2) {
            e = StabilizerElement(-e.op, e.sign0, e.sign1);
        } else if (op.phase_exp() != 0) {
            return std::nullopt;
        }
        return e;
    }

    bool contains(const PauliString &op) const {
        return index_.contains(op.unsigned_part());
    }

    bool is_abelian() const {
        for (std::size_t a = 0; a < elements_.size(); a++) {
            for (std::size_t b = a + 1; b < elements_.size(); b++) {
                if (!elements_[a].op.commutes(elements_[b].op)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool is_closed() const {
        for (const auto &a : elements_) {
            for (const auto &b : elements_) {
                auto c = find((a * b).op);
                if (!c || *c != a * b) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Builds the smallest closed set containing the identity and the
    /// generators, composing signs multiplicatively.
    static StabilizerGroup close(std::span<const StabilizerElement> generators, std::size_t num_qubits = 0) {
        if (generators.empty() && num_qubits == 0) {
            throw InputError("close: need generators or an explicit qubit count");
        }
        std::size_t n = generators.empty() ? num_qubits : generators[0].op.num_qubits();
        for (std::size_t a = 0; a < generators.size(); a++) {
            if (generators[a].op.num_qubits() != n) {
                throw DimensionError("close: generators have different qubit counts");
            }
            for (std::size_t b = a + 1; b < generators.size(); b++) {
                if (!generators[a].op.commutes(generators[b].op)) {
                    throw ClosureError("close: generators " + generators[a].op.str() + " and " +
                                       generators[b].op.str() + " anticommute");
                }
            }
        }

        StabilizerGroup g;
        g.n_ = n;
        std::unordered_map<PauliString, StabilizerElement> seen;
        std::deque<StabilizerElement> queue;
        StabilizerElement id(PauliString::identity(n), 1, 1);
        seen.emplace(id.op, id);
        queue.push_back(id);
        while (!queue.empty()) {
            StabilizerElement cur = queue.front();
            queue.pop_front();
            for (const auto &gen : generators) {
                StabilizerElement next = cur * gen;
                auto [it, inserted] = seen.emplace(next.op, next);
                if (inserted) {
                    queue.push_back(next);
                } else if (it->second != next) {
                    throw ClosureError("close: " + next.op.str() + " is derived with two different signs");
                }
            }
        }
        for (auto &[op, e] : seen) {
            g.elements_.push_back(e);
        }
        g.sort_and_index();
        return g;
    }

    /// Takes an already-complete listing (e.g. a parsed group file) and
    /// validates that it is closed and Abelian.
    static StabilizerGroup from_elements(std::vector<StabilizerElement> elements) {
        if (elements.empty()) {
            throw InputError("empty group listing");
        }
        StabilizerGroup g;
        g.n_ = elements[0].op.num_qubits();
        g.elements_ = std::move(elements);
        g.sort_and_index();
        if (g.index_.size() != g.elements_.size()) {
            throw ClosureError("group listing has duplicate operators");
        }
        if (!g.is_abelian()) {
            throw ClosureError("group listing is not Abelian");
        }
        if (!g.is_closed()) {
            throw ClosureError("group listing is not closed under multiplication");
        }
        return g;
    }

   private:
    void sort_and_index() {
        std::sort(elements_.begin(), elements_.end(),
                  [](const StabilizerElement &a, const StabilizerElement &b) { return a.op < b.op; });
        index_.clear();
        for (std::size_t k = 0; k < elements_.size(); k++) {
            index_.emplace(elements_[k].op, k);
        }
    }

    std::size_t n_ = 0;
    std::vector<StabilizerElement> elements_;
    std::unordered_map<PauliString, std::size_t> index_;
};

struct SignViolation {
    StabilizerElement element;
    Codeword codeword;
    std::optional<int> actual;  // nullopt: not an eigenvector at all
};

struct StabilizerReport {
    std::size_t checked = 0;
    std::vector<SignViolation> violations;

    bool passed() const {
        return violations.empty();
    }
};

inline StabilizerReport verify_stabilizes(const StabilizerGroup &g, const StateVector &v0, const StateVector &v1) {
    if (v0.num_qubits() != g.num_qubits() || v1.num_qubits() != g.num_qubits()) {
        throw DimensionError("verify_stabilizes: state and group qubit counts differ");
    }
    StabilizerReport report;
    for (const auto &e : g.elements()) {
        report.checked++;
        auto s0 = eigensign(e.op, v0);
        if (s0 != e.sign0) {
            report.violations.push_back({e, Codeword::Zero, s0});
        }
        auto s1 = eigensign(e.op, v1);
        if (s1 != e.sign1) {
            report.violations.push_back({e, Codeword::One, s1});
        }
    }
    return report;
}

/// Elements whose eigenvalue is the same on both codewords. Throws if the
/// result fails to be a subgroup of index 1 or 2.
inline StabilizerGroup invariant_subgroup(const StabilizerGroup &g) {
    std::vector<StabilizerElement> kept;
    for (const auto &e : g.elements()) {
        if (e.sign_stable()) {
            kept.push_back(e);
        }
    }
    StabilizerGroup sub = StabilizerGroup::from_elements(std::move(kept));
    if (sub.order() != g.order() && 2 * sub.order() != g.order()) {
        throw ClosureError("sign-stable elements have index other than 1 or 2");
    }
    return sub;
}

/// The 1 + 3n operators of weight at most one: I, then X_k, Y_k, Z_k per site.
inline std::vector<PauliString> single_qubit_errors(std::size_t num_qubits) {
    std::vector<PauliString> out{PauliString::identity(num_qubits)};
    for (std::size_t k = 0; k < num_qubits; k++) {
        for (PauliLetter p : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
            out.push_back(PauliString::single(num_qubits, k, p));
        }
    }
    return out;
}

struct KnillLaflammePair {
    PauliString first;
    PauliString second;
    DyadicGaussian cross;  // <0_L| E_a^dag E_b |1_L>
    DyadicGaussian diag0;  // <0_L| E_a^dag E_b |0_L>
    DyadicGaussian diag1;  // <1_L| E_a^dag E_b |1_L>
    bool passed = false;
};

struct KnillLaflammeReport {
    std::vector<KnillLaflammePair> pairs;

    std::size_t num_failed() const {
        return static_cast<std::size_t>(
            std::count_if(pairs.begin(), pairs.end(), [](const auto &p) { return !p.passed; }));
    }
    bool passed() const {
        return num_failed() == 0;
    }
};

/// For every ordered pair (E_a, E_b): <0|E_a^dag E_b|1> = 0 and
/// <0|E_a^dag E_b|0> / <0|0> = <1|E_a^dag E_b|1> / <1|1>. The second test is
/// done cross-multiplied so unnormalized codewords work.
inline KnillLaflammeReport knill_laflamme_check(const StateVector &v0, const StateVector &v1,
                                                std::span<const PauliString> errors) {
    v0.check_same_size(v1);
    DyadicGaussian n0 = v0.squared_norm();
    DyadicGaussian n1 = v1.squared_norm();
    KnillLaflammeReport report;
    for (const auto &ea : errors) {
        // E_a^dag: conjugate the phase; letters are Hermitian.
        PauliString ea_dag = ea.with_phase(-ea.phase_exp());
        for (const auto &eb : errors) {
            PauliString e = ea_dag * eb;
            StateVector e1 = apply(e, v1);
            StateVector e0 = apply(e, v0);
            KnillLaflammePair pair{ea, eb, inner(v0, e1), inner(v0, e0), inner(v1, e1), false};
            pair.passed = pair.cross.is_zero() && pair.diag0 * n1 == pair.diag1 * n0;
            report.pairs.push_back(std::move(pair));
        }
    }
    return report;
}

/// One line per element: "<sign0> <sign1> <pauli>", e.g. "+1 -1 ZZZZZ".
inline std::string format_group(const StabilizerGroup &g) {
    std::string out;
    for (const auto &e : g.elements()) {
        out += (e.sign0 > 0 ? "+1 " : "-1 ");
        out += (e.sign1 > 0 ? "+1 " : "-1 ");
        out += e.op.str();
        out += '\n';
    }
    return out;
}

inline StabilizerGroup parse_group(std::string_view text) {
    std::vector<StabilizerElement> elements;
    std::istringstream in{std::string(text)};
    std::string s0, s1, op;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        if (!(fields >> s0 >> s1 >> op)) {
            throw ParseError("bad group line: '" + line + "'");
        }
        auto sign = [&](const std::string &s) {
            if (s == "+1" || s == "1") {
                return 1;
            }
            if (s == "-1") {
                return -1;
            }
            throw ParseError("bad sign '" + s + "' in group line");
        };
        elements.emplace_back(PauliString::parse(op), sign(s0), sign(s1));
    }
    return StabilizerGroup::from_elements(std::move(elements));
}

}  // namespace qparadox
