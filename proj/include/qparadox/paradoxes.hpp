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

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qparadox/codes.hpp"
#include "qparadox/errors.hpp"
#include "qparadox/pauli.hpp"
#include "qparadox/stabilizer.hpp"
#include "qparadox/statevector.hpp"

namespace qparadox {

/// A single-qubit observable, e.g. (site 0, X) for sigma_1x.
struct Symbol {
    std::size_t site = 0;
    PauliLetter letter = PauliLetter::I;

    auto operator<=>(const Symbol &) const = default;

    std::string str() const {
        return std::string(1, letter_char(letter)) + std::to_string(site + 1);
    }
};

// ---------------------------------------------------------------------------
// Elements of reality.

/// One way of predicting a single-qubit observable from measurements on
/// the other qubits: v(target) * v(witness) = product on the codeword.
struct Determination {
    Symbol target;
    PauliString witness;
    int product = 1;
    StabilizerElement source;
};

inline std::vector<Determination> find_determinations(const StabilizerGroup &g, std::size_t site, PauliLetter letter,
                                                      Codeword codeword = Codeword::Zero) {
    std::vector<Determination> out;
    if (site >= g.num_qubits()) {
        throw DimensionError("find_determinations: site out of range");
    }
    if (letter == PauliLetter::I) {
        return out;
    }
    for (const auto &e : g.elements()) {
        if (e.op.letter(site) != letter) {
            continue;
        }
        out.push_back({Symbol{site, letter}, e.op.without_site(site), e.sign(codeword), e});
    }
    return out;
}

/// Measurable together one qubit at a time: at every site the letters
/// agree or one of them is the identity.
inline bool site_compatible(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("site_compatible: qubit counts differ");
    }
    std::uint64_t both = (a.x_bits() | a.z_bits()) & (b.x_bits() | b.z_bits());
    return ((a.x_bits() ^ b.x_bits()) & both) == 0 && ((a.z_bits() ^ b.z_bits()) & both) == 0;
}

inline std::vector<std::pair<std::size_t, std::size_t>> compatible_pairs(const std::vector<Determination> &ds) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < ds.size(); a++) {
        for (std::size_t b = a + 1; b < ds.size(); b++) {
            if (ds[a].target != ds[b].target) {
                throw InputError("compatible_pairs: determinations have different targets");
            }
            if (site_compatible(ds[a].witness, ds[b].witness)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

/// Checks the determination directly on the state: target (x) witness must
/// have eigenvalue `product`.
inline bool determination_holds(const Determination &d, const StateVector &state) {
    PauliString full = d.witness * PauliString::single(d.witness.num_qubits(), d.target.site, d.target.letter);
    return eigensign(full, state) == d.product;
}

// ---------------------------------------------------------------------------
// Parity (GHZ/Mermin-type) contradictions.

struct ParityTerm {
    PauliString op;
    int eigenvalue = 1;
};

struct ParityInstance {
    StateVector state;
    std::vector<ParityTerm> terms;
};

/// Pairs each operator with its eigenvalue on `state`; throws if some
/// operator is not a +/-1 eigen-operator of it.
inline ParityInstance make_parity_instance(const StateVector &state, const std::vector<PauliString> &ops) {
    ParityInstance inst{state, {}};
    for (const auto &op : ops) {
        auto s = eigensign(op, state);
        if (!s) {
            throw InputError("parity instance: " + op.str() + " is not an eigen-operator of the state");
        }
        inst.terms.push_back({op, *s});
    }
    return inst;
}

inline std::map<Symbol, int> symbol_multiplicities(const std::vector<ParityTerm> &terms) {
    std::map<Symbol, int> out;
    for (const auto &t : terms) {
        for (std::size_t k : t.op.support()) {
            out[Symbol{k, t.op.letter(k)}]++;
        }
    }
    return out;
}

struct ParityReport {
    std::map<Symbol, int> multiplicities;
    bool all_even = false;
    int eigenvalue_product = 1;
    PauliString operator_product;
    bool product_is_minus_identity = false;
    /// Every symbol appears an even number of times, so any assignment of
    /// +/-1 values makes the left-hand sides multiply to +1, while the
    /// quantum eigenvalues multiply to -1.
    bool contradiction = false;
    /// contradiction == (operator_product == -I and all_even).
    bool verdicts_agree = false;
};

inline ParityReport check_parity_contradiction(const ParityInstance &inst) {
    if (inst.terms.empty()) {
        throw InputError("parity instance has no operators");
    }
    ParityReport report;
    std::size_t n = inst.terms.front().op.num_qubits();
    report.operator_product = PauliString::identity(n);
    for (const auto &t : inst.terms) {
        auto s = eigensign(t.op, inst.state);
        if (!s || *s != t.eigenvalue) {
            throw InputError("parity instance: " + t.op.str() + " does not have eigenvalue " +
                             std::to_string(t.eigenvalue) + " on the state");
        }
        report.eigenvalue_product *= t.eigenvalue;
        report.operator_product *= t.op;
    }
    report.multiplicities = symbol_multiplicities(inst.terms);
    report.all_even = true;
    for (const auto &[sym, count] : report.multiplicities) {
        if (count % 2 != 0) {
            report.all_even = false;
        }
    }
    report.product_is_minus_identity = report.operator_product == -PauliString::identity(n);
    report.contradiction = report.all_even && report.eigenvalue_product == -1;
    report.verdicts_agree = report.contradiction == (report.product_is_minus_identity && report.all_even);
    return report;
}

/// sigma_zzzzz together with X_{k-1} Z_k X_{k+1} for k = 1..5, evaluated on
/// the chosen five-qubit codeword.
inline ParityInstance canonical_pentagon_instance(const CodeDefinition &five, Codeword codeword) {
    if (five.num_qubits != 5) {
        throw InputError("pentagon instance needs the five-qubit code");
    }
    std::vector<PauliString> ops{PauliString::parse("ZZZZZ")};
    PauliString side = PauliString::parse("XZXII");
    for (int k = 0; k < 5; k++) {
        // Shift -1 puts the Z on site 1 first: X5 Z1 X2, then X1 Z2 X3, ...
        ops.push_back(side.cyclic_shift(k - 1));
    }
    return make_parity_instance(five.codeword(codeword), ops);
}

/// One side of the pentagon picture: three compatible single-qubit
/// measurements whose product has a fixed value.
struct PentagonSide {
    std::size_t center_site = 0;
    std::vector<Symbol> symbols;
    ParityTerm term;
};

struct PentagonLayout {
    ParityTerm hub;  // product of the five Z's
    std::vector<PentagonSide> sides;
};

inline PentagonLayout pentagon_layout(const ParityInstance &inst) {
    if (inst.terms.size() != 6) {
        throw InputError("pentagon layout expects six operators");
    }
    PentagonLayout layout;
    layout.hub = inst.terms[0];
    for (std::size_t k = 1; k < 6; k++) {
        PentagonSide side;
        side.term = inst.terms[k];
        for (std::size_t s : side.term.op.support()) {
            side.symbols.push_back(Symbol{s, side.term.op.letter(s)});
            if (side.term.op.letter(s) == PauliLetter::Z) {
                side.center_site = s;
            }
        }
        layout.sides.push_back(std::move(side));
    }
    return layout;
}

// ---------------------------------------------------------------------------
// Multiplicative Kochen-Specker operator arrays.

class OperatorArray {
   public:
    OperatorArray(std::size_t rows, std::size_t cols, std::size_t num_qubits)
        : rows_(rows),
          cols_(cols),
          cells_(rows * cols, PauliString::identity(num_qubits)),
          row_products_(rows, 1),
          column_products_(cols, 1) {}

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    const PauliString &at(std::size_t r, std::size_t c) const {
        return cells_.at(r * cols_ + c);
    }
    void set(std::size_t r, std::size_t c, PauliString p) {
        cells_.at(r * cols_ + c) = std::move(p);
    }
    int declared_row_product(std::size_t r) const {
        return row_products_.at(r);
    }
    int declared_column_product(std::size_t c) const {
        return column_products_.at(c);
    }
    void declare_row_product(std::size_t r, int sign) {
        row_products_.at(r) = sign;
    }
    void declare_column_product(std::size_t c, int sign) {
        column_products_.at(c) = sign;
    }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<PauliString> cells_;
    std::vector<int> row_products_;
    std::vector<int> column_products_;
};

struct ArrayLineReport {
    bool commuting = false;
    PauliString product;
    std::optional<int> product_sign;  // set when the product is +/-I
    int declared = 1;
    bool matches_declared = false;
};

struct ArrayReport {
    std::vector<ArrayLineReport> rows;
    std::vector<ArrayLineReport> columns;
    bool all_lines_valid = false;  // every line commutes and multiplies to +/-I
    bool all_match_declared = false;
    /// Product of all cells taken row by row, then column by column.
    PauliString rowwise_total;
    PauliString columnwise_total;
    /// No fixed +/-1 value per cell can reproduce every line product.
    bool impossible = false;
};

inline ArrayReport check_array(const OperatorArray &arr) {
    if (arr.rows() == 0 || arr.cols() == 0) {
        throw InputError("operator array is empty");
    }
    std::size_t n = arr.at(0, 0).num_qubits();
    for (std::size_t r = 0; r < arr.rows(); r++) {
        for (std::size_t c = 0; c < arr.cols(); c++) {
            if (!arr.at(r, c).is_hermitian()) {
                throw InputError("operator array cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                 ") is not Hermitian");
            }
        }
    }
    auto line = [&](std::size_t count, auto cell, int declared) {
        ArrayLineReport rep;
        rep.commuting = true;
        rep.product = PauliString::identity(n);
        rep.declared = declared;
        for (std::size_t a = 0; a < count; a++) {
            rep.product *= cell(a);
            for (std::size_t b = a + 1; b < count; b++) {
                if (!cell(a).commutes(cell(b))) {
                    rep.commuting = false;
                }
            }
        }
        if (rep.product.is_identity_up_to_phase() && rep.product.is_hermitian()) {
            rep.product_sign = rep.product.phase_exp() == 0 ? 1 : -1;
        }
        rep.matches_declared = rep.commuting && rep.product_sign == declared;
        return rep;
    };

    ArrayReport report;
    report.rowwise_total = PauliString::identity(n);
    report.columnwise_total = PauliString::identity(n);
    int row_sign = 1, col_sign = 1;
    report.all_lines_valid = true;
    report.all_match_declared = true;
    for (std::size_t r = 0; r < arr.rows(); r++) {
        auto rep = line(arr.cols(), [&](std::size_t c) -> const PauliString & { return arr.at(r, c); },
                        arr.declared_row_product(r));
        report.rowwise_total *= rep.product;
        report.all_lines_valid &= rep.commuting && rep.product_sign.has_value();
        report.all_match_declared &= rep.matches_declared;
        row_sign *= rep.product_sign.value_or(1);
        report.rows.push_back(std::move(rep));
    }
    for (std::size_t c = 0; c < arr.cols(); c++) {
        auto rep = line(arr.rows(), [&](std::size_t r) -> const PauliString & { return arr.at(r, c); },
                        arr.declared_column_product(c));
        report.columnwise_total *= rep.product;
        report.all_lines_valid &= rep.commuting && rep.product_sign.has_value();
        report.all_match_declared &= rep.matches_declared;
        col_sign *= rep.product_sign.value_or(1);
        report.columns.push_back(std::move(rep));
    }
    // Each cell appears once in a row and once in a column, so assigned
    // values would give equal row-sign and column-sign products.
    report.impossible = report.all_lines_valid && row_sign != col_sign;
    return report;
}

/// The 6 x 13 array on five qubits. Row 1 holds Z1..Z5 and their product;
/// row r (2..6) holds Z_k in column k, X_{k-1} and X_{k+1} in columns
/// 5 + (k-1) and 5 + (k+1), and X_{k-1} Z_k X_{k+1} in column 13, where
/// k = r - 1 and sites wrap cyclically.
inline OperatorArray build_canonical_array() {
    constexpr std::size_t n = 5;
    OperatorArray arr(6, 13, n);
    for (std::size_t k = 0; k < n; k++) {
        arr.set(0, k, PauliString::single(n, k, PauliLetter::Z));
    }
    arr.set(0, 12, PauliString::parse("ZZZZZ"));
    for (std::size_t k = 0; k < n; k++) {
        std::size_t row = k + 1;
        std::size_t left = (k + n - 1) % n;
        std::size_t right = (k + 1) % n;
        PauliString z = PauliString::single(n, k, PauliLetter::Z);
        PauliString xl = PauliString::single(n, left, PauliLetter::X);
        PauliString xr = PauliString::single(n, right, PauliLetter::X);
        arr.set(row, k, z);
        arr.set(row, 5 + left, xl);
        arr.set(row, 5 + right, xr);
        arr.set(row, 12, xl * z * xr);
    }
    arr.declare_column_product(12, -1);
    return arr;
}

/// The 3 x 3 two-qubit square with rows {XI, IX, XX}, {IZ, ZI, ZZ},
/// {XZ, ZX, YY}; the last column multiplies to -I.
inline OperatorArray magic_square() {
    OperatorArray arr(3, 3, 2);
    const char *cells[3][3] = {{"XI", "IX", "XX"}, {"IZ", "ZI", "ZZ"}, {"XZ", "ZX", "YY"}};
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            arr.set(r, c, PauliString::parse(cells[r][c]));
        }
    }
    arr.declare_column_product(2, -1);
    return arr;
}

// ---------------------------------------------------------------------------
// Automated parity-contradiction search.

struct ParitySearchOptions {
    std::size_t min_subset = 1;
    std::size_t max_subset = 6;
    /// Stop after this many contradictions (0 = no limit). Results are
    /// still the first ones in (size, lexicographic) order.
    std::size_t max_results = 0;
    std::uint64_t node_budget = 2'000'000'000ULL;
};

struct ParitySearchResult {
    std::vector<ParityInstance> instances;
    std::vector<std::vector<std::size_t>> element_indices;  // into group.elements()
    std::size_t minimal_size = 0;                           // 0 if nothing found
    std::uint64_t nodes = 0;
    bool truncated = false;  // max_results reached
};

namespace detail {

/// Each non-identity group element becomes a bit vector with one
/// coordinate per (site, letter) it uses, plus one coordinate marking an
/// eigenvalue of -1. A subset is a contradiction exactly when its vectors
/// XOR to the eigenvalue coordinate alone.
struct ParitySearcher {
    std::vector<std::size_t> pool;     // group element indices
    std::vector<std::uint32_t> cols;   // encoded vectors
    std::uint32_t target = 0;
    std::vector<std::int8_t> dist;     // min #columns to reach a value, -1 = beyond bound
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    std::vector<std::size_t> chosen;
    std::vector<std::vector<std::size_t>> found;
    std::size_t max_results = 0;

    void bfs(std::size_t bits, std::size_t depth) {
        dist.assign(std::size_t{1} << bits, -1);
        dist[0] = 0;
        std::vector<std::uint32_t> frontier{0};
        for (std::size_t d = 1; d <= depth && !frontier.empty(); d++) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t s : frontier) {
                for (std::uint32_t c : cols) {
                    std::uint32_t t = s ^ c;
                    if (dist[t] < 0) {
                        dist[t] = static_cast<std::int8_t>(d);
                        next.push_back(t);
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    bool full() const {
        return max_results != 0 && found.size() >= max_results;
    }

    void dfs(std::size_t start, std::size_t remaining, std::uint32_t syndrome) {
        if (++nodes > budget) {
            throw BudgetExhausted("parity search exceeded its node budget of " + std::to_string(budget));
        }
        if (remaining == 0) {
            if (syndrome == target) {
                found.push_back(chosen);
            }
            return;
        }
        std::int8_t need = dist[syndrome ^ target];
        if (need < 0 || static_cast<std::size_t>(need) > remaining) {
            return;
        }
        for (std::size_t i = start; i + remaining <= cols.size(); i++) {
            chosen.push_back(i);
            dfs(i + 1, remaining - 1, syndrome ^ cols[i]);
            chosen.pop_back();
            if (full()) {
                return;
            }
        }
    }
};

}  // namespace detail

/// Finds subsets of the group's non-identity elements in which every
/// single-qubit symbol occurs an even number of times while the eigenvalues
/// on `codeword` multiply to -1. Results come smallest first, then in
/// lexicographic order of their (sorted) operator texts. Each hit is
/// confirmed by multiplying the operators exactly.
inline ParitySearchResult search_parity_contradictions(const StabilizerGroup &g, Codeword codeword,
                                                       const StateVector &state,
                                                       const ParitySearchOptions &options) {
    std::size_t n = g.num_qubits();
    std::size_t bits = 3 * n + 1;
    if (bits > 28) {
        throw InputError("parity search supports at most 9 qubits");
    }
    if (options.max_subset >= 127) {
        throw InputError("parity search: max_subset too large");
    }
    detail::ParitySearcher s;
    s.budget = options.node_budget;
    s.max_results = options.max_results;
    s.target = std::uint32_t{1} << (3 * n);
    for (std::size_t i = 0; i < g.elements().size(); i++) {
        const auto &e = g.elements()[i];
        if (e.op.is_identity()) {
            continue;
        }
        std::uint32_t v = 0;
        for (std::size_t k : e.op.support()) {
            auto letter = static_cast<std::uint32_t>(e.op.letter(k));  // 1, 2 or 3
            v |= std::uint32_t{1} << (3 * k + letter - 1);
        }
        if (e.sign(codeword) == -1) {
            v |= s.target;
        }
        s.pool.push_back(i);
        s.cols.push_back(v);
    }
    s.bfs(bits, options.max_subset);

    ParitySearchResult result;
    for (std::size_t size = std::max<std::size_t>(options.min_subset, 1); size <= options.max_subset; size++) {
        if (size > s.cols.size() || s.full()) {
            break;
        }
        s.dfs(0, size, 0);
    }
    result.nodes = s.nodes;
    result.truncated = s.full();
    for (const auto &pick : s.found) {
        std::vector<std::size_t> indices;
        ParityInstance inst{state, {}};
        PauliString product = PauliString::identity(n);
        for (std::size_t i : pick) {
            const auto &e = g.elements()[s.pool[i]];
            indices.push_back(s.pool[i]);
            inst.terms.push_back({e.op, e.sign(codeword)});
            product *= e.op;
        }
        if (product != -PauliString::identity(n)) {
            throw std::logic_error("parity search: candidate operator product is " + product.str() +
                                   ", expected -I");
        }
        if (result.minimal_size == 0) {
            result.minimal_size = pick.size();
        }
        result.instances.push_back(std::move(inst));
        result.element_indices.push_back(std::move(indices));
    }
    return result;
}

}  // namespace qparadox
