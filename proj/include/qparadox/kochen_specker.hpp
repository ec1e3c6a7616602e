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
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qparadox/codes.hpp"
#include "qparadox/errors.hpp"
#include "qparadox/pauli.hpp"
#include "qparadox/statevector.hpp"

namespace qparadox {

struct ClassicalKet {
    std::size_t index = 0;
};

struct CodewordMutation {
    Codeword codeword = Codeword::Zero;
    PauliString mutator;  // identity for the codeword itself
};

/// Joint eigenspace of X_left, Z_center, X_right for one row of the
/// operator array (row 2..6, center site = row - 1, cyclic neighbours).
struct RowSubspace {
    std::size_t row = 2;
    int m = 1;       // eigenvalue of X on the left neighbour
    int n = 1;       // eigenvalue of X on the right neighbour
    int middle = 1;  // eigenvalue of Z on the center site
};

using Provenance = std::variant<ClassicalKet, CodewordMutation, RowSubspace>;

struct KSVertex {
    std::size_t id = 0;
    Projector projector;
    Provenance provenance;

    std::size_t rank() const {
        return projector.rank();
    }

    std::string label() const {
        return std::visit(
            [&](const auto &p) -> std::string {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, ClassicalKet>) {
                    return "|" + StateVector::label_of_index(projector.num_qubits(), p.index) + ">";
                } else if constexpr (std::is_same_v<T, CodewordMutation>) {
                    std::string c = p.codeword == Codeword::Zero ? "|0_L>" : "|1_L>";
                    return p.mutator.is_identity() ? c : p.mutator.sparse_str() + " " + c;
                } else {
                    auto sgn = [](int v) { return v > 0 ? "+" : "-"; };
                    return "row" + std::to_string(p.row) + "(m" + sgn(p.m) + ",n" + sgn(p.n) + ",z" +
                           sgn(p.middle) + ")";
                }
            },
            provenance);
    }
};

inline constexpr std::size_t kArrayQubits = 5;

/// Sites (0-based) of the X, Z, X triple in array row 2..6.
inline std::array<std::size_t, 3> row_sites(std::size_t row) {
    if (row < 2 || row > 6) {
        throw InputError("array rows with rank-4 subspaces are 2..6");
    }
    std::size_t center = row - 2;
    return {(center + kArrayQubits - 1) % kArrayQubits, center, (center + 1) % kArrayQubits};
}

/// Four orthogonal spanning vectors (amplitudes +/-1, <s|s> = 4):
/// (|0> + m|1>) (x) |middle> (x) (|0> + n|1>) on the row's triple, times
/// each basis ket of the two untouched qubits.
inline Projector row_subspace_projector(const RowSubspace &r) {
    auto [left, center, right] = row_sites(r.row);
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < kArrayQubits; k++) {
        if (k != left && k != center && k != right) {
            others.push_back(k);
        }
    }
    auto bit = [](std::size_t site) { return std::size_t{1} << (kArrayQubits - 1 - site); };
    std::size_t middle_bits = r.middle > 0 ? 0 : bit(center);
    std::vector<StateVector> span;
    for (std::size_t e = 0; e < 4; e++) {
        std::size_t rest = ((e & 2) ? bit(others[0]) : 0) | ((e & 1) ? bit(others[1]) : 0);
        StateVector v(kArrayQubits);
        for (std::size_t a = 0; a < 2; a++) {
            for (std::size_t c = 0; c < 2; c++) {
                int sign = (a ? r.m : 1) * (c ? r.n : 1);
                std::size_t idx = rest | middle_bits | (a ? bit(left) : 0) | (c ? bit(right) : 0);
                v[idx] = DyadicGaussian(sign);
            }
        }
        span.push_back(std::move(v));
    }
    return Projector::from_vectors(std::move(span));
}

/// The 16 distinct rays sigma|c> for sigma of weight <= 1, with the
/// codeword itself first. Rays are compared up to a power of i and stored
/// in canonical phase. Throws unless exactly 16 distinct rays appear.
inline std::vector<std::pair<PauliString, StateVector>> codeword_mutations(const StateVector &codeword) {
    std::vector<std::pair<PauliString, StateVector>> out;
    for (const auto &e : single_qubit_errors(codeword.num_qubits())) {
        StateVector v = apply(e, codeword).canonical_phase();
        bool dup = std::any_of(out.begin(), out.end(), [&](const auto &p) { return p.second == v; });
        if (!dup) {
            out.emplace_back(e, std::move(v));
        }
    }
    if (out.size() != 16) {
        throw ClosureError("codeword has " + std::to_string(out.size()) + " distinct mutations, expected 16");
    }
    return out;
}

/// 32 classical kets, 32 codeword mutations, then 8 rank-4 subspaces for
/// each of rows 2..6 (ordered by middle, m, n with +1 before -1).
inline std::vector<KSVertex> build_ks_set(const CodeDefinition &five) {
    if (five.num_qubits != kArrayQubits) {
        throw InputError("the KS set is built from the five-qubit code");
    }
    std::vector<KSVertex> out;
    for (std::size_t idx = 0; idx < (std::size_t{1} << kArrayQubits); idx++) {
        out.push_back({out.size(), Projector::from_vector(StateVector::basis(kArrayQubits, idx)), ClassicalKet{idx}});
    }
    for (Codeword c : {Codeword::Zero, Codeword::One}) {
        for (auto &[mutator, v] : codeword_mutations(five.codeword(c))) {
            out.push_back({out.size(), Projector::from_vector(std::move(v)), CodewordMutation{c, mutator}});
        }
    }
    for (std::size_t row = 2; row <= 6; row++) {
        for (int middle : {1, -1}) {
            for (int m : {1, -1}) {
                for (int n : {1, -1}) {
                    RowSubspace r{row, m, n, middle};
                    out.push_back({out.size(), row_subspace_projector(r), r});
                }
            }
        }
    }
    return out;
}

inline std::vector<KSVertex> build_ks_set() {
    return build_ks_set(five_qubit_code());
}

/// Fixed-size bit set over vertex positions.
class VertexSet {
   public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const {
        return size_;
    }
    void set(std::size_t k) {
        words_[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    void reset(std::size_t k) {
        words_[k / 64] &= ~(std::uint64_t{1} << (k % 64));
    }
    bool test(std::size_t k) const {
        return (words_[k / 64] >> (k % 64)) & 1;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }
    VertexSet &operator&=(const VertexSet &o) {
        for (std::size_t k = 0; k < words_.size(); k++) {
            words_[k] &= o.words_[k];
        }
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet &b) {
        return a &= b;
    }
    /// Clears every position <= k.
    void clear_through(std::size_t k) {
        for (std::size_t w = 0; w < words_.size(); w++) {
            std::size_t lo = w * 64;
            if (lo + 63 <= k) {
                words_[w] = 0;
            } else if (lo <= k) {
                std::size_t keep_from = k - lo + 1;
                words_[w] &= ~((std::uint64_t{1} << keep_from) - 1);
            }
        }
    }
    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t w = 0; w < words_.size(); w++) {
            std::uint64_t bits = words_[w];
            while (bits) {
                auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }
    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t k) { out.push_back(k); });
        return out;
    }

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Vertices are addressed by their position in `vertices`; KSVertex::id
/// keeps the position in the originating KS set.
struct OrthogonalityGraph {
    std::vector<KSVertex> vertices;
    std::vector<VertexSet> neighbors;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t size() const {
        return vertices.size();
    }
    bool adjacent(std::size_t a, std::size_t b) const {
        return neighbors[a].test(b);
    }
    std::size_t dimension() const {
        return std::size_t{1} << vertices.front().projector.num_qubits();
    }
};

inline OrthogonalityGraph build_orthogonality_graph(std::vector<KSVertex> vs) {
    if (vs.empty()) {
        throw InputError("orthogonality graph needs at least one vertex");
    }
    OrthogonalityGraph g;
    std::size_t n = vs.size();
    g.neighbors.assign(n, VertexSet(n));
    for (std::size_t a = 0; a < n; a++) {
        for (std::size_t b = a + 1; b < n; b++) {
            if (orthogonal(vs[a].projector, vs[b].projector)) {
                g.neighbors[a].set(b);
                g.neighbors[b].set(a);
                g.edges.emplace_back(a, b);
            }
        }
    }
    g.vertices = std::move(vs);
    return g;
}

/// A complete orthogonal set: pairwise orthogonal, ranks summing to the
/// dimension (so the projectors sum to the identity).
struct Context {
    std::vector<std::size_t> members;  // graph positions, ascending
};

struct ContextSet {
    std::vector<Context> contexts;
    /// True when produced by an exhaustive enumeration (or explicitly
    /// asserted by the caller for a hand-built sub-instance).
    bool complete = false;
    std::uint64_t nodes = 0;

    static ContextSet assume_complete(std::vector<Context> contexts) {
        return {std::move(contexts), true, 0};
    }
};

/// Exact check that the member projectors sum to the identity matrix.
inline bool context_sums_to_identity(const OrthogonalityGraph &g, const Context &ctx) {
    std::vector<Projector> ps;
    for (std::size_t v : ctx.members) {
        ps.push_back(g.vertices[v].projector);
    }
    return resolves_identity(ps) && sums_to_identity(ps);
}

struct ContextOptions {
    std::uint64_t node_budget = 50'000'000;
    /// Also build and sum the dense projector matrices for every context.
    bool exact_matrix_check = true;
};

/// Every clique whose ranks sum to the dimension, by backtracking over
/// increasing vertex positions. A branch is cut when the rank still
/// available among the candidates cannot cover the deficit.
inline ContextSet enumerate_contexts(const OrthogonalityGraph &g, const ContextOptions &options = {}) {
    std::size_t dim = g.dimension();
    ContextSet out;
    std::vector<std::size_t> current;

    auto rank_of = [&](const VertexSet &s) {
        std::size_t r = 0;
        s.for_each([&](std::size_t v) { r += g.vertices[v].rank(); });
        return r;
    };

    auto rec = [&](auto &&self, const VertexSet &candidates, std::size_t rank) -> void {
        if (++out.nodes > options.node_budget) {
            throw BudgetExhausted("context enumeration exceeded its node budget of " +
                                  std::to_string(options.node_budget) + "; the context list would be incomplete");
        }
        if (rank == dim) {
            out.contexts.push_back({current});
            return;
        }
        if (rank + rank_of(candidates) < dim) {
            return;
        }
        candidates.for_each([&](std::size_t v) {
            std::size_t r = rank + g.vertices[v].rank();
            if (r > dim) {
                return;
            }
            VertexSet next = candidates & g.neighbors[v];
            next.clear_through(v);
            current.push_back(v);
            self(self, next, r);
            current.pop_back();
        });
    };

    VertexSet all(g.size());
    for (std::size_t v = 0; v < g.size(); v++) {
        all.set(v);
    }
    rec(rec, all, 0);

    if (options.exact_matrix_check) {
        for (const auto &ctx : out.contexts) {
            if (!context_sums_to_identity(g, ctx)) {
                throw std::logic_error("enumerated context does not sum to the identity");
            }
        }
    }
    out.complete = true;
    return out;
}

struct ColoringVerdict {
    bool satisfiable = false;
    std::vector<bool> coloring;  // only meaningful when satisfiable
    std::uint64_t nodes = 0;
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
};

/// KS1: no edge has both ends true. KS2: every context has a true member.
inline bool coloring_valid(const OrthogonalityGraph &g, const ContextSet &cs, const std::vector<bool> &coloring) {
    if (coloring.size() != g.size()) {
        return false;
    }
    for (auto [a, b] : g.edges) {
        if (coloring[a] && coloring[b]) {
            return false;
        }
    }
    for (const auto &ctx : cs.contexts) {
        if (std::none_of(ctx.members.begin(), ctx.members.end(), [&](std::size_t v) { return coloring[v]; })) {
            return false;
        }
    }
    return true;
}

namespace detail {

class KSSolver {
   public:
    KSSolver(const OrthogonalityGraph &g, const ContextSet &cs) : g_(g), cs_(cs) {
        value_.assign(g.size(), kUnset);
        contexts_of_.resize(g.size());
        for (std::size_t c = 0; c < cs.contexts.size(); c++) {
            for (std::size_t v : cs.contexts[c].members) {
                contexts_of_[v].push_back(c);
            }
        }
        for (std::size_t v = 0; v < g.size(); v++) {
            adj_.push_back(g.neighbors[v].to_vector());
        }
    }

    ColoringVerdict run() {
        ColoringVerdict out;
        bool ok = propagate_all_contexts() && search();
        out.satisfiable = ok;
        if (ok) {
            out.coloring.resize(g_.size());
            for (std::size_t v = 0; v < g_.size(); v++) {
                out.coloring[v] = value_[v] == kTrue;
            }
        }
        out.nodes = nodes_;
        out.decisions = decisions_;
        out.propagations = propagations_;
        out.conflicts = conflicts_;
        return out;
    }

   private:
    static constexpr std::int8_t kUnset = -1;
    static constexpr std::int8_t kFalse = 0;
    static constexpr std::int8_t kTrue = 1;

    // Assigns and propagates to fixpoint; false on conflict.
    bool assign(std::size_t v, std::int8_t val) {
        std::vector<std::pair<std::size_t, std::int8_t>> queue{{v, val}};
        while (!queue.empty()) {
            auto [u, x] = queue.back();
            queue.pop_back();
            if (value_[u] != kUnset) {
                if (value_[u] != x) {
                    conflicts_++;
                    return false;
                }
                continue;
            }
            value_[u] = x;
            trail_.push_back(u);
            propagations_++;
            if (x == kTrue) {
                for (std::size_t w : adj_[u]) {
                    if (value_[w] == kTrue) {
                        conflicts_++;
                        return false;
                    }
                    if (value_[w] == kUnset) {
                        queue.emplace_back(w, kFalse);
                    }
                }
            } else {
                for (std::size_t c : contexts_of_[u]) {
                    auto forced = unit(c);
                    if (forced == kConflict) {
                        conflicts_++;
                        return false;
                    }
                    if (forced != kNone) {
                        queue.emplace_back(forced, kTrue);
                    }
                }
            }
        }
        return true;
    }

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    static constexpr std::size_t kConflict = static_cast<std::size_t>(-2);

    // kNone if the context is satisfied or has >= 2 open members; the single
    // open member if it must become true; kConflict if all are false.
    std::size_t unit(std::size_t c) const {
        std::size_t open = kNone;
        std::size_t num_open = 0;
        for (std::size_t v : cs_.contexts[c].members) {
            if (value_[v] == kTrue) {
                return kNone;
            }
            if (value_[v] == kUnset) {
                open = v;
                num_open++;
            }
        }
        if (num_open == 0) {
            return kConflict;
        }
        return num_open == 1 ? open : kNone;
    }

    bool propagate_all_contexts() {
        for (std::size_t c = 0; c < cs_.contexts.size(); c++) {
            auto forced = unit(c);
            if (forced == kConflict) {
                return false;
            }
            if (forced != kNone && !assign(forced, kTrue)) {
                return false;
            }
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = kUnset;
            trail_.pop_back();
        }
    }

    // Picks the unsatisfied context with the fewest open members and
    // branches on its first open member.
    bool search() {
        nodes_++;
        std::size_t best = kNone, best_open = kNone;
        for (std::size_t c = 0; c < cs_.contexts.size(); c++) {
            std::size_t open = 0;
            bool sat = false;
            for (std::size_t v : cs_.contexts[c].members) {
                if (value_[v] == kTrue) {
                    sat = true;
                    break;
                }
                open += value_[v] == kUnset;
            }
            if (!sat && open < best_open) {
                best = c;
                best_open = open;
            }
        }
        if (best == kNone) {
            // Every context is satisfied; the remaining vertices can be false.
            for (auto &x : value_) {
                if (x == kUnset) {
                    x = kFalse;
                }
            }
            return true;
        }
        std::size_t v = kNone;
        for (std::size_t u : cs_.contexts[best].members) {
            if (value_[u] == kUnset) {
                v = u;
                break;
            }
        }
        for (std::int8_t val : {kTrue, kFalse}) {
            decisions_++;
            std::size_t mark = trail_.size();
            if (assign(v, val) && search()) {
                return true;
            }
            undo_to(mark);
        }
        return false;
    }

    const OrthogonalityGraph &g_;
    const ContextSet &cs_;
    std::vector<std::int8_t> value_;
    std::vector<std::size_t> trail_;
    std::vector<std::vector<std::size_t>> contexts_of_;
    std::vector<std::vector<std::size_t>> adj_;
    std::uint64_t nodes_ = 0;
    std::uint64_t decisions_ = 0;
    std::uint64_t propagations_ = 0;
    std::uint64_t conflicts_ = 0;
};

}  // namespace detail

/// Searches for a true/false assignment obeying KS1 and KS2. Refuses an
/// incomplete context set. Any coloring returned has been re-validated.
inline ColoringVerdict ks_colorability(const OrthogonalityGraph &g, const ContextSet &cs) {
    if (!cs.complete) {
        throw InputError("ks_colorability: context set is not complete; a SAT verdict would be meaningless");
    }
    std::size_t dim = g.dimension();
    for (const auto &ctx : cs.contexts) {
        std::size_t rank = 0;
        for (std::size_t a = 0; a < ctx.members.size(); a++) {
            rank += g.vertices.at(ctx.members[a]).rank();
            for (std::size_t b = a + 1; b < ctx.members.size(); b++) {
                if (!g.adjacent(ctx.members[a], ctx.members[b])) {
                    throw InputError("ks_colorability: context members are not pairwise orthogonal");
                }
            }
        }
        if (rank != dim) {
            throw InputError("ks_colorability: context ranks do not sum to the dimension");
        }
    }
    ColoringVerdict verdict = detail::KSSolver(g, cs).run();
    if (verdict.satisfiable && !coloring_valid(g, cs, verdict.coloring)) {
        throw std::logic_error("ks_colorability produced an invalid coloring");
    }
    return verdict;
}

}  // namespace qparadox
