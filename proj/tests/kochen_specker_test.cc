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

#include "qparadox/kochen_specker.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "dense_oracle.hpp"
#include "gtest/gtest.h"

using namespace qparadox;

namespace {

struct Fixture {
    OrthogonalityGraph graph;
    ContextSet contexts;
};

const Fixture &full() {
    static const Fixture f = [] {
        Fixture out;
        out.graph = build_orthogonality_graph(build_ks_set());
        out.contexts = enumerate_contexts(out.graph);
        return out;
    }();
    return f;
}

std::size_t index_of(const OrthogonalityGraph &g, const RowSubspace &r) {
    for (std::size_t k = 0; k < g.size(); k++) {
        if (auto p = std::get_if<RowSubspace>(&g.vertices[k].provenance)) {
            if (p->row == r.row && p->m == r.m && p->n == r.n && p->middle == r.middle) {
                return k;
            }
        }
    }
    throw std::out_of_range("no such row subspace");
}

/// Independent exact-cover style search: repeatedly take the context with
/// the fewest admissible members and try each as its single true member.
/// Returns a coloring or nullopt.
std::optional<std::vector<int>> naive_coloring(const OrthogonalityGraph &g, const ContextSet &cs) {
    std::vector<int> value(g.size(), -1);
    auto admissible = [&](std::size_t v) {
        if (value[v] == 0) {
            return false;
        }
        for (std::size_t u = 0; u < g.size(); u++) {
            if (value[u] == 1 && u != v && g.adjacent(u, v)) {
                return false;
            }
        }
        return true;
    };
    auto rec = [&](auto &&self) -> bool {
        const Context *best = nullptr;
        std::vector<std::size_t> best_opts;
        for (const auto &ctx : cs.contexts) {
            bool done = std::any_of(ctx.members.begin(), ctx.members.end(), [&](std::size_t v) { return value[v] == 1; });
            if (done) {
                continue;
            }
            std::vector<std::size_t> opts;
            for (std::size_t v : ctx.members) {
                if (admissible(v)) {
                    opts.push_back(v);
                }
            }
            if (!best || opts.size() < best_opts.size()) {
                best = &ctx;
                best_opts = opts;
            }
        }
        if (!best) {
            return true;
        }
        for (std::size_t v : best_opts) {
            value[v] = 1;
            if (self(self)) {
                return true;
            }
            value[v] = 0;
        }
        for (std::size_t v : best_opts) {
            value[v] = -1;
        }
        return false;
    };
    if (!rec(rec)) {
        return std::nullopt;
    }
    for (auto &v : value) {
        v = v == 1 ? 1 : 0;
    }
    return value;
}

OrthogonalityGraph subgraph(const OrthogonalityGraph &g, std::size_t count) {
    std::vector<KSVertex> vs(g.vertices.begin(), g.vertices.begin() + static_cast<std::ptrdiff_t>(count));
    return build_orthogonality_graph(std::move(vs));
}

}  // namespace

TEST(KSSet, counts) {
    auto vs = build_ks_set();
    ASSERT_EQ(vs.size(), 104u);
    std::size_t rank1 = 0, rank4 = 0;
    for (std::size_t k = 0; k < vs.size(); k++) {
        ASSERT_EQ(vs[k].id, k);
        rank1 += vs[k].rank() == 1;
        rank4 += vs[k].rank() == 4;
    }
    ASSERT_EQ(rank1, 64u);
    ASSERT_EQ(rank4, 40u);
    ASSERT_DOUBLE_EQ(static_cast<double>(vs.size()) / 32.0, 3.25);
    ASSERT_EQ(vs[0].label(), "|00000>");
    ASSERT_EQ(vs[32].label(), "|0_L>");
    ASSERT_EQ(vs[48].label(), "|1_L>");
    ASSERT_EQ(vs[33].label(), "X1 |0_L>");
    ASSERT_EQ(vs[64].label(), "row2(m+,n+,z+)");
    ASSERT_EQ(vs[103].label(), "row6(m-,n-,z-)");
    ASSERT_THROW(build_ks_set(mermin_code()), InputError);
}

TEST(KSSet, codeword_families) {
    auto vs = build_ks_set();
    for (std::size_t a = 32; a < 64; a++) {
        const StateVector &u = vs[a].projector.basis_vectors()[0];
        ASSERT_EQ(u.squared_norm(), DyadicGaussian(1));
        std::size_t orth_other = 0;
        std::size_t base = a < 48 ? 48 : 32;
        for (std::size_t b = base; b < base + 16; b++) {
            orth_other += inner(u, vs[b].projector.basis_vectors()[0]).is_zero();
        }
        // Distinct weight-one mutations of different codewords collide
        // only when the combined operator lies in the group.
        ASSERT_LE(orth_other, 16u);
        for (std::size_t b = (a < 48 ? 32 : 48); b < (a < 48 ? 48 : 64); b++) {
            ASSERT_EQ(inner(u, vs[b].projector.basis_vectors()[0]).is_zero(), a != b);
        }
    }
}

TEST(KSSet, mutation_rays_need_sixteen) {
    ASSERT_THROW(codeword_mutations(StateVector::ket("00000")), ClosureError);
    auto muts = codeword_mutations(five_qubit_code().codeword0);
    ASSERT_TRUE(muts[0].first.is_identity());
}

TEST(RowSubspaces, projector_properties) {
    for (std::size_t row = 2; row <= 6; row++) {
        auto [left, center, right] = row_sites(row);
        std::vector<Projector> ps;
        for (int middle : {1, -1}) {
            for (int m : {1, -1}) {
                for (int n : {1, -1}) {
                    Projector p = row_subspace_projector(RowSubspace{row, m, n, middle});
                    ASSERT_EQ(p.rank(), 4u);
                    oracle::Matrix dense = oracle::matrix_of(p);
                    ASSERT_TRUE(oracle::near(dense * dense, dense));
                    ASSERT_TRUE(oracle::near(dense, dense.adjoint()));
                    ASSERT_NEAR(dense.trace().real(), 4.0, oracle::kTol);
                    // P equals the product of (1 + s sigma)/2 over the triple.
                    oracle::Matrix id = oracle::Matrix::Identity(32, 32);
                    oracle::Matrix want = 0.125 *
                                          (id + m * oracle::matrix_of(PauliString::single(5, left, PauliLetter::X))) *
                                          (id + middle * oracle::matrix_of(PauliString::single(5, center, PauliLetter::Z))) *
                                          (id + n * oracle::matrix_of(PauliString::single(5, right, PauliLetter::X)));
                    ASSERT_TRUE(oracle::near(dense, want)) << row << " " << m << n << middle;
                    ps.push_back(std::move(p));
                }
            }
        }
        ASSERT_TRUE(resolves_identity(ps));
        ASSERT_TRUE(sums_to_identity(ps));
    }
    ASSERT_THROW(row_sites(1), InputError);
    ASSERT_THROW(row_sites(7), InputError);
}

TEST(RowSubspaces, rows_three_and_six_split_on_first_qubit) {
    const OrthogonalityGraph &g = full().graph;
    for (int mid3 : {1, -1}) {
        for (int m3 : {1, -1}) {
            for (int n3 : {1, -1}) {
                for (int mid6 : {1, -1}) {
                    for (int m6 : {1, -1}) {
                        for (int n6 : {1, -1}) {
                            std::size_t a = index_of(g, {3, m3, n3, mid3});
                            std::size_t b = index_of(g, {6, m6, n6, mid6});
                            // Row 3 has X1 on its left, row 6 has X1 on its right.
                            ASSERT_EQ(g.adjacent(a, b), m3 != n6);
                        }
                    }
                }
            }
        }
    }
}

TEST(RowSubspaces, row_three_against_logical_one) {
    const OrthogonalityGraph &g = full().graph;
    std::size_t one = 48;
    ASSERT_EQ(g.vertices[one].label(), "|1_L>");
    for (int m : {1, -1}) {
        std::size_t lower = index_of(g, {3, m, m, -1});
        ASSERT_TRUE(g.adjacent(lower, one));
        for (std::size_t v = 48; v < 64; v++) {
            const auto &mut = std::get<CodewordMutation>(g.vertices[v].provenance);
            auto support = mut.mutator.support();
            bool on_four_or_five = support.empty() || support[0] >= 3;
            if (on_four_or_five) {
                ASSERT_TRUE(g.adjacent(lower, v)) << g.vertices[v].label();
            }
        }
        std::size_t upper = index_of(g, {3, m, m, 1});
        ASSERT_FALSE(g.adjacent(upper, one));
    }
    // Every ket with a 0 on the second qubit is orthogonal to the
    // middle -1 family.
    for (int m : {1, -1}) {
        for (int n : {1, -1}) {
            std::size_t lower = index_of(g, {3, m, n, -1});
            for (std::size_t idx = 0; idx < 32; idx++) {
                bool second_zero = (idx & 0b01000) == 0;
                ASSERT_EQ(g.adjacent(lower, idx), second_zero);
            }
        }
    }
}

TEST(OrthogonalityGraph, edge_count_and_dense_cross_check) {
    const OrthogonalityGraph &g = full().graph;
    ASSERT_EQ(g.size(), 104u);
    ASSERT_EQ(g.dimension(), 32u);
    ASSERT_EQ(g.edges.size(), 3084u);
    std::vector<oracle::Matrix> dense;
    for (const auto &v : g.vertices) {
        dense.push_back(oracle::matrix_of(v.projector));
    }
    std::size_t edges = 0;
    for (std::size_t a = 0; a < g.size(); a++) {
        ASSERT_FALSE(g.adjacent(a, a));
        for (std::size_t b = a + 1; b < g.size(); b++) {
            bool orth = (dense[a] * dense[b]).cwiseAbs().maxCoeff() < oracle::kTol;
            ASSERT_EQ(orth, g.adjacent(a, b)) << a << " " << b;
            ASSERT_EQ(g.adjacent(a, b), g.adjacent(b, a));
            edges += orth;
        }
    }
    ASSERT_EQ(edges, g.edges.size());
}

TEST(Contexts, thirty_nine_including_the_canonical_ones) {
    const auto &[g, cs] = full();
    ASSERT_TRUE(cs.complete);
    ASSERT_EQ(cs.contexts.size(), 39u);
    std::set<std::vector<std::size_t>> all;
    for (const auto &ctx : cs.contexts) {
        ASSERT_TRUE(std::is_sorted(ctx.members.begin(), ctx.members.end()));
        ASSERT_TRUE(context_sums_to_identity(g, ctx));
        all.insert(ctx.members);
    }
    std::vector<std::size_t> classical(32);
    std::vector<std::size_t> logical(32);
    for (std::size_t k = 0; k < 32; k++) {
        classical[k] = k;
        logical[k] = 32 + k;
    }
    ASSERT_TRUE(all.count(classical));
    ASSERT_TRUE(all.count(logical));
    for (std::size_t row = 2; row <= 6; row++) {
        std::vector<std::size_t> rowctx;
        for (std::size_t k = 0; k < 8; k++) {
            rowctx.push_back(64 + (row - 2) * 8 + k);
        }
        ASSERT_TRUE(all.count(rowctx)) << row;
    }
}

TEST(Contexts, budget_exhaustion_is_reported) {
    ContextOptions opts;
    opts.node_budget = 1000;
    ASSERT_THROW(enumerate_contexts(full().graph, opts), BudgetExhausted);
}

TEST(Colorability, full_instance_is_unsat) {
    const auto &[g, cs] = full();
    ColoringVerdict v = ks_colorability(g, cs);
    ASSERT_FALSE(v.satisfiable);
    ASSERT_GT(v.conflicts, 0u);
    ASSERT_FALSE(naive_coloring(g, cs).has_value());
}

TEST(Colorability, reversed_vertex_order_is_still_unsat) {
    std::vector<KSVertex> vs = full().graph.vertices;
    std::reverse(vs.begin(), vs.end());
    OrthogonalityGraph g = build_orthogonality_graph(std::move(vs));
    ContextSet cs = enumerate_contexts(g);
    ASSERT_EQ(cs.contexts.size(), 39u);
    ASSERT_FALSE(ks_colorability(g, cs).satisfiable);
}

TEST(Colorability, classical_context_alone_is_sat) {
    OrthogonalityGraph g = subgraph(full().graph, 32);
    ContextSet cs = enumerate_contexts(g);
    ASSERT_EQ(cs.contexts.size(), 1u);
    ColoringVerdict v = ks_colorability(g, cs);
    ASSERT_TRUE(v.satisfiable);
    ASSERT_EQ(std::count(v.coloring.begin(), v.coloring.end(), true), 1);
}

TEST(Colorability, rank_one_vectors_alone_are_sat) {
    OrthogonalityGraph g = subgraph(full().graph, 64);
    ContextSet cs = enumerate_contexts(g);
    ColoringVerdict v = ks_colorability(g, cs);
    ASSERT_EQ(v.satisfiable, naive_coloring(g, cs).has_value());
    ASSERT_TRUE(v.satisfiable);
    ASSERT_TRUE(coloring_valid(g, cs, v.coloring));
}

TEST(Colorability, dropping_one_row_agrees_with_naive_search) {
    // Remove the last row's subspaces: verdict from both solvers must match.
    OrthogonalityGraph g = subgraph(full().graph, 96);
    ContextSet cs = enumerate_contexts(g);
    ColoringVerdict v = ks_colorability(g, cs);
    ASSERT_EQ(v.satisfiable, naive_coloring(g, cs).has_value());
    if (v.satisfiable) {
        ASSERT_TRUE(coloring_valid(g, cs, v.coloring));
    }
}

TEST(Colorability, refuses_bad_context_sets) {
    const auto &[g, cs] = full();
    ContextSet partial = cs;
    partial.complete = false;
    ASSERT_THROW(ks_colorability(g, partial), InputError);

    ContextSet short_ctx = ContextSet::assume_complete({Context{{0, 1, 2}}});
    ASSERT_THROW(ks_colorability(g, short_ctx), InputError);

    std::vector<std::size_t> clash(32);
    for (std::size_t k = 0; k < 32; k++) {
        clash[k] = k;
    }
    clash[31] = 32;  // |0_L> overlaps |00000>
    ASSERT_THROW(ks_colorability(g, ContextSet::assume_complete({Context{clash}})), InputError);
}

TEST(Colorability, coloring_validator) {
    OrthogonalityGraph g = subgraph(full().graph, 32);
    ContextSet cs = enumerate_contexts(g);
    std::vector<bool> none(32, false);
    ASSERT_FALSE(coloring_valid(g, cs, none));
    std::vector<bool> two(32, false);
    two[0] = two[1] = true;
    ASSERT_FALSE(coloring_valid(g, cs, two));
    std::vector<bool> one(32, false);
    one[7] = true;
    ASSERT_TRUE(coloring_valid(g, cs, one));
    ASSERT_FALSE(coloring_valid(g, cs, std::vector<bool>(5, false)));
}
