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

// Command-line front end. Every subcommand builds one report; the report is
// printed as text or JSON and optionally written to $QPARADOX_REPORT_DIR.
//
// Exit codes: 0 reproduced, 1 falsified, 2 usage error, 3 budget exhausted.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qparadox/qparadox.hpp"

using json = nlohmann::json;
using namespace qparadox;

namespace {

constexpr int kExitReproduced = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Report {
    std::string command;
    std::string code;
    std::string verdict;  // "pass", "fail" or "contradiction-confirmed"
    json details = json::object();
    std::vector<std::string> text;  // human-readable lines

    bool reproduced() const {
        return verdict != "fail";
    }

    json to_json() const {
        return json{{"command", command}, {"code", code}, {"verdict", verdict}, {"details", details},
                    {"version", std::string(kVersion)}};
    }
};

std::string sign_text(int s) {
    return s > 0 ? "+1" : "-1";
}

std::string codeword_name(Codeword c) {
    return c == Codeword::Zero ? "0_L" : "1_L";
}

json element_json(const StabilizerElement &e) {
    return json{{"operator", e.op.str()}, {"sign0", e.sign0}, {"sign1", e.sign1}};
}

json terms_json(const ParityInstance &inst) {
    json out = json::array();
    for (const auto &t : inst.terms) {
        out.push_back(json{{"operator", t.op.str()}, {"sparse", t.op.sparse_str()}, {"eigenvalue", t.eigenvalue}});
    }
    return out;
}

// ---------------------------------------------------------------------------

Report verify_code(const std::string &name) {
    CodeDefinition code = code_by_name(name);
    Report r{"verify-code", name, "", {}, {}};
    StabilizerGroup g = code.group();
    StabilizerReport stab = verify_stabilizes(g, code.codeword0, code.codeword1);
    StabilizerGroup sub = invariant_subgroup(g);

    // The three-qubit states only protect against bit flips.
    std::vector<PauliString> errors;
    if (name == "mermin") {
        errors.push_back(PauliString::identity(3));
        for (std::size_t k = 0; k < 3; k++) {
            errors.push_back(PauliString::single(3, k, PauliLetter::X));
        }
    } else {
        errors = single_qubit_errors(code.num_qubits);
    }
    KnillLaflammeReport kl = knill_laflamme_check(code.codeword0, code.codeword1, errors);

    json elements = json::array();
    for (const auto &e : g.elements()) {
        elements.push_back(element_json(e));
    }
    json violations = json::array();
    for (const auto &v : stab.violations) {
        violations.push_back(json{{"operator", v.element.op.str()},
                                  {"codeword", codeword_name(v.codeword)},
                                  {"expected", v.codeword == Codeword::Zero ? v.element.sign0 : v.element.sign1},
                                  {"actual", v.actual ? json(*v.actual) : json(nullptr)}});
    }
    json error_list = json::array();
    for (const auto &e : errors) {
        error_list.push_back(e.str());
    }
    r.details["num_qubits"] = code.num_qubits;
    r.details["group_order"] = g.order();
    r.details["expected_group_order"] = code.expected_group_order;
    r.details["elements"] = elements;
    r.details["stabilizer_checks"] = stab.checked;
    r.details["violations"] = violations;
    r.details["sign_stable_subgroup_order"] = sub.order();
    r.details["knill_laflamme"] = json{{"errors", error_list},
                                       {"pairs", kl.pairs.size()},
                                       {"failed_pairs", kl.num_failed()},
                                       {"passed", kl.passed()}};
    if (name == "mermin") {
        std::vector<PauliString> with_phase = errors;
        with_phase.push_back(PauliString::single(3, 0, PauliLetter::Z));
        r.details["phase_error_breaks_knill_laflamme"] =
            !knill_laflamme_check(code.codeword0, code.codeword1, with_phase).passed();
    }

    bool ok = g.order() == code.expected_group_order && stab.passed() && kl.passed();
    r.verdict = ok ? "pass" : "fail";
    r.text.push_back(name + " code: group order " + std::to_string(g.order()) + " (expected " +
                     std::to_string(code.expected_group_order) + ")");
    r.text.push_back("stabilizer checks: " + std::to_string(stab.checked) + " elements, " +
                     std::to_string(stab.violations.size()) + " violations");
    r.text.push_back("sign-stable subgroup order: " + std::to_string(sub.order()));
    r.text.push_back("Knill-Laflamme over " + std::to_string(errors.size()) + " errors: " +
                     std::to_string(kl.num_failed()) + "/" + std::to_string(kl.pairs.size()) + " pairs fail");
    for (const auto &e : g.elements()) {
        r.text.push_back("  " + sign_text(e.sign0) + " " + sign_text(e.sign1) + "  " + e.op.str());
    }
    return r;
}

Report reality(const std::string &name, std::size_t site, const std::string &letter_text, int codeword) {
    CodeDefinition code = code_by_name(name);
    if (site < 1 || site > code.num_qubits) {
        throw InputError("--site must be between 1 and " + std::to_string(code.num_qubits));
    }
    if (letter_text.size() != 1) {
        throw InputError("--letter must be x, y or z");
    }
    PauliLetter letter = letter_from_char(letter_text[0]);
    if (letter == PauliLetter::I) {
        throw InputError("--letter must be x, y or z");
    }
    Codeword cw = codeword == 0 ? Codeword::Zero : Codeword::One;
    StabilizerGroup g = code.group();
    auto ds = find_determinations(g, site - 1, letter, cw);
    auto pairs = compatible_pairs(ds);

    Report r{"reality", name, "pass", {}, {}};
    Symbol target{site - 1, letter};
    json list = json::array();
    bool all_hold = true;
    for (const auto &d : ds) {
        bool holds = determination_holds(d, code.codeword(cw));
        all_hold &= holds;
        list.push_back(json{{"witness", d.witness.sparse_str()},
                            {"source", d.source.op.str()},
                            {"product", d.product},
                            {"holds", holds}});
    }
    json pair_list = json::array();
    for (auto [a, b] : pairs) {
        pair_list.push_back(json::array({ds[a].witness.sparse_str(), ds[b].witness.sparse_str()}));
    }
    r.details["target"] = target.str();
    r.details["codeword"] = codeword_name(cw);
    r.details["determinations"] = list;
    r.details["compatible_pairs"] = pair_list;
    r.details["num_determinations"] = ds.size();
    r.details["num_compatible_pairs"] = pairs.size();
    r.verdict = all_hold ? "pass" : "fail";

    r.text.push_back(target.str() + " on |" + codeword_name(cw) + ">: " + std::to_string(ds.size()) +
                     " determinations, " + std::to_string(pairs.size()) + " compatible pairs");
    for (const auto &d : ds) {
        r.text.push_back("  " + target.str() + " * " + d.witness.sparse_str() + " = " + sign_text(d.product) +
                         "   (from " + d.source.op.str() + ")");
    }
    for (auto [a, b] : pairs) {
        r.text.push_back("  compatible: " + ds[a].witness.sparse_str() + " | " + ds[b].witness.sparse_str());
    }
    return r;
}

Report pentagon() {
    CodeDefinition five = five_qubit_code();
    Report r{"pentagon", "five", "contradiction-confirmed", {}, {}};
    json per = json::object();
    for (Codeword cw : {Codeword::Zero, Codeword::One}) {
        ParityInstance inst = canonical_pentagon_instance(five, cw);
        ParityReport rep = check_parity_contradiction(inst);
        PentagonLayout layout = pentagon_layout(inst);
        json mult = json::object();
        for (const auto &[sym, count] : rep.multiplicities) {
            mult[sym.str()] = count;
        }
        json sides = json::array();
        for (const auto &side : layout.sides) {
            json syms = json::array();
            for (const auto &s : side.symbols) {
                syms.push_back(s.str());
            }
            sides.push_back(json{{"center", Symbol{side.center_site, PauliLetter::Z}.str()},
                                 {"symbols", syms},
                                 {"value", side.term.eigenvalue}});
        }
        bool ok = rep.contradiction && rep.product_is_minus_identity && rep.verdicts_agree;
        if (!ok) {
            r.verdict = "fail";
        }
        per[codeword_name(cw)] = json{{"terms", terms_json(inst)},
                                      {"multiplicities", mult},
                                      {"all_even", rep.all_even},
                                      {"eigenvalue_product", rep.eigenvalue_product},
                                      {"operator_product", rep.operator_product.str()},
                                      {"hub", json{{"operator", layout.hub.op.str()}, {"value", layout.hub.eigenvalue}}},
                                      {"sides", sides},
                                      {"contradiction", ok}};
        r.text.push_back("|" + codeword_name(cw) + ">: " + std::string(ok ? "contradiction confirmed" : "NO CONTRADICTION"));
        r.text.push_back("  hub " + layout.hub.op.sparse_str() + " = " + sign_text(layout.hub.eigenvalue));
        for (const auto &side : layout.sides) {
            r.text.push_back("  side " + side.term.op.sparse_str() + " = " + sign_text(side.term.eigenvalue));
        }
        r.text.push_back("  " + std::to_string(rep.multiplicities.size()) + " symbols, all even: " +
                         (rep.all_even ? "yes" : "no") + "; eigenvalue product " + sign_text(rep.eigenvalue_product) +
                         "; operator product " + rep.operator_product.str());
    }
    r.details["codewords"] = per;
    return r;
}

Report array() {
    OperatorArray arr = build_canonical_array();
    ArrayReport rep = check_array(arr);
    Report r{"array", "five", "", {}, {}};
    json cells = json::array();
    for (std::size_t row = 0; row < arr.rows(); row++) {
        json line = json::array();
        for (std::size_t c = 0; c < arr.cols(); c++) {
            line.push_back(arr.at(row, c).is_identity() ? std::string() : arr.at(row, c).sparse_str());
        }
        cells.push_back(line);
    }
    auto lines_json = [](const std::vector<ArrayLineReport> &ls) {
        json out = json::array();
        for (const auto &l : ls) {
            out.push_back(json{{"commuting", l.commuting},
                               {"product", l.product.str()},
                               {"product_sign", l.product_sign ? json(*l.product_sign) : json(nullptr)},
                               {"declared", l.declared},
                               {"matches_declared", l.matches_declared}});
        }
        return out;
    };
    r.details["cells"] = cells;
    r.details["rows"] = lines_json(rep.rows);
    r.details["columns"] = lines_json(rep.columns);
    r.details["all_lines_valid"] = rep.all_lines_valid;
    r.details["all_match_declared"] = rep.all_match_declared;
    r.details["impossible"] = rep.impossible;
    r.verdict = rep.impossible && rep.all_match_declared ? "contradiction-confirmed" : "fail";

    for (std::size_t row = 0; row < rep.rows.size(); row++) {
        r.text.push_back("row " + std::to_string(row + 1) + ": product " + rep.rows[row].product.str() +
                         (rep.rows[row].commuting ? "" : " (NOT commuting)"));
    }
    for (std::size_t c = 0; c < rep.columns.size(); c++) {
        r.text.push_back("column " + std::to_string(c + 1) + ": product " + rep.columns[c].product.str() +
                         (rep.columns[c].commuting ? "" : " (NOT commuting)"));
    }
    r.text.push_back(std::string("value assignment impossible: ") + (rep.impossible ? "yes" : "no"));
    return r;
}

Report ks(std::uint64_t budget) {
    OrthogonalityGraph g = build_orthogonality_graph(build_ks_set());
    ContextOptions opts;
    opts.node_budget = budget;
    ContextSet cs = enumerate_contexts(g, opts);
    ColoringVerdict v = ks_colorability(g, cs);

    Report r{"ks", "five", v.satisfiable ? "fail" : "contradiction-confirmed", {}, {}};
    std::size_t rank1 = 0, rank4 = 0;
    for (const auto &vx : g.vertices) {
        rank1 += vx.rank() == 1;
        rank4 += vx.rank() == 4;
    }
    json contexts = json::array();
    for (const auto &ctx : cs.contexts) {
        json members = json::array();
        for (std::size_t m : ctx.members) {
            members.push_back(g.vertices[m].label());
        }
        contexts.push_back(members);
    }
    r.details["vertices"] = g.size();
    r.details["rank_one_vertices"] = rank1;
    r.details["rank_four_vertices"] = rank4;
    r.details["vertices_per_dimension"] = static_cast<double>(g.size()) / static_cast<double>(g.dimension());
    r.details["edges"] = g.edges.size();
    r.details["num_contexts"] = cs.contexts.size();
    r.details["contexts"] = contexts;
    r.details["enumeration_nodes"] = cs.nodes;
    r.details["satisfiable"] = v.satisfiable;
    r.details["solver"] = json{{"nodes", v.nodes},
                               {"decisions", v.decisions},
                               {"propagations", v.propagations},
                               {"conflicts", v.conflicts}};
    r.text.push_back(std::to_string(g.size()) + " vertices (" + std::to_string(rank1) + " rank-1, " +
                     std::to_string(rank4) + " rank-4), " + std::to_string(g.edges.size()) + " orthogonal pairs");
    r.text.push_back(std::to_string(cs.contexts.size()) + " contexts (" + std::to_string(cs.nodes) +
                     " enumeration nodes)");
    if (v.satisfiable) {
        json truth = json::array();
        std::string line = "SAT: coloring found, true vertices:";
        for (std::size_t k = 0; k < g.size(); k++) {
            if (v.coloring[k]) {
                truth.push_back(g.vertices[k].label());
                line += " " + g.vertices[k].label();
            }
        }
        r.details["coloring_true_vertices"] = truth;
        r.text.push_back(line);
    } else {
        r.text.push_back("UNSAT: no assignment obeys both rules (" + std::to_string(v.nodes) + " nodes, " +
                         std::to_string(v.conflicts) + " conflicts)");
    }
    return r;
}

Report steane_search(std::size_t max_size, std::uint64_t budget) {
    CodeDefinition steane = steane_code();
    StabilizerGroup g = steane.group();
    ParitySearchOptions opts;
    opts.max_subset = max_size;
    opts.max_results = 1;
    opts.node_budget = budget;
    ParitySearchResult smallest = search_parity_contradictions(g, Codeword::Zero, steane.codeword0, opts);

    ParitySearchOptions exact = opts;
    exact.min_subset = max_size;
    ParitySearchResult at_max = search_parity_contradictions(g, Codeword::Zero, steane.codeword0, exact);

    Report r{"steane-search", "steane", smallest.instances.empty() ? "fail" : "contradiction-confirmed", {}, {}};
    std::size_t lo = 7, hi = 0;
    for (const auto &e : g.elements()) {
        if (!e.op.is_identity()) {
            lo = std::min(lo, e.op.weight());
            hi = std::max(hi, e.op.weight());
        }
    }
    r.details["group_order"] = g.order();
    r.details["min_weight"] = lo;
    r.details["max_weight"] = hi;
    r.details["max_subset"] = max_size;
    r.details["minimal_size"] = smallest.minimal_size;
    r.details["smallest_instance"] = smallest.instances.empty() ? json(nullptr) : terms_json(smallest.instances[0]);
    r.details["exists_at_max_subset"] = !at_max.instances.empty();
    r.details["instance_at_max_subset"] = at_max.instances.empty() ? json(nullptr) : terms_json(at_max.instances[0]);
    r.details["nodes"] = smallest.nodes + at_max.nodes;

    r.text.push_back("steane group order " + std::to_string(g.order()) + ", weights " + std::to_string(lo) + ".." +
                     std::to_string(hi));
    if (smallest.instances.empty()) {
        r.text.push_back("no contradiction with at most " + std::to_string(max_size) + " elements");
    } else {
        r.text.push_back("smallest contradiction: " + std::to_string(smallest.minimal_size) + " elements");
        for (const auto &t : smallest.instances[0].terms) {
            r.text.push_back("  " + t.op.str() + " = " + sign_text(t.eigenvalue));
        }
    }
    r.text.push_back("contradiction with exactly " + std::to_string(max_size) + " elements: " +
                     (at_max.instances.empty() ? "none" : "found"));
    return r;
}

PauliString random_pauli(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_int_distribution<int> four(0, 3);
    PauliString p(n);
    for (std::size_t k = 0; k < n; k++) {
        p.set_letter(k, static_cast<PauliLetter>(four(rng)));
    }
    return p.with_phase(four(rng));
}

Report selftest(std::uint64_t seed, std::size_t trials) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> amp(-4, 4);
    std::size_t failures = 0;
    for (std::size_t t = 0; t < trials; t++) {
        std::size_t n = 1 + t % 5;
        PauliString a = random_pauli(rng, n);
        PauliString b = random_pauli(rng, n);
        PauliString c = random_pauli(rng, n);
        StateVector v(n);
        for (std::size_t k = 0; k < v.dimension(); k++) {
            v[k] = DyadicGaussian(amp(rng), amp(rng), 1);
        }
        failures += (a * b) * c != a * (b * c);
        failures += (a * b) != (a.commutes(b) ? b * a : -(b * a));
        failures += apply(a, apply(b, v)) != apply(a * b, v);
        failures += PauliString::parse(a.str()) != a;
    }
    Report r{"selftest", "", failures == 0 ? "pass" : "fail", {}, {}};
    r.details["seed"] = seed;
    r.details["trials"] = trials;
    r.details["failures"] = failures;
    r.text.push_back(std::to_string(trials) + " random trials (seed " + std::to_string(seed) + "): " +
                     std::to_string(failures) + " failures");
    return r;
}

void emit(const Report &r, const std::string &format) {
    if (format == "json") {
        std::cout << r.to_json().dump(2) << "\n";
    } else {
        for (const auto &line : r.text) {
            std::cout << line << "\n";
        }
        std::cout << "verdict: " << r.verdict << "\n";
    }
    if (const char *dir = std::getenv("QPARADOX_REPORT_DIR"); dir != nullptr && *dir != '\0') {
        std::filesystem::create_directories(dir);
        std::string file = r.command + (r.code.empty() ? "" : "-" + r.code) + ".json";
        std::ofstream out(std::filesystem::path(dir) / file);
        out << r.to_json().dump(2) << "\n";
        if (!out) {
            throw std::runtime_error("could not write report to " + std::string(dir));
        }
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact checks of stabilizer-code paradoxes and a Kochen-Specker set", "qparadox"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string code = "five";
    std::size_t site = 1;
    std::string letter = "x";
    int codeword = 0;
    std::size_t max_size = 10;
    std::uint64_t budget = 0;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;

    auto *verify = app.add_subcommand("verify-code", "Close the group, check signs and Knill-Laflamme");
    verify->add_option("--code", code, "five, mermin or steane")->required();

    auto *real = app.add_subcommand("reality", "List the ways to predict one single-qubit observable");
    real->add_option("--code", code, "five, mermin or steane")->required();
    real->add_option("--site", site, "Qubit number, 1-based")->required();
    real->add_option("--letter", letter, "x, y or z")->required();
    real->add_option("--codeword", codeword, "0 or 1")->check(CLI::IsMember({0, 1}));

    auto *pent = app.add_subcommand("pentagon", "Six-operator parity contradiction on both codewords");
    auto *arr = app.add_subcommand("array", "Check the 6x13 operator array");

    auto *ksc = app.add_subcommand("ks", "Build the 104-projector set and test KS colorability");
    ksc->add_option("--budget", budget, "Context enumeration node budget")->default_val(50'000'000);

    auto *steane = app.add_subcommand("steane-search", "Search the Steane group for parity contradictions");
    steane->add_option("--max", max_size, "Largest subset size")->default_val(10)->check(CLI::Range(1, 20));
    steane->add_option("--budget", budget, "Search node budget")->default_val(2'000'000'000ULL);

    auto *self = app.add_subcommand("selftest", "Random algebraic self-checks");
    self->add_option("--seed", seed, "RNG seed");
    self->add_option("--trials", trials, "Number of random trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        Report r;
        if (*verify) {
            r = verify_code(code);
        } else if (*real) {
            r = reality(code, site, letter, codeword);
        } else if (*pent) {
            r = pentagon();
        } else if (*arr) {
            r = array();
        } else if (*ksc) {
            r = ks(budget);
        } else if (*steane) {
            r = steane_search(max_size, budget);
        } else if (*self) {
            r = selftest(seed, trials);
        }
        emit(r, format);
        if (!r.reproduced()) {
            std::cerr << "qparadox: " << r.command << " did NOT reproduce the expected result\n";
            return kExitFalsified;
        }
        return kExitReproduced;
    } catch (const BudgetExhausted &e) {
        std::cerr << "qparadox: budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument &e) {
        std::cerr << "qparadox: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "qparadox: " << e.what() << "\n";
        return kExitFalsified;
    }
}
