// Copyright 2026 The Pauliscope Authors
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

// pauliscope: build Pauli graphs, verify the published claims, print a report.
//
// Exit codes: 0 all good, 1 a verification failed, 2 bad usage or configuration.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pauliscope/claims.h"
#include "pauliscope/graph_search.h"
#include "pauliscope/pauli_system.h"
#include "pauliscope/polar.h"

using namespace pauliscope;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

size_t thread_count(size_t flag) {
    if (flag > 0) {
        return flag;
    }
    if (const char *env = std::getenv("PAULISCOPE_THREADS")) {
        try {
            size_t pos = 0;
            long v = std::stol(env, &pos);
            if (pos == std::string(env).size() && v > 0) {
                return static_cast<size_t>(v);
            }
        } catch (const std::exception &) {
        }
        throw UsageError("PAULISCOPE_THREADS must be a positive integer");
    }
    return 0;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write " + path);
    }
    file << text;
}

std::string graph_text(const PauliSystem &sys) {
    const Graph &g = sys.graph();
    auto inv = invariants(g);
    std::ostringstream out;
    out << "P[" << sys.dimension() << "," << sys.arity() << "]: " << inv.vertices << " vertices, " << inv.edges << " edges";
    if (inv.regular) {
        out << ", " << inv.degrees.front() << "-regular";
    }
    out << ", girth " << (inv.girth ? std::to_string(*inv.girth) : "none") << ", diameter "
        << (inv.diameter ? std::to_string(*inv.diameter) : "none") << '\n';
    for (size_t v = 0; v < g.size(); v++) {
        out << sys.label(v) << ':';
        g.neighbors(v).for_each([&](size_t u) { out << ' ' << sys.label(u); });
        out << '\n';
    }
    return out.str();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pauli graphs of qubits and qutrits and their finite geometries"};
    app.require_subcommand(1);
    size_t threads_flag = 0;
    size_t cap = kDefaultVertexCap;
    app.add_option("--threads", threads_flag, "worker threads (default: PAULISCOPE_THREADS or all cores)")->check(CLI::PositiveNumber);
    app.add_option("--cap-vertices", cap, "largest vertex count to build")->check(CLI::PositiveNumber);

    auto *graph_cmd = app.add_subcommand("graph", "emit the commutation graph P[d,n]");
    unsigned d = 2;
    size_t n = 2;
    std::string format = "text";
    std::string out_path;
    bool blocks = false;
    bool products = false;
    graph_cmd->add_option("--d", d, "qudit dimension (2 or 3)")->check(CLI::IsMember({2u, 3u}));
    graph_cmd->add_option("--n", n, "number of qudits")->check(CLI::PositiveNumber);
    graph_cmd->add_option("--format", format, "json, csv, dot or text")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    graph_cmd->add_option("--out", out_path, "output file (default stdout)");
    graph_cmd->add_flag("--blocks", blocks, "block pattern after removing the reference triple (qubits, n = 2..4)");
    graph_cmd->add_flag("--products", products, "with --format csv, the product table instead of the commutation table");

    auto *verify_cmd = app.add_subcommand("verify", "recompute the published claims");
    std::string scope_name = "all";
    std::string verify_format = "text";
    verify_cmd->add_option("--scope", scope_name, "two-qubit, n-qubit, ringline, qutrit or all");
    verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto *report_cmd = app.add_subcommand("report", "regenerate tables, spectra and claims as one document");
    report_cmd->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        size_t threads = thread_count(threads_flag);
        if (*graph_cmd) {
            if (blocks) {
                if (d != 2 || n < 2 || n > 4) {
                    throw UsageError("--blocks needs --d 2 and 2 <= --n <= 4");
                }
                auto b = block_structure(n);
                emit(format == "json" ? b.to_json().dump(2) + "\n" : b.grid_text() + "\n" + b.matrix_text(), out_path);
                return b.all_passed() ? 0 : 1;
            }
            PauliSystem sys(d, n, cap);
            std::string text;
            if (format == "json") {
                text = sys.adjacency_json().dump(2) + "\n";
            } else if (format == "csv") {
                text = products ? sys.product_table_csv() : sys.commutation_table_csv();
            } else if (format == "dot") {
                text = to_dot(sys.graph(), "P_" + std::to_string(d) + "_" + std::to_string(n));
            } else {
                text = graph_text(sys);
            }
            emit(text, out_path);
            return 0;
        }
        if (*verify_cmd) {
            Scope scope = parse_scope(scope_name);
            auto claims = verify_claims(scope, threads);
            size_t failed = 0, flagged = 0;
            for (const auto &c : claims) {
                failed += c.hard_failure();
                flagged += c.kind == ClaimKind::Discrepancy && c.status() != ClaimStatus::Match;
            }
            if (verify_format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto &c : claims) {
                    j.push_back(c.to_json());
                }
                emit(nlohmann::json{{"scope", to_string(scope)}, {"claims", j}, {"failed", failed}}.dump(2) + "\n", out_path);
            } else {
                std::ostringstream text;
                for (const auto &c : claims) {
                    text << c.line() << '\n';
                }
                text << claims.size() << " claims, " << failed << " failed, " << flagged << " flagged as published-value discrepancies\n";
                emit(text.str(), out_path);
            }
            return failed == 0 ? 0 : 1;
        }
        if (*report_cmd) {
            std::string text = full_report(threads);
            emit(text, out_path);
            return text.find("\nFAIL ") == std::string::npos ? 0 : 1;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CapExceeded &e) {
        std::cerr << "error: " << e.what() << " (raise --cap-vertices)\n";
        return 2;
    }
    return 2;
}
