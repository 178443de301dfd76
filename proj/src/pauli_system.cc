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

#include "pauliscope/pauli_system.h"

#include <array>
#include <sstream>
#include <stdexcept>

#include "pauliscope/graph_search.h"

using namespace pauliscope;

namespace {

// Named single-qudit operators in canonical order.
constexpr std::array<FactorExponent, 4> kQubitNamed{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
constexpr std::array<const char *, 4> kQubitNames{"I", "X", "Y", "Z"};
constexpr std::array<FactorExponent, 9> kQutritNamed{{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {0, 2}, {2, 0}, {2, 2}, {2, 1}}};
constexpr std::array<const char *, 9> kQutritNames{"I", "Z", "X", "Y", "V", "Z2", "X2", "Y2", "V2"};

std::string make_label(unsigned d, size_t n, const std::vector<size_t> &digits) {
    if (n == 2) {
        size_t j = digits[0];
        size_t k = digits[1];
        size_t per = d * d - 1;  // non-identity named operators per factor
        if (j == 0) {
            return std::to_string(k);
        }
        if (k == 0) {
            return std::string(1, static_cast<char>('a' + j - 1));
        }
        return std::to_string(per * (j - 1) + k + per);
    }
    std::string out;
    for (size_t i = 0; i < n; i++) {
        if (d == 2) {
            out += kQubitNames[digits[i]];
        } else {
            if (i) {
                out += '.';
            }
            out += kQutritNames[digits[i]];
        }
    }
    return out;
}

size_t checked_size(unsigned d, size_t n, size_t cap) {
    if (d != 2 && d != 3) {
        throw std::invalid_argument("unsupported qudit dimension " + std::to_string(d) + " (supported: 2, 3)");
    }
    if (n == 0) {
        throw std::invalid_argument("number of qudits must be positive");
    }
    size_t total = 1;
    for (size_t i = 0; i < 2 * n; i++) {
        total *= d;
        if (total - 1 > cap) {
            throw CapExceeded("P[" + std::to_string(d) + "," + std::to_string(n) + "] exceeds the vertex cap of " + std::to_string(cap));
        }
    }
    return total - 1;
}

}  // namespace

PauliSystem::PauliSystem(unsigned dimension, size_t arity, size_t vertex_cap) : dimension_(dimension), arity_(arity) {
    size_t count = checked_size(dimension, arity, vertex_cap);
    size_t base = dimension * dimension;
    for (size_t index = 1; index <= count; index++) {
        std::vector<size_t> digits(arity);
        size_t rest = index;
        for (size_t i = arity; i-- > 0;) {
            digits[i] = rest % base;
            rest /= base;
        }
        std::vector<FactorExponent> factors;
        for (size_t digit : digits) {
            factors.push_back(dimension == 2 ? kQubitNamed[digit] : kQutritNamed[digit]);
        }
        operators_.emplace_back(dimension, std::move(factors));
        labels_.push_back(make_label(dimension, arity, digits));
        by_label_.emplace(labels_.back(), index - 1);
    }
    if (dimension == 2 && arity == 3) {
        by_label_.emplace("a3", index_of("XII"));
        by_label_.emplace("b3", index_of("YII"));
        by_label_.emplace("c3", index_of("ZII"));
    }

    graph_ = Graph(count, labels_);
    for (size_t a = 0; a < count; a++) {
        for (size_t b = a + 1; b < count; b++) {
            if (commutes(operators_[a], operators_[b])) {
                graph_.add_edge(a, b);
            }
        }
    }
}

size_t PauliSystem::index_of(const QuditOperator &op) const {
    if (op.dimension() != dimension_ || op.arity() != arity_) {
        throw std::invalid_argument("operator does not belong to this system");
    }
    if (op.is_identity()) {
        throw std::invalid_argument("the identity is not a vertex");
    }
    size_t base = dimension_ * dimension_;
    size_t index = 0;
    for (const auto &f : op.factors()) {
        size_t digit = 0;
        for (size_t k = 0; k < base; k++) {
            if ((dimension_ == 2 ? kQubitNamed[k] : kQutritNamed[k]) == f) {
                digit = k;
            }
        }
        index = index * base + digit;
    }
    return index - 1;
}

size_t PauliSystem::index_of(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) {
        throw std::invalid_argument("unknown operator label '" + std::string(label) + "'");
    }
    return it->second;
}

QuditOperator PauliSystem::parse(std::string_view label) const {
    return operators_[index_of(label)];
}

VertexSet PauliSystem::vertex_set(std::initializer_list<std::string_view> labels) const {
    VertexSet out(size());
    for (auto l : labels) {
        out.set(index_of(l));
    }
    return out;
}

std::vector<std::string> PauliSystem::labels_of(const VertexSet &s) const {
    std::vector<std::string> out;
    s.for_each([&](size_t v) { out.push_back(labels_[v]); });
    return out;
}

QuditOperator PauliSystem::product(size_t a, size_t b) const {
    return multiply(operators_[a], operators_[b]);
}

std::string PauliSystem::format(const QuditOperator &op) const {
    std::string body = op.is_identity() ? "0" : labels_[index_of(op)];
    if (dimension_ == 2) {
        static constexpr std::array<const char *, 4> prefix{"", "i", "-", "-i"};
        return prefix[op.phase()] + body;
    }
    static constexpr std::array<const char *, 3> prefix{"", "w*", "w2*"};
    return prefix[op.phase()] + body;
}

std::string PauliSystem::product_table_csv() const {
    std::ostringstream out;
    for (const auto &l : labels_) {
        out << ',' << l;
    }
    out << '\n';
    for (size_t a = 0; a < size(); a++) {
        out << labels_[a];
        for (size_t b = 0; b < size(); b++) {
            out << ',' << format(product(a, b));
        }
        out << '\n';
    }
    return out.str();
}

std::string PauliSystem::commutation_table_csv() const {
    std::ostringstream out;
    for (const auto &l : labels_) {
        out << ',' << l;
    }
    out << '\n';
    for (size_t a = 0; a < size(); a++) {
        out << labels_[a];
        for (size_t b = 0; b < size(); b++) {
            out << ',' << (graph_.adjacent(a, b) ? 1 : 0);
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json PauliSystem::adjacency_json() const {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : graph_.edges()) {
        edges.push_back({a, b});
    }
    return {{"d", dimension_}, {"n", arity_}, {"labels", labels_}, {"edges", edges}};
}

Graph pauliscope::build_pauli_graph(unsigned dimension, size_t arity, size_t vertex_cap) {
    return PauliSystem(dimension, arity, vertex_cap).graph();
}
