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

#include "pauliscope/qudit_operator.h"

#include <stdexcept>

using namespace pauliscope;

namespace {

void check_dimension(unsigned d) {
    if (d != 2 && d != 3) {
        throw std::invalid_argument("unsupported qudit dimension " + std::to_string(d) + " (supported: 2, 3)");
    }
}

/// Phase offset c with named(x, z) = tau^c X^x Z^z.
unsigned named_offset(unsigned d, FactorExponent e) {
    if (d == 2) {
        return e.x * e.z;  // Y = i X Z
    }
    // Y^2 = omega X^2 Z^2 and V^2 = omega^2 X^2 Z; the others carry no phase.
    if (e.x == 2 && e.z == 2) {
        return 1;
    }
    if (e.x == 2 && e.z == 1) {
        return 2;
    }
    return 0;
}

void check_compatible(const QuditOperator &p, const QuditOperator &q) {
    if (p.dimension() != q.dimension()) {
        throw std::invalid_argument("operator dimension mismatch");
    }
    if (p.arity() != q.arity()) {
        throw std::invalid_argument("operator arity mismatch");
    }
}

}  // namespace

QuditOperator::QuditOperator(unsigned dimension, std::vector<FactorExponent> factors, unsigned phase)
    : dimension_(dimension), factors_(std::move(factors)), phase_(0) {
    check_dimension(dimension);
    for (auto &f : factors_) {
        if (f.x >= dimension || f.z >= dimension) {
            throw std::invalid_argument("factor exponent out of range for dimension " + std::to_string(dimension));
        }
    }
    phase_ = phase % phase_modulus();
}

QuditOperator QuditOperator::identity(unsigned dimension, size_t arity) {
    return QuditOperator(dimension, std::vector<FactorExponent>(arity));
}

bool QuditOperator::is_identity() const {
    for (const auto &f : factors_) {
        if (!f.is_identity()) {
            return false;
        }
    }
    return true;
}

QuditOperator QuditOperator::phase_free() const {
    return with_phase(0);
}

QuditOperator QuditOperator::with_phase(unsigned phase) const {
    QuditOperator out = *this;
    out.phase_ = phase % phase_modulus();
    return out;
}

QuditOperator QuditOperator::inverse() const {
    // Solve p * q = I for q: take the negated exponents and fix the phase.
    std::vector<FactorExponent> neg;
    for (const auto &f : factors_) {
        neg.push_back({static_cast<uint8_t>((dimension_ - f.x) % dimension_), static_cast<uint8_t>((dimension_ - f.z) % dimension_)});
    }
    QuditOperator q(dimension_, neg);
    QuditOperator pq = multiply(*this, q);
    return q.with_phase(phase_modulus() - pq.phase());
}

QuditOperator pauliscope::multiply(const QuditOperator &p, const QuditOperator &q) {
    check_compatible(p, q);
    unsigned d = p.dimension();
    unsigned modulus = p.phase_modulus();
    // Commuting Z^z past X^x' costs omega^{z x'}; for qubits omega = -1 = tau^2.
    unsigned swap_weight = d == 2 ? 2 : 1;
    unsigned phase = p.phase() + q.phase();
    std::vector<FactorExponent> out;
    out.reserve(p.arity());
    for (size_t j = 0; j < p.arity(); j++) {
        FactorExponent a = p.factors()[j];
        FactorExponent b = q.factors()[j];
        FactorExponent c{static_cast<uint8_t>((a.x + b.x) % d), static_cast<uint8_t>((a.z + b.z) % d)};
        phase += named_offset(d, a) + named_offset(d, b) + swap_weight * a.z * b.x;
        phase += modulus - named_offset(d, c);
        out.push_back(c);
    }
    return QuditOperator(d, std::move(out), phase % modulus);
}

unsigned pauliscope::symplectic_form(const QuditOperator &p, const QuditOperator &q) {
    check_compatible(p, q);
    unsigned d = p.dimension();
    unsigned total = 0;
    for (size_t j = 0; j < p.arity(); j++) {
        FactorExponent a = p.factors()[j];
        FactorExponent b = q.factors()[j];
        total += a.x * b.z + (d - 1) * b.x * a.z;
    }
    return total % d;
}

bool pauliscope::commutes(const QuditOperator &p, const QuditOperator &q) {
    return symplectic_form(p, q) == 0;
}
