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

#ifndef PAULISCOPE_QUDIT_OPERATOR_H
#define PAULISCOPE_QUDIT_OPERATOR_H

#include <cstdint>
#include <string>
#include <vector>

namespace pauliscope {

/// Exponent pair (x, z) of one tensor factor: the class of X^x Z^z.
struct FactorExponent {
    uint8_t x = 0;
    uint8_t z = 0;
    bool operator==(const FactorExponent &other) const = default;
    bool is_identity() const {
        return x == 0 && z == 0;
    }
};

/// A generalized Pauli operator on n qudits of prime dimension d (2 or 3).
///
/// The operator is tau^phase times the tensor product of the *named*
/// single-qudit operators selected by each exponent pair, where tau = i for
/// qubits and tau = omega = exp(2 pi i / 3) for qutrits. Named operators:
///
///   qubits:  I, X, Z, Y = i X Z
///   qutrits: I, Z, X, Y = X Z, V = X Z^2, Z^2, X^2, Y^2 = (X Z)^2, V^2 = (X Z^2)^2
///
/// so a vertex of a Pauli graph is the phase-0 operator of its class.
class QuditOperator {
   public:
    QuditOperator(unsigned dimension, std::vector<FactorExponent> factors, unsigned phase = 0);
    static QuditOperator identity(unsigned dimension, size_t arity);

    unsigned dimension() const {
        return dimension_;
    }
    size_t arity() const {
        return factors_.size();
    }
    const std::vector<FactorExponent> &factors() const {
        return factors_;
    }
    /// Exponent of tau, reduced mod 4 (qubits) or mod 3 (qutrits).
    unsigned phase() const {
        return phase_;
    }
    unsigned phase_modulus() const {
        return dimension_ == 2 ? 4 : 3;
    }

    bool is_identity() const;
    QuditOperator phase_free() const;
    QuditOperator with_phase(unsigned phase) const;
    QuditOperator inverse() const;

    bool operator==(const QuditOperator &other) const = default;

   private:
    unsigned dimension_;
    std::vector<FactorExponent> factors_;
    unsigned phase_;
};

/// Exact product p * q. Throws std::invalid_argument on a dimension/arity mismatch.
QuditOperator multiply(const QuditOperator &p, const QuditOperator &q);
/// Symplectic form sum_j (x_j z'_j - x'_j z_j) mod d.
unsigned symplectic_form(const QuditOperator &p, const QuditOperator &q);
bool commutes(const QuditOperator &p, const QuditOperator &q);

}  // namespace pauliscope

#endif
