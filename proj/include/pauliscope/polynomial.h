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


#ifndef PAULISCOPE_POLYNOMIAL_H
#define PAULISCOPE_POLYNOMIAL_H

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace pauliscope {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficient i multiplies x^i; the zero polynomial has no coefficients.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coefficients);
    static IntPoly constant(long c);
    /// x - root.
    static IntPoly linear(long root);
    /// x^2 + b x + c.
    static IntPoly quadratic(long b, long c);

    /// -1 for the zero polynomial.
    long degree() const {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    bool is_zero() const {
        return coeffs_.empty();
    }
    const std::vector<mpz_class> &coefficients() const {
        return coeffs_;
    }
    mpz_class coeff(size_t i) const;
    bool is_monic() const;

    mpz_class eval(const mpz_class &x) const;
    /// Quotient and remainder by a monic divisor.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly &divisor) const;
    /// Remainder of each coefficient mod m (non-negative).
    std::vector<uint64_t> reduce_mod(uint64_t m) const;

    IntPoly operator*(const IntPoly &other) const;
    IntPoly pow(unsigned k) const;
    bool operator==(const IntPoly &other) const = default;

    /// e.g. "x^3 - 3x - 2".
    std::string str() const;

   private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

}  // namespace pauliscope

#endif
