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


#include "pauliscope/polynomial.h"

#include <stdexcept>

using namespace pauliscope;

IntPoly::IntPoly(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPoly IntPoly::constant(long c) {
    return IntPoly({mpz_class(c)});
}

IntPoly IntPoly::linear(long root) {
    return IntPoly({mpz_class(-root), mpz_class(1)});
}

IntPoly IntPoly::quadratic(long b, long c) {
    return IntPoly({mpz_class(c), mpz_class(b), mpz_class(1)});
}

mpz_class IntPoly::coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

bool IntPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

mpz_class IntPoly::eval(const mpz_class &x) const {
    mpz_class acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly &divisor) const {
    if (!divisor.is_monic()) {
        throw std::invalid_argument("divisor must be monic");
    }
    long dd = divisor.degree();
    if (degree() < dd) {
        return {IntPoly(), *this};
    }
    std::vector<mpz_class> rem = coeffs_;
    std::vector<mpz_class> quot(coeffs_.size() - dd);
    for (long i = degree(); i >= dd; i--) {
        mpz_class q = rem[i];
        quot[i - dd] = q;
        if (q == 0) {
            continue;
        }
        for (long j = 0; j <= dd; j++) {
            rem[i - dd + j] -= q * divisor.coeffs_[j];
        }
    }
    rem.resize(dd);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::vector<uint64_t> IntPoly::reduce_mod(uint64_t m) const {
    std::vector<uint64_t> out;
    for (const auto &c : coeffs_) {
        out.push_back(mpz_fdiv_ui(c.get_mpz_t(), m));
    }
    return out;
}

IntPoly IntPoly::operator*(const IntPoly &other) const {
    if (is_zero() || other.is_zero()) {
        return IntPoly();
    }
    std::vector<mpz_class> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); i++) {
        for (size_t j = 0; j < other.coeffs_.size(); j++) {
            out[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned k) const {
    IntPoly out = constant(1);
    for (unsigned i = 0; i < k; i++) {
        out = out * *this;
    }
    return out;
}

std::string IntPoly::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (long i = degree(); i >= 0; i--) {
        const mpz_class &c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        mpz_class mag = abs(c);
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) {
            out += mag.get_str();
        }
        if (i >= 1) {
            out += "x";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}
