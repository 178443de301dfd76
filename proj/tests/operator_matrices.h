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


// Explicit matrix models of the one- and two-qudit operators, used as an
// independent oracle for the symbolic algebra. Entries live in Z[i] (qubits)
// or Z[omega] (qutrits), so every comparison is exact.

#ifndef PAULISCOPE_TESTS_OPERATOR_MATRICES_H
#define PAULISCOPE_TESTS_OPERATOR_MATRICES_H

#include <vector>

#include "pauliscope/qudit_operator.h"

namespace pauliscope::testing {

/// a + b*i with i^2 = -1.
struct Gauss {
    long a = 0, b = 0;
    static Gauss tau() {
        return {0, 1};
    }
    Gauss operator+(Gauss o) const {
        return {a + o.a, b + o.b};
    }
    Gauss operator*(Gauss o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a};
    }
    bool operator==(const Gauss &) const = default;
};

/// a + b*w with w^2 = -1 - w.
struct Eisen {
    long a = 0, b = 0;
    static Eisen tau() {
        return {0, 1};
    }
    Eisen operator+(Eisen o) const {
        return {a + o.a, b + o.b};
    }
    Eisen operator*(Eisen o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    bool operator==(const Eisen &) const = default;
};

template <typename T>
using Matrix = std::vector<std::vector<T>>;

template <typename T>
Matrix<T> mat_zero(size_t n) {
    return Matrix<T>(n, std::vector<T>(n));
}

template <typename T>
Matrix<T> mat_identity(size_t n) {
    auto m = mat_zero<T>(n);
    for (size_t i = 0; i < n; i++) {
        m[i][i] = T{1, 0};
    }
    return m;
}

template <typename T>
Matrix<T> mat_mul(const Matrix<T> &x, const Matrix<T> &y) {
    size_t n = x.size();
    auto out = mat_zero<T>(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            for (size_t j = 0; j < n; j++) {
                out[i][j] = out[i][j] + x[i][k] * y[k][j];
            }
        }
    }
    return out;
}

template <typename T>
Matrix<T> mat_scale(const Matrix<T> &x, T s) {
    auto out = x;
    for (auto &row : out) {
        for (auto &e : row) {
            e = e * s;
        }
    }
    return out;
}

template <typename T>
Matrix<T> kron(const Matrix<T> &x, const Matrix<T> &y) {
    size_t n = x.size(), m = y.size();
    auto out = mat_zero<T>(n * m);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            for (size_t k = 0; k < m; k++) {
                for (size_t l = 0; l < m; l++) {
                    out[i * m + k][j * m + l] = x[i][j] * y[k][l];
                }
            }
        }
    }
    return out;
}

/// The named single-qudit operator with exponent pair (x, z), written out
/// from its textbook definition.
template <typename T>
Matrix<T> named_single(unsigned d, FactorExponent e) {
    auto shift = mat_zero<T>(d);
    auto clock = mat_zero<T>(d);
    T w{1, 0};
    for (size_t j = 0; j < d; j++) {
        shift[(j + 1) % d][j] = T{1, 0};
        clock[j][j] = w;
        w = w * (d == 2 ? T{-1, 0} : T::tau());
    }
    auto pow = [&](const Matrix<T> &m, unsigned k) {
        auto out = mat_identity<T>(d);
        for (unsigned i = 0; i < k; i++) {
            out = mat_mul(out, m);
        }
        return out;
    };
    if (d == 2) {
        if (e.x == 1 && e.z == 1) {
            return mat_scale(mat_mul(shift, clock), T::tau());  // Y = i X Z
        }
        return mat_mul(pow(shift, e.x), pow(clock, e.z));
    }
    // Y = XZ, V = XZ^2, and the squares are literal squares.
    if (e.x == 1 || e.z == 0 || e.x == 0) {
        return mat_mul(pow(shift, e.x), pow(clock, e.z));
    }
    // x == 2: Y^2 = (XZ)^2 for z == 2, V^2 = (XZ^2)^2 for z == 1.
    auto base = mat_mul(shift, pow(clock, e.z == 2 ? 1 : 2));
    return mat_mul(base, base);
}

template <typename T>
Matrix<T> to_matrix(const QuditOperator &op) {
    Matrix<T> out = mat_identity<T>(1);
    for (const auto &f : op.factors()) {
        out = kron(out, named_single<T>(op.dimension(), f));
    }
    T phase{1, 0};
    for (unsigned k = 0; k < op.phase(); k++) {
        phase = phase * T::tau();
    }
    return mat_scale(out, phase);
}

}  // namespace pauliscope::testing

#endif
