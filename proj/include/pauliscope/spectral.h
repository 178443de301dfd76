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


#ifndef PAULISCOPE_SPECTRAL_H
#define PAULISCOPE_SPECTRAL_H

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pauliscope/graph.h"
#include "pauliscope/polynomial.h"

namespace pauliscope {

/// det(xI - A) by Hessenberg reduction modulo a run of 62-bit primes,
/// recombined by CRT once the primes' product exceeds twice a proven
/// coefficient bound. Primes are reduced on `threads` workers (0 = default).
IntPoly char_poly(const Graph &g, size_t threads = 0);
/// The same polynomial by Hessenberg reduction over the rationals. Slower;
/// kept as an independent path for cross-checks.
IntPoly char_poly_rational(const Graph &g);

struct IntegerEigenvalue {
    long value = 0;
    size_t mult = 0;
    bool operator==(const IntegerEigenvalue &) const = default;
};

/// The conjugate pair (p + sqrt(q)) / r and (p - sqrt(q)) / r, each of
/// multiplicity `mult`. q > 0 is not a perfect square, r > 0, and the triple
/// is reduced so that 2 does not divide all of p, r and q / 4 simultaneously.
struct QuadraticPair {
    long p = 0;
    long q = 0;
    long r = 1;
    size_t mult = 0;
    bool operator==(const QuadraticPair &) const = default;
    /// The monic factor x^2 - (2p/r) x + (p^2 - q)/r^2 (r is 1 or 2 here).
    IntPoly factor() const;
    /// "6±3√6" style rendering with the square part of q pulled out.
    std::string str() const;
};

/// Exact eigenvalue multiset of a symmetric integer matrix.
struct Spectrum {
    size_t dimension = 0;
    /// Ascending by value.
    std::vector<IntegerEigenvalue> integer;
    /// Ascending by (p/r, q).
    std::vector<QuadraticPair> quadratic;
    /// Unfactored remainder, monic; the constant 1 when everything factored.
    IntPoly residual = IntPoly::constant(1);

    static Spectrum from_integers(std::vector<std::pair<long, size_t>> values);
    Spectrum &add_quadratic(long p, long q, long r, size_t mult);

    bool fully_factored() const {
        return residual.degree() == 0;
    }
    size_t distinct_count() const;
    std::optional<size_t> multiplicity(long value) const;
    long max_integer() const;

    /// Sum of all eigenvalues with multiplicity (the trace).
    mpq_class power_sum_1() const;
    /// Sum of squares with multiplicity (the trace of A^2).
    mpq_class power_sum_2() const;

    /// {"integer": [{"value", "mult"}], "quadratic": [{"p", "q", "r", "mult"}]}
    /// plus "residual" when something is left unfactored.
    nlohmann::json to_json() const;
    /// "{-3^5, 1^9, 6}"; quadratic pairs render as "6±3√6".
    std::string str() const;
    bool operator==(const Spectrum &other) const;
};

/// Splits a monic integer polynomial into integer roots in [-bound, bound],
/// irreducible real quadratics with roots in that range, and a residual.
Spectrum factor_spectrum(const IntPoly &char_poly, long bound);
/// char_poly + factor_spectrum with bound = maximum degree.
Spectrum spectrum(const Graph &g, size_t threads = 0);

/// n - rank(M) over the rationals, where M = A^2 + b A + c I (quad = true) or
/// A - value I. An eigenvalue oracle independent of the characteristic
/// polynomial: for an integer eigenvalue it returns the multiplicity, for an
/// irreducible quadratic factor twice the pair multiplicity.
size_t nullity_rational(const Graph &g, long value);
size_t nullity_rational_quadratic(const Graph &g, long b, long c);

struct SrgParams {
    long v = 0, D = 0, lambda = 0, mu = 0;
    bool operator==(const SrgParams &) const = default;
    /// D(D - lambda - 1) = (v - D - 1) mu.
    bool feasible() const;
    std::string str() const;
};

enum class SrgVerdict { StronglyRegular, NotStronglyRegular, NotRegular };

struct SrgCheck {
    SrgVerdict verdict = SrgVerdict::NotRegular;
    /// Set only for StronglyRegular.
    std::optional<SrgParams> params;
};

/// Reads lambda and mu off one adjacent and one non-adjacent pair, then checks
/// A^2 + (mu - lambda) A + (mu - D) I = mu J entry by entry.
SrgCheck verify_srg(const Graph &g);

struct SrgEigen {
    long r = 0, l = 0;
    long f = 0, g = 0;
    bool operator==(const SrgEigen &) const = default;
};

/// Restricted eigenvalues r > 0 > l (r + l = lambda - mu, r l = mu - D) and
/// their multiplicities f, g. Throws std::domain_error when they are not
/// integers (the conference-graph case).
SrgEigen srg_multiplicities(const SrgParams &p);
/// Spectrum {D^1, r^f, l^g} of a connected srg.
Spectrum srg_spectrum(const SrgParams &p);

struct PgParams {
    long s = 0, t = 0, alpha = 0;
    bool operator==(const PgParams &) const = default;
    /// (s+1)(st+alpha)/alpha.
    long points() const;
    /// (t+1)(st+alpha)/alpha.
    long lines() const;
    /// srg(v, s(t+1), s-1+t(alpha-1), alpha(t+1)) of the collinearity graph.
    SrgParams srg() const;
    bool valid() const;
    std::string str() const;
};

/// s = q(q^(N-1)-1)/(q-1), t = q^(N-1), alpha = (q^(N-1)-1)/(q-1).
/// Throws std::invalid_argument unless q is a prime power and N >= 2.
PgParams pg_params_for_qudits(long q, long N);
/// True iff the spectrum equals that of the partial geometry's point graph.
bool is_pseudo_geometric(const Spectrum &spec, const PgParams &p);
bool is_pseudo_geometric(const Graph &g, const PgParams &p, size_t threads = 0);

}  // namespace pauliscope

#endif
