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


#include "pauliscope/spectral.h"

#include <algorithm>
#include <stdexcept>

#include "pauliscope/parallel.h"

using namespace pauliscope;

namespace {

// Arithmetic policies for the shared Hessenberg routine.
struct ModField {
    using T = uint64_t;
    uint64_t p;
    T zero() const {
        return 0;
    }
    T one() const {
        return 1;
    }
    bool is_zero(T a) const {
        return a == 0;
    }
    T add(T a, T b) const {
        T s = a + b;
        return s >= p ? s - p : s;
    }
    T sub(T a, T b) const {
        return a >= b ? a - b : a + p - b;
    }
    T mul(T a, T b) const {
        return static_cast<T>(static_cast<unsigned __int128>(a) * b % p);
    }
    T inv(T a) const {
        // Fermat; p is prime.
        T result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) {
                result = mul(result, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }
};

struct RationalField {
    using T = mpq_class;
    T zero() const {
        return 0;
    }
    T one() const {
        return 1;
    }
    bool is_zero(const T &a) const {
        return sgn(a) == 0;
    }
    T add(const T &a, const T &b) const {
        return a + b;
    }
    T sub(const T &a, const T &b) const {
        return a - b;
    }
    T mul(const T &a, const T &b) const {
        return a * b;
    }
    T inv(const T &a) const {
        return 1 / a;
    }
};

/// Coefficients (low to high, length n+1) of det(xI - H).
template <typename F>
std::vector<typename F::T> hessenberg_char_poly(const F &f, std::vector<std::vector<typename F::T>> h) {
    using T = typename F::T;
    size_t n = h.size();
    for (size_t j = 0; j + 2 < n; j++) {
        size_t piv = j + 1;
        while (piv < n && f.is_zero(h[piv][j])) {
            piv++;
        }
        if (piv == n) {
            continue;
        }
        if (piv != j + 1) {
            std::swap(h[piv], h[j + 1]);
            for (size_t r = 0; r < n; r++) {
                std::swap(h[r][piv], h[r][j + 1]);
            }
        }
        T inv = f.inv(h[j + 1][j]);
        for (size_t i = j + 2; i < n; i++) {
            if (f.is_zero(h[i][j])) {
                continue;
            }
            T u = f.mul(h[i][j], inv);
            for (size_t k = j; k < n; k++) {
                h[i][k] = f.sub(h[i][k], f.mul(u, h[j + 1][k]));
            }
            for (size_t r = 0; r < n; r++) {
                h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][i]));
            }
        }
    }

    // p_m = (x - h_mm) p_{m-1} - sum_i h_{i,m} (prod_{k=i+1..m} h_{k,k-1}) p_{i-1}
    std::vector<std::vector<T>> p(n + 1);
    p[0] = {f.one()};
    for (size_t m = 1; m <= n; m++) {
        std::vector<T> cur(m + 1, f.zero());
        for (size_t k = 0; k < m; k++) {
            cur[k + 1] = f.add(cur[k + 1], p[m - 1][k]);
            cur[k] = f.sub(cur[k], f.mul(h[m - 1][m - 1], p[m - 1][k]));
        }
        T t = f.one();
        for (size_t i = m - 1; i >= 1; i--) {
            t = f.mul(t, h[i][i - 1]);
            if (f.is_zero(t)) {
                break;
            }
            T scale = f.mul(h[i - 1][m - 1], t);
            if (!f.is_zero(scale)) {
                for (size_t k = 0; k < p[i - 1].size(); k++) {
                    cur[k] = f.sub(cur[k], f.mul(scale, p[i - 1][k]));
                }
            }
        }
        p[m] = std::move(cur);
    }
    return p[n];
}

/// Bound on |coefficient| of det(xI - A) for a 0/1 adjacency matrix: every
/// coefficient is a sum of principal minors, each bounded by Hadamard, so
/// |c_k| <= prod_i (1 + |row_i|) <= prod_i (1 + ceil(sqrt(deg_i))).
mpz_class coefficient_bound(const Graph &g) {
    mpz_class bound = 1;
    for (size_t v = 0; v < g.size(); v++) {
        mpz_class root;
        mpz_class deg(static_cast<unsigned long>(g.degree(v)));
        mpz_sqrt(root.get_mpz_t(), deg.get_mpz_t());
        if (root * root < deg) {
            root += 1;
        }
        bound *= 1 + root;
    }
    return bound;
}

std::vector<uint64_t> primes_above_2_61(size_t count) {
    std::vector<uint64_t> out;
    mpz_class p = mpz_class(1) << 61;
    while (out.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        out.push_back(mpz_get_ui(p.get_mpz_t()));
    }
    return out;
}

mpz_class isqrt(const mpz_class &x) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

bool is_square(long x) {
    if (x < 0) {
        return false;
    }
    mpz_class r = isqrt(mpz_class(x));
    return r * r == x;
}

/// Remainder of poly (coefficients mod p) by x^2 + bx + c, all mod p.
bool divisible_mod_p(const std::vector<uint64_t> &poly, long b, long c, const ModField &f) {
    auto lift = [&](long v) {
        long m = v % static_cast<long>(f.p);
        return static_cast<uint64_t>(m < 0 ? m + static_cast<long>(f.p) : m);
    };
    uint64_t bb = lift(b), cc = lift(c);
    std::vector<uint64_t> rem = poly;
    for (size_t i = rem.size(); i-- > 2;) {
        uint64_t q = rem[i];
        if (q == 0) {
            continue;
        }
        rem[i] = 0;
        rem[i - 1] = f.sub(rem[i - 1], f.mul(q, bb));
        rem[i - 2] = f.sub(rem[i - 2], f.mul(q, cc));
    }
    return rem.size() < 2 ? rem.empty() || rem[0] == 0 : rem[0] == 0 && rem[1] == 0;
}

/// Fraction-free (Bareiss) rank of an integer matrix.
size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    size_t rows = m.size();
    if (rows == 0) {
        return 0;
    }
    size_t cols = m[0].size();
    size_t rank = 0;
    mpz_class prev = 1;
    for (size_t c = 0; c < cols && rank < rows; c++) {
        size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) {
            piv++;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(m[piv], m[rank]);
        for (size_t i = rank + 1; i < rows; i++) {
            for (size_t j = c + 1; j < cols; j++) {
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        rank++;
    }
    return rank;
}

long max_degree(const Graph &g) {
    long d = 0;
    for (size_t v = 0; v < g.size(); v++) {
        d = std::max(d, static_cast<long>(g.degree(v)));
    }
    return d;
}

}  // namespace

IntPoly pauliscope::char_poly(const Graph &g, size_t threads) {
    size_t n = g.size();
    mpz_class need = 2 * coefficient_bound(g);
    // Each prime exceeds 2^61.
    size_t count = mpz_sizeinbase(need.get_mpz_t(), 2) / 61 + 1;
    std::vector<uint64_t> primes = primes_above_2_61(count);

    std::vector<std::vector<uint64_t>> residues(count);
    parallel_for(count, threads, [&](size_t k) {
        ModField f{primes[k]};
        std::vector<std::vector<uint64_t>> a(n, std::vector<uint64_t>(n, 0));
        for (size_t i = 0; i < n; i++) {
            g.neighbors(i).for_each([&](size_t j) { a[i][j] = 1; });
        }
        residues[k] = hessenberg_char_poly(f, std::move(a));
    });

    // Garner-style incremental CRT, in prime order.
    std::vector<mpz_class> coeffs(n + 1, 0);
    mpz_class modulus = 1;
    for (size_t k = 0; k < count; k++) {
        mpz_class p(static_cast<unsigned long>(primes[k]));
        mpz_class inv;
        mpz_class mod_p = modulus % p;
        mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), p.get_mpz_t());
        for (size_t i = 0; i <= n; i++) {
            mpz_class diff = mpz_class(static_cast<unsigned long>(residues[k][i])) - coeffs[i];
            mpz_class t = diff * inv % p;
            if (t < 0) {
                t += p;
            }
            coeffs[i] += modulus * t;
        }
        modulus *= p;
    }
    mpz_class half = modulus / 2;
    for (auto &c : coeffs) {
        if (c > half) {
            c -= modulus;
        }
    }
    return IntPoly(std::move(coeffs));
}

IntPoly pauliscope::char_poly_rational(const Graph &g) {
    size_t n = g.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; i++) {
        g.neighbors(i).for_each([&](size_t j) { a[i][j] = 1; });
    }
    auto q = hessenberg_char_poly(RationalField{}, std::move(a));
    std::vector<mpz_class> coeffs;
    for (auto &c : q) {
        c.canonicalize();
        if (c.get_den() != 1) {
            throw std::logic_error("non-integral characteristic polynomial coefficient");
        }
        coeffs.push_back(c.get_num());
    }
    return IntPoly(std::move(coeffs));
}

IntPoly QuadraticPair::factor() const {
    // Sum 2p/r and product (p^2 - q)/r^2 are integers for a reduced pair.
    long sum = 2 * p / r;
    long prod = (p * p - q) / (r * r);
    return IntPoly::quadratic(-sum, prod);
}

std::string QuadraticPair::str() const {
    long k = 1, m = q;
    for (long f = 2; f * f <= m; f++) {
        while (m % (f * f) == 0) {
            m /= f * f;
            k *= f;
        }
    }
    std::string surd = (k == 1 ? "" : std::to_string(k)) + "√" + std::to_string(m);
    std::string body = (p == 0 ? "" : std::to_string(p)) + "±" + surd;
    return r == 1 ? body : "(" + body + ")/" + std::to_string(r);
}

Spectrum Spectrum::from_integers(std::vector<std::pair<long, size_t>> values) {
    Spectrum s;
    std::sort(values.begin(), values.end());
    for (auto [v, m] : values) {
        if (!s.integer.empty() && s.integer.back().value == v) {
            s.integer.back().mult += m;
        } else {
            s.integer.push_back({v, m});
        }
        s.dimension += m;
    }
    return s;
}

Spectrum &Spectrum::add_quadratic(long p, long q, long r, size_t mult) {
    quadratic.push_back({p, q, r, mult});
    std::sort(quadratic.begin(), quadratic.end(), [](const QuadraticPair &a, const QuadraticPair &b) {
        // Compare p/r, then q.
        long lhs = a.p * b.r, rhs = b.p * a.r;
        return lhs != rhs ? lhs < rhs : a.q < b.q;
    });
    dimension += 2 * mult;
    return *this;
}

size_t Spectrum::distinct_count() const {
    return integer.size() + 2 * quadratic.size() + static_cast<size_t>(std::max(0L, residual.degree()));
}

std::optional<size_t> Spectrum::multiplicity(long value) const {
    for (const auto &e : integer) {
        if (e.value == value) {
            return e.mult;
        }
    }
    return std::nullopt;
}

long Spectrum::max_integer() const {
    if (integer.empty()) {
        throw std::logic_error("spectrum has no integer eigenvalues");
    }
    return integer.back().value;
}

mpq_class Spectrum::power_sum_1() const {
    mpq_class s = 0;
    for (const auto &e : integer) {
        s += mpq_class(e.value) * static_cast<unsigned long>(e.mult);
    }
    for (const auto &qp : quadratic) {
        mpq_class pair_sum(2 * qp.p, qp.r);
        pair_sum.canonicalize();
        s += pair_sum * static_cast<unsigned long>(qp.mult);
    }
    // Roots of the monic residual sum to minus its second-highest coefficient.
    long d = residual.degree();
    if (d >= 1) {
        s -= residual.coeff(d - 1);
    }
    return s;
}

mpq_class Spectrum::power_sum_2() const {
    mpq_class s = 0;
    for (const auto &e : integer) {
        s += mpq_class(e.value * e.value) * static_cast<unsigned long>(e.mult);
    }
    for (const auto &qp : quadratic) {
        mpq_class pair_sum(2 * (qp.p * qp.p + qp.q), qp.r * qp.r);
        pair_sum.canonicalize();
        s += pair_sum * static_cast<unsigned long>(qp.mult);
    }
    long d = residual.degree();
    if (d >= 1) {
        // Newton: p2 = e1^2 - 2 e2 with e1 = -c_{d-1}, e2 = c_{d-2}.
        mpz_class c1 = residual.coeff(d - 1);
        mpz_class c2 = d >= 2 ? residual.coeff(d - 2) : mpz_class(0);
        s += c1 * c1 - 2 * c2;
    }
    return s;
}

nlohmann::json Spectrum::to_json() const {
    nlohmann::json ints = nlohmann::json::array();
    for (const auto &e : integer) {
        ints.push_back({{"value", e.value}, {"mult", e.mult}});
    }
    nlohmann::json quads = nlohmann::json::array();
    for (const auto &qp : quadratic) {
        quads.push_back({{"p", qp.p}, {"q", qp.q}, {"r", qp.r}, {"mult", qp.mult}});
    }
    nlohmann::json out{{"integer", ints}, {"quadratic", quads}};
    if (!fully_factored()) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto &c : residual.coefficients()) {
            coeffs.push_back(c.get_str());
        }
        out["residual"] = coeffs;
    }
    return out;
}

std::string Spectrum::str() const {
    std::string out = "{";
    auto sep = [&] {
        if (out.size() > 1) {
            out += ", ";
        }
    };
    for (const auto &e : integer) {
        sep();
        out += std::to_string(e.value);
        if (e.mult != 1) {
            out += "^" + std::to_string(e.mult);
        }
    }
    for (const auto &qp : quadratic) {
        sep();
        out += qp.str();
        if (qp.mult != 1) {
            out += "^" + std::to_string(qp.mult);
        }
    }
    if (!fully_factored()) {
        sep();
        out += "roots(" + residual.str() + ")";
    }
    return out + "}";
}

bool Spectrum::operator==(const Spectrum &other) const {
    return dimension == other.dimension && integer == other.integer && quadratic == other.quadratic &&
           residual == other.residual;
}

Spectrum pauliscope::factor_spectrum(const IntPoly &poly, long bound) {
    if (!poly.is_monic()) {
        throw std::invalid_argument("characteristic polynomial must be monic");
    }
    Spectrum s;
    s.dimension = static_cast<size_t>(poly.degree());
    IntPoly rest = poly;
    for (long r = -bound; r <= bound && rest.degree() > 0; r++) {
        size_t mult = 0;
        IntPoly lin = IntPoly::linear(r);
        while (rest.degree() > 0 && rest.eval(mpz_class(r)) == 0) {
            rest = rest.divmod_monic(lin).first;
            mult++;
        }
        if (mult) {
            s.integer.push_back({r, mult});
        }
    }

    if (rest.degree() >= 2) {
        // Real roots in [-bound, bound] force |b| <= 2 bound and |c| <= bound^2.
        ModField f{primes_above_2_61(1)[0]};
        std::vector<uint64_t> rest_mod = rest.reduce_mod(f.p);
        for (long b = -2 * bound; b <= 2 * bound && rest.degree() >= 2; b++) {
            for (long c = -bound * bound; c <= bound * bound && rest.degree() >= 2; c++) {
                long disc = b * b - 4 * c;
                if (disc <= 0 || is_square(disc)) {
                    continue;
                }
                if (!divisible_mod_p(rest_mod, b, c, f)) {
                    continue;
                }
                IntPoly quad = IntPoly::quadratic(b, c);
                size_t mult = 0;
                while (rest.degree() >= 2) {
                    auto [q, r] = rest.divmod_monic(quad);
                    if (!r.is_zero()) {
                        break;
                    }
                    rest = q;
                    mult++;
                }
                if (mult) {
                    long p = -b, qq = disc, rr = 2;
                    if (p % 2 == 0 && qq % 4 == 0) {
                        p /= 2;
                        qq /= 4;
                        rr = 1;
                    }
                    s.add_quadratic(p, qq, rr, mult);
                    s.dimension -= 2 * mult;
                    rest_mod = rest.reduce_mod(f.p);
                }
            }
        }
    }
    s.residual = rest;
    return s;
}

Spectrum pauliscope::spectrum(const Graph &g, size_t threads) {
    return factor_spectrum(char_poly(g, threads), max_degree(g));
}

namespace {

std::vector<std::vector<mpz_class>> adjacency_mpz(const Graph &g) {
    size_t n = g.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; i++) {
        g.neighbors(i).for_each([&](size_t j) { a[i][j] = 1; });
    }
    return a;
}

}  // namespace

size_t pauliscope::nullity_rational(const Graph &g, long value) {
    auto m = adjacency_mpz(g);
    for (size_t i = 0; i < g.size(); i++) {
        m[i][i] -= value;
    }
    return g.size() - bareiss_rank(std::move(m));
}

size_t pauliscope::nullity_rational_quadratic(const Graph &g, long b, long c) {
    size_t n = g.size();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            long sq = static_cast<long>(g.neighbors(i).intersection_count(g.neighbors(j)));
            m[i][j] = sq + (g.adjacent(i, j) ? b : 0) + (i == j ? c : 0);
        }
    }
    return n - bareiss_rank(std::move(m));
}

bool SrgParams::feasible() const {
    return D * (D - lambda - 1) == (v - D - 1) * mu;
}

std::string SrgParams::str() const {
    return "srg(" + std::to_string(v) + "," + std::to_string(D) + "," + std::to_string(lambda) + "," + std::to_string(mu) + ")";
}

SrgCheck pauliscope::verify_srg(const Graph &g) {
    SrgCheck out;
    size_t n = g.size();
    if (n == 0) {
        return out;
    }
    long D = static_cast<long>(g.degree(0));
    for (size_t v = 0; v < n; v++) {
        if (static_cast<long>(g.degree(v)) != D) {
            return out;
        }
    }
    long lambda = -1, mu = -1;
    for (size_t i = 0; i < n && (lambda < 0 || mu < 0); i++) {
        for (size_t j = i + 1; j < n; j++) {
            long common = static_cast<long>(g.neighbors(i).intersection_count(g.neighbors(j)));
            if (g.adjacent(i, j) && lambda < 0) {
                lambda = common;
            } else if (!g.adjacent(i, j) && mu < 0) {
                mu = common;
            }
        }
    }
    lambda = std::max(lambda, 0L);
    mu = std::max(mu, 0L);

    // A^2 + (mu - lambda) A + (mu - D) I = mu J, entry by entry.
    out.verdict = SrgVerdict::StronglyRegular;
    for (size_t i = 0; i < n && out.verdict == SrgVerdict::StronglyRegular; i++) {
        for (size_t j = 0; j < n; j++) {
            long lhs = static_cast<long>(g.neighbors(i).intersection_count(g.neighbors(j)));
            lhs += (mu - lambda) * (g.adjacent(i, j) ? 1 : 0);
            lhs += (mu - D) * (i == j ? 1 : 0);
            if (lhs != mu) {
                out.verdict = SrgVerdict::NotStronglyRegular;
                break;
            }
        }
    }
    if (out.verdict == SrgVerdict::StronglyRegular) {
        out.params = SrgParams{static_cast<long>(n), D, lambda, mu};
    }
    return out;
}

SrgEigen pauliscope::srg_multiplicities(const SrgParams &p) {
    long disc = (p.lambda - p.mu) * (p.lambda - p.mu) + 4 * (p.D - p.mu);
    if (!is_square(disc) || disc == 0) {
        throw std::domain_error(p.str() + ": restricted eigenvalues are not distinct integers");
    }
    long root = isqrt(mpz_class(disc)).get_si();
    if ((p.lambda - p.mu + root) % 2 != 0) {
        throw std::domain_error(p.str() + ": restricted eigenvalues are not integers");
    }
    SrgEigen e;
    e.r = (p.lambda - p.mu + root) / 2;
    e.l = (p.lambda - p.mu - root) / 2;
    long num = 2 * p.D + (p.v - 1) * (p.lambda - p.mu);
    if (num % root != 0 || ((p.v - 1) - num / root) % 2 != 0) {
        throw std::domain_error(p.str() + ": multiplicities are not integers");
    }
    e.f = ((p.v - 1) - num / root) / 2;
    e.g = ((p.v - 1) + num / root) / 2;
    return e;
}

Spectrum pauliscope::srg_spectrum(const SrgParams &p) {
    SrgEigen e = srg_multiplicities(p);
    return Spectrum::from_integers({{p.D, 1}, {e.r, static_cast<size_t>(e.f)}, {e.l, static_cast<size_t>(e.g)}});
}

long PgParams::points() const {
    return (s + 1) * (s * t + alpha) / alpha;
}

long PgParams::lines() const {
    return (t + 1) * (s * t + alpha) / alpha;
}

SrgParams PgParams::srg() const {
    return {points(), s * (t + 1), s - 1 + t * (alpha - 1), alpha * (t + 1)};
}

bool PgParams::valid() const {
    if (s < 1 || t < 1 || alpha < 1 || alpha > std::min(s, t) + 1) {
        return false;
    }
    return (s + 1) * (s * t + alpha) % alpha == 0 && (t + 1) * (s * t + alpha) % alpha == 0;
}

std::string PgParams::str() const {
    return "pg(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(alpha) + ")";
}

PgParams pauliscope::pg_params_for_qudits(long q, long N) {
    if (N < 2) {
        throw std::invalid_argument("rank N must be at least 2");
    }
    long prime = 0;
    for (long f = 2; f <= q; f++) {
        if (q % f == 0) {
            prime = f;
            break;
        }
    }
    long rest = q;
    while (prime && rest % prime == 0) {
        rest /= prime;
    }
    if (q < 2 || rest != 1) {
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }
    long tq = 1;
    for (long i = 0; i < N - 1; i++) {
        tq *= q;
    }
    long alpha = (tq - 1) / (q - 1);
    return {q * alpha, tq, alpha};
}

bool pauliscope::is_pseudo_geometric(const Spectrum &spec, const PgParams &p) {
    try {
        return spec == srg_spectrum(p.srg());
    } catch (const std::domain_error &) {
        return false;
    }
}

bool pauliscope::is_pseudo_geometric(const Graph &g, const PgParams &p, size_t threads) {
    if (static_cast<long>(g.size()) != p.points()) {
        return false;
    }
    return is_pseudo_geometric(spectrum(g, threads), p);
}
