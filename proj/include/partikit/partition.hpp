#pragma once

// The restricted partition function p_a(n) — the number of ways to write n as
// a nonnegative integer combination of fixed positive weights a_1..a_r — and
// its structure: three independent evaluators (dynamic program, residue-box
// sum, quasi-polynomial), the D = lcm(a) constituent polynomials, and the
// polynomial part computed two ways.
//
// WeightSystem precomputes, per residue class c mod D, the multiset of values
// a·j over the index box J = ∏ {0..D/a_i - 1}, stored as (value, multiplicity)
// pairs. A residue class c can only hold values c, c+D, ..., c+(r-1)D, so each
// bucket has at most r entries and every downstream query is cheap. The
// multiset is built by convolving the per-coordinate geometric series
// 1 + z^{a_i} + ... + z^{D - a_i}, which walks the box once per coordinate
// instead of once per element.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "json.hpp"

#include "partikit/binomial.hpp"
#include "partikit/polynomial.hpp"
#include "partikit/rational.hpp"

namespace partikit {

struct BoxGuard {
    // Warn (do not fail) when |J| exceeds this threshold.
    BigInt threshold{100000000};
    // Destination for the warning; nullptr means std::cerr.
    std::ostream* sink = nullptr;
};

class WeightSystem {
  public:
    struct BucketEntry {
        std::int64_t value; // a·j, not reduced mod D
        BigInt count;       // multiplicity of this value over j ∈ J
    };

    static WeightSystem create(std::vector<std::int64_t> a, const BoxGuard& guard = {});

    const std::vector<std::int64_t>& weights() const { return a_; }
    std::size_t r() const { return a_.size(); }
    std::int64_t period() const { return d_; } // D = lcm(a)
    const std::vector<std::int64_t>& box_dims() const { return dims_; }
    const BigInt& box_size() const { return box_size_; } // |J| = ∏ D/a_i

    // Entries for residue class c ∈ [0, D), ascending by value; each stored
    // value v satisfies v ≡ c (mod D).
    const std::vector<BucketEntry>& bucket(std::int64_t c) const;

    // {"a": [...], "D": int, "boxSize": "decimal string"}
    nlohmann::json to_json() const;

  private:
    WeightSystem() = default;

    std::vector<std::int64_t> a_;
    std::int64_t d_ = 1;
    std::vector<std::int64_t> dims_;
    BigInt box_size_;
    std::vector<std::vector<BucketEntry>> buckets_;
};

// The designated oracle: coefficient extraction from ∏ 1/(1 - z^{a_k}) by the
// standard coin-counting dynamic program. Shares nothing with the box-sum
// path beyond big integers. Entry [n] counts solutions of Σ a_i x_i = n.
std::vector<BigInt> dp_table(const std::vector<std::int64_t>& a, std::int64_t nmax);

// p_a(n) via dp_table; 0 for n < 0, 1 for n = 0.
BigInt dp_count(const std::vector<std::int64_t>& a, std::int64_t n);

// p_a(n) as the box sum over bucket (n mod D): Σ C((n-v)/D + r-1, r-1).
// Agrees with dp_count for all n ≥ 0 and vanishes for n < 0.
BigInt box_count(const WeightSystem& ws, std::int64_t n);

// Σ_{j∈J} z^{a·j}, assembled from the residue buckets. Satisfies
// numerator_poly(ws) · ∏ (1 - z^{a_k}) = (1 - z^D)^r exactly.
ZPoly numerator_poly(const WeightSystem& ws);

// The constituent polynomial q_k: agrees with p_a(n) on n ≡ k (mod D).
// Polynomial in the global variable n, degree ≤ r-1; empty bucket gives 0.
RatPoly constituent(const WeightSystem& ws, std::int64_t k);

// The polynomial part: (1/D) Σ over ALL j ∈ J (no congruence filter) of the
// shifted binomial polynomial. Degree exactly r-1, leading coefficient
// 1/((r-1)! ∏ a_i).
RatPoly polynomial_part(const WeightSystem& ws);

// The same value as the average (1/D) Σ_k q_k(n) of all D constituents;
// must match polynomial_part coefficient for coefficient.
RatPoly polynomial_part_via_average(const WeightSystem& ws);

// Closed form for a coprime pair: n/(ab) + 1/(2a) + 1/(2b).
RatPoly poly_part_closed_r2(std::int64_t a, std::int64_t b);

struct QuasiPolynomial {
    std::int64_t D = 1;
    std::vector<RatPoly> constituents; // q_0 .. q_{D-1}

    // {"D": int, "constituents": [[coeff strings ascending], ...]}
    nlohmann::json to_json() const;
};

QuasiPolynomial quasi_build(const WeightSystem& ws);

// Evaluates constituent (n mod D) at n. Requires n ≥ 0; the exact evaluation
// must land on an integer, anything else reports an internal inconsistency.
BigInt quasi_eval(const QuasiPolynomial& qp, std::int64_t n);

} // namespace partikit
