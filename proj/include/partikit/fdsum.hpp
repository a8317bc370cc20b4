#pragma once

// Fourier-Dedekind sums
//
//   s_n(a_1, ..., a_m; b) = (1/b) Σ_{j=1}^{b-1} ξ^{jn} / ∏_i (1 - ξ^{j a_i}),
//
// with ξ a primitive b-th root of unity. Every sum is evaluated exactly in
// the cyclotomic field Q(ξ) and certified rational before it is returned.
// These constants tie the quasi-polynomial together: for pairwise coprime
// weights, constituent k minus the polynomial part equals
// Σ_i s_{-k}(a with a_i removed; a_i), and averaging s_{-k} over a full
// period of residues gives exactly zero.

#include <cstdint>
#include <vector>

#include "json.hpp"

#include "partikit/partition.hpp"
#include "partikit/rational.hpp"

namespace partikit {

struct FDSumQuery {
    std::vector<std::int64_t> args; // a_1..a_m, may be empty
    std::int64_t b = 1;
    std::int64_t n = 0; // any sign; only n mod b matters
};

// Throws precondition_error unless b >= 1, every argument is >= 1, and every
// argument is coprime to b.
void validate_fd_args(const std::vector<std::int64_t>& args, std::int64_t b);

// s_n(args; b); the empty sum for b = 1 gives 0.
Rat fd_sum(const FDSumQuery& q);

// All b phase values [s_0, s_1, ..., s_{b-1}]; one field inversion per j,
// shared across the phases.
std::vector<Rat> fd_sum_phases(const std::vector<std::int64_t>& args, std::int64_t b);

// (1/D) Σ_{k=0}^{D-1} s_{-k}(args; b), which must vanish whenever b divides D.
Rat fd_residue_average(const std::vector<std::int64_t>& args, std::int64_t b, std::int64_t D);

// {"n": int, "args": [...], "b": int, "value": "p/q"}
nlohmann::json fd_sum_json(const FDSumQuery& q);

// Throws precondition_error naming an offending pair unless the weights are
// pairwise coprime.
void require_pairwise_coprime(const std::vector<std::int64_t>& a);

struct DecompositionCheck {
    std::int64_t k = 0;
    Rat lhs; // constituent k minus the polynomial part (a constant)
    Rat rhs; // Σ_i s_{-k}(weights with a_i removed; a_i)
    bool equal = false;
};

// Both sides of the decomposition identity for one residue class. Requires
// pairwise coprime weights; a non-constant difference between the constituent
// and the polynomial part is an internal inconsistency.
DecompositionCheck decomposition_check(const WeightSystem& ws, std::int64_t k);

// The identity across all residue classes k = 0..D-1, with the polynomial
// part and the per-weight phase tables computed once.
std::vector<DecompositionCheck> decomposition_check_all(const WeightSystem& ws);

} // namespace partikit
