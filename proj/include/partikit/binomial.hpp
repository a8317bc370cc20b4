#pragma once

// The two binomial-coefficient conventions used side by side here, kept as
// separate operations on purpose:
//   binom_count        — counting convention, C(m,k) = 0 whenever m < k
//                        (in particular for all m < 0);
//   binom_poly_shifted — the polynomial (falling-factorial) extension of
//                        C((n-c)/D + k, k) as a polynomial in n.
// The counting form feeds per-residue evaluation; the polynomial form feeds
// constituent and polynomial-part construction. They disagree off the
// counting range (e.g. at (n-c)/D = -k-1), so conflating them corrupts results.

#include <cstdint>
#include <vector>

#include "partikit/polynomial.hpp"
#include "partikit/rational.hpp"

namespace partikit {

// C(m, k) under the counting convention: 0 for m < k, else m!/(k!(m-k)!).
BigInt binom_count(const BigInt& m, unsigned long k);

// The degree-k polynomial in n equal to prod_{i=1..k} ((n-c)/D + i) / k!.
// Leading coefficient is 1/(D^k · k!). Requires D >= 1.
RatPoly binom_poly_shifted(const Rat& c, const BigInt& D, unsigned long k);

// lcm of a nonempty vector of positive integers.
BigInt lcm_vec(const std::vector<std::int64_t>& a);

} // namespace partikit
