#include "partikit/binomial.hpp"

namespace partikit {

BigInt binom_count(const BigInt& m, unsigned long k) {
    if (mpz_cmp_ui(m.get_mpz_t(), k) < 0) {
        return 0; // counting convention, not the generalized binomial
    }
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), k);
    return r;
}

RatPoly binom_poly_shifted(const Rat& c, const BigInt& D, unsigned long k) {
    if (D < 1) {
        throw precondition_error("binom_poly_shifted requires D >= 1");
    }
    const Rat inv_d(BigInt(1), D);
    // (n - c)/D as a linear polynomial in n
    const RatPoly base({-c * inv_d, inv_d});
    RatPoly prod = RatPoly::constant(1);
    BigInt k_fact(1);
    for (unsigned long i = 1; i <= k; ++i) {
        prod = prod * (base + RatPoly::constant(Rat(BigInt(i))));
        k_fact *= i;
    }
    return prod.scaled(Rat(BigInt(1), k_fact));
}

BigInt lcm_vec(const std::vector<std::int64_t>& a) {
    if (a.empty()) {
        throw precondition_error("invalid weights: empty vector");
    }
    BigInt l(1);
    for (const auto w : a) {
        if (w <= 0) {
            throw precondition_error("invalid weights: entries must be positive, got " +
                                     std::to_string(w));
        }
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(w));
    }
    return l;
}

} // namespace partikit
