#pragma once

// Exact arithmetic in the cyclotomic field Q(ξ_b) = Q[z]/Φ_b(z).
//
// Quotienting by the cyclotomic polynomial Φ_b — not by z^b − 1 — is what
// makes this a field: the factors 1 − ξ_b^e we need to invert are zero
// divisors mod z^b − 1 but honest nonzero elements here. Elements are kept
// fully reduced, so a value is rational exactly when every coordinate past
// the constant one is zero; rational_part() checks that instead of assuming it.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "partikit/polynomial.hpp"
#include "partikit/rational.hpp"

namespace partikit {

// The b-th cyclotomic polynomial, monic of degree φ(b), computed by iterated
// exact division of z^b - 1 by Φ_d over the proper divisors d of b.
// Memoized; safe for concurrent callers.
const ZPoly& cyclotomic_poly(std::int64_t b);

class CycField {
  public:
    // Memoized per b; the returned field is immutable and shareable.
    static std::shared_ptr<const CycField> get(std::int64_t b);

    std::int64_t order() const { return b_; }
    const ZPoly& modulus() const { return phi_; }
    const RatPoly& modulus_rat() const { return phi_rat_; }
    std::size_t degree() const { return deg_; } // φ(b)

  private:
    explicit CycField(std::int64_t b);

    std::int64_t b_;
    ZPoly phi_;
    RatPoly phi_rat_;
    std::size_t deg_;
};

// An element of Q(ξ_b): a rational-coefficient polynomial in ξ_b reduced
// mod Φ_b, stored as exactly φ(b) coordinates.
class CycNum {
  public:
    static CycNum zero(std::shared_ptr<const CycField> f);
    static CycNum one(std::shared_ptr<const CycField> f);
    static CycNum from_rat(std::shared_ptr<const CycField> f, const Rat& r);
    // ξ_b^e with e reduced into [0, b); negative e allowed.
    static CycNum root_power(std::shared_ptr<const CycField> f, std::int64_t e);

    const CycField& field() const { return *f_; }
    const std::vector<Rat>& coords() const { return c_; }
    bool is_zero() const;

    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);

    CycNum scaled(const Rat& s) const;

    // Multiplicative inverse via the extended Euclidean algorithm on
    // (this-as-polynomial, Φ_b) over Q. Throws precondition_error on zero.
    CycNum inv() const;

    // Certifies the value is rational (all nonconstant coordinates zero)
    // and returns it; throws internal_error otherwise.
    Rat rational_part() const;

    bool operator==(const CycNum& o) const;

    // Debug form: coordinate strings, ascending powers of ξ_b.
    std::vector<std::string> coord_strings() const;

  private:
    CycNum(std::shared_ptr<const CycField> f, std::vector<Rat> reduced);

    static std::vector<Rat> reduce(const CycField& f, const RatPoly& p);
    RatPoly as_poly() const;

    std::shared_ptr<const CycField> f_;
    std::vector<Rat> c_; // size φ(b), fully reduced
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

} // namespace partikit
