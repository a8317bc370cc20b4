#pragma once

// Dense univariate polynomials: RatPoly over exact rationals, ZPoly over
// big integers. Coefficients are stored ascending by degree with trailing
// zeros trimmed; an empty vector is the zero polynomial.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "partikit/rational.hpp"

namespace partikit {

class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RatPoly constant(const Rat& c) { return RatPoly({c}); }
    static RatPoly monomial(const Rat& coeff, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(); }
    Rat leading() const { return c_.empty() ? Rat() : c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    // Exact Horner evaluation.
    Rat eval(const Rat& x) const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);

    RatPoly scaled(const Rat& s) const;

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    // Human form, ascending terms, e.g. "5/12 + 1/6·n"; zero prints "0".
    std::string str(const std::string& var = "n") const;
    // JSON-facing form: coefficient strings ascending, e.g. ["5/12","1/6"].
    std::vector<std::string> coeff_strings() const;

  private:
    void trim();

    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

struct RatPolyDivMod {
    RatPoly quot;
    RatPoly rem;
};

// Euclidean division: a = quot*b + rem with deg(rem) < deg(b).
RatPolyDivMod divmod(const RatPoly& a, const RatPoly& b);

struct RatPolyXgcd {
    RatPoly g; // gcd up to a nonzero rational factor
    RatPoly u;
    RatPoly v; // u*a + v*b = g
};

RatPolyXgcd xgcd(const RatPoly& a, const RatPoly& b);

class ZPoly {
  public:
    ZPoly() = default;
    explicit ZPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ZPoly constant(const BigInt& c) { return ZPoly({c}); }
    static ZPoly monomial(const BigInt& coeff, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    ZPoly operator-() const;
    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
    friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);

    ZPoly pow(unsigned e) const;

    // Division by a monic divisor; throws internal_error if the division
    // leaves a remainder (callers rely on exactness).
    ZPoly div_exact_monic(const ZPoly& divisor) const;

    RatPoly to_rat() const;

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "z") const;

  private:
    void trim();

    std::vector<BigInt> c_;
};

std::ostream& operator<<(std::ostream& os, const ZPoly& p);

} // namespace partikit
