#pragma once

// Exact rational numbers on top of GMP. Values are always kept canonical:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1. Equality is structural.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "partikit/errors.hpp"

namespace partikit {

using BigInt = mpz_class;

class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den);
    Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

    // Accepts "p", "-p", "p/q"; canonicalizes (e.g. "6/-8" -> -3/4).
    static Rat parse(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "p/q" with "/q" omitted when q = 1.
    std::string str() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o); // throws precondition_error on zero divisor

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

  private:
    mpq_class v_; // invariant: canonical
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace partikit
