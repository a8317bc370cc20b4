#include "partikit/polynomial.hpp"

#include <ostream>
#include <utility>

namespace partikit {

namespace {

// Shared text form for both polynomial flavors. Terms ascend by degree;
// coefficients print explicitly ("1 + 1·n"), negatives join with " - ".
template <typename Coeff>
std::string poly_str(const std::vector<Coeff>& coeffs, const std::string& var,
                     bool (*is_zero)(const Coeff&), bool (*is_negative)(const Coeff&),
                     std::string (*abs_str)(const Coeff&)) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (is_zero(coeffs[i])) {
            continue;
        }
        const bool neg = is_negative(coeffs[i]);
        if (out.empty()) {
            if (neg) {
                out += "-";
            }
        } else {
            out += neg ? " - " : " + ";
        }
        const std::string mag = abs_str(coeffs[i]);
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") { // unit multipliers stay implicit: "n", not "1·n"
                out += mag + "·";
            }
            out += var;
            if (i >= 2) {
                out += "^" + std::to_string(i);
            }
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

RatPoly RatPoly::monomial(const Rat& coeff, std::size_t deg) {
    std::vector<Rat> c(deg + 1);
    c[deg] = coeff;
    return RatPoly(std::move(c));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * x + *it;
    }
    return r;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return RatPoly();
    }
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::scaled(const Rat& s) const {
    if (s.is_zero()) {
        return RatPoly();
    }
    RatPoly r(*this);
    for (auto& c : r.c_) {
        c *= s;
    }
    return r;
}

std::string RatPoly::str(const std::string& var) const {
    return poly_str<Rat>(
        c_, var, [](const Rat& c) { return c.is_zero(); },
        [](const Rat& c) { return c.sign() < 0; },
        [](const Rat& c) { return (c.sign() < 0 ? -c : c).str(); });
}

std::vector<std::string> RatPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        out.push_back(c.str());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.str(); }

RatPolyDivMod divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) {
        throw precondition_error("polynomial division by zero");
    }
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quot;
    const int db = b.degree();
    if (a.degree() >= db) {
        quot.assign(a.degree() - db + 1, Rat());
    }
    int dr = a.degree();
    while (dr >= db) {
        if (rem[dr].is_zero()) {
            --dr;
            continue;
        }
        const Rat q = rem[dr] / b.leading();
        const int shift = dr - db;
        quot[shift] = q;
        for (int i = 0; i <= db; ++i) {
            rem[shift + i] -= q * b.coeff(i);
        }
        --dr;
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPolyXgcd xgcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    return {r0, s0, t0};
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

ZPoly ZPoly::monomial(const BigInt& coeff, std::size_t deg) {
    std::vector<BigInt> c(deg + 1);
    c[deg] = coeff;
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-() const {
    ZPoly r(*this);
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return ZPoly();
    }
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return ZPoly(std::move(out));
}

ZPoly ZPoly::pow(unsigned e) const {
    ZPoly acc = ZPoly::constant(1);
    for (unsigned i = 0; i < e; ++i) {
        acc = acc * *this;
    }
    return acc;
}

ZPoly ZPoly::div_exact_monic(const ZPoly& divisor) const {
    if (divisor.is_zero() || divisor.leading() != 1) {
        throw precondition_error("divisor must be monic");
    }
    const int db = divisor.degree();
    std::vector<BigInt> rem(c_);
    std::vector<BigInt> quot;
    if (degree() >= db) {
        quot.assign(degree() - db + 1, BigInt(0));
    }
    for (int dr = degree(); dr >= db; --dr) {
        if (rem[dr] == 0) {
            continue;
        }
        const BigInt q = rem[dr];
        const int shift = dr - db;
        quot[shift] = q;
        for (int i = 0; i <= db; ++i) {
            rem[shift + i] -= q * divisor.coeff(i);
        }
    }
    for (const auto& c : rem) {
        if (c != 0) {
            throw internal_error("exact polynomial division left a remainder");
        }
    }
    return ZPoly(std::move(quot));
}

RatPoly ZPoly::to_rat() const {
    std::vector<Rat> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        out.emplace_back(c);
    }
    return RatPoly(std::move(out));
}

std::string ZPoly::str(const std::string& var) const {
    return poly_str<BigInt>(
        c_, var, [](const BigInt& c) { return c == 0; },
        [](const BigInt& c) { return c < 0; },
        [](const BigInt& c) { return BigInt(abs(c)).get_str(); });
}

std::ostream& operator<<(std::ostream& os, const ZPoly& p) { return os << p.str(); }

} // namespace partikit
