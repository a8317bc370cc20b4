#include "partikit/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <utility>

namespace partikit {

namespace {

std::mutex phi_mutex;
std::map<std::int64_t, ZPoly>& phi_table() {
    static std::map<std::int64_t, ZPoly> table;
    return table;
}

// z^d - 1
ZPoly power_minus_one(std::int64_t d) {
    return ZPoly::monomial(1, static_cast<std::size_t>(d)) - ZPoly::constant(1);
}

} // namespace

const ZPoly& cyclotomic_poly(std::int64_t b) {
    if (b < 1) {
        throw precondition_error("cyclotomic_poly requires b >= 1");
    }
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto& table = phi_table();
    // Fill bottom-up over the divisors of b so each step only needs smaller,
    // already-memoized entries.
    for (std::int64_t d = 1; d <= b; ++d) {
        if (b % d != 0 || table.count(d)) {
            continue;
        }
        ZPoly quotient = power_minus_one(d);
        for (std::int64_t e = 1; e < d; ++e) {
            if (d % e == 0) {
                quotient = quotient.div_exact_monic(table.at(e));
            }
        }
        table.emplace(d, std::move(quotient));
    }
    return table.at(b);
}

CycField::CycField(std::int64_t b)
    : b_(b), phi_(cyclotomic_poly(b)), phi_rat_(phi_.to_rat()),
      deg_(static_cast<std::size_t>(phi_.degree())) {}

std::shared_ptr<const CycField> CycField::get(std::int64_t b) {
    static std::mutex m;
    static std::map<std::int64_t, std::shared_ptr<const CycField>> fields;
    if (b < 1) {
        throw precondition_error("cyclotomic field order must be >= 1");
    }
    std::lock_guard<std::mutex> lock(m);
    auto it = fields.find(b);
    if (it == fields.end()) {
        it = fields.emplace(b, std::shared_ptr<const CycField>(new CycField(b))).first;
    }
    return it->second;
}

CycNum::CycNum(std::shared_ptr<const CycField> f, std::vector<Rat> reduced)
    : f_(std::move(f)), c_(std::move(reduced)) {}

std::vector<Rat> CycNum::reduce(const CycField& f, const RatPoly& p) {
    std::vector<Rat> out(f.degree());
    const RatPoly rem =
        p.degree() < static_cast<int>(f.degree()) ? p : divmod(p, f.modulus_rat()).rem;
    for (int i = 0; i <= rem.degree(); ++i) {
        out[static_cast<std::size_t>(i)] = rem.coeff(static_cast<std::size_t>(i));
    }
    return out;
}

RatPoly CycNum::as_poly() const { return RatPoly(c_); }

CycNum CycNum::zero(std::shared_ptr<const CycField> f) {
    std::vector<Rat> c(f->degree());
    return CycNum(std::move(f), std::move(c));
}

CycNum CycNum::one(std::shared_ptr<const CycField> f) { return from_rat(std::move(f), Rat(1)); }

CycNum CycNum::from_rat(std::shared_ptr<const CycField> f, const Rat& r) {
    std::vector<Rat> c(f->degree());
    c[0] = r;
    return CycNum(std::move(f), std::move(c));
}

CycNum CycNum::root_power(std::shared_ptr<const CycField> f, std::int64_t e) {
    const std::int64_t b = f->order();
    std::int64_t m = e % b;
    if (m < 0) {
        m += b;
    }
    auto reduced = reduce(*f, RatPoly::monomial(Rat(1), static_cast<std::size_t>(m)));
    return CycNum(std::move(f), std::move(reduced));
}

bool CycNum::is_zero() const {
    for (const auto& c : c_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

namespace {

void require_same_field(const CycNum& a, const CycNum& b) {
    if (a.field().order() != b.field().order()) {
        throw precondition_error("cyclotomic field mismatch: Q(ξ_" +
                                 std::to_string(a.field().order()) + ") vs Q(ξ_" +
                                 std::to_string(b.field().order()) + ")");
    }
}

} // namespace

CycNum operator+(const CycNum& a, const CycNum& b) {
    require_same_field(a, b);
    CycNum r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] += b.c_[i];
    }
    return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    require_same_field(a, b);
    CycNum r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] -= b.c_[i];
    }
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    require_same_field(a, b);
    auto reduced = CycNum::reduce(a.field(), a.as_poly() * b.as_poly());
    return CycNum(a.f_, std::move(reduced));
}

CycNum CycNum::scaled(const Rat& s) const {
    CycNum r = *this;
    for (auto& c : r.c_) {
        c *= s;
    }
    return r;
}

CycNum CycNum::inv() const {
    if (is_zero()) {
        throw precondition_error("cyclotomic division by zero");
    }
    const auto res = xgcd(as_poly(), f_->modulus_rat());
    // Φ_b is irreducible over Q and 0 < deg(this) < deg(Φ_b), so the gcd is a
    // nonzero constant.
    if (res.g.degree() != 0) {
        throw internal_error("xgcd with the cyclotomic modulus was not coprime");
    }
    const RatPoly u = res.u.scaled(Rat(1) / res.g.coeff(0));
    return CycNum(f_, reduce(*f_, u));
}

Rat CycNum::rational_part() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) {
            throw internal_error("cyclotomic value is not rational: nonzero ξ^" +
                                 std::to_string(i) + " coordinate " + c_[i].str());
        }
    }
    return c_.empty() ? Rat() : c_[0];
}

bool CycNum::operator==(const CycNum& o) const {
    return f_->order() == o.f_->order() && c_ == o.c_;
}

std::vector<std::string> CycNum::coord_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) {
        out.push_back(c.str());
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) {
    return os << RatPoly(x.coords()).str("ξ");
}

} // namespace partikit
