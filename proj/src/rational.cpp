#include "partikit/rational.hpp"

#include <ostream>

namespace partikit {

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) {
        throw precondition_error("rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(s));
        }
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw precondition_error("cannot parse rational: \"" + s + "\"");
    }
}

std::string Rat::str() const {
    if (is_integer()) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) {
        throw precondition_error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace partikit
