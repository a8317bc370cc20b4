#include "doctest.h"

#include <random>

#include "partikit/cyclotomic.hpp"
#include "partikit/errors.hpp"

using partikit::BigInt;
using partikit::CycField;
using partikit::CycNum;
using partikit::cyclotomic_poly;
using partikit::internal_error;
using partikit::precondition_error;
using partikit::Rat;
using partikit::RatPoly;
using partikit::ZPoly;

namespace {

CycNum random_elem(std::mt19937_64& rng, const std::shared_ptr<const CycField>& f) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 6);
    CycNum x = CycNum::zero(f);
    for (std::size_t i = 0; i < f->degree(); ++i) {
        x = x + CycNum::root_power(f, static_cast<std::int64_t>(i))
                    .scaled(Rat(num(rng), den(rng)));
    }
    return x;
}

} // namespace

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ZPoly(std::vector<BigInt>{BigInt(-1), BigInt(1)}));
    CHECK(cyclotomic_poly(2) == ZPoly(std::vector<BigInt>{BigInt(1), BigInt(1)}));
    CHECK(cyclotomic_poly(3) ==
          ZPoly(std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(1)}));
    CHECK(cyclotomic_poly(4) ==
          ZPoly(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(1)}));
    CHECK(cyclotomic_poly(6) ==
          ZPoly(std::vector<BigInt>{BigInt(1), BigInt(-1), BigInt(1)}));
    CHECK(cyclotomic_poly(12) == ZPoly(std::vector<BigInt>{BigInt(1), BigInt(0), BigInt(-1),
                                                           BigInt(0), BigInt(1)}));
    CHECK_THROWS_AS(cyclotomic_poly(0), precondition_error);
    CHECK_THROWS_AS(cyclotomic_poly(-5), precondition_error);
}

TEST_CASE("cyclotomic polynomials multiply back to z^b - 1") {
    for (std::int64_t b = 1; b <= 30; ++b) {
        ZPoly prod = ZPoly::constant(1);
        for (std::int64_t d = 1; d <= b; ++d) {
            if (b % d == 0) {
                prod = prod * cyclotomic_poly(d);
            }
        }
        const ZPoly expect = ZPoly::monomial(BigInt(1), static_cast<std::size_t>(b)) +
                             ZPoly::constant(-1);
        CHECK(prod == expect);
    }
}

TEST_CASE("first coefficient outside {0,±1} appears at b = 105") {
    // classical landmark; exercises the exact-division construction deep
    const ZPoly phi = cyclotomic_poly(105);
    CHECK(phi.degree() == 48); // φ(105)
    CHECK(phi.coeff(7) == -2);
    for (std::int64_t b = 1; b < 105; ++b) {
        const ZPoly p = cyclotomic_poly(b);
        for (const BigInt& c : p.coeffs()) {
            CHECK(c >= -1);
            CHECK(c <= 1);
        }
    }
}

TEST_CASE("field degree is Euler phi") {
    CHECK(CycField::get(1)->degree() == 1);
    CHECK(CycField::get(2)->degree() == 1);
    CHECK(CycField::get(7)->degree() == 6);
    CHECK(CycField::get(12)->degree() == 4);
    CHECK(CycField::get(12)->order() == 12);
}

TEST_CASE("root powers reduce into the field") {
    auto f6 = CycField::get(6);
    CHECK(CycNum::root_power(f6, 6) == CycNum::one(f6));
    CHECK(CycNum::root_power(f6, 7) == CycNum::root_power(f6, 1));
    CHECK(CycNum::root_power(f6, -1) == CycNum::root_power(f6, 5));

    // ξ_4² = -1
    auto f4 = CycField::get(4);
    CHECK(CycNum::root_power(f4, 1) * CycNum::root_power(f4, 1) ==
          CycNum::from_rat(f4, Rat(-1)));
    // ξ_4 · ξ_4³ = 1
    CHECK(CycNum::root_power(f4, 1) * CycNum::root_power(f4, 3) == CycNum::one(f4));

    // in Q(ξ_2), ξ = -1 so (1 - ξ)² = 4
    auto f2 = CycField::get(2);
    const CycNum d = CycNum::one(f2) - CycNum::root_power(f2, 1);
    CHECK((d * d).rational_part() == Rat(4));
    CHECK(d.inv().rational_part() == Rat(1, 2));
}

TEST_CASE("inverse of 1 - ω in Q(ξ_3)") {
    auto f3 = CycField::get(3);
    const CycNum x = CycNum::one(f3) - CycNum::root_power(f3, 1);
    const CycNum inv = x.inv();
    // 1/(1-ω) = (2+ω)/3
    CHECK(inv == (CycNum::from_rat(f3, Rat(2)) + CycNum::root_power(f3, 1)).scaled(Rat(1, 3)));
    CHECK(x * inv == CycNum::one(f3));
}

TEST_CASE("inverse round-trips on random elements for b <= 12") {
    std::mt19937_64 rng(31337);
    int done = 0;
    while (done < 1000) {
        const std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
        auto f = CycField::get(b);
        const CycNum x = random_elem(rng, f);
        if (x.is_zero()) {
            continue;
        }
        CHECK(x * x.inv() == CycNum::one(f));
        ++done;
    }
}

TEST_CASE("all nontrivial root sums vanish") {
    // Σ_{t=0}^{b-1} ξ^{jt} = 0 for j not divisible by b
    for (std::int64_t b = 2; b <= 16; ++b) {
        auto f = CycField::get(b);
        for (std::int64_t j = 1; j < b; ++j) {
            CycNum sum = CycNum::zero(f);
            for (std::int64_t t = 0; t < b; ++t) {
                sum = sum + CycNum::root_power(f, j * t);
            }
            CHECK(sum.is_zero());
            CHECK(sum.rational_part() == Rat());
        }
    }
}

TEST_CASE("rationality certificate") {
    auto f5 = CycField::get(5);
    CHECK(CycNum::from_rat(f5, Rat(7, 3)).rational_part() == Rat(7, 3));
    CHECK_THROWS_AS(CycNum::root_power(f5, 1).rational_part(), internal_error);

    // ξ + ξ² + ξ³ + ξ⁴ = -1 in Q(ξ_5): rational even though built from roots
    CycNum s = CycNum::zero(f5);
    for (std::int64_t e = 1; e <= 4; ++e) {
        s = s + CycNum::root_power(f5, e);
    }
    CHECK(s.rational_part() == Rat(-1));
}

TEST_CASE("zero has no inverse and fields do not mix") {
    auto f3 = CycField::get(3);
    auto f4 = CycField::get(4);
    CHECK_THROWS_AS(CycNum::zero(f3).inv(), precondition_error);
    CHECK_THROWS_AS(CycNum::one(f3) + CycNum::one(f4), precondition_error);
    CHECK_THROWS_AS(CycNum::one(f3) * CycNum::root_power(f4, 1), precondition_error);
}

TEST_CASE("field handles are shared") {
    CHECK(CycField::get(9).get() == CycField::get(9).get());
}
