#include "partikit/fdsum.hpp"

#include <numeric>
#include <string>

#include "partikit/cyclotomic.hpp"
#include "partikit/errors.hpp"

namespace partikit {

namespace {

// 1 / ∏_i (1 - ξ^{j a_i}) for one j in [1, b); the factors are never zero
// because gcd(a_i, b) = 1 keeps j·a_i away from 0 mod b.
CycNum inverse_product(const std::shared_ptr<const CycField>& f,
                       const std::vector<std::int64_t>& args, std::int64_t j) {
    const std::int64_t b = f->order();
    CycNum prod = CycNum::one(f);
    for (std::int64_t a : args) {
        prod = prod * (CycNum::one(f) - CycNum::root_power(f, (j % b) * (a % b)));
    }
    return prod.inv();
}

} // namespace

void validate_fd_args(const std::vector<std::int64_t>& args, std::int64_t b) {
    if (b < 1) {
        throw precondition_error("invalid modulus: b = " + std::to_string(b) +
                                 " is not a positive integer");
    }
    for (std::int64_t a : args) {
        if (a < 1) {
            throw precondition_error("invalid arguments: " + std::to_string(a) +
                                     " is not a positive integer");
        }
        if (std::gcd(a, b) != 1) {
            throw precondition_error("invalid arguments: gcd(" + std::to_string(a) + ", " +
                                     std::to_string(b) + ") != 1");
        }
    }
}

Rat fd_sum(const FDSumQuery& q) {
    validate_fd_args(q.args, q.b);
    const std::int64_t b = q.b;
    if (b == 1) {
        return Rat();
    }
    const std::int64_t nr = ((q.n % b) + b) % b;

    auto f = CycField::get(b);
    CycNum acc = CycNum::zero(f);
    for (std::int64_t j = 1; j < b; ++j) {
        acc = acc + CycNum::root_power(f, j * nr) * inverse_product(f, q.args, j);
    }
    return acc.scaled(Rat(1, b)).rational_part();
}

std::vector<Rat> fd_sum_phases(const std::vector<std::int64_t>& args, std::int64_t b) {
    validate_fd_args(args, b);
    if (b == 1) {
        return {Rat()};
    }

    auto f = CycField::get(b);
    std::vector<CycNum> acc(static_cast<std::size_t>(b), CycNum::zero(f));
    for (std::int64_t j = 1; j < b; ++j) {
        const CycNum inv = inverse_product(f, args, j);
        for (std::int64_t n = 0; n < b; ++n) {
            acc[static_cast<std::size_t>(n)] =
                acc[static_cast<std::size_t>(n)] + CycNum::root_power(f, j * n) * inv;
        }
    }

    std::vector<Rat> phases;
    phases.reserve(static_cast<std::size_t>(b));
    for (const CycNum& value : acc) {
        phases.push_back(value.scaled(Rat(1, b)).rational_part());
    }
    return phases;
}

Rat fd_residue_average(const std::vector<std::int64_t>& args, std::int64_t b, std::int64_t D) {
    validate_fd_args(args, b);
    if (D < 1) {
        throw precondition_error("invalid period: D = " + std::to_string(D) +
                                 " is not a positive integer");
    }
    if (D % b != 0) {
        throw precondition_error("period " + std::to_string(D) + " is not divisible by b = " +
                                 std::to_string(b));
    }
    const std::vector<Rat> phases = fd_sum_phases(args, b);
    Rat sum;
    for (std::int64_t k = 0; k < D; ++k) {
        sum += phases[static_cast<std::size_t>(((b - k % b) % b))];
    }
    return sum / Rat(BigInt(static_cast<long>(D)));
}

nlohmann::json fd_sum_json(const FDSumQuery& q) {
    return nlohmann::json{
        {"n", q.n}, {"args", q.args}, {"b", q.b}, {"value", fd_sum(q).str()}};
}

void require_pairwise_coprime(const std::vector<std::int64_t>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (std::gcd(a[i], a[j]) != 1) {
                throw precondition_error("weights " + std::to_string(a[i]) + " and " +
                                         std::to_string(a[j]) + " are not pairwise coprime");
            }
        }
    }
}

namespace {

DecompositionCheck check_one(const RatPoly& q_k, const RatPoly& poly,
                             const std::vector<std::vector<Rat>>& phase_tables,
                             const std::vector<std::int64_t>& a, std::int64_t k) {
    const RatPoly diff = q_k - poly;
    if (diff.degree() > 0) {
        throw internal_error("constituent " + std::to_string(k) +
                             " minus the polynomial part is not constant: " + diff.str());
    }

    Rat rhs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t b = a[i];
        rhs += phase_tables[i][static_cast<std::size_t>((b - k % b) % b)];
    }

    DecompositionCheck out;
    out.k = k;
    out.lhs = diff.coeff(0);
    out.rhs = rhs;
    out.equal = out.lhs == out.rhs;
    return out;
}

std::vector<std::vector<Rat>> build_phase_tables(const WeightSystem& ws) {
    const auto& a = ws.weights();
    std::vector<std::vector<Rat>> tables;
    tables.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<std::int64_t> rest;
        rest.reserve(a.size() - 1);
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j != i) {
                rest.push_back(a[j]);
            }
        }
        tables.push_back(fd_sum_phases(rest, a[i]));
    }
    return tables;
}

} // namespace

DecompositionCheck decomposition_check(const WeightSystem& ws, std::int64_t k) {
    require_pairwise_coprime(ws.weights());
    if (k < 0 || k >= ws.period()) {
        throw precondition_error("residue class " + std::to_string(k) + " is outside [0, " +
                                 std::to_string(ws.period()) + ")");
    }
    return check_one(constituent(ws, k), polynomial_part(ws), build_phase_tables(ws),
                     ws.weights(), k);
}

std::vector<DecompositionCheck> decomposition_check_all(const WeightSystem& ws) {
    require_pairwise_coprime(ws.weights());
    const RatPoly poly = polynomial_part(ws);
    const auto tables = build_phase_tables(ws);

    std::vector<DecompositionCheck> out;
    out.reserve(static_cast<std::size_t>(ws.period()));
    for (std::int64_t k = 0; k < ws.period(); ++k) {
        out.push_back(check_one(constituent(ws, k), poly, tables, ws.weights(), k));
    }
    return out;
}

} // namespace partikit
