#include "partikit/partition.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <string>
#include <utility>

#include "partikit/errors.hpp"

namespace partikit {

namespace {

// Values a·j live in [0, rD - Σa_i]; with this many histogram cells the
// convolution stays affordable and every value fits comfortably in int64.
constexpr std::int64_t kMaxPeriod = 100000000;
constexpr std::int64_t kMaxHistogramCells = 200000000;

} // namespace

WeightSystem WeightSystem::create(std::vector<std::int64_t> a, const BoxGuard& guard) {
    if (a.empty()) {
        throw precondition_error("invalid weights: at least one weight is required");
    }
    for (std::int64_t w : a) {
        if (w < 1) {
            throw precondition_error("invalid weights: " + std::to_string(w) +
                                     " is not a positive integer");
        }
    }

    WeightSystem ws;
    ws.a_ = std::move(a);

    const BigInt d_big = lcm_vec(ws.a_);
    if (d_big > kMaxPeriod) {
        throw precondition_error("period D = " + d_big.get_str() + " exceeds the supported bound " +
                                 std::to_string(kMaxPeriod));
    }
    ws.d_ = static_cast<std::int64_t>(d_big.get_si());

    ws.dims_.reserve(ws.a_.size());
    ws.box_size_ = 1;
    for (std::int64_t w : ws.a_) {
        ws.dims_.push_back(ws.d_ / w);
        ws.box_size_ *= ws.dims_.back();
    }

    if (ws.box_size_ > guard.threshold) {
        std::ostream& sink = guard.sink ? *guard.sink : std::cerr;
        sink << "partikit: warning: box size " << ws.box_size_.get_str()
             << " exceeds guard threshold " << guard.threshold.get_str() << "\n";
    }

    // Histogram of a·j over the box, built one coordinate at a time: the
    // coordinate j_i contributes the geometric series 1 + z^{a_i} + ... with
    // D/a_i terms. Small weights first keeps the longest series early, when
    // the partial histogram is still short.
    std::vector<std::size_t> order(ws.a_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t lhs, std::size_t rhs) { return ws.a_[lhs] < ws.a_[rhs]; });

    std::int64_t cells = 1;
    for (std::int64_t w : ws.a_) {
        cells += ws.d_ - w;
    }
    if (cells > kMaxHistogramCells) {
        throw precondition_error("box histogram needs " + std::to_string(cells) +
                                 " cells, more than the supported bound " +
                                 std::to_string(kMaxHistogramCells));
    }

    std::vector<BigInt> hist{BigInt(1)};
    for (std::size_t idx : order) {
        const std::int64_t w = ws.a_[idx];
        const std::int64_t terms = ws.dims_[idx];
        const std::int64_t old_len = static_cast<std::int64_t>(hist.size());
        std::vector<BigInt> next(static_cast<std::size_t>(old_len + ws.d_ - w));
        for (std::int64_t v = 0; v < old_len; ++v) {
            if (hist[static_cast<std::size_t>(v)] == 0) {
                continue;
            }
            for (std::int64_t t = 0; t < terms; ++t) {
                next[static_cast<std::size_t>(v + t * w)] += hist[static_cast<std::size_t>(v)];
            }
        }
        hist = std::move(next);
    }

    ws.buckets_.assign(static_cast<std::size_t>(ws.d_), {});
    BigInt total = 0;
    for (std::size_t v = 0; v < hist.size(); ++v) {
        if (hist[v] == 0) {
            continue;
        }
        const auto value = static_cast<std::int64_t>(v);
        ws.buckets_[static_cast<std::size_t>(value % ws.d_)].push_back(
            BucketEntry{value, hist[v]});
        total += hist[v];
    }
    if (total != ws.box_size_) {
        throw internal_error("box histogram mass " + total.get_str() +
                             " does not match box size " + ws.box_size_.get_str());
    }
    return ws;
}

const std::vector<WeightSystem::BucketEntry>& WeightSystem::bucket(std::int64_t c) const {
    if (c < 0 || c >= d_) {
        throw precondition_error("residue class " + std::to_string(c) + " is outside [0, " +
                                 std::to_string(d_) + ")");
    }
    return buckets_[static_cast<std::size_t>(c)];
}

nlohmann::json WeightSystem::to_json() const {
    return nlohmann::json{{"a", a_}, {"D", d_}, {"boxSize", box_size_.get_str()}};
}

std::vector<BigInt> dp_table(const std::vector<std::int64_t>& a, std::int64_t nmax) {
    if (a.empty()) {
        throw precondition_error("invalid weights: at least one weight is required");
    }
    for (std::int64_t w : a) {
        if (w < 1) {
            throw precondition_error("invalid weights: " + std::to_string(w) +
                                     " is not a positive integer");
        }
    }
    if (nmax < 0) {
        throw precondition_error("dp_table requires nmax >= 0, got " + std::to_string(nmax));
    }

    std::vector<BigInt> table(static_cast<std::size_t>(nmax) + 1);
    table[0] = 1;
    for (std::int64_t w : a) {
        for (std::int64_t n = w; n <= nmax; ++n) {
            table[static_cast<std::size_t>(n)] += table[static_cast<std::size_t>(n - w)];
        }
    }
    return table;
}

BigInt dp_count(const std::vector<std::int64_t>& a, std::int64_t n) {
    if (n < 0) {
        return 0;
    }
    return dp_table(a, n).back();
}

BigInt box_count(const WeightSystem& ws, std::int64_t n) {
    if (n < 0) {
        return 0;
    }
    const std::int64_t d = ws.period();
    const unsigned long top = static_cast<unsigned long>(ws.r() - 1);
    BigInt acc = 0;
    for (const auto& entry : ws.bucket(n % d)) {
        if (entry.value > n) {
            break; // entries are ascending by value
        }
        const BigInt m = BigInt((n - entry.value) / d) + static_cast<long>(top);
        acc += entry.count * binom_count(m, top);
    }
    return acc;
}

ZPoly numerator_poly(const WeightSystem& ws) {
    std::int64_t degree = 0;
    for (std::int64_t w : ws.weights()) {
        degree += ws.period() - w;
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
    for (std::int64_t c = 0; c < ws.period(); ++c) {
        for (const auto& entry : ws.bucket(c)) {
            coeffs[static_cast<std::size_t>(entry.value)] = entry.count;
        }
    }
    return ZPoly(std::move(coeffs));
}

RatPoly constituent(const WeightSystem& ws, std::int64_t k) {
    if (k < 0 || k >= ws.period()) {
        throw precondition_error("constituent index " + std::to_string(k) + " is outside [0, " +
                                 std::to_string(ws.period()) + ")");
    }
    const unsigned long top = static_cast<unsigned long>(ws.r() - 1);
    const BigInt d(static_cast<long>(ws.period()));
    RatPoly acc;
    for (const auto& entry : ws.bucket(k)) {
        acc += binom_poly_shifted(Rat(BigInt(entry.value)), d, top).scaled(Rat(entry.count));
    }
    return acc;
}

RatPoly polynomial_part(const WeightSystem& ws) {
    const unsigned long top = static_cast<unsigned long>(ws.r() - 1);
    const BigInt d(static_cast<long>(ws.period()));
    RatPoly acc;
    for (std::int64_t c = 0; c < ws.period(); ++c) {
        for (const auto& entry : ws.bucket(c)) {
            acc += binom_poly_shifted(Rat(BigInt(entry.value)), d, top).scaled(Rat(entry.count));
        }
    }
    return acc.scaled(Rat(1, ws.period()));
}

RatPoly polynomial_part_via_average(const WeightSystem& ws) {
    RatPoly acc;
    for (std::int64_t k = 0; k < ws.period(); ++k) {
        acc += constituent(ws, k);
    }
    return acc.scaled(Rat(1, ws.period()));
}

RatPoly poly_part_closed_r2(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) {
        throw precondition_error("invalid weights: both must be positive integers");
    }
    if (std::gcd(a, b) != 1) {
        throw precondition_error("weights " + std::to_string(a) + " and " + std::to_string(b) +
                                 " are not coprime");
    }
    return RatPoly({Rat(1, 2 * a) + Rat(1, 2 * b), Rat(1, a * b)});
}

nlohmann::json QuasiPolynomial::to_json() const {
    nlohmann::json lists = nlohmann::json::array();
    for (const RatPoly& q : constituents) {
        lists.push_back(q.coeff_strings());
    }
    return nlohmann::json{{"D", D}, {"constituents", lists}};
}

QuasiPolynomial quasi_build(const WeightSystem& ws) {
    QuasiPolynomial qp;
    qp.D = ws.period();
    qp.constituents.reserve(static_cast<std::size_t>(qp.D));
    for (std::int64_t k = 0; k < qp.D; ++k) {
        qp.constituents.push_back(constituent(ws, k));
    }
    return qp;
}

BigInt quasi_eval(const QuasiPolynomial& qp, std::int64_t n) {
    if (n < 0) {
        throw precondition_error("quasi-polynomial evaluation requires n >= 0, got " +
                                 std::to_string(n));
    }
    if (qp.D < 1 || qp.constituents.size() != static_cast<std::size_t>(qp.D)) {
        throw precondition_error("malformed quasi-polynomial: period " + std::to_string(qp.D) +
                                 " with " + std::to_string(qp.constituents.size()) +
                                 " constituents");
    }
    const Rat value = qp.constituents[static_cast<std::size_t>(n % qp.D)].eval(Rat(BigInt(n)));
    if (!value.is_integer()) {
        throw internal_error("quasi-polynomial evaluated to non-integer " + value.str() +
                             " at n = " + std::to_string(n));
    }
    return value.num();
}

} // namespace partikit
