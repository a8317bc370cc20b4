#include "partikit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "partikit/errors.hpp"
#include "partikit/fdsum.hpp"
#include "partikit/partition.hpp"
#include "partikit/polynomial.hpp"
#include "partikit/rational.hpp"

namespace partikit {

namespace {

struct CliConfig {
    std::vector<std::int64_t> weights;
    std::vector<std::int64_t> args; // fdsum only
    std::int64_t n = 0;
    std::int64_t nmax = 200;
    std::int64_t b = 1;
    std::string method = "dp";
    std::string format = "text";
    std::int64_t box_guard = 100000000;
};

std::string weights_str(const std::vector<std::int64_t>& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(a[i]);
    }
    return s + ")";
}

BoxGuard make_guard(const CliConfig& cfg, std::ostream& err) {
    BoxGuard guard;
    guard.threshold = BigInt(static_cast<long>(cfg.box_guard));
    guard.sink = &err;
    return guard;
}

// PARTIKIT_BOX_GUARD, when set, replaces the default warning threshold;
// an explicit --box-guard flag wins over both.
std::int64_t env_box_guard_default() {
    const char* raw = std::getenv("PARTIKIT_BOX_GUARD");
    if (raw == nullptr || *raw == '\0') {
        return 100000000;
    }
    std::int64_t value = 0;
    try {
        std::size_t used = 0;
        value = std::stoll(raw, &used);
        if (used != std::string(raw).size()) {
            throw std::invalid_argument(raw);
        }
    } catch (const std::exception&) {
        throw precondition_error(std::string("PARTIKIT_BOX_GUARD is not an integer: ") + raw);
    }
    if (value < 1) {
        throw precondition_error("PARTIKIT_BOX_GUARD must be positive, got " +
                                 std::to_string(value));
    }
    return value;
}

bool pairwise_coprime(const std::vector<std::int64_t>& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (std::gcd(a[i], a[j]) != 1) {
                return false;
            }
        }
    }
    return true;
}

// Average time of f() in whole nanoseconds, repeating short operations until
// the sample is long enough to trust the clock.
template <typename F>
std::int64_t time_ns(F&& f) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    std::int64_t reps = 0;
    std::int64_t elapsed = 0;
    do {
        f();
        ++reps;
        elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start)
                      .count();
    } while (elapsed < 100000 && reps < 1024);
    return elapsed / reps;
}

int cmd_count(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    BigInt value;
    if (cfg.method == "dp") {
        value = dp_count(cfg.weights, cfg.n);
    } else {
        const WeightSystem ws = WeightSystem::create(cfg.weights, make_guard(cfg, err));
        if (cfg.method == "box") {
            value = box_count(ws, cfg.n);
        } else {
            value = quasi_eval(quasi_build(ws), cfg.n);
        }
    }

    if (cfg.format == "json") {
        const nlohmann::json doc{{"weights", cfg.weights},
                                 {"n", cfg.n},
                                 {"method", cfg.method},
                                 {"count", value.get_str()}};
        out << doc.dump() << "\n";
    } else {
        out << value.get_str() << "\n";
    }
    return 0;
}

int cmd_poly(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const WeightSystem ws = WeightSystem::create(cfg.weights, make_guard(cfg, err));
    const RatPoly poly = polynomial_part(ws);
    if (cfg.format == "json") {
        out << nlohmann::json(poly.coeff_strings()).dump() << "\n";
    } else {
        out << poly.str() << "\n";
    }
    return 0;
}

int cmd_constituents(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const WeightSystem ws = WeightSystem::create(cfg.weights, make_guard(cfg, err));
    const QuasiPolynomial qp = quasi_build(ws);
    if (cfg.format == "json") {
        out << qp.to_json().dump() << "\n";
    } else {
        for (std::int64_t k = 0; k < qp.D; ++k) {
            out << "k=" << k << ": " << qp.constituents[static_cast<std::size_t>(k)].str()
                << "\n";
        }
    }
    return 0;
}

int cmd_fdsum(const CliConfig& cfg, std::ostream& out) {
    const FDSumQuery query{cfg.args, cfg.b, cfg.n};
    if (cfg.format == "json") {
        out << fd_sum_json(query).dump() << "\n";
    } else {
        out << fd_sum(query).str() << "\n";
    }
    return 0;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const WeightSystem ws = WeightSystem::create(cfg.weights, make_guard(cfg, err));
    const QuasiPolynomial qp = quasi_build(ws);
    const std::vector<BigInt> dp = dp_table(cfg.weights, cfg.nmax);
    bool all_ok = true;

    out << "verify: weights " << weights_str(cfg.weights) << ", nmax " << cfg.nmax << "\n";

    // (i) the three evaluators agree on every n up to nmax
    {
        bool ok = true;
        for (std::int64_t n = 0; n <= cfg.nmax; ++n) {
            const BigInt& want = dp[static_cast<std::size_t>(n)];
            const BigInt via_box = box_count(ws, n);
            const BigInt via_quasi = quasi_eval(qp, n);
            if (via_box != want || via_quasi != want) {
                out << "[FAIL] evaluator agreement: weights " << weights_str(cfg.weights)
                    << ", n = " << n << ": dp = " << want.get_str() << ", box = "
                    << via_box.get_str() << ", quasi = " << via_quasi.get_str() << "\n";
                ok = false;
                break;
            }
        }
        if (ok) {
            out << "[PASS] evaluator agreement (dp, box, quasi) for 0 <= n <= " << cfg.nmax
                << "\n";
        }
        all_ok = all_ok && ok;
    }

    // (ii) numerator * prod(1 - z^a_i) = (1 - z^D)^r
    {
        ZPoly lhs = numerator_poly(ws);
        for (std::int64_t w : cfg.weights) {
            lhs = lhs * (ZPoly::constant(1) +
                         ZPoly::monomial(BigInt(-1), static_cast<std::size_t>(w)));
        }
        // (1 - z^D)^r expanded termwise: Σ_j C(r,j) (-1)^j z^{jD}
        const std::size_t r = ws.r();
        const auto period = static_cast<std::size_t>(ws.period());
        std::vector<BigInt> rhs_coeffs(r * period + 1);
        for (std::size_t j = 0; j <= r; ++j) {
            BigInt c;
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(r),
                         static_cast<unsigned long>(j));
            rhs_coeffs[j * period] = j % 2 == 0 ? c : -c;
        }
        const ZPoly rhs(std::move(rhs_coeffs));
        if (lhs == rhs) {
            out << "[PASS] numerator polynomial identity\n";
        } else {
            out << "[FAIL] numerator polynomial identity: weights " << weights_str(cfg.weights)
                << ": lhs = " << lhs.str() << ", rhs = " << rhs.str() << "\n";
            all_ok = false;
        }
    }

    // (iii) polynomial part equals the constituent average
    const RatPoly poly = polynomial_part(ws);
    {
        const RatPoly avg = polynomial_part_via_average(ws);
        if (poly == avg) {
            out << "[PASS] polynomial part equals constituent average\n";
        } else {
            out << "[FAIL] polynomial part vs average: weights " << weights_str(cfg.weights)
                << ": direct = " << poly.str() << ", average = " << avg.str() << "\n";
            all_ok = false;
        }
    }

    // (iv) leading coefficient of the polynomial part
    {
        BigInt denom = 1;
        for (std::int64_t w : cfg.weights) {
            denom *= w;
        }
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(ws.r() - 1));
        const Rat expected(BigInt(1), fact * denom);
        if (poly.degree() == static_cast<std::ptrdiff_t>(ws.r()) - 1 &&
            poly.leading() == expected) {
            out << "[PASS] leading coefficient 1/((r-1)! * prod a_i)\n";
        } else {
            out << "[FAIL] leading coefficient: weights " << weights_str(cfg.weights)
                << ": got " << poly.leading().str() << ", expected " << expected.str() << "\n";
            all_ok = false;
        }
    }

    // (v) constituent k minus the polynomial part matches the
    //     Fourier-Dedekind sums, when the identity applies
    if (!pairwise_coprime(cfg.weights)) {
        out << "decomposition skipped: weights not pairwise coprime\n";
    } else {
        bool ok = true;
        for (const DecompositionCheck& check : decomposition_check_all(ws)) {
            if (!check.equal) {
                out << "[FAIL] constituent decomposition: weights " << weights_str(cfg.weights)
                    << ", k = " << check.k << ": lhs = " << check.lhs.str() << ", rhs = "
                    << check.rhs.str() << "\n";
                ok = false;
                break;
            }
        }
        if (ok) {
            out << "[PASS] constituent decomposition via Fourier-Dedekind sums\n";
        }
        all_ok = all_ok && ok;
    }

    out << (all_ok ? "all checks passed\n" : "verification failed\n");
    return all_ok ? 0 : 3;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    using clock = std::chrono::steady_clock;

    const auto ws_start = clock::now();
    const WeightSystem ws = WeightSystem::create(cfg.weights, make_guard(cfg, err));
    const std::int64_t ws_build_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - ws_start).count();

    const auto qp_start = clock::now();
    const QuasiPolynomial qp = quasi_build(ws);
    const std::int64_t qp_build_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - qp_start).count();

    std::vector<std::int64_t> grid;
    for (std::int64_t v = 1; v < cfg.nmax; v *= 2) {
        grid.push_back(v);
    }
    grid.push_back(cfg.nmax);

    // Correctness first: timing a wrong answer would be worthless.
    const std::vector<BigInt> dp = dp_table(cfg.weights, cfg.nmax);
    for (std::int64_t n : grid) {
        const BigInt& want = dp[static_cast<std::size_t>(n)];
        const BigInt via_box = box_count(ws, n);
        const BigInt via_quasi = quasi_eval(qp, n);
        if (via_box != want || via_quasi != want) {
            err << "bench aborted: weights " << weights_str(cfg.weights) << ", n = " << n
                << ": dp = " << want.get_str() << ", box = " << via_box.get_str()
                << ", quasi = " << via_quasi.get_str() << "\n";
            return 3;
        }
    }

    const bool csv = cfg.format == "csv";
    if (csv) {
        out << "n,dp_ns,box_ns,quasi_ns\n";
    } else {
        out << "bench: weights " << weights_str(cfg.weights) << ", nmax " << cfg.nmax << "\n";
        out << "setup: box build " << ws_build_ns << " ns, quasi build " << qp_build_ns
            << " ns\n";
        out << std::setw(12) << "n" << std::setw(14) << "dp_ns" << std::setw(14) << "box_ns"
            << std::setw(14) << "quasi_ns" << "\n";
    }

    BigInt sink = 0;
    for (std::int64_t n : grid) {
        const std::int64_t dp_ns = time_ns([&] { sink += dp_table(cfg.weights, n).back(); });
        const std::int64_t box_ns = time_ns([&] { sink += box_count(ws, n); });
        const std::int64_t quasi_ns = time_ns([&] { sink += quasi_eval(qp, n); });
        if (csv) {
            out << n << "," << dp_ns << "," << box_ns << "," << quasi_ns << "\n";
        } else {
            out << std::setw(12) << n << std::setw(14) << dp_ns << std::setw(14) << box_ns
                << std::setw(14) << quasi_ns << "\n";
        }
    }
    static_cast<void>(sink);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"partikit: exact restricted partition counting, constituent polynomials, "
                 "and Fourier-Dedekind sums"};
    app.require_subcommand(1);

    CliConfig cfg;

    const auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--weights", cfg.weights, "comma-separated positive weights")
            ->required()
            ->delimiter(',');
    };
    const auto add_format = [&](CLI::App* sub, const std::vector<std::string>& choices) {
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(choices));
    };
    const auto add_guard = [&](CLI::App* sub) {
        sub->add_option("--box-guard", cfg.box_guard,
                        "box-size threshold for the enumeration warning")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* count = app.add_subcommand("count", "evaluate p_a(n)");
    add_weights(count);
    count->add_option("--n", cfg.n, "target value")->required();
    count->add_option("--method", cfg.method, "evaluator")
        ->check(CLI::IsMember({"dp", "box", "quasi"}));
    add_format(count, {"text", "json"});
    add_guard(count);

    CLI::App* poly = app.add_subcommand("poly", "print the polynomial part");
    add_weights(poly);
    add_format(poly, {"text", "json"});
    add_guard(poly);

    CLI::App* constituents =
        app.add_subcommand("constituents", "print all D constituent polynomials");
    add_weights(constituents);
    add_format(constituents, {"text", "json"});
    add_guard(constituents);

    CLI::App* fdsum = app.add_subcommand("fdsum", "evaluate a Fourier-Dedekind sum");
    fdsum->add_option("--args", cfg.args, "comma-separated arguments a_1..a_m (may be empty)")
        ->delimiter(',');
    fdsum->add_option("--b", cfg.b, "root-of-unity order")->required();
    fdsum->add_option("--n", cfg.n, "phase index");
    add_format(fdsum, {"text", "json"});

    CLI::App* verify = app.add_subcommand("verify", "cross-validate every evaluation path");
    add_weights(verify);
    verify->add_option("--nmax", cfg.nmax, "check all 0 <= n <= nmax")
        ->check(CLI::NonNegativeNumber);
    add_guard(verify);

    CLI::App* bench = app.add_subcommand("bench", "time the three evaluators");
    add_weights(bench);
    bench->add_option("--nmax", cfg.nmax, "largest benchmarked n")->check(CLI::PositiveNumber);
    add_format(bench, {"text", "csv"});
    add_guard(bench);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        cfg.box_guard = env_box_guard_default();
        app.parse(reversed);

        if (bench->parsed() && bench->count("--nmax") == 0) {
            cfg.nmax = 1000;
        }

        if (count->parsed()) {
            return cmd_count(cfg, out, err);
        }
        if (poly->parsed()) {
            return cmd_poly(cfg, out, err);
        }
        if (constituents->parsed()) {
            return cmd_constituents(cfg, out, err);
        }
        if (fdsum->parsed()) {
            return cmd_fdsum(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out, err);
        }
        return cmd_bench(cfg, out, err);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace partikit
