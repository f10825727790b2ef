// Command-line front end: exact areas, finite-k convergence studies,
// generating-function terms, and self-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosareas/cosareas.hpp"

namespace {

using namespace cosareas;
using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Csv, Plain };

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// doubles enter JSON rounded to the same 12 significant digits the text
// formats print, so all formats agree and output stays byte-stable
double round12(double v) { return std::stod(fmt_double(v)); }

std::size_t worker_pool_size(std::size_t jobs) {
    std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("COSAREAS_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || parsed < 1)
            throw UsageError("COSAREAS_THREADS must be a positive integer");
        cap = static_cast<std::size_t>(parsed);
    }
    return std::min(cap, std::max<std::size_t>(jobs, 1));
}

// Fan a job list out to a small pool; results land by index, so output
// order never depends on scheduling.
template <typename R, typename Fn>
std::vector<R> run_ordered(std::size_t count, Fn&& fn) {
    std::vector<R> results(count);
    const std::size_t workers = worker_pool_size(count);
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) results[i] = fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

struct RunReport {
    std::string subcommand;
    json params;        // lossless echo of the effective parameters
    json rows;
    double elapsed_ms = 0.0;
};

std::string rerun_string(const RunReport& report) {
    std::string cmd = "cosareas " + report.subcommand;
    for (const auto& [key, value] : report.params.items()) {
        cmd += " --" + key + " ";
        cmd += value.is_string() ? value.get<std::string>() : value.dump();
    }
    return cmd;
}

void emit_report(const RunReport& report, OutputFormat format,
                 const std::function<void(std::ostream&)>& plain_writer,
                 const std::vector<std::string>& csv_header) {
    if (format == OutputFormat::Json) {
        json j{{"command", report.subcommand},
               {"params", report.params},
               {"rows", report.rows},
               {"elapsed_ms", round12(report.elapsed_ms)}};
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cerr << "# " << rerun_string(report) << "\n";
    if (format == OutputFormat::Csv) {
        for (std::size_t i = 0; i < csv_header.size(); ++i)
            std::cout << (i ? "," : "") << csv_header[i];
        std::cout << "\n";
        for (const auto& row : report.rows) {
            bool first = true;
            for (const auto& cell : row) {
                std::cout << (first ? "" : ",");
                if (cell.is_string())
                    std::cout << cell.get<std::string>();
                else
                    std::cout << cell.dump();
                first = false;
            }
            std::cout << "\n";
        }
    } else {
        plain_writer(std::cout);
    }
    std::cerr << "# elapsed_ms=" << fmt_double(report.elapsed_ms) << "\n";
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "plain") return OutputFormat::Plain;
    throw UsageError("unknown format: " + name);
}

AreaMethod parse_method(const std::string& name) {
    if (name == "closed-form") return AreaMethod::ClosedForm;
    if (name == "recursion") return AreaMethod::Recursion;
    if (name == "double-factorial") return AreaMethod::DoubleFactorial;
    throw UsageError("unknown method: " + name);
}

// ----- exact ---------------------------------------------------------------

int cmd_exact(int n_single, int max_n, const std::string& method_name,
              const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);
    const AreaMethod method = parse_method(method_name);
    if ((n_single > 0) == (max_n > 0))
        throw UsageError("exact: give exactly one of --n or --max-n");

    const int lo = (n_single > 0) ? n_single : 1;
    const int hi = (n_single > 0) ? n_single : max_n;
    const auto started = std::chrono::steady_clock::now();

    struct Row {
        int n;
        PiRational value;
        Integer numerator;
    };
    const auto rows =
        run_ordered<Row>(static_cast<std::size_t>(hi - lo + 1), [&](std::size_t i) {
            const int n = lo + static_cast<int>(i);
            return Row{n, area(n, method), oeis_numerator(n)};
        });

    RunReport report;
    report.subcommand = "exact";
    if (n_single > 0)
        report.params["n"] = n_single;
    else
        report.params["max-n"] = max_n;
    report.params["method"] = method_name;
    report.params["format"] = format_name;
    for (const Row& row : rows) {
        report.rows.push_back({row.n, row.value.coeff.numerator().str(),
                               row.value.coeff.denominator().str(),
                               round12(row.value.to_double()), row.numerator.str()});
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();

    emit_report(
        report, format,
        [&](std::ostream& os) {
            for (const Row& row : rows) {
                os << "A_" << row.n << " = " << row.value.str() << " = "
                   << fmt_double(row.value.to_double()) << "  [numerator "
                   << row.numerator.str() << "]\n";
            }
        },
        {"n", "coeff_num", "coeff_den", "approx", "numerator"});
    return 0;
}

// ----- converge ------------------------------------------------------------

std::vector<long long> parse_k_list(const std::string& ks, long long k_start,
                                    long long k_factor, int k_count) {
    std::vector<long long> out;
    if (!ks.empty()) {
        if (k_start > 0 || k_count > 0)
            throw UsageError("converge: --ks excludes --k-start/--k-factor/--k-count");
        std::stringstream ss(ks);
        std::string token;
        while (std::getline(ss, token, ',')) {
            try {
                std::size_t used = 0;
                const long long k = std::stoll(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                out.push_back(k);
            } catch (const std::exception&) {
                throw UsageError("converge: bad k value: " + token);
            }
        }
    } else {
        if (k_start <= 0 || k_count <= 0)
            throw UsageError("converge: give --ks or --k-start/--k-factor/--k-count");
        if (k_factor < 2) throw UsageError("converge: --k-factor must be >= 2");
        long long k = k_start;
        for (int i = 0; i < k_count; ++i, k *= k_factor) out.push_back(k);
    }
    if (out.empty()) throw UsageError("converge: empty k list");
    for (const long long k : out)
        if (k < 2) throw UsageError("converge: every k must be >= 2");
    return out;
}

int cmd_converge(int n, const std::string& ks, long long k_start, long long k_factor,
                 int k_count, const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);
    if (n < 1) throw UsageError("converge: --n must be >= 1");
    const std::vector<long long> k_values = parse_k_list(ks, k_start, k_factor, k_count);

    const auto started = std::chrono::steady_clock::now();
    const double limit = area_closed_form(n).to_double();
    const auto rows = run_ordered<ConvergenceRow>(k_values.size(), [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        const FiniteAreaResult r = finite_area_piecewise(n, k_values[i]);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return ConvergenceRow{k_values[i], r.area, limit, std::abs(r.area - limit), ms};
    });

    RunReport report;
    report.subcommand = "converge";
    report.params["n"] = n;
    {
        std::string k_echo;
        for (std::size_t i = 0; i < k_values.size(); ++i)
            k_echo += (i ? "," : "") + std::to_string(k_values[i]);
        report.params["ks"] = k_echo;
    }
    report.params["format"] = format_name;
    for (const auto& row : rows) {
        report.rows.push_back({row.k, round12(row.area), round12(row.limit),
                               round12(row.error), round12(row.millis)});
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();

    emit_report(
        report, format,
        [&](std::ostream& os) {
            for (const auto& row : rows) {
                os << "k=" << row.k << "  area=" << fmt_double(row.area)
                   << "  limit=" << fmt_double(row.limit)
                   << "  error=" << fmt_double(row.error) << "  ms=" << fmt_double(row.millis)
                   << "\n";
            }
        },
        {"k", "area", "limit", "error", "ms"});
    return 0;
}

// ----- egf -----------------------------------------------------------------

int cmd_egf(const std::string& which, int max_n, const std::string& format_name,
            const std::string& bfile_path) {
    const OutputFormat format = parse_format(format_name);
    if (max_n < 0) throw UsageError("egf: --max-n must be >= 0");
    const auto N = static_cast<std::size_t>(max_n);

    const auto started = std::chrono::steady_clock::now();

    RunReport report;
    report.subcommand = "egf";
    report.params["which"] = which;
    report.params["max-n"] = max_n;
    report.params["format"] = format_name;
    if (!bfile_path.empty()) report.params["bfile"] = bfile_path;

    std::vector<Integer> terms;
    std::optional<EgfSeries> series;
    if (which == "arcsin") {
        series = arcsin_series(N);
        for (std::size_t n = 0; n <= N; ++n) {
            report.rows.push_back({static_cast<long long>(n),
                                   series->coeff(n).numerator().str(),
                                   series->coeff(n).denominator().str()});
        }
    } else if (which == "a296726" || which == "a372324") {
        terms = (which == "a296726") ? a296726_terms(N) : a372324_terms(N);
        for (std::size_t n = 0; n <= N; ++n)
            report.rows.push_back({static_cast<long long>(n), terms[n].str()});
    } else {
        throw UsageError("egf: unknown series: " + which);
    }

    std::vector<BFileMismatch> mismatches;
    if (!bfile_path.empty()) {
        if (!series.has_value()) {
            std::ifstream in(bfile_path);
            if (!in.good()) throw UsageError("egf: cannot open b-file: " + bfile_path);
            std::ostringstream ss;
            ss << in.rdbuf();
            OeisBFile bfile;
            try {
                bfile = parse_bfile(ss.str(), which);
            } catch (const BFileParseError& e) {
                throw UsageError(std::string("egf: ") + e.what());
            }
            mismatches = diff_bfile(bfile, terms);
        } else {
            throw UsageError("egf: --bfile applies to the integer sequences only");
        }
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();

    emit_report(
        report, format,
        [&](std::ostream& os) {
            if (series.has_value()) {
                for (std::size_t n = 0; n <= N; ++n)
                    os << "c(" << n << ") = " << series->coeff(n).str() << "\n";
            } else {
                for (std::size_t n = 0; n <= N; ++n)
                    os << "a(" << n << ") = " << terms[n].str() << "\n";
            }
        },
        series.has_value() ? std::vector<std::string>{"n", "coeff_num", "coeff_den"}
                           : std::vector<std::string>{"n", "term"});

    if (!bfile_path.empty()) {
        if (mismatches.empty()) {
            std::cerr << "# b-file diff: clean\n";
        } else {
            for (const auto& m : mismatches) {
                std::cout << "diff at n=" << m.index << ": bfile=" << m.expected.str()
                          << " computed=" << m.got.str() << "\n";
            }
            return kExitVerifyFailure;
        }
    }
    return 0;
}

// ----- verify ---------------------------------------------------------------

struct VerifyCheck {
    std::string name;
    bool pass;
    double max_error;
};

std::vector<VerifyCheck> verify_cross_method() {
    bool ok = true;
    for (int n = 1; n <= 201; ++n) {
        const PiRational closed = area_closed_form(n);
        ok = ok && closed == area_recursion(n) && closed == area_double_factorial(n);
    }
    return {{"three-method-equality-n-1..201", ok, 0.0}};
}

std::vector<VerifyCheck> verify_egf() {
    std::vector<VerifyCheck> checks;
    const long long odd_expected[] = {1, 7, 149, 6483};
    const long long even_expected[] = {1, 16, 544, 32768};
    bool values_ok = true;
    for (int i = 0; i < 4; ++i) {
        values_ok = values_ok && oeis_numerator(2 * i + 1) == odd_expected[i] &&
                    oeis_numerator(2 * i + 2) == even_expected[i];
    }
    checks.push_back({"known-numerators-n-1..8", values_ok, 0.0});

    const auto odd_terms = a296726_terms(61);
    const auto even_terms = a372324_terms(61);
    bool bridge_ok = true;
    for (int n = 1; n <= 61; ++n) {
        const Integer& expected = (n % 2 == 1) ? odd_terms[n] : even_terms[n];
        bridge_ok = bridge_ok && oeis_numerator(n) == expected;
    }
    checks.push_back({"egf-terms-match-numerators-n-1..61", bridge_ok, 0.0});
    return checks;
}

std::vector<VerifyCheck> verify_identities() {
    std::vector<VerifyCheck> checks;
    double worst = 0.0;
    const auto sweep = [&](long long N, long long q, LagrangeVariant v) {
        const double closed = lagrange_closed_form(N, q, v);
        if (std::abs(closed) > 1e6) return;
        worst = std::max(worst, std::abs(lagrange_sum_direct(N, q, v) - closed));
    };
    for (long long N = 2; N <= 2000; N += 2)
        for (long long q = 1; q <= 50; ++q) sweep(N, q, LagrangeVariant::FullEvenN);
    for (long long N = 3; N <= 1999; N += 2)
        for (long long q = 1; q <= 50; ++q) sweep(N, q, LagrangeVariant::HalfOddN);
    for (long long N = 2; N <= 2000; N += 2)
        for (long long q = 2; q <= 50; q += 2) sweep(N, q, LagrangeVariant::HalfStepEvenN);
    checks.push_back({"lagrange-sums-N-2000-q-50", worst <= 1e-10, worst});

    double cot_worst = 0.0;
    for (const double x : {1.0, std::numbers::pi / 2, std::numbers::pi, 5.0})
        cot_worst = std::max(cot_worst, std::abs(cot_limit_expression(x, 10000) - 4.0 / x));
    checks.push_back({"cotangent-limit-k-1e4", cot_worst < 1e-3, cot_worst});
    return checks;
}

std::vector<VerifyCheck> verify_cq() {
    std::vector<VerifyCheck> checks;
    const auto case_of = [](long long q, bool k_odd) {
        if (k_odd) return (q % 2 == 1) ? ParityCase::OddOdd : ParityCase::OddKEvenQ;
        return (q % 2 == 1) ? ParityCase::EvenKOddQ : ParityCase::EvenEven;
    };
    const char* names[] = {"cq-odd-k-odd-q", "cq-odd-k-even-q", "cq-even-k-odd-q",
                           "cq-even-k-even-q"};
    for (const bool k_odd : {true, false}) {
        for (const bool q_odd : {true, false}) {
            double worst = 0.0;
            bool decreasing = true;
            for (long long q = q_odd ? 1 : 2; q <= 9; q += 2) {
                const ParityCase pc = case_of(q, k_odd);
                const double limit = cq_limit(q, pc).to_double();
                const double e1 =
                    std::abs(cq_partial(q, k_odd ? 1001 : 1000, pc) - limit);
                const double e2 =
                    std::abs(cq_partial(q, k_odd ? 10001 : 10000, pc) - limit);
                worst = std::max(worst, e1);
                decreasing = decreasing && e2 < e1;
            }
            const int index = (k_odd ? 0 : 2) + (q_odd ? 0 : 1);
            checks.push_back({names[index], worst < 1e-2 && decreasing, worst});
        }
    }
    return checks;
}

int cmd_verify(const std::string& suite, const std::string& format_name) {
    const OutputFormat format = parse_format(format_name);

    const auto started = std::chrono::steady_clock::now();
    std::vector<VerifyCheck> checks;
    if (suite == "cross-method")
        checks = verify_cross_method();
    else if (suite == "egf")
        checks = verify_egf();
    else if (suite == "identities")
        checks = verify_identities();
    else if (suite == "cq")
        checks = verify_cq();
    else
        throw UsageError("verify: unknown suite: " + suite);

    RunReport report;
    report.subcommand = "verify";
    report.params["suite"] = suite;
    report.params["format"] = format_name;
    bool all_ok = true;
    for (const auto& check : checks) {
        all_ok = all_ok && check.pass;
        report.rows.push_back(
            {check.name, check.pass ? "pass" : "fail", round12(check.max_error)});
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();

    emit_report(
        report, format,
        [&](std::ostream& os) {
            for (const auto& check : checks) {
                os << (check.pass ? "[PASS] " : "[FAIL] ") << check.name
                   << "  max_error=" << fmt_double(check.max_error) << "\n";
            }
        },
        {"check", "status", "max_error"});
    return all_ok ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and finite-k areas between cos^n x and cos^n kx"};
    app.require_subcommand(1);

    std::function<int()> action;

    // exact
    {
        auto* sub = app.add_subcommand("exact", "exact limiting areas A_n");
        auto n = std::make_shared<int>(0);
        auto max_n = std::make_shared<int>(0);
        auto method = std::make_shared<std::string>("closed-form");
        auto format = std::make_shared<std::string>("plain");
        sub->add_option("--n", *n, "single exponent n >= 1");
        sub->add_option("--max-n", *max_n, "table for n = 1..max-n");
        sub->add_option("--method", *method, "closed-form | recursion | double-factorial");
        sub->add_option("--format", *format, "plain | csv | json");
        sub->callback([=, &action] {
            action = [=] { return cmd_exact(*n, *max_n, *method, *format); };
        });
    }

    // converge
    {
        auto* sub = app.add_subcommand("converge", "finite-k areas against the limit");
        auto n = std::make_shared<int>(0);
        auto ks = std::make_shared<std::string>();
        auto k_start = std::make_shared<long long>(0);
        auto k_factor = std::make_shared<long long>(10);
        auto k_count = std::make_shared<int>(0);
        auto format = std::make_shared<std::string>("plain");
        sub->add_option("--n", *n, "exponent n >= 1")->required();
        sub->add_option("--ks", *ks, "comma-separated k list, each >= 2");
        sub->add_option("--k-start", *k_start, "geometric schedule start");
        sub->add_option("--k-factor", *k_factor, "geometric schedule factor");
        sub->add_option("--k-count", *k_count, "geometric schedule length");
        sub->add_option("--format", *format, "plain | csv | json");
        sub->callback([=, &action] {
            action = [=] {
                return cmd_converge(*n, *ks, *k_start, *k_factor, *k_count, *format);
            };
        });
    }

    // egf
    {
        auto* sub = app.add_subcommand("egf", "generating-function coefficients and terms");
        auto which = std::make_shared<std::string>();
        auto max_n = std::make_shared<int>(-1);
        auto format = std::make_shared<std::string>("plain");
        auto bfile = std::make_shared<std::string>();
        sub->add_option("--which", *which, "arcsin | a296726 | a372324")->required();
        sub->add_option("--max-n", *max_n, "highest index to emit")->required();
        sub->add_option("--format", *format, "plain | csv | json");
        sub->add_option("--bfile", *bfile, "b-file to diff against");
        sub->callback([=, &action] {
            action = [=] { return cmd_egf(*which, *max_n, *format, *bfile); };
        });
    }

    // verify
    {
        auto* sub = app.add_subcommand("verify", "run a verification suite");
        auto suite = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("plain");
        sub->add_option("--suite", *suite, "identities | cq | egf | cross-method")
            ->required();
        sub->add_option("--format", *format, "plain | csv | json");
        sub->callback([=, &action] {
            action = [=] { return cmd_verify(*suite, *format); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
}
