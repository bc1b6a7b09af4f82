#include "cli.hpp"

#include "report.hpp"
#include "verify.hpp"

#include "circdet/coeff_engine.hpp"
#include "circdet/expansion.hpp"
#include "circdet/oracles.hpp"
#include "circdet/symmetry.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iomanip>
#include <stdexcept>

namespace circdet::cli {

namespace {

// Above these the brute-force oracles behind --check take too long to be useful.
constexpr int kCheckPermutationCap = 10;
constexpr int kCheckLeibnizCap = 8;

struct Flags {
    std::string format;
    std::string strategy = "reduced";
    bool include_zeros = false;
    bool check = false;
    bool mult = false;
    bool zero_criterion = false;
    bool no_reduce = false;
    std::string suite = "all";
    int jobs = 1;
    int max_n = kExpandCap;
};

void require_dimension(int N, int max_n) {
    if (N < 1 || N > max_n)
        throw std::invalid_argument("N=" + std::to_string(N) + " outside [1, " + std::to_string(max_n) + "]");
}

Format format_or(const Flags& f, Format fallback) { return f.format.empty() ? fallback : parse_format(f.format); }

int cmd_coeff(int N, const std::string& input, const Flags& f, std::ostream& out) {
    std::vector<int> values = parse_int_list(input);
    IndexSet a = f.mult ? MultiplicityVector(values).to_index_set() : IndexSet(N, values);
    if (a.N() != N) throw std::invalid_argument("multiplicity vector has length " + std::to_string(a.N()) + ", N=" + std::to_string(N));

    CoeffOptions opts{.zero_short_circuit = f.zero_criterion, .reduce = !f.no_reduce};
    CoeffResult result = coefficient_detailed(a, opts);

    std::vector<CoeffCheck> checks;
    if (f.check) {
        auto add = [&](std::string name, BigInt v) { checks.push_back({std::move(name), v, v == result.value}); };
        add("unreduced", coefficient(a, CoeffOptions{.zero_short_circuit = false, .reduce = false}));
        if (N <= kCheckPermutationCap) {
            add("kmod", coeff_via_theorem2(a));
            add("labeled-partitions", coeff_eq10d(a));
        }
        if (N <= kCheckLeibnizCap) add("leibniz", leibniz_expansion(N).coefficient(a.to_multiplicities()));
    }
    write_coefficient(out, a, result, checks, format_or(f, Format::Text));
    for (const auto& c : checks)
        if (!c.agrees) return kOracleMismatch;
    return kOk;
}

int cmd_expand(int N, const Flags& f, std::ostream& out) {
    require_dimension(N, f.max_n);
    Format fmt = format_or(f, Format::Json);
    Strategy strategy = parse_strategy(f.strategy);
    ExpansionPolynomial poly = expand(N, strategy, f.jobs, f.max_n);
    Classification cls{N, {}, {}};
    if (fmt == Format::Text) cls = classify(N, f.jobs);
    write_polynomial(out, poly, cls, fmt, f.include_zeros);
    return kOk;
}

int cmd_multiplets(int N, const Flags& f, std::ostream& out) {
    require_dimension(N, f.max_n);
    write_multiplets(out, classify(N, f.jobs), format_or(f, Format::Text));
    return kOk;
}

int cmd_zeros(int N, const Flags& f, std::ostream& out) {
    require_dimension(N, f.max_n);
    ExpansionPolynomial poly = expand(N, parse_strategy(f.strategy), f.jobs, f.max_n);
    std::vector<ZeroEntry> zeros;
    for (const auto& [M, c] : poly.terms) {
        if (c != 0) continue;
        IndexSet a = M.to_index_set();
        zeros.push_back({a, zero_by_corollary6(a)});
    }
    // Anything the criterion predicts must show up as an actual zero.
    for (const auto& a : corollary6_family(N))
        if (poly.coefficient(a.to_multiplicities()) != 0)
            throw ArithmeticError("zero criterion predicts C_" + a.str() + " = 0, evaluation gives " +
                                  poly.coefficient(a.to_multiplicities()).str());
    write_zeros(out, N, zeros, format_or(f, Format::Text));
    return kOk;
}

int cmd_verify(const std::string& range, const Flags& f, std::ostream& out) {
    auto [lo, hi] = parse_range(range);
    require_dimension(lo, f.max_n);
    require_dimension(hi, f.max_n);
    std::vector<std::string> suites;
    if (f.suite == "all") {
        suites = suite_names();
    } else {
        if (std::find(suite_names().begin(), suite_names().end(), f.suite) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + f.suite + "'");
        suites = {f.suite};
    }
    Format fmt = format_or(f, Format::Text);
    nlohmann::json results = nlohmann::json::array();
    bool all_passed = true;
    for (const auto& suite : suites) {
        for (int N = lo; N <= hi; ++N) {
            SuiteOutcome r = run_suite(suite, N, f.jobs);
            if (fmt == Format::Json) {
                results.push_back(
                    {{"suite", r.suite}, {"N", r.N}, {"passed", r.passed}, {"skipped", r.skipped}, {"notes", r.notes}});
            } else if (fmt == Format::Csv) {
                if (results.empty()) out << "suite,N,status,notes\n";
                results.push_back(nullptr);
                out << r.suite << ',' << r.N << ',' << (r.skipped ? "skip" : r.passed ? "pass" : "FAIL") << ",\"";
                for (std::size_t i = 0; i < r.notes.size(); ++i) out << (i ? "; " : "") << r.notes[i];
                out << "\"\n";
            } else {
                out << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << ' ' << r.suite << " N=" << r.N << '\n';
                for (const auto& note : r.notes) out << "    " << note << '\n';
            }
            if (!r.passed) {
                all_passed = false;
                break;
            }
        }
        if (!all_passed) break;
    }
    if (fmt == Format::Json) out << nlohmann::json{{"passed", all_passed}, {"results", results}}.dump() << '\n';
    return all_passed ? kOk : kVerificationFailure;
}

int cmd_bench(const std::string& range, const Flags& f, std::ostream& out) {
    auto [lo, hi] = parse_range(range);
    require_dimension(lo, f.max_n);
    require_dimension(hi, f.max_n);
    using clock = std::chrono::steady_clock;
    auto seconds = [](clock::time_point start) { return std::chrono::duration<double>(clock::now() - start).count(); };

    out << "N,F,nonzero,direct_s,reduced_s,leibniz_s,kmod_q_s,per_coeff_us\n";
    out << std::fixed << std::setprecision(6);
    for (int N = lo; N <= hi; ++N) {
        auto t = clock::now();
        ExpansionPolynomial direct = expand(N, Strategy::Direct, f.jobs, f.max_n);
        double direct_s = seconds(t);
        t = clock::now();
        ExpansionPolynomial reduced = expand(N, Strategy::Reduced, f.jobs, f.max_n);
        double reduced_s = seconds(t);
        if (!(direct == reduced)) throw ArithmeticError("bench: direct and reduced expansions differ at N=" + std::to_string(N));

        out << N << ',' << direct.terms.size() << ',' << direct.nonzero_count() << ',' << direct_s << ',' << reduced_s
            << ',';
        if (N <= kLeibnizCap) {
            t = clock::now();
            leibniz_expansion(N, f.jobs);
            out << seconds(t);
        }
        out << ',';
        if (N <= 8) {
            t = clock::now();
            for (const auto& [M, c] : direct.terms) {
                IndexSet a = M.to_index_set();
                if (a.indices().back() >= 2) kmod_via_q(a);
            }
            out << seconds(t);
        }
        out << ',' << direct_s * 1e6 / static_cast<double>(direct.terms.size()) << '\n';
    }
    return kOk;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad range '" + text + "' (expected N or LO..HI)");
        return std::stoi(s);
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = to_int(text);
        return {n, n};
    }
    int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("bad range '" + text + "': empty");
    return {lo, hi};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact coefficients of the circulant determinant expansion", "circdet"};
    app.require_subcommand(1);
    Flags f;
    int N = 0;
    std::string indices, range;

    auto format_opt = [&](CLI::App* sub) {
        sub->add_option("--format", f.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto jobs_opt = [&](CLI::App* sub) { sub->add_option("--jobs,-j", f.jobs, "worker threads")->check(CLI::Range(1, 256)); };
    auto cap_opt = [&](CLI::App* sub) { sub->add_option("--max-n", f.max_n, "largest N accepted")->check(CLI::Range(1, 16)); };

    auto* coeff = app.add_subcommand("coeff", "one coefficient, with the formula path used");
    coeff->add_option("N", N)->required();
    coeff->add_option("indices", indices, "comma-separated indices, or multiplicities with --mult")->required();
    coeff->add_flag("--mult", f.mult, "read the second argument as a multiplicity vector");
    coeff->add_flag("--check", f.check, "compare against the brute-force oracles");
    coeff->add_flag("--zero-criterion", f.zero_criterion, "return 0 early for structurally zero coefficients");
    coeff->add_flag("--no-reduce", f.no_reduce, "skip the symmetry reduction");
    format_opt(coeff);

    auto* exp = app.add_subcommand("expand", "the full polynomial");
    exp->add_option("N", N)->required();
    exp->add_option("--strategy", f.strategy, "direct or reduced")
        ->check(CLI::IsMember({"direct", "reduced", "multiplet-reduced"}));
    exp->add_flag("--include-zeros", f.include_zeros, "keep zero coefficients in the output");
    format_opt(exp);
    jobs_opt(exp);
    cap_opt(exp);

    auto* mult = app.add_subcommand("multiplets", "additive and super multiplets with counts");
    mult->add_option("N", N)->required();
    format_opt(mult);
    jobs_opt(mult);
    cap_opt(mult);

    auto* zeros = app.add_subcommand("zeros", "vanishing coefficients, structural or accidental");
    zeros->add_option("N", N)->required();
    format_opt(zeros);
    jobs_opt(zeros);
    cap_opt(zeros);

    auto* verify = app.add_subcommand("verify", "run the verification suites over a range of N");
    verify->add_option("range", range, "N or LO..HI")->required();
    verify->add_option("--suite", f.suite, "oracle, symmetry, lemmas, counting, identities or all");
    format_opt(verify);
    jobs_opt(verify);
    cap_opt(verify);

    auto* bench = app.add_subcommand("bench", "timings per strategy as CSV");
    bench->add_option("range", range, "N or LO..HI")->required();
    jobs_opt(bench);
    cap_opt(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (coeff->parsed()) return cmd_coeff(N, indices, f, out);
        if (exp->parsed()) return cmd_expand(N, f, out);
        if (mult->parsed()) return cmd_multiplets(N, f, out);
        if (zeros->parsed()) return cmd_zeros(N, f, out);
        if (verify->parsed()) return cmd_verify(range, f, out);
        if (bench->parsed()) return cmd_bench(range, f, out);
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }
    return kUsageError;
}

}  // namespace circdet::cli
