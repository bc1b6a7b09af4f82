// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any fails.

#include "cli.hpp"
#include "reference_tables.hpp"

#include "circdet/coeff_engine.hpp"
#include "circdet/expansion.hpp"
#include "circdet/oracles.hpp"
#include "circdet/parallel.hpp"
#include "circdet/symmetry.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

using namespace circdet;

namespace {

const int kJobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

struct Check {
    bool ok = true;
    std::string detail;
    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

MultiplicityVector from_digits(const std::string& s) {
    std::vector<int> v;
    for (char c : s) v.push_back(c - '0');
    return MultiplicityVector(v);
}

// Parses "A^3 + B^3 - 3ABC" into exponent vectors over A, B, C, ...
std::map<MultiplicityVector, BigInt> parse_display(int N, const std::string& text) {
    std::map<MultiplicityVector, BigInt> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    while (true) {
        skip();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') sign = text[i++] == '-' ? -1 : 1;
        skip();
        long coeff = 0;
        bool has_coeff = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = coeff * 10 + (text[i++] - '0');
            has_coeff = true;
        }
        std::vector<int> e(N, 0);
        while (i < text.size() && std::isupper(static_cast<unsigned char>(text[i]))) {
            int var = text[i++] - 'A';
            int power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                power = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) power = power * 10 + (text[i++] - '0');
            }
            e[var] += power;
        }
        out[MultiplicityVector(e)] += sign * (has_coeff ? coeff : 1);
    }
    return out;
}

std::map<MultiplicityVector, BigInt> nonzero_terms(const ExpansionPolynomial& p) {
    std::map<MultiplicityVector, BigInt> out;
    for (const auto& [M, c] : p.terms)
        if (c != 0) out.emplace(M, c);
    return out;
}

const CoeffOptions kRaw{.zero_short_circuit = false, .reduce = false};

Check worked_example() {
    Check c;
    IndexSet a(10, {0, 0, 1, 1, 1, 1, 3, 7, 8, 8});
    c.expect(coeff_theorem3(a) == 200, "closed form gives " + coeff_theorem3(a).str());
    c.expect(coeff_eq10d(a) == 200, "labeled-partition sum gives " + coeff_eq10d(a).str());
    c.expect(coeff_via_theorem2(a) == 200, "k-mod counts give " + coeff_via_theorem2(a).str());
    c.expect(coefficient(a) == 200, "facade gives " + coefficient(a).str());
    return c;
}

Check sample_values() {
    Check c;
    for (auto [a, expected] : {std::pair{IndexSet(7, {0, 1, 2, 3, 4, 5, 6}), -105}, {IndexSet(8, {0, 0, 2, 2, 4, 4, 6, 6}), 56}}) {
        std::vector<std::pair<std::string, BigInt>> values{
            {"closed form", coeff_theorem3(a)},
            {"labeled-partition sum", coeff_eq10d(a)},
            {"k-mod counts", coeff_via_theorem2(a)},
            {"facade", coefficient(a)},
            {"Leibniz", leibniz_expansion(a.N(), kJobs).coefficient(a.to_multiplicities())}};
        for (const auto& [name, v] : values)
            c.expect(v == expected, "C_" + a.str() + " via " + name + " = " + v.str());
    }
    return c;
}

Check small_displays() {
    Check c;
    const std::vector<std::pair<int, std::string>> displays{
        {3, "A^3 + B^3 + C^3 - 3ABC"},
        {4, "A^4 - B^4 + C^4 - D^4 - 2A^2C^2 + 2B^2D^2 - 4A^2BD + 4AB^2C - 4BC^2D + 4ACD^2"},
        {5, "A^5 + B^5 + C^5 + D^5 + E^5"
            " - 5A^3BE - 5A^3CD - 5AB^3C - 5B^3DE - 5AC^3E - 5BC^3D - 5ABD^3 - 5CD^3E - 5ADE^3 - 5BCE^3"
            " + 5A^2B^2D + 5A^2BC^2 + 5A^2CE^2 + 5A^2D^2E + 5AB^2E^2 + 5AC^2D^2 + 5B^2C^2E + 5B^2CD^2 + 5BD^2E^2"
            " + 5C^2DE^2 - 5ABCDE"}};
    for (const auto& [N, text] : displays) {
        auto expected = parse_display(N, text);
        auto got = nonzero_terms(expand(N));
        c.expect(got == expected, "expand(" + std::to_string(N) + ") differs from the display (" +
                                      std::to_string(got.size()) + " vs " + std::to_string(expected.size()) + " terms)");
    }
    return c;
}

// Each tabulated value is the value of an additive multiplet. For even N the
// members of a multiplet carry alternating signs, so the value has to appear
// on some member; its magnitude must match the listed vector exactly.
Check multiplet_tables(std::string& info) {
    Check c;
    const std::map<int, std::pair<const std::vector<testing::TableEntry>*, std::size_t>> tables{
        {6, {&testing::table_n6(), 12}}, {7, {&testing::table_n7(), 12}}, {8, {&testing::table_n8(), 49}}};
    std::size_t entries = 0, exact = 0;
    for (const auto& [N, expected_counts] : tables) {
        auto poly = expand(N, Strategy::Reduced, kJobs);
        c.expect(poly == leibniz_expansion(N, kJobs), "expand(" + std::to_string(N) + ") differs from Leibniz");
        c.expect(classify(N, kJobs).super.size() == expected_counts.second, "super-multiplet count at N=" + std::to_string(N));
        for (const auto& row : *expected_counts.first) {
            ++entries;
            MultiplicityVector M = from_digits(row.M);
            BigInt at_listed = poly.coefficient(M);
            MultipletRecord add = additive_multiplet(M, false);
            bool on_member = false;
            for (const auto& mem : add.members) on_member |= poly.coefficient(mem.M) == row.value;
            c.expect(on_member, std::string("no member of {C*_") + row.M + "} has value " + std::to_string(row.value));
            c.expect(abs(at_listed) == std::abs(row.value),
                     std::string("|C*_") + row.M + "| = " + BigInt(abs(at_listed)).str() + ", table " + std::to_string(row.value));
            c.expect(add.members.size() == static_cast<std::size_t>(row.size ? row.size : N),
                     std::string("{C*_") + row.M + "} has " + std::to_string(add.members.size()) + " members");
            exact += at_listed == row.value;
        }
    }
    auto six = expand(6), eight = expand(8);
    c.expect(six.coefficient(from_digits("210201")) == 0 && six.coefficient(from_digits("211011")) == 0,
             "N=6 tabulated zeros");
    c.expect(eight.coefficient(from_digits("20202020")) == 56 && eight.coefficient(from_digits("21012101")) == 96,
             "N=8 annotated multiplets");
    info = std::to_string(entries) + " entries; " + std::to_string(exact) +
           " carry the tabulated sign at the listed vector itself, the rest on another member of the multiplet";
    return c;
}

Check oracle_sweep() {
    Check c;
    std::mutex mu;
    for (int N = 3; N <= 8; ++N) {
        auto keys = condition8_vectors(N);
        c.expect(BigInt(keys.size()) == count_solutions_F(N), "key count at N=" + std::to_string(N));
        ExpansionPolynomial brute = leibniz_expansion(N, kJobs);
        parallel_for(keys.size(), kJobs, [&](std::size_t i) {
            IndexSet a = keys[i].to_index_set();
            BigInt closed = coefficient(a, kRaw), via_kmod = coeff_via_theorem2(a), via_leibniz = brute.coefficient(keys[i]);
            if (closed != via_kmod || closed != via_leibniz) {
                std::lock_guard lock(mu);
                c.expect(false, "C_" + a.str() + ": closed form " + closed.str() + ", k-mod " + via_kmod.str() +
                                    ", Leibniz " + via_leibniz.str());
            }
        });
        for (const auto& [M, v] : brute.terms)
            c.expect(v == 0 || M.weighted_sum_vanishes(), "Leibniz term outside the candidate keys: " + M.str());
    }
    return c;
}

Check zero_criteria() {
    Check c;
    for (auto [N, expected] : {std::pair{6, 12}, {10, 120}}) {
        std::vector<std::string> args{"circdet", "zeros", std::to_string(N), "--format", "json"};
        std::vector<const char*> argv;
        for (const auto& s : args) argv.push_back(s.c_str());
        std::ostringstream out, err;
        int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        c.expect(code == 0, "zeros " + std::to_string(N) + " exited " + std::to_string(code) + ": " + err.str());
        if (code != 0) continue;
        auto doc = nlohmann::json::parse(out.str());
        c.expect(doc["structural"] == expected, "zeros " + std::to_string(N) + ": " + doc["structural"].dump() +
                                                    " of the structural form");
        c.expect(corollary6_family(N).size() == static_cast<std::size_t>(expected), "family size");
        std::vector<IndexSet> reported;
        for (const auto& z : doc["zeros"]) reported.emplace_back(N, z["indices"].get<std::vector<int>>());
        std::mutex mu;
        parallel_for(reported.size(), kJobs, [&](std::size_t i) {
            const IndexSet& a = reported[i];
            bool zero = coefficient(a, kRaw) == 0 && coeff_eq10d(a) == 0 && coeff_via_theorem2(a) == 0;
            if (!zero) {
                std::lock_guard lock(mu);
                c.expect(false, "reported zero C_" + a.str() + " does not evaluate to 0");
            }
        });
    }
    return c;
}

Check counting() {
    Check c;
    for (int N = 1; N <= 10; ++N) {
        c.expect(count_solutions_F(N) == enumerate_condition8_count(N), "F(" + std::to_string(N) + ")");
        BigInt g_total = 0;
        for (int n = 1; n <= N; ++n) g_total += additive_multiplet_count_g(N, n);
        c.expect(g_total == enumerate_orbit_count(N, true), "sum of g_N(n) at N=" + std::to_string(N));
        c.expect(g_total == classify(N, kJobs).additive.size(), "additive multiplets found by classify at N=" + std::to_string(N));
        if (N == 5) c.expect(g_total == 6, "six additive multiplets at N=5");
    }
    c.expect(supermultiplet_count(5) == 4, "super-multiplets at N=5");
    c.expect(supermultiplet_count(6) == 12, "super-multiplets at N=6");
    c.expect(supermultiplet_count(7) == 12, "super-multiplets at N=7");
    for (int N : {10, 14})
        c.expect(supermultiplet_count(N) == enumerate_orbit_count(N, false),
                 "super-multiplet formula vs enumeration at N=" + std::to_string(N));
    return c;
}

Check symmetry_covariance() {
    Check c;
    for (int N = 1; N <= 7; ++N) {
        auto keys = condition8_vectors(N);
        std::map<MultiplicityVector, BigInt> value;
        for (const auto& M : keys) value[M] = coefficient(M.to_index_set(), kRaw);
        for (const auto& M : keys) {
            c.expect(value[M] % divisibility_bound(M.to_index_set()) == 0, "divisibility of C*_" + M.str());
            for (const auto& g : group_elements(N)) {
                MultiplicityVector image = act(g, M);
                c.expect(value.at(image) == g.sign() * value[M],
                         "(" + std::to_string(g.shift) + "," + std::to_string(g.multiplier) + ") on C*_" + M.str());
            }
        }
    }
    return c;
}

Check lemmas() {
    Check c;
    for (int N = 2; N <= 8; ++N)
        for (unsigned mask = 0; mask < (1u << (N - 1)); ++mask) {
            std::vector<int> q;
            for (int i = 0; i < N - 1; ++i)
                if (mask & (1u << i)) q.push_back(i + 1);
            c.expect(lemma1_check(N, q, N), "series lemma N=" + std::to_string(N) + " mask " + std::to_string(mask));
        }
    for (int p = 1; p <= 4; ++p) c.expect(lemma2_check(p, 4, 50), "symmetric-sum lemma p=" + std::to_string(p));
    for (int p = 0; p <= 7; ++p) c.expect(lemma3_check(p), "partition-weight lemma p=" + std::to_string(p));
    for (int m = 1; m <= 6; ++m)
        for (int X = 0; X <= 24; ++X)
            c.expect(lemma6_check(m, X), "alternating binomial lemma m=" + std::to_string(m) + " X=" + std::to_string(X));
    return c;
}

Check global_identities() {
    Check c;
    for (int N = 1; N <= 9; ++N) {
        auto poly = expand(N, Strategy::Reduced, kJobs);
        // det[1] = 1: the all-ones identity starts at N = 3.
        if (N % 2 == 1 && N >= 3)
            c.expect(evaluate(poly, std::vector<long>(N, 1)) == 0, "det[1,...,1] at N=" + std::to_string(N));
        std::vector<long> x(N, 1);
        x[0] = 0;
        c.expect(evaluate(poly, x) == (N % 2 ? 1 : -1) * (N - 1), "det[0,1,...,1] at N=" + std::to_string(N));
    }
    for (auto [N, d] : {std::pair{4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}})
        c.expect(power_identity_check(N, d, kJobs), "power identity N=" + std::to_string(N) + " d=" + std::to_string(d));
    return c;
}

Check eigenvalues() {
    Check c;
    c.expect(evaluate(expand(4), std::vector<long>{1, 2, 3, 4}) == -160, "det[1,2,3,4]");
    c.expect(std::abs(eigenvalue_det({1, 2, 3, 4}).real() + 160) < 1e-6, "eigenvalue product of (1,2,3,4)");
    std::mt19937_64 rng(1618);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int N = 1; N <= 8; ++N) {
        auto poly = expand(N);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<long> x(N);
            std::vector<std::complex<double>> xc(N);
            for (int m = 0; m < N; ++m) xc[m] = static_cast<double>(x[m] = dist(rng));
            double exact = static_cast<double>(evaluate(poly, x));
            double approx = eigenvalue_det(xc).real();
            c.expect(std::abs(exact - approx) <= 1e-6 * std::max(1.0, std::abs(exact)),
                     "N=" + std::to_string(N) + ": exact " + std::to_string(exact) + ", eigenvalues " + std::to_string(approx));
        }
    }
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Check(std::string&)> run;
    };
    auto plain = [](Check (*f)()) { return [f](std::string&) { return f(); }; };
    const std::vector<Criterion> criteria{
        {1, "worked example C_0011113788 = 200 on three paths", 1, plain(worked_example)},
        {2, "C_0123456 = -105 and C_00224466 = 56 on every path", 1, plain(sample_values)},
        {3, "expand(3..5) match the small displays term for term", 1, plain(small_displays)},
        {4, "N = 6, 7, 8 multiplet tables", 30, multiplet_tables},
        {5, "closed form = Leibniz = k-mod counts, every key, 3 <= N <= 8", 120, plain(oracle_sweep)},
        {6, "12 structural zeros at N=6, 120 at N=10, all evaluate to 0", 60, plain(zero_criteria)},
        {7, "counting formulas against enumeration", 60, plain(counting)},
        {8, "sign law under shifts and multipliers, divisibility, N <= 7", 60, plain(symmetry_covariance)},
        {9, "auxiliary lemma identities", 30, plain(lemmas)},
        {10, "det[1..1], det[0,1..1] and spaced-power identities", 30, plain(global_identities)},
        {11, "exact evaluation vs eigenvalue product, 100 vectors per N <= 8", 60, plain(eigenvalues)},
    };
    int failures = 0;
    for (const auto& cr : criteria) {
        std::string info;
        auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = cr.run(info);
        } catch (const std::exception& e) {
            result.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (result.ok && secs > cr.budget_s)
            result.expect(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(cr.budget_s) + " s");
        failures += !result.ok;
        std::printf("%s  criterion %2d  %-62s %8.3f s\n", result.ok ? "PASS" : "FAIL", cr.id, cr.name, secs);
        if (!result.ok) std::printf("      first failure: %s\n", result.detail.c_str());
        if (!info.empty()) std::printf("      %s\n", info.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
