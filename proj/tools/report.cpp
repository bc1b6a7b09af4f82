#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace circdet::cli {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

json polynomial_json(const ExpansionPolynomial& poly, bool include_zeros) {
    json terms = json::array();
    for (const auto& [M, c] : poly.terms) {
        if (c == 0 && !include_zeros) continue;
        terms.push_back(json{{"M", M.counts()}, {"coeff", c.str()}});
    }
    return json{{"N", poly.N}, {"terms", terms}};
}

namespace {

std::string variable(int N, int m) {
    if (N <= 26) return std::string(1, static_cast<char>('A' + m));
    return "x" + std::to_string(m);
}

std::string monomial(const MultiplicityVector& M) {
    std::string s;
    for (int m = 0; m < M.N(); ++m) {
        if (!M[m]) continue;
        s += variable(M.N(), m);
        if (M[m] > 1) s += "^" + std::to_string(M[m]);
    }
    return s;
}

std::string csv_vector(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::vector<int> sorted_parts(const MultiplicityVector& M) {
    std::vector<int> parts;
    for (int c : M.counts())
        if (c) parts.push_back(c);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

// Tables list each additive multiplet under its lexicographically largest
// member (600000 rather than 000006), with the value taken at that member.
const MultipletMember& display_member(const MultipletRecord& rec) {
    return *std::max_element(rec.members.begin(), rec.members.end(),
                             [](const MultipletMember& x, const MultipletMember& y) { return x.M < y.M; });
}

std::string multiplet_label(const MultipletRecord& rec) {
    std::string s = "{C*_" + display_member(rec).M.str() + "}";
    if (rec.n != rec.representative.N()) s += "_" + std::to_string(rec.n);
    return s;
}

// Largest exponents first, then lexicographically decreasing: A^3, B^3, C^3, ABC.
bool display_before(const MultiplicityVector& x, const MultiplicityVector& y) {
    auto px = sorted_parts(x), py = sorted_parts(y);
    if (px != py) return px > py;
    return x > y;
}

// Additive multiplets grouped under their super-multiplet, supers grouped by
// partition in the order largest part first.
std::vector<std::pair<const MultipletRecord*, std::vector<const MultipletRecord*>>> grouped(const Classification& cls) {
    std::map<MultiplicityVector, const MultipletRecord*> additive_by_member;
    for (const auto& add : cls.additive)
        for (const auto& mem : add.members) additive_by_member[mem.M] = &add;
    std::vector<std::pair<const MultipletRecord*, std::vector<const MultipletRecord*>>> out;
    for (const auto& sup : cls.super) {
        std::vector<const MultipletRecord*> adds;
        for (const auto& mem : sup.members) {
            const MultipletRecord* a = additive_by_member.at(mem.M);
            if (std::find(adds.begin(), adds.end(), a) == adds.end()) adds.push_back(a);
        }
        std::sort(adds.begin(), adds.end(),
                  [](const MultipletRecord* x, const MultipletRecord* y) { return display_member(*x).M > display_member(*y).M; });
        out.emplace_back(&sup, std::move(adds));
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        auto px = sorted_parts(x.first->representative), py = sorted_parts(y.first->representative);
        if (px != py) return px > py;
        return display_member(*x.second.front()).M > display_member(*y.second.front()).M;
    });
    return out;
}

}  // namespace

std::string partition_label(const MultiplicityVector& M) {
    std::string s;
    auto parts = sorted_parts(M);
    bool wide = std::any_of(parts.begin(), parts.end(), [](int p) { return p > 9; });
    for (std::size_t i = 0; i < parts.size(); ++i) s += (wide && i ? "," : "") + std::to_string(parts[i]);
    return s;
}

std::string coefficient_form(const MultiplicityVector& M) {
    auto parts = sorted_parts(M);
    std::string s = "C_{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        char symbol = i == 0 ? '0' : static_cast<char>('a' + i - 1);
        s += std::string(parts[i], symbol);
    }
    return s + "}";
}

std::string polynomial_line(const ExpansionPolynomial& poly) {
    std::ostringstream os;
    os << "det[";
    for (int m = 0; m < poly.N; ++m) os << (m ? "," : "") << variable(poly.N, m);
    os << "] =";
    std::vector<std::pair<MultiplicityVector, BigInt>> ordered;
    for (const auto& [M, c] : poly.terms)
        if (c != 0) ordered.emplace_back(M, c);
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return display_before(x.first, y.first); });
    bool first = true;
    for (const auto& [M, c] : ordered) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? " -" : " ");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1) os << mag;
        os << monomial(M);
        first = false;
    }
    if (first) os << " 0";
    return os.str();
}

void write_polynomial(std::ostream& os, const ExpansionPolynomial& poly, const Classification& cls, Format fmt,
                      bool include_zeros) {
    switch (fmt) {
        case Format::Json:
            os << polynomial_json(poly, include_zeros).dump() << '\n';
            return;
        case Format::Csv:
            os << "M,coeff\n";
            for (const auto& [M, c] : poly.terms)
                if (c != 0 || include_zeros) os << csv_vector(M.counts()) << ',' << c << '\n';
            return;
        case Format::Text: {
            os << polynomial_line(poly) << '\n';
            os << "N=" << poly.N << " (" << cls.super.size() << " super-multiplets, " << poly.nonzero_count()
               << " nonzero terms of " << poly.terms.size() << ")\n";
            os << std::left << std::setw(12) << "partition" << std::setw(16) << "form" << std::setw(28) << "multiplet"
               << "value\n";
            for (const auto& [sup, adds] : grouped(cls)) {
                for (const MultipletRecord* add : adds) {
                    os << std::setw(12) << partition_label(sup->representative) << std::setw(16)
                       << coefficient_form(sup->representative) << std::setw(28) << multiplet_label(*add)
                       << display_member(*add).sign * add->value
                       << '\n';
                }
            }
            return;
        }
    }
}

void write_multiplets(std::ostream& os, const Classification& cls, Format fmt) {
    const int N = cls.N;
    BigInt F = count_solutions_F(N);
    BigInt g_total = 0;
    for (int n = 1; n <= N; ++n) g_total += additive_multiplet_count_g(N, n);
    std::optional<BigInt> n_sm;
    if (is_odd_prime(N) || (N % 2 == 0 && is_odd_prime(N / 2))) n_sm = supermultiplet_count(N);

    auto kind_name = [](MultipletKind k) { return k == MultipletKind::Additive ? "additive" : "super"; };
    auto all = [&](auto&& f) {
        for (const auto& r : cls.additive) f(r);
        for (const auto& r : cls.super) f(r);
    };
    switch (fmt) {
        case Format::Json: {
            json records = json::array();
            all([&](const MultipletRecord& r) {
                json members = json::array();
                for (const auto& m : r.members) members.push_back(json{{"M", m.M.counts()}, {"sign", m.sign}});
                records.push_back(json{{"kind", kind_name(r.kind)},
                                       {"representative", r.representative.counts()},
                                       {"n", r.n},
                                       {"value", r.value.str()},
                                       {"members", members}});
            });
            json doc{{"N", N},
                     {"multiplets", records},
                     {"additive_count", cls.additive.size()},
                     {"super_count", cls.super.size()},
                     {"F", F.str()},
                     {"g_total", g_total.str()}};
            if (n_sm) doc["supermultiplet_formula"] = n_sm->str();
            os << doc.dump() << '\n';
            return;
        }
        case Format::Csv:
            os << "kind,representative,n,value\n";
            all([&](const MultipletRecord& r) {
                os << kind_name(r.kind) << ',' << csv_vector(r.representative.counts()) << ',' << r.n << ',' << r.value
                   << '\n';
            });
            return;
        case Format::Text:
            os << "N=" << N << ": " << cls.additive.size() << " additive multiplets, " << cls.super.size()
               << " super-multiplets\n";
            os << std::left << std::setw(10) << "kind" << std::setw(24) << "representative" << std::setw(6) << "n"
               << "value\n";
            all([&](const MultipletRecord& r) {
                os << std::setw(10) << kind_name(r.kind) << std::setw(24) << r.representative.str() << std::setw(6) << r.n
                   << r.value << '\n';
            });
            os << "F(N) = " << F << "; sum of g_N(n) = " << g_total;
            if (n_sm) os << "; super-multiplet formula = " << *n_sm;
            os << '\n';
            return;
    }
}

void write_zeros(std::ostream& os, int N, const std::vector<ZeroEntry>& zeros, Format fmt) {
    std::size_t family = std::count_if(zeros.begin(), zeros.end(), [](const ZeroEntry& z) { return z.corollary6; });
    std::size_t accidental = zeros.size() - family;
    switch (fmt) {
        case Format::Json: {
            json list = json::array();
            for (const auto& z : zeros)
                list.push_back(json{{"indices", z.indices.indices()},
                                    {"M", z.indices.multiplicities()},
                                    {"kind", z.corollary6 ? "structural" : "accidental"}});
            os << json{{"N", N}, {"zeros", list}, {"structural", family}, {"accidental", accidental}}.dump() << '\n';
            return;
        }
        case Format::Csv:
            os << "indices,M,kind\n";
            for (const auto& z : zeros)
                os << csv_vector(z.indices.indices()) << ',' << csv_vector(z.indices.multiplicities()) << ','
                   << (z.corollary6 ? "structural" : "accidental") << '\n';
            return;
        case Format::Text:
            for (const auto& z : zeros)
                os << "C_" << z.indices.str() << "  " << (z.corollary6 ? "structural" : "accidental") << '\n';
            os << "N=" << N << ": " << zeros.size() << " zero coefficients (" << family << " structural, " << accidental
               << " accidental)\n";
            return;
    }
}

void write_coefficient(std::ostream& os, const IndexSet& input, const CoeffResult& result,
                       const std::vector<CoeffCheck>& checks, Format fmt) {
    switch (fmt) {
        case Format::Json: {
            json doc{{"N", input.N()},
                     {"indices", input.indices()},
                     {"coeff", result.value.str()},
                     {"path", to_string(result.path)},
                     {"representative", result.evaluated.indices()},
                     {"sign", result.sign}};
            if (!checks.empty()) {
                json c = json::object();
                for (const auto& ch : checks) c[ch.oracle] = json{{"value", ch.value.str()}, {"agrees", ch.agrees}};
                doc["check"] = c;
            }
            os << doc.dump() << '\n';
            return;
        }
        case Format::Csv:
            os << "N,indices,coeff,path,representative,sign";
            for (const auto& ch : checks) os << ',' << ch.oracle;
            os << '\n'
               << input.N() << ',' << csv_vector(input.indices()) << ',' << result.value << ',' << to_string(result.path)
               << ',' << csv_vector(result.evaluated.indices()) << ',' << result.sign;
            for (const auto& ch : checks) os << ',' << ch.value;
            os << '\n';
            return;
        case Format::Text:
            os << "C_" << input.str() << " = " << result.value << '\n';
            os << "path: " << to_string(result.path) << '\n';
            os << "representative: C_" << result.evaluated.str() << " (sign " << (result.sign > 0 ? "+1" : "-1")
               << ")\n";
            for (const auto& ch : checks)
                os << "check " << ch.oracle << ": " << ch.value << (ch.agrees ? " (agrees)" : " (MISMATCH)") << '\n';
            return;
    }
}

}  // namespace circdet::cli
