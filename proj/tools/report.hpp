#pragma once

#include "circdet/coeff_engine.hpp"
#include "circdet/polynomial.hpp"
#include "circdet/symmetry.hpp"

#include "json.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace circdet::cli {

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& name);

// {"N":<int>,"terms":[{"M":[...],"coeff":"<decimal>"}...]}, terms in
// lexicographic order of M, zero coefficients dropped unless requested.
nlohmann::json polynomial_json(const ExpansionPolynomial& poly, bool include_zeros);

// Single-line polynomial with variables A, B, C, ... (x0, x1, ... past 26).
std::string polynomial_line(const ExpansionPolynomial& poly);

void write_polynomial(std::ostream& os, const ExpansionPolynomial& poly, const Classification& cls,
                      Format fmt, bool include_zeros);

void write_multiplets(std::ostream& os, const Classification& cls, Format fmt);

struct ZeroEntry {
    IndexSet indices;
    bool corollary6;
};
void write_zeros(std::ostream& os, int N, const std::vector<ZeroEntry>& zeros, Format fmt);

struct CoeffCheck {
    std::string oracle;
    BigInt value;
    bool agrees;
};
void write_coefficient(std::ostream& os, const IndexSet& input, const CoeffResult& result,
                       const std::vector<CoeffCheck>& checks, Format fmt);

// "aab" style shape label of a multiplicity vector: the most frequent index
// becomes 0, the rest a, b, c, ... by decreasing multiplicity.
std::string coefficient_form(const MultiplicityVector& M);
// Multiplicities sorted in decreasing order, nonzero only: "4211".
std::string partition_label(const MultiplicityVector& M);

}  // namespace circdet::cli
