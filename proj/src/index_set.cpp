#include "circdet/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace circdet {

namespace {

std::string join(const std::vector<int>& v, bool compact) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i && !compact) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

IndexSet::IndexSet(int N, std::vector<int> indices) : N_(N), idx_(std::move(indices)) {
    if (N < 1) throw std::invalid_argument("index set: N must be positive");
    if (static_cast<int>(idx_.size()) != N)
        throw std::invalid_argument("index set: expected " + std::to_string(N) + " indices, got " +
                                    std::to_string(idx_.size()));
    for (int a : idx_)
        if (a < 0 || a >= N)
            throw std::invalid_argument("index set: index " + std::to_string(a) +
                                        " outside [0, N-1]");
    std::sort(idx_.begin(), idx_.end());
}

std::vector<int> IndexSet::multiplicities() const {
    std::vector<int> M(N_, 0);
    for (int a : idx_) ++M[a];
    return M;
}

int IndexSet::multiplicity(int value) const {
    return static_cast<int>(std::count(idx_.begin(), idx_.end(), value));
}

long IndexSet::trace() const { return std::accumulate(idx_.begin(), idx_.end(), 0L); }

MultiplicityVector IndexSet::to_multiplicities() const { return MultiplicityVector(multiplicities()); }

std::string IndexSet::str() const { return join(idx_, N_ <= 10); }

MultiplicityVector::MultiplicityVector(std::vector<int> counts) : M_(std::move(counts)) {
    if (M_.empty()) throw std::invalid_argument("multiplicity vector: empty");
    long total = 0;
    for (int m : M_) {
        if (m < 0) throw std::invalid_argument("multiplicity vector: negative count");
        total += m;
    }
    if (total != static_cast<long>(M_.size()))
        throw std::invalid_argument("multiplicity vector: counts must sum to N=" +
                                    std::to_string(M_.size()));
}

bool MultiplicityVector::weighted_sum_vanishes() const {
    long s = 0;
    for (std::size_t m = 0; m < M_.size(); ++m) s += static_cast<long>(m) * M_[m];
    return s % static_cast<long>(M_.size()) == 0;
}

IndexSet MultiplicityVector::to_index_set() const {
    std::vector<int> idx;
    for (std::size_t m = 0; m < M_.size(); ++m) idx.insert(idx.end(), M_[m], static_cast<int>(m));
    return IndexSet(N(), std::move(idx));
}

std::string MultiplicityVector::str() const {
    bool compact = std::all_of(M_.begin(), M_.end(), [](int m) { return m < 10; });
    return join(M_, compact);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty entry in list '" + text + "'");
        tok = tok.substr(b, e - b + 1);
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

}  // namespace circdet
