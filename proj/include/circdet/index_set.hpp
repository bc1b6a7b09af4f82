#pragma once

#include <compare>
#include <string>
#include <vector>

namespace circdet {

class MultiplicityVector;

// Sorted multiset of N subscripts a_0 <= ... <= a_{N-1}, each in [0, N-1].
class IndexSet {
public:
    IndexSet(int N, std::vector<int> indices);

    int N() const { return N_; }
    const std::vector<int>& indices() const { return idx_; }
    int operator[](std::size_t i) const { return idx_[i]; }

    // M_m for m = 0..N-1
    std::vector<int> multiplicities() const;
    int multiplicity(int value) const;
    long trace() const;
    bool all_equal() const { return idx_.front() == idx_.back(); }

    MultiplicityVector to_multiplicities() const;
    std::string str() const;  // e.g. "0011113788" or "0,1,10,11" when N > 10

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
    int N_;
    std::vector<int> idx_;
};

// Exponent form [M_0, ..., M_{N-1}] with sum N.
class MultiplicityVector {
public:
    MultiplicityVector(std::vector<int> counts);

    int N() const { return static_cast<int>(M_.size()); }
    const std::vector<int>& counts() const { return M_; }
    int operator[](std::size_t i) const { return M_[i]; }

    // Sum of m * M_m mod N == 0.
    bool weighted_sum_vanishes() const;

    IndexSet to_index_set() const;
    std::string str() const;

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
    friend auto operator<=>(const MultiplicityVector&, const MultiplicityVector&) = default;

private:
    std::vector<int> M_;
};

// Parses "0,0,1,2" style input.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace circdet
