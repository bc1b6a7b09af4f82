#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace circdet {

struct IntegerPartition {
    std::vector<int> parts;           // z_1 >= z_2 >= ... >= z_j >= 1
    std::vector<int> multiplicities;  // multiplicities[i-1] = number of parts equal to i, size p

    int total() const;
};

// All partitions of p, largest parts first. p = 0 yields one empty partition.
std::vector<IntegerPartition> integer_partitions(int p);

// One distinct part of a multiset partition, together with how many identical
// copies of it the partition contains.
struct Part {
    std::vector<int> elements;  // sorted
    int copies = 1;

    int size() const { return static_cast<int>(elements.size()); }
    long trace() const;
    // (value, multiplicity inside this part), ascending by value
    std::vector<std::pair<int, int>> element_multiplicities() const;
};

struct SetPartition {
    std::vector<Part> parts;  // distinct parts, descending by size then lexicographic

    int block_count() const;               // j, counting copies
    std::vector<int> block_sizes() const;  // z_1 >= ... >= z_j
    std::vector<int> elements() const;     // disjoint union, sorted
};

// Every partition of the multiset `elements` into nonempty sub-multisets,
// each listed once. Empty input yields the single empty partition.
std::vector<SetPartition> multiset_partitions(std::vector<int> elements);

void for_each_multiset_partition(std::vector<int> elements,
                                 const std::function<void(const SetPartition&)>& visit);

// -Tr(theta) mod N in [0, N-1].
int part_residue(const std::vector<int>& theta, int N);

// Partitions of the labels {0..p-1} (restricted growth strings).
void for_each_labeled_partition(int p,
                                const std::function<void(const std::vector<std::vector<int>>&)>& visit);

}  // namespace circdet
