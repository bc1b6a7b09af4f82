#include "circdet/partitions.hpp"

#include "circdet/exactmath.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace circdet {

int IntegerPartition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, int p,
                    std::vector<IntegerPartition>& out) {
    if (remaining == 0) {
        IntegerPartition ip;
        ip.parts = cur;
        ip.multiplicities.assign(p, 0);
        for (int z : cur) ++ip.multiplicities[z - 1];
        out.push_back(std::move(ip));
        return;
    }
    for (int z = std::min(remaining, max_part); z >= 1; --z) {
        cur.push_back(z);
        partitions_rec(remaining - z, z, cur, p, out);
        cur.pop_back();
    }
}

// Multiset partitions over count vectors. Parts are emitted in non-increasing
// lexicographic order of their count vectors; each new part must contain the
// smallest remaining value, which makes the enumeration duplicate free and
// free of dead ends.
class MultisetPartitioner {
public:
    MultisetPartitioner(const std::vector<int>& sorted,
                        const std::function<void(const SetPartition&)>& visit)
        : visit_(visit) {
        for (int v : sorted) {
            if (values_.empty() || values_.back() != v) {
                values_.push_back(v);
                counts_.push_back(0);
            }
            ++counts_.back();
        }
    }

    void run() {
        std::vector<int> remaining = counts_;
        recurse(remaining);
    }

private:
    void recurse(std::vector<int>& remaining) {
        const std::size_t r = values_.size();
        std::size_t i0 = 0;
        while (i0 < r && remaining[i0] == 0) ++i0;
        if (i0 == r) {
            emit();
            return;
        }
        std::vector<int> part(r, 0);
        // copy: chosen_ grows during the recursion below
        const std::vector<int> prev = chosen_.empty() ? std::vector<int>{} : chosen_.back();
        // part is zero below i0, so it stays tight only if prev is too
        bool tight = !prev.empty() && std::all_of(prev.begin(), prev.begin() + i0, [](int c) { return c == 0; });
        choose(remaining, part, i0, i0, tight, prev);
    }

    // Fill part[i..] in decreasing order; `tight` means part[..i) equals prev[..i).
    void choose(std::vector<int>& remaining, std::vector<int>& part, std::size_t i0,
                std::size_t i, bool tight, const std::vector<int>& prev) {
        const std::size_t r = values_.size();
        if (i == r) {
            chosen_.push_back(part);
            for (std::size_t t = 0; t < r; ++t) remaining[t] -= part[t];
            recurse(remaining);
            for (std::size_t t = 0; t < r; ++t) remaining[t] += part[t];
            chosen_.pop_back();
            return;
        }
        int hi = remaining[i];
        if (tight) hi = std::min(hi, prev[i]);
        int lo = (i == i0) ? 1 : 0;
        for (int c = hi; c >= lo; --c) {
            part[i] = c;
            bool still_tight = tight && c == prev[i];
            choose(remaining, part, i0, i + 1, still_tight, prev);
        }
        part[i] = 0;
    }

    void emit() {
        SetPartition sp;
        for (const auto& cv : chosen_) {
            std::vector<int> elems;
            for (std::size_t t = 0; t < cv.size(); ++t) elems.insert(elems.end(), cv[t], values_[t]);
            if (!sp.parts.empty() && sp.parts.back().elements == elems)
                ++sp.parts.back().copies;
            else
                sp.parts.push_back(Part{std::move(elems), 1});
        }
        std::sort(sp.parts.begin(), sp.parts.end(), [](const Part& a, const Part& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a.elements < b.elements;
        });
        visit_(sp);
    }

    const std::function<void(const SetPartition&)>& visit_;
    std::vector<int> values_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> chosen_;
};

void labeled_rec(int i, int p, std::vector<std::vector<int>>& blocks,
                 const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (i == p) {
        visit(blocks);
        return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b].push_back(i);
        labeled_rec(i + 1, p, blocks, visit);
        blocks[b].pop_back();
    }
    blocks.push_back({i});
    labeled_rec(i + 1, p, blocks, visit);
    blocks.pop_back();
}

}  // namespace

std::vector<IntegerPartition> integer_partitions(int p) {
    if (p < 0) throw std::invalid_argument("integer_partitions: negative p");
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    partitions_rec(p, p, cur, p, out);
    return out;
}

long Part::trace() const { return std::accumulate(elements.begin(), elements.end(), 0L); }

std::vector<std::pair<int, int>> Part::element_multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (int v : elements) {
        if (out.empty() || out.back().first != v)
            out.emplace_back(v, 1);
        else
            ++out.back().second;
    }
    return out;
}

int SetPartition::block_count() const {
    int j = 0;
    for (const auto& part : parts) j += part.copies;
    return j;
}

std::vector<int> SetPartition::block_sizes() const {
    std::vector<int> z;
    for (const auto& part : parts) z.insert(z.end(), part.copies, part.size());
    std::sort(z.rbegin(), z.rend());
    return z;
}

std::vector<int> SetPartition::elements() const {
    std::vector<int> all;
    for (const auto& part : parts)
        for (int c = 0; c < part.copies; ++c) all.insert(all.end(), part.elements.begin(), part.elements.end());
    std::sort(all.begin(), all.end());
    return all;
}

void for_each_multiset_partition(std::vector<int> elements,
                                 const std::function<void(const SetPartition&)>& visit) {
    std::sort(elements.begin(), elements.end());
    MultisetPartitioner(elements, visit).run();
}

std::vector<SetPartition> multiset_partitions(std::vector<int> elements) {
    std::vector<SetPartition> out;
    for_each_multiset_partition(std::move(elements), [&](const SetPartition& sp) { out.push_back(sp); });
    return out;
}

int part_residue(const std::vector<int>& theta, int N) {
    long tr = std::accumulate(theta.begin(), theta.end(), 0L);
    return static_cast<int>(mod(-tr, N));
}

void for_each_labeled_partition(int p,
                                const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (p < 0) throw std::invalid_argument("labeled partitions: negative p");
    std::vector<std::vector<int>> blocks;
    labeled_rec(0, p, blocks, visit);
}

}  // namespace circdet
