#include "ga/index_set.hpp"

#include <algorithm>

#include "ga/error.hpp"

namespace ga {

namespace {

void validate_canonical(const std::vector<std::uint32_t>& indices) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] == 0)
            throw Error("index 0 is not allowed; indices start at 1");
        if (i > 0 && indices[i] <= indices[i - 1])
            throw Error("index set must be strictly increasing");
    }
}

} // namespace

IndexSet::IndexSet(std::vector<std::uint32_t> indices) : indices_(std::move(indices)) {
    validate_canonical(indices_);
}

IndexSet::IndexSet(std::initializer_list<std::uint32_t> indices)
    : IndexSet(std::vector<std::uint32_t>(indices)) {}

bool IndexSet::contains(std::uint32_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

IndexSet symdiff(const IndexSet& h, const IndexSet& j) {
    std::vector<std::uint32_t> out;
    out.reserve(h.size() + j.size());
    std::set_symmetric_difference(h.begin(), h.end(), j.begin(), j.end(),
                                  std::back_inserter(out));
    return IndexSet(std::move(out));
}

IndexSet intersection(const IndexSet& h, const IndexSet& j) {
    std::vector<std::uint32_t> out;
    std::set_intersection(h.begin(), h.end(), j.begin(), j.end(),
                          std::back_inserter(out));
    return IndexSet(std::move(out));
}

bool is_subset(const IndexSet& h, const IndexSet& k) {
    return std::includes(k.begin(), k.end(), h.begin(), h.end());
}

bool is_disjoint(const IndexSet& h, const IndexSet& j) {
    auto hi = h.begin();
    auto ji = j.begin();
    while (hi != h.end() && ji != j.end()) {
        if (*hi == *ji) return false;
        if (*hi < *ji)
            ++hi;
        else
            ++ji;
    }
    return true;
}

bool blade_less(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
}

std::pair<IndexSet, bool> normalize_indices(std::vector<std::uint32_t> indices) {
    // Parity by counting inversions; the tuples are tiny.
    bool odd = false;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t k = i + 1; k < indices.size(); ++k) {
            if (indices[i] == indices[k])
                throw Error("duplicate index " + std::to_string(indices[i]) +
                            " in blade");
            if (indices[i] > indices[k]) odd = !odd;
        }
    }
    std::sort(indices.begin(), indices.end());
    return {IndexSet(std::move(indices)), odd};
}

std::vector<IndexSet> subsets_in_blade_order(const std::vector<std::uint32_t>& indices) {
    const std::size_t n = indices.size();
    if (n >= 24)
        throw Error("refusing to enumerate 2^" + std::to_string(n) + " blades");
    std::vector<IndexSet> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::uint32_t> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) subset.push_back(indices[i]);
        out.emplace_back(std::move(subset));
    }
    std::sort(out.begin(), out.end(), blade_less);
    return out;
}

std::string to_string(const IndexSet& k) {
    std::string out = "e[";
    bool first = true;
    for (std::uint32_t i : k) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    out += ']';
    return out;
}

} // namespace ga
