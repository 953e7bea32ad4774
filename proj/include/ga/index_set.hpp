#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ga {

/// A canonical finite subset K of the index set M = {1, 2, ...}, naming the
/// basis blade e_K. Stored strictly increasing; the empty set names the unit.
class IndexSet {
public:
    IndexSet() = default;
    /// Indices must be strictly increasing positive integers; throws Error.
    explicit IndexSet(std::vector<std::uint32_t> indices);
    IndexSet(std::initializer_list<std::uint32_t> indices);

    static IndexSet single(std::uint32_t i) { return IndexSet({i}); }

    const std::vector<std::uint32_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    bool contains(std::uint32_t i) const;

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    bool operator==(const IndexSet&) const = default;

private:
    std::vector<std::uint32_t> indices_;
};

IndexSet symdiff(const IndexSet& h, const IndexSet& j);
IndexSet intersection(const IndexSet& h, const IndexSet& j);
bool is_subset(const IndexSet& h, const IndexSet& k);
bool is_disjoint(const IndexSet& h, const IndexSet& j);

/// Canonical term order: grade first, then lexicographic index sequence.
bool blade_less(const IndexSet& a, const IndexSet& b);

struct BladeOrder {
    bool operator()(const IndexSet& a, const IndexSet& b) const {
        return blade_less(a, b);
    }
};

/// Sorts an arbitrary index tuple into a canonical set. Returns the set and
/// whether the sorting permutation is odd (blade sign flips). Duplicate or
/// zero indices throw Error.
std::pair<IndexSet, bool> normalize_indices(std::vector<std::uint32_t> indices);

/// All subsets of the given (sorted, distinct) indices in canonical blade
/// order. The caller keeps the universe small; 2^n sets are materialized.
std::vector<IndexSet> subsets_in_blade_order(const std::vector<std::uint32_t>& indices);

/// "e[1,2]"; the empty set renders as "e[]" (multivector rendering never
/// emits it, the unit blade prints as a bare scalar there).
std::string to_string(const IndexSet& k);

} // namespace ga
