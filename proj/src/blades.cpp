#include "ga/blades.hpp"

namespace ga {

Sign alpha(const IndexSet& h, const IndexSet& j) {
    // For each j-element, the inverted pairs are the h-elements above it.
    const auto& hv = h.indices();
    std::size_t pos = 0;
    std::uint64_t inversions = 0;
    for (std::uint32_t je : j) {
        while (pos < hv.size() && hv[pos] <= je) ++pos;
        inversions += hv.size() - pos;
    }
    return Sign::from_parity(inversions % 2 != 0);
}

} // namespace ga
