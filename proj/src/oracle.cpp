#include "ga/oracle.hpp"

namespace ga::oracle {

Sign alpha_bruteforce(const IndexSet& h, const IndexSet& j) {
    std::uint64_t count = 0;
    for (std::uint32_t hi : h)
        for (std::uint32_t ji : j)
            if (ji < hi) ++count;
    return Sign::from_parity(count % 2 != 0);
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    for (const auto& row : rows)
        if (row.size() != cols) throw Error("rank: rows of unequal length");

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            Rational factor = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[i][k] -= factor * rows[r][k];
        }
        ++r;
    }
    return r;
}

} // namespace ga::oracle
