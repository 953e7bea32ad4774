#pragma once

#include <cstdint>
#include <vector>

#include "ga/multivector.hpp"

namespace ga::oracle {

/// A raw product of generators: repetitions and arbitrary order allowed.
struct Word {
    std::vector<std::uint32_t> letters;
};

/// Rewriting is quadratic; the oracle is not a production path.
inline constexpr std::size_t kMaxWordLength = 16;

/// Reduces a word to lambda * e_K by repeatedly applying, at the leftmost
/// applicable position, the adjacent rules e_j e_i -> -e_i e_j (i < j) and
/// e_i e_i -> q(i). Independent of the sigma-based product by construction.
template <class S>
Multivector<S> rewrite_word(const Word& word, SignaturePtr<S> sig) {
    if (word.letters.size() > kMaxWordLength)
        throw Error("word longer than " + std::to_string(kMaxWordLength) + " letters");
    for (std::uint32_t letter : word.letters) (void)sig->q(letter);

    std::vector<std::uint32_t> w = word.letters;
    S coeff(1);
    for (;;) {
        bool applied = false;
        for (std::size_t t = 0; t + 1 < w.size(); ++t) {
            if (w[t] == w[t + 1]) {
                coeff *= sig->q(w[t]);
                w.erase(w.begin() + t, w.begin() + t + 2);
                applied = true;
                break;
            }
            if (w[t] > w[t + 1]) {
                coeff = -coeff;
                std::swap(w[t], w[t + 1]);
                applied = true;
                break;
            }
        }
        if (!applied) break;
    }
    return Multivector<S>::blade(sig, IndexSet(std::move(w)), std::move(coeff));
}

/// Literal double loop over H x J counting pairs with j < i. Same contract
/// as ga::alpha; kept quadratic on purpose.
Sign alpha_bruteforce(const IndexSet& h, const IndexSet& j);

/// Row rank by Gaussian elimination with exact rational pivots.
std::size_t rank(std::vector<std::vector<Rational>> rows);

} // namespace ga::oracle
