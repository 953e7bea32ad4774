#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ga/matrix.hpp"
#include "ga/multivector.hpp"
#include "ga/oracle.hpp"

namespace ga::gen {

using Rng = std::mt19937_64;

/// splitmix64 step; used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t z = base + salt * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

inline std::int64_t int_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline Rational random_rational(Rng& rng, int max_num = 5, int max_den = 4) {
    return Rational(int_in(rng, -max_num, max_num), int_in(rng, 1, max_den));
}

inline Rational random_nonzero_rational(Rng& rng, int max_num = 5, int max_den = 4) {
    for (;;) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

template <class S>
S random_scalar(Rng& rng) {
    return scalar_from_rational<S>(random_rational(rng));
}

inline IndexSet random_subset(Rng& rng, const std::vector<std::uint32_t>& universe) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i : universe)
        if (rng() & 1) out.push_back(i);
    return IndexSet(std::move(out));
}

template <class S>
Multivector<S> random_multivector(Rng& rng, const SignaturePtr<S>& sig,
                                  std::size_t max_terms = 5) {
    Multivector<S> x(sig);
    std::size_t terms = below(rng, max_terms + 1);
    for (std::size_t t = 0; t < terms; ++t) {
        x = x + Multivector<S>::blade(sig, random_subset(rng, sig->indices()),
                                      random_scalar<S>(rng));
    }
    return x;
}

/// Grade-1 element; may come out zero.
template <class S>
Multivector<S> random_vector(Rng& rng, const SignaturePtr<S>& sig) {
    std::vector<S> coeffs;
    coeffs.reserve(sig->dimension());
    for (std::size_t i = 0; i < sig->dimension(); ++i)
        coeffs.push_back(random_scalar<S>(rng));
    return Multivector<S>::vector(sig, coeffs);
}

template <class S>
Multivector<S> random_pure_grade(Rng& rng, const SignaturePtr<S>& sig, std::size_t r,
                                 std::size_t max_terms = 4) {
    Multivector<S> x(sig);
    const auto& universe = sig->indices();
    if (r > universe.size()) return x;
    std::size_t terms = 1 + below(rng, max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        // random r-subset by shuffle prefix
        std::vector<std::uint32_t> pool = universe;
        for (std::size_t i = 0; i < r; ++i)
            std::swap(pool[i], pool[i + below(rng, pool.size() - i)]);
        pool.resize(r);
        auto [set, odd] = normalize_indices(std::move(pool));
        (void)odd;
        x = x + Multivector<S>::blade(sig, set, random_scalar<S>(rng));
    }
    return x;
}

inline oracle::Word random_word(Rng& rng, const std::vector<std::uint32_t>& alphabet,
                                std::size_t max_len) {
    oracle::Word w;
    std::size_t len = below(rng, max_len + 1);
    for (std::size_t i = 0; i < len; ++i)
        w.letters.push_back(alphabet[below(rng, alphabet.size())]);
    return w;
}

inline Matrix<Rational> random_symmetric_matrix(Rng& rng, std::size_t n, int range = 3) {
    Matrix<Rational> g(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            Rational v(int_in(rng, -range, range));
            g.at(r, c) = v;
            g.at(c, r) = v;
        }
    return g;
}

/// Invertible matrix whose rows are pairwise B-orthogonal for the given
/// diagonal form. Starts from a scaled permutation and composes random
/// two-row moves that stay orthogonal for the current diagonal; Sylvester
/// keeps the degenerate slots degenerate, so every move below is closed.
inline Matrix<Rational> random_orthogonal_basis(Rng& rng, const Signature<Rational>& sig,
                                                int rounds = 6) {
    const std::size_t n = sig.dimension();
    std::vector<Rational> d;
    d.reserve(n);

    // scaled permutation start
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n; ++i)
        std::swap(perm[i], perm[i + below(rng, n - i)]);
    Matrix<Rational> p(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational scale = random_nonzero_rational(rng, 2, 2);
        p.at(i, perm[i]) = scale;
        d.push_back(scale * scale * sig.q(sig.indices()[perm[i]]));
    }
    if (n < 2) return p;

    for (int round = 0; round < rounds; ++round) {
        std::size_t i = below(rng, n);
        std::size_t j = below(rng, n - 1);
        if (j >= i) ++j;
        const Rational qa = d[i];
        const Rational qb = d[j];
        Rational a, b, c, e;
        if (qa.is_zero() && qb.is_zero()) {
            do {
                a = Rational(int_in(rng, -2, 2));
                b = Rational(int_in(rng, -2, 2));
                c = Rational(int_in(rng, -2, 2));
                e = Rational(int_in(rng, -2, 2));
            } while ((a * e - b * c).is_zero());
        } else {
            do {
                a = Rational(int_in(rng, -2, 2));
                b = Rational(int_in(rng, -2, 2));
            } while ((a * a * qa + b * b * qb).is_zero());
            c = -b * qb;
            e = a * qa;
        }
        for (std::size_t col = 0; col < n; ++col) {
            Rational pi = p.at(i, col);
            Rational pj = p.at(j, col);
            p.at(i, col) = a * pi + b * pj;
            p.at(j, col) = c * pi + e * pj;
        }
        d[i] = a * a * qa + b * b * qb;
        d[j] = c * c * qa + e * e * qb;
    }
    return p;
}

} // namespace ga::gen
