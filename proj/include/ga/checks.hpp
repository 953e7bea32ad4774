#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ga/expr.hpp"
#include "ga/gen.hpp"
#include "ga/morphisms.hpp"
#include "ga/multivector.hpp"
#include "ga/oracle.hpp"

namespace ga::checks {

struct CheckOptions {
    std::uint64_t seed = 42;
    int trials = 200;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    int trials = 0;
    int fail_trial = -1;
    std::uint64_t fail_seed = 0;
    std::string detail;
};

namespace detail {

// A trial returns an empty string on success, a description on failure.
template <class F>
CheckResult run_suite(const std::string& name, const CheckOptions& opt,
                      std::uint64_t salt, F&& trial) {
    CheckResult res;
    res.name = name;
    res.trials = opt.trials;
    for (int t = 0; t < opt.trials; ++t) {
        std::uint64_t seed = gen::mix_seed(opt.seed ^ salt, static_cast<std::uint64_t>(t));
        gen::Rng rng(seed);
        std::string message = trial(rng);
        if (!message.empty()) {
            res.pass = false;
            res.fail_trial = t;
            res.fail_seed = seed;
            res.detail = message;
            return res;
        }
    }
    return res;
}

template <class S>
std::string mismatch(const char* what, const Multivector<S>& lhs,
                     const Multivector<S>& rhs) {
    return std::string(what) + ": " + to_string(lhs) + " vs " + to_string(rhs);
}

/// Test-only rewriting strategy: picks uniformly among all applicable
/// adjacent rules instead of the leftmost one. The public oracle stays
/// deterministic; this exists to check confluence.
template <class S>
Multivector<S> rewrite_word_random_strategy(const oracle::Word& word,
                                            const SignaturePtr<S>& sig, gen::Rng& rng) {
    std::vector<std::uint32_t> w = word.letters;
    for (std::uint32_t letter : w) (void)sig->q(letter);
    S coeff(1);
    for (;;) {
        std::vector<std::size_t> applicable;
        for (std::size_t t = 0; t + 1 < w.size(); ++t)
            if (w[t] >= w[t + 1]) applicable.push_back(t);
        if (applicable.empty()) break;
        std::size_t t = applicable[gen::below(rng, applicable.size())];
        if (w[t] == w[t + 1]) {
            coeff *= sig->q(w[t]);
            w.erase(w.begin() + t, w.begin() + t + 2);
        } else {
            coeff = -coeff;
            std::swap(w[t], w[t + 1]);
        }
    }
    return Multivector<S>::blade(sig, IndexSet(std::move(w)), std::move(coeff));
}

inline SignaturePtr<Rational> rational_view(const Signature<Rational>& sig) {
    return make_signature(Signature<Rational>(sig));
}

inline SignaturePtr<Rational> rational_view(const Signature<double>& sig) {
    std::map<std::uint32_t, Rational> diag;
    for (std::uint32_t i : sig.indices()) diag.emplace(i, Rational(sig.q(i)));
    return make_signature(Signature<Rational>::from_map(std::move(diag)));
}

} // namespace detail

template <class S>
CheckResult check_cocycle(const SignaturePtr<S>& sig, const CheckOptions& opt) {
    return detail::run_suite("cocycle", opt, 0x01, [&](gen::Rng& rng) -> std::string {
        IndexSet h = gen::random_subset(rng, sig->indices());
        IndexSet j = gen::random_subset(rng, sig->indices());
        IndexSet k = gen::random_subset(rng, sig->indices());
        if (!(alpha(h, j) * alpha(symdiff(h, j), k) ==
              alpha(h, symdiff(j, k)) * alpha(j, k)))
            return "alpha cocycle violated";
        S bl = beta(h, j, *sig) * beta(symdiff(h, j), k, *sig);
        S br = beta(h, symdiff(j, k), *sig) * beta(j, k, *sig);
        if (!scalar_close(bl, br)) return "beta cocycle violated";
        S sl = sigma(h, j, *sig) * sigma(symdiff(h, j), k, *sig);
        S sr = sigma(h, symdiff(j, k), *sig) * sigma(j, k, *sig);
        if (!scalar_close(sl, sr)) return "sigma cocycle violated";
        return {};
    });
}

template <class S>
CheckResult check_axioms(const SignaturePtr<S>& sig, const CheckOptions& opt) {
    return detail::run_suite("axioms", opt, 0x02, [&](gen::Rng& rng) -> std::string {
        auto x = gen::random_multivector(rng, sig);
        auto y = gen::random_multivector(rng, sig);
        auto z = gen::random_multivector(rng, sig);
        if (!multivector_close((x * y) * z, x * (y * z)))
            return detail::mismatch("associativity", (x * y) * z, x * (y * z));
        auto unit = Multivector<S>::unit(sig);
        if (!(unit * x == x) || !(x * unit == x))
            return "unit law violated for " + to_string(x);
        auto v = gen::random_vector(rng, sig);
        auto square = v * v;
        auto expected = Multivector<S>::scalar(sig, bilinear_form(v, v));
        if (!multivector_close(square, expected))
            return detail::mismatch("vector square", square, expected);
        if (sig->dimension() >= 2) {
            std::size_t ai = gen::below(rng, sig->dimension());
            std::size_t bi = gen::below(rng, sig->dimension() - 1);
            if (bi >= ai) ++bi;
            auto ea = Multivector<S>::basis_vector(sig, sig->indices()[ai]);
            auto eb = Multivector<S>::basis_vector(sig, sig->indices()[bi]);
            if (!(ea * eb == -(eb * ea))) return "anticommutation violated";
        }
        return {};
    });
}

template <class S>
CheckResult check_grading(const SignaturePtr<S>& sig, const CheckOptions& opt) {
    return detail::run_suite("grading", opt, 0x03, [&](gen::Rng& rng) -> std::string {
        const std::size_t n = sig->dimension();
        auto x = gen::random_multivector(rng, sig);
        auto y = gen::random_multivector(rng, sig);

        std::size_t r = gen::below(rng, n + 1);
        std::size_t s = gen::below(rng, n + 1);
        auto wedge = outer_product(grade_project(x, static_cast<long>(r)),
                                   grade_project(y, static_cast<long>(s)));
        if (!wedge.is_pure_grade(r + s)) return "wedge did not raise grade additively";

        auto parity_prod = geometric_product(even_odd_project(x, 1), even_odd_project(y, 1));
        if (!(even_odd_project(parity_prod, 1).is_zero()))
            return "product of two odd parts has an odd component";

        Multivector<S> sum(sig);
        for (std::size_t g = 0; g <= n; ++g)
            sum = sum + grade_project(x, static_cast<long>(g));
        if (!(sum == x)) return "grade projections do not sum back";

        IndexSet k = gen::random_subset(rng, sig->indices());
        auto prod = Multivector<S>::unit(sig);
        for (std::uint32_t i : k)
            prod = prod * Multivector<S>::basis_vector(sig, i);
        if (!(prod == Multivector<S>::blade(sig, k)))
            return "blade factorization e_K != product of e_i";

        if (n >= 2) {
            std::size_t p = 2 + gen::below(rng, std::min<std::size_t>(n, 3) - 1);
            std::vector<Multivector<S>> vs;
            for (std::size_t i = 0; i < p; ++i) vs.push_back(gen::random_vector(rng, sig));
            auto wedge_all = [&](const std::vector<Multivector<S>>& list) {
                auto acc = Multivector<S>::unit(sig);
                for (const auto& v : list) acc = outer_product(acc, v);
                return acc;
            };
            auto base = wedge_all(vs);
            std::size_t t = gen::below(rng, p - 1);
            std::swap(vs[t], vs[t + 1]);
            if (!multivector_close(wedge_all(vs), -base))
                return "wedge is not alternating under adjacent transposition";
            vs[t] = vs[t + 1];
            if (!wedge_all(vs).is_zero()) return "wedge with equal arguments is nonzero";
        }
        return {};
    });
}

template <class S>
CheckResult check_theorem3(const SignaturePtr<S>& sig, const CheckOptions& opt) {
    return detail::run_suite("theorem3", opt, 0x04, [&](gen::Rng& rng) -> std::string {
        const std::size_t n = sig->dimension();
        auto x = gen::random_vector(rng, sig);
        auto big_x = gen::random_multivector(rng, sig);
        auto big_y = gen::random_multivector(rng, sig);
        auto big_z = gen::random_multivector(rng, sig);

        // item 1: xX = x∧X + x⌋X
        if (!multivector_close(x * big_x, outer_product(x, big_x) + left_contraction(x, big_x)))
            return "item 1: xX != x^X + x<|X";

        // item 3a: (X⌊Y)~ = Ỹ⌋X̃ and X*Y = <XY>_0
        if (!multivector_close(reversion(right_contraction(big_x, big_y)),
                               left_contraction(reversion(big_y), reversion(big_x))))
            return "item 3a: reversion of right contraction mismatch";
        if (!multivector_close(scalar_product(big_x, big_y),
                               grade_project(big_x * big_y, 0)))
            return "item 3a: X.Y != <XY>_0";

        // items 3a/3b on pure grades
        std::size_t r = gen::below(rng, n + 1);
        std::size_t s = gen::below(rng, n + 1);
        auto xr = gen::random_pure_grade(rng, sig, r);
        auto ys = gen::random_pure_grade(rng, sig, s);
        auto prod = xr * ys;
        if (!multivector_close(outer_product(xr, ys),
                               grade_project(prod, static_cast<long>(r + s))))
            return "item 3a: X^Y != <XY>_{r+s} on pure grades";
        if (!multivector_close(left_contraction(xr, ys),
                               grade_project(prod, static_cast<long>(s) - static_cast<long>(r))))
            return "item 3b: X<|Y != <XY>_{s-r}";
        if (!multivector_close(right_contraction(xr, ys),
                               grade_project(prod, static_cast<long>(r) - static_cast<long>(s))))
            return "item 3b: X|>Y != <XY>_{r-s}";
        {
            Multivector<S> sum(sig);
            long lo = static_cast<long>(r > s ? r - s : s - r);
            for (long g = lo; g <= static_cast<long>(r + s); g += 2)
                sum = sum + grade_project(prod, g);
            if (!(sum == prod)) return "item 3b: XY != sum of stepped projections";
        }

        // item 4: (X∧Y)⌋Z = X⌋(Y⌋Z)
        if (!multivector_close(left_contraction(outer_product(big_x, big_y), big_z),
                               left_contraction(big_x, left_contraction(big_y, big_z))))
            return "item 4: (X^Y)<|Z != X<|(Y<|Z)";

        // items 5 and 6
        auto y_vec = gen::random_vector(rng, sig);
        if (!multivector_close(left_contraction(x, y_vec),
                               Multivector<S>::scalar(sig, bilinear_form(x, y_vec))))
            return "item 5: x<|y != B(x,y)1";
        if (!multivector_close(left_contraction(x, big_x * big_y),
                               left_contraction(x, big_x) * big_y +
                                   grade_involution(big_x) * left_contraction(x, big_y)))
            return "item 5: Leibniz for the geometric product";
        if (!multivector_close(
                left_contraction(x, outer_product(big_x, big_y)),
                outer_product(left_contraction(x, big_x), big_y) +
                    outer_product(grade_involution(big_x), left_contraction(x, big_y))))
            return "item 6: Leibniz for the outer product";

        // items 7 and 8: contraction of a product of vectors
        std::size_t p = 1 + gen::below(rng, 4);
        std::vector<Multivector<S>> vs;
        for (std::size_t i = 0; i < p; ++i) vs.push_back(gen::random_vector(rng, sig));
        {
            auto chain = Multivector<S>::unit(sig);
            for (const auto& v : vs) chain = chain * v;
            Multivector<S> sum(sig);
            for (std::size_t k = 0; k < p; ++k) {
                auto term = Multivector<S>::scalar(sig, bilinear_form(x, vs[k]));
                for (std::size_t i = 0; i < p; ++i)
                    if (i != k) term = term * vs[i];
                sum = k % 2 == 0 ? sum + term : sum - term;
            }
            if (!multivector_close(left_contraction(x, chain), sum))
                return "item 7: alternating expansion of x<|(x1...xp)";
        }
        {
            auto chain = Multivector<S>::unit(sig);
            for (const auto& v : vs) chain = outer_product(chain, v);
            Multivector<S> sum(sig);
            for (std::size_t k = 0; k < p; ++k) {
                auto term = Multivector<S>::scalar(sig, bilinear_form(x, vs[k]));
                for (std::size_t i = 0; i < p; ++i)
                    if (i != k) term = outer_product(term, vs[i]);
                sum = k % 2 == 0 ? sum + term : sum - term;
            }
            if (!multivector_close(left_contraction(x, chain), sum))
                return "item 8: alternating expansion of x<|(x1^...^xp)";
        }

        // item 9: pairwise orthogonal vectors multiply like they wedge
        if (n >= 1) {
            std::size_t parts = 1 + gen::below(rng, std::min<std::size_t>(n, 4));
            std::vector<std::uint32_t> pool = sig->indices();
            for (std::size_t i = 0; i < pool.size(); ++i)
                std::swap(pool[i], pool[i + gen::below(rng, pool.size() - i)]);
            std::vector<Multivector<S>> ortho;
            std::size_t chunk = pool.size() / parts;
            for (std::size_t g = 0; g < parts; ++g) {
                Multivector<S> v(sig);
                std::size_t begin = g * chunk;
                std::size_t end = g + 1 == parts ? pool.size() : begin + chunk;
                for (std::size_t idx = begin; idx < end; ++idx)
                    v = v + Multivector<S>::blade(sig, IndexSet::single(pool[idx]),
                                                  gen::random_scalar<S>(rng));
                ortho.push_back(std::move(v));
            }
            auto gp = Multivector<S>::unit(sig);
            auto op = Multivector<S>::unit(sig);
            for (const auto& v : ortho) {
                gp = gp * v;
                op = outer_product(op, v);
            }
            if (!multivector_close(gp, op))
                return "item 9: orthogonal product != wedge";
        }
        return {};
    });
}

template <class S>
CheckResult check_involutions(const SignaturePtr<S>& sig, const CheckOptions& opt) {
    return detail::run_suite("involutions", opt, 0x05, [&](gen::Rng& rng) -> std::string {
        auto x = gen::random_multivector(rng, sig);
        auto y = gen::random_multivector(rng, sig);
        if (!(reversion(reversion(x)) == x)) return "reversion is not an involution";
        if (!multivector_close(reversion(x * y), reversion(y) * reversion(x)))
            return "(XY)~ != Y~ X~";
        if (!multivector_close(grade_involution(x * y),
                               grade_involution(x) * grade_involution(y)))
            return "(XY)^ != X^ Y^";
        IndexSet k = gen::random_subset(rng, sig->indices());
        auto blade = Multivector<S>::blade(sig, k);
        std::size_t g = k.size();
        auto gi_expected = g % 2 != 0 ? -blade : blade;
        if (!(grade_involution(blade) == gi_expected))
            return "grade involution sign differs from (-1)^{|K|}";
        auto rev_expected = (g * (g - 1) / 2) % 2 != 0 ? -blade : blade;
        if (!(reversion(blade) == rev_expected))
            return "reversion sign differs from (-1)^{|K|(|K|-1)/2}";
        return {};
    });
}

template <class S>
CheckResult check_morphisms(const SignaturePtr<S>& sig_in, const CheckOptions& opt) {
    // exact-path machinery; runs on the rational view of the signature
    auto sig = detail::rational_view(*sig_in);
    return detail::run_suite("morphisms", opt, 0x06, [&](gen::Rng& rng) -> std::string {
        const std::size_t n = sig->dimension();
        if (n == 0) return {};

        auto p = gen::random_orthogonal_basis(rng, *sig);
        auto report = change_of_basis_check(sig, p, /*sample_pairs=*/64,
                                            /*seed=*/rng());
        if (!report.pass) return "basis change: " + report.message;

        std::map<std::uint32_t, Multivector<Rational>> neg_images;
        for (std::uint32_t i : sig->indices())
            neg_images.emplace(i, -Multivector<Rational>::basis_vector(sig, i));
        auto neg = extend_morphism(std::move(neg_images), sig, /*validate=*/true);
        auto x = gen::random_multivector(rng, sig);
        if (!(apply_morphism(neg, x) == grade_involution(x)))
            return "extension of f(e_i) = -e_i differs from the grade involution";

        auto y = gen::random_multivector(rng, sig);
        if (!(apply_morphism(neg, x * y) == apply_morphism(neg, x) * apply_morphism(neg, y)))
            return "morphism is not multiplicative";
        return {};
    });
}

template <class S>
CheckResult check_oracle_rewrite(const SignaturePtr<S>& sig, const CheckOptions& opt) {
    return detail::run_suite("oracle-rewrite", opt, 0x07, [&](gen::Rng& rng) -> std::string {
        if (sig->dimension() == 0) return {};
        auto word = gen::random_word(rng, sig->indices(), 8);
        auto rewritten = oracle::rewrite_word(word, sig);
        auto direct = Multivector<S>::unit(sig);
        for (std::uint32_t letter : word.letters)
            direct = direct * Multivector<S>::basis_vector(sig, letter);
        if (!(rewritten == direct))
            return detail::mismatch("rewrite vs sigma product", rewritten, direct);
        auto randomized = detail::rewrite_word_random_strategy(word, sig, rng);
        if (!(randomized == rewritten))
            return detail::mismatch("randomized strategy diverged", randomized, rewritten);
        return {};
    });
}

template <class S>
CheckResult check_independence(const SignaturePtr<S>& sig_in, const CheckOptions& opt) {
    auto sig = detail::rational_view(*sig_in);
    return detail::run_suite("independence", opt, 0x08, [&](gen::Rng& rng) -> std::string {
        const std::size_t n = sig->dimension();
        if (n == 0) return {};
        std::size_t count = 1 + gen::below(rng, n + 1);
        std::vector<Multivector<Rational>> vectors;
        std::vector<std::vector<Rational>> rows;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<Rational> row;
            for (std::size_t c = 0; c < n; ++c)
                row.push_back(Rational(gen::int_in(rng, -5, 5)));
            vectors.push_back(Multivector<Rational>::vector(sig, row));
            rows.push_back(std::move(row));
        }
        bool via_wedge = is_independent(vectors);
        bool via_rank = oracle::rank(rows) == count;
        if (via_wedge != via_rank)
            return std::string("wedge says ") + (via_wedge ? "independent" : "dependent") +
                   " but rank oracle disagrees";
        return {};
    });
}

template <class S>
CheckResult check_orthogonalizer(const SignaturePtr<S>& sig_in, const CheckOptions& opt) {
    const std::size_t n = std::max<std::size_t>(sig_in->dimension(), 1);
    return detail::run_suite("orthogonalizer", opt, 0x09, [&](gen::Rng& rng) -> std::string {
        auto g = gen::random_symmetric_matrix(rng, n);
        auto congruence = orthogonalize(g);
        auto product = congruence.p * g * congruence.p.transposed();
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (r == c && !(product.at(r, c) == congruence.diagonal[r]))
                    return "diagonal entries disagree with P G P^T";
                if (r != c && !product.at(r, c).is_zero())
                    return "P G P^T is not diagonal";
            }
        std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) rows[r][c] = congruence.p.at(r, c);
        if (oracle::rank(rows) != n) return "P is singular";
        return {};
    });
}

template <class S>
CheckResult check_roundtrip(const SignaturePtr<S>& sig, const CheckOptions& opt) {
    return detail::run_suite("roundtrip", opt, 0x0a, [&](gen::Rng& rng) -> std::string {
        auto x = gen::random_multivector(rng, sig, 6);
        std::string text = format(x);
        auto ast = parse(text);
        auto back = eval(*ast, sig);
        if (!multivector_close(back, x))
            return "round trip changed '" + text + "' into '" + format(back) + "'";
        return {};
    });
}

template <class S>
std::vector<CheckResult> run_check_suites(const SignaturePtr<S>& sig,
                                          const CheckOptions& opt) {
    std::vector<CheckResult> results;
    results.push_back(check_cocycle(sig, opt));
    results.push_back(check_axioms(sig, opt));
    results.push_back(check_grading(sig, opt));
    results.push_back(check_theorem3(sig, opt));
    results.push_back(check_involutions(sig, opt));
    results.push_back(check_morphisms(sig, opt));
    results.push_back(check_oracle_rewrite(sig, opt));
    results.push_back(check_independence(sig, opt));
    results.push_back(check_orthogonalizer(sig, opt));
    results.push_back(check_roundtrip(sig, opt));
    return results;
}

} // namespace ga::checks
