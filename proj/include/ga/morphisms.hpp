#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ga/matrix.hpp"
#include "ga/multivector.hpp"

namespace ga {

/// An algebra morphism determined by generator images f(e_i). Blade images
/// are the ordered products over K, so the table is fully determined by the
/// generator images; F(e_empty) is the target unit. Blade images are memoized
/// lazily behind a mutex so concurrent readers observe consistent results.
template <class S>
class MorphismTable {
public:
    MorphismTable(SignaturePtr<S> source, std::map<std::uint32_t, Multivector<S>> images,
                  bool validate)
        : source_(std::move(source)), images_(std::move(images)),
          cache_(std::make_unique<Cache>()) {
        for (std::uint32_t i : source_->indices())
            if (!images_.count(i))
                throw Error("no image given for generator " + std::to_string(i));
        for (const auto& [i, image] : images_)
            if (!source_->declares(i))
                throw Error("image given for undeclared generator " + std::to_string(i));
        if (images_.empty())
            throw Error("morphism needs at least one generator image");
        target_ = images_.begin()->second.signature_ptr();
        for (const auto& [i, image] : images_)
            Multivector<S>::require_same_signature(images_.begin()->second, image);
        if (validate) validate_generators();
    }

    const Signature<S>& source_signature() const { return *source_; }
    const SignaturePtr<S>& source_signature_ptr() const { return source_; }
    const SignaturePtr<S>& target_signature_ptr() const { return target_; }
    const std::map<std::uint32_t, Multivector<S>>& generator_images() const {
        return images_;
    }

    /// F(e_K) = ordered product of f(e_i) over K.
    Multivector<S> blade_image(const IndexSet& k) const {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->memo.find(k);
        if (it != cache_->memo.end()) return it->second;
        Multivector<S> acc = Multivector<S>::unit(target_);
        for (std::uint32_t i : k) {
            auto img = images_.find(i);
            if (img == images_.end())
                throw Error("blade uses undeclared generator " + std::to_string(i));
            acc = acc * img->second;
        }
        cache_->memo.emplace(k, acc);
        return acc;
    }

    /// Linear extension: sum of X[K] * F(e_K).
    Multivector<S> apply(const Multivector<S>& x) const {
        if (!(x.signature() == *source_))
            throw Error("multivector is not over the morphism's source signature");
        Multivector<S> out(target_);
        for (const auto& [k, c] : x.terms())
            out = out + blade_image(k).scaled(c);
        return out;
    }

private:
    struct Cache {
        std::mutex mu;
        std::map<IndexSet, Multivector<S>, BladeOrder> memo;
    };

    SignaturePtr<S> source_;
    SignaturePtr<S> target_;
    std::map<std::uint32_t, Multivector<S>> images_;
    std::unique_ptr<Cache> cache_;

    // f(e_i)^2 = q(i) 1 and f(e_i) f(e_j) = -f(e_j) f(e_i) together are the
    // finite form of f(x)^2 = B(x,x) 1 over a char-0 field.
    void validate_generators() const {
        for (const auto& [i, fi] : images_) {
            Multivector<S> square = fi * fi;
            Multivector<S> expected = Multivector<S>::scalar(target_, source_->q(i));
            if (!(square == expected))
                throw Error("morphism validation failed for generator " +
                            std::to_string(i) + ": f(e" + std::to_string(i) +
                            ")^2 = " + to_string(square) + " but q(" +
                            std::to_string(i) + ")*1 = " + to_string(expected));
        }
        for (auto a = images_.begin(); a != images_.end(); ++a) {
            for (auto b = std::next(a); b != images_.end(); ++b) {
                Multivector<S> ab = a->second * b->second;
                Multivector<S> ba_neg = -(b->second * a->second);
                if (!(ab == ba_neg))
                    throw Error("morphism validation failed for generators (" +
                                std::to_string(a->first) + ", " + std::to_string(b->first) +
                                "): f(e" + std::to_string(a->first) + ")*f(e" +
                                std::to_string(b->first) + ") = " + to_string(ab) +
                                " but -f(e" + std::to_string(b->first) + ")*f(e" +
                                std::to_string(a->first) + ") = " + to_string(ba_neg));
            }
        }
    }
};

/// Corollary-2 surface: build the unique morphism extending the generator
/// images. With validate set, the generator precondition is checked first.
template <class S>
MorphismTable<S> extend_morphism(std::map<std::uint32_t, Multivector<S>> images,
                                 SignaturePtr<S> source, bool validate) {
    return MorphismTable<S>(std::move(source), std::move(images), validate);
}

template <class S>
Multivector<S> apply_morphism(const MorphismTable<S>& table, const Multivector<S>& x) {
    return table.apply(x);
}

template <class S>
struct Congruence {
    Matrix<S> p;              // rows: new basis in old coordinates
    std::vector<S> diagonal;  // d with P G P^T = diag(d)
};

/// Diagonalizes a symmetric bilinear form by symmetric Gaussian elimination
/// with diagonal pivoting. When every remaining diagonal entry is zero but
/// some off-diagonal g[i][j] is not, the move basis_i += basis_j makes the
/// (i,i) entry 2*g[i][j] != 0 and elimination continues. Only the congruence
/// P G P^T = diag(d) with invertible P is contractual.
template <class S>
Congruence<S> orthogonalize(const Matrix<S>& g) {
    if (g.rows() != g.cols()) throw Error("gram matrix must be square");
    if (!g.is_symmetric()) throw Error("gram matrix must be symmetric");

    const std::size_t n = g.rows();
    Matrix<S> a = g;
    Matrix<S> p = Matrix<S>::identity(n);

    auto add_row = [&](std::size_t dst, std::size_t src, const S& factor) {
        // basis_dst += factor * basis_src, applied to P and congruently to A
        for (std::size_t c = 0; c < n; ++c) p.at(dst, c) += factor * p.at(src, c);
        for (std::size_t c = 0; c < n; ++c) a.at(dst, c) += factor * a.at(src, c);
        for (std::size_t r = 0; r < n; ++r) a.at(r, dst) += factor * a.at(r, src);
    };
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(p.at(x, c), p.at(y, c));
            std::swap(a.at(x, c), a.at(y, c));
        }
        for (std::size_t r = 0; r < n; ++r) std::swap(a.at(r, x), a.at(r, y));
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t l = k; l < n; ++l) {
            if (scalar_is_zero(a.at(l, l))) continue;
            pivot = l;
            break;
        }
        if (pivot == n) {
            std::size_t oi = n, oj = n;
            for (std::size_t i = k; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!scalar_is_zero(a.at(i, j))) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) break; // remaining block is zero
            add_row(oi, oj, S(1));
            pivot = oi;
        }
        if (pivot != k) swap_rows(k, pivot);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (scalar_is_zero(a.at(r, k))) continue;
            add_row(r, k, S(-(a.at(r, k) / a.at(k, k))));
        }
    }

    Congruence<S> out;
    out.p = std::move(p);
    out.diagonal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(a.at(i, i));
    return out;
}

template <class S>
struct BasisChangeReport {
    bool pass = true;
    Signature<S> new_signature;
    std::optional<std::pair<IndexSet, IndexSet>> counterexample;
    std::string message = "ok";
};

/// Rows of p, read as vectors f_i over sig, must be pairwise B-orthogonal and
/// independent (checked; error otherwise). Builds the signature q"(i) =
/// B(f_i, f_i), the morphism e"_i -> f_i, and verifies F(e"_H e"_J) =
/// F(e"_H) F(e"_J) on blade pairs: exhaustively when the blade count is
/// small, otherwise on sampled pairs.
template <class S>
BasisChangeReport<S> change_of_basis_check(SignaturePtr<S> sig, const Matrix<S>& p,
                                           std::size_t sample_pairs = 512,
                                           std::uint64_t seed = 1) {
    const std::size_t n = sig->dimension();
    if (p.rows() != n || p.cols() != n)
        throw Error("basis matrix must be " + std::to_string(n) + "x" + std::to_string(n));

    std::vector<Multivector<S>> f;
    f.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        Multivector<S> row(sig);
        for (std::size_t c = 0; c < n; ++c)
            row = row + Multivector<S>::blade(sig, IndexSet::single(sig->indices()[c]),
                                              p.at(r, c));
        f.push_back(std::move(row));
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!scalar_is_zero(bilinear_form(f[i], f[j])))
                throw Error("rows " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) + " are not B-orthogonal");

    Multivector<S> wedge = Multivector<S>::unit(sig);
    for (const auto& v : f) wedge = outer_product(wedge, v);
    if (wedge.is_zero()) throw Error("basis matrix is singular");

    std::vector<S> new_diag;
    new_diag.reserve(n);
    for (const auto& v : f) new_diag.push_back(bilinear_form(v, v));
    auto new_sig = make_signature(Signature<S>::from_diag(new_diag));

    std::map<std::uint32_t, Multivector<S>> images;
    for (std::size_t i = 0; i < n; ++i)
        images.emplace(static_cast<std::uint32_t>(i + 1), f[i]);
    MorphismTable<S> table(new_sig, std::move(images), /*validate=*/true);

    BasisChangeReport<S> report;
    report.new_signature = *new_sig;

    auto check_pair = [&](const IndexSet& h, const IndexSet& j) {
        Multivector<S> lhs = table.apply(geometric_product(
            Multivector<S>::blade(new_sig, h), Multivector<S>::blade(new_sig, j)));
        Multivector<S> rhs = table.blade_image(h) * table.blade_image(j);
        if (lhs == rhs) return true;
        report.pass = false;
        report.counterexample = {h, j};
        report.message = "product of images differs from image of product for " +
                         to_string(h) + ", " + to_string(j) + ": " + to_string(rhs) +
                         " vs " + to_string(lhs);
        return false;
    };

    const auto blades = subsets_in_blade_order(new_sig->indices());
    if (blades.size() * blades.size() <= sample_pairs || sample_pairs == 0) {
        for (const auto& h : blades)
            for (const auto& j : blades)
                if (!check_pair(h, j)) return report;
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t t = 0; t < sample_pairs; ++t) {
            const auto& h = blades[rng() % blades.size()];
            const auto& j = blades[rng() % blades.size()];
            if (!check_pair(h, j)) return report;
        }
    }
    return report;
}

/// Theorem-6 surface: over the rationals, x_1, ..., x_p are independent iff
/// their wedge is nonzero. Inputs must be grade-1. Float coefficients are
/// rejected by the signature: numeric rank lives in the oracle module.
bool is_independent(const std::vector<Multivector<Rational>>& vectors);

/// Plain-text Gram matrix: first line n, then n rows of n rational literals.
Matrix<Rational> load_gram_matrix(std::istream& in);
Matrix<Rational> load_gram_matrix_file(const std::string& path);

} // namespace ga
