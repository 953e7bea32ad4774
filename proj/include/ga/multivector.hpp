#pragma once

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "ga/blades.hpp"
#include "ga/error.hpp"
#include "ga/index_set.hpp"
#include "ga/scalar.hpp"
#include "ga/signature.hpp"

namespace ga {

/// A finitely supported mapping IndexSet -> scalar over a fixed signature.
/// Canonical sparse form: no stored coefficient is zero, terms ordered by
/// (grade, lexicographic indices). Immutable value type; all operations are
/// pure functions.
template <class S>
class Multivector {
public:
    using Terms = std::map<IndexSet, S, BladeOrder>;

    explicit Multivector(SignaturePtr<S> sig) : sig_(std::move(sig)) {
        if (!sig_) throw Error("multivector needs a signature");
    }

    static Multivector zero(SignaturePtr<S> sig) { return Multivector(std::move(sig)); }

    static Multivector scalar(SignaturePtr<S> sig, S value) {
        Multivector x(std::move(sig));
        x.add_term(IndexSet{}, std::move(value));
        return x;
    }

    static Multivector unit(SignaturePtr<S> sig) { return scalar(std::move(sig), S(1)); }

    static Multivector blade(SignaturePtr<S> sig, IndexSet k, S coeff = S(1)) {
        Multivector x(std::move(sig));
        for (std::uint32_t i : k) (void)x.sig_->q(i); // declared or error
        x.add_term(std::move(k), std::move(coeff));
        return x;
    }

    static Multivector basis_vector(SignaturePtr<S> sig, std::uint32_t i) {
        return blade(std::move(sig), IndexSet::single(i));
    }

    /// Grade-1 element with the given coefficients over the declared indices,
    /// in signature order.
    static Multivector vector(SignaturePtr<S> sig, std::span<const S> coeffs) {
        if (coeffs.size() != sig->indices().size())
            throw Error("vector needs one coefficient per declared index");
        Multivector x(sig);
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            x.add_term(IndexSet::single(sig->indices()[i]), coeffs[i]);
        return x;
    }

    const Terms& terms() const { return terms_; }
    const SignaturePtr<S>& signature_ptr() const { return sig_; }
    const Signature<S>& signature() const { return *sig_; }

    bool is_zero() const { return terms_.empty(); }

    S coefficient(const IndexSet& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? S(0) : it->second;
    }

    /// Grades present in the support; empty for the zero multivector.
    std::set<std::size_t> grades() const {
        std::set<std::size_t> out;
        for (const auto& [k, c] : terms_) out.insert(k.size());
        return out;
    }

    /// Zero is pure of every grade.
    bool is_pure_grade(std::size_t r) const {
        for (const auto& [k, c] : terms_)
            if (k.size() != r) return false;
        return true;
    }

    /// Equality is equality of the canonical term mappings.
    bool operator==(const Multivector& other) const { return terms_ == other.terms_; }

    Multivector operator-() const {
        Multivector out(sig_);
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, S(-c));
        return out;
    }

    Multivector scaled(const S& factor) const {
        Multivector out(sig_);
        if (scalar_is_zero(factor)) return out;
        for (const auto& [k, c] : terms_) out.add_term(k, S(c * factor));
        return out;
    }

    friend Multivector operator+(const Multivector& x, const Multivector& y) {
        require_same_signature(x, y);
        Multivector out = x;
        for (const auto& [k, c] : y.terms_) out.add_term(k, c);
        return out;
    }

    friend Multivector operator-(const Multivector& x, const Multivector& y) {
        require_same_signature(x, y);
        Multivector out = x;
        for (const auto& [k, c] : y.terms_) out.add_term(k, S(-c));
        return out;
    }

    /// a*X + b*Y in canonical form.
    friend Multivector linear_combine(const S& a, const Multivector& x,
                                      const S& b, const Multivector& y) {
        require_same_signature(x, y);
        Multivector out(x.sig_);
        if (!scalar_is_zero(a))
            for (const auto& [k, c] : x.terms_) out.add_term(k, S(a * c));
        if (!scalar_is_zero(b))
            for (const auto& [k, c] : y.terms_) out.add_term(k, S(b * c));
        return out;
    }

    /// Bilinear extension of e_H e_J = sigma(H,J) e_{H△J}, with blade pairs
    /// admitted by the filter. All five products share this kernel.
    template <class Filter>
    friend Multivector filtered_product(const Multivector& x, const Multivector& y,
                                        Filter keep) {
        require_same_signature(x, y);
        Multivector out(x.sig_);
        for (const auto& [h, a] : x.terms_) {
            for (const auto& [j, b] : y.terms_) {
                if (!keep(h, j)) continue;
                S coeff = a * b * sigma(h, j, *x.sig_);
                out.add_term(symdiff(h, j), std::move(coeff));
            }
        }
        return out;
    }

    friend Multivector geometric_product(const Multivector& x, const Multivector& y) {
        return filtered_product(x, y, [](const IndexSet&, const IndexSet&) { return true; });
    }

    friend Multivector operator*(const Multivector& x, const Multivector& y) {
        return geometric_product(x, y);
    }

    friend Multivector outer_product(const Multivector& x, const Multivector& y) {
        return filtered_product(x, y, [](const IndexSet& h, const IndexSet& j) {
            return is_disjoint(h, j);
        });
    }

    friend Multivector left_contraction(const Multivector& x, const Multivector& y) {
        return filtered_product(x, y, [](const IndexSet& h, const IndexSet& j) {
            return is_subset(h, j);
        });
    }

    friend Multivector right_contraction(const Multivector& x, const Multivector& y) {
        return filtered_product(x, y, [](const IndexSet& h, const IndexSet& j) {
            return is_subset(j, h);
        });
    }

    friend Multivector scalar_product(const Multivector& x, const Multivector& y) {
        return filtered_product(x, y, [](const IndexSet& h, const IndexSet& j) {
            return h == j;
        });
    }

    /// Keeps the terms of grade r; r < 0 yields zero.
    friend Multivector grade_project(const Multivector& x, long r) {
        Multivector out(x.sig_);
        if (r < 0) return out;
        for (const auto& [k, c] : x.terms_)
            if (k.size() == static_cast<std::size_t>(r)) out.terms_.emplace(k, c);
        return out;
    }

    /// Main automorphism: blade coefficient scaled by (-1)^|K|.
    friend Multivector grade_involution(const Multivector& x) {
        Multivector out(x.sig_);
        for (const auto& [k, c] : x.terms_)
            out.terms_.emplace(k, k.size() % 2 != 0 ? S(-c) : c);
        return out;
    }

    /// Reversion: blade coefficient scaled by (-1)^{|K|(|K|-1)/2}.
    friend Multivector reversion(const Multivector& x) {
        Multivector out(x.sig_);
        for (const auto& [k, c] : x.terms_) {
            std::size_t r = k.size();
            bool flip = (r * (r - 1) / 2) % 2 != 0;
            out.terms_.emplace(k, flip ? S(-c) : c);
        }
        return out;
    }

    /// Keeps the terms with |K| ≡ r (mod 2); r must be 0 or 1.
    friend Multivector even_odd_project(const Multivector& x, int r) {
        if (r != 0 && r != 1) throw Error("parity must be 0 or 1");
        Multivector out(x.sig_);
        for (const auto& [k, c] : x.terms_)
            if (k.size() % 2 == static_cast<std::size_t>(r)) out.terms_.emplace(k, c);
        return out;
    }

    /// B(x, y) for grade-1 arguments: sum of q(i) x_i y_i.
    friend S bilinear_form(const Multivector& x, const Multivector& y) {
        require_same_signature(x, y);
        if (!x.is_pure_grade(1) || !y.is_pure_grade(1))
            throw Error("bilinear_form requires grade-1 arguments");
        S total(0);
        for (const auto& [k, a] : x.terms_) {
            auto it = y.terms_.find(k);
            if (it == y.terms_.end()) continue;
            total += a * it->second * x.sig_->q(*k.begin());
        }
        return total;
    }

    static void require_same_signature(const Multivector& x, const Multivector& y) {
        if (x.sig_ == y.sig_) return;
        if (*x.sig_ == *y.sig_) return;
        throw Error("signature mismatch: " + x.sig_->describe() + " vs " +
                    y.sig_->describe());
    }

private:
    SignaturePtr<S> sig_;
    Terms terms_;

    void add_term(IndexSet k, S coeff) {
        if (scalar_is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), coeff);
        if (!inserted) {
            it->second += coeff;
            if (scalar_is_zero(it->second)) terms_.erase(it);
        }
    }
};

/// Tolerant comparison for float-mode tests; exact for rationals.
template <class S>
bool multivector_close(const Multivector<S>& x, const Multivector<S>& y) {
    for (const auto& [k, c] : x.terms())
        if (!scalar_close(c, y.coefficient(k))) return false;
    for (const auto& [k, c] : y.terms())
        if (!scalar_close(x.coefficient(k), c)) return false;
    return true;
}

/// Canonical rendering: "3 + e[1,2] - 1/2*e[3]"; zero is "0", the unit term
/// prints as a bare scalar.
template <class S>
std::string to_string(const Multivector<S>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        bool neg = scalar_is_negative(c);
        S mag = neg ? S(-c) : c;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        if (k.empty()) {
            out += scalar_to_string(mag);
        } else {
            if (!(mag == S(1))) {
                out += scalar_to_string(mag);
                out += '*';
            }
            out += to_string(k);
        }
    }
    return out;
}

} // namespace ga
