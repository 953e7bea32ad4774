#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ga/error.hpp"
#include "ga/scalar.hpp"

namespace ga {

/// The diagonal bilinear form: q(i) = B(e_i, e_i) for each declared index i.
/// Values may be zero (degenerate) or negative. Lookup of an undeclared index
/// is always an error, never a silent default.
template <class S>
class Signature {
public:
    Signature() = default;

    static Signature from_map(std::map<std::uint32_t, S> diag) {
        Signature sig;
        for (const auto& [i, q] : diag) {
            if (i == 0) throw Error("index 0 is not allowed; indices start at 1");
            sig.indices_.push_back(i);
        }
        sig.diag_ = std::move(diag);
        return sig;
    }

    /// Indices 1..n with the given q values, in order.
    static Signature from_diag(const std::vector<S>& qs) {
        std::map<std::uint32_t, S> diag;
        for (std::size_t i = 0; i < qs.size(); ++i)
            diag.emplace(static_cast<std::uint32_t>(i + 1), qs[i]);
        return from_map(std::move(diag));
    }

    /// Indices 1..p map to +1, the next q to -1, the next r to 0.
    static Signature from_pqr(std::uint32_t p, std::uint32_t q, std::uint32_t r) {
        std::vector<S> qs;
        qs.reserve(p + q + r);
        for (std::uint32_t i = 0; i < p; ++i) qs.push_back(S(1));
        for (std::uint32_t i = 0; i < q; ++i) qs.push_back(S(-1));
        for (std::uint32_t i = 0; i < r; ++i) qs.push_back(S(0));
        return from_diag(qs);
    }

    const S& q(std::uint32_t i) const {
        auto it = diag_.find(i);
        if (it == diag_.end())
            throw Error("index " + std::to_string(i) + " is not declared in the signature");
        return it->second;
    }

    bool declares(std::uint32_t i) const { return diag_.count(i) != 0; }

    /// Declared indices, sorted.
    const std::vector<std::uint32_t>& indices() const { return indices_; }
    std::size_t dimension() const { return indices_.size(); }

    bool operator==(const Signature& other) const { return diag_ == other.diag_; }

    std::string describe() const {
        std::string out = "diag(";
        bool first = true;
        for (std::uint32_t i : indices_) {
            if (!first) out += ',';
            out += scalar_to_string(diag_.at(i));
            first = false;
        }
        out += ')';
        return out;
    }

private:
    std::map<std::uint32_t, S> diag_;
    std::vector<std::uint32_t> indices_;
};

template <class S>
using SignaturePtr = std::shared_ptr<const Signature<S>>;

template <class S>
SignaturePtr<S> make_signature(Signature<S> sig) {
    return std::make_shared<const Signature<S>>(std::move(sig));
}

} // namespace ga
