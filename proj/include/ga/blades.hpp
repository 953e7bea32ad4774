#pragma once

#include <cstdint>

#include "ga/index_set.hpp"
#include "ga/signature.hpp"

namespace ga {

/// An element of {+1, -1}.
class Sign {
public:
    static Sign plus() { return Sign(false); }
    static Sign minus() { return Sign(true); }
    static Sign from_parity(bool odd) { return Sign(odd); }

    int value() const { return negative_ ? -1 : 1; }
    bool negative() const { return negative_; }

    Sign operator*(Sign other) const { return Sign(negative_ != other.negative_); }
    bool operator==(const Sign&) const = default;

private:
    explicit Sign(bool negative) : negative_(negative) {}
    bool negative_;
};

/// Reordering sign: (-1)^c with c = |{(i,j) in H x J : j < i}|. Computed by a
/// linear merge over the sorted sets; the quadratic double loop lives in the
/// oracle module as the independent check.
Sign alpha(const IndexSet& h, const IndexSet& j);

/// Reduction factor: product of q(i) over H ∩ J; 1 on empty intersection.
template <class S>
S beta(const IndexSet& h, const IndexSet& j, const Signature<S>& sig) {
    S prod(1);
    auto hi = h.begin();
    auto ji = j.begin();
    while (hi != h.end() && ji != j.end()) {
        if (*hi == *ji) {
            prod *= sig.q(*hi);
            ++hi;
            ++ji;
        } else if (*hi < *ji) {
            ++hi;
        } else {
            ++ji;
        }
    }
    return prod;
}

/// sigma = alpha * beta; the structure coefficient in e_H e_J = sigma(H,J) e_{H△J}.
template <class S>
S sigma(const IndexSet& h, const IndexSet& j, const Signature<S>& sig) {
    S b = beta(h, j, sig);
    return alpha(h, j).negative() ? S(-b) : b;
}

} // namespace ga
