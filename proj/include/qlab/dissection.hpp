#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlab/series.hpp"

namespace qlab
{

/// Number of exponents n with k*n + r < order.
inline std::size_t component_order(std::size_t order, std::size_t k, std::size_t r)
{
    return r >= order ? 0 : (order - 1 - r) / k + 1;
}

/// sum_n s[k n + r] q^n: keeps the exponents congruent to r mod k, divides by
/// q^r and substitutes q^k -> q in one step.
template <class Ring>
Series<Ring> dissect(const Series<Ring> &s, long k, long r)
{
    if (k < 2) {
        throw std::invalid_argument("dissection modulus must be >= 2, got " + std::to_string(k));
    }
    if (r < 0 || r >= k) {
        throw std::invalid_argument("residue " + std::to_string(r) + " out of range [0, " + std::to_string(k)
                                    + ")");
    }
    const auto uk = static_cast<std::size_t>(k);
    const auto ur = static_cast<std::size_t>(r);
    const std::size_t n = component_order(s.order(), uk, ur);
    std::vector<typename Ring::value_type> c;
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.push_back(s[uk * i + ur]);
    }
    return Series<Ring>(s.ring(), std::move(c));
}

template <class Ring>
struct DissectionResult {
    long k;
    std::vector<Series<Ring>> components; // components[r] = dissect(s, k, r)
};

template <class Ring>
DissectionResult<Ring> dissect_all(const Series<Ring> &s, long k)
{
    DissectionResult<Ring> d{k, {}};
    for (long r = 0; r < k; ++r) {
        d.components.push_back(dissect(s, k, r));
    }
    return d;
}

/// sum_r q^r * component_r(q^k), truncated to the given order. Coefficients a
/// component does not know about are taken as zero.
template <class Ring>
Series<Ring> recombine(const DissectionResult<Ring> &d, const Ring &ring, std::size_t order)
{
    if (d.k < 2 || d.components.size() != static_cast<std::size_t>(d.k)) {
        throw std::invalid_argument("dissection has " + std::to_string(d.components.size())
                                    + " components for modulus " + std::to_string(d.k));
    }
    const auto uk = static_cast<std::size_t>(d.k);
    Series<Ring> out(ring, order);
    for (std::size_t r = 0; r < uk; ++r) {
        const auto &comp = d.components[r];
        if (!comp.empty() && !(comp.ring() == ring)) {
            throw std::invalid_argument("ring mismatch in dissection component " + std::to_string(r));
        }
        for (std::size_t n = 0; n < comp.order() && uk * n + r < order; ++n) {
            out.data()[uk * n + r] = comp[n];
        }
    }
    return out;
}

/// The residue-r part of s left in place: sum_n s[k n + r] q^{k n + r}.
template <class Ring>
Series<Ring> extract(const Series<Ring> &s, long k, long r)
{
    DissectionResult<Ring> d{k, {}};
    for (long i = 0; i < k; ++i) {
        d.components.push_back(i == r ? dissect(s, k, r) : Series<Ring>(s.ring(), 0));
    }
    return recombine(d, s.ring(), s.order());
}

} // namespace qlab
