#pragma once

// Truncated formal power series in q over a coefficient ring.
//
// A Series<Ring> of order N stores the coefficients of q^0 .. q^(N-1). Binary
// operations truncate to the smaller order of their operands, so results are
// correct "up to O(q^min order)".

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlab/ring.hpp"

namespace qlab
{

template <class Ring>
class Series
{
public:
    using ring_type = Ring;
    using value_type = typename Ring::value_type;

    /// Zero series of the given order.
    Series(Ring ring, std::size_t order) : ring_(std::move(ring)), coeffs_(order, ring_.zero()) {}

    /// Takes ownership of coefficients that are already canonical ring elements.
    Series(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

    static Series from_ints(Ring ring, std::initializer_list<long> values)
    {
        std::vector<value_type> c;
        c.reserve(values.size());
        for (long v : values) {
            c.push_back(ring.from_int(v));
        }
        return Series(std::move(ring), std::move(c));
    }

    const Ring &ring() const { return ring_; }
    std::size_t order() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    const value_type &operator[](std::size_t n) const { return coeffs_[n]; }
    std::span<const value_type> coeffs() const { return coeffs_; }

    /// Mutable access for builders; callers must store canonical elements.
    std::vector<value_type> &data() { return coeffs_; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [this](const value_type &x) { return ring_.is_zero(x); });
    }

    std::size_t nonzero_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(coeffs_.begin(), coeffs_.end(), [this](const value_type &x) { return !ring_.is_zero(x); }));
    }

    friend bool operator==(const Series &a, const Series &b)
    {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    Ring ring_;
    std::vector<value_type> coeffs_;
};

namespace detail
{

template <class Ring>
void require_same_ring(const Series<Ring> &a, const Series<Ring> &b)
{
    if (!(a.ring() == b.ring())) {
        throw std::invalid_argument("ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
    }
}

// Positions of nonzero coefficients.
template <class Ring>
std::vector<std::size_t> support(const Series<Ring> &s)
{
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n < s.order(); ++n) {
        if (!s.ring().is_zero(s[n])) {
            idx.push_back(n);
        }
    }
    return idx;
}

} // namespace detail

template <class Ring>
Series<Ring> zero(const Ring &ring, std::size_t order)
{
    return Series<Ring>(ring, order);
}

template <class Ring>
Series<Ring> one(const Ring &ring, std::size_t order)
{
    Series<Ring> r(ring, order);
    if (order > 0) {
        r.data()[0] = ring.one();
    }
    return r;
}

/// c * q^s truncated to the given order.
template <class Ring>
Series<Ring> monomial(const Ring &ring, typename Ring::value_type c, std::size_t s, std::size_t order)
{
    Series<Ring> r(ring, order);
    if (s < order) {
        r.data()[s] = std::move(c);
    }
    return r;
}

template <class Ring>
Series<Ring> truncate(const Series<Ring> &a, std::size_t order)
{
    const auto c = a.coeffs().first(std::min(order, a.order()));
    return Series<Ring>(a.ring(), std::vector<typename Ring::value_type>(c.begin(), c.end()));
}

template <class Ring>
Series<Ring> add(const Series<Ring> &a, const Series<Ring> &b)
{
    detail::require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    Series<Ring> r = truncate(a, n);
    for (std::size_t i = 0; i < n; ++i) {
        a.ring().add_to(r.data()[i], b[i]);
    }
    return r;
}

template <class Ring>
Series<Ring> sub(const Series<Ring> &a, const Series<Ring> &b)
{
    detail::require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    Series<Ring> r = truncate(a, n);
    for (std::size_t i = 0; i < n; ++i) {
        a.ring().sub_from(r.data()[i], b[i]);
    }
    return r;
}

template <class Ring>
Series<Ring> negate(const Series<Ring> &a)
{
    Series<Ring> r = a;
    for (auto &x : r.data()) {
        x = a.ring().neg(x);
    }
    return r;
}

template <class Ring>
Series<Ring> scale(const Series<Ring> &a, const typename Ring::value_type &c)
{
    Series<Ring> r = a;
    for (auto &x : r.data()) {
        x = a.ring().mul(x, c);
    }
    return r;
}

/// Cauchy product truncated to min order.
///
/// The loop runs over the nonzero coefficients of the sparser operand only, so
/// multiplying by a pentagonal-number expansion costs O(N sqrt N). When both
/// operands are dense this degrades to the schoolbook O(N^2) product.
template <class Ring>
Series<Ring> mul(const Series<Ring> &a, const Series<Ring> &b)
{
    detail::require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    const Ring &ring = a.ring();
    Series<Ring> r(ring, n);
    if (n == 0) {
        return r;
    }

    auto sa = detail::support(truncate(a, n));
    auto sb = detail::support(truncate(b, n));
    const bool a_sparser = sa.size() <= sb.size();
    const Series<Ring> &sparse = a_sparser ? a : b;
    const Series<Ring> &dense = a_sparser ? b : a;
    const auto &sparse_idx = a_sparser ? sa : sb;
    const auto &dense_idx = a_sparser ? sb : sa;
    if (dense_idx.empty()) {
        return r;
    }
    const std::size_t dense_lo = dense_idx.front();

    auto &out = r.data();
    for (std::size_t i : sparse_idx) {
        if (i + dense_lo >= n) {
            break;
        }
        const auto &v = sparse[i];
        for (std::size_t j = dense_lo; i + j < n; ++j) {
            ring.fma(out[i + j], v, dense[j]);
        }
    }
    return r;
}

/// Solves d * x = num for x, truncated to min order.
///
/// Uses the forward recurrence x_n = (num_n - sum_{k>=1} d_k x_{n-k}) / d_0,
/// touching only nonzero d_k. Requires d_0 to be a unit.
template <class Ring>
Series<Ring> divide(const Series<Ring> &num, const Series<Ring> &d)
{
    detail::require_same_ring(num, d);
    const std::size_t n = std::min(num.order(), d.order());
    const Ring &ring = num.ring();
    Series<Ring> x = truncate(num, n);
    if (n == 0) {
        return x;
    }
    const auto inv0 = ring.inverse(d[0]);
    auto idx = detail::support(truncate(d, n));
    // drop the constant term, it is handled by inv0
    if (!idx.empty() && idx.front() == 0) {
        idx.erase(idx.begin());
    }
    const bool trivial_lead = d[0] == ring.one();

    auto &out = x.data();
    for (std::size_t m = 0; m < n; ++m) {
        auto &acc = out[m];
        for (std::size_t k : idx) {
            if (k > m) {
                break;
            }
            ring.fms(acc, d[k], out[m - k]);
        }
        if (!trivial_lead) {
            acc = ring.mul(acc, inv0);
        }
    }
    return x;
}

template <class Ring>
Series<Ring> invert(const Series<Ring> &a)
{
    if (a.order() == 0) {
        return a;
    }
    return divide(one(a.ring(), a.order()), a);
}

/// Multiplies by q^s, keeping the order (top s coefficients fall off).
template <class Ring>
Series<Ring> shift(const Series<Ring> &a, std::size_t s)
{
    Series<Ring> r(a.ring(), a.order());
    for (std::size_t n = s; n < a.order(); ++n) {
        r.data()[n] = a[n - s];
    }
    return r;
}

/// a^e by repeated squaring; negative exponents go through invert.
template <class Ring>
Series<Ring> pow(const Series<Ring> &a, long e)
{
    if (e < 0) {
        return invert(pow(a, -e));
    }
    Series<Ring> result = one(a.ring(), a.order());
    Series<Ring> base = a;
    auto k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) {
            result = mul(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

/// Coefficient-wise reduction of an exact series into Z/mZ.
inline Series<ModRing> reduce_mod(const Series<IntegerRing> &a, std::uint32_t m)
{
    const ModRing ring(m);
    std::vector<ModRing::value_type> c;
    c.reserve(a.order());
    for (const auto &x : a.coeffs()) {
        c.push_back(ring.from_integer(x));
    }
    return Series<ModRing>(ring, std::move(c));
}

/// First exponent below the common order where a and b differ.
template <class Ring>
std::optional<std::size_t> first_difference(const Series<Ring> &a, const Series<Ring> &b)
{
    detail::require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i) {
        if (!(a[i] == b[i])) {
            return i;
        }
    }
    return std::nullopt;
}

/// Equality up to O(q^min order).
template <class Ring>
bool agree(const Series<Ring> &a, const Series<Ring> &b)
{
    return !first_difference(a, b).has_value();
}

template <class Ring>
Series<Ring> operator+(const Series<Ring> &a, const Series<Ring> &b)
{
    return add(a, b);
}

template <class Ring>
Series<Ring> operator-(const Series<Ring> &a, const Series<Ring> &b)
{
    return sub(a, b);
}

template <class Ring>
Series<Ring> operator-(const Series<Ring> &a)
{
    return negate(a);
}

template <class Ring>
Series<Ring> operator*(const Series<Ring> &a, const Series<Ring> &b)
{
    return mul(a, b);
}

template <class Ring>
Series<Ring> operator/(const Series<Ring> &a, const Series<Ring> &b)
{
    return divide(a, b);
}

/// Space-separated coefficients, e.g. "1 -1 -1 0".
template <class Ring>
std::string to_string(const Series<Ring> &a)
{
    std::string out;
    for (std::size_t n = 0; n < a.order(); ++n) {
        if (n > 0) {
            out += ' ';
        }
        out += a.ring().to_string(a[n]);
    }
    return out;
}

} // namespace qlab
