#pragma once

// Named series: f_a, eta quotients, the theta functions phi and psi, and the
// generating function sum A(n) q^n = f_1 / f_4 of the signed cubic-partition
// count.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "qlab/eta_expression.hpp"
#include "qlab/series.hpp"

namespace qlab
{

enum class ThetaKind {
    PhiPlus,  // phi(q)
    PhiMinus, // phi(-q)
    PsiPlus,  // psi(q)
    PsiMinus, // psi(-q)
};

/// f_a = (q^a; q^a)_inf from Euler's pentagonal number theorem,
/// f_1 = sum_{j in Z} (-1)^j q^{j(3j-1)/2}, with q -> q^a.
template <class Ring>
Series<Ring> pochhammer(long a, const Ring &ring, std::size_t order)
{
    if (a < 1) {
        throw std::invalid_argument("pochhammer subscript must be >= 1, got " + std::to_string(a));
    }
    Series<Ring> r(ring, order);
    auto &c = r.data();
    const auto step = static_cast<std::size_t>(a);
    const auto plus = ring.one();
    const auto minus = ring.neg(ring.one());
    // j = 0, 1, -1, 2, -2, ... has exponents 0, 1, 2, 5, 7, 12, 15, ...
    for (std::size_t j = 0;; ++j) {
        const std::size_t e1 = j * (3 * j - 1) / 2; // j
        const std::size_t e2 = j * (3 * j + 1) / 2; // -j
        if (j > 0 && e1 * step >= order) {
            break;
        }
        const auto &sign = (j % 2 == 0) ? plus : minus;
        if (e1 * step < order) {
            c[e1 * step] = sign;
        }
        if (j > 0 && e2 * step < order) {
            c[e2 * step] = sign;
        }
    }
    return r;
}

/// c * q^s * prod f_a^b. Negative exponents are handled by sparse division,
/// so the cost is O(N sqrt N) per unit of |b|.
template <class Ring>
Series<Ring> eta_quotient(const EtaQuotient &eq, const Ring &ring, std::size_t order)
{
    if (eq.q_power() < 0) {
        throw std::invalid_argument("negative power of q in eta quotient");
    }
    const auto s = static_cast<std::size_t>(eq.q_power());
    if (eq.coeff() == 0 || s >= order) {
        return zero(ring, order);
    }
    // the product only needs order - s coefficients before the shift
    const std::size_t inner = order - s;
    Series<Ring> acc = one(ring, inner);
    for (const auto &[sub, e] : eq.factors()) {
        const auto f = pochhammer(sub, ring, inner);
        if (e > 0) {
            for (long i = 0; i < e; ++i) {
                acc = mul(acc, f);
            }
        } else {
            for (long i = 0; i < -e; ++i) {
                acc = divide(acc, f);
            }
        }
    }
    if (eq.coeff() != 1) {
        acc = scale(acc, ring.from_int(static_cast<long>(eq.coeff())));
    }
    Series<Ring> r(ring, order);
    for (std::size_t n = 0; n < inner; ++n) {
        r.data()[n + s] = std::move(acc.data()[n]);
    }
    return r;
}

/// Sum of the terms of an eta expression.
template <class Ring>
Series<Ring> evaluate(const EtaExpression &expr, const Ring &ring, std::size_t order)
{
    Series<Ring> total = zero(ring, order);
    for (const auto &term : expr) {
        total = add(total, eta_quotient(term, ring, order));
    }
    return total;
}

template <class Ring>
Series<Ring> evaluate(std::string_view expr, const Ring &ring, std::size_t order)
{
    return evaluate(parse_eta_expression(expr), ring, order);
}

/// phi(q) = sum_{n in Z} q^{n^2} and psi(q) = sum_{n>=0} q^{n(n+1)/2}, summed
/// directly. The (-q) variants flip the sign of every odd exponent.
template <class Ring>
Series<Ring> theta(ThetaKind kind, const Ring &ring, std::size_t order)
{
    Series<Ring> r(ring, order);
    auto &c = r.data();
    const bool phi = kind == ThetaKind::PhiPlus || kind == ThetaKind::PhiMinus;
    const bool twisted = kind == ThetaKind::PhiMinus || kind == ThetaKind::PsiMinus;
    for (std::size_t n = 0;; ++n) {
        const std::size_t e = phi ? n * n : n * (n + 1) / 2;
        if (e >= order) {
            break;
        }
        // n and -n both contribute to phi for n > 0
        auto v = ring.from_int(phi && n > 0 ? 2 : 1);
        if (twisted && e % 2 == 1) {
            v = ring.neg(v);
        }
        c[e] = std::move(v);
    }
    return r;
}

/// sum_{n < order} A(n) q^n, built as f_1 / f_4.
template <class Ring>
Series<Ring> a_series(const Ring &ring, std::size_t order)
{
    return eta_quotient(EtaQuotient{}.times_f(1, 1).times_f(4, -1), ring, order);
}

} // namespace qlab
