#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qlab
{

using Integer = mpz_class;

/// Coefficient ring Z, backed by GMP integers.
struct IntegerRing {
    using value_type = Integer;

    static constexpr bool is_exact = true;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const { return v; }
    value_type from_integer(const Integer &v) const { return v; }

    void add_to(value_type &acc, const value_type &x) const { acc += x; }
    void sub_from(value_type &acc, const value_type &x) const { acc -= x; }
    // acc += x * y
    void fma(value_type &acc, const value_type &x, const value_type &y) const
    {
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    // acc -= x * y
    void fms(value_type &acc, const value_type &x, const value_type &y) const
    {
        mpz_submul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
    value_type mul(const value_type &x, const value_type &y) const { return x * y; }
    value_type neg(const value_type &x) const { return -x; }

    bool is_zero(const value_type &x) const { return sgn(x) == 0; }
    bool is_unit(const value_type &x) const { return x == 1 || x == -1; }
    value_type inverse(const value_type &x) const
    {
        if (!is_unit(x)) {
            throw std::domain_error("constant term " + x.get_str() + " is not a unit in Z");
        }
        return x;
    }

    std::string to_string(const value_type &x) const { return x.get_str(); }
    std::string name() const { return "Z"; }

    friend bool operator==(const IntegerRing &, const IntegerRing &) { return true; }
};

/// Coefficient ring Z/mZ. Elements are kept in [0, m).
class ModRing
{
public:
    using value_type = std::uint32_t;

    static constexpr bool is_exact = false;

    explicit ModRing(std::uint32_t modulus) : m_(modulus)
    {
        if (modulus < 2) {
            throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus));
        }
    }

    std::uint32_t modulus() const { return m_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const
    {
        long r = v % static_cast<long>(m_);
        return static_cast<value_type>(r < 0 ? r + m_ : r);
    }
    value_type from_integer(const Integer &v) const
    {
        // mpz_fdiv_ui returns the nonnegative residue
        return static_cast<value_type>(mpz_fdiv_ui(v.get_mpz_t(), m_));
    }

    void add_to(value_type &acc, const value_type &x) const
    {
        std::uint64_t s = std::uint64_t(acc) + x;
        acc = static_cast<value_type>(s >= m_ ? s - m_ : s);
    }
    void sub_from(value_type &acc, const value_type &x) const
    {
        acc = static_cast<value_type>(acc >= x ? acc - x : std::uint64_t(acc) + m_ - x);
    }
    void fma(value_type &acc, const value_type &x, const value_type &y) const
    {
        acc = static_cast<value_type>((std::uint64_t(acc) + std::uint64_t(x) * y % m_) % m_);
    }
    void fms(value_type &acc, const value_type &x, const value_type &y) const
    {
        sub_from(acc, static_cast<value_type>(std::uint64_t(x) * y % m_));
    }
    value_type mul(const value_type &x, const value_type &y) const
    {
        return static_cast<value_type>(std::uint64_t(x) * y % m_);
    }
    value_type neg(const value_type &x) const { return x == 0 ? 0 : m_ - x; }

    bool is_zero(const value_type &x) const { return x == 0; }
    bool is_unit(const value_type &x) const { return std::gcd(x, m_) == 1; }
    value_type inverse(const value_type &x) const
    {
        if (!is_unit(x)) {
            throw std::domain_error("constant term " + std::to_string(x) + " is not a unit mod "
                                    + std::to_string(m_));
        }
        // extended Euclid on signed 64-bit
        std::int64_t r0 = m_, r1 = x, t0 = 0, t1 = 1;
        while (r1 != 0) {
            const std::int64_t q = r0 / r1;
            std::int64_t tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        return from_int(static_cast<long>(t0));
    }

    std::string to_string(const value_type &x) const { return std::to_string(x); }
    std::string name() const { return "Z/" + std::to_string(m_); }

    friend bool operator==(const ModRing &a, const ModRing &b) { return a.m_ == b.m_; }

private:
    std::uint32_t m_;
};

} // namespace qlab
