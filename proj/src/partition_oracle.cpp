#include "qlab/partition_oracle.hpp"

#include <string>

namespace qlab
{

namespace
{

void check_cap(long n, long cap)
{
    if (n < 0) {
        throw std::invalid_argument("n must be nonnegative, got " + std::to_string(n));
    }
    if (n > cap) {
        throw EnumerationCapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap "
                                     + std::to_string(cap) + "; use the dynamic-programming oracle");
    }
}

// Part types in canonical order are (value, color) pairs; a partition is a
// nonincreasing sequence of them. `bound` is the index of the largest
// type still allowed, where type index 2v+1 is (v, First) and 2v is (v,
// Second), so (v, First) sorts before (v, Second) in the part list.
template <class Visit>
void enumerate(long remaining, long bound, std::vector<ColoredPart> &parts, Visit &visit)
{
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (long t = bound; t >= 2; --t) {
        const long value = t / 2;
        const PartColor color = (t % 2 == 1) ? PartColor::First : PartColor::Second;
        if (color == PartColor::Second && value % 2 == 1) {
            continue;
        }
        if (value > remaining) {
            continue;
        }
        parts.push_back({value, color});
        enumerate(remaining - value, t, parts, visit);
        parts.pop_back();
    }
}

} // namespace

void for_each_cubic_partition(long n, const std::function<void(const std::vector<ColoredPart> &)> &visit,
                              long cap)
{
    check_cap(n, cap);
    std::vector<ColoredPart> parts;
    auto fn = [&](const std::vector<ColoredPart> &p) { visit(p); };
    enumerate(n, 2 * n + 1, parts, fn);
}

OracleCount enumerate_cubic(long n, long cap)
{
    check_cap(n, cap);
    OracleCount count{n, 0, 0, 0};
    std::vector<ColoredPart> parts;
    auto tally = [&](const std::vector<ColoredPart> &p) {
        if (p.size() % 2 == 0) {
            ++count.even_parts_count;
        } else {
            ++count.odd_parts_count;
        }
    };
    enumerate(n, 2 * n + 1, parts, tally);
    count.a_value = static_cast<std::int64_t>(count.even_parts_count) - static_cast<std::int64_t>(count.odd_parts_count);
    return count;
}

namespace
{

std::vector<Integer> part_type_dp(long limit, bool signed_count)
{
    if (limit < 1) {
        throw std::invalid_argument("limit must be >= 1, got " + std::to_string(limit));
    }
    const auto n = static_cast<std::size_t>(limit);
    std::vector<Integer> c(n, 0);
    c[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        const int copies = (k % 2 == 0) ? 2 : 1;
        for (int copy = 0; copy < copies; ++copy) {
            // multiply by 1/(1 + q^k) or 1/(1 - q^k)
            for (std::size_t i = k; i < n; ++i) {
                if (signed_count) {
                    c[i] -= c[i - k];
                } else {
                    c[i] += c[i - k];
                }
            }
        }
    }
    return c;
}

} // namespace

std::vector<Integer> signed_count_dp(long limit)
{
    return part_type_dp(limit, true);
}

std::vector<Integer> cubic_count_dp(long limit)
{
    return part_type_dp(limit, false);
}

} // namespace qlab
