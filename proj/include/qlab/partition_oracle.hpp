#pragma once

// Ground truth for A(n) straight from the combinatorial definition: cubic
// partitions (even parts come in two colors) counted with sign (-1)^{#parts}.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qlab/ring.hpp"

namespace qlab
{

enum class PartColor { First, Second };

struct ColoredPart {
    long value;
    PartColor color;
};

struct OracleCount {
    long n;
    std::uint64_t even_parts_count;
    std::uint64_t odd_parts_count;
    std::int64_t a_value; // even_parts_count - odd_parts_count
};

inline constexpr long kDefaultEnumerationCap = 40;

class EnumerationCapExceeded : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

/// Explicit enumeration of the cubic partitions of n. Throws
/// EnumerationCapExceeded when n > cap; use signed_count_dp for larger n.
OracleCount enumerate_cubic(long n, long cap = kDefaultEnumerationCap);

/// Calls visit(parts) for every cubic partition of n, parts in canonical
/// order: value descending, First before Second for equal values.
void for_each_cubic_partition(long n, const std::function<void(const std::vector<ColoredPart> &)> &visit,
                              long cap = kDefaultEnumerationCap);

/// A(0..limit-1) by a signed dynamic program over part types: each odd value
/// once and each even value twice, a part type used m times contributing
/// (-1)^m.
std::vector<Integer> signed_count_dp(long limit);

/// Number of cubic partitions of 0..limit-1, same dynamic program unsigned.
std::vector<Integer> cubic_count_dp(long limit);

} // namespace qlab
