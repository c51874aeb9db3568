#pragma once

#include "rr1/types.hpp"

#include <functional>
#include <string>

namespace rr1 {

/// Parses a complex scalar written as "re", "re+imj", "re-imj", "imj" or "j";
/// both 'j' and 'i' are accepted as the imaginary unit. Whitespace around the
/// token is ignored. Throws ParseError on anything else.
Complex parse_complex(const std::string& token);

/// Formats a double with 17 significant digits (full round-trip precision).
std::string format_full(double x);

/// Formats a complex scalar as "re+imj" with full precision.
std::string format_complex(Complex z);

namespace detail {
/// Number of worker threads: RR1_THREADS if set and positive, otherwise
/// hardware concurrency (at least 1).
int thread_count();
} // namespace detail

/// Runs fn(i) for i in [0, n). Work is split into contiguous chunks over the
/// worker threads; every index is processed exactly once and writes only its
/// own outputs, so results are independent of the thread count.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace rr1
