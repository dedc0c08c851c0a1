// Certified truncated evaluation of the Estrada index
//   EE(H) = sum_{d >= 0} Tr_d / d!.
// The partial sum is exact; every dropped term is nonnegative and bounded by
// N Delta^d / d!, giving a rigorous enclosure [partial, partial + tail].
#pragma once

#include "hgtrace/hypergraph.hpp"
#include "hgtrace/rational.hpp"

namespace hgtrace {

struct CertifiedValue {
    Rational partial_sum; // sum of Tr_d / d! for d <= depth, exact
    Rational tail_bound;  // upper bound on the dropped remainder, exact
    long depth = 0;

    Rational lower() const { return partial_sum; }
    Rational upper() const { return partial_sum + tail_bound; }
};

long max_degree(const Hypergraph& h);

// N Delta^{D+1} / (D+1)! * (D+2) / (D+2-Delta); requires D + 2 > Delta.
// Valid because every eigenvalue has modulus at most the maximum degree.
Rational estrada_tail_bound(const Hypergraph& h, long depth);

// Exact enclosure of EE(h) at truncation depth D >= m. For m >= 3 only the
// depths divisible by m contribute; for m = 2 every depth can contribute (odd
// powers matter on graphs with odd cycles), so all are summed.
CertifiedValue estrada_truncated(const Hypergraph& h, long depth);

// Smallest multiple of m that is >= max(4m, 2*maxdeg + 8) and whose tail
// bound is at most 1e-6, so default enclosures are always decision-grade.
long default_estrada_depth(const Hypergraph& h);

enum class CompareVerdict { a_greater, b_greater, inconclusive };

// Interval comparison at one truncation depth; never claims equality.
CompareVerdict compare_ee(const Hypergraph& a, const Hypergraph& b, long depth);

} // namespace hgtrace
