#include "hgtrace/estrada.hpp"

#include <stdexcept>

#include "hgtrace/errors.hpp"
#include "hgtrace/trace.hpp"

namespace hgtrace {

long max_degree(const Hypergraph& h) {
    long best = 0;
    for (int v = 0; v < h.n(); ++v) best = std::max<long>(best, degree(h, v));
    return best;
}

Rational estrada_tail_bound(const Hypergraph& h, long depth) {
    long delta = max_degree(h);
    if (depth + 2 <= delta)
        throw std::invalid_argument(
            "estrada: depth too small for the tail bound; need depth + 2 > max degree, "
            "try depth >= 2 * max degree + 8");
    Rational tail = Rational(eigenvalue_count(h)) * Rational(int_pow(delta, depth + 1));
    tail /= Rational(factorial(depth + 1));
    tail *= Rational(depth + 2) / Rational(depth + 2 - delta);
    return tail;
}

CertifiedValue estrada_truncated(const Hypergraph& h, long depth) {
    if (depth < h.m())
        throw std::invalid_argument("estrada: depth must be at least m");
    if (classify_topology(h) == Topology::unsupported)
        throw UnsupportedTopologyError(
            "estrada: input is not a connected hypertree or linear unicyclic hypergraph");
    Rational tail = estrada_tail_bound(h, depth); // also validates depth vs max degree
    Rational partial = Rational(eigenvalue_count(h));
    for (long d = 1; d <= depth; ++d) {
        if (h.m() >= 3 && d % h.m() != 0) continue; // those traces vanish
        partial += trace(h, d) / Rational(factorial(d));
    }
    return CertifiedValue{partial, tail, depth};
}

long default_estrada_depth(const Hypergraph& h) {
    const long m = h.m();
    long floor_ = std::max<long>(4 * m, 2 * max_degree(h) + 8);
    long depth = ((floor_ + m - 1) / m) * m;
    const Rational tol(1, 1000000);
    while (estrada_tail_bound(h, depth) > tol) depth += m;
    return depth;
}

CompareVerdict compare_ee(const Hypergraph& a, const Hypergraph& b, long depth) {
    CertifiedValue va = estrada_truncated(a, depth);
    CertifiedValue vb = estrada_truncated(b, depth);
    if (va.lower() > vb.upper()) return CompareVerdict::a_greater;
    if (vb.lower() > va.upper()) return CompareVerdict::b_greater;
    return CompareVerdict::inconclusive;
}

} // namespace hgtrace
