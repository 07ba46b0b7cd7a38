#pragma once

// Exact rational versions of the local coefficients, used to check identities
// with zero tolerance on small graphs.

#include "hocc/cliques.hpp"
#include "hocc/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace hocc::exact {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// l |K_{l+1}(u)| / ((d_u - l + 1) |K_l(u)|), absent when undefined.
std::vector<std::optional<Rational>> local_coefficients(const Graph& g, const CliqueCounts& open,
                                                        const CliqueCounts& closing);

// l |K_{l+1}(u)| / |W_l(u)| with |W_l(u)| taken from an explicit wedge count.
std::vector<std::optional<Rational>> local_coefficients_from_wedges(
    std::span<const Count> wedges, unsigned order, const CliqueCounts& closing);

Integer binomial(unsigned n, unsigned k);

}  // namespace hocc::exact
