#pragma once

#include "jsurf/diagram.hpp"
#include "jsurf/laurent.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jsurf {

struct ResourceLimits {
    std::size_t max_crossings = 2048;
    std::size_t max_states = 4000000;  // memo entries per evaluation
};

/// Thrown when a configured limit is hit; carries the limit name.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficient vector of the Chebyshev polynomial S_n (second kind),
/// coeffs[k] = coefficient of x^k. S_0 = 1, S_1 = x,
/// S_{n+2}(x) = x S_{n+1}(x) - S_n(x).
std::vector<mpz_class> chebyshev(unsigned n);

/// Unreduced Kauffman bracket: every closed loop contributes
/// delta = -q^2 - q^{-2}, the empty diagram maps to 1. Evaluated by a
/// crossing sweep memoized on the pairing of live arc ends.
LaurentPolynomial kauffman_bracket(const Diagram& d,
                                   const ResourceLimits& limits = {});

/// Independent oracle: full 2^c state expansion. Refuses c > 16.
LaurentPolynomial bracket_bruteforce(const Diagram& d);

/// Colored Jones polynomial of a knot diagram,
///   J_K(n) = ((-1)^{n-1} t^{(n^2-1)/4})^w (-1)^{n-1} <S_{n-1}(D)>,
/// the bracket extended linearly over Chebyshev cables.
LaurentPolynomial colored_jones(const Diagram& d, unsigned n,
                                const ResourceLimits& limits = {},
                                bool brute_force = false);

}  // namespace jsurf
