#ifndef RADX_SIGNATURE_HPP
#define RADX_SIGNATURE_HPP

#include <vector>

#include "radx/rational.hpp"

namespace radx {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Signature (#positive - #negative inertia) of a symmetric non-singular
/// rational matrix by exact congruence diagonalization. Zero diagonals are
/// handled by the hyperbolic row+column trick, so forms like [[0,1],[1,0]]
/// work. Throws SingularMatrix on singular input; no floating point anywhere.
int signature(RationalMatrix m);

}  // namespace radx

#endif  // RADX_SIGNATURE_HPP
