#pragma once

#include "hochkit/rational.hpp"

namespace hochkit {

/// (-1)^e as a rational.
inline Rational koszul_sign(long e) { return Rational(e % 2 == 0 ? 1 : -1); }
inline int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace hochkit
