#pragma once

#include "rtm/hopf.hpp"
#include "rtm/words.hpp"

namespace rtm {

/// The commutative product on Q<x,y> defined by recursion on last letters:
///
///   vx <> wx = (v <> wx)x - (vy <> w)x      vx <> wy = (v <> wy)x + (vx <> w)y
///   vy <> wx = (v <> wx)y + (vy <> w)x      vy <> wy = (v <> wy)y - (vx <> w)y
///
/// with 1 as the unit. Word pairs are memoized (unordered, by commutativity).
Poly diamond(const Word& v, const Word& w);
Poly diamond(const Poly& v, const Poly& w);

/// The algebra map f -> F_f into Q + hy: F_1 = 1, F_vertex = y,
/// F_{B+(f)} = R(F_f) for f != 1, F_{gh} = F_g <> F_h.
Poly sigma(const Tree& t);
Poly sigma(const Forest& f);
Poly sigma(const HElem& a);

}  // namespace rtm
