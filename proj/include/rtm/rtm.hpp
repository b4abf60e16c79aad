#pragma once

#include "rtm/hopf.hpp"
#include "rtm/words.hpp"

namespace rtm {

/// Rooted tree map of a single tree on a letter: the vertex sends x to xy and
/// y to -xy; a graft B+(f) sends x to R(f~(x)) and y to its negative.
Poly rtm_tree_on_letter(const Tree& t, Letter v);

/// f~(w) for a forest and a word.
///
/// The empty forest acts as the identity, any other forest kills constants.
/// On a letter, a forest g h acts as g~(h~(v)) with g its first tree. On a
/// longer word w v, the value is the concatenation sum over the coproduct,
/// sum f1~(w) f2~(v).
Poly rtm_apply(const Forest& f, const Word& w);
Poly rtm_apply(const Forest& f, const Poly& w);
Poly rtm_apply(const HElem& f, const Poly& w);

/// x (F_f <> w') for input x w'. Independent route used to cross-check
/// rtm_apply on x-prefixed words; throws DomainError on words not starting with x.
Poly rtm_apply_via_sigma(const HElem& f, const Poly& w);

/// True iff f~(x) = 0, which holds iff f~ vanishes identically.
/// Throws DomainError if f has a term on the empty forest.
bool rho_is_zero_on_x(const HElem& f);

}  // namespace rtm
