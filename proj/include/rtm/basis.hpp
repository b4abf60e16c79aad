#pragma once

#include <map>
#include <span>
#include <vector>

#include "rtm/hopf.hpp"
#include "rtm/linalg.hpp"
#include "rtm/words.hpp"

namespace rtm {

/// U_0 = {1}, U_d = B+(U_{d-1}) u (vertex . U_{d-1}); returned in canonical forest order.
std::vector<Forest> basis_forests(std::size_t d);

/// The 2^{d-1} words of length d ending in y, lexicographic with x < y.
std::vector<Word> hy_words(std::size_t d);

/// Row i holds the coefficients of sigma(rows[i]) over hy_words(d).
RationalMatrix sigma_matrix(std::span<const Forest> rows, std::size_t d);

/// sigma_matrix(basis_forests(d), d); square of size 2^{d-1}.
RationalMatrix basis_matrix(std::size_t d);

bool check_mod2_invertible(std::size_t d);

/// Coefficients c_u with sigma(f) = sum_{u in U_d} c_u sigma(u), one entry per
/// element of U_d. Throws DomainError if f is not d-homogeneous.
std::map<Forest, Rational> decompose(const HElem& f, std::size_t d);

/// Basis of the relations of degree d: the kernel of sigma on the span of all
/// degree-d forests, one vector per free forest (canonical order) with
/// coefficient 1 there.
std::vector<HElem> sigma_kernel(std::size_t d);

}  // namespace rtm
