#pragma once

#include <cstddef>

#include "rtm/hopf.hpp"

namespace rtm {

struct RelationReport {
  std::size_t m = 0;
  std::size_t n = 0;
  HElem relation;
  bool sigma_is_zero = false;
  bool rho_x_is_zero = false;
  bool r_identity_holds = false;

  bool all_hold() const { return sigma_is_zero && rho_x_is_zero && r_identity_holds; }
};

/// The degree-(m+n) relation
///
///   f_{m,n} = L_m L_n - sum_{i<m, j<n} C^{m-i+n-j-2}( v . B+(L_i L_j) )
///                     + sum_{(i,j) != (0,0)} C^{m-i+n-j-1}( v . L_i . L_j )
///
/// where L_k is the ladder with k vertices, v the single vertex and C^k wraps
/// a forest in k grafts. Throws DomainError unless m, n >= 1.
HElem build_fmn(std::size_t m, std::size_t n);

/// Evaluates sigma(f_{m,n}), f_{m,n}~(x) and the word-algebra identity.
RelationReport verify_fmn(std::size_t m, std::size_t n);

/// Checks, purely in Q<x,y>,
///
///   R^{m-1}(y) <> R^{n-1}(y)
///     = sum_{i,j} R^{m-i+n-j-2}( y <> Rhat(L_i <> L_j) )
///       - sum_{(i,j) != (0,0)} R^{m-i+n-j-1}( y <> L_i <> L_j )
///
/// with L_0 = 1, L_k = R^{k-1}(y), Rhat(1) = y and Rhat(p) = R(p) otherwise.
bool verify_r_identity(std::size_t m, std::size_t n);

}  // namespace rtm
