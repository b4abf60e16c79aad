#include "rtm/relations.hpp"

#include <algorithm>
#include <vector>

#include "rtm/diamond.hpp"
#include "rtm/rtm.hpp"

namespace rtm {

namespace {

void check_indices(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw DomainError("f_{m,n} requires m, n >= 1");
}

}  // namespace

HElem build_fmn(std::size_t m, std::size_t n) {
  check_indices(m, n);
  const Forest vertex(Tree{});
  HElem out(forest_product(ladder(m), ladder(n)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Forest li_lj = forest_product(ladder(i), ladder(j));
      const Forest grafted(bplus(li_lj));
      out.add_term(chain_over(forest_product(vertex, grafted), m - i + n - j - 2), -1);
      if (i != 0 || j != 0)
        out.add_term(chain_over(forest_product(vertex, li_lj), m - i + n - j - 1), 1);
    }
  }
  return out;
}

bool verify_r_identity(std::size_t m, std::size_t n) {
  check_indices(m, n);
  const Poly y = Poly::y();
  std::vector<Poly> ladders{Poly::constant(1)};
  for (std::size_t k = 1; k < std::max(m, n); ++k) ladders.push_back(op_R_pow(y, k - 1));
  auto r_hat = [&](const Poly& p) { return p == Poly::constant(1) ? y : op_R(p); };

  const Poly lhs = diamond(op_R_pow(y, m - 1), op_R_pow(y, n - 1));
  Poly rhs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Poly lij = diamond(ladders[i], ladders[j]);
      rhs += op_R_pow(diamond(y, r_hat(lij)), m - i + n - j - 2);
      if (i != 0 || j != 0) rhs -= op_R_pow(diamond(y, lij), m - i + n - j - 1);
    }
  }
  return lhs == rhs;
}

RelationReport verify_fmn(std::size_t m, std::size_t n) {
  RelationReport report;
  report.m = m;
  report.n = n;
  report.relation = build_fmn(m, n);
  report.sigma_is_zero = sigma(report.relation).is_zero();
  report.rho_x_is_zero = rho_is_zero_on_x(report.relation);
  report.r_identity_holds = verify_r_identity(m, n);
  return report;
}

}  // namespace rtm
