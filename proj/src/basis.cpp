#include "rtm/basis.hpp"

#include <algorithm>
#include <set>

#include "rtm/diamond.hpp"

namespace rtm {

namespace {

void check_positive(std::size_t d, const char* what) {
  if (d < 1) throw DomainError(std::string(what) + ": degree must be at least 1");
  if (d > 24) throw DomainError(std::string(what) + ": degree too large for a dense matrix");
}

}  // namespace

std::vector<Forest> basis_forests(std::size_t d) {
  std::vector<Forest> level{Forest()};
  const Forest vertex(Tree{});
  for (std::size_t k = 1; k <= d; ++k) {
    std::set<Forest> next;
    for (const auto& f : level) {
      next.insert(Forest(bplus(f)));
      next.insert(forest_product(vertex, f));
    }
    level.assign(next.begin(), next.end());
  }
  return level;
}

std::vector<Word> hy_words(std::size_t d) {
  check_positive(d, "hy_words");
  std::vector<Word> words;
  const std::uint64_t count = std::uint64_t{1} << (d - 1);
  words.reserve(count);
  for (std::uint64_t prefix = 0; prefix < count; ++prefix)
    words.push_back(Word::from_mask(d, (prefix << 1) | 1U));
  return words;
}

RationalMatrix sigma_matrix(std::span<const Forest> rows, std::size_t d) {
  check_positive(d, "sigma_matrix");
  RationalMatrix m(rows.size(), std::size_t{1} << (d - 1));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].degree() != d)
      throw DomainError("sigma_matrix: forest " + rows[r].code() + " is not of degree " +
                        std::to_string(d));
    for (const Poly image = sigma(rows[r]); const auto& [w, c] : image.terms()) {
      // sigma of a degree-d forest lies in hy, so the column is the prefix mask.
      m(r, w.mask() >> 1) = c;
    }
  }
  return m;
}

RationalMatrix basis_matrix(std::size_t d) {
  const auto rows = basis_forests(d);
  return sigma_matrix(rows, d);
}

bool check_mod2_invertible(std::size_t d) {
  return BitMatrix::reduce_mod2(basis_matrix(d)).is_invertible();
}

std::map<Forest, Rational> decompose(const HElem& f, std::size_t d) {
  check_positive(d, "decompose");
  if (!f.is_homogeneous(d))
    throw DomainError("decompose: element is not homogeneous of degree " + std::to_string(d));
  const auto rows = basis_forests(d);
  const RationalMatrix b = sigma_matrix(rows, d);

  std::vector<Rational> target(b.cols());
  for (const Poly image = sigma(f); const auto& [w, c] : image.terms()) target[w.mask() >> 1] = c;

  // sigma(f) = c^T B  <=>  B^T c = sigma(f)
  auto coeffs = solve(b.transposed(), target);
  if (!coeffs) throw DomainError("decompose: basis matrix is singular in degree " + std::to_string(d));
  std::map<Forest, Rational> out;
  for (std::size_t i = 0; i < rows.size(); ++i) out.emplace(rows[i], (*coeffs)[i]);
  return out;
}

std::vector<HElem> sigma_kernel(std::size_t d) {
  check_positive(d, "sigma_kernel");
  const auto forests = enumerate_forests(d);
  const RationalMatrix m = sigma_matrix(forests, d);
  // Relations c with c^T M = 0 are the right kernel of M^T.
  std::vector<HElem> out;
  for (const auto& v : nullspace(m.transposed())) {
    HElem rel;
    for (std::size_t i = 0; i < v.size(); ++i) rel.add_term(forests[i], v[i]);
    out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace rtm
