#include "rtm/linalg.hpp"

#include <utility>

namespace rtm {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_integral() const {
  for (const auto& q : data_)
    if (q.get_den() != 1) return false;
  return true;
}

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));

    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw DomainError("solve: expected a square system");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.reduced(r, n);
  return x;
}

// ---------------------------------------------------------------------------
// GF(2)

BitMatrix BitMatrix::reduce_mod2(const RationalMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      if (q.get_den() != 1) throw DomainError("reduce_mod2: non-integral entry");
      out.set(r, c, mpz_odd_p(q.get_num_mpz_t()) != 0);
    }
  return out;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto& word = bits_[r * stride_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  word = v ? (word | bit) : (word & ~bit);
}

std::size_t BitMatrix::rank() const {
  std::vector<std::uint64_t> work = bits_;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = row;
    while (pivot < rows_ && !(work[pivot * stride_ + w] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t k = 0; k < stride_; ++k) std::swap(work[pivot * stride_ + k], work[row * stride_ + k]);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != row && (work[r * stride_ + w] & bit))
        for (std::size_t k = 0; k < stride_; ++k) work[r * stride_ + k] ^= work[row * stride_ + k];
    }
    ++row;
  }
  return row;
}

}  // namespace rtm
