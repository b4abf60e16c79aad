#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rtm/rational.hpp"

namespace rtm {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalMatrix transposed() const;
  bool is_integral() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;            // reduced row-echelon form, pivots scaled to 1
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column in increasing order,
/// with a 1 in that free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Unique solution of a v = b for square invertible a; nullopt if singular.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b);

/// Dense matrix over GF(2) with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_) {}

  /// Entrywise reduction mod 2; throws DomainError on a non-integral entry.
  static BitMatrix reduce_mod2(const RationalMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v);

  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace rtm
