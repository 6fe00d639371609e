#pragma once

#include <span>
#include <vector>

#include "cuspidal/polynomial.hpp"

namespace cuspidal {

// Rectangular matrix of polynomials sharing one context, row-major.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, ContextPtr ctx);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const ContextPtr& context() const { return ctx_; }

  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  // Rows of this stacked over rows of below.
  PolyMatrix stacked_over(const PolyMatrix& below) const;
  PolyMatrix without_column(std::size_t c) const;

 private:
  std::size_t rows_, cols_;
  ContextPtr ctx_;
  std::vector<Polynomial> entries_;
};

// Rectangular matrix of rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  bool is_symmetric() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

// k x m Jacobian of a list of k polynomials in m variables: entry (i, j) is
// the partial derivative of the i-th polynomial by the j-th variable.
PolyMatrix jacobian(std::span<const Polynomial> polys);

// Exact symbolic determinant. Cofactor expansion up to 4x4, fraction-free
// Bareiss elimination (exact division in the polynomial ring) above.
Polynomial determinant(const PolyMatrix& m);

// For a k x (k+1) matrix, the k+1 maximal minors w_i = det(M with column i
// removed), i = 0..k.
std::vector<Polynomial> column_deleted_minors(const PolyMatrix& m);

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);

Rational determinant(const RationalMatrix& m);

// Exact rank over Q via fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

// Exact quotient q with p == q * divisor, if it exists.
std::optional<Polynomial> try_divide_exact(const Polynomial& p, const Polynomial& divisor);

}  // namespace cuspidal
