#include "cuspidal/matrix.hpp"

#include <optional>

#include "cuspidal/error.hpp"

namespace cuspidal {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, ContextPtr ctx)
    : rows_(rows), cols_(cols), ctx_(std::move(ctx)),
      entries_(rows * cols, Polynomial(ctx_)) {
  if (rows == 0 || cols == 0) fail(ErrorCode::invalid_argument, "empty matrix");
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) fail(ErrorCode::invalid_argument, "empty matrix");
  if (entries.size() != rows * cols)
    fail(ErrorCode::dimension_mismatch, "entry count != rows*cols");
  ctx_ = entries.front().context();
  for (const auto& e : entries)
    if (!same_context(ctx_, e.context()))
      fail(ErrorCode::context_mismatch, "matrix entries with mixed contexts");
  entries_ = std::move(entries);
}

PolyMatrix PolyMatrix::stacked_over(const PolyMatrix& below) const {
  if (cols_ != below.cols_) fail(ErrorCode::dimension_mismatch, "stack: column mismatch");
  if (!same_context(ctx_, below.ctx_)) fail(ErrorCode::context_mismatch, "stack: context mismatch");
  std::vector<Polynomial> entries = entries_;
  entries.insert(entries.end(), below.entries_.begin(), below.entries_.end());
  return PolyMatrix(rows_ + below.rows_, cols_, std::move(entries));
}

PolyMatrix PolyMatrix::without_column(std::size_t c) const {
  if (c >= cols_) fail(ErrorCode::invalid_argument, "column index out of range");
  if (cols_ == 1) fail(ErrorCode::invalid_argument, "cannot remove the only column");
  std::vector<Polynomial> entries;
  entries.reserve(rows_ * (cols_ - 1));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols_; ++j)
      if (j != c) entries.push_back(at(r, j));
  return PolyMatrix(rows_, cols_ - 1, std::move(entries));
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix jacobian(std::span<const Polynomial> polys) {
  if (polys.empty()) fail(ErrorCode::invalid_argument, "jacobian of empty list");
  const ContextPtr& ctx = polys.front().context();
  std::size_t m = ctx->size();
  std::vector<Polynomial> entries;
  entries.reserve(polys.size() * m);
  for (const auto& p : polys) {
    if (!same_context(ctx, p.context()))
      fail(ErrorCode::context_mismatch, "jacobian: context mismatch");
    for (std::size_t j = 0; j < m; ++j) entries.push_back(p.derivative(j));
  }
  return PolyMatrix(polys.size(), m, std::move(entries));
}

namespace {

Polynomial det_cofactor(const PolyMatrix& m, std::vector<std::size_t> cols, std::size_t row) {
  const std::size_t k = cols.size();
  if (k == 1) return m.at(row, cols[0]);
  Polynomial acc(m.context());
  for (std::size_t i = 0; i < k; ++i) {
    const Polynomial& pivot = m.at(row, cols[i]);
    if (pivot.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) rest.push_back(cols[j]);
    Polynomial minor = det_cofactor(m, std::move(rest), row + 1);
    Polynomial contrib = pivot * minor;
    acc = (i % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

// Fraction-free Bareiss determinant over the polynomial ring; every division
// is exact.
Polynomial det_bareiss(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Polynomial> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> Polynomial& { return a[i * n + j]; };

  Polynomial prev = Polynomial::constant(m.context(), 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && at(piv, k).is_zero()) ++piv;
      if (piv == n) return Polynomial(m.context());  // zero column, det = 0
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        auto q = try_divide_exact(num, prev);
        if (!q) fail(ErrorCode::internal, "bareiss: inexact division");
        at(i, j) = std::move(*q);
      }
      at(i, k) = Polynomial(m.context());
    }
    prev = at(k, k);
  }
  Polynomial det = at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::dimension_mismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n <= 4) {
    std::vector<std::size_t> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return det_cofactor(m, std::move(cols), 0);
  }
  return det_bareiss(m);
}

std::vector<Polynomial> column_deleted_minors(const PolyMatrix& m) {
  if (m.rows() + 1 != m.cols())
    fail(ErrorCode::dimension_mismatch, "column-deleted minors need rows = cols - 1");
  std::vector<Polynomial> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(determinant(m.without_column(c)));
  return out;
}

RationalMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).evaluate(point);
  return r;
}

namespace {

// Clears denominators row by row (row scaling preserves rank and, up to a
// positive factor, determinants are corrected afterwards), then runs integer
// Bareiss. Returns the echelon pivots and the determinant scale.
struct BareissResult {
  std::size_t rank = 0;
  mpz_class det;        // determinant of the scaled integer matrix (square case)
  mpq_class det_scale;  // product of row scalings
  int sign = 1;
};

BareissResult bareiss_int(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  BareissResult res;
  res.det_scale = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = m.at(i, j).raw() * l;
      a[i * cols + j] = scaled.get_num();
    }
    res.det_scale *= l;
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return a[i * cols + j]; };

  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(piv, j));
      res.sign = -res.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = at(i, j) * at(r, c) - at(i, c) * at(r, j);
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(q);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  res.rank = r;
  res.det = (r == rows && rows == cols) ? prev : mpz_class(0);
  return res;
}

}  // namespace

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::dimension_mismatch, "determinant of non-square matrix");
  if (m.rows() == 0) return Rational(1);
  BareissResult res = bareiss_int(m);
  if (res.det == 0) return Rational(0);
  mpz_class num = res.sign < 0 ? mpz_class(-res.det) : res.det;
  return Rational(num) / Rational(mpz_class(res.det_scale.get_num()));
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_int(m).rank;
}

std::optional<Polynomial> try_divide_exact(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) fail(ErrorCode::division_by_zero, "polynomial division by zero");
  const MonomialOrder ord{OrderKind::degrevlex};
  Polynomial rem = p;
  std::vector<Term> quotient;
  const Term& dl = leading_term(divisor, ord);
  while (!rem.is_zero()) {
    const Term& rl = rem.terms().front();  // canonical order leading term
    if (!dl.mono.divides(rl.mono)) return std::nullopt;
    Term t{rl.mono.divided_by(dl.mono), rl.coeff / dl.coeff};
    rem = rem - divisor * Polynomial::monomial(p.context(), t.mono, t.coeff);
    quotient.push_back(std::move(t));
  }
  return Polynomial::from_terms(p.context(), std::move(quotient));
}

}  // namespace cuspidal
