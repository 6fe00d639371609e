#include "cuspidal/quotient.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "cuspidal/error.hpp"

namespace cuspidal {

SymmetricForm::SymmetricForm(RationalMatrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) fail(ErrorCode::invalid_argument, "matrix is not symmetric");
}

namespace {

// Characteristic polynomial det(lambda*I - A) of an integer matrix by the
// division-free Berkowitz algorithm. Returns coefficients in descending
// powers; the leading coefficient is 1.
std::vector<mpz_class> berkowitz_charpoly(const std::vector<mpz_class>& a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> const mpz_class& { return a[i * n + j]; };
  std::vector<mpz_class> c{mpz_class(1)};
  if (n == 0) return c;
  c.push_back(mpz_class(-at(0, 0)));
  std::vector<mpz_class> t, q, qn;
  for (std::size_t r = 2; r <= n; ++r) {
    // Toeplitz column: 1, -corner, -(R * M^k * C) for the principal
    // (r-1)x(r-1) block M, last row R and last column C.
    t.assign(r + 1, mpz_class(0));
    t[0] = 1;
    t[1] = -at(r - 1, r - 1);
    q.assign(r - 1, mpz_class(0));
    for (std::size_t i = 0; i < r - 1; ++i) q[i] = at(i, r - 1);
    for (std::size_t k = 2; k <= r; ++k) {
      mpz_class dot(0);
      for (std::size_t i = 0; i < r - 1; ++i) dot += at(r - 1, i) * q[i];
      t[k] = -dot;
      if (k == r) break;
      qn.assign(r - 1, mpz_class(0));
      for (std::size_t i = 0; i < r - 1; ++i) {
        mpz_class s(0);
        for (std::size_t j = 0; j < r - 1; ++j) s += at(i, j) * q[j];
        qn[i] = std::move(s);
      }
      q.swap(qn);
    }
    std::vector<mpz_class> next(r + 1, mpz_class(0));
    for (std::size_t p = 0; p <= r; ++p) {
      mpz_class s(0);
      for (std::size_t off = 0; off < c.size() && off <= p; ++off) {
        std::size_t shift = p - off;
        if (shift <= r) s += t[shift] * c[off];
      }
      next[p] = std::move(s);
    }
    c = std::move(next);
  }
  return c;
}

int sign_variations(const std::vector<mpz_class>& c, bool flip_odd) {
  int count = 0, prev = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int s = sgn(c[i]);
    if (s == 0) continue;
    if (flip_odd && (i % 2 == 1)) s = -s;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

SignatureRank signature_and_rank(const SymmetricForm& q) {
  const RationalMatrix& m = q.matrix();
  const std::size_t d = m.rows();
  if (d == 0) return {0, 0};
  // A positive common scaling preserves signature and rank.
  mpz_class l(1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
  std::vector<mpz_class> a(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      mpz_class scale;
      mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
      a[i * d + j] = m.at(i, j).num() * scale;
    }
  std::vector<mpz_class> coeffs = berkowitz_charpoly(a, d);
  std::size_t zero_mult = 0;
  while (!coeffs.empty() && coeffs.back() == 0) {
    coeffs.pop_back();
    ++zero_mult;
  }
  // The spectrum of a symmetric matrix is all-real, so Descartes' rule is
  // exact on the characteristic polynomial.
  int pos = sign_variations(coeffs, false);
  int neg = sign_variations(coeffs, true);
  long rank = static_cast<long>(d - zero_mult);
  if (pos + neg != rank)
    fail(ErrorCode::internal, "signature: sign variations inconsistent with rank");
  return {pos - neg, rank};
}

// ---------------------------------------------------------------------------

namespace {

// Sparse coordinate vector in the standard monomial basis, sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

Rational sparse_dot(const SparseVec& v, const std::vector<Rational>& dense) {
  Rational acc(0);
  for (const auto& [i, c] : v) acc += c * dense[i];
  return acc;
}

}  // namespace

struct QuotientAlgebra::Impl {
  GroebnerBasis gb;
  StandardMonomialBasis basis;
  Reducer reducer;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  // Products of basis monomials reduced to the basis: entry (i, j), i <= j,
  // at triangular position i*D - i*(i-1)/2 + (j-i).
  std::vector<SparseVec> products;
  std::vector<Rational> tau;  // tau[k] = trace of multiplication by b_k

  Impl(GroebnerBasis g, StandardMonomialBasis b)
      : gb(std::move(g)), basis(std::move(b)), reducer(gb) {}

  std::size_t dim() const { return basis.monomials.size(); }

  const SparseVec& product(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return products[i * dim() - i * (i - 1) / 2 + (j - i)];
  }

  SparseVec to_sparse(const Polynomial& reduced) const {
    SparseVec v;
    v.reserve(reduced.terms().size());
    for (const auto& t : reduced.terms()) {
      auto it = index.find(t.mono);
      if (it == index.end())
        fail(ErrorCode::internal, "normal form left the standard basis");
      v.push_back({it->second, t.coeff});
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  }

  SparseVec reduce_to_sparse(const Polynomial& p) const { return to_sparse(reducer.normal_form(p)); }

  void build_tables() {
    const std::size_t d = dim();
    const ContextPtr& ctx = gb.context();
    products.resize(d * (d + 1) / 2);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        Monomial prod = basis.monomials[i].times(basis.monomials[j]);
        auto it = index.find(prod);
        if (it != index.end()) {
          products[i * d - i * (i - 1) / 2 + (j - i)] = {{it->second, Rational(1)}};
        } else {
          products[i * d - i * (i - 1) / 2 + (j - i)] =
              reduce_to_sparse(Polynomial::monomial(ctx, prod, Rational(1)));
        }
      }
    }
    tau.assign(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k) {
      Rational acc(0);
      for (std::size_t i = 0; i < d; ++i) {
        const SparseVec& row = product(k, i);
        auto it = std::lower_bound(row.begin(), row.end(), std::uint32_t(i),
                                   [](const auto& e, std::uint32_t v) { return e.first < v; });
        if (it != row.end() && it->first == i) acc += it->second;
      }
      tau[k] = std::move(acc);
    }
  }
};

QuotientAlgebra::QuotientAlgebra(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
QuotientAlgebra::~QuotientAlgebra() = default;
QuotientAlgebra::QuotientAlgebra(QuotientAlgebra&&) noexcept = default;
QuotientAlgebra& QuotientAlgebra::operator=(QuotientAlgebra&&) noexcept = default;

QuotientAlgebra QuotientAlgebra::build(GroebnerBasis gb) {
  StandardMonomialBasis basis = standard_monomials(gb);
  auto impl = std::make_unique<Impl>(std::move(gb), std::move(basis));
  for (std::uint32_t i = 0; i < impl->basis.monomials.size(); ++i)
    impl->index.emplace(impl->basis.monomials[i], i);
  impl->build_tables();
  return QuotientAlgebra(std::move(impl));
}

std::size_t QuotientAlgebra::dimension() const { return impl_->dim(); }
const StandardMonomialBasis& QuotientAlgebra::basis() const { return impl_->basis; }
const GroebnerBasis& QuotientAlgebra::gb() const { return impl_->gb; }

RationalMatrix QuotientAlgebra::multiplication_matrix(const Polynomial& g) const {
  const std::size_t d = impl_->dim();
  SparseVec gamma = impl_->reduce_to_sparse(g);
  RationalMatrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& [l, c] : gamma)
      for (const auto& [i, coeff] : impl_->product(l, j)) m.at(i, j) += c * coeff;
  return m;
}

Rational QuotientAlgebra::trace(const Polynomial& g) const {
  SparseVec gamma = impl_->reduce_to_sparse(g);
  return sparse_dot(gamma, impl_->tau);
}

SymmetricForm QuotientAlgebra::theta_matrix(const Polynomial& delta) const {
  const std::size_t d = impl_->dim();
  const ContextPtr& ctx = impl_->gb.context();
  // theta1[i][j] = trace(b_i * b_j) comes straight off the product table.
  RationalMatrix theta1(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Rational v = sparse_dot(impl_->product(i, j), impl_->tau);
      theta1.at(i, j) = v;
      theta1.at(j, i) = std::move(v);
    }
  if (delta.is_constant()) {
    Rational c = delta.constant_value();
    if (c.is_one()) return SymmetricForm(std::move(theta1));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) theta1.at(i, j) *= c;
    return SymmetricForm(std::move(theta1));
  }
  // trace(delta*b_i*b_j) = sum_l u_i[l] * theta1[l][j] with u_i = NF(delta*b_i).
  RationalMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    SparseVec u = impl_->reduce_to_sparse(
        delta * Polynomial::monomial(ctx, impl_->basis.monomials[i], Rational(1)));
    for (std::size_t j = 0; j < d; ++j) {
      Rational acc(0);
      for (const auto& [l, c] : u) acc += c * theta1.at(l, j);
      out.at(i, j) = std::move(acc);
    }
  }
  if (!out.is_symmetric()) fail(ErrorCode::internal, "trace form is not symmetric");
  return SymmetricForm(std::move(out));
}

}  // namespace cuspidal
