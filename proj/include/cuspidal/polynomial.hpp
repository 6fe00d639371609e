#pragma once

#include <span>
#include <string>
#include <vector>

#include "cuspidal/context.hpp"
#include "cuspidal/rational.hpp"

namespace cuspidal {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Multivariate polynomial with exact rational coefficients over a fixed
// variable context. Canonical form: terms sorted descending by degrevlex
// (context tie-break), no zero coefficients stored. Immutable value type;
// all operations are pure.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
  static Polynomial constant(ContextPtr ctx, Rational value);
  static Polynomial variable(ContextPtr ctx, std::size_t i);
  static Polynomial monomial(ContextPtr ctx, Monomial m, Rational coeff);
  // Normalizes an arbitrary term list into canonical form.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  // Value of the degree-zero part (the whole value when is_constant()).
  Rational constant_value() const;
  // Max total degree of any term; 0 for the zero polynomial.
  std::uint64_t total_degree() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_context(a.ctx_, b.ctx_) && a.equal_terms(b);
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  bool equal_terms(const Polynomial& o) const;

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

// Largest term of p under the given order. p must be nonzero.
const Term& leading_term(const Polynomial& p, const MonomialOrder& order);

// Sum of a_i * b_i over parallel spans (gradient / vector-field pairings).
Polynomial dot(std::span<const Polynomial> a, std::span<const Polynomial> b);

}  // namespace cuspidal
