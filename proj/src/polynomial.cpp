#include "cuspidal/polynomial.hpp"

#include <algorithm>

#include "cuspidal/error.hpp"

namespace cuspidal {

namespace {

const MonomialOrder kCanonical{OrderKind::degrevlex};

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) fail(ErrorCode::context_mismatch, "polynomial context mismatch");
}

}  // namespace

Polynomial Polynomial::constant(ContextPtr ctx, Rational value) {
  Polynomial p(std::move(ctx));
  if (!value.is_zero())
    p.terms_.push_back({Monomial(p.ctx_->size()), std::move(value)});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t i) {
  if (i >= ctx->size()) fail(ErrorCode::invalid_argument, "variable index out of range");
  std::vector<std::uint32_t> e(ctx->size(), 0);
  e[i] = 1;
  Polynomial p(std::move(ctx));
  p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, Rational coeff) {
  if (m.size() != ctx->size()) fail(ErrorCode::dimension_mismatch, "monomial length != context size");
  Polynomial p(std::move(ctx));
  if (!coeff.is_zero()) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.size() != ctx->size())
      fail(ErrorCode::dimension_mismatch, "term length != context size");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return kCanonical.greater(a.mono, b.mono);
  });
  Polynomial p(std::move(ctx));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  const Term& last = terms_.back();
  return last.mono.is_one() ? last.coeff : Rational(0);
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::equal_terms(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_context(ctx_, o.ctx_);
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = kCanonical.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_context(ctx_, o.ctx_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) prod.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
  return from_terms(ctx_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ctx_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = constant(ctx_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ctx_->size()) fail(ErrorCode::invalid_argument, "derivative index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    auto exps = t.mono.exponents();
    exps[var] = e - 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * Rational(long(e))});
  }
  return from_terms(ctx_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ctx_->size())
    fail(ErrorCode::dimension_mismatch, "evaluation point has wrong dimension");
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      std::uint32_t e = t.mono[i];
      if (e != 0) term *= point[i].pow(e);
    }
    acc += term;
  }
  return acc;
}

const Term& leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "leading term of zero polynomial");
  const auto& terms = p.terms();
  if (order.kind == OrderKind::degrevlex) return terms.front();  // canonical storage order
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (order.greater(terms[i].mono, terms[best].mono)) best = i;
  return terms[best];
}

Polynomial dot(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  if (a.size() != b.size() || a.empty())
    fail(ErrorCode::dimension_mismatch, "dot product length mismatch");
  Polynomial acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

}  // namespace cuspidal
