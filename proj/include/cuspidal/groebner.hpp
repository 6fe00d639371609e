#pragma once

#include <memory>
#include <span>
#include <vector>

#include "cuspidal/polynomial.hpp"

namespace cuspidal {

struct GBOptions {
  // Maximum number of S-pair reductions before giving up with
  // ErrorCode::step_limit_exceeded. 0 means unlimited.
  unsigned long step_limit = 0;
};

// Reduced Groebner basis: monic generators, pairwise distinct leading terms,
// no term of any element divisible by the leading term of another. Immutable
// once constructed; safe to share across threads.
class GroebnerBasis {
 public:
  const std::vector<Polynomial>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const ContextPtr& context() const { return ctx_; }
  bool reduced() const { return true; }
  bool empty() const { return gens_.empty(); }

  // Leading monomial of generator i under order().
  const Monomial& leading_monomial(std::size_t i) const { return lead_[i]; }

 private:
  friend GroebnerBasis reduced_groebner_basis(std::span<const Polynomial>, MonomialOrder,
                                              const GBOptions&);
  GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> gens);

  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> lead_;
};

// Buchberger with the Gebauer-Moeller pair criteria (coprime leading terms,
// chain criterion) and normal selection (smallest lcm in the active order).
GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, MonomialOrder order,
                                     const GBOptions& options = {});

// Remainder of full multivariate division: no term of the result is divisible
// by any leading term of G, and p - result lies in <G>.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

// True iff the ideal is the whole ring, i.e. G = {1}.
bool contains_one(const GroebnerBasis& g);

// The monomials outside the leading-term ideal, sorted ascending by the
// basis order. Finite exactly when every variable has a pure power among the
// leading terms.
struct StandardMonomialBasis {
  std::vector<Monomial> monomials;
  std::size_t dimension() const { return monomials.size(); }
};

// Throws ErrorCode::infinite_dimensional when the quotient has infinite
// dimension.
StandardMonomialBasis standard_monomials(const GroebnerBasis& g);

// Reduction engine with cached integer forms of a fixed basis. Construction
// is cheap; normal_form calls against one Reducer may run concurrently.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& g);
  ~Reducer();
  Reducer(Reducer&&) noexcept;
  Reducer& operator=(Reducer&&) noexcept;

  Polynomial normal_form(const Polynomial& p) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cuspidal
