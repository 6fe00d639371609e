#include "cuspidal/groebner.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

#include "cuspidal/error.hpp"

namespace cuspidal {

namespace {

// Working coefficients are integers: polynomials are kept primitive over Z
// with positive leading coefficient, and reduction is fraction-free
// pseudo-reduction. This keeps gcd work out of the inner loop and controls
// coefficient blow-up.
struct ZTerm {
  Monomial mono;
  mpz_class coeff;
};

using ZTerms = std::vector<ZTerm>;  // sorted descending by the active order

struct BasisElem {
  ZTerms poly;
  Monomial lt;
  mpz_class lc;  // > 0
  bool redundant = false;
};

void sort_terms(ZTerms& t, const MonomialOrder& ord) {
  std::sort(t.begin(), t.end(),
            [&](const ZTerm& a, const ZTerm& b) { return ord.greater(a.mono, b.mono); });
  ZTerms merged;
  merged.reserve(t.size());
  for (auto& term : t) {
    if (!merged.empty() && merged.back().mono == term.mono) {
      merged.back().coeff += term.coeff;
      if (merged.back().coeff == 0) merged.pop_back();
    } else if (term.coeff != 0) {
      merged.push_back(std::move(term));
    }
  }
  t = std::move(merged);
}

// Divide by integer content, force positive leading coefficient.
void make_primitive(ZTerms& t) {
  if (t.empty()) return;
  mpz_class g(0);
  for (const auto& term : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(t.front().coeff) < 0) g = -g;
  if (g != 1)
    for (auto& term : t) mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators; result is primitive with positive leading coefficient
// under `ord`.
ZTerms zterms_from(const Polynomial& p, const MonomialOrder& ord) {
  ZTerms out;
  out.reserve(p.terms().size());
  mpz_class l(1);
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.den().get_mpz_t());
  for (const auto& t : p.terms()) {
    mpz_class scale;
    mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), t.coeff.den().get_mpz_t());
    out.push_back({t.mono, mpz_class(t.coeff.num() * scale)});
  }
  sort_terms(out, ord);
  make_primitive(out);
  return out;
}

Polynomial to_monic_polynomial(const ContextPtr& ctx, const ZTerms& t) {
  std::vector<Term> terms;
  terms.reserve(t.size());
  const mpz_class& lc = t.front().coeff;
  for (const auto& term : t) terms.push_back({term.mono, Rational(term.coeff, lc)});
  return Polynomial::from_terms(ctx, std::move(terms));
}

// result = a*f_tail - b*(m * g_tail), both inputs sorted descending.
ZTerms merge_combine(const ZTerms& f, std::size_t f_from, const mpz_class& a, const ZTerms& g,
                     std::size_t g_from, const mpz_class& b, const Monomial& m,
                     const MonomialOrder& ord) {
  ZTerms out;
  out.reserve((f.size() - f_from) + (g.size() - g_from));
  std::size_t i = f_from, j = g_from;
  while (i < f.size() && j < g.size()) {
    Monomial gm = g[j].mono.times(m);
    int c = ord.compare(f[i].mono, gm);
    if (c > 0) {
      out.push_back({f[i].mono, mpz_class(a * f[i].coeff)});
      ++i;
    } else if (c < 0) {
      out.push_back({std::move(gm), mpz_class(-b * g[j].coeff)});
      ++j;
    } else {
      mpz_class coeff = a * f[i].coeff - b * g[j].coeff;
      if (coeff != 0) out.push_back({f[i].mono, std::move(coeff)});
      ++i, ++j;
    }
  }
  for (; i < f.size(); ++i) out.push_back({f[i].mono, mpz_class(a * f[i].coeff)});
  for (; j < g.size(); ++j) out.push_back({g[j].mono.times(m), mpz_class(-b * g[j].coeff)});
  return out;
}

class GBEngine {
 public:
  GBEngine(ContextPtr ctx, MonomialOrder ord, GBOptions opt)
      : ctx_(std::move(ctx)), ord_(ord), opt_(opt) {}

  void add_generator(const Polynomial& p) {
    ZTerms z = zterms_from(p, ord_);
    if (z.empty()) return;
    mpz_class mult;
    ZTerms r = reduce_full(std::move(z), &mult, kNoExclude);
    if (r.empty()) return;
    make_primitive(r);
    add_element(std::move(r));
  }

  void run() {
    unsigned long steps = 0;
    while (!pairs_.empty()) {
      std::size_t best = select_pair();
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      if (opt_.step_limit != 0 && ++steps > opt_.step_limit)
        fail(ErrorCode::step_limit_exceeded,
             "groebner basis computation exceeded the step limit");
      ZTerms s = spoly(basis_[p.i], basis_[p.j]);
      if (s.empty()) continue;
      mpz_class mult;
      ZTerms r = reduce_full(std::move(s), &mult, kNoExclude);
      if (r.empty()) continue;
      make_primitive(r);
      add_element(std::move(r));
    }
  }

  std::vector<Polynomial> reduced_monic() {
    // Minimal basis: leading terms pairwise non-divisible. Equal leading
    // terms never occur because every added element was fully reduced.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < basis_.size() && !dominated; ++j)
        if (j != i && basis_[j].lt != basis_[i].lt && basis_[j].lt.divides(basis_[i].lt))
          dominated = true;
      if (!dominated) keep.push_back(i);
    }
    std::vector<BasisElem> minimal;
    minimal.reserve(keep.size());
    for (auto i : keep) minimal.push_back(std::move(basis_[i]));
    basis_ = std::move(minimal);
    // Tail interreduction: leading terms are untouched (no other element
    // divides them), so one pass with updated elements suffices.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      mpz_class mult;
      ZTerms r = reduce_full(std::move(basis_[i].poly), &mult, i);
      make_primitive(r);
      basis_[i].poly = std::move(r);
      basis_[i].lt = basis_[i].poly.front().mono;
      basis_[i].lc = basis_[i].poly.front().coeff;
    }
    std::sort(basis_.begin(), basis_.end(),
              [&](const BasisElem& a, const BasisElem& b) { return ord_.greater(a.lt, b.lt); });
    std::vector<Polynomial> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_) out.push_back(to_monic_polynomial(ctx_, b.poly));
    return out;
  }

  // Fully reduces `work` by the basis (element `exclude` skipped). On return
  // the conceptual identity is mult * input = result (mod ideal), mult > 0.
  ZTerms reduce_full(ZTerms work, mpz_class* mult_out, std::size_t exclude) const {
    mpz_class mult(1);
    ZTerms done;
    std::size_t head = 0;
    while (head < work.size()) {
      const ZTerm& top = work[head];
      const BasisElem* red = nullptr;
      for (std::size_t b = 0; b < basis_.size(); ++b) {
        if (b == exclude) continue;
        const BasisElem& cand = basis_[b];
        if (cand.lt.divides(top.mono) && (!red || cand.poly.size() < red->poly.size()))
          red = &cand;
      }
      if (!red) {
        done.push_back(std::move(work[head]));
        ++head;
        continue;
      }
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), top.coeff.get_mpz_t(), red->lc.get_mpz_t());
      mpz_class a, b;
      mpz_divexact(a.get_mpz_t(), red->lc.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), top.coeff.get_mpz_t(), g.get_mpz_t());
      Monomial shift = top.mono.divided_by(red->lt);
      if (a != 1) {
        for (auto& t : done) t.coeff *= a;
        mult *= a;
      }
      work = merge_combine(work, head + 1, a, red->poly, 1, b, shift, ord_);
      head = 0;
    }
    if (mult_out) *mult_out = std::move(mult);
    return done;
  }

  const std::vector<BasisElem>& basis() const { return basis_; }
  const ContextPtr& context() const { return ctx_; }

 private:
  static constexpr std::size_t kNoExclude = std::numeric_limits<std::size_t>::max();

  struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
  };

  ZTerms spoly(const BasisElem& f, const BasisElem& g) const {
    Monomial l = Monomial::lcm(f.lt, g.lt);
    mpz_class gc;
    mpz_gcd(gc.get_mpz_t(), f.lc.get_mpz_t(), g.lc.get_mpz_t());
    mpz_class a, b;
    mpz_divexact(a.get_mpz_t(), g.lc.get_mpz_t(), gc.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), f.lc.get_mpz_t(), gc.get_mpz_t());
    // a*(l/lt_f)*f - b*(l/lt_g)*g; the leading terms cancel by construction.
    ZTerms shifted;
    shifted.reserve(f.poly.size());
    Monomial fs = l.divided_by(f.lt);
    for (const auto& t : f.poly) shifted.push_back({t.mono.times(fs), mpz_class(a * t.coeff)});
    return merge_combine(shifted, 1, mpz_class(1), g.poly, 1, b, l.divided_by(g.lt), ord_);
  }

  std::size_t select_pair() const {
    // Normal selection strategy: smallest lcm in the active order,
    // deterministic (i, j) tie break.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      int c = ord_.compare(pairs_[k].lcm, pairs_[best].lcm);
      if (c < 0 ||
          (c == 0 && std::pair(pairs_[k].i, pairs_[k].j) < std::pair(pairs_[best].i, pairs_[best].j)))
        best = k;
    }
    return best;
  }

  // Gebauer-Moeller pair update for a new element t: applies the lcm
  // minimality filter, the coprime criterion and the chain criterion.
  void add_element(ZTerms poly) {
    BasisElem elem;
    elem.poly = std::move(poly);
    elem.lt = elem.poly.front().mono;
    elem.lc = elem.poly.front().coeff;
    const std::uint32_t t = static_cast<std::uint32_t>(basis_.size());

    struct Cand {
      std::uint32_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    cands.reserve(basis_.size());
    for (std::uint32_t i = 0; i < t; ++i) {
      if (basis_[i].redundant) continue;
      cands.push_back({i, Monomial::lcm(basis_[i].lt, elem.lt), basis_[i].lt.coprime(elem.lt)});
    }
    std::vector<Cand> survivors;
    for (std::size_t k = 0; k < cands.size(); ++k) {
      bool keep = cands[k].coprime;
      if (!keep) {
        bool dominated = false;
        for (std::size_t k2 = k + 1; k2 < cands.size() && !dominated; ++k2)
          if (cands[k2].lcm.divides(cands[k].lcm)) dominated = true;
        for (const auto& s : survivors)
          if (dominated) break;
          else if (s.lcm.divides(cands[k].lcm)) dominated = true;
        keep = !dominated;
      }
      if (keep) survivors.push_back(cands[k]);
    }
    // Chain criterion against the old pair set.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool drop = elem.lt.divides(p.lcm) &&
                  Monomial::lcm(basis_[p.i].lt, elem.lt) != p.lcm &&
                  Monomial::lcm(basis_[p.j].lt, elem.lt) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& s : survivors)
      if (!s.coprime) pairs_.push_back({s.i, t, std::move(s.lcm)});
    for (auto& b : basis_)
      if (!b.redundant && elem.lt.divides(b.lt)) b.redundant = true;
    basis_.push_back(std::move(elem));
  }

  ContextPtr ctx_;
  MonomialOrder ord_;
  GBOptions opt_;
  std::vector<BasisElem> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> gens)
    : ctx_(std::move(ctx)), order_(order), gens_(std::move(gens)) {
  lead_.reserve(gens_.size());
  for (const auto& g : gens_) lead_.push_back(leading_term(g, order_).mono);
}

GroebnerBasis reduced_groebner_basis(std::span<const Polynomial> generators, MonomialOrder order,
                                     const GBOptions& options) {
  ContextPtr ctx;
  for (const auto& g : generators) {
    if (!ctx) {
      ctx = g.context();
    } else if (!same_context(ctx, g.context())) {
      fail(ErrorCode::context_mismatch, "groebner basis: generator context mismatch");
    }
  }
  if (!ctx) return GroebnerBasis(nullptr, order, {});
  GBEngine engine(ctx, order, options);
  for (const auto& g : generators) engine.add_generator(g);
  engine.run();
  return GroebnerBasis(ctx, order, engine.reduced_monic());
}

struct Reducer::Impl {
  ContextPtr ctx;
  MonomialOrder ord;
  GBEngine engine;

  Impl(const GroebnerBasis& g)
      : ctx(g.context()), ord(g.order()), engine(g.context(), g.order(), GBOptions{}) {
    // Rebuild integer forms of the (already reduced) basis. Feeding reduced
    // generators back through add_generator keeps them verbatim: each one is
    // irreducible against the others.
  }
};

Reducer::Reducer(const GroebnerBasis& g) : impl_(std::make_unique<Impl>(g)) {
  for (const auto& gen : g.generators()) impl_->engine.add_generator(gen);
}

Reducer::~Reducer() = default;
Reducer::Reducer(Reducer&&) noexcept = default;
Reducer& Reducer::operator=(Reducer&&) noexcept = default;

Polynomial Reducer::normal_form(const Polynomial& p) const {
  if (!impl_->ctx) return p;  // empty basis: nothing reduces
  if (!same_context(impl_->ctx, p.context()))
    fail(ErrorCode::context_mismatch, "normal form: context mismatch");
  if (p.is_zero()) return p;
  // Clear denominators (factor lambda > 0), pseudo-reduce (factor mult > 0);
  // the exact normal form is the remainder divided by lambda * mult.
  mpz_class lambda(1);
  for (const auto& t : p.terms())
    mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), t.coeff.den().get_mpz_t());
  ZTerms z;
  z.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    mpz_class scale;
    mpz_divexact(scale.get_mpz_t(), lambda.get_mpz_t(), t.coeff.den().get_mpz_t());
    z.push_back({t.mono, mpz_class(t.coeff.num() * scale)});
  }
  sort_terms(z, impl_->ord);
  mpz_class mult;
  ZTerms r = impl_->engine.reduce_full(std::move(z), &mult, std::numeric_limits<std::size_t>::max());
  mpz_class denom = lambda * mult;
  std::vector<Term> terms;
  terms.reserve(r.size());
  for (auto& t : r) terms.push_back({std::move(t.mono), Rational(t.coeff, denom)});
  return Polynomial::from_terms(p.context(), std::move(terms));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  if (g.empty()) return p;
  return Reducer(g).normal_form(p);
}

bool contains_one(const GroebnerBasis& g) {
  return g.generators().size() == 1 && g.generators()[0].is_constant() &&
         g.generators()[0].constant_value().is_one();
}

StandardMonomialBasis standard_monomials(const GroebnerBasis& g) {
  if (g.empty())
    fail(ErrorCode::infinite_dimensional, "zero ideal: quotient is infinite-dimensional");
  const std::size_t m = g.context()->size();
  if (contains_one(g)) return StandardMonomialBasis{};  // quotient is the zero ring
  std::vector<std::uint32_t> bounds(m, 0);
  std::vector<bool> found(m, false);
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const Monomial& lt = g.leading_monomial(i);
    for (std::size_t j = 0; j < m; ++j) {
      if (lt[j] == 0 || lt[j] != lt.degree()) continue;  // not a pure power of variable j
      if (!found[j] || lt[j] < bounds[j]) bounds[j] = lt[j];
      found[j] = true;
    }
  }
  for (std::size_t j = 0; j < m; ++j)
    if (!found[j])
      fail(ErrorCode::infinite_dimensional,
           "no pure power of variable '" + g.context()->name(j) +
               "' among leading terms: quotient is infinite-dimensional");
  mpz_class cells(1);
  for (auto b : bounds) cells *= b;
  if (cells > 50'000'000)
    fail(ErrorCode::internal, "standard monomial enumeration too large");

  StandardMonomialBasis out;
  std::vector<std::uint32_t> e(m, 0);
  while (true) {
    Monomial cand{std::vector<std::uint32_t>(e)};
    bool in_lt_ideal = false;
    for (std::size_t i = 0; i < g.generators().size() && !in_lt_ideal; ++i)
      if (g.leading_monomial(i).divides(cand)) in_lt_ideal = true;
    if (!in_lt_ideal) out.monomials.push_back(std::move(cand));
    std::size_t j = 0;
    while (j < m && ++e[j] == bounds[j]) e[j++] = 0;
    if (j == m) break;
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return g.order().less(a, b); });
  return out;
}

}  // namespace cuspidal
