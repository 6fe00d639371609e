#include "cuspidal/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "cuspidal/error.hpp"

namespace cuspidal {

ContextPtr VariableContext::make(std::vector<std::string> names) {
  if (names.empty()) fail(ErrorCode::invalid_argument, "variable context must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorCode::invalid_argument, "empty variable name");
    if (!seen.insert(n).second)
      fail(ErrorCode::invalid_argument, "duplicate variable name '" + n + "'");
  }
  return ContextPtr(new VariableContext(std::move(names)));
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  return a && b && a->same_as(*b);
}

Monomial::Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {
  for (auto e : e_) deg_ += e;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.e_.resize(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  r.e_.resize(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  r.deg_ = deg_ - o.deg_;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.e_.resize(a.e_.size());
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::degrevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      // Graded reverse lexicographic: with equal degree, the monomial with
      // the larger exponent in the last differing variable is the smaller.
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      }
      return 0;
    }
    case OrderKind::lex: {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

}  // namespace cuspidal
