#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cuspidal {

class VariableContext;
using ContextPtr = std::shared_ptr<const VariableContext>;

// Ordered list of variable names, fixed for the lifetime of a computation.
// The order determines minor signs and the monomial-order tie break.
class VariableContext {
 public:
  static ContextPtr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const VariableContext& other) const { return names_ == other.names_; }

 private:
  explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {}

  std::vector<std::string> names_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);

// Dense exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  std::uint64_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;       // *this | o
  Monomial divided_by(const Monomial& o) const; // requires o | *this
  bool coprime(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<std::uint32_t> e_;
  std::uint64_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum class OrderKind { degrevlex, lex };

// Total multiplicative well-order on monomials of one context.
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;

  // <0 when a < b, 0 when equal, >0 when a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace cuspidal
