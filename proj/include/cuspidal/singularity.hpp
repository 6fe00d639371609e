#pragma once

#include <array>
#include <span>
#include <vector>

#include "cuspidal/groebner.hpp"
#include "cuspidal/matrix.hpp"
#include "cuspidal/polynomial.hpp"

namespace cuspidal {

// Input pair (ftilde, h) on a shared context of n+2 variables. ftilde maps
// R^{n+2} -> R^2; M = h^{-1}(0) is the constrained surface. n = h.size()
// may be zero (M = R^2, no constraints).
class Problem {
 public:
  static Problem make(ContextPtr ctx, std::array<Polynomial, 2> ftilde,
                      std::vector<Polynomial> h);

  const ContextPtr& context() const { return ctx_; }
  const std::array<Polynomial, 2>& ftilde() const { return ftilde_; }
  const std::vector<Polynomial>& h() const { return h_; }
  std::size_t n() const { return h_.size(); }
  std::size_t nvars() const { return ctx_->size(); }

 private:
  Problem(ContextPtr ctx, std::array<Polynomial, 2> ftilde, std::vector<Polynomial> h)
      : ctx_(std::move(ctx)), ftilde_(std::move(ftilde)), h_(std::move(h)) {}

  ContextPtr ctx_;
  std::array<Polynomial, 2> ftilde_;
  std::vector<Polynomial> h_;
};

// The symbols derived from a Problem:
//   d     = det [Dftilde; Dh], cut of the singular set
//   w_i   = maximal minors of [Dd; Dh] (column i removed)
//   v     = (-w_1, w_2, ..., (-1)^{n+2} w_{n+2}), tangent to the fold curve
//   F     = Dftilde * v
//   delta = det [DF; Dh], the cusp-sign determinant
struct DerivedData {
  Polynomial d;
  std::vector<Polynomial> w;
  std::vector<Polynomial> v;
  std::array<Polynomial, 2> F;
  Polynomial delta;
};

Polynomial build_d(const Problem& p);
std::vector<Polynomial> build_w(const Problem& p);
std::vector<Polynomial> build_v(const Problem& p);
std::array<Polynomial, 2> build_F(const Problem& p);
Polynomial build_delta(const Problem& p);
DerivedData compute_derived(const Problem& p);

// Generator lists:
//   I = <h_1..h_n, d, w_1..w_{n+2}>                          (genericity)
//   S = <h, d, F_1, F_2, det[DF_1;Dd;Dh], det[DF_2;Dd;Dh]>   (folds+cusps only)
//   J = <h_1..h_n, d, F_1, F_2>                              (the cusp locus)
struct IdealGenerators {
  std::vector<Polynomial> I;
  std::vector<Polynomial> S;
  std::vector<Polynomial> J;
};

IdealGenerators build_ideals(const Problem& p);

enum class CertStatus { certified, inconclusive };

// One-sided certificate: the ideal test is a sufficient condition, so the
// negative outcome is "inconclusive", never "no".
struct Certificate {
  CertStatus status;
  GroebnerBasis evidence;

  bool certified() const { return status == CertStatus::certified; }
};

// Certifies that M = h^{-1}(0) is a smooth complete intersection: the ideal
// of h together with all n x n minors of Dh is the whole ring. Trivially
// certified for n = 0.
Certificate check_manifold(const Problem& p, MonomialOrder order = {},
                           const GBOptions& gb = {});

// Certified iff 1 lies in I.
Certificate check_one_generic(const Problem& p, MonomialOrder order = {},
                              const GBOptions& gb = {});

// Certified iff 1 lies in S; this also implies the one-generic conclusion.
Certificate check_folds_cusps_only(const Problem& p, MonomialOrder order = {},
                                   const GBOptions& gb = {});

enum class PointClassKind {
  not_on_manifold,
  manifold_singular,
  regular,
  fold,
  cusp,
  degenerate_singularity,
};

struct PointClass {
  PointClassKind kind;
  int cusp_sign = 0;  // +1 or -1 when kind == cusp

  friend bool operator==(const PointClass&, const PointClass&) = default;
};

// Exact pointwise classification at a rational point, in this order:
//   (1) some h_k(p) != 0                      -> not_on_manifold
//   (2) rank Dh(p) < n                        -> manifold_singular
//   (3) d(p) != 0                             -> regular
//   (4) rank [Dd(p); Dh(p)] < n+1             -> degenerate_singularity
//   (5) F(p) != 0                             -> fold
//   (6) rank [DF(p); Dh(p); Dd(p)] = n+2      -> cusp with sign sgn delta(p)
//       otherwise                             -> degenerate_singularity
PointClass classify_point(const Problem& p, std::span<const Rational> point);

// Cusp count and signed sum from the trace forms on A = R[x]/J:
// total = sigma(Theta_1), signed_sum = sigma(Theta_delta).
struct CuspReport {
  long total = 0;
  long signed_sum = 0;
  // (total +- signed_sum) / 2; both are -1 when the signatures are
  // arithmetically inconsistent, which can only happen on unverified
  // forced runs (delta vanishing somewhere on V(J)).
  long positive = 0;
  long negative = 0;
  long dim_A = 0;
  long theta1_rank = 0;
  long theta2_rank = 0;
  bool s_certified = false;         // false only under force
  bool manifold_certified = false;  // advisory; counting is stated for smooth M
};

struct CountOptions {
  MonomialOrder order;
  GBOptions gb;
  // Compute the signatures even when the folds-and-cusps certificate fails;
  // the report is then marked unverified via s_certified = false.
  bool force = false;
};

// Throws ErrorCode::not_certified when the S-test fails and force is off,
// and ErrorCode::infinite_dimensional when dim R[x]/J is infinite.
CuspReport count_cusps(const Problem& p, const CountOptions& options = {});

}  // namespace cuspidal
