#include "cuspidal/singularity.hpp"

#include <cstdlib>
#include <utility>

#include "cuspidal/error.hpp"
#include "cuspidal/quotient.hpp"

namespace cuspidal {

namespace {

PolyMatrix jacobian_of(const std::array<Polynomial, 2>& fs) {
  std::vector<Polynomial> list{fs[0], fs[1]};
  return jacobian(list);
}

// [rows of top; rows of h] in input order; h may be empty (n = 0).
PolyMatrix stack_with_h(const PolyMatrix& top, const Problem& p) {
  if (p.h().empty()) return top;
  return top.stacked_over(jacobian(p.h()));
}

}  // namespace

Problem Problem::make(ContextPtr ctx, std::array<Polynomial, 2> ftilde,
                      std::vector<Polynomial> h) {
  if (ctx->size() != h.size() + 2)
    fail(ErrorCode::dimension_mismatch, "variable count must equal #h + 2");
  for (const auto& f : ftilde)
    if (!same_context(ctx, f.context()))
      fail(ErrorCode::context_mismatch, "f component over a different context");
  for (const auto& hk : h)
    if (!same_context(ctx, hk.context()))
      fail(ErrorCode::context_mismatch, "h component over a different context");
  return Problem(std::move(ctx), std::move(ftilde), std::move(h));
}

Polynomial build_d(const Problem& p) {
  return determinant(stack_with_h(jacobian_of(p.ftilde()), p));
}

std::vector<Polynomial> build_w(const Problem& p) {
  Polynomial d = build_d(p);
  std::vector<Polynomial> drow{d};
  return column_deleted_minors(stack_with_h(jacobian(drow), p));
}

std::vector<Polynomial> build_v(const Problem& p) {
  std::vector<Polynomial> w = build_w(p);
  // v = (-w_1, w_2, ..., (-1)^{n+2} w_{n+2})
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i % 2 == 0) w[i] = -w[i];
  return w;
}

std::array<Polynomial, 2> build_F(const Problem& p) {
  std::vector<Polynomial> v = build_v(p);
  std::array<Polynomial, 2> F{Polynomial(p.context()), Polynomial(p.context())};
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Polynomial> grad;
    grad.reserve(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) grad.push_back(p.ftilde()[i].derivative(j));
    F[i] = dot(grad, v);
  }
  return F;
}

Polynomial build_delta(const Problem& p) {
  std::array<Polynomial, 2> F = build_F(p);
  return determinant(stack_with_h(jacobian_of(F), p));
}

DerivedData compute_derived(const Problem& p) {
  DerivedData dd{Polynomial(p.context()), {}, {}, {Polynomial(p.context()), Polynomial(p.context())},
                 Polynomial(p.context())};
  dd.d = build_d(p);
  std::vector<Polynomial> drow{dd.d};
  dd.w = column_deleted_minors(stack_with_h(jacobian(drow), p));
  dd.v = dd.w;
  for (std::size_t i = 0; i < dd.v.size(); ++i)
    if (i % 2 == 0) dd.v[i] = -dd.v[i];
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Polynomial> grad;
    grad.reserve(dd.v.size());
    for (std::size_t j = 0; j < dd.v.size(); ++j) grad.push_back(p.ftilde()[i].derivative(j));
    dd.F[i] = dot(grad, dd.v);
  }
  dd.delta = determinant(stack_with_h(jacobian_of(dd.F), p));
  return dd;
}

IdealGenerators build_ideals(const Problem& p) {
  DerivedData dd = compute_derived(p);
  IdealGenerators out;
  // I = <h, d, w_1..w_{n+2}>
  out.I = p.h();
  out.I.push_back(dd.d);
  out.I.insert(out.I.end(), dd.w.begin(), dd.w.end());
  // S = <h, d, F_1, F_2, det[DF_1; Dd; Dh], det[DF_2; Dd; Dh]>
  out.S = p.h();
  out.S.push_back(dd.d);
  out.S.push_back(dd.F[0]);
  out.S.push_back(dd.F[1]);
  std::vector<Polynomial> drow{dd.d};
  PolyMatrix dd_jac = jacobian(drow);
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Polynomial> firow{dd.F[i]};
    PolyMatrix stacked = stack_with_h(jacobian(firow).stacked_over(dd_jac), p);
    out.S.push_back(determinant(stacked));
  }
  // J = <h, d, F_1, F_2>
  out.J = p.h();
  out.J.push_back(dd.d);
  out.J.push_back(dd.F[0]);
  out.J.push_back(dd.F[1]);
  return out;
}

namespace {

Certificate certify(std::vector<Polynomial> gens, MonomialOrder order, const GBOptions& gb) {
  GroebnerBasis basis = reduced_groebner_basis(gens, order, gb);
  return Certificate{contains_one(basis) ? CertStatus::certified : CertStatus::inconclusive,
                     std::move(basis)};
}

}  // namespace

Certificate check_manifold(const Problem& p, MonomialOrder order, const GBOptions& gb) {
  const std::size_t n = p.n();
  if (n == 0) {
    // No constraints: M = R^2 is trivially smooth.
    std::vector<Polynomial> one{Polynomial::constant(p.context(), 1)};
    return Certificate{CertStatus::certified, reduced_groebner_basis(one, order, gb)};
  }
  // <h> plus all n x n minors of Dh must generate the whole ring.
  std::vector<Polynomial> gens = p.h();
  PolyMatrix dh = jacobian(p.h());
  const std::size_t m = p.nvars();  // n + 2 columns: minors drop two of them
  for (std::size_t c1 = 0; c1 < m; ++c1)
    for (std::size_t c2 = c1 + 1; c2 < m; ++c2) {
      PolyMatrix sub = dh.without_column(c2).without_column(c1);
      gens.push_back(determinant(sub));
    }
  return certify(std::move(gens), order, gb);
}

Certificate check_one_generic(const Problem& p, MonomialOrder order, const GBOptions& gb) {
  return certify(build_ideals(p).I, order, gb);
}

Certificate check_folds_cusps_only(const Problem& p, MonomialOrder order, const GBOptions& gb) {
  return certify(build_ideals(p).S, order, gb);
}

PointClass classify_point(const Problem& p, std::span<const Rational> point) {
  if (point.size() != p.nvars())
    fail(ErrorCode::dimension_mismatch, "point has wrong dimension");
  const std::size_t n = p.n();
  for (const auto& hk : p.h())
    if (!hk.evaluate(point).is_zero()) return {PointClassKind::not_on_manifold};
  if (n > 0) {
    RationalMatrix dh = evaluate(jacobian(p.h()), point);
    if (rank(dh) < n) return {PointClassKind::manifold_singular};
  }
  DerivedData dd = compute_derived(p);
  if (!dd.d.evaluate(point).is_zero()) return {PointClassKind::regular};
  std::vector<Polynomial> drow{dd.d};
  PolyMatrix dd_dh = stack_with_h(jacobian(drow), p);
  if (rank(evaluate(dd_dh, point)) < n + 1) return {PointClassKind::degenerate_singularity};
  if (!dd.F[0].evaluate(point).is_zero() || !dd.F[1].evaluate(point).is_zero())
    return {PointClassKind::fold};
  PolyMatrix df_dh_dd = stack_with_h(jacobian_of(dd.F), p).stacked_over(jacobian(drow));
  if (rank(evaluate(df_dh_dd, point)) == n + 2) {
    int sign = dd.delta.evaluate(point).sign();
    if (sign == 0) return {PointClassKind::degenerate_singularity};  // unreachable in theory
    return {PointClassKind::cusp, sign};
  }
  return {PointClassKind::degenerate_singularity};
}

CuspReport count_cusps(const Problem& p, const CountOptions& options) {
  Certificate s_cert = check_folds_cusps_only(p, options.order, options.gb);
  if (!s_cert.certified() && !options.force)
    fail(ErrorCode::not_certified,
         "folds-and-cusps certificate failed; counting would be unsound (use force to override)");
  Certificate m_cert = check_manifold(p, options.order, options.gb);

  IdealGenerators ideals = build_ideals(p);
  GroebnerBasis gj = reduced_groebner_basis(ideals.J, options.order, options.gb);
  QuotientAlgebra algebra = QuotientAlgebra::build(std::move(gj));
  Polynomial delta = build_delta(p);

  SignatureRank s1 = signature_and_rank(algebra.theta_matrix(Polynomial::constant(p.context(), 1)));
  SignatureRank s2 = signature_and_rank(algebra.theta_matrix(delta));

  CuspReport report;
  report.total = s1.signature;
  report.signed_sum = s2.signature;
  report.dim_A = static_cast<long>(algebra.dimension());
  report.theta1_rank = s1.rank;
  report.theta2_rank = s2.rank;
  report.s_certified = s_cert.certified();
  report.manifold_certified = m_cert.certified();
  // total = #V(J) >= 0 and |signed_sum| <= total hold for any finite
  // quotient; parity can break only when delta vanishes somewhere on V(J),
  // which the S-certificate rules out.
  bool consistent = report.total >= 0 && std::labs(report.signed_sum) <= report.total &&
                    (report.total + report.signed_sum) % 2 == 0;
  if (!consistent) {
    if (report.s_certified)
      fail(ErrorCode::internal, "cusp report violates signature arithmetic");
    report.positive = report.negative = -1;  // undefined for this unverified run
    return report;
  }
  report.positive = (report.total + report.signed_sum) / 2;
  report.negative = (report.total - report.signed_sum) / 2;
  return report;
}

}  // namespace cuspidal
