#include <doctest.h>

#include <random>

#include "cuspidal/error.hpp"
#include "cuspidal/singularity.hpp"
#include "test_helpers.hpp"

using namespace cuspidal;
using testutil::P;

namespace {

Problem whitney() {
  auto ctx = testutil::ctx_xyz();
  return Problem::make(ctx, {P("x", ctx), P("y^3+x*y", ctx)}, {P("z", ctx)});
}

Problem whitney_quartic() {
  auto ctx = testutil::ctx_xyz();
  return Problem::make(ctx, {P("x", ctx), P("y^4+x*y", ctx)}, {P("z", ctx)});
}

Problem folds_only() {
  auto ctx = testutil::ctx_xyz();
  return Problem::make(ctx, {P("x", ctx), P("y^2", ctx)}, {P("z", ctx)});
}

Problem trivial_regular() {
  auto ctx = testutil::ctx_xyz();
  return Problem::make(ctx, {P("x", ctx), P("y", ctx)}, {P("z", ctx)});
}

}  // namespace

TEST_SUITE("derived data") {
  TEST_CASE("build_d") {
    auto ctx = testutil::ctx_xyz();
    CHECK(build_d(whitney()) == P("3*y^2+x", ctx));
    CHECK(build_d(trivial_regular()) == P("1", ctx));
    CHECK(build_d(folds_only()) == P("2*y", ctx));
  }

  TEST_CASE("build_v") {
    auto ctx = testutil::ctx_xyz();
    auto v = build_v(whitney());
    REQUIRE(v.size() == 3);
    CHECK(v[0] == P("-6*y", ctx));
    CHECK(v[1] == P("1", ctx));
    CHECK(v[2].is_zero());

    auto v2 = build_v(folds_only());
    CHECK(v2[0] == P("-2", ctx));
    CHECK(v2[1].is_zero());
    CHECK(v2[2].is_zero());

    auto v3 = build_v(trivial_regular());
    for (const auto& c : v3) CHECK(c.is_zero());
  }

  TEST_CASE("build_F") {
    auto ctx = testutil::ctx_xyz();
    auto f = build_F(whitney());
    CHECK(f[0] == P("-6*y", ctx));
    CHECK(f[1] == P("x-3*y^2", ctx));

    auto f2 = build_F(folds_only());
    CHECK(f2[0] == P("-2", ctx));
    CHECK(f2[1].is_zero());

    auto f3 = build_F(trivial_regular());
    CHECK(f3[0].is_zero());
    CHECK(f3[1].is_zero());
  }

  TEST_CASE("build_delta") {
    auto ctx = testutil::ctx_xyz();
    CHECK(build_delta(whitney()) == P("6", ctx));
    CHECK(build_delta(folds_only()).is_zero());
    CHECK(build_delta(trivial_regular()).is_zero());
  }

  TEST_CASE("build_ideals: generator lists") {
    auto ctx = testutil::ctx_xyz();
    auto ideals = build_ideals(whitney());
    // |I| = 2n+3, |S| = n+5, |J| = n+3 with n = 1.
    CHECK(ideals.I.size() == 5);
    CHECK(ideals.S.size() == 6);
    CHECK(ideals.J.size() == 4);
    CHECK(ideals.J[0] == P("z", ctx));
    CHECK(ideals.J[1] == P("3*y^2+x", ctx));
    CHECK(ideals.J[2] == P("-6*y", ctx));
    CHECK(ideals.J[3] == P("x-3*y^2", ctx));
    // det[DF_1; Dd; Dh] = 6 sits in S.
    CHECK(ideals.S[4] == P("6", ctx));
  }

  TEST_CASE("problem validation") {
    auto ctx = testutil::ctx_xyz();
    CHECK_THROWS_AS(
        Problem::make(ctx, {P("x", ctx), P("y", ctx)}, {P("z", ctx), P("y", ctx)}), Error);
    auto other = testutil::ctx_xy();
    CHECK_THROWS_AS(Problem::make(ctx, {P("x", other), P("y", other)}, {P("z", ctx)}), Error);
  }
}

TEST_SUITE("certificates") {
  TEST_CASE("check_manifold") {
    auto ctx = testutil::ctx_xyz();
    auto sphere = Problem::make(ctx, {P("x", ctx), P("y", ctx)}, {P("x^2+y^2+z^2-1", ctx)});
    CHECK(check_manifold(sphere).certified());
    CHECK(check_manifold(whitney()).certified());
    auto cone = Problem::make(ctx, {P("x", ctx), P("y", ctx)}, {P("x^2+y^2+z^2", ctx)});
    CHECK(!check_manifold(cone).certified());
    // n = 0: trivially certified.
    auto cxy = testutil::ctx_xy();
    auto plane = Problem::make(cxy, {P("x", cxy), P("y^3+x*y", cxy)}, {});
    CHECK(check_manifold(plane).certified());
  }

  TEST_CASE("check_one_generic") {
    CHECK(check_one_generic(whitney()).certified());
    CHECK(check_one_generic(trivial_regular()).certified());
  }

  TEST_CASE("check_folds_cusps_only") {
    CHECK(check_folds_cusps_only(whitney()).certified());
    CHECK(check_folds_cusps_only(folds_only()).certified());
    CHECK(!check_folds_cusps_only(whitney_quartic()).certified());
  }

  TEST_CASE("quartic S-ideal reduces to <x, y, z>") {
    // S = <z, 4y^3+x, 12y^2, x-8y^3, 24y, 36y^2> = <x, y, z>.
    auto ctx = testutil::ctx_xyz();
    auto ideals = build_ideals(whitney_quartic());
    auto gs = reduced_groebner_basis(ideals.S, MonomialOrder{});
    REQUIRE(gs.generators().size() == 3);
    CHECK(gs.generators()[0] == P("x", ctx));
    CHECK(gs.generators()[1] == P("y", ctx));
    CHECK(gs.generators()[2] == P("z", ctx));
  }
}

TEST_SUITE("classification") {
  TEST_CASE("whitney decision chain") {
    auto p = whitney();
    CHECK(classify_point(p, testutil::point({0, 0, 0})) == PointClass{PointClassKind::cusp, 1});
    CHECK(classify_point(p, testutil::point({-3, 1, 0})) == PointClass{PointClassKind::fold});
    CHECK(classify_point(p, testutil::point({1, 0, 0})) == PointClass{PointClassKind::regular});
    CHECK(classify_point(p, testutil::point({0, 0, 1})) ==
          PointClass{PointClassKind::not_on_manifold});
    std::vector<Rational> bad{Rational(0), Rational(0)};
    CHECK_THROWS_AS(classify_point(p, bad), Error);
  }

  TEST_CASE("degenerate and manifold-singular points") {
    CHECK(classify_point(whitney_quartic(), testutil::point({0, 0, 0})) ==
          PointClass{PointClassKind::degenerate_singularity});
    auto ctx = testutil::ctx_xyz();
    auto cone = Problem::make(ctx, {P("x", ctx), P("y", ctx)}, {P("x^2+y^2+z^2", ctx)});
    CHECK(classify_point(cone, testutil::point({0, 0, 0})) ==
          PointClass{PointClassKind::manifold_singular});
  }

  TEST_CASE("rank identity at rational points of M") {
    // rank [Df; Dh] - n matches the corank the classifier uses.
    auto p = whitney();
    auto check_rank = [&](std::vector<Rational> pt, std::size_t expect) {
      std::vector<Polynomial> fs{p.ftilde()[0], p.ftilde()[1]};
      PolyMatrix stack = jacobian(fs).stacked_over(jacobian(p.h()));
      CHECK(rank(evaluate(stack, pt)) == expect);
    };
    check_rank(testutil::point({1, 0, 0}), 3);   // regular: corank 0
    check_rank(testutil::point({0, 0, 0}), 2);   // cusp: corank 1
    check_rank(testutil::point({-3, 1, 0}), 2);  // fold: corank 1
  }
}

TEST_SUITE("cusp counting") {
  TEST_CASE("whitney count") {
    CuspReport r = count_cusps(whitney());
    CHECK(r.total == 1);
    CHECK(r.signed_sum == 1);
    CHECK(r.positive == 1);
    CHECK(r.negative == 0);
    CHECK(r.dim_A == 1);
    CHECK(r.s_certified);
    CHECK(r.manifold_certified);
  }

  TEST_CASE("plane-to-plane (n = 0) whitney cusp") {
    auto cxy = testutil::ctx_xy();
    auto plane = Problem::make(cxy, {P("x", cxy), P("y^3+x*y", cxy)}, {});
    CHECK(build_d(plane) == P("3*y^2+x", cxy));
    auto v = build_v(plane);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == P("-6*y", cxy));
    CHECK(v[1] == P("1", cxy));
    CHECK(build_delta(plane) == P("6", cxy));
    CuspReport r = count_cusps(plane);
    CHECK(r.total == 1);
    CHECK(r.signed_sum == 1);
    CHECK(classify_point(plane, testutil::point({0, 0})) == PointClass{PointClassKind::cusp, 1});
  }

  TEST_CASE("refuses without certificate; force computes raw signatures") {
    CHECK_THROWS_AS(count_cusps(whitney_quartic()), Error);
    try {
      count_cusps(whitney_quartic());
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_certified);
    }
    CountOptions force;
    force.force = true;
    CuspReport r = count_cusps(whitney_quartic(), force);
    CHECK(!r.s_certified);
    CHECK(r.total == 1);       // V(J) = {origin}
    CHECK(r.signed_sum == 0);  // delta vanishes there
    CHECK(r.positive == -1);   // split undefined
    CHECK(r.negative == -1);
  }

  TEST_CASE("regular map has no cusps") {
    CuspReport r = count_cusps(trivial_regular());
    CHECK(r.total == 0);
    CHECK(r.signed_sum == 0);
    CHECK(r.dim_A == 0);
  }

  TEST_CASE("infinite-dimensional quotient is reported") {
    auto ctx = testutil::ctx_xyz();
    // f = (x, x) collapses d to 0: J = <z> has an infinite quotient.
    auto degenerate = Problem::make(ctx, {P("x", ctx), P("x", ctx)}, {P("z", ctx)});
    CountOptions force;
    force.force = true;
    CHECK_THROWS_AS(count_cusps(degenerate, force), Error);
    try {
      count_cusps(degenerate, force);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::infinite_dimensional);
    }
  }

  TEST_CASE("orientation flip: negating one h negates the signed sum") {
    auto ctx = testutil::ctx_xyz();
    auto flipped = Problem::make(ctx, {P("x", ctx), P("y^3+x*y", ctx)}, {P("-z", ctx)});
    CHECK(build_d(flipped) == P("-3*y^2-x", ctx));
    CuspReport r = count_cusps(flipped);
    CHECK(r.total == 1);
    CHECK(r.signed_sum == -1);
    CHECK(classify_point(flipped, testutil::point({0, 0, 0})) ==
          PointClass{PointClassKind::cusp, -1});
  }
}

TEST_SUITE("pipeline properties") {
  TEST_CASE("v is orthogonal to every gradient row (Laplace identity)") {
    std::mt19937_64 rng(61);
    int checked = 0;
    for (int iter = 0; iter < 30; ++iter) {
      Problem p = testutil::random_problem(rng);
      DerivedData dd = compute_derived(p);
      std::vector<Polynomial> grad_d;
      for (std::size_t j = 0; j < p.nvars(); ++j) grad_d.push_back(dd.d.derivative(j));
      CHECK(dot(grad_d, dd.v).is_zero());
      for (const auto& hk : p.h()) {
        std::vector<Polynomial> grad_h;
        for (std::size_t j = 0; j < p.nvars(); ++j) grad_h.push_back(hk.derivative(j));
        CHECK(dot(grad_h, dd.v).is_zero());
      }
      ++checked;
    }
    CHECK(checked == 30);
  }

  TEST_CASE("S is contained in I on the desk instances") {
    for (const Problem& p : {whitney(), whitney_quartic(), folds_only()}) {
      auto ideals = build_ideals(p);
      auto gi = reduced_groebner_basis(ideals.I, MonomialOrder{});
      for (const auto& s : ideals.S) CHECK(normal_form(s, gi).is_zero());
    }
  }

  TEST_CASE("classify agrees with count on the whitney instance") {
    // V(J) = {origin}: one cusp of sign +1, and the report says so.
    auto p = whitney();
    CHECK(classify_point(p, testutil::point({0, 0, 0})) == PointClass{PointClassKind::cusp, 1});
    CuspReport r = count_cusps(p);
    CHECK(r.total == 1);
    CHECK(r.signed_sum == 1);
  }
}
