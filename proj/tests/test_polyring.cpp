#include <doctest.h>

#include <random>

#include "cuspidal/error.hpp"
#include "test_helpers.hpp"

using namespace cuspidal;
using testutil::P;

TEST_SUITE("rational") {
  TEST_CASE("always reduced, positive denominator, zero is 0/1") {
    Rational r(2, 4);
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);
    Rational n(3, -6);
    CHECK(n.num() == -1);
    CHECK(n.den() == 2);
    Rational z(0, 7);
    CHECK(z.num() == 0);
    CHECK(z.den() == 1);
    CHECK(z.is_zero());
  }

  TEST_CASE("parsing and printing") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-6/4") == Rational(-3, 2));
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational::from_string("x"), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
  }

  TEST_CASE("arithmetic and pow") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(3) == Rational(1, 6));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  }
}

TEST_SUITE("monomial order") {
  TEST_CASE("degrevlex on degree-3 monomials in x,y,z") {
    auto ctx = testutil::ctx_xyz();
    // x^3 > x^2*y > x*y^2 > y^3 > x^2*z > x*y*z > y^2*z > x*z^2 > y*z^2 > z^3
    const char* descending[] = {"x^3", "x^2*y", "x*y^2", "y^3",   "x^2*z",
                                "x*y*z", "y^2*z", "x*z^2", "y*z^2", "z^3"};
    MonomialOrder ord{OrderKind::degrevlex};
    for (std::size_t i = 0; i + 1 < 10; ++i) {
      auto a = P(descending[i], ctx).terms()[0].mono;
      auto b = P(descending[i + 1], ctx).terms()[0].mono;
      CHECK(ord.greater(a, b));
    }
  }

  TEST_CASE("lex order") {
    auto ctx = testutil::ctx_xyz();
    MonomialOrder lex{OrderKind::lex};
    CHECK(lex.greater(P("x", ctx).terms()[0].mono, P("y^5", ctx).terms()[0].mono));
    CHECK(lex.greater(P("x*y", ctx).terms()[0].mono, P("x*z^2", ctx).terms()[0].mono));
  }

  TEST_CASE("multiplicative and well-ordered") {
    auto ctx = testutil::ctx_xyz();
    std::mt19937_64 rng(7);
    for (MonomialOrder ord : {MonomialOrder{OrderKind::degrevlex}, MonomialOrder{OrderKind::lex}}) {
      Monomial one(ctx->size());
      for (int iter = 0; iter < 200; ++iter) {
        auto a = testutil::random_polynomial(rng, ctx, 1, 4);
        auto b = testutil::random_polynomial(rng, ctx, 1, 4);
        auto c = testutil::random_polynomial(rng, ctx, 1, 4);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const auto& ma = a.terms()[0].mono;
        const auto& mb = b.terms()[0].mono;
        const auto& mc = c.terms()[0].mono;
        if (ord.less(ma, mb)) CHECK(ord.less(ma.times(mc), mb.times(mc)));
        if (!ma.is_one()) CHECK(ord.less(one, ma));
      }
    }
  }
}

TEST_SUITE("polynomial arithmetic") {
  TEST_CASE("addition examples") {
    auto ctx = testutil::ctx_xyz();
    CHECK(P("x+1", ctx) + P("x-1", ctx) == P("2*x", ctx));
    auto p = P("x^2*y-3*z", ctx);
    CHECK(p + Polynomial::zero(ctx) == p);
    CHECK(P("x^2+y", ctx) + P("-x^2", ctx) == P("y", ctx));
  }

  TEST_CASE("multiplication examples") {
    auto ctx = testutil::ctx_xyz();
    CHECK(P("x+y", ctx) * P("x-y", ctx) == P("x^2-y^2", ctx));
    auto p = P("x^3-2*y+z", ctx);
    CHECK(p * Polynomial::constant(ctx, 1) == p);
    CHECK(P("x+1", ctx).pow(2) == P("x^2+2*x+1", ctx));
  }

  TEST_CASE("partial derivatives") {
    auto ctx = testutil::ctx_xyz();
    CHECK(P("x^2*y", ctx).derivative(0) == P("2*x*y", ctx));
    CHECK(P("7", ctx).derivative(0).is_zero());
    CHECK(P("x^2+y^2+z^2-1", ctx).derivative(2) == P("2*z", ctx));
    CHECK_THROWS_AS(P("x", ctx).derivative(5), Error);
  }

  TEST_CASE("evaluation") {
    auto ctx = testutil::ctx_xyz();
    CHECK(P("x^2+y^2+z^2-1", ctx).evaluate(testutil::point({1, 0, 0})).is_zero());
    std::vector<Rational> half{Rational(3, 2), Rational(0), Rational(0)};
    CHECK(P("x", ctx).evaluate(half) == Rational(3, 2));
    CHECK(P("3*y^2+x", ctx).evaluate(testutil::point({-3, 1, 0})).is_zero());
    std::vector<Rational> two{Rational(1), Rational(2)};
    CHECK_THROWS_AS(P("x", ctx).evaluate(two), Error);
  }

  TEST_CASE("context mismatch is rejected") {
    auto a = P("x", testutil::ctx_xyz());
    auto b = P("x", testutil::ctx_xy());
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
  }
}

TEST_SUITE("polynomial properties") {
  TEST_CASE("ring axioms on random polynomials") {
    auto ctx = testutil::ctx_xyz();
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 100; ++iter) {
      auto p = testutil::random_polynomial(rng, ctx);
      auto q = testutil::random_polynomial(rng, ctx);
      auto r = testutil::random_polynomial(rng, ctx);
      CHECK(p + q == q + p);
      CHECK(p * q == q * p);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
    }
  }

  TEST_CASE("Leibniz rule") {
    auto ctx = testutil::ctx_xyz();
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 100; ++iter) {
      auto p = testutil::random_polynomial(rng, ctx);
      auto q = testutil::random_polynomial(rng, ctx);
      for (std::size_t v = 0; v < 3; ++v)
        CHECK((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v));
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    auto ctx = testutil::ctx_xyz();
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<long> num(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
      auto p = testutil::random_polynomial(rng, ctx);
      auto q = testutil::random_polynomial(rng, ctx);
      std::vector<Rational> a{Rational(num(rng), 3), Rational(num(rng)), Rational(num(rng), 2)};
      CHECK((p + q).evaluate(a) == p.evaluate(a) + q.evaluate(a));
      CHECK((p * q).evaluate(a) == p.evaluate(a) * q.evaluate(a));
    }
  }

  TEST_CASE("canonical form stores no zero coefficients") {
    auto ctx = testutil::ctx_xyz();
    std::mt19937_64 rng(45);
    auto audit = [](const Polynomial& p) {
      for (const auto& t : p.terms()) CHECK(!t.coeff.is_zero());
    };
    for (int iter = 0; iter < 100; ++iter) {
      auto p = testutil::random_polynomial(rng, ctx);
      auto q = testutil::random_polynomial(rng, ctx);
      audit(p + q);
      audit(p - q);
      audit(p * q);
      audit(p.derivative(iter % 3));
      CHECK((p - p).is_zero());
    }
  }
}
