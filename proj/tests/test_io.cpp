#include <doctest.h>

#include <random>

#include "cuspidal/error.hpp"
#include "cuspidal/io.hpp"
#include "test_helpers.hpp"

using namespace cuspidal;
using testutil::P;

namespace {

const char* kEx1 =
    "vars x y z\n"
    "h x^2+y^2+z^2-1\n"
    "f x*z^2-z^2-2*z\n"
    "f 2*x^3*z-y^3+z^3+3*y*z-z^2-y\n";

const char* kWhitney =
    "vars x y z\n"
    "h z\n"
    "f x\n"
    "f y^3+x*y\n";

}  // namespace

TEST_SUITE("input parsing") {
  TEST_CASE("paper example file") {
    InputDocument doc = parse_input(kEx1);
    CHECK(doc.problem.n() == 1);
    CHECK(doc.problem.nvars() == 3);
    auto ctx = doc.problem.context();
    CHECK(ctx->names() == std::vector<std::string>{"x", "y", "z"});
    CHECK(doc.problem.h()[0] == P("x^2+y^2+z^2-1", ctx));
    CHECK(doc.problem.ftilde()[0] == P("x*z^2-z^2-2*z", ctx));
    CHECK(doc.problem.ftilde()[1] == P("2*x^3*z-y^3+z^3+3*y*z-z^2-y", ctx));
    CHECK(!doc.order.has_value());
    CHECK(!doc.force);
  }

  TEST_CASE("whitney file with comments and settings") {
    std::string text = std::string("# desk instance\n") + kWhitney + "order lex\nforce\n";
    InputDocument doc = parse_input(text);
    CHECK(doc.problem.ftilde()[1] == P("y^3+x*y", doc.problem.context()));
    REQUIRE(doc.order.has_value());
    CHECK(doc.order->kind == OrderKind::lex);
    CHECK(doc.force);
  }

  TEST_CASE("variable-count mismatch") {
    CHECK_THROWS_AS(parse_input("vars x y z w\nh z\nf x\nf y\n"), Error);
    CHECK_THROWS_AS(parse_input("vars x y\nh x\nf x\nf y\n"), Error);
    try {
      parse_input("vars x y z w\nh z\nf x\nf y\n");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::parse_error);
      CHECK(std::string(e.what()).find("variable-count mismatch") != std::string::npos);
    }
  }

  TEST_CASE("malformed input diagnostics") {
    CHECK_THROWS_AS(parse_input("h z\nf x\nf y\n"), Error);                  // vars missing
    CHECK_THROWS_AS(parse_input("vars x y z\nvars x y z\nh z\nf x\nf y\n"), Error);
    CHECK_THROWS_AS(parse_input("vars x y z\nh z\nf x\n"), Error);           // one f
    CHECK_THROWS_AS(parse_input("vars x y z\nh z\nf x\nf y\nf z\n"), Error); // three f
    CHECK_THROWS_AS(parse_input("vars x y z\nh z\nf q\nf y\n"), Error);      // unknown id
    CHECK_THROWS_AS(parse_input("vars x y z\nh z\nf x+\nf y\n"), Error);     // syntax
    CHECK_THROWS_AS(parse_input("vars x x y\nh y\nf x\nf x\n"), Error);      // dup var
    CHECK_THROWS_AS(parse_input("vars x y z\nbogus 1\nf x\nf y\n"), Error);  // keyword
    try {
      parse_input("vars x y z\nh z\nf x$y\nf y\n");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("3:") != std::string::npos);  // line number
    }
  }

  TEST_CASE("expression grammar corners") {
    auto ctx = testutil::ctx_xyz();
    CHECK(parse_polynomial("-z^3+2*x*y", ctx) == P("2*x*y-z^3", ctx));
    CHECK(parse_polynomial("1/2*x-3/4", ctx) ==
          Polynomial::variable(ctx, 0).scaled(Rational(1, 2)) -
              Polynomial::constant(ctx, Rational(3, 4)));
    CHECK(parse_polynomial("(x+y)^2", ctx) == P("x^2+2*x*y+y^2", ctx));
    CHECK(parse_polynomial("x*(y+z)-x*y", ctx) == P("x*z", ctx));
    CHECK(parse_polynomial("- - x", ctx) == P("x", ctx));
    CHECK(parse_polynomial("x^0", ctx) == P("1", ctx));
    CHECK_THROWS_AS(parse_polynomial("x y", ctx), Error);    // implicit product
    CHECK_THROWS_AS(parse_polynomial("x^-2", ctx), Error);   // negative exponent
    CHECK_THROWS_AS(parse_polynomial("x/2", ctx), Error);    // division by nonconstant form
    CHECK_THROWS_AS(parse_polynomial("2/0", ctx), Error);
    CHECK_THROWS_AS(parse_polynomial("(x", ctx), Error);
    CHECK_THROWS_AS(parse_polynomial("", ctx), Error);
  }

  TEST_CASE("points") {
    auto pt = parse_point("0, 1/2, -3");
    REQUIRE(pt.size() == 3);
    CHECK(pt[0] == Rational(0));
    CHECK(pt[1] == Rational(1, 2));
    CHECK(pt[2] == Rational(-3));
    CHECK_THROWS_AS(parse_point("1,,2"), Error);
    CHECK_THROWS_AS(parse_point("1,a"), Error);
  }
}

TEST_SUITE("printing") {
  TEST_CASE("canonical rendering") {
    auto ctx = testutil::ctx_xyz();
    CHECK(to_string(P("3*y^2+x", ctx)) == "3*y^2+x");
    CHECK(to_string(P("-6*y", ctx)) == "-6*y");
    CHECK(to_string(P("x-3*y^2", ctx)) == "-3*y^2+x");
    CHECK(to_string(Polynomial::zero(ctx)) == "0");
    CHECK(to_string(P("1/2*x*y-7", ctx)) == "1/2*x*y-7");
    CHECK(to_string(P("x^2*y^3*z", ctx)) == "x^2*y^3*z");
  }

  TEST_CASE("print/parse round-trip on random polynomials") {
    std::mt19937_64 rng(71);
    auto ctx = testutil::ctx_xyz();
    for (int iter = 0; iter < 200; ++iter) {
      auto p = testutil::random_polynomial(rng, ctx, 6, 4);
      CHECK(parse_polynomial(to_string(p), ctx) == p);
    }
  }
}

TEST_SUITE("run and reports") {
  TEST_CASE("derive report") {
    InputDocument doc = parse_input(kWhitney);
    Report r = run(Command::derive, doc, {});
    REQUIRE(r.derived.has_value());
    auto ctx = r.context;
    CHECK(r.derived->d == P("3*y^2+x", ctx));
    CHECK(r.derived->v[0] == P("-6*y", ctx));
    CHECK(r.derived->delta == P("6", ctx));
    CHECK(report_exit_code(r) == 0);
    std::string text = report_text(r);
    CHECK(text.find("d = 3*y^2+x") != std::string::npos);
    CHECK(text.find("delta = 6") != std::string::npos);
  }

  TEST_CASE("classify requires a point") {
    InputDocument doc = parse_input(kWhitney);
    CHECK_THROWS_AS(run(Command::classify, doc, {}), Error);
    RunFlags flags;
    flags.point = testutil::point({0, 0, 0});
    Report r = run(Command::classify, doc, flags);
    REQUIRE(r.point_class.has_value());
    CHECK(r.point_class->kind == PointClassKind::cusp);
    CHECK(r.point_class->cusp_sign == 1);
    CHECK(report_text(r).find("Cusp, sign +1") != std::string::npos);
  }

  TEST_CASE("exit codes over the three outcome classes") {
    InputDocument ok = parse_input(kWhitney);
    CHECK(report_exit_code(run(Command::check_stable, ok, {})) == 0);
    InputDocument bad = parse_input("vars x y z\nh z\nf x\nf y^4+x*y\n");
    CHECK(report_exit_code(run(Command::check_stable, bad, {})) == 2);
    CHECK_THROWS_AS(run(Command::count, bad, {}), Error);  // error class: caller maps to 1
  }

  TEST_CASE("file force setting feeds count") {
    InputDocument bad = parse_input("vars x y z\nh z\nf x\nf y^4+x*y\nforce\n");
    Report r = run(Command::count, bad, {});
    REQUIRE(r.cusps.has_value());
    CHECK(!r.cusps->s_certified);
    CHECK(report_exit_code(r) == 2);
  }

  TEST_CASE("json round-trips losslessly") {
    InputDocument doc = parse_input(kWhitney);
    RunFlags flags;
    flags.verbose = true;
    for (Command c : {Command::derive, Command::count, Command::check_stable}) {
      Report r = run(c, doc, flags);
      Report back = report_from_json(report_json(r));
      CHECK(back.command == r.command);
      CHECK(back.context->names() == r.context->names());
      CHECK(back.order == r.order);
      CHECK(back.certificate == r.certificate);
      CHECK(back.elapsed_ms == doctest::Approx(r.elapsed_ms));
      REQUIRE(back.derived.has_value());
      CHECK(back.derived->d == r.derived->d);
      CHECK(back.derived->w == r.derived->w);
      CHECK(back.derived->v == r.derived->v);
      CHECK(back.derived->F[0] == r.derived->F[0]);
      CHECK(back.derived->F[1] == r.derived->F[1]);
      CHECK(back.derived->delta == r.derived->delta);
      if (r.cusps) {
        REQUIRE(back.cusps.has_value());
        CHECK(back.cusps->total == r.cusps->total);
        CHECK(back.cusps->signed_sum == r.cusps->signed_sum);
        CHECK(back.cusps->positive == r.cusps->positive);
        CHECK(back.cusps->negative == r.cusps->negative);
        CHECK(back.cusps->dim_A == r.cusps->dim_A);
      }
    }
    // classify report with a point
    RunFlags cf;
    cf.point = testutil::point({0, 0, 0});
    Report r = run(Command::classify, doc, cf);
    Report back = report_from_json(report_json(r));
    REQUIRE(back.point_class.has_value());
    CHECK(*back.point_class == *r.point_class);
    CHECK(back.point == r.point);
  }

  TEST_CASE("order flag overrides document order") {
    std::string text = std::string(kWhitney) + "order lex\n";
    InputDocument doc = parse_input(text);
    Report r = run(Command::check_stable, doc, {});
    CHECK(r.order.kind == OrderKind::lex);
    RunFlags flags;
    flags.order = MonomialOrder{OrderKind::degrevlex};
    Report r2 = run(Command::check_stable, doc, flags);
    CHECK(r2.order.kind == OrderKind::degrevlex);
    CHECK(report_exit_code(r) == report_exit_code(r2));
  }
}
