#include "cuspidal/io.hpp"

#include <cctype>
#include <chrono>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cuspidal/error.hpp"

namespace cuspidal {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
  std::ostringstream os;
  os << "parse error at " << line << ":" << col << ": " << msg;
  fail(ErrorCode::parse_error, os.str());
}

struct Token {
  enum Kind { ident, integer, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t line, col;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  Token next() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    std::size_t col = pos_ + 1;
    if (pos_ >= text_.size()) return {Token::end, "", line_, col};
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return {Token::integer, std::string(text_.substr(start, pos_ - start)), line_, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return {Token::ident, std::string(text_.substr(start, pos_ - start)), line_, col};
    }
    ++pos_;
    switch (c) {
      case '+': return {Token::plus, "+", line_, col};
      case '-': return {Token::minus, "-", line_, col};
      case '*': return {Token::star, "*", line_, col};
      case '^': return {Token::caret, "^", line_, col};
      case '/': return {Token::slash, "/", line_, col};
      case '(': return {Token::lparen, "(", line_, col};
      case ')': return {Token::rparen, ")", line_, col};
      default: parse_fail(line_, col, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

// Recursive-descent expression parser:
//   expr    := term (('+'|'-') term)*
//   term    := ('-'|'+')* product
//   product := factor ('*' factor)*
//   factor  := base ('^' integer)?
//   base    := ident | integer ('/' integer)? | '(' expr ')'
class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, const ContextPtr& ctx)
      : lexer_(text, line), ctx_(ctx) {
    advance();
  }

  Polynomial parse() {
    Polynomial p = expr();
    expect(Token::end, "end of expression");
    return p;
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  void expect(Token::Kind kind, const std::string& what) {
    if (tok_.kind != kind)
      parse_fail(tok_.line, tok_.col, "expected " + what + ", got '" + tok_.text + "'");
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (tok_.kind == Token::plus || tok_.kind == Token::minus) {
      bool neg = tok_.kind == Token::minus;
      advance();
      Polynomial t = term();
      acc = neg ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    bool neg = false;
    while (tok_.kind == Token::plus || tok_.kind == Token::minus) {
      if (tok_.kind == Token::minus) neg = !neg;
      advance();
    }
    Polynomial p = product();
    return neg ? -p : p;
  }

  Polynomial product() {
    Polynomial acc = factor();
    while (tok_.kind == Token::star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base_poly = base();
    if (tok_.kind == Token::caret) {
      advance();
      expect(Token::integer, "exponent");
      unsigned long e = std::stoul(tok_.text);
      advance();
      return base_poly.pow(static_cast<unsigned>(e));
    }
    return base_poly;
  }

  Polynomial base() {
    if (tok_.kind == Token::ident) {
      auto idx = ctx_->index_of(tok_.text);
      if (!idx)
        parse_fail(tok_.line, tok_.col, "unknown identifier '" + tok_.text + "'");
      advance();
      return Polynomial::variable(ctx_, *idx);
    }
    if (tok_.kind == Token::integer) {
      mpz_class num(tok_.text);
      advance();
      if (tok_.kind == Token::slash) {
        advance();
        expect(Token::integer, "denominator");
        mpz_class den(tok_.text);
        if (den == 0) parse_fail(tok_.line, tok_.col, "zero denominator");
        advance();
        return Polynomial::constant(ctx_, Rational(num, den));
      }
      return Polynomial::constant(ctx_, Rational(num));
    }
    if (tok_.kind == Token::lparen) {
      advance();
      Polynomial p = expr();
      expect(Token::rparen, "')'");
      advance();
      return p;
    }
    parse_fail(tok_.line, tok_.col, "expected a variable, number or '(', got '" + tok_.text + "'");
  }

  Lexer lexer_;
  Token tok_;
  ContextPtr ctx_;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
    line.remove_suffix(1);
  return line;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) {
  return ExprParser(text, 1, ctx).parse();
}

std::vector<Rational> parse_point(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    if (piece.empty()) fail(ErrorCode::parse_error, "empty coordinate in point");
    out.push_back(Rational::from_string(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

InputDocument parse_input(std::string_view text) {
  ContextPtr ctx;
  std::vector<Polynomial> hs;
  std::vector<Polynomial> fs;
  std::optional<MonomialOrder> order;
  bool force = false;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++lineno;
    std::string_view line = strip_comment(raw);
    std::size_t indent = 0;
    while (indent < line.size() && (line[indent] == ' ' || line[indent] == '\t')) ++indent;
    line = line.substr(indent);
    if (!line.empty()) {
      std::size_t sp = line.find_first_of(" \t");
      std::string_view keyword = line.substr(0, sp);
      std::string_view rest = sp == std::string_view::npos ? std::string_view{} : line.substr(sp + 1);
      if (keyword == "vars") {
        if (ctx) parse_fail(lineno, 1, "duplicate vars line");
        std::vector<std::string> names;
        std::istringstream is{std::string(rest)};
        std::string name;
        while (is >> name) names.push_back(name);
        if (names.empty()) parse_fail(lineno, 1, "vars line needs at least one variable");
        try {
          ctx = VariableContext::make(std::move(names));
        } catch (const Error& e) {
          parse_fail(lineno, 1, e.what());
        }
      } else if (keyword == "h" || keyword == "f") {
        if (!ctx) parse_fail(lineno, 1, "vars line must come before polynomials");
        Polynomial p = ExprParser(rest, lineno, ctx).parse();
        (keyword == "h" ? hs : fs).push_back(std::move(p));
      } else if (keyword == "order") {
        std::string name{rest};
        std::istringstream is{name};
        is >> name;
        if (name == "degrevlex")
          order = MonomialOrder{OrderKind::degrevlex};
        else if (name == "lex")
          order = MonomialOrder{OrderKind::lex};
        else
          parse_fail(lineno, 1, "unknown order '" + name + "' (expected degrevlex or lex)");
      } else if (keyword == "force") {
        force = true;
      } else {
        parse_fail(lineno, 1, "unknown keyword '" + std::string(keyword) + "'");
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (!ctx) fail(ErrorCode::parse_error, "missing vars line");
  if (fs.size() != 2)
    fail(ErrorCode::parse_error,
         "expected exactly 2 f polynomials, got " + std::to_string(fs.size()));
  if (ctx->size() != hs.size() + 2)
    fail(ErrorCode::parse_error, "variable-count mismatch: " + std::to_string(ctx->size()) +
                                     " variables != " + std::to_string(hs.size()) + " + 2");
  Problem problem = Problem::make(ctx, {std::move(fs[0]), std::move(fs[1])}, std::move(hs));
  return InputDocument{std::move(problem), order, force};
}

std::string to_string(const Monomial& m, const VariableContext& ctx) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << ctx.name(i);
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? "-" : "+");
      if (c.sign() < 0) c = -c;
    }
    if (t.mono.is_one()) {
      os << c.str();
    } else {
      if (!c.is_one()) os << c.str() << "*";
      os << to_string(t.mono, *p.context());
    }
    first = false;
  }
  return os.str();
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::check_manifold: return "check-manifold";
    case Command::check_generic: return "check-generic";
    case Command::check_stable: return "check-stable";
    case Command::classify: return "classify";
    case Command::count: return "count";
    case Command::derive: return "derive";
  }
  return "?";
}

std::optional<Command> command_from_name(std::string_view name) {
  for (Command c : {Command::check_manifold, Command::check_generic, Command::check_stable,
                    Command::classify, Command::count, Command::derive})
    if (command_name(c) == name) return c;
  return std::nullopt;
}

std::string_view point_class_name(PointClassKind k) {
  switch (k) {
    case PointClassKind::not_on_manifold: return "NotOnManifold";
    case PointClassKind::manifold_singular: return "ManifoldSingular";
    case PointClassKind::regular: return "Regular";
    case PointClassKind::fold: return "Fold";
    case PointClassKind::cusp: return "Cusp";
    case PointClassKind::degenerate_singularity: return "DegenerateSingularity";
  }
  return "?";
}

Report run(Command command, const InputDocument& doc, const RunFlags& flags) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = command;
  r.context = doc.problem.context();
  MonomialOrder order = flags.order.value_or(doc.order.value_or(MonomialOrder{}));
  r.order = order;
  GBOptions gb{flags.gb_step_limit};
  const Problem& problem = doc.problem;

  switch (command) {
    case Command::check_manifold:
      r.certificate = check_manifold(problem, order, gb).status;
      break;
    case Command::check_generic:
      r.certificate = check_one_generic(problem, order, gb).status;
      break;
    case Command::check_stable:
      r.certificate = check_folds_cusps_only(problem, order, gb).status;
      break;
    case Command::classify: {
      if (!flags.point)
        fail(ErrorCode::invalid_argument, "classify requires a point (use --point r1,...,rm)");
      r.point = *flags.point;
      r.point_class = classify_point(problem, r.point);
      break;
    }
    case Command::count: {
      CountOptions opts;
      opts.order = order;
      opts.gb = gb;
      opts.force = flags.force || doc.force;
      r.cusps = count_cusps(problem, opts);
      break;
    }
    case Command::derive:
      r.derived = compute_derived(problem);
      break;
  }
  if (flags.verbose && !r.derived) r.derived = compute_derived(problem);
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

json poly_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) {
    json term;
    term["exp"] = t.mono.exponents();
    term["coeff"] = t.coeff.str();
    arr.push_back(std::move(term));
  }
  return arr;
}

Polynomial poly_from_json(const json& arr, const ContextPtr& ctx) {
  std::vector<Term> terms;
  for (const auto& term : arr) {
    std::vector<std::uint32_t> exps = term.at("exp").get<std::vector<std::uint32_t>>();
    Rational coeff = Rational::from_string(term.at("coeff").get<std::string>());
    terms.push_back({Monomial(std::move(exps)), std::move(coeff)});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

json polys_to_json(const std::vector<Polynomial>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(poly_to_json(p));
  return arr;
}

}  // namespace

std::string report_json(const Report& r) {
  json j;
  j["command"] = std::string(command_name(r.command));
  j["vars"] = r.context->names();
  j["order"] = r.order.kind == OrderKind::lex ? "lex" : "degrevlex";
  if (r.certificate)
    j["certificate"] = *r.certificate == CertStatus::certified ? "certified" : "inconclusive";
  if (!r.point.empty()) {
    json pt = json::array();
    for (const auto& c : r.point) pt.push_back(c.str());
    j["point"] = std::move(pt);
  }
  if (r.point_class) {
    j["point_class"]["kind"] = std::string(point_class_name(r.point_class->kind));
    if (r.point_class->kind == PointClassKind::cusp)
      j["point_class"]["sign"] = r.point_class->cusp_sign;
  }
  if (r.cusps) {
    const CuspReport& c = *r.cusps;
    j["cusps"] = {{"total", c.total},
                  {"signed_sum", c.signed_sum},
                  {"positive", c.positive},
                  {"negative", c.negative},
                  {"dim_A", c.dim_A},
                  {"theta1_rank", c.theta1_rank},
                  {"theta2_rank", c.theta2_rank},
                  {"s_certified", c.s_certified},
                  {"manifold_certified", c.manifold_certified}};
  }
  if (r.derived) {
    j["derived"] = {{"d", poly_to_json(r.derived->d)},
                    {"w", polys_to_json(r.derived->w)},
                    {"v", polys_to_json(r.derived->v)},
                    {"F", json::array({poly_to_json(r.derived->F[0]), poly_to_json(r.derived->F[1])})},
                    {"delta", poly_to_json(r.derived->delta)}};
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2);
}

Report report_from_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("bad report json: ") + e.what());
  }
  Report r;
  auto cmd = command_from_name(j.at("command").get<std::string>());
  if (!cmd) fail(ErrorCode::parse_error, "bad report json: unknown command");
  r.command = *cmd;
  r.context = VariableContext::make(j.at("vars").get<std::vector<std::string>>());
  r.order = MonomialOrder{j.at("order").get<std::string>() == "lex" ? OrderKind::lex
                                                                    : OrderKind::degrevlex};
  if (j.contains("certificate"))
    r.certificate = j["certificate"].get<std::string>() == "certified" ? CertStatus::certified
                                                                       : CertStatus::inconclusive;
  if (j.contains("point"))
    for (const auto& c : j["point"]) r.point.push_back(Rational::from_string(c.get<std::string>()));
  if (j.contains("point_class")) {
    PointClass pc{PointClassKind::regular};
    std::string kind = j["point_class"].at("kind").get<std::string>();
    bool found = false;
    for (PointClassKind k :
         {PointClassKind::not_on_manifold, PointClassKind::manifold_singular,
          PointClassKind::regular, PointClassKind::fold, PointClassKind::cusp,
          PointClassKind::degenerate_singularity})
      if (point_class_name(k) == kind) {
        pc.kind = k;
        found = true;
      }
    if (!found) fail(ErrorCode::parse_error, "bad report json: unknown point class");
    if (j["point_class"].contains("sign")) pc.cusp_sign = j["point_class"]["sign"].get<int>();
    r.point_class = pc;
  }
  if (j.contains("cusps")) {
    const json& c = j["cusps"];
    CuspReport cr;
    cr.total = c.at("total").get<long>();
    cr.signed_sum = c.at("signed_sum").get<long>();
    cr.positive = c.at("positive").get<long>();
    cr.negative = c.at("negative").get<long>();
    cr.dim_A = c.at("dim_A").get<long>();
    cr.theta1_rank = c.at("theta1_rank").get<long>();
    cr.theta2_rank = c.at("theta2_rank").get<long>();
    cr.s_certified = c.at("s_certified").get<bool>();
    cr.manifold_certified = c.at("manifold_certified").get<bool>();
    r.cusps = cr;
  }
  if (j.contains("derived")) {
    const json& d = j["derived"];
    DerivedData dd{Polynomial(r.context), {}, {}, {Polynomial(r.context), Polynomial(r.context)},
                   Polynomial(r.context)};
    dd.d = poly_from_json(d.at("d"), r.context);
    for (const auto& p : d.at("w")) dd.w.push_back(poly_from_json(p, r.context));
    for (const auto& p : d.at("v")) dd.v.push_back(poly_from_json(p, r.context));
    dd.F[0] = poly_from_json(d.at("F").at(0), r.context);
    dd.F[1] = poly_from_json(d.at("F").at(1), r.context);
    dd.delta = poly_from_json(d.at("delta"), r.context);
    r.derived = std::move(dd);
  }
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << command_name(r.command) << "\n";
  if (r.certificate)
    os << "certificate: "
       << (*r.certificate == CertStatus::certified ? "Certified" : "Inconclusive") << "\n";
  if (!r.point.empty()) {
    os << "point: (";
    for (std::size_t i = 0; i < r.point.size(); ++i)
      os << (i ? ", " : "") << r.point[i].str();
    os << ")\n";
  }
  if (r.point_class) {
    os << "class: " << point_class_name(r.point_class->kind);
    if (r.point_class->kind == PointClassKind::cusp)
      os << ", sign " << (r.point_class->cusp_sign > 0 ? "+1" : "-1");
    os << "\n";
  }
  if (r.cusps) {
    const CuspReport& c = *r.cusps;
    os << "cusps: " << c.total << "\n";
    os << "signed sum: " << (c.signed_sum > 0 ? "+" : "") << c.signed_sum << "\n";
    if (c.positive >= 0) {
      os << "positive: " << c.positive << "\n";
      os << "negative: " << c.negative << "\n";
    } else {
      os << "positive/negative: undefined (inconsistent unverified signatures)\n";
    }
    os << "dim A: " << c.dim_A << "\n";
    os << "theta1 rank: " << c.theta1_rank << ", theta2 rank: " << c.theta2_rank << "\n";
    os << "s-certificate: " << (c.s_certified ? "Certified" : "Inconclusive (forced)") << "\n";
    os << "manifold-certificate: " << (c.manifold_certified ? "Certified" : "Inconclusive") << "\n";
  }
  if (r.derived) {
    const DerivedData& dd = *r.derived;
    os << "d = " << to_string(dd.d) << "\n";
    auto print_list = [&](const char* name, const std::vector<Polynomial>& ps) {
      os << name << " = (";
      for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? ", " : "") << to_string(ps[i]);
      os << ")\n";
    };
    print_list("w", dd.w);
    print_list("v", dd.v);
    os << "F = (" << to_string(dd.F[0]) << ", " << to_string(dd.F[1]) << ")\n";
    os << "delta = " << to_string(dd.delta) << "\n";
  }
  os << "elapsed: " << r.elapsed_ms << " ms\n";
  return os.str();
}

int report_exit_code(const Report& r) {
  if (r.certificate && *r.certificate == CertStatus::inconclusive) return 2;
  if (r.cusps && !r.cusps->s_certified) return 2;
  return 0;
}

}  // namespace cuspidal
