#include "webiso/expr.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "webiso/error.hpp"

namespace webiso {

struct ExprNode {
  Op op;
  std::size_t var = 0;
  Rational value;
  long exponent = 0;
  std::vector<Expression> args;
  std::size_t nodes = 1;
  std::size_t depth = 1;
  std::size_t max_var = 0;
};

namespace {

std::shared_ptr<ExprNode> make_node(Op op, std::vector<Expression> args) {
  auto node = std::make_shared<ExprNode>();
  node->op = op;
  for (const auto& a : args) {
    node->nodes += a.node_count();
    node->depth = std::max(node->depth, a.depth() + 1);
    node->max_var = std::max(node->max_var, a.max_variable());
  }
  node->args = std::move(args);
  return node;
}

}  // namespace

Expression Expression::var(std::size_t i) {
  if (i == 0) throw Error("variable indices start at 1");
  auto node = make_node(Op::Var, {});
  node->var = i;
  node->max_var = i;
  return Expression(node);
}

Expression Expression::constant(const Rational& q) {
  auto node = make_node(Op::Const, {});
  node->value = q;
  return Expression(node);
}

Expression Expression::unary(Op op, Expression a) {
  if (op != Op::Neg && op != Op::Exp) throw Error("not a unary operator");
  return Expression(make_node(op, {std::move(a)}));
}

Expression Expression::binary(Op op, Expression a, Expression b) {
  if (op != Op::Add && op != Op::Sub && op != Op::Mul && op != Op::Div) throw Error("not a binary operator");
  if (op == Op::Div && b.op() == Op::Const && b.value() == 0) throw DomainError("division by the constant zero");
  return Expression(make_node(op, {std::move(a), std::move(b)}));
}

Expression Expression::pow(Expression a, long exponent) {
  auto node = make_node(Op::Pow, {std::move(a)});
  node->exponent = exponent;
  return Expression(node);
}

Expression Expression::exp(Expression a) { return unary(Op::Exp, std::move(a)); }

Op Expression::op() const { return node_->op; }
std::size_t Expression::var_index() const { return node_->var; }
const Rational& Expression::value() const { return node_->value; }
long Expression::exponent() const { return node_->exponent; }
const std::vector<Expression>& Expression::args() const { return node_->args; }
std::size_t Expression::node_count() const { return node_->nodes; }
std::size_t Expression::depth() const { return node_->depth; }
std::size_t Expression::max_variable() const { return node_->max_var; }
const void* Expression::id() const { return node_.get(); }

Expression operator+(const Expression& a, const Expression& b) { return Expression::binary(Op::Add, a, b); }
Expression operator-(const Expression& a, const Expression& b) { return Expression::binary(Op::Sub, a, b); }
Expression operator-(const Expression& a) { return Expression::unary(Op::Neg, a); }
Expression operator*(const Expression& a, const Expression& b) { return Expression::binary(Op::Mul, a, b); }
Expression operator/(const Expression& a, const Expression& b) { return Expression::binary(Op::Div, a, b); }

// ---------------------------------------------------------------------------
// Text grammar

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n, const ExprLimits& limits) : s_(text), n_(n), limits_(limits) {}

  Expression parse() {
    Expression e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    if (e.node_count() > limits_.max_nodes)
      throw LimitError("expression has " + std::to_string(e.node_count()) + " nodes, limit is " +
                       std::to_string(limits_.max_nodes));
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }
  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }
  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    Integer v(std::string(s_.substr(start, pos_ - start)));
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > limits_.max_coefficient_bits)
      throw LimitError("integer literal exceeds the coefficient size limit");
    return v;
  }

  Expression expr() {
    Expression e = term();
    for (;;) {
      if (accept('+'))
        e = e + term();
      else if (accept('-'))
        e = e - term();
      else
        return e;
    }
  }
  Expression term() {
    Expression e = unary();
    for (;;) {
      if (accept('*')) {
        e = e * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Expression d = unary();
        if (d.op() == Op::Const && d.value() == 0) throw ParseError("division by the constant zero", at);
        e = e / d;
      } else {
        return e;
      }
    }
  }
  Expression unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Expression power() {
    Expression base = primary();
    if (!accept('^')) return base;
    return Expression::pow(base, exponent());
  }
  long exponent() {
    skip();
    const std::size_t start = pos_;
    const bool paren = accept('(');
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    if (!at_digit()) throw ParseError("exponent must be an integer literal", start);
    Integer v = integer();
    if (paren) {
      skip();
      if (pos_ < s_.size() && s_[pos_] != ')') throw ParseError("non-integer exponent", start);
      expect(')');
    }
    skip();
    if (pos_ < s_.size() && (s_[pos_] == '.' || (!paren && s_[pos_] == '^')))
      throw ParseError(s_[pos_] == '^' ? "chained exponents need parentheses" : "non-integer exponent", start);
    if (!v.fits_slong_p() || abs(v) > 1000000) throw LimitError("exponent too large");
    long k = v.get_si();
    return negative ? -k : k;
  }
  Expression primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer v = integer();
      if (pos_ < s_.size() && s_[pos_] == '.') throw ParseError("decimal literals are not supported; write p/q", pos_);
      return Expression::constant(Rational(v));
    }
    if (c == '(') {
      ++pos_;
      Expression e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      if (word == "x") {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw ParseError("variable name needs an index (x1, x2, ...)", start);
        Integer idx = integer();
        if (idx < 1 || idx > static_cast<unsigned long>(n_))
          throw ParseError("variable x" + idx.get_str() + " out of range 1.." + std::to_string(n_), start);
        return Expression::var(idx.get_ui());
      }
      if (word == "exp") {
        expect('(');
        Expression e = expr();
        expect(')');
        return Expression::exp(e);
      }
      throw ParseError("unknown identifier '" + word + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", start);
  }

  std::string_view s_;
  std::size_t n_;
  ExprLimits limits_;
  std::size_t pos_ = 0;
};

int precedence(const Expression& e) {
  switch (e.op()) {
    case Op::Add:
    case Op::Sub:
      return 1;
    case Op::Mul:
    case Op::Div:
      return 2;
    case Op::Neg:
      return 3;
    case Op::Pow:
      return 4;
    case Op::Const:
      if (e.value() < 0) return 3;
      if (e.value().get_den() != 1) return 2;
      return 5;
    default:
      return 5;
  }
}

void write_text(const Expression& e, std::string& out);

void write_child(const Expression& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    write_text(e, out);
    out += ')';
  } else {
    write_text(e, out);
  }
}

void write_text(const Expression& e, std::string& out) {
  const auto& a = e.args();
  switch (e.op()) {
    case Op::Var:
      out += "x" + std::to_string(e.var_index());
      return;
    case Op::Const:
      out += to_string(e.value());
      return;
    case Op::Add:
    case Op::Sub:
      write_child(a[0], 1, out);
      out += e.op() == Op::Add ? " + " : " - ";
      write_child(a[1], 2, out);
      return;
    case Op::Mul:
    case Op::Div:
      write_child(a[0], 2, out);
      out += e.op() == Op::Mul ? "*" : "/";
      write_child(a[1], 3, out);
      return;
    case Op::Neg:
      out += "-";
      write_child(a[0], 3, out);
      return;
    case Op::Pow:
      write_child(a[0], 5, out);
      out += "^";
      out += e.exponent() < 0 ? "(" + std::to_string(e.exponent()) + ")" : std::to_string(e.exponent());
      return;
    case Op::Exp:
      out += "exp(";
      write_text(a[0], out);
      out += ")";
      return;
  }
}

const char* op_name(Op op) {
  switch (op) {
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::Neg: return "neg";
    case Op::Mul: return "mul";
    case Op::Div: return "div";
    case Op::Pow: return "pow";
    case Op::Exp: return "exp";
    default: return "";
  }
}

Expression from_json_tree(const nlohmann::json& j, std::size_t n) {
  if (!j.is_object()) throw ParseError("expression node must be a JSON object", 0);
  if (j.contains("var")) {
    if (!j["var"].is_number_integer()) throw ParseError("\"var\" must be an integer", 0);
    const long i = j["var"].get<long>();
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw ParseError("variable x" + std::to_string(i) + " out of range 1.." + std::to_string(n), 0);
    return Expression::var(static_cast<std::size_t>(i));
  }
  if (j.contains("const")) {
    const auto& c = j["const"];
    if (c.is_string()) return Expression::constant(parse_rational(c.get<std::string>()));
    if (c.is_number_integer()) return Expression::constant(Rational(c.get<long>()));
    throw ParseError("\"const\" must be a rational string or an integer", 0);
  }
  if (!j.contains("op") || !j["op"].is_string()) throw ParseError("expression node needs \"var\", \"const\" or \"op\"", 0);
  const std::string op = j["op"].get<std::string>();
  std::vector<Expression> args;
  if (j.contains("args")) {
    if (!j["args"].is_array()) throw ParseError("\"args\" must be an array", 0);
    for (const auto& a : j["args"]) args.push_back(from_json_tree(a, n));
  }
  auto arity = [&](std::size_t k) {
    if (args.size() != k) throw ParseError("operator \"" + op + "\" takes " + std::to_string(k) + " argument(s)", 0);
  };
  if (op == "add" || op == "mul") {
    if (args.empty()) throw ParseError("operator \"" + op + "\" needs arguments", 0);
    Expression e = args[0];
    for (std::size_t k = 1; k < args.size(); ++k) e = Expression::binary(op == "add" ? Op::Add : Op::Mul, e, args[k]);
    return e;
  }
  if (op == "sub") return arity(2), args[0] - args[1];
  if (op == "div") return arity(2), args[0] / args[1];
  if (op == "neg") return arity(1), -args[0];
  if (op == "exp") return arity(1), Expression::exp(args[0]);
  if (op == "pow") {
    arity(1);
    if (!j.contains("exponent") || !j["exponent"].is_number_integer()) throw ParseError("non-integer exponent", 0);
    return Expression::pow(args[0], j["exponent"].get<long>());
  }
  throw ParseError("unknown operator \"" + op + "\"", 0);
}

}  // namespace

Expression parse_expression(std::string_view text, std::size_t n, const ExprLimits& limits) {
  return Parser(text, n, limits).parse();
}

std::string to_text(const Expression& e) {
  std::string out;
  write_text(e, out);
  return out;
}

nlohmann::json to_json(const Expression& e) {
  switch (e.op()) {
    case Op::Var:
      return {{"var", e.var_index()}};
    case Op::Const:
      return {{"const", to_string(e.value())}};
    default: {
      nlohmann::json args = nlohmann::json::array();
      for (const auto& a : e.args()) args.push_back(to_json(a));
      nlohmann::json j = {{"op", op_name(e.op())}, {"args", args}};
      if (e.op() == Op::Pow) j["exponent"] = e.exponent();
      return j;
    }
  }
}

Expression expression_from_json(const nlohmann::json& j, std::size_t n, const ExprLimits& limits) {
  if (j.is_string()) return parse_expression(j.get<std::string>(), n, limits);
  Expression e = from_json_tree(j, n);
  if (e.node_count() > limits.max_nodes) throw LimitError("expression exceeds the node limit");
  return e;
}

// ---------------------------------------------------------------------------
// Evaluation and substitution

Rational evaluate(const Expression& e, const Point& x) {
  const auto& a = e.args();
  switch (e.op()) {
    case Op::Var:
      if (e.var_index() > x.size()) throw ShapeError("point has too few coordinates");
      return x[e.var_index() - 1];
    case Op::Const:
      return e.value();
    case Op::Add:
      return evaluate(a[0], x) + evaluate(a[1], x);
    case Op::Sub:
      return evaluate(a[0], x) - evaluate(a[1], x);
    case Op::Neg:
      return -evaluate(a[0], x);
    case Op::Mul:
      return evaluate(a[0], x) * evaluate(a[1], x);
    case Op::Div: {
      Rational d = evaluate(a[1], x);
      if (d == 0) throw DomainError("division by zero evaluating " + to_text(a[1]));
      return evaluate(a[0], x) / d;
    }
    case Op::Pow:
      return rational_pow(evaluate(a[0], x), e.exponent());
    case Op::Exp:
      if (evaluate(a[0], x) != 0) throw DomainError("exp(" + to_text(a[0]) + ") is not rational at this point");
      return 1;
  }
  return 0;
}

namespace {

Expression substitute_memo(const Expression& e, const std::vector<Expression>& r,
                           std::unordered_map<const void*, Expression>& memo) {
  if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
  Expression out = e;
  switch (e.op()) {
    case Op::Var:
      if (e.var_index() > r.size()) throw ShapeError("substitution has too few replacements");
      out = r[e.var_index() - 1];
      break;
    case Op::Const:
      break;
    case Op::Neg:
    case Op::Exp:
      out = Expression::unary(e.op(), substitute_memo(e.args()[0], r, memo));
      break;
    case Op::Pow:
      out = Expression::pow(substitute_memo(e.args()[0], r, memo), e.exponent());
      break;
    default:
      out = Expression::binary(e.op(), substitute_memo(e.args()[0], r, memo), substitute_memo(e.args()[1], r, memo));
  }
  memo.emplace(e.id(), out);
  return out;
}

class JetExpander {
 public:
  JetExpander(const BasisPtr& basis, const Point& base, const ExprLimits& limits)
      : basis_(basis), base_(base), limits_(limits) {}

  MultiJet expand(const Expression& e) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    MultiJet j = compute(e);
    for (const auto& c : j.coeffs())
      if (c != 0 && bit_size(c) > limits_.max_coefficient_bits)
        throw LimitError("jet coefficient exceeds " + std::to_string(limits_.max_coefficient_bits) + " bits");
    memo_.emplace(e.id(), j);
    return j;
  }

 private:
  MultiJet compute(const Expression& e) {
    const auto& a = e.args();
    switch (e.op()) {
      case Op::Var:
        if (e.var_index() > basis_->n()) throw ShapeError("variable x" + std::to_string(e.var_index()) + " out of range");
        return MultiJet::coordinate(basis_, base_, e.var_index());
      case Op::Const:
        return MultiJet::constant(basis_, base_, e.value());
      case Op::Add:
        return expand(a[0]) + expand(a[1]);
      case Op::Sub:
        return expand(a[0]) - expand(a[1]);
      case Op::Neg:
        return -expand(a[0]);
      case Op::Mul:
        return expand(a[0]) * expand(a[1]);
      case Op::Div: {
        MultiJet d = expand(a[1]);
        if (d.constant_term() == 0) throw DomainError("division by zero at the base point: " + to_text(a[1]));
        return expand(a[0]) * reciprocal(d);
      }
      case Op::Pow: {
        MultiJet b = expand(a[0]);
        if (e.exponent() < 0 && b.constant_term() == 0)
          throw DomainError("negative power of a quantity vanishing at the base point: " + to_text(a[0]));
        return power(b, e.exponent());
      }
      case Op::Exp: {
        MultiJet arg = expand(a[0]);
        if (arg.constant_term() != 0)
          throw DomainError("exp(" + to_text(a[0]) + ") needs an argument vanishing at the base point (value " +
                            to_string(arg.constant_term()) + ")");
        return uni_compose(series::exp_at_zero(basis_->order()), arg);
      }
    }
    throw Error("corrupt expression node");
  }

  BasisPtr basis_;
  Point base_;
  ExprLimits limits_;
  std::unordered_map<const void*, MultiJet> memo_;
};

}  // namespace

Expression substitute(const Expression& e, const std::vector<Expression>& replacements) {
  std::unordered_map<const void*, Expression> memo;
  return substitute_memo(e, replacements, memo);
}

MultiJet expand_to_jet(const Expression& e, const BasisPtr& basis, const Point& base, const ExprLimits& limits) {
  if (base.size() != basis->n()) throw ShapeError("base point dimension mismatch");
  if (e.max_variable() > basis->n()) throw ShapeError("expression uses more variables than the base point has");
  if (e.node_count() > limits.max_nodes) throw LimitError("expression exceeds the node limit");
  return JetExpander(basis, base, limits).expand(e);
}

MultiJet expand_to_jet(const Expression& e, const Point& base, int order, const ExprLimits& limits) {
  return expand_to_jet(e, make_basis(base.size(), order), base, limits);
}

// ---------------------------------------------------------------------------
// Degree analysis

bool RationalExpForm::has_exp() const {
  return std::any_of(exponent.begin(), exponent.end(), [](const Rational& q) { return q != 0; });
}

namespace {

using Affine = std::vector<Rational>;

std::optional<Affine> affine_form(const Expression& e, std::size_t n) {
  const auto& a = e.args();
  Affine out(n + 1);
  switch (e.op()) {
    case Op::Var:
      if (e.var_index() > n) return std::nullopt;
      out[e.var_index()] = 1;
      return out;
    case Op::Const:
      out[0] = e.value();
      return out;
    case Op::Add:
    case Op::Sub: {
      auto l = affine_form(a[0], n), r = affine_form(a[1], n);
      if (!l || !r) return std::nullopt;
      for (std::size_t k = 0; k <= n; ++k) out[k] = e.op() == Op::Add ? Rational((*l)[k] + (*r)[k]) : Rational((*l)[k] - (*r)[k]);
      return out;
    }
    case Op::Neg: {
      auto l = affine_form(a[0], n);
      if (!l) return std::nullopt;
      for (std::size_t k = 0; k <= n; ++k) out[k] = -(*l)[k];
      return out;
    }
    case Op::Mul:
    case Op::Div: {
      auto l = affine_form(a[0], n), r = affine_form(a[1], n);
      if (!l || !r) return std::nullopt;
      auto is_const = [](const Affine& v) {
        return std::all_of(v.begin() + 1, v.end(), [](const Rational& q) { return q == 0; });
      };
      if (e.op() == Op::Div) {
        if (!is_const(*r) || (*r)[0] == 0) return std::nullopt;
        for (std::size_t k = 0; k <= n; ++k) out[k] = (*l)[k] / (*r)[0];
        return out;
      }
      if (is_const(*l)) std::swap(l, r);
      if (!is_const(*r)) return std::nullopt;
      for (std::size_t k = 0; k <= n; ++k) out[k] = (*l)[k] * (*r)[0];
      return out;
    }
    case Op::Pow: {
      if (e.exponent() == 0) {
        out[0] = 1;
        return out;
      }
      if (e.exponent() == 1) return affine_form(a[0], n);
      return std::nullopt;
    }
    case Op::Exp:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RationalExpForm> rational_exp_form(const Expression& e, std::size_t n) {
  const auto& a = e.args();
  RationalExpForm out;
  out.exponent.assign(n + 1, Rational(0));
  switch (e.op()) {
    case Op::Var:
      out.numerator_degree = 1;
      return out;
    case Op::Const:
      return out;
    case Op::Neg:
      return rational_exp_form(a[0], n);
    case Op::Add:
    case Op::Sub: {
      auto l = rational_exp_form(a[0], n), r = rational_exp_form(a[1], n);
      if (!l || !r || l->exponent != r->exponent) return std::nullopt;
      out.numerator_degree = std::max(l->numerator_degree + r->denominator_degree,
                                      r->numerator_degree + l->denominator_degree);
      out.denominator_degree = l->denominator_degree + r->denominator_degree;
      out.exponent = l->exponent;
      return out;
    }
    case Op::Mul:
    case Op::Div: {
      auto l = rational_exp_form(a[0], n), r = rational_exp_form(a[1], n);
      if (!l || !r) return std::nullopt;
      const bool mul = e.op() == Op::Mul;
      out.numerator_degree = l->numerator_degree + (mul ? r->numerator_degree : r->denominator_degree);
      out.denominator_degree = l->denominator_degree + (mul ? r->denominator_degree : r->numerator_degree);
      for (std::size_t k = 0; k <= n; ++k) out.exponent[k] = mul ? Rational(l->exponent[k] + r->exponent[k]) : Rational(l->exponent[k] - r->exponent[k]);
      return out;
    }
    case Op::Pow: {
      auto b = rational_exp_form(a[0], n);
      if (!b) return std::nullopt;
      const long k = e.exponent();
      const long m = k < 0 ? -k : k;
      out.numerator_degree = static_cast<int>(m * (k < 0 ? b->denominator_degree : b->numerator_degree));
      out.denominator_degree = static_cast<int>(m * (k < 0 ? b->numerator_degree : b->denominator_degree));
      for (std::size_t i = 0; i <= n; ++i) out.exponent[i] = b->exponent[i] * k;
      return out;
    }
    case Op::Exp: {
      auto l = affine_form(a[0], n);
      if (!l) return std::nullopt;
      out.exponent = *l;
      return out;
    }
  }
  return std::nullopt;
}

int residual_degree_bound(const RationalExpForm& form, int field_degree) {
  // Residual of a pair (i, j), cleared by Q^5 exp(-2L): a polynomial of this degree at most.
  const int b = field_degree + 2 * form.numerator_degree + 3 * form.denominator_degree;
  bool affine_exponent = false;
  for (std::size_t k = 1; k < form.exponent.size(); ++k) affine_exponent |= form.exponent[k] != 0;
  return std::max(affine_exponent ? b : b - 3, 0);
}

}  // namespace webiso
