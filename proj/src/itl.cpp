#include "dyckal/itl.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace dyckal::itl {

struct Formula::Node {
  Kind kind;
  int var = 0;
  std::shared_ptr<const Node> a, b;
};

namespace {
using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make_node(Kind k, int var, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  n->var = var;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

bool is_unary(Kind k) {
  return k == Kind::Not || k == Kind::Box || k == Kind::Diamond ||
         k == Kind::PseudoNot;
}

bool is_binary(Kind k) {
  return k == Kind::Or || k == Kind::And || k == Kind::Implies ||
         k == Kind::PseudoImplies;
}

bool node_equal(const Formula::Node* x, const Formula::Node* y) {
  if (x == y) return true;
  if (x->kind != y->kind || x->var != y->var) return false;
  if ((x->a == nullptr) != (y->a == nullptr)) return false;
  if ((x->b == nullptr) != (y->b == nullptr)) return false;
  if (x->a && !node_equal(x->a.get(), y->a.get())) return false;
  if (x->b && !node_equal(x->b.get(), y->b.get())) return false;
  return true;
}
}  // namespace

Formula::Formula() : node_(make_node(Kind::Bottom, 0, nullptr, nullptr)) {}

Kind Formula::kind() const { return node_->kind; }

int Formula::var_index() const {
  if (node_->kind != Kind::Var) throw std::logic_error("not a variable");
  return node_->var;
}

Formula Formula::child() const {
  if (!is_unary(node_->kind)) throw std::logic_error("not a unary formula");
  return Formula(node_->a);
}

Formula Formula::lhs() const {
  if (!is_binary(node_->kind)) throw std::logic_error("not a binary formula");
  return Formula(node_->a);
}

Formula Formula::rhs() const {
  if (!is_binary(node_->kind)) throw std::logic_error("not a binary formula");
  return Formula(node_->b);
}

bool Formula::operator==(const Formula& o) const {
  return node_equal(node_.get(), o.node_.get());
}

Formula bottom() { return Formula(make_node(Kind::Bottom, 0, nullptr, nullptr)); }

Formula top() { return Formula(make_node(Kind::Top, 0, nullptr, nullptr)); }

Formula var(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  return Formula(make_node(Kind::Var, i, nullptr, nullptr));
}

Formula disj(Formula a, Formula b) {
  return Formula(make_node(Kind::Or, 0, a.node_, b.node_));
}
Formula conj(Formula a, Formula b) {
  return Formula(make_node(Kind::And, 0, a.node_, b.node_));
}
Formula implies(Formula a, Formula b) {
  return Formula(make_node(Kind::Implies, 0, a.node_, b.node_));
}
Formula pseudo_implies(Formula a, Formula b) {
  return Formula(make_node(Kind::PseudoImplies, 0, a.node_, b.node_));
}
Formula neg(Formula a) {
  return Formula(make_node(Kind::Not, 0, a.node_, nullptr));
}
Formula box(Formula a) {
  return Formula(make_node(Kind::Box, 0, a.node_, nullptr));
}
Formula diamond(Formula a) {
  return Formula(make_node(Kind::Diamond, 0, a.node_, nullptr));
}
Formula pseudo_not(Formula a) {
  return Formula(make_node(Kind::PseudoNot, 0, a.node_, nullptr));
}

Formula interval_atom(Interval iv) {
  if (iv.lo < 1 || iv.hi < iv.lo)
    throw std::invalid_argument("bad interval [" + std::to_string(iv.lo) +
                                "," + std::to_string(iv.hi) + "]");
  Formula chain = var(iv.hi);
  for (int i = iv.hi - 1; i >= iv.lo; --i) chain = disj(var(i), chain);
  return pseudo_not(pseudo_not(chain));
}

// ------------------------------------------------------------------ parser

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& why, size_t at) const {
    throw std::invalid_argument("formula parse error at position " +
                                std::to_string(at + 1) + ": " + why);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a number", start);
    if (pos - start > 6) fail("number too large", start);
    int v = 0;
    for (size_t i = start; i < pos; ++i) v = v * 10 + (text[i] - '0');
    return v;
  }
};

struct Parser {
  Lexer lex;

  Formula parse() {
    Formula f = implication();
    if (!lex.done())
      lex.fail(std::string("unexpected '") + lex.peek() + "'", lex.pos);
    return f;
  }

  Formula implication() {  // right-associative, -> and ~> at one level
    Formula lhs = disjunction();
    lex.skip_ws();
    if (lex.pos + 1 < lex.text.size() && lex.text[lex.pos] == '-' &&
        lex.text[lex.pos + 1] == '>') {
      lex.pos += 2;
      return implies(std::move(lhs), implication());
    }
    if (lex.pos + 1 < lex.text.size() && lex.text[lex.pos] == '~' &&
        lex.text[lex.pos + 1] == '>') {
      lex.pos += 2;
      return pseudo_implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (lex.eat('|')) f = disj(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (lex.eat('&')) f = conj(std::move(f), unary());
    return f;
  }

  Formula unary() {
    lex.skip_ws();
    if (lex.eat('!')) return neg(unary());
    if (lex.peek() == '~' &&
        !(lex.pos + 1 < lex.text.size() && lex.text[lex.pos + 1] == '>')) {
      ++lex.pos;
      return pseudo_not(unary());
    }
    if (lex.peek() == '[') {
      ++lex.pos;
      if (!lex.eat(']')) lex.fail("expected ']'", lex.pos);
      return box(unary());
    }
    if (lex.peek() == '<') {
      ++lex.pos;
      if (!lex.eat('>')) lex.fail("expected '>'", lex.pos);
      return diamond(unary());
    }
    return atom();
  }

  Formula atom() {
    lex.skip_ws();
    size_t at = lex.pos;
    char c = lex.peek();
    if (c == '(') {
      ++lex.pos;
      Formula f = implication();
      if (!lex.eat(')')) lex.fail("expected ')'", lex.pos);
      return f;
    }
    if (c == 'T') {
      ++lex.pos;
      return top();
    }
    if (c == 'F') {
      ++lex.pos;
      return bottom();
    }
    if (c == 'e') {
      ++lex.pos;
      int i = lex.number();
      if (i == 0) lex.fail("variable index 0", at);
      return var(i);
    }
    if (c == 'E') {
      ++lex.pos;
      if (!lex.eat('[')) lex.fail("expected '[' after E", lex.pos);
      int a = lex.number();
      if (!lex.eat(',')) lex.fail("expected ','", lex.pos);
      int b = lex.number();
      if (!lex.eat(']')) lex.fail("expected ']'", lex.pos);
      if (a == 0) lex.fail("variable index 0", at);
      if (a > b) lex.fail("empty interval E[" + std::to_string(a) + "," +
                              std::to_string(b) + "]", at);
      return interval_atom({a, b});
    }
    if (c == '\0') lex.fail("unexpected end of input", lex.pos);
    lex.fail(std::string("unexpected '") + c + "'", at);
  }
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p{Lexer{text}};
  return p.parse();
}

// ----------------------------------------------------------------- printer

namespace {

// Matches ~~(e_a | (e_{a+1} | ...)) including the bare-variable case,
// i.e. the shape interval_atom produces.
std::optional<Interval> match_interval_atom(const Formula& f) {
  if (f.kind() != Kind::PseudoNot) return std::nullopt;
  Formula inner = f.child();
  if (inner.kind() != Kind::PseudoNot) return std::nullopt;
  Formula cur = inner.child();
  std::vector<int> vars;
  while (cur.kind() == Kind::Or) {
    if (cur.lhs().kind() != Kind::Var) return std::nullopt;
    vars.push_back(cur.lhs().var_index());
    cur = cur.rhs();
  }
  if (cur.kind() != Kind::Var) return std::nullopt;
  vars.push_back(cur.var_index());
  for (size_t i = 1; i < vars.size(); ++i)
    if (vars[i] != vars[i - 1] + 1) return std::nullopt;
  return Interval{vars.front(), vars.back()};
}

// precedence: implications 0 < | 1 < & 2 < unary 3 < atom 4
void print(const Formula& f, int context, std::string& out) {
  if (auto iv = match_interval_atom(f)) {
    out += "E[" + std::to_string(iv->lo) + "," + std::to_string(iv->hi) + "]";
    return;
  }
  switch (f.kind()) {
    case Kind::Bottom:
      out += 'F';
      return;
    case Kind::Top:
      out += 'T';
      return;
    case Kind::Var:
      out += 'e' + std::to_string(f.var_index());
      return;
    case Kind::Not:
    case Kind::Box:
    case Kind::Diamond:
    case Kind::PseudoNot: {
      out += f.kind() == Kind::Not         ? "!"
             : f.kind() == Kind::Box       ? "[]"
             : f.kind() == Kind::Diamond   ? "<>"
                                           : "~";
      print(f.child(), 3, out);
      return;
    }
    case Kind::Or:
    case Kind::And: {
      // associative: flatten chains either way they nest
      Kind k = f.kind();
      int level = k == Kind::Or ? 1 : 2;
      bool wrap = context > level;
      if (wrap) out += '(';
      std::vector<Formula> operands;
      auto collect = [&](auto&& self, const Formula& g) -> void {
        if (g.kind() == k && !match_interval_atom(g)) {
          self(self, g.lhs());
          self(self, g.rhs());
        } else {
          operands.push_back(g);
        }
      };
      collect(collect, f);
      for (size_t i = 0; i < operands.size(); ++i) {
        if (i) out += k == Kind::Or ? '|' : '&';
        print(operands[i], level + 1, out);
      }
      if (wrap) out += ')';
      return;
    }
    case Kind::Implies:
    case Kind::PseudoImplies: {
      bool wrap = context > 0;
      if (wrap) out += '(';
      print(f.lhs(), 1, out);
      out += f.kind() == Kind::Implies ? "->" : "~>";
      print(f.rhs(), 0, out);
      if (wrap) out += ')';
      return;
    }
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

// --------------------------------------------------------------- semantics

std::vector<Interval> chain_intervals(int order) {
  std::vector<Interval> out;
  for (int lo = 1; lo <= order; ++lo)
    for (int hi = lo; hi <= order; ++hi) out.push_back({lo, hi});
  return out;
}

Valuation::Valuation(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("chain order must be >= 0");
  bits_.assign(static_cast<size_t>(order * (order + 1) / 2), 0);
}

int Valuation::index(Interval iv) const {
  if (iv.lo < 1 || iv.hi < iv.lo || iv.hi > order_)
    throw std::invalid_argument("interval [" + std::to_string(iv.lo) + "," +
                                std::to_string(iv.hi) +
                                "] outside the order-" +
                                std::to_string(order_) + " chain");
  int before = (iv.lo - 1) * (order_ + 1) - (iv.lo - 1) * iv.lo / 2;
  return before + (iv.hi - iv.lo);
}

bool Valuation::at(Interval iv) const {
  return bits_[static_cast<size_t>(index(iv))] != 0;
}

void Valuation::set(Interval iv, bool v) {
  bits_[static_cast<size_t>(index(iv))] = v ? 1 : 0;
}

std::vector<Interval> Valuation::true_intervals() const {
  std::vector<Interval> out;
  for (const auto& iv : chain_intervals(order_))
    if (at(iv)) out.push_back(iv);
  return out;
}

std::vector<Interval> Valuation::maximal_true() const {
  auto t = true_intervals();
  std::vector<Interval> out;
  for (const auto& a : t) {
    bool dominated = false;
    for (const auto& b : t)
      if (b != a && b.contains(a)) { dominated = true; break; }
    if (!dominated) out.push_back(a);
  }
  return out;
}

Valuation evaluate(const Formula& f, int order) {
  Valuation v(order);
  auto ivs = chain_intervals(order);
  switch (f.kind()) {
    case Kind::Bottom:
      break;
    case Kind::Top:
      for (const auto& iv : ivs) v.set(iv, true);
      break;
    case Kind::Var: {
      int i = f.var_index();
      if (i > order)
        throw std::invalid_argument("variable e" + std::to_string(i) +
                                    " exceeds chain order " +
                                    std::to_string(order));
      v.set({i, i}, true);
      break;
    }
    case Kind::Or:
    case Kind::And:
    case Kind::Implies: {
      Valuation a = evaluate(f.lhs(), order);
      Valuation b = evaluate(f.rhs(), order);
      for (const auto& iv : ivs) {
        bool x = a.at(iv), y = b.at(iv);
        v.set(iv, f.kind() == Kind::Or    ? x || y
                  : f.kind() == Kind::And ? x && y
                                          : !x || y);
      }
      break;
    }
    case Kind::Not: {
      Valuation a = evaluate(f.child(), order);
      for (const auto& iv : ivs) v.set(iv, !a.at(iv));
      break;
    }
    case Kind::Box:
    case Kind::Diamond:
    case Kind::PseudoNot: {
      Valuation a = evaluate(f.child(), order);
      for (const auto& iv : ivs) {
        bool all = true, any = false;
        for (int x = iv.lo; x <= iv.hi; ++x)
          for (int y = x; y <= iv.hi; ++y) {
            bool t = a.at({x, y});
            all = all && t;
            any = any || t;
          }
        v.set(iv, f.kind() == Kind::Box       ? all
                  : f.kind() == Kind::Diamond ? any
                                              : !any);
      }
      break;
    }
    case Kind::PseudoImplies: {
      Valuation a = evaluate(f.lhs(), order);
      Valuation b = evaluate(f.rhs(), order);
      for (const auto& iv : ivs) {
        bool ok = true;
        for (int x = iv.lo; x <= iv.hi && ok; ++x)
          for (int y = x; y <= iv.hi && ok; ++y)
            ok = !a.at({x, y}) || b.at({x, y});
        v.set(iv, ok);
      }
      break;
    }
  }
  return v;
}

bool is_valid(const Formula& f, int order) {
  Valuation v = evaluate(f, order);
  for (const auto& iv : chain_intervals(order))
    if (!v.at(iv)) return false;
  return true;
}

ThetaCheck in_theta(const Formula& f, int order) {
  Valuation v = evaluate(f, order);
  for (const auto& iv : chain_intervals(order)) {
    if (!v.at(iv)) continue;
    for (int x = iv.lo; x <= iv.hi; ++x)
      for (int y = x; y <= iv.hi; ++y)
        if (!v.at({x, y})) return {false, ThetaWitness{iv, {x, y}}};
  }
  return {true, std::nullopt};
}

bool equivalent(const Formula& f, const Formula& g, int order) {
  return evaluate(f, order) == evaluate(g, order);
}

namespace {

[[noreturn]] void not_down_closed(const ThetaWitness& w) {
  throw std::invalid_argument(
      "formula is not down-closed: true on [" + std::to_string(w.outer.lo) +
      "," + std::to_string(w.outer.hi) + "] but false on [" +
      std::to_string(w.inner.lo) + "," + std::to_string(w.inner.hi) + "]");
}

Formula disjunction_of_atoms(const std::vector<Interval>& ivs) {
  if (ivs.empty()) return bottom();
  Formula f = interval_atom(ivs.front());
  for (size_t i = 1; i < ivs.size(); ++i)
    f = disj(std::move(f), interval_atom(ivs[i]));
  return f;
}

}  // namespace

Formula cdf(const Formula& f, int order) {
  auto check = in_theta(f, order);
  if (!check.member) not_down_closed(*check.witness);
  auto mx = evaluate(f, order).maximal_true();
  std::sort(mx.begin(), mx.end());
  return disjunction_of_atoms(mx);
}

DyckPath theta_to_dyck(const Formula& f, int order) {
  auto check = in_theta(f, order);
  if (!check.member) not_down_closed(*check.witness);
  auto mx = evaluate(f, order).maximal_true();
  std::vector<Interval> ivs(mx.begin(), mx.end());
  return from_antichain(IntervalAntichain::make(order + 1, std::move(ivs)));
}

Formula dyck_to_theta(const DyckPath& p) {
  return disjunction_of_atoms(to_antichain(p).intervals);
}

}  // namespace dyckal::itl
