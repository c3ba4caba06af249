#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyckal/birkhoff.hpp"
#include "dyckal/dyck.hpp"

// Propositional temporal logic over the subintervals of a finite chain
// t_1 < ... < t_n.  A formula denotes a truth value on every interval
// [a,b] (1 <= a <= b <= n); the variable e_i holds exactly on [i,i].
// Box/Diamond quantify over subintervals, and beside the pointwise
// (classical) !, ->, the subinterval-quantified ~ and ~> make the
// down-closed valuations a Heyting algebra isomorphic to the Dyck lattice
// of semilength n+1.
//
// Concrete syntax (whitespace insignificant):
//   atoms   T  F  e<digits>  E[<a>,<b>]   (E[a,b] is sugar for
//                                          ~~(ea|...|eb), right-nested)
//   unary   !x  ~x  []x  <>x              (bind tightest)
//   binary  &  then  |  then  ->  ~>      (the implications are
//                                          right-associative)
//   parentheses group as usual.
namespace dyckal::itl {

enum class Kind {
  Bottom,
  Top,
  Var,
  Or,
  And,
  Implies,        // pointwise ->
  Not,            // pointwise !
  Box,            // true on I iff child true on every J inside I
  Diamond,        // true on I iff child true on some J inside I
  PseudoNot,      // ~x: true on I iff child false on every J inside I
  PseudoImplies,  // x~>y: true on I iff child implication holds on every J
};

// Immutable formula tree with value semantics (shared subtrees).
class Formula {
 public:
  Formula();  // Bottom

  Kind kind() const;
  int var_index() const;  // Var nodes
  Formula child() const;  // unary nodes
  Formula lhs() const;    // binary nodes
  Formula rhs() const;

  bool operator==(const Formula& o) const;  // structural equality

  struct Node;  // opaque; defined with the implementation

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend Formula bottom();
  friend Formula top();
  friend Formula var(int i);
  friend Formula disj(Formula a, Formula b);
  friend Formula conj(Formula a, Formula b);
  friend Formula implies(Formula a, Formula b);
  friend Formula neg(Formula a);
  friend Formula box(Formula a);
  friend Formula diamond(Formula a);
  friend Formula pseudo_not(Formula a);
  friend Formula pseudo_implies(Formula a, Formula b);
};

Formula bottom();
Formula top();
Formula var(int i);  // i >= 1
Formula disj(Formula a, Formula b);
Formula conj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula neg(Formula a);
Formula box(Formula a);
Formula diamond(Formula a);
Formula pseudo_not(Formula a);
Formula pseudo_implies(Formula a, Formula b);

// ~~(e_lo | ... | e_hi): the smallest down-closed formula true on iv, true
// exactly on the subintervals of iv.
Formula interval_atom(Interval iv);

// Rejects syntax errors and variable index 0 with a 1-based position.
Formula parse_formula(std::string_view text);

// Compact form: no spaces, minimal parentheses, E[a,b] sugar restored for
// interval_atom-shaped subtrees.  Printing a parser- or cdf-produced formula
// reparses to a structurally equal formula; it is always semantics-preserving.
std::string to_string(const Formula& f);

// Truth assignment on all intervals of the chain of a given order, listed
// in (lo, hi) lexicographic order.
class Valuation {
 public:
  explicit Valuation(int order);

  int order() const { return order_; }
  bool at(Interval iv) const;
  void set(Interval iv, bool v);
  std::vector<Interval> true_intervals() const;   // (lo, hi) order
  std::vector<Interval> maximal_true() const;     // maximal under inclusion

  bool operator==(const Valuation&) const = default;

 private:
  int index(Interval iv) const;
  int order_ = 0;
  std::vector<char> bits_;
};

// All intervals of the order-n chain in (lo, hi) lexicographic order.
std::vector<Interval> chain_intervals(int order);

// Truth of f on every interval; rejects variable indices outside [1, order].
Valuation evaluate(const Formula& f, int order);

// True iff f holds on every interval.
bool is_valid(const Formula& f, int order);

struct ThetaWitness {
  Interval outer;  // where f is true
  Interval inner;  // a subinterval where f fails
};

struct ThetaCheck {
  bool member = false;
  std::optional<ThetaWitness> witness;  // set iff !member; earliest in
                                        // (lo, hi) scan order
};

// Membership in the down-closed fragment: truth on an interval must imply
// truth on all its subintervals.
ThetaCheck in_theta(const Formula& f, int order);

bool equivalent(const Formula& f, const Formula& g, int order);

// Canonical disjunctive form: the join of interval_atom(I) over the maximal
// true intervals, sorted by lo (Bottom when there are none).  Requires a
// down-closed f and is equivalent to it.
Formula cdf(const Formula& f, int order);

// Down-closed formulas over order n correspond to Dyck paths of semilength
// n+1: maximal true intervals are the path's antichain.  Inverse pair.
DyckPath theta_to_dyck(const Formula& f, int order);
Formula dyck_to_theta(const DyckPath& p);

}  // namespace dyckal::itl
