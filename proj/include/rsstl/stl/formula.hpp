#pragma once

#include "rsstl/stl/interval.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace rsstl::stl {

enum class Op {
  True,
  Atom,
  Not,
  Or,
  And,
  Implies,
  Next,
  Until,
  Release,
  NonStrictRelease,
  Eventually,
  Always,
};

/// Affine predicate  sum(coef * channel) + constant >= 0.
struct AffineAtom {
  struct Term {
    std::string channel;
    double coef = 1.0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  std::vector<Term> terms;
  double constant = 0.0;

  /// `channel >= c` and `channel <= c` in normalized form.
  static AffineAtom at_least(std::string channel, double threshold);
  static AffineAtom at_most(std::string channel, double threshold);

  /// Name used for blame reports: the channel for single-channel atoms,
  /// otherwise the printed predicate.
  std::string label() const;
  std::string to_string() const;
  double norm() const;

  friend bool operator==(const AffineAtom&, const AffineAtom&) = default;
};

/// Immutable, shareable STL syntax tree.
class Formula {
 public:
  struct Node;

  Op op() const;
  const AffineAtom& atom() const;        // Op::Atom only
  const Interval& interval() const;      // temporal operators only
  const std::vector<Formula>& children() const;
  const Formula& child(std::size_t i) const { return children().at(i); }

  /// Identity of the shared node; equal for copies of the same formula.
  const void* id() const { return node_.get(); }

  std::size_t size() const;   // number of nodes
  std::size_t depth() const;

  /// Fully parenthesized text accepted by parse_formula.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  friend Formula make_node(Op, std::vector<Formula>, Interval, AffineAtom);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Op op;
  std::vector<Formula> children;
  Interval interval;
  AffineAtom atom;
};

Formula make_node(Op op, std::vector<Formula> children, Interval interval = {}, AffineAtom atom = {});

// Constructors mirroring the grammar.
Formula True();
Formula Atom(AffineAtom atom);
Formula Not(Formula f);
Formula Or(Formula a, Formula b);
Formula And(Formula a, Formula b);
Formula Implies(Formula a, Formula b);
Formula Next(Formula f, Interval i = {});
Formula Until(Formula a, Formula b, Interval i = {});
Formula Release(Formula a, Formula b, Interval i = {});
Formula NonStrictRelease(Formula a, Formula b, Interval i = {});
Formula Eventually(Formula f, Interval i = {});
Formula Always(Formula f, Interval i = {});

bool is_temporal(Op op);
bool is_binary(Op op);

/// Replaces every `a RW_I b` with `a R_I (a \/ b)`.
Formula rewrite_nonstrict_release(const Formula& phi);

/// Rewrites And/Implies/Eventually/Always/Release into the core grammar
/// (true, atoms, !, \/, X, U). NonStrictRelease is kept.
Formula expand_abbreviations(const Formula& phi);

/// Distinct atom labels in the formula, sorted.
std::vector<std::string> atom_labels(const Formula& phi);

/// Distinct channels referenced by the formula's atoms, sorted.
std::vector<std::string> referenced_channels(const Formula& phi);

} // namespace rsstl::stl
