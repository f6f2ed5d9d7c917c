#include "rsstl/stl/formula.hpp"

#include "rsstl/stl/value.hpp"
#include "rsstl/util/format.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace rsstl::stl {

AffineAtom AffineAtom::at_least(std::string channel, double threshold) {
  return AffineAtom{{{std::move(channel), 1.0}}, canonical(-threshold)};
}

AffineAtom AffineAtom::at_most(std::string channel, double threshold) {
  return AffineAtom{{{std::move(channel), -1.0}}, canonical(threshold)};
}

std::string AffineAtom::label() const {
  if (terms.size() == 1) return terms.front().channel;
  return to_string();
}

double AffineAtom::norm() const {
  double sq = 0.0;
  for (const auto& t : terms) sq += t.coef * t.coef;
  return std::sqrt(sq);
}

std::string AffineAtom::to_string() const {
  if (terms.size() == 1 && terms.front().coef == 1.0)
    return terms.front().channel + " >= " + util::format_double(canonical(-constant));
  if (terms.size() == 1 && terms.front().coef == -1.0)
    return terms.front().channel + " <= " + util::format_double(constant);
  std::string s;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    if (k == 0) {
      s += util::format_double(t.coef);
    } else {
      s += t.coef < 0 ? " - " : " + ";
      s += util::format_double(std::abs(t.coef));
    }
    s += "*" + t.channel;
  }
  return s + " >= " + util::format_double(canonical(-constant));
}

Op Formula::op() const { return node_->op; }

const AffineAtom& Formula::atom() const {
  if (node_->op != Op::Atom) throw std::logic_error("Formula::atom on a non-atom node");
  return node_->atom;
}

const Interval& Formula::interval() const { return node_->interval; }

const std::vector<Formula>& Formula::children() const { return node_->children; }

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& c : children()) n += c.size();
  return n;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : children()) d = std::max(d, c.depth());
  return d + 1;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.interval() != b.interval()) return false;
  if (a.op() == Op::Atom && !(a.atom() == b.atom())) return false;
  return a.children() == b.children();
}

Formula make_node(Op op, std::vector<Formula> children, Interval interval, AffineAtom atom) {
  auto n = std::make_shared<Formula::Node>();
  n->op = op;
  n->children = std::move(children);
  n->interval = interval;
  n->atom = std::move(atom);
  return Formula(std::move(n));
}

Formula True() { return make_node(Op::True, {}); }

Formula Atom(AffineAtom atom) {
  if (atom.terms.empty()) throw std::invalid_argument("atom without channels");
  if (atom.norm() == 0.0) throw std::invalid_argument("atom coefficients are all zero");
  return make_node(Op::Atom, {}, {}, std::move(atom));
}

Formula Not(Formula f) { return make_node(Op::Not, {std::move(f)}); }
Formula Or(Formula a, Formula b) { return make_node(Op::Or, {std::move(a), std::move(b)}); }
Formula And(Formula a, Formula b) { return make_node(Op::And, {std::move(a), std::move(b)}); }
Formula Implies(Formula a, Formula b) { return make_node(Op::Implies, {std::move(a), std::move(b)}); }
Formula Next(Formula f, Interval i) { return make_node(Op::Next, {std::move(f)}, i); }
Formula Until(Formula a, Formula b, Interval i) { return make_node(Op::Until, {std::move(a), std::move(b)}, i); }
Formula Release(Formula a, Formula b, Interval i) {
  return make_node(Op::Release, {std::move(a), std::move(b)}, i);
}
Formula NonStrictRelease(Formula a, Formula b, Interval i) {
  return make_node(Op::NonStrictRelease, {std::move(a), std::move(b)}, i);
}
Formula Eventually(Formula f, Interval i) { return make_node(Op::Eventually, {std::move(f)}, i); }
Formula Always(Formula f, Interval i) { return make_node(Op::Always, {std::move(f)}, i); }

bool is_temporal(Op op) {
  switch (op) {
    case Op::Next:
    case Op::Until:
    case Op::Release:
    case Op::NonStrictRelease:
    case Op::Eventually:
    case Op::Always: return true;
    default: return false;
  }
}

bool is_binary(Op op) {
  switch (op) {
    case Op::Or:
    case Op::And:
    case Op::Implies:
    case Op::Until:
    case Op::Release:
    case Op::NonStrictRelease: return true;
    default: return false;
  }
}

namespace {

std::string interval_suffix(const Interval& i) { return i.is_default() ? "" : i.to_string(); }

const char* binary_symbol(Op op) {
  switch (op) {
    case Op::Or: return "\\/";
    case Op::And: return "/\\";
    case Op::Implies: return "->";
    case Op::Until: return "U";
    case Op::Release: return "R";
    case Op::NonStrictRelease: return "RW";
    default: throw std::logic_error("not a binary operator");
  }
}

const char* unary_symbol(Op op) {
  switch (op) {
    case Op::Not: return "!";
    case Op::Next: return "X";
    case Op::Eventually: return "F";
    case Op::Always: return "G";
    default: throw std::logic_error("not a unary operator");
  }
}

void collect(const Formula& f, std::set<std::string>& labels, std::set<std::string>& channels) {
  if (f.op() == Op::Atom) {
    labels.insert(f.atom().label());
    for (const auto& t : f.atom().terms) channels.insert(t.channel);
  }
  for (const auto& c : f.children()) collect(c, labels, channels);
}

} // namespace

std::string Formula::to_string() const {
  switch (op()) {
    case Op::True: return "true";
    case Op::Atom: return atom().to_string();
    case Op::Not: return std::string("!") + child(0).to_string();
    case Op::Next:
    case Op::Eventually:
    case Op::Always: {
      const auto iv = interval_suffix(interval());
      return std::string(unary_symbol(op())) + iv + " " + child(0).to_string();
    }
    default: {
      std::string sym = binary_symbol(op());
      if (is_temporal(op())) sym += interval_suffix(interval());
      return "(" + child(0).to_string() + " " + sym + " " + child(1).to_string() + ")";
    }
  }
}

Formula rewrite_nonstrict_release(const Formula& phi) {
  std::vector<Formula> kids;
  kids.reserve(phi.children().size());
  for (const auto& c : phi.children()) kids.push_back(rewrite_nonstrict_release(c));
  if (phi.op() == Op::NonStrictRelease) {
    auto lhs = kids[0];
    return Release(lhs, Or(lhs, kids[1]), phi.interval());
  }
  if (phi.op() == Op::Atom || phi.op() == Op::True) return phi;
  return make_node(phi.op(), std::move(kids), phi.interval());
}

Formula expand_abbreviations(const Formula& phi) {
  std::vector<Formula> k;
  for (const auto& c : phi.children()) k.push_back(expand_abbreviations(c));
  switch (phi.op()) {
    case Op::True:
    case Op::Atom: return phi;
    case Op::And: return Not(Or(Not(k[0]), Not(k[1])));
    case Op::Implies: return Or(Not(k[0]), k[1]);
    case Op::Eventually: return Until(True(), k[0], phi.interval());
    case Op::Always: return Not(Until(True(), Not(k[0]), phi.interval()));
    case Op::Release: return Not(Until(Not(k[0]), Not(k[1]), phi.interval()));
    default: return make_node(phi.op(), std::move(k), phi.interval());
  }
}

std::vector<std::string> atom_labels(const Formula& phi) {
  std::set<std::string> labels, channels;
  collect(phi, labels, channels);
  return {labels.begin(), labels.end()};
}

std::vector<std::string> referenced_channels(const Formula& phi) {
  std::set<std::string> labels, channels;
  collect(phi, labels, channels);
  return {channels.begin(), channels.end()};
}

} // namespace rsstl::stl
