#include "rsstl/stl/monitor.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace rsstl::stl {

RobustValue signed_distance(std::span<const double> x, const AffineAtom& atom) {
  if (x.size() != atom.terms.size())
    throw std::invalid_argument("signed_distance: point has " + std::to_string(x.size()) +
                                " coordinates, predicate has " + std::to_string(atom.terms.size()));
  const double norm = atom.norm();
  if (norm == 0.0) throw std::invalid_argument("signed_distance: predicate coefficients are all zero");
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += atom.terms[k].coef * x[k];
  s += atom.constant;
  return canonical(s / norm);
}

void check_channels(const Formula& phi, const Trace& trace) {
  for (const auto& c : referenced_channels(phi)) {
    if (!trace.has_channel(c)) throw std::out_of_range("trace has no channel '" + c + "'");
  }
}

namespace {

// A robustness value plus the atom occurrence it was copied from.
struct Tagged {
  RobustValue value;
  int atom = -1;              // rank of the atom label, -1 for constants
  std::int64_t sample = -1;   // sample the atom was read at
};

constexpr Tagged kTopTag{kTop};
constexpr Tagged kBottomTag{kBottom};

// Earliest sample first, then smallest atom name; constants lose ties.
bool preferred_on_tie(const Tagged& a, const Tagged& b) {
  const auto sa = a.sample < 0 ? std::numeric_limits<std::int64_t>::max() : a.sample;
  const auto sb = b.sample < 0 ? std::numeric_limits<std::int64_t>::max() : b.sample;
  if (sa != sb) return sa < sb;
  const int ra = a.atom < 0 ? std::numeric_limits<int>::max() : a.atom;
  const int rb = b.atom < 0 ? std::numeric_limits<int>::max() : b.atom;
  return ra <= rb;
}

Tagged tjoin(const Tagged& a, const Tagged& b) {
  if (a.value != b.value) return a.value > b.value ? a : b;
  return preferred_on_tie(a, b) ? a : b;
}

Tagged tmeet(const Tagged& a, const Tagged& b) {
  if (a.value != b.value) return a.value < b.value ? a : b;
  return preferred_on_tie(a, b) ? a : b;
}

Tagged tneg(Tagged a) {
  a.value = negate(a.value);
  return a;
}

using Signal = std::vector<Tagged>;

Signal negated(Signal s) {
  for (auto& v : s) v = tneg(v);
  return s;
}

class DpEvaluator {
 public:
  DpEvaluator(const Trace& trace, const std::vector<std::string>& labels)
      : trace_(trace), labels_(labels), n_(static_cast<std::int64_t>(trace.size())) {}

  const Signal& eval(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Signal s = compute(f);
    return memo_.emplace(f.id(), std::move(s)).first->second;
  }

 private:
  Signal compute(const Formula& f) {
    switch (f.op()) {
      case Op::True: return Signal(static_cast<std::size_t>(n_), kTopTag);
      case Op::Atom: return atom(f.atom());
      case Op::Not: return negated(eval(f.child(0)));
      case Op::Or: return pointwise(eval(f.child(0)), eval(f.child(1)), tjoin);
      case Op::And: return pointwise(eval(f.child(0)), eval(f.child(1)), tmeet);
      case Op::Implies: return pointwise(negated(eval(f.child(0))), eval(f.child(1)), tjoin);
      case Op::Next: return next(eval(f.child(0)), f.interval());
      case Op::Until: return until(eval(f.child(0)), eval(f.child(1)), f.interval());
      case Op::Release:
        return negated(until(negated(eval(f.child(0))), negated(eval(f.child(1))), f.interval()));
      case Op::NonStrictRelease: return nonstrict_release(eval(f.child(0)), eval(f.child(1)), f.interval());
      case Op::Eventually:
        return until(Signal(static_cast<std::size_t>(n_), kTopTag), eval(f.child(0)), f.interval());
      case Op::Always:
        return negated(until(Signal(static_cast<std::size_t>(n_), kTopTag), negated(eval(f.child(0))), f.interval()));
    }
    throw std::logic_error("unhandled operator");
  }

  Signal atom(const AffineAtom& a) {
    std::vector<std::span<const double>> cols;
    for (const auto& t : a.terms) cols.push_back(trace_.channel(t.channel));
    const int rank = static_cast<int>(std::lower_bound(labels_.begin(), labels_.end(), a.label()) - labels_.begin());
    Signal s(static_cast<std::size_t>(n_));
    std::vector<double> x(cols.size());
    for (std::int64_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < cols.size(); ++k) x[k] = cols[k][static_cast<std::size_t>(i)];
      s[static_cast<std::size_t>(i)] = Tagged{signed_distance(x, a), rank, i};
    }
    return s;
  }

  template <class Fn>
  static Signal pointwise(const Signal& a, const Signal& b, Fn fn) {
    Signal s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = fn(a[i], b[i]);
    return s;
  }

  Signal next(const Signal& a, const Interval& iv) const {
    Signal s(static_cast<std::size_t>(n_), kBottomTag);
    if (!iv.contains_steps(1, trace_.dt())) return s;
    for (std::int64_t i = 0; i + 1 < n_; ++i) s[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i + 1)];
    return s;
  }

  // max over i' in window of min(rhs(i'), min over [i, i') of lhs)
  Signal until(const Signal& lhs, const Signal& rhs, const Interval& iv) const {
    Signal s(static_cast<std::size_t>(n_), kBottomTag);
    const auto w = iv.steps(trace_.dt());
    if (!w) return s;
    auto at = [](const Signal& v, std::int64_t k) -> const Tagged& { return v[static_cast<std::size_t>(k)]; };
    if (w->unbounded()) {
      // tail(i) = max over i' >= i of min(rhs(i'), min lhs[i, i'))
      Signal tail(static_cast<std::size_t>(n_) + 1, kBottomTag);
      for (std::int64_t i = n_ - 1; i >= 0; --i)
        tail[static_cast<std::size_t>(i)] = tjoin(at(rhs, i), tmeet(at(lhs, i), at(tail, i + 1)));
      for (std::int64_t i = 0; i < n_; ++i) {
        const std::int64_t lo = i + w->first;
        if (lo >= n_) continue;
        Tagged prefix = kTopTag;
        for (std::int64_t k = i; k < lo; ++k) prefix = tmeet(prefix, at(lhs, k));
        s[static_cast<std::size_t>(i)] = tmeet(prefix, at(tail, lo));
      }
      return s;
    }
    for (std::int64_t i = 0; i < n_; ++i) {
      const std::int64_t lo = i + w->first;
      const std::int64_t hi = std::min(n_ - 1, i + *w->last);
      if (lo > hi) continue;
      Tagged prefix = kTopTag;
      for (std::int64_t k = i; k < lo; ++k) prefix = tmeet(prefix, at(lhs, k));
      Tagged best = kBottomTag;
      for (std::int64_t k = lo; k <= hi; ++k) {
        best = tjoin(best, tmeet(at(rhs, k), prefix));
        prefix = tmeet(prefix, at(lhs, k));
      }
      s[static_cast<std::size_t>(i)] = best;
    }
    return s;
  }

  // min over i' in window of max(rhs(i'), max over [i, i'] of lhs)
  Signal nonstrict_release(const Signal& lhs, const Signal& rhs, const Interval& iv) const {
    Signal s(static_cast<std::size_t>(n_), kTopTag);
    const auto w = iv.steps(trace_.dt());
    if (!w) return s;
    auto at = [](const Signal& v, std::int64_t k) -> const Tagged& { return v[static_cast<std::size_t>(k)]; };
    if (w->unbounded()) {
      // tail(i) = min over i' >= i of max(rhs(i'), max lhs[i, i'])
      Signal tail(static_cast<std::size_t>(n_) + 1, kTopTag);
      for (std::int64_t i = n_ - 1; i >= 0; --i)
        tail[static_cast<std::size_t>(i)] = tjoin(at(lhs, i), tmeet(at(rhs, i), at(tail, i + 1)));
      for (std::int64_t i = 0; i < n_; ++i) {
        const std::int64_t lo = i + w->first;
        if (lo >= n_) continue;
        Tagged prefix = kBottomTag;
        for (std::int64_t k = i; k < lo; ++k) prefix = tjoin(prefix, at(lhs, k));
        s[static_cast<std::size_t>(i)] = tjoin(prefix, at(tail, lo));
      }
      return s;
    }
    for (std::int64_t i = 0; i < n_; ++i) {
      const std::int64_t lo = i + w->first;
      const std::int64_t hi = std::min(n_ - 1, i + *w->last);
      if (lo > hi) continue;
      Tagged prefix = kBottomTag;
      for (std::int64_t k = i; k < lo; ++k) prefix = tjoin(prefix, at(lhs, k));
      Tagged worst = kTopTag;
      for (std::int64_t k = lo; k <= hi; ++k) {
        prefix = tjoin(prefix, at(lhs, k));
        worst = tmeet(worst, tjoin(at(rhs, k), prefix));
      }
      s[static_cast<std::size_t>(i)] = worst;
    }
    return s;
  }

  const Trace& trace_;
  const std::vector<std::string>& labels_;
  std::int64_t n_;
  std::unordered_map<const void*, Signal> memo_;
};

Signal evaluate_tagged(const Formula& phi, const Trace& trace, const std::vector<std::string>& labels) {
  check_channels(phi, trace);
  DpEvaluator dp(trace, labels);
  return dp.eval(phi);
}

class BooleanEvaluator {
 public:
  explicit BooleanEvaluator(const Trace& trace) : trace_(trace), n_(static_cast<std::int64_t>(trace.size())) {}

  bool holds(const Formula& f, std::int64_t i) {
    auto& cache = memo_[f.id()];
    if (cache.empty()) cache.assign(static_cast<std::size_t>(n_), -1);
    auto& slot = cache[static_cast<std::size_t>(i)];
    if (slot < 0) slot = compute(f, i) ? 1 : 0;
    return slot == 1;
  }

 private:
  bool compute(const Formula& f, std::int64_t i) {
    const double dt = trace_.dt();
    switch (f.op()) {
      case Op::True: return true;
      case Op::Atom: {
        double s = 0.0;
        for (const auto& t : f.atom().terms) s += t.coef * trace_.channel(t.channel)[static_cast<std::size_t>(i)];
        return s + f.atom().constant >= 0.0;
      }
      case Op::Not: return !holds(f.child(0), i);
      case Op::Or: return holds(f.child(0), i) || holds(f.child(1), i);
      case Op::And: return holds(f.child(0), i) && holds(f.child(1), i);
      case Op::Implies: return !holds(f.child(0), i) || holds(f.child(1), i);
      case Op::Next: return i + 1 < n_ && f.interval().contains_steps(1, dt) && holds(f.child(0), i + 1);
      case Op::Eventually:
        for (std::int64_t j = i; j < n_; ++j) {
          if (f.interval().contains_steps(j - i, dt) && holds(f.child(0), j)) return true;
        }
        return false;
      case Op::Always:
        for (std::int64_t j = i; j < n_; ++j) {
          if (f.interval().contains_steps(j - i, dt) && !holds(f.child(0), j)) return false;
        }
        return true;
      case Op::Until: {
        // some j in the window satisfies rhs while lhs held on [i, j)
        bool lhs_so_far = true;
        for (std::int64_t j = i; j < n_; ++j) {
          if (f.interval().contains_steps(j - i, dt) && lhs_so_far && holds(f.child(1), j)) return true;
          lhs_so_far = lhs_so_far && holds(f.child(0), j);
        }
        return false;
      }
      case Op::Release: {
        // rhs holds in the window up to (not including) the first lhs
        bool lhs_seen = false;
        for (std::int64_t j = i; j < n_; ++j) {
          if (f.interval().contains_steps(j - i, dt) && !lhs_seen && !holds(f.child(1), j)) return false;
          lhs_seen = lhs_seen || holds(f.child(0), j);
        }
        return true;
      }
      case Op::NonStrictRelease: {
        // every j in the window has rhs, or lhs somewhere on [i, j]
        bool lhs_seen = false;
        for (std::int64_t j = i; j < n_; ++j) {
          lhs_seen = lhs_seen || holds(f.child(0), j);
          if (f.interval().contains_steps(j - i, dt) && !lhs_seen && !holds(f.child(1), j)) return false;
        }
        return true;
      }
    }
    throw std::logic_error("unhandled operator");
  }

  const Trace& trace_;
  std::int64_t n_;
  std::unordered_map<const void*, std::vector<signed char>> memo_;
};

void check_index(const Trace& trace, std::size_t i) {
  if (i >= trace.size())
    throw std::out_of_range("sample index " + std::to_string(i) + " outside trace of " + std::to_string(trace.size()) +
                            " samples");
}

} // namespace

std::vector<RobustValue> robustness_signal(const Formula& phi, const Trace& trace) {
  const auto labels = atom_labels(phi);
  const auto tagged = evaluate_tagged(phi, trace, labels);
  std::vector<RobustValue> out(tagged.size());
  std::transform(tagged.begin(), tagged.end(), out.begin(), [](const Tagged& t) { return t.value; });
  return out;
}

RobustValue eval_robustness(const Formula& phi, const Trace& trace, std::size_t i) {
  check_index(trace, i);
  return robustness_signal(phi, trace)[i];
}

bool eval_boolean(const Formula& phi, const Trace& trace, std::size_t i) {
  check_index(trace, i);
  check_channels(phi, trace);
  BooleanEvaluator ev(trace);
  return ev.holds(phi, static_cast<std::int64_t>(i));
}

RobustnessReport blame(const Formula& phi, const Trace& trace) {
  check_index(trace, 0);
  const auto labels = atom_labels(phi);
  const auto root = evaluate_tagged(phi, trace, labels).front();

  RobustnessReport r;
  r.robustness = root.value;
  if (root.atom >= 0) {
    r.blamed_atom = labels[static_cast<std::size_t>(root.atom)];
    r.critical_sample = static_cast<std::size_t>(root.sample);
  }

  // Smallest margin per atom label over the whole trace.
  std::vector<const AffineAtom*> atoms;
  auto gather = [&](auto&& self, const Formula& f) -> void {
    if (f.op() == Op::Atom) atoms.push_back(&f.atom());
    for (const auto& c : f.children()) self(self, c);
  };
  gather(gather, phi);
  for (const auto* a : atoms) {
    std::vector<std::span<const double>> cols;
    for (const auto& t : a->terms) cols.push_back(trace.channel(t.channel));
    std::vector<double> x(cols.size());
    for (std::size_t i = 0; i < trace.size(); ++i) {
      for (std::size_t k = 0; k < cols.size(); ++k) x[k] = cols[k][i];
      const double v = signed_distance(x, *a);
      auto [it, inserted] = r.per_atom_extremes.try_emplace(a->label(), AtomExtreme{v, i});
      if (!inserted && (v < it->second.value || (v == it->second.value && i < it->second.sample)))
        it->second = AtomExtreme{v, i};
    }
  }
  return r;
}

} // namespace rsstl::stl
