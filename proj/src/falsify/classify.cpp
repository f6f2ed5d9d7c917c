#include "rsstl/falsify/classify.hpp"

#include <cstdio>
#include <sstream>

namespace rsstl::falsify {

namespace {

void count_sign(SignCounts& c, double r) {
  if (r > 0) ++c.pos;
  else if (r < 0) ++c.neg;
  else ++c.zero;
}

std::string percent(std::size_t k, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", n == 0 ? 0.0 : 100.0 * static_cast<double>(k) / static_cast<double>(n));
  return buf;
}

std::string cell(const std::string& s, int w) {
  return s.size() >= static_cast<std::size_t>(w) ? s + " " : s + std::string(w - s.size(), ' ');
}

} // namespace

bool is_violation(double robustness) { return !(robustness > 0); }

double ClassificationTable::rss_violation_rate() const {
  return total == 0 ? 0.0 : static_cast<double>(rss.violations()) / static_cast<double>(total);
}

double ClassificationTable::cas_violation_rate() const {
  return total == 0 ? 0.0 : static_cast<double>(cas.violations()) / static_cast<double>(total);
}

void ClassificationTable::merge(const ClassificationTable& o) {
  total += o.total;
  rss.pos += o.rss.pos;
  rss.neg += o.rss.neg;
  rss.zero += o.rss.zero;
  cas.pos += o.cas.pos;
  cas.neg += o.cas.neg;
  cas.zero += o.cas.zero;
  pp += o.pp;
  pn += o.pn;
  np += o.np;
  nn += o.nn;
  for (const auto& [k, v] : o.per_atom) per_atom[k] += v;
}

ClassificationTable classify_batch(std::span<const SearchRecord> records) {
  ClassificationTable t;
  for (const auto& r : records) {
    ++t.total;
    count_sign(t.rss, r.rob_rss);
    count_sign(t.cas, r.rob_cas);
    const bool rv = is_violation(r.rob_rss);
    const bool cv = is_violation(r.rob_cas);
    if (!rv && !cv) ++t.pp;
    else if (!rv && cv) ++t.pn;
    else if (rv && !cv) ++t.np;
    else ++t.nn;
    if (rv) ++t.per_atom[r.blamed_atom.empty() ? kNoAtom : r.blamed_atom];
  }
  return t;
}

std::vector<SearchRecord> useful_tests(std::span<const SearchRecord> records) {
  std::vector<SearchRecord> out;
  for (const auto& r : records) {
    if (r.rob_rss < 0) out.push_back(r);
  }
  return out;
}

std::string ClassificationTable::to_text() const {
  std::ostringstream o;
  const auto n = [](std::size_t v) { return std::to_string(v); };
  o << "records: " << total << "\n\n";
  o << cell("", 14) << cell("CAS positive", 14) << cell("CAS negative", 14) << "total\n";
  o << cell("RSS positive", 14) << cell(n(pp), 14) << cell(n(pn), 14) << n(pp + pn) << "\n";
  o << cell("RSS negative", 14) << cell(n(np), 14) << cell(n(nn), 14) << n(np + nn) << "\n";
  o << cell("total", 14) << cell(n(pp + np), 14) << cell(n(pn + nn), 14) << n(total) << "\n\n";
  o << "zeros: RSS " << rss.zero << ", CAS " << cas.zero << " (counted as negative)\n";
  o << "RSS violations: " << rss.violations() << " (" << percent(rss.violations(), total) << ")\n";
  o << "CAS violations: " << cas.violations() << " (" << percent(cas.violations(), total) << ")\n\n";
  o << "violations by predicate (RSS)\n";
  for (const auto& [atom, k] : per_atom) {
    o << "  " << cell(atom, 16) << cell(n(k), 8) << percent(k, rss.violations()) << "\n";
  }
  return o.str();
}

nlohmann::json ClassificationTable::to_json() const {
  nlohmann::json j;
  j["total"] = total;
  j["rss"] = {{"pos", rss.pos}, {"neg", rss.neg}, {"zero", rss.zero}, {"violation_rate", rss_violation_rate()}};
  j["cas"] = {{"pos", cas.pos}, {"neg", cas.neg}, {"zero", cas.zero}, {"violation_rate", cas_violation_rate()}};
  j["joint"] = {{"pos_rss_pos_cas", pp}, {"pos_rss_neg_cas", pn}, {"neg_rss_pos_cas", np}, {"neg_rss_neg_cas", nn}};
  j["per_atom"] = nlohmann::json::object();
  for (const auto& [atom, k] : per_atom) j["per_atom"][atom] = k;
  return j;
}

} // namespace rsstl::falsify
