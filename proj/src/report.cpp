#include "logsplit/report.hpp"

#include "json.hpp"

#include <sstream>

namespace logsplit {

std::string outcome_key(Outcome o) {
  switch (o) {
  case Outcome::Found:
    return "found";
  case Outcome::ExhaustedBounds:
    return "exhausted";
  case Outcome::NoWitnessAnyDegree:
    return "no_witness_any_degree";
  }
  return "exhausted";
}

std::string render_text(const SearchReport &r) {
  std::ostringstream os;
  os << "outcome: " << outcome_key(r.outcome) << '\n';
  if (r.witness)
    os << "witness: h = " << r.witness->h.to_string() << ", e = " << r.witness->e.to_string()
       << ", k = " << r.witness->k << '\n';
  if (!r.reason.empty())
    os << "reason: " << r.reason << '\n';
  os << "bounds: deg_h = " << r.bounds.deg_h << ", deg_cofactor = " << r.bounds.deg_cofactor
     << ", kmax = " << r.bounds.kmax << ", e_tdeg = " << r.bounds.e_tdeg << '\n';
  if (!r.darboux_pairs.empty()) {
    os << "darboux pairs:\n";
    for (const auto &d : r.darboux_pairs)
      os << "  p = " << d.p.to_string() << "    cofactor = " << d.cofactor.to_string() << '\n';
  }
  for (const auto &n : r.notes)
    os << "note: " << n << '\n';
  os << "time: " << r.timing_ms << " ms\n";
  return os.str();
}

std::string render_json(const SearchReport &r, int indent) {
  using json = nlohmann::ordered_json;
  json j;
  j["outcome"] = outcome_key(r.outcome);
  if (r.witness) {
    json w;
    w["h"] = r.witness->h.to_string();
    w["e"] = r.witness->e.to_string();
    w["k"] = r.witness->k;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["bounds"] = {{"deg_h", r.bounds.deg_h},
                 {"deg_cofactor", r.bounds.deg_cofactor},
                 {"kmax", r.bounds.kmax},
                 {"e_tdeg", r.bounds.e_tdeg}};
  j["darboux_pairs"] = json::array();
  for (const auto &d : r.darboux_pairs)
    j["darboux_pairs"].push_back({{"p", d.p.to_string()}, {"cofactor", d.cofactor.to_string()}});
  j["timing_ms"] = r.timing_ms;
  return j.dump(indent);
}

} // namespace logsplit
