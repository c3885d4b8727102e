#include "lsgq/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lsgq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witnesses_json(const ClassificationReport& rep) {
  ordered_json arr = ordered_json::array();
  VSpace v(rep.p, rep.d);
  for (const TaggedSubspace& w : rep.witnesses) {
    ordered_json entry;
    entry["tag"] = w.label();
    entry["basis_rows"] = w.space.encoded_rows(v);
    arr.push_back(entry);
  }
  return arr;
}

}  // namespace

std::string report_to_json(const ClassificationReport& rep,
                           std::optional<long long> runtime_ms, int indent) {
  ordered_json j;
  j["p"] = rep.p;
  j["d"] = rep.d;
  j["n"] = rep.n;
  j["line"] = rep.line;
  j["i"] = rep.i ? ordered_json(rep.i) : ordered_json(nullptr);
  j["j"] = rep.j ? ordered_json(rep.j) : ordered_json(nullptr);
  j["l"] = rep.ell;
  j["m"] = rep.m ? ordered_json(rep.m) : ordered_json(nullptr);
  j["outcome"] = rep.outcome == Outcome::QuotientComplete
                     ? "quotient-complete"
                     : "vertex-quasiprimitive";
  j["k"] = rep.k;
  j["witnesses"] = witnesses_json(rep);
  j["quotient_orders"] = rep.quotient_orders;
  ordered_json conds = ordered_json::array();
  for (const auto& [name, value] : rep.conditions) {
    ordered_json c;
    c["name"] = name;
    c["value"] = value;
    conds.push_back(c);
  }
  j["conditions"] = conds;
  ordered_json olog = ordered_json::object();
  for (const auto& [repenc, label] : rep.orbit_log)
    olog[std::to_string(repenc)] = label;
  j["orbit_log"] = olog;
  j["graph_diameter"] = rep.graph_diameter;
  if (rep.max_quotient_diameter)
    j["max_quotient_diameter"] = *rep.max_quotient_diameter;
  if (runtime_ms) j["runtime_ms"] = *runtime_ms;
  return j.dump(indent) + "\n";
}

std::string scan_csv_header() {
  return "p,d,n,line,i,j,l,m,outcome,k,quotient_orders,witnesses\n";
}

std::string scan_csv_row(const ClassificationReport& rep) {
  std::ostringstream os;
  os << rep.p << ',' << rep.d << ',' << rep.n << ',' << rep.line << ','
     << rep.i << ',' << rep.j << ',' << rep.ell << ',' << rep.m << ','
     << (rep.outcome == Outcome::QuotientComplete ? "quotient-complete"
                                                  : "vertex-quasiprimitive")
     << ',' << rep.k << ',';
  for (size_t t = 0; t < rep.quotient_orders.size(); ++t)
    os << (t ? ";" : "") << rep.quotient_orders[t];
  os << ',';
  for (size_t t = 0; t < rep.witnesses.size(); ++t)
    os << (t ? ";" : "") << rep.witnesses[t].label();
  os << '\n';
  return os.str();
}

std::string family_to_json(const ExampleFamily& fam, int indent) {
  ordered_json j;
  j["family"] = fam.name;
  j["params"] = fam.params;
  j["vertices"] = fam.graph.n();
  j["valency"] = fam.graph.n() ? fam.graph.degree(0) : 0;
  j["expected_k"] = fam.expected_k;
  j["computed_k"] = fam.computed_k;
  j["quotient_orders"] = fam.quotient_orders;
  j["witnesses"] = fam.witness_labels;
  if (!fam.notes.empty()) j["notes"] = fam.notes;
  return j.dump(indent) + "\n";
}

}  // namespace lsgq
