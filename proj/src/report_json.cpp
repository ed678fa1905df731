#include "waring/report_json.hpp"

namespace waring {

using nlohmann::json;

json to_json(const PatternMatrix& a) {
  json bits = json::array();
  for (auto [i, j] : a.set_pairs()) bits.push_back({i, j});
  return {{"m", a.m()}, {"bits", bits}};
}

json to_json(const CertifiedBound& bound) {
  json witness = json::array();
  if (const auto* w = std::get_if<ExactWitness>(&bound.witness)) {
    for (const auto& u : w->generators) witness.push_back(to_bit_string(u));
  } else if (const auto* w = std::get_if<DiagonalWitness>(&bound.witness)) {
    witness.push_back(to_bit_string(w->diagonal));
  } else if (const auto* w = std::get_if<BlockWitness>(&bound.witness)) {
    for (auto r : w->rows) witness.push_back(r);
  }
  return {{"lower_bound", bound.lower_bound}, {"method", method_name(bound.method)}, {"witness", witness}};
}

json to_json(const FiniteRingReport& report) {
  json distances = json::array();
  for (auto r : report.subring) distances.push_back({r, report.distances[r]});
  return {{"q", report.q},           {"k", report.k},
          {"powers", report.powers}, {"subring", report.subring},
          {"distances", distances},  {"v_value", report.v_value}};
}

json to_json(const LemmaReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"trial", f.trial},
                        {"n", f.n},
                        {"pair", {f.i, f.j}},
                        {"check", f.check},
                        {"base", f.base},
                        {"detail", f.detail}});
  return {{"trials", report.trials},
          {"pair_checks", report.pair_checks},
          {"failures", report.failures.size()},
          {"counterexamples", failures}};
}

json to_json(const NotInSubringObstruction& obstruction) {
  return {{"obstruction", "not_in_subring"},
          {"pair", {obstruction.i(), obstruction.j()}},
          {"monomial", obstruction.monomial().to_string()},
          {"coefficient", obstruction.coefficient().get_str()},
          {"divisor", obstruction.divisor().get_str()},
          {"message", obstruction.what()}};
}

std::string finite_ring_csv_header() { return "q,k,powers,subring,v_value"; }

std::string to_csv_row(const FiniteRingReport& report) {
  return std::to_string(report.q) + "," + std::to_string(report.k) + "," + std::to_string(report.powers.size()) +
         "," + std::to_string(report.subring.size()) + "," + std::to_string(report.v_value);
}

}  // namespace waring
