#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "waring/certifier.hpp"
#include "waring/finite_rings.hpp"
#include "waring/invariant.hpp"
#include "waring/lemma_check.hpp"
#include "waring/pattern_matrix.hpp"

namespace waring {

// {"m": m, "bits": [[i, j], ...]} with set pairs in lexicographic order.
nlohmann::json to_json(const PatternMatrix& a);
// {"lower_bound": v, "method": "...", "witness": [...]}
nlohmann::json to_json(const CertifiedBound& bound);
nlohmann::json to_json(const FiniteRingReport& report);
nlohmann::json to_json(const LemmaReport& report);
nlohmann::json to_json(const NotInSubringObstruction& obstruction);

// Column order: q,k,powers,subring,v_value (the middle two are set sizes).
std::string finite_ring_csv_header();
std::string to_csv_row(const FiniteRingReport& report);

}  // namespace waring
