#pragma once

// JSON and CSV renderings of fields, codes, spectra, bounds, constructions and
// census reports. Keys are lower_snake_case. Nothing here records timings or
// worker counts, so identical inputs give identical bytes.

#include <string>

#include <json.hpp>

#include "prm/analysis.hpp"
#include "prm/codes.hpp"
#include "prm/extremal.hpp"

namespace prm {

/// "x0^2*x1 + 2*x2^3"; coefficients are printed as element encodings.
std::string form_text(const Form& f);

nlohmann::json field_json(const Field& field);
nlohmann::json code_json(const Code& code);
nlohmann::json spectrum_json(const Code& code, const WeightSpectrum& spectrum, std::size_t top_k);
std::string spectrum_csv(const WeightSpectrum& spectrum);
/// Every bound at (q, d, m); e is the extension degree of q.
nlohmann::json bounds_json(std::int64_t q, int e, int d, int m);
nlohmann::json construction_json(const Construction& c);
nlohmann::json classification_json(const CurveClassification& c);
nlohmann::json census_json(const CensusReport& report);
nlohmann::json attainers_json(const AttainerSummary& summary);
/// "count,tally" rows of the full point-count histogram, ascending.
std::string census_csv(const CensusReport& report);

}  // namespace prm
