#pragma once

#include <string>

#include "json.hpp"

#include "fracfactor/constructions.hpp"
#include "fracfactor/criticality.hpp"
#include "fracfactor/factor.hpp"
#include "fracfactor/hypothesis.hpp"
#include "fracfactor/sweep.hpp"

namespace fracfactor {

// A verdict with two renderings: a JSON document for machines and plain text
// for people.
struct Report {
  bool holds = false;
  nlohmann::json document;
  std::string text;
};

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const ViolationCertificate& c);
nlohmann::json to_json(const CriticalityReport& r);
nlohmann::json to_json(const HypothesisReport& r);
nlohmann::json to_json(const SharpnessReport& r);
nlohmann::json to_json(const SweepSummary& s);
nlohmann::json to_json(const FractionalAssignment& h);

std::string describe(const VertexSet& s);
std::string describe(const ViolationCertificate& c);

Report make_factor_report(const Graph& g, const FactorParams& params, const FactorResult& result,
                          bool include_witness);
Report make_criticality_report(const Graph& g, const FactorParams& params,
                               const CriticalityReport& r);
Report make_hypothesis_report(const Graph& g, const FactorParams& params,
                              const HypothesisReport& r);
Report make_sharpness_report(const SharpnessReport& r);
Report make_sweep_report(const SweepSummary& s);

// Sidecar for generated graphs: part name -> [begin, end) index range.
nlohmann::json labels_to_json(const std::string& kind, const FactorParams& params, int t,
                              const ConstructionLabels& labels);

}  // namespace fracfactor
