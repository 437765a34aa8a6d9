#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "logcrit/bubbles.hpp"
#include "logcrit/nonexistence.hpp"
#include "logcrit/params.hpp"
#include "logcrit/solvers.hpp"

namespace logcrit {

using json = nlohmann::ordered_json;

// 17 significant digits, lossless round trip
std::string format_double(double x);

json to_json(const ParameterSet& p);
json to_json(const DomainConstants& dc);
json to_json(const RegionLabel& r);
json to_json(const ClassificationReport& rep);
json to_json(const EnergyBreakdown& e);
json to_json(const SolveResult& r, bool include_state = false);
json to_json(const ResidualCertificate& c);
json to_json(const NonexistenceVerdict& v);
json to_json(const BubbleIntegrals& b);
json to_json(const GapReport& g);

// CSV emitters (plot-ready)
std::string field_to_csv(const RadialField& f);
std::string trace_to_csv(const std::vector<TracePoint>& trace);
std::string bubbles_to_csv(const std::vector<BubbleIntegrals>& rows);

}  // namespace logcrit
