#pragma once

#include <json.hpp>

#include <string>

#include "ustar/harness.hpp"
#include "ustar/infinite_models.hpp"
#include "ustar/labeled_tree.hpp"
#include "ustar/metric_space.hpp"
#include "ustar/us_decision.hpp"
#include "ustar/weak_similarity.hpp"

// JSON formats. Every rational is written as a canonical "p" or "p/q"
// string; readers also accept decimal strings and JSON integers.
//
//   space:  {"points": ["a", ...], "dist": [["0", "3", ...], ...]}
//   star:   {"center_label": "0", "exceptional": ["2", "1/2"],
//            "tail": {"kind": "harmonic", "c": "1"}}
//   ray:    {"labels": ["2", "1"], "tail": {...} | null, "decreasing": true}
//   tail kinds: harmonic {c}, geometric {a, r}, constant {q},
//               finite {values}; optional integer "skip".

namespace ustar::json {

using nlohmann::json;

json rational(const Rational& value);
Rational rational_from(const json& value);

json to_json(const FiniteSemimetricSpace& space);
FiniteSemimetricSpace space_from(const json& doc);

json to_json(const TailLaw& law);
TailLaw tail_from(const json& doc);

json to_json(const StarSpec& spec);
StarSpec star_spec_from(const json& doc);

json to_json(const RaySpec& ray);
RaySpec ray_spec_from(const json& doc);

json to_json(const LabeledStarGraph& star);
json to_json(const TripleWitness& witness);
json to_json(const CenterReport& report);
json to_json(const QuadrupleReport& report);
json to_json(const CanonicalForm& form);
json to_json(const CompactnessReport& report);
json to_json(const CompletionModel& model);
json to_json(const UsStatements& statements);
json to_json(const ProbeReport& report);
json to_json(const ClassVerdict& verdict);

/// Parses text, mapping syntax errors to Error(ParseError).
json parse(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace ustar::json
