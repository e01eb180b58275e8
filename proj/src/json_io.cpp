#include "ustar/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ustar/error.hpp"

namespace ustar::json {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object()) bad("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<Rational> rational_list(const json& doc) {
  if (!doc.is_array()) bad("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& v : doc) out.push_back(rational_from(v));
  return out;
}

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational(v));
  return out;
}

}  // namespace

json rational(const Rational& value) { return format_rational(value); }

Rational rational_from(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(std::to_string(value.get<long long>()));
  if (value.is_number_unsigned())
    return parse_rational(std::to_string(value.get<unsigned long long>()));
  bad("rationals must be strings or integers, got " + value.dump());
}

json to_json(const FiniteSemimetricSpace& space) {
  json dist = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(rational(space.d(i, j)));
    dist.push_back(std::move(row));
  }
  return {{"points", space.points()}, {"dist", std::move(dist)}};
}

FiniteSemimetricSpace space_from(const json& doc) {
  const json& points = field(doc, "points");
  const json& dist = field(doc, "dist");
  if (!points.is_array() || !dist.is_array()) bad("'points' and 'dist' must be arrays");
  std::vector<std::string> names;
  for (const auto& p : points) {
    if (!p.is_string()) bad("point identifiers must be strings");
    names.push_back(p.get<std::string>());
  }
  std::vector<std::vector<Rational>> m;
  for (const auto& row : dist) m.push_back(rational_list(row));
  return validate_semimetric(std::move(names), m);
}

json to_json(const TailLaw& law) {
  json out = std::visit(
      [](const auto& k) -> json {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Harmonic>) return {{"kind", "harmonic"}, {"c", rational(k.c)}};
        if constexpr (std::is_same_v<K, Geometric>)
          return {{"kind", "geometric"}, {"a", rational(k.a)}, {"r", rational(k.r)}};
        if constexpr (std::is_same_v<K, Constant>) return {{"kind", "constant"}, {"q", rational(k.q)}};
        if constexpr (std::is_same_v<K, ExplicitFinite>)
          return {{"kind", "finite"}, {"values", rational_list(k.values)}};
      },
      law.kind());
  if (law.skip() != 0) out["skip"] = law.skip();
  return out;
}

TailLaw tail_from(const json& doc) {
  const json& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) bad("tail 'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();
  std::uint64_t skip = 0;
  if (const auto it = doc.find("skip"); it != doc.end()) {
    if (!it->is_number_unsigned()) bad("'skip' must be a nonnegative integer");
    skip = it->get<std::uint64_t>();
  }
  if (kind == "harmonic") return TailLaw(Harmonic{rational_from(field(doc, "c"))}, skip);
  if (kind == "geometric")
    return TailLaw(Geometric{rational_from(field(doc, "a")), rational_from(field(doc, "r"))}, skip);
  if (kind == "constant") return TailLaw(Constant{rational_from(field(doc, "q"))}, skip);
  if (kind == "finite") return TailLaw(ExplicitFinite{rational_list(field(doc, "values"))}, skip);
  bad("unknown tail kind '" + kind + "'");
}

json to_json(const StarSpec& spec) {
  return {{"center_label", rational(spec.center_label())},
          {"exceptional", rational_list(spec.exceptional())},
          {"tail", to_json(spec.tail())}};
}

StarSpec star_spec_from(const json& doc) {
  const auto center = rational_from(field(doc, "center_label"));
  std::vector<Rational> exceptional;
  if (const auto it = doc.find("exceptional"); it != doc.end())
    exceptional = rational_list(*it);
  TailLaw tail = TailLaw::empty();
  if (const auto it = doc.find("tail"); it != doc.end() && !it->is_null()) tail = tail_from(*it);
  return StarSpec(center, std::move(exceptional), std::move(tail));
}

json to_json(const RaySpec& ray) {
  return {{"labels", rational_list(ray.prefix())},
          {"tail", ray.tail() ? to_json(*ray.tail()) : json(nullptr)},
          {"decreasing", ray.decreasing()}};
}

RaySpec ray_spec_from(const json& doc) {
  auto labels = rational_list(field(doc, "labels"));
  std::optional<TailLaw> tail;
  if (const auto it = doc.find("tail"); it != doc.end() && !it->is_null()) tail = tail_from(*it);
  bool decreasing = false;
  if (const auto it = doc.find("decreasing"); it != doc.end()) {
    if (!it->is_boolean()) bad("'decreasing' must be a boolean");
    decreasing = it->get<bool>();
  }
  return RaySpec(std::move(labels), std::move(tail), decreasing);
}

json to_json(const LabeledStarGraph& star) {
  return {{"center", star.center()},
          {"center_label", rational(star.center_label())},
          {"leaves", star.leaves()},
          {"leaf_labels", rational_list(star.leaf_labels())}};
}

json to_json(const TripleWitness& w) {
  return {{"x", w.x}, {"y", w.y}, {"z", w.z}, {"lhs", rational(w.lhs)}, {"rhs", rational(w.rhs)}};
}

json to_json(const CenterReport& report) { return {{"centers", report.centers}}; }

json to_json(const QuadrupleReport& r) {
  return {{"x", r.x},
          {"y", r.y},
          {"z", r.z},
          {"w", r.w},
          {"big", rational(r.big)},
          {"small1", rational(r.small1)},
          {"small2", rational(r.small2)},
          {"kind", std::string(to_string(r.kind))}};
}

json to_json(const CanonicalForm& form) {
  return {{"digest", form.digest()},
          {"n", form.size()},
          {"max_rank", form.max_rank()},
          {"matrix", form.matrix().rows()}};
}

json to_json(const CompactnessReport& report) {
  json out = {{"compact", report.compact}, {"reason", std::string(to_string(report.reason))}};
  if (report.eps) out["eps"] = rational(*report.eps);
  return out;
}

json to_json(const CompletionModel& model) {
  return {{"added_point", model.added_point},
          {"star", to_json(model.star)},
          {"ray", to_json(model.ray)}};
}

json to_json(const UsStatements& s) {
  return {{"in_us", s.in_us},
          {"every4_us", s.every4_us},
          {"every4_tree", s.every4_tree},
          {"equivalence_applies", s.equivalence_applies}};
}

json to_json(const ProbeReport& report) {
  json out = {{"outcome", std::string(to_string(report.outcome))},
              {"extension_ultrametric", report.extension_ultrametric},
              {"added_point_is_center", report.added_point_is_center}};
  if (report.extension) out["extension"] = to_json(*report.extension);
  return out;
}

json to_json(const ClassVerdict& v) {
  json out = {{"n", v.space.size()},
              {"canonical", v.digest},
              {"us", v.us},
              {"centers", v.centers},
              {"quadruple", v.constructive ? to_json(*v.constructive) : json(nullptr)},
              {"oracle_quadruple", v.exhaustive ? to_json(*v.exhaustive) : json(nullptr)},
              {"discrepancy", v.discrepancy}};
  if (v.discrepancy) {
    out["note"] = v.note;
    out["space"] = to_json(v.space);
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace ustar::json
