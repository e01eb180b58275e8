#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>

#include "ustar/error.hpp"
#include "ustar/harness.hpp"
#include "ustar/infinite_models.hpp"
#include "ustar/json_io.hpp"
#include "ustar/labeled_tree.hpp"
#include "ustar/metric_space.hpp"
#include "ustar/us_decision.hpp"
#include "ustar/weak_similarity.hpp"

namespace ustar::cli {
namespace {

using Json = nlohmann::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;

  void emit(const Json& doc) const { out << doc.dump() << '\n'; }
};

FiniteSemimetricSpace load_space(const std::string& path) {
  return json::space_from(json::parse(json::read_file(path)));
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string describe(const QuadrupleReport& q) {
  return std::string(to_string(q.kind)) + ": d(" + q.x + ", " + q.z + ") = " +
         format_rational(q.small1) + ", d(" + q.y + ", " + q.w + ") = " +
         format_rational(q.small2) + ", cross distances " + format_rational(q.big);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  file << text;
}

int cmd_check(const Context& ctx, const std::string& path) {
  const auto space = load_space(path);
  const auto check = is_ultrametric(space);
  if (ctx.as_json) {
    Json doc = {{"valid", true}, {"points", space.size()}, {"ultrametric", check.ultrametric}};
    if (check.witness) doc["witness"] = json::to_json(*check.witness);
    ctx.emit(doc);
  } else {
    ctx.out << "valid semimetric on " << space.size() << " points\n";
    if (check) {
      ctx.out << "ultrametric: yes\n";
    } else {
      const auto& w = *check.witness;
      ctx.out << "ultrametric: no\nwitness: d(" << w.x << ", " << w.y
              << ") = " << format_rational(w.lhs) << " > " << format_rational(w.rhs) << " = max{d("
              << w.x << ", " << w.z << "), d(" << w.z << ", " << w.y << ")}\n";
    }
  }
  return check ? kHolds : kFails;
}

int cmd_us(const Context& ctx, const std::string& path) {
  const auto space = load_space(path);
  const auto report = find_centers(space);
  const bool us = !report.centers.empty();
  if (ctx.as_json) {
    ctx.emit({{"us", us}, {"centers", report.centers}});
  } else {
    ctx.out << "US: " << (us ? "yes" : "no") << '\n';
    if (us) ctx.out << "centers: " << join(report.centers) << '\n';
  }
  return us ? kHolds : kFails;
}

int cmd_witness(const Context& ctx, const std::string& path) {
  const auto space = load_space(path);
  const auto q = find_forbidden_quadruple(space);
  if (ctx.as_json) {
    ctx.emit({{"quadruple", q ? json::to_json(*q) : Json(nullptr)}});
  } else if (q) {
    ctx.out << "forbidden quadruple " << describe(*q) << '\n';
  } else {
    ctx.out << "no forbidden quadruple\n";
  }
  return q ? kFails : kHolds;
}

int cmd_star(const Context& ctx, const std::string& path, const std::string& center,
             const std::string& dot_path) {
  const auto space = load_space(path);
  std::string chosen = center;
  if (chosen.empty()) {
    const auto report = find_centers(space);
    if (report.centers.empty()) {
      if (ctx.as_json)
        ctx.emit({{"star", nullptr}, {"centers", Json::array()}});
      else
        ctx.out << "not US: no point satisfies the center criterion\n";
      return kFails;
    }
    chosen = report.centers.front();
  }
  const auto star = build_star(space, chosen);
  if (!dot_path.empty()) write_text(dot_path, to_dot(star));
  if (ctx.as_json)
    ctx.emit({{"star", json::to_json(star)}});
  else
    ctx.out << format_tree_text(star.to_tree());
  return kHolds;
}

int cmd_gen(const Context& ctx, const std::string& path, const std::string& dot_path) {
  const auto tree = parse_tree_text(json::read_file(path));
  if (!dot_path.empty()) write_text(dot_path, to_dot(tree));
  if (const auto check = validate_generating(tree); !check) {
    const auto& [u, v] = *check.bad_edge;
    if (ctx.as_json)
      ctx.emit({{"generating", false}, {"bad_edge", {u, v}}});
    else
      ctx.out << "not generating: both endpoints of " << u << " -- " << v << " are labeled 0\n";
    return kFails;
  }
  ctx.emit(json::to_json(generate_ultrametric(tree)));
  return kHolds;
}

FiniteSemimetricSpace ray_space(const RaySpec& ray, std::uint64_t k) {
  std::vector<std::string> names;
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  for (std::uint64_t a = 1; a <= k; ++a) {
    names.push_back("x" + std::to_string(a));
    for (std::uint64_t b = 1; b <= k; ++b) m[a - 1][b - 1] = ray_distance(ray, a, b);
  }
  return validate_semimetric(std::move(names), m);
}

std::string preview(const std::vector<Rational>& labels) {
  std::string out;
  for (const auto& l : labels) out += format_rational(l) + ", ";
  return out + "...";
}

int cmd_ray(const Context& ctx, const std::string& path, std::uint64_t truncate) {
  const auto spec = json::star_spec_from(json::parse(json::read_file(path)));
  const auto ray = star_to_ray(spec);
  if (truncate > 0) {
    ctx.emit(json::to_json(ray_space(ray, truncate)));
  } else if (ctx.as_json) {
    ctx.emit(json::to_json(ray));
  } else {
    ctx.out << "decreasing ray labels: " << preview(ray.labels(8)) << '\n';
  }
  return kHolds;
}

int cmd_complete(const Context& ctx, const std::string& path, std::uint64_t truncate) {
  const auto ray = json::ray_spec_from(json::parse(json::read_file(path)));
  const auto model = ray_to_completion(ray);
  if (truncate > 0) {
    ctx.emit(json::to_json(model.truncate(truncate)));
  } else if (ctx.as_json) {
    ctx.emit(json::to_json(model));
  } else {
    ctx.out << "completion point " << model.added_point << " (center, label 0)\n"
            << "leaf labels d(" << model.added_point
            << ", x_n): " << preview(model.star.leaf_labels(8)) << '\n';
  }
  return kHolds;
}

int cmd_compact(const Context& ctx, const std::string& path) {
  const auto spec = json::star_spec_from(json::parse(json::read_file(path)));
  const auto report = is_compact_star(spec);
  if (ctx.as_json) {
    ctx.emit(json::to_json(report));
  } else {
    ctx.out << "compact: " << (report.compact ? "yes" : "no") << " ("
            << to_string(report.reason);
    if (report.eps) ctx.out << ", eps = " << format_rational(*report.eps);
    ctx.out << ")\n";
  }
  return report.compact ? kHolds : kFails;
}

int cmd_weaksim(const Context& ctx, const std::string& a_path, const std::string& b_path) {
  const auto a = load_space(a_path);
  const auto b = load_space(b_path);
  const auto result = weakly_similar(a, b);
  Json mapping = Json::object();
  if (result.phi)
    for (std::size_t i = 0; i < a.size(); ++i) mapping[a.name(i)] = b.name((*result.phi)[i]);
  if (ctx.as_json) {
    ctx.emit({{"weakly_similar", result.similar},
              {"phi", result.phi ? mapping : Json(nullptr)},
              {"canonical_a", json::to_json(canonical_form(a))},
              {"canonical_b", json::to_json(canonical_form(b))}});
  } else {
    ctx.out << "weakly similar: " << (result.similar ? "yes" : "no") << '\n';
    for (const auto& [from, to] : mapping.items())
      ctx.out << "  " << from << " -> " << to.get<std::string>() << '\n';
  }
  return result.similar ? kHolds : kFails;
}

int cmd_enumerate(const Context& ctx, std::size_t n, unsigned jobs) {
  const auto classes = enumerate_classes(n, {jobs});
  if (ctx.as_json) {
    for (const auto& s : classes)
      ctx.emit({{"n", n}, {"canonical", canonical_form(s).digest()}, {"space", json::to_json(s)}});
    return kHolds;
  }
  ctx.out << "n = " << n << ": " << classes.size() << " weak-similarity classes\n";
  for (const auto& s : classes) {
    ctx.out << "  " << canonical_form(s).digest() << "  ";
    for (std::size_t j = 1; j < s.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) ctx.out << format_rational(s.d(i, j)) << ' ';
    ctx.out << '\n';
  }
  return kHolds;
}

int cmd_verify(const Context& ctx, const std::string& theorem, std::size_t n, unsigned jobs) {
  if (theorem == "4.3") {
    const auto report = verify_center_criterion(n, {jobs});
    if (ctx.as_json) {
      for (const auto& v : report.classes) ctx.emit(json::to_json(v));
    } else {
      ctx.out << "US iff no forbidden quadruple, n = " << n << '\n'
              << "  classes        " << report.classes.size() << '\n'
              << "  US             " << report.us_count << '\n'
              << "  non-US         " << report.classes.size() - report.us_count << '\n'
              << "  discrepancies  " << report.discrepancies << '\n';
      for (const auto& v : report.classes)
        if (v.discrepancy)
          ctx.out << "  DISCREPANCY " << v.digest << ": " << v.note << '\n'
                  << "    " << json::to_json(v.space).dump() << '\n';
    }
    return report.discrepancies == 0 ? kHolds : kFails;
  }
  if (theorem == "4.6") {
    const auto report = verify_tree_generation();
    if (ctx.as_json) {
      auto line = [&](const TreeGenerationEntry& e) {
        Json doc = {{"n", e.space.size()},
                    {"canonical", e.digest},
                    {"us", e.us},
                    {"tree_generable", e.tree_generable},
                    {"discrepancy", e.discrepancy}};
        if (e.four_point_criterion) doc["four_point_criterion"] = *e.four_point_criterion;
        ctx.emit(doc);
      };
      for (const auto& e : report.classes) line(e);
      for (const auto& e : report.five_point) line(e);
    } else {
      ctx.out << "US iff tree-generated, n <= 4\n"
              << "  classes            " << report.classes.size() << '\n'
              << "  discrepancies      " << report.discrepancies << '\n'
              << "  five-point witnesses (tree-generated, not US)  "
              << report.boundary_witnesses << " of " << report.five_point.size() << '\n';
    }
    return report.discrepancies == 0 && report.boundary_witnesses == report.five_point.size()
               ? kHolds
               : kFails;
  }
  throw Error(ErrorCode::PreconditionFailed, "unknown theorem '" + theorem + "' (use 4.3 or 4.6)");
}

int cmd_probe(const Context& ctx, const std::string& path) {
  const auto space = load_space(path);
  const auto report = center_extension_probe(space);
  if (ctx.as_json) {
    ctx.emit(json::to_json(report));
  } else {
    ctx.out << "probe: " << to_string(report.outcome) << '\n';
    if (report.extension)
      ctx.out << "  extension ultrametric: " << (report.extension_ultrametric ? "yes" : "no")
              << ", added point is a center: " << (report.added_point_is_center ? "yes" : "no")
              << '\n';
    if (report.outcome == ProbeOutcome::Unresolved && report.extension)
      ctx.out << "  " << json::to_json(*report.extension).dump() << '\n';
  }
  return report.outcome == ProbeOutcome::Unresolved ? kFails : kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ultrametric spaces generated by labeled stars and trees", "ustar"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  std::function<int(const Context&)> action;
  std::string file, file_b, center, dot_path, theorem;
  std::uint64_t truncate = 0;
  std::size_t n = 0;
  unsigned jobs = 1;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input file")->required();
    return sub;
  };

  with_file("check", "Validate a space and test the strong triangle inequality")
      ->callback([&] { action = [&](const Context& c) { return cmd_check(c, file); }; });
  with_file("us", "Decide US membership and list centers")
      ->callback([&] { action = [&](const Context& c) { return cmd_us(c, file); }; });
  with_file("witness", "Find a forbidden four-point subspace")
      ->callback([&] { action = [&](const Context& c) { return cmd_witness(c, file); }; });

  auto* star = with_file("star", "Build the generating star at a center");
  star->add_option("--center", center, "Center point (default: first center)");
  star->add_option("--dot", dot_path, "Write the star as Graphviz DOT");
  star->callback([&] {
    action = [&](const Context& c) { return cmd_star(c, file, center, dot_path); };
  });

  auto* gen = with_file("gen", "Labeled tree text file to space JSON");
  gen->add_option("--dot", dot_path, "Write the tree as Graphviz DOT");
  gen->callback([&] { action = [&](const Context& c) { return cmd_gen(c, file, dot_path); }; });

  auto* ray = with_file("ray", "Compact infinite star to decreasing ray");
  ray->add_option("--truncate", truncate, "Emit the first k ray points as a space")
      ->check(CLI::PositiveNumber);
  ray->callback([&] { action = [&](const Context& c) { return cmd_ray(c, file, truncate); }; });

  auto* complete = with_file("complete", "Completion of a ray decreasing to 0");
  complete->add_option("--truncate", truncate, "Emit x0 and the first k ray points as a space")
      ->check(CLI::PositiveNumber);
  complete->callback(
      [&] { action = [&](const Context& c) { return cmd_complete(c, file, truncate); }; });

  with_file("compact", "Decide compactness of a star specification")
      ->callback([&] { action = [&](const Context& c) { return cmd_compact(c, file); }; });

  auto* weaksim = app.add_subcommand("weaksim", "Decide weak similarity of two spaces");
  weaksim->add_option("a", file, "First space")->required();
  weaksim->add_option("b", file_b, "Second space")->required();
  weaksim->callback(
      [&] { action = [&](const Context& c) { return cmd_weaksim(c, file, file_b); }; });

  auto* enumerate = app.add_subcommand("enumerate", "One space per weak-similarity class");
  enumerate->add_option("--n", n, "Point count")->required();
  enumerate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->callback(
      [&] { action = [&](const Context& c) { return cmd_enumerate(c, n, jobs); }; });

  auto* verify = app.add_subcommand("verify", "Exhaustive theorem cross-check");
  verify->add_option("--theorem", theorem, "4.3 or 4.6")->required();
  verify->add_option("--n", n, "Point count (4.3 only)");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->callback([&] {
    action = [&](const Context& c) { return cmd_verify(c, theorem, n, jobs); };
  });

  with_file("probe", "One-point center extension of a forbidden-free space")
      ->callback([&] { action = [&](const Context& c) { return cmd_probe(c, file); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    return action(Context{out, err, as_json});
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ustar::cli
