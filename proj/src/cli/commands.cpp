#include "cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "framekit/constructions.hpp"
#include "framekit/geometry.hpp"
#include "framekit/io.hpp"
#include "framekit/outer.hpp"
#include "framekit/perturb.hpp"
#include "framekit/random.hpp"
#include "verify/verify.hpp"

#ifndef FRAMEKIT_VERSION
#define FRAMEKIT_VERSION "dev"
#endif

namespace framekit::cli {

namespace {

constexpr double kVerifyBudgetSeconds = 60.0;

json rank_tol_json() {
  if (const char* env = std::getenv("FRAMEKIT_TOL"); env != nullptr && *env != '\0')
    return {{"source", "FRAMEKIT_TOL"}, {"value", default_rank_tol(1, 1, 0.0)}};
  return {{"source", "default"}, {"rule", "max(rows, cols) * machine_eps * sigma_max"}};
}

json tolerances(json extra = json::object()) {
  json t = {{"rank", rank_tol_json()},
            {"unit_norm", kUnitNormTol},
            {"self_adjoint", kSelfAdjointTol},
            {"tight", kTightTol},
            {"equiangular", kEquiangularTol}};
  t.update(extra);
  return t;
}

json report(std::string command, json inputs, json results, json tol) {
  return {{"command", std::move(command)},
          {"version", FRAMEKIT_VERSION},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"tolerances", std::move(tol)}};
}

json error_json(const error& e) { return {{"error", to_string(e.code())}, {"message", e.what()}}; }

json bounds_json(const BoundsReport& b) {
  return {{"lower", scalar_json(b.lower)}, {"upper", scalar_json(b.upper)}, {"tight", b.tight}, {"parseval", b.parseval}};
}

json index_json(const std::vector<Index>& v) {
  json out = json::array();
  for (Index i : v) out.push_back(i);
  return out;
}

template <class F>
json guarded(F&& f) {
  try {
    return f();
  } catch (const error& e) {
    return error_json(e);
  }
}

FrameDocument load(const std::string& path) {
  if (path != "-") return read_frame_file(path);
  const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return read_frame(text);
}

void save(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw parse_error("cannot write " + path);
  file << text;
  if (!file) throw parse_error("cannot write " + path);
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::optional<Index> n;
  Index m = 1;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::string field = "real";
  std::string name;
  std::string output;
  bool csv = false;
};

json construction_json(const ConstructionSpec& s) {
  json j = {{"kind", to_string(s.kind)}};
  switch (s.kind) {
    case ConstructionKind::epsilon_pair:
      j["eps"] = s.eps;
      break;
    case ConstructionKind::random_unit:
      j["n"] = s.n;
      j["m"] = s.m;
      j["seed"] = s.seed;
      j["field"] = to_string(s.field);
      break;
    case ConstructionKind::orthonormal:
      j["n"] = s.n;
      j["field"] = to_string(s.field);
      break;
    default:
      j["n"] = s.n;
  }
  return j;
}

int construct(const ConstructArgs& a, std::ostream& out) {
  const auto kind = parse_construction_kind(a.kind);
  if (!kind) throw CLI::ValidationError("kind", "unknown construction \"" + a.kind + "\"");
  if (!a.n && *kind != ConstructionKind::epsilon_pair) throw CLI::RequiredError("--n");

  ConstructionSpec spec;
  spec.kind = *kind;
  spec.n = a.n.value_or(2);
  spec.m = a.m;
  spec.eps = a.eps;
  spec.seed = a.seed;
  spec.field = a.field == "complex" ? Field::complex : Field::real;

  FrameDocument doc{build(spec), std::nullopt, std::nullopt, construction_json(spec)};
  if (!a.name.empty()) doc.name = a.name;
  if (spec.kind == ConstructionKind::random_unit) doc.seed = spec.seed;

  std::string text;
  if (a.csv)
    text = std::visit([](const auto& f) { return matrix_to_csv(f.matrix()); }, doc.frame);
  else
    text = write_frame(doc) + "\n";
  if (a.output.empty())
    out << text;
  else
    save(a.output, text);
  return ok;
}

// analyze --------------------------------------------------------------------

template <FieldScalar S>
json analyze_frame(const Frame<S>& f) {
  json r = {{"field", to_string(field_of<S>)}, {"n", f.dim()}, {"m", f.size()}, {"unit_norm", f.is_unit_norm()}};
  r["frame_bounds"] = guarded([&] { return bounds_json(frame_bounds(f)); });
  r["riesz_bounds"] = guarded([&] { return bounds_json(riesz_bounds(f)); });
  r["frame_potential"] = frame_potential(f);
  r["equiangular"] = guarded([&]() -> json {
    const auto c = is_equiangular(f);
    return c ? json{{"equiangular", true}, {"c", *c}} : json{{"equiangular", false}};
  });

  const OuterSequence<S> os = induce(f);
  json o = {{"gram_spectrum", real_vector_json(hermitian_eig(os.gram_op).eigenvalues)},
            {"rank", os.rank},
            {"rank_tol", default_rank_tol(os.gram_op)},
            {"ambient_dim", os.ambient_dim}};
  o["independent"] = is_independent(os);
  o["riesz_bounds"] = guarded([&] { return bounds_json(outer_riesz_bounds(os)); });
  if (const auto cert = dependence_certificate(os))
    o["dependence_certificate"] = {{"coefficients", real_vector_json(cert->coefficients)},
                                   {"residual", cert->residual},
                                   {"residual_tol", certificate_residual_tol()},
                                   {"nonnegative_part", index_json(cert->split)},
                                   {"pivot", cert->pivot}};
  o["optimal_bounds"] = guarded([&]() -> json {
    const OptimalBoundReport b = optimal_bound_report(os);
    json j = {{"upper_bound_floor", b.upper_bound_floor},
              {"achieved_upper", b.achieved_upper},
              {"achieved_lower", b.achieved_lower},
              {"upper_gap", b.upper_gap}};
    j["lower_bound_ceiling"] = b.lower_bound_ceiling ? json(*b.lower_bound_ceiling) : json("not applicable (M <= N)");
    j["lower_gap"] = b.lower_gap ? json(*b.lower_gap) : json(nullptr);
    return j;
  });
  r["outer"] = std::move(o);
  return r;
}

int analyze(const std::string& path, const std::string& gram_csv, std::ostream& out) {
  const FrameDocument doc = load(path);
  json inputs = {{"file", path}};
  if (doc.name) inputs["name"] = *doc.name;
  const json results = std::visit([](const auto& f) { return analyze_frame(f); }, doc.frame);
  if (!gram_csv.empty())
    std::visit([&](const auto& f) { save(gram_csv, matrix_to_csv<double>(induce(f).gram_op)); }, doc.frame);
  out << report("analyze", inputs, results, tolerances()).dump(2) << "\n";
  return ok;
}

// classify -------------------------------------------------------------------

struct ClassifyArgs {
  std::string file;
  std::vector<std::string> candidates;
  std::optional<Index> grid;
  std::uint64_t seed = 0;
  double tol = kDependenceTol;
  bool normalize = false;
};

template <FieldScalar S>
json classification_json(const ClassificationReport<S>& r) {
  json j = {{"candidate", vector_json(r.candidate)},
            {"tv", vector_json(r.tv)},
            {"quartic_value", scalar_json(r.quartic_value)},
            {"elliptic_value", scalar_json(r.elliptic_value)},
            {"verdict", r.verdict == Verdict::dependent ? "dependent" : "independent"},
            {"tol", r.tol},
            {"extended_rank", r.extended_rank},
            {"rank_tol", r.rank_tol}};
  j["ellipsoid_residual"] = r.ellipsoid_residual ? scalar_json(*r.ellipsoid_residual) : json(nullptr);
  if (r.reordered) j["permutation"] = index_json(r.permutation);
  return j;
}

template <FieldScalar S>
json classify_frame(const Frame<S>& f, const ClassifyArgs& a) {
  if (a.grid) {
    if (*a.grid < 1) throw CLI::ValidationError("--grid", "needs at least one sample");
    SplitMix64 rng(a.seed);
    Index dependent = 0;
    double closest = std::numeric_limits<double>::infinity();
    std::optional<json> permutation;
    for (Index s = 0; s < *a.grid; ++s) {
      const auto r = classify(f, rng.unit_vector<S>(f.dim()), a.tol);
      if (r.verdict == Verdict::dependent) ++dependent;
      closest = std::min(closest, std::abs(r.elliptic_value - 1.0));
      if (r.reordered && !permutation) permutation = index_json(r.permutation);
    }
    json j = {{"samples", *a.grid},
              {"seed", a.seed},
              {"dependent", dependent},
              {"dependent_fraction", static_cast<double>(dependent) / static_cast<double>(*a.grid)},
              {"min_abs_elliptic_minus_one", scalar_json(closest)}};
    if (permutation) j["permutation"] = *permutation;
    return j;
  }
  json rows = json::array();
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    json parsed;
    try {
      parsed = json::parse(a.candidates[i]);
    } catch (const json::parse_error& e) {
      throw parse_error("candidate " + std::to_string(i) + " is not JSON: " + e.what());
    }
    Vector<S> v = vector_from_json<S>(parsed, f.dim());
    if (a.normalize) {
      if (v.norm() == 0.0) throw error(errc::zero_vector, "candidate " + std::to_string(i) + " is zero");
      v.normalize();
    }
    json row = classification_json(classify(f, v, a.tol));
    row["index"] = i;
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}};
}

int classify_cmd(const ClassifyArgs& a, std::ostream& out) {
  if (a.grid.has_value() == !a.candidates.empty())
    throw CLI::ValidationError("classify", "give either --candidate (one or more) or --grid");
  const FrameDocument doc = load(a.file);
  json inputs = {{"file", a.file}, {"normalize", a.normalize}};
  if (a.grid) inputs["grid"] = *a.grid, inputs["seed"] = a.seed;
  else inputs["candidates"] = a.candidates;
  const json results = std::visit([&](const auto& f) { return classify_frame(f, a); }, doc.frame);
  out << report("classify", inputs, results, tolerances({{"dependence", a.tol}})).dump(2) << "\n";
  return ok;
}

// nudge ----------------------------------------------------------------------

int nudge(const std::string& path, double eps, const std::string& output, std::ostream& out) {
  const FrameDocument doc = load(path);
  json results;
  FrameDocument moved = doc;
  std::visit(
      [&](const auto& f) {
        const auto r = nudge_to_independence(f, eps);
        moved.frame = r.frame;
        results = {{"replaced", index_json(r.replaced)},
                   {"movement", r.movement},
                   {"per_vector_budget", r.per_vector_budget},
                   {"independent", is_independent(induce(r.frame))}};
      },
      doc.frame);
  moved.construction = json{{"nudged_from", doc.construction ? *doc.construction : json(path)}, {"eps", eps}};
  results["frame"] = to_json(moved);
  if (!output.empty()) save(output, write_frame(moved) + "\n");
  out << report("nudge", {{"file", path}, {"eps", eps}}, results, tolerances({{"movement_budget", eps}})).dump(2)
      << "\n";
  return ok;
}

// verify ---------------------------------------------------------------------

json row_json(const verify::Row& r) {
  return {{"group", r.group}, {"label", r.label},        {"pass", r.pass},
          {"measured", scalar_json(r.measured)}, {"expected", scalar_json(r.expected)},
          {"tol", r.tol},       {"note", r.note}};
}

int list_criteria(std::ostream& out) {
  json list = json::array();
  for (const verify::Criterion& c : verify::registry()) {
    json groups = json::array();
    for (const verify::Group& g : c.groups) groups.push_back(g.id);
    list.push_back({{"number", c.number}, {"id", c.id}, {"title", c.title}, {"groups", groups}});
  }
  list.push_back({{"number", 15}, {"id", "release-gate"}, {"title", "every criterion passes within 60 s"},
                  {"groups", json::array()}});
  out << report("verify", {{"list", true}}, {{"criteria", list}}, tolerances()).dump(2) << "\n";
  return ok;
}

int verify_cmd(const std::string& only, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<verify::CriterionResult> results = verify::run_selected(only);
  if (results.empty()) throw CLI::ValidationError("--only", "nothing matches \"" + only + "\"");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool all = true;
  json criteria = json::array();
  for (const auto& c : results) {
    all = all && c.pass;
    json rows = json::array();
    for (const auto& r : c.rows) rows.push_back(row_json(r));
    criteria.push_back({{"number", c.number}, {"id", c.id}, {"title", c.title}, {"pass", c.pass},
                        {"seconds", c.seconds}, {"rows", rows}});
    err << (c.pass ? "PASS " : "FAIL ") << c.number << " " << c.id << " (" << c.seconds << " s)\n";
    for (const auto& r : c.rows)
      if (!r.pass) err << "  failed: [" << r.group << "] " << r.label << ": measured " << r.measured << "\n";
  }
  if (only.empty()) {
    const bool gate = all && seconds < kVerifyBudgetSeconds;
    std::string note = all ? "all criteria pass" : "some criteria fail";
    json row = {{"group", "release-gate"}, {"label", "all criteria pass, total runtime"}, {"pass", gate},
                {"measured", seconds}, {"expected", kVerifyBudgetSeconds}, {"tol", 0.0}, {"note", note}};
    criteria.push_back({{"number", 15}, {"id", "release-gate"}, {"title", "every criterion passes within 60 s"},
                        {"pass", gate}, {"seconds", seconds}, {"rows", json::array({row})}});
    err << (gate ? "PASS " : "FAIL ") << "15 release-gate (" << seconds << " s)\n";
    all = gate;
  }
  json inputs = json::object();
  if (!only.empty()) inputs["only"] = only;
  out << report("verify", inputs, {{"pass", all}, {"seconds", seconds}, {"criteria", criteria}}, tolerances()).dump(2)
      << "\n";
  return all ? ok : verify_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frames, their outer-product sequences, and dependence geometry", "framekit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FRAMEKIT_VERSION);
  std::optional<double> rank_tol;
  app.add_option("--rank-tol", rank_tol, "absolute rank tolerance (overrides FRAMEKIT_TOL)")
      ->check(CLI::NonNegativeNumber);

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "build a named frame");
  construct_cmd->add_option("kind", ca.kind,
                            "orthonormal | eij | complex-eij | simplex | biangular | epsilon-pair | random-unit")
      ->required();
  construct_cmd->add_option("--n", ca.n, "dimension");
  construct_cmd->add_option("--m", ca.m, "number of vectors (random-unit)")->capture_default_str();
  construct_cmd->add_option("--eps", ca.eps, "epsilon (epsilon-pair)");
  construct_cmd->add_option("--seed", ca.seed, "seed (random-unit)")->capture_default_str();
  construct_cmd->add_option("--field", ca.field, "real | complex")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  construct_cmd->add_option("--name", ca.name, "name stored in the document");
  construct_cmd->add_option("-o,--output", ca.output, "write here instead of stdout");
  construct_cmd->add_flag("--csv", ca.csv, "emit the synthesis matrix as CSV");

  std::string analyze_file, gram_csv;
  auto* analyze_cmd = app.add_subcommand("analyze", "bounds, spectra and outer independence of a frame");
  analyze_cmd->add_option("file", analyze_file, "frame document, - for stdin")->required();
  analyze_cmd->add_option("--gram-csv", gram_csv, "also write the outer Gram matrix as CSV");

  ClassifyArgs cl;
  auto* classify_sub = app.add_subcommand("classify", "does a candidate's outer product join the span?");
  classify_sub->add_option("file", cl.file, "frame document, - for stdin")->required();
  classify_sub->add_option("--candidate", cl.candidates, "JSON vector, repeatable; complex entries as [re, im]")
      ->allow_extra_args(false);
  classify_sub->add_option("--grid", cl.grid, "classify this many random unit candidates");
  classify_sub->add_option("--seed", cl.seed, "seed for --grid")->capture_default_str();
  classify_sub->add_option("--tol", cl.tol, "dependence tolerance on |f - 1|")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify_sub->add_flag("--normalize", cl.normalize, "scale candidates to unit norm first");

  std::string nudge_file, nudge_out;
  double nudge_eps = 0.0;
  auto* nudge_cmd = app.add_subcommand("nudge", "move a frame slightly so its outers become independent");
  nudge_cmd->add_option("file", nudge_file, "frame document, - for stdin")->required();
  nudge_cmd->add_option("--eps", nudge_eps, "total movement budget")->required()->check(CLI::PositiveNumber);
  nudge_cmd->add_option("-o,--output", nudge_out, "also write the nudged frame document here");

  std::string only;
  bool list = false;
  auto* verify_sub = app.add_subcommand("verify", "run the acceptance suite");
  verify_sub->add_option("--only", only, "criterion number, criterion id or group id");
  verify_sub->add_flag("--list", list, "list criteria without running them");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
    if (rank_tol) {
      std::ostringstream s;
      s.precision(17);
      s << *rank_tol;
      setenv("FRAMEKIT_TOL", s.str().c_str(), 1);
    }
    if (*construct_cmd) return construct(ca, out);
    if (*analyze_cmd) return analyze(analyze_file, gram_csv, out);
    if (*classify_sub) return classify_cmd(cl, out);
    if (*nudge_cmd) return nudge(nudge_file, nudge_eps, nudge_out, out);
    if (*verify_sub) return list ? list_criteria(out) : verify_cmd(only, out, err);
    return usage;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return usage;
  } catch (const parse_error& e) {
    err << "framekit: " << e.what() << "\n";
    return usage;
  } catch (const error& e) {
    err << "framekit: " << e.what() << "\n";
    return domain;
  }
}

}  // namespace framekit::cli
