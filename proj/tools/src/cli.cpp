// Copyright 2026 The okbody Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "okbody/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "case_file.hpp"
#include "okbody/bodies.hpp"
#include "okbody/error.hpp"
#include "okbody/json_io.hpp"
#include "okbody/moment.hpp"
#include "svg.hpp"

namespace okb::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::vector<std::string> kIdentities = {"An", "Bn", "Cn", "WN", "lift", "calculus"};

// Exact value, with a decimal alongside when it is not an integer.
std::string human(const Rational& r) {
  if (r.get_den() == 1) return to_string(r);
  return to_string(r) + " (" + to_decimal(r) + ")";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Vec parse_rational_list(const std::string& s, const std::string& field) {
  Vec out;
  for (const auto& item : split(s, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "field '" + field + "': " + e.what());
    }
  }
  return out;
}

Rational parse_option(const std::string& s, const std::string& field) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, "field '" + field + "': " + e.what());
  }
}

const toric::ToricClass& require_class(const CaseFile& c) {
  if (!c.cls) throw Error(ErrorCode::kParse, "field 'class': missing in case '" + c.name + "'");
  return *c.cls;
}

// Writes to path, or to out when path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kParse, "field '-o': cannot write '" + path + "'");
  f << text;
}

Vec default_eps_list() {
  Vec eps;
  for (std::int64_t d = 2; d <= 64; d *= 2) eps.push_back(make_rational(1, d));
  return eps;
}

// ---- body ----------------------------------------------------------------

struct BodyOptions {
  std::string case_path;
  std::string output;
  std::optional<unsigned> k_max;
  bool allow_psef = false;
  std::string eps_list;
};

int cmd_body(const BodyOptions& o, std::ostream& out, std::ostream& err) {
  CaseFile c = load_case(o.case_path);
  const auto& xi = require_class(c);
  const auto flag = flags_of(c).front();
  const std::size_t n = xi.dim();
  json doc;
  Rational body_volume;
  if (!toric::is_big(xi) && o.allow_psef) {
    Vec eps = o.eps_list.empty() ? default_eps_list() : parse_rational_list(o.eps_list, "--eps-list");
    auto psef = bodies::psef_body(xi, flag, eps);
    doc = io::to_json(psef.limit);
    json steps = json::array();
    for (std::size_t i = 0; i < eps.size(); ++i)
      steps.push_back({{"eps", to_string(eps[i])}, {"volume", to_string(psef.volumes[i])},
                       {"body", io::to_json(psef.bodies[i])}});
    doc["eps_bodies"] = steps;
    doc["list_intersection"] = io::to_json(psef.list_intersection);
    body_volume = geom::volume(psef.limit.body);
  } else {
    auto body = o.k_max ? bodies::semigroup_okounkov_body(xi, flag, *o.k_max) : bodies::okounkov_body(xi, flag);
    doc = io::to_json(body);
    body_volume = geom::volume(body.body);
  }
  doc["case"] = c.name;
  emit(doc.dump(2) + "\n", o.output, out);
  std::ostream& summary = o.output.empty() ? err : out;
  summary << "vol(ξ)=" << human(toric::volume_class(xi)) << ", n!·vol(Δ)=" << human(factorial(n) * body_volume)
          << "\n";
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct CaseResult {
  std::vector<IdentityReport> reports;
  std::string path;
};

void append(std::vector<IdentityReport>& to, std::vector<IdentityReport> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

// Reports for one identity on one case. Returns nothing if the case lacks
// the data the identity needs and strict is false.
std::vector<IdentityReport> run_identity(const CaseFile& c, const std::string& id, bool strict) {
  auto missing = [&](const std::string& field) -> std::vector<IdentityReport> {
    if (strict) throw Error(ErrorCode::kParse, "field '" + field + "': required by " + id + " in case '" + c.name + "'");
    return {};
  };
  const auto& xi = require_class(c);
  std::vector<IdentityReport> out;
  if (id == "An") {
    for (const auto& flag : flags_of(c)) out.push_back(bodies::verify_An(xi, flag));
    if (c.expected_volume) {
      out.emplace_back("An:expected", toric::volume_class(xi), *c.expected_volume,
                       json{{"class", io::to_json(xi)}, {"expected_volume", to_string(*c.expected_volume)}});
    }
  } else if (id == "Bn") {
    if (!c.divisor) return missing("divisor");
    auto r = bodies::DivisorCurrent::in_class(xi, *c.divisor);
    for (const auto& flag : flags_of(c)) out.push_back(bodies::verify_Bn(xi, r, flag));
  } else if (id == "Cn") {
    if (xi.dim() < 2) {
      if (strict) throw Error(ErrorCode::kDimensionMismatch, "Cn needs dimension n >= 2, case '" + c.name + "' has n = 1");
      return {};
    }
    for (const auto& flag : flags_of(c)) {
      Vec grid = c.t_grid ? *c.t_grid : [&] {
        auto [lo, hi] = toric::numin_numax(xi, flag);
        return bodies::default_t_grid(lo, hi);
      }();
      for (const auto& t : grid) out.push_back(bodies::verify_Cn(xi, flag, t));
    }
  } else if (id == "WN") {
    std::vector<std::size_t> rays;
    if (c.wn_rays) {
      rays = *c.wn_rays;
    } else {
      for (std::size_t r = 0; r < c.fan->rays().size(); ++r) rays.push_back(r);
    }
    for (auto r : rays) append(out, bodies::verify_WN(xi, r));
  } else if (id == "lift") {
    if (!c.blowup_cone) return missing("blowup_cone");
    for (const auto& flag : flags_of(c)) out.push_back(bodies::verify_lift(xi, flag, *c.blowup_cone));
  } else if (id == "calculus") {
    if (!c.second_class) return missing("second_class");
    for (const auto& flag : flags_of(c)) append(out, bodies::verify_body_calculus(xi, *c.second_class, c.lambda, flag));
  } else {
    throw Error(ErrorCode::kParse, "field '--identities': unknown identity '" + id + "'");
  }
  for (auto& r : out) r.context()["case"] = c.name;
  return out;
}

CaseResult verify_case(const fs::path& path, const std::optional<std::vector<std::string>>& requested, bool strict) {
  CaseFile c = load_case(path);
  std::vector<std::string> ids;
  if (requested) {
    ids = *requested;
  } else if (c.identities) {
    ids = *c.identities;
    strict = true;
  } else {
    ids = kIdentities;
    strict = false;
  }
  CaseResult result;
  result.path = path.string();
  for (const auto& id : ids) append(result.reports, run_identity(c, id, strict));
  return result;
}

struct VerifyOptions {
  std::string case_path;
  std::string corpus;
  std::optional<std::string> identities;
  std::string output;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<std::vector<std::string>> requested;
  if (o.identities) {
    requested = split(*o.identities, ',');
    for (const auto& id : *requested)
      if (std::find(kIdentities.begin(), kIdentities.end(), id) == kIdentities.end())
        throw Error(ErrorCode::kParse, "field '--identities': unknown identity '" + id + "'");
    if (requested->empty()) return kExitOk;
  }
  std::vector<fs::path> paths;
  if (!o.case_path.empty()) paths.push_back(o.case_path);
  if (!o.corpus.empty()) {
    if (!fs::is_directory(o.corpus)) throw Error(ErrorCode::kParse, "field '--corpus': not a directory: " + o.corpus);
    std::vector<fs::path> found;
    for (const auto& entry : fs::directory_iterator(o.corpus))
      if (entry.is_regular_file() && entry.path().extension() == ".json") found.push_back(entry.path());
    std::sort(found.begin(), found.end());
    paths.insert(paths.end(), found.begin(), found.end());
  }
  if (paths.empty()) throw Error(ErrorCode::kParse, "verify needs --case or --corpus");
  const bool strict = o.corpus.empty();

  // Cases run concurrently; output follows case order.
  std::vector<std::future<CaseResult>> jobs;
  for (const auto& p : paths) jobs.push_back(std::async(std::launch::async, verify_case, p, requested, strict));
  std::vector<CaseResult> results;
  std::exception_ptr first_error;
  for (auto& job : jobs) {
    try {
      results.push_back(job.get());
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);

  std::ostringstream lines;
  int failures = 0;
  for (const auto& res : results) {
    for (const auto& r : res.reports) {
      lines << r.to_json().dump() << "\n";
      if (!r.exact_equal()) {
        ++failures;
        err << "FAIL " << r.identity() << " in case '" << r.context().value("case", "") << "' (" << res.path
            << "): lhs=" << human(r.lhs()) << " rhs=" << human(r.rhs()) << " diff=" << human(r.lhs() - r.rhs())
            << "\n";
      }
    }
  }
  emit(lines.str(), o.output, out);
  if (failures > 0) {
    err << failures << " identity check(s) failed\n";
    return kExitIdentityFailure;
  }
  return kExitOk;
}

// ---- slice-curve ---------------------------------------------------------

struct SliceOptions {
  std::string case_path;
  unsigned grid = 9;
  std::string t_min;
  std::string t_max;
  std::string output;
};

int cmd_slice_curve(const SliceOptions& o, std::ostream& out, std::ostream&) {
  CaseFile c = load_case(o.case_path);
  const auto& xi = require_class(c);
  const std::size_t n = xi.dim();
  if (n < 2)
    throw Error(ErrorCode::kDimensionMismatch,
                "slice-curve needs dimension n >= 2, case '" + c.name + "' has n = " + std::to_string(n));
  if (o.grid == 0) throw Error(ErrorCode::kParse, "field '--grid': must be positive");
  const auto flag = flags_of(c).front();
  const auto [nu_min, nu_max] = toric::numin_numax(xi, flag);
  const auto body = bodies::okounkov_body(xi, flag).body;
  const auto y1 = toric::ToricClass::divisor(c.fan, flag.first_divisor());

  Vec ts;
  const bool custom = !o.t_min.empty() || !o.t_max.empty();
  if (custom) {
    Rational lo = o.t_min.empty() ? nu_min : parse_option(o.t_min, "--t-min");
    Rational hi = o.t_max.empty() ? nu_max : parse_option(o.t_max, "--t-max");
    if (o.grid == 1) {
      ts.push_back(lo);
    } else {
      for (unsigned i = 0; i < o.grid; ++i)
        ts.push_back(lo + (hi - lo) * make_rational(i, o.grid - 1));
    }
  } else {
    for (unsigned i = 1; i <= o.grid; ++i) ts.push_back(nu_min + (nu_max - nu_min) * make_rational(i, o.grid + 1));
  }

  std::ostringstream csv;
  csv << "t,t_exact,slice_vol,slice_vol_exact,restr_vol,restr_vol_exact\n";
  for (const auto& t : ts) {
    csv << to_decimal(t) << ',' << to_string(t) << ',';
    if (t <= nu_min || t >= nu_max) {
      csv << "empty,empty,empty,empty\n";
      continue;
    }
    Rational sv = geom::volume(geom::slice(body, t));
    Rational rv = toric::restricted_volume(xi - t * y1, flag.first_divisor());
    csv << to_decimal(sv) << ',' << to_string(sv) << ',' << to_decimal(rv) << ',' << to_string(rv) << '\n';
  }
  emit(csv.str(), o.output, out);
  return kExitOk;
}

// ---- plot ----------------------------------------------------------------

struct PlotOptions {
  std::string case_path;
  std::string potential;
  std::string body;
  std::string output;
};

int cmd_plot(const PlotOptions& o, std::ostream& out, std::ostream&) {
  const int sources = !o.case_path.empty() + !o.potential.empty() + !o.body.empty();
  if (sources != 1) throw Error(ErrorCode::kParse, "plot needs exactly one of --case, --potential, --body");
  geom::Polytope p;
  std::string title;
  if (!o.case_path.empty()) {
    CaseFile c = load_case(o.case_path);
    if (c.potential && !c.cls) {
      p = moment::moment_body(*c.potential).body;
      title = "moment body: " + c.name;
    } else {
      const auto flag = flags_of(c).front();
      p = bodies::okounkov_body(require_class(c), flag).body;
      title = "Okounkov body: " + c.name;
    }
  } else if (!o.potential.empty()) {
    p = moment::moment_body(io::potential_from_json(read_json_file(o.potential))).body;
    title = "moment body: " + fs::path(o.potential).stem().string();
  } else {
    p = io::polytope_from_json(read_json_file(o.body));
    title = "body: " + fs::path(o.body).stem().string();
  }
  emit(render_svg(p, title), o.output, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Okounkov bodies on toric varieties", "okbody"};
  app.require_subcommand(1);

  BodyOptions body;
  auto* body_cmd = app.add_subcommand("body", "Compute the Okounkov body of a case");
  body_cmd->add_option("--case", body.case_path, "Case file")->required();
  body_cmd->add_option("-o", body.output, "Output JSON path");
  body_cmd->add_option("--k-max", body.k_max, "Use the semigroup approximation at this level");
  body_cmd->add_flag("--allow-psef", body.allow_psef, "Take the pseudoeffective limit for non-big classes");
  body_cmd->add_option("--eps-list", body.eps_list, "Comma separated decreasing epsilons");

  VerifyOptions verify;
  std::string identities;
  auto* verify_cmd = app.add_subcommand("verify", "Check volume identities on a case or corpus");
  verify_cmd->add_option("--case", verify.case_path, "Case file");
  verify_cmd->add_option("--corpus", verify.corpus, "Directory of case files");
  auto* ids_opt = verify_cmd->add_option("--identities", identities, "Subset of An,Bn,Cn,WN,lift,calculus");
  verify_cmd->add_option("-o", verify.output, "Output path for report lines");

  SliceOptions slice;
  auto* slice_cmd = app.add_subcommand("slice-curve", "Slice volumes against restricted volumes as CSV");
  slice_cmd->add_option("--case", slice.case_path, "Case file")->required();
  slice_cmd->add_option("--grid", slice.grid, "Number of grid points");
  slice_cmd->add_option("--t-min", slice.t_min, "Grid start (default: interior of the range)");
  slice_cmd->add_option("--t-max", slice.t_max, "Grid end");
  slice_cmd->add_option("-o", slice.output, "Output CSV path");

  PlotOptions plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render a body as SVG");
  plot_cmd->add_option("--case", plot.case_path, "Case file");
  plot_cmd->add_option("--potential", plot.potential, "Potential JSON file");
  plot_cmd->add_option("--body", plot.body, "Polytope JSON file");
  plot_cmd->add_option("-o", plot.output, "Output SVG path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*body_cmd) return cmd_body(body, out, err);
    if (*verify_cmd) {
      if (ids_opt->count() > 0) verify.identities = identities;
      return cmd_verify(verify, out, err);
    }
    if (*slice_cmd) return cmd_slice_curve(slice, out, err);
    if (*plot_cmd) return cmd_plot(plot, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation_error(e.code()) ? kExitValidation : kExitPrecondition;
  } catch (const json::exception& e) {
    err << "error: Parse: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitValidation;
}

}  // namespace okb::cli
