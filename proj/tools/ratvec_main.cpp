// ratvec - quartic ratio vector toolkit.
//
// Subcommands: forward, check, reconstruct, solve-w, line, bounds,
// verify-identities, sample.  Inputs written "p/q" are processed exactly;
// decimal inputs take the float path.  Exit codes: 0 success/member,
// 1 clean non-membership or identity failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ratvec/campaign.hpp"
#include "ratvec/characterization.hpp"
#include "ratvec/identities.hpp"
#include "ratvec/quartic.hpp"
#include "ratvec/reconstruction.hpp"

using json = nlohmann::json;
using namespace ratvec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

bool looks_rational(const std::string& text) {
  if (text.empty()) return false;
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      return false;
  return true;
}

struct ScalarInput {
  std::optional<Rational> exact;  // set when the text was "p/q"
  double value;
};

ScalarInput parse_scalar(const std::string& text) {
  if (looks_rational(text)) {
    Rational q = Rational::parse(text);
    return {q, q.to_double()};
  }
  std::size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("malformed number: " + text);
  return {std::nullopt, v};
}

std::vector<ScalarInput> parse_csv_scalars(const std::string& text, std::size_t expect) {
  std::vector<ScalarInput> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  if (out.size() != expect)
    throw std::invalid_argument("expected " + std::to_string(expect) + " comma-separated values");
  return out;
}

double default_tol() {
  if (const char* env = std::getenv("RATVEC_DEFAULT_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
      throw std::invalid_argument("malformed RATVEC_DEFAULT_TOL");
    }
  }
  return 1e-12;
}

json bounds_json(const std::vector<BoundCheck<double>>& bounds) {
  json arr = json::array();
  for (const auto& b : bounds)
    arr.push_back({{"name", b.name}, {"value", b.value}, {"satisfied", b.satisfied},
                   {"margin", b.margin}});
  return arr;
}

template <class S>
std::vector<BoundCheck<double>> bounds_to_double(const std::vector<BoundCheck<S>>& bounds) {
  std::vector<BoundCheck<double>> out;
  for (const auto& b : bounds)
    out.push_back({b.name, approx_of(b.value), b.satisfied, approx_of(b.margin)});
  return out;
}

json surd_json(const Surd& x) {
  return {{"a", x.a().str()}, {"b", x.b().str()}, {"d", x.d().get_str()}, {"c", "1"},
          {"display", x.str()}, {"approx", x.to_double()}};
}

json base_doc(const std::string& command) {
  return {{"schema", "v1"}, {"command", command}, {"values", json::object()},
          {"diagnostics", json::array()}};
}

void emit(const json& doc, bool as_json) {
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (auto& [key, value] : doc.items()) {
    if (key == "schema" || key == "command") continue;
    if (key == "values") {
      for (auto& [k2, v2] : value.items()) std::cout << k2 << " = " << v2.dump() << "\n";
    } else {
      std::cout << key << " = " << value.dump() << "\n";
    }
  }
}

int cmd_forward(const std::string& roots_text, double tol, bool as_json) {
  auto inputs = parse_csv_scalars(roots_text, 4);
  bool exact = std::all_of(inputs.begin(), inputs.end(),
                           [](const ScalarInput& s) { return s.exact.has_value(); });
  json doc = base_doc("forward");
  double u, v, w, x1, x2, x3;
  if (exact) {
    QuarticRoots<Rational> roots{*inputs[0].exact, *inputs[1].exact, *inputs[2].exact,
                                 *inputs[3].exact};
    Rational rtol = Rational::from_double(tol);
    auto cp = critical_points(roots, rtol);
    x1 = cp.x1.to_double();
    x2 = cp.x2.to_double();
    x3 = cp.x3.to_double();
    auto rv = forward_ratio_vector(roots, rtol);
    u = rv.u.to_double();
    v = rv.v.to_double();
    w = rv.w.to_double();
    doc["diagnostics"].push_back("exact rational bisection, enclosure width <= tol * gap");
  } else {
    QuarticRoots<double> roots{inputs[0].value, inputs[1].value, inputs[2].value,
                               inputs[3].value};
    auto cp = critical_points(roots, tol);
    x1 = cp.x1;
    x2 = cp.x2;
    x3 = cp.x3;
    auto rv = forward_ratio_vector(roots, tol);
    u = rv.u;
    v = rv.v;
    w = rv.w;
  }
  RegionLabel region = classify_region(u, v, w);
  doc["values"] = {{"critical_points", {x1, x2, x3}},
                   {"u", u}, {"v", v}, {"w", w},
                   {"R", eval_R(u, v, w)},
                   {"k", eval_k(u, v, w)},
                   {"l1_bounds", bounds_json(l1_bounds(u, v, w))}};
  doc["region"] = to_string(region);
  emit(doc, as_json);
  return kExitOk;
}

int cmd_check(const std::string& uvw_text, bool force_exact, bool as_json) {
  auto inputs = parse_csv_scalars(uvw_text, 3);
  bool exact = std::all_of(inputs.begin(), inputs.end(),
                           [](const ScalarInput& s) { return s.exact.has_value(); });
  if (force_exact && !exact)
    throw std::invalid_argument("--exact requires rational \"p/q\" inputs");
  json doc = base_doc("check");
  bool member;
  if (exact) {
    auto verdict = is_ratio_vector(*inputs[0].exact, *inputs[1].exact, *inputs[2].exact);
    member = verdict.is_ratio_vector;
    doc["verdict"] = member;
    doc["region"] = to_string(verdict.region);
    doc["values"] = {{"R", verdict.R_value.str()}, {"k", verdict.k_value.str()},
                     {"l1_bounds", bounds_json(bounds_to_double(verdict.bounds))}};
    doc["diagnostics"].push_back("exact rational arithmetic");
  } else {
    auto verdict = is_ratio_vector(inputs[0].value, inputs[1].value, inputs[2].value);
    member = verdict.is_ratio_vector;
    doc["verdict"] = member;
    doc["region"] = to_string(verdict.region);
    doc["values"] = {{"R", verdict.R_value}, {"k", verdict.k_value},
                     {"l1_bounds", bounds_json(verdict.bounds)}};
    doc["diagnostics"].push_back("float path: |R| <= 1e-9 stands in for R == 0");
  }
  emit(doc, as_json);
  return member ? kExitOk : kExitNegative;
}

int cmd_reconstruct(const std::string& uvw_text, bool unchecked, double tol, bool as_json) {
  auto inputs = parse_csv_scalars(uvw_text, 3);
  bool exact = std::all_of(inputs.begin(), inputs.end(),
                           [](const ScalarInput& s) { return s.exact.has_value(); });
  json doc = base_doc("reconstruct");
  auto fill = [&](auto rec, auto to_dump) {
    doc["values"] = {{"r", to_dump(rec.r)}, {"s", to_dump(rec.s)},
                     {"coeffs", {to_dump(rec.coeffs[0]), to_dump(rec.coeffs[1]),
                                 to_dump(rec.coeffs[2]), to_dump(rec.coeffs[3]),
                                 to_dump(rec.coeffs[4])}},
                     {"predicted_critical_points",
                      {to_dump(rec.predicted_crits[0]), to_dump(rec.predicted_crits[1]),
                       to_dump(rec.predicted_crits[2])}}};
    if (rec.off_variety) doc["diagnostics"].push_back("off-variety: R(u,v,w) != 0");
  };
  try {
    if (exact) {
      auto rec = reconstruct(*inputs[0].exact, *inputs[1].exact, *inputs[2].exact, unchecked);
      fill(rec, [](const Rational& q) { return json(q.str()); });
    } else {
      auto rec = reconstruct(inputs[0].value, inputs[1].value, inputs[2].value, unchecked);
      fill(rec, [](double x) { return json(x); });
      (void)tol;
    }
  } catch (const std::domain_error& e) {
    if (std::string(e.what()) == "not-a-ratio-vector") {
      doc["verdict"] = false;
      doc["diagnostics"].push_back("not a ratio vector; re-run with --unchecked to evaluate anyway");
      emit(doc, as_json);
      return kExitNegative;
    }
    throw;
  }
  doc["verdict"] = true;
  emit(doc, as_json);
  return kExitOk;
}

int cmd_solve_w(const std::string& u_text, const std::string& v_text, bool as_json) {
  if (!looks_rational(u_text) || !looks_rational(v_text))
    throw std::invalid_argument("solve-w requires exact rational --u and --v");
  auto roots = solve_w(Rational::parse(u_text), Rational::parse(v_text));
  json doc = base_doc("solve-w");
  json arr = json::array();
  for (const auto& root : roots) {
    arr.push_back({{"w", surd_json(root.w)},
                   {"member", root.verdict.is_ratio_vector},
                   {"region", to_string(root.verdict.region)}});
  }
  doc["values"]["roots"] = arr;
  doc["values"]["count"] = roots.size();
  emit(doc, as_json);
  return kExitOk;
}

int cmd_line(const std::string& c_text, bool as_json) {
  if (!looks_rational(c_text))
    throw std::invalid_argument("line requires an exact rational --c");
  auto res = line_family(Rational::parse(c_text));
  json doc = base_doc("line");
  doc["verdict"] = res.verdict.is_ratio_vector;
  doc["region"] = to_string(res.verdict.region);
  doc["values"] = {{"u", res.point.u.str()}, {"v", res.point.v.str()}, {"w", res.point.w.str()},
                   {"k", res.k_closed_form.str()}};
  if (res.reconstruction) {
    doc["values"]["r"] = res.reconstruction->r.str();
    doc["values"]["s"] = res.reconstruction->s.str();
  }
  emit(doc, as_json);
  return res.verdict.is_ratio_vector ? kExitOk : kExitNegative;
}

int cmd_bounds(int n, int k, bool as_json) {
  auto [lo, hi] = peyser_bounds(n, k);
  json doc = base_doc("bounds");
  doc["values"] = {{"lower", lo.str()}, {"upper", hi.str()},
                   {"lower_approx", lo.to_double()}, {"upper_approx", hi.to_double()}};
  emit(doc, as_json);
  return kExitOk;
}

int cmd_verify_identities(bool as_json) {
  auto results = verify_all_identities();
  bool all_pass = true;
  json doc = base_doc("verify-identities");
  json arr = json::array();
  for (const auto& res : results) {
    all_pass = all_pass && res.passed;
    if (as_json) {
      json entry = {{"name", res.name}, {"passed", res.passed}};
      if (!res.note.empty()) entry["note"] = res.note;
      if (!res.passed) entry["witness"] = res.witness.str();
      arr.push_back(entry);
    } else {
      std::cout << res.name << " " << (res.passed ? "pass" : "FAIL");
      if (!res.note.empty()) std::cout << "  (" << res.note << ")";
      std::cout << "\n";
    }
  }
  if (as_json) {
    doc["values"]["identities"] = arr;
    doc["verdict"] = all_pass;
    emit(doc, true);
  }
  return all_pass ? kExitOk : kExitNegative;
}

int cmd_sample(long count, std::uint64_t seed, const std::string& out_path,
               const std::string& fixed_text, double tol) {
  if (count < 1) throw std::invalid_argument("--count must be >= 1");
  CampaignConfig config;
  config.count = static_cast<std::size_t>(count);
  config.seed = seed;
  config.tol = tol;
  if (!fixed_text.empty()) {
    auto inputs = parse_csv_scalars(fixed_text, 4);
    config.fixed_roots = {{inputs[0].value, inputs[1].value, inputs[2].value, inputs[3].value}};
  }
  auto result = sample_campaign(config);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    write_campaign_csv(out, result.rows);
    write_campaign_summary(std::cout, result.summary);
  } else {
    write_campaign_csv(std::cout, result.rows);
    write_campaign_summary(std::cerr, result.summary);
  }
  return result.summary.violation_count == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quartic ratio vector toolkit"};
  app.require_subcommand(1);

  double tol = 0;  // resolved after parsing so the env var can be reported as an input error
  bool as_json = false;

  std::string roots_text, uvw_text, u_text, v_text, c_text, out_path, fixed_text;
  bool force_exact = false, unchecked = false;
  int bounds_n = 0, bounds_k = 0;
  long count = 0;
  std::uint64_t seed = 0;

  auto* fwd = app.add_subcommand("forward", "ratio vector of a quartic given its roots");
  fwd->add_option("--roots", roots_text, "four roots a,b,c,d")->required();
  fwd->add_option("--tol", tol, "bisection tolerance (relative to each root gap)");
  fwd->add_flag("--json", as_json, "JSON output");

  auto* chk = app.add_subcommand("check", "membership verdict for a triple (u,v,w)");
  chk->add_option("--uvw", uvw_text, "triple u,v,w")->required();
  chk->add_flag("--exact", force_exact, "require exact rational inputs");
  chk->add_flag("--json", as_json, "JSON output");

  auto* rec = app.add_subcommand("reconstruct", "canonical quartic from a ratio vector");
  rec->add_option("--uvw", uvw_text, "triple u,v,w")->required();
  rec->add_flag("--unchecked", unchecked, "evaluate the formulas even off the surface");
  rec->add_flag("--json", as_json, "JSON output");

  auto* sw = app.add_subcommand("solve-w", "solve R(u,v,w) = 0 for w over Q(sqrt(D))");
  sw->add_option("--u", u_text, "rational u")->required();
  sw->add_option("--v", v_text, "rational v")->required();
  sw->add_flag("--json", as_json, "JSON output");

  auto* line = app.add_subcommand("line", "the line family (C, 1/2, 1-C)");
  line->add_option("--c", c_text, "rational C")->required();
  line->add_flag("--json", as_json, "JSON output");

  auto* bnd = app.add_subcommand("bounds", "universal ratio bounds for degree n, index k");
  bnd->add_option("--n", bounds_n, "polynomial degree")->required();
  bnd->add_option("--k", bounds_k, "ratio index")->required();
  bnd->add_flag("--json", as_json, "JSON output");

  auto* vid = app.add_subcommand("verify-identities", "machine-check the algebraic identity suite");
  vid->add_flag("--json", as_json, "JSON output");

  auto* smp = app.add_subcommand("sample", "seeded random round-trip campaign, CSV output");
  smp->add_option("--count", count, "number of rows")->required();
  smp->add_option("--seed", seed, "campaign seed")->required();
  smp->add_option("--out", out_path, "CSV output file (default stdout)");
  smp->add_option("--fixed", fixed_text, "bypass sampling with fixed roots a,b,c,d");
  smp->add_option("--tol", tol, "bisection tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (tol == 0) tol = default_tol();
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (fwd->parsed()) return cmd_forward(roots_text, tol, as_json);
    if (chk->parsed()) return cmd_check(uvw_text, force_exact, as_json);
    if (rec->parsed()) return cmd_reconstruct(uvw_text, unchecked, tol, as_json);
    if (sw->parsed()) return cmd_solve_w(u_text, v_text, as_json);
    if (line->parsed()) return cmd_line(c_text, as_json);
    if (bnd->parsed()) return cmd_bounds(bounds_n, bounds_k, as_json);
    if (vid->parsed()) return cmd_verify_identities(as_json);
    if (smp->parsed()) return cmd_sample(count, seed, out_path, fixed_text, tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
