// Copyright 2026 The gtkit Authors
// SPDX-License-Identifier: Apache-2.0

// gtkit: build Gelfand-Tsetlin modules and check their identities from the
// command line. Every subcommand writes one JSON report; the exit status is 0
// exactly when every check in it passed.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gtkit/gtkit.hpp"
#include "gtkit/json_io.hpp"

namespace {

using gtkit::io::Json;
namespace io = gtkit::io;

enum ExitCode { kPass = 0, kChecksFailed = 1, kUsage = 2, kInput = 3, kDomain = 4 };

class UsageError : public gtkit::Error {
 public:
  explicit UsageError(const std::string& what) : Error("UsageError", what) {}
};

struct RunConfig {
  std::string command;
  std::string point;   // tableau JSON
  std::string on;      // integral point JSON
  std::string eta;     // refinement as inline JSON
  std::string gen = "E21";
  std::string shuffle = "id";
  std::string suite = "all";
  std::string output;  // empty: stdout
  std::vector<int> weight;
  int k = 1;
  int i = 1;
  int radius = 1;
  int support_radius = 2;
  int relations_radius = 0;
  long max_fact = gtkit::kDefaultMaxFactorial;
  int jobs = 1;
  std::uint64_t seed = 2026;
  int trials = 100;
  long samples = 200;
  bool exhaustive = false;

  Json to_json() const {
    return Json{{"command", command}, {"point", point},         {"on", on},
                {"eta", eta},         {"gen", gen},             {"shuffle", shuffle},
                {"suite", suite},     {"output", output},       {"weight", weight},
                {"k", k},             {"i", i},                 {"radius", radius},
                {"support_radius", support_radius}, {"relations_radius", relations_radius},
                {"max_fact", max_fact},
                {"jobs", jobs},       {"seed", seed},           {"trials", trials},
                {"samples", samples}, {"exhaustive", exhaustive}};
  }
};

class Report {
 public:
  Json result = Json::object();

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    Json c{{"name", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    checks_.push_back(std::move(c));
    pass_ = pass_ && pass;
  }
  bool pass() const { return pass_; }
  const Json& checks() const { return checks_; }

 private:
  Json checks_ = Json::array();
  bool pass_ = true;
};

// ---------------------------------------------------------------------------
// Input

Json read_json_file(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string("missing ") + flag);
  std::ifstream in(path);
  if (!in) throw gtkit::InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse(buf.str(), path);
}

gtkit::Tableau load_point(const RunConfig& cfg) { return io::tableau_from_json(read_json_file(cfg.point, "--point")); }

gtkit::Refinement load_eta(const RunConfig& cfg) {
  if (!cfg.eta.empty()) return io::refinement_from_json(io::parse(cfg.eta, "--eta"));
  if (cfg.point.empty()) throw UsageError("give --point or --eta");
  return gtkit::singularity(load_point(cfg)).eta;
}

/// "id", a JSON one-line array (1-based flat indices), or cycles such as
/// "(45)(67)" or "(4,5)".
gtkit::Permutation parse_shuffle(const std::string& text, const gtkit::Refinement& eta) {
  const int size = eta.num_entries();
  std::vector<int> line(static_cast<std::size_t>(size));
  for (int a = 0; a < size; ++a) line[static_cast<std::size_t>(a)] = a;
  if (text.empty() || text == "id") return gtkit::Permutation::from_one_line(eta, line);
  if (text.front() == '[') {
    const Json j = io::parse(text, "--shuffle");
    if (!j.is_array()) throw gtkit::InputError("--shuffle one-line notation must be an array");
    std::vector<int> one;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw gtkit::InputError("--shuffle entries must be integers");
      one.push_back(x.get<int>() - 1);
    }
    return gtkit::Permutation::from_one_line(eta, one);
  }
  std::vector<std::vector<int>> cycles;
  const bool commas = text.find(',') != std::string::npos;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) cycles.back().push_back(std::stoi(num) - 1);
    num.clear();
  };
  for (char ch : text) {
    if (ch == '(') {
      cycles.emplace_back();
    } else if (ch == ')' || ch == ',') {
      if (cycles.empty()) throw gtkit::InputError("malformed cycle notation '" + text + "'");
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(ch)) && !cycles.empty()) {
      num += ch;
      if (!commas) flush();
    } else if (ch != ' ') {
      throw gtkit::InputError("malformed cycle notation '" + text + "'");
    }
  }
  for (const auto& c : cycles)
    for (std::size_t p = 0; p < c.size(); ++p) {
      const int a = c[p], b = c[(p + 1) % c.size()];
      if (a < 0 || a >= size || b < 0 || b >= size) throw gtkit::InputError("cycle entry out of range in '" + text + "'");
      line[static_cast<std::size_t>(a)] = b;
    }
  return gtkit::Permutation::from_one_line(eta, line);
}

// ---------------------------------------------------------------------------
// Output helpers

Json matrix_json(const gtkit::Matrix<gtkit::Rational>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(gtkit::format_rational(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json integer_tableau_json(int n, const std::vector<int>& flat) {
  Json rows = Json::array();
  for (int k = n; k >= 1; --k) {
    Json row = Json::array();
    for (int i = 1; i <= k; ++i) row.push_back(flat[static_cast<std::size_t>(gtkit::VarIndex{k, i}.flat())]);
    rows.push_back(row);
  }
  return rows;
}

Json permutation_json(const gtkit::Permutation& s) {
  return Json{{"one_line", io::to_json(s)}, {"cycles", s.to_cycle_notation()}};
}

Json derived_json(const gtkit::DerivedTableau& d) {
  return Json{{"z", io::to_json(d.z)}, {"nu", permutation_json(d.nu)}, {"label", d.to_string()}};
}

template <class T>
Json fractions_json(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(io::to_json(x));
  return out;
}

void check_generator(gtkit::Generator g, int n) {
  if (g.a < 1 || g.b < 1 || g.a > n || g.b > n)
    throw UsageError("generator " + g.to_string() + " is out of range for gl(" + std::to_string(n) + ")");
}

/// E_ab on the lattice; non-adjacent generators through commutators.
gtkit::DerivedVector lattice_act(const gtkit::Lattice& lat, int a, int b, const gtkit::DerivedVector& w) {
  const gtkit::Generator g{a, b};
  if (g.is_canonical()) return lat.act(g, w);
  const int c = a < b ? a + 1 : a - 1;
  return lat.act(gtkit::Generator{a, c}, lattice_act(lat, c, b, w)) - lattice_act(lat, c, b, lat.act(gtkit::Generator{a, c}, w));
}

// ---------------------------------------------------------------------------
// Subcommands

void run_vlambda(const RunConfig& cfg, Report& rep) {
  const auto m = gtkit::FinDimModule::build(cfg.weight);
  const int n = m.rank();
  Json basis = Json::array();
  bool standard = true;
  for (const auto& b : m.basis()) {
    basis.push_back(integer_tableau_json(n, b));
    standard = standard && gtkit::Tableau::from_integers(n, b).is_standard();
  }
  Json matrices = Json::object();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) matrices[gtkit::Generator{a, b}.to_string()] = matrix_json(m.E(a, b));
  const gtkit::Integer weyl = gtkit::weyl_dimension(cfg.weight);
  rep.result = Json{{"weight", cfg.weight},
                    {"rank", n},
                    {"dimension", m.dimension()},
                    {"basis", basis},
                    {"matrices", matrices}};
  rep.check("dimension_matches_weyl", gtkit::Integer(static_cast<unsigned long>(m.dimension())) == weyl,
            "Weyl dimension " + weyl.get_str());
  rep.check("basis_standard", standard);
}

void run_verify_findim(const RunConfig& cfg, Report& rep) {
  const auto m = gtkit::FinDimModule::build(cfg.weight);
  const int n = m.rank();
  const gtkit::Integer weyl = gtkit::weyl_dimension(cfg.weight);
  Json failed = Json::array();
  long relations = 0;
  for (const auto& r : gtkit::verify_findim_relations(m)) {
    ++relations;
    if (!r.ok) failed.push_back(r.relation);
  }
  Json central = Json::array();
  bool all_diagonal = true, all_gamma = true;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) {
      const auto c = m.central_element(k, i);
      const gtkit::Polynomial gamma = gtkit::gamma_poly(k, i);
      bool gamma_ok = true;
      for (std::size_t j = 0; j < m.dimension(); ++j) {
        const auto v = gtkit::Tableau::from_integers(n, m.basis()[j]);
        if (!(gtkit::evaluate(gamma, v.entries) == gtkit::ParamFraction(c(j, j)))) gamma_ok = false;
      }
      const bool diagonal = c.is_diagonal();
      all_diagonal = all_diagonal && diagonal;
      all_gamma = all_gamma && gamma_ok;
      central.push_back(Json{{"k", k}, {"i", i}, {"diagonal", diagonal}, {"eigenvalues_match_gamma", gamma_ok}});
    }
  rep.result = Json{{"weight", cfg.weight},
                    {"dimension", m.dimension()},
                    {"weyl_dimension", weyl.get_str()},
                    {"relations_checked", relations},
                    {"relations_failed", failed},
                    {"central_elements", central}};
  rep.check("dimension_matches_weyl", gtkit::Integer(static_cast<unsigned long>(m.dimension())) == weyl);
  rep.check("commutators", failed.empty(), failed.empty() ? "" : failed[0].get<std::string>());
  rep.check("central_diagonal", all_diagonal);
  rep.check("central_eigenvalues", all_gamma);
}

void run_gamma(const RunConfig& cfg, Report& rep) {
  if (cfg.i < 1 || cfg.i > cfg.k || cfg.k > gtkit::kMaxRank) throw UsageError("gamma needs 1 <= i <= k <= 5");
  const gtkit::Polynomial p = gtkit::gamma_poly(cfg.k, cfg.i);
  bool symmetric = true;
  for (int j = 1; j < cfg.k; ++j) {
    std::vector<int> image(gtkit::kMaxVars);
    for (int a = 0; a < gtkit::kMaxVars; ++a) image[static_cast<std::size_t>(a)] = a;
    std::swap(image[static_cast<std::size_t>(gtkit::VarIndex{cfg.k, j}.flat())],
              image[static_cast<std::size_t>(gtkit::VarIndex{cfg.k, j + 1}.flat())]);
    symmetric = symmetric && p.rename(image) == p;
  }
  rep.result = Json{{"k", cfg.k}, {"i", cfg.i}, {"polynomial", io::to_json(p)}, {"text", p.to_string(gtkit::var_name)}};
  if (!cfg.point.empty()) {
    const auto v = load_point(cfg);
    if (v.n < cfg.k) throw UsageError("the point has rank below k");
    const gtkit::ParamFraction value = gtkit::evaluate(p, v.entries);
    rep.result["value"] = io::to_json(value);
    rep.result["value_text"] = value.to_string();
  }
  rep.check("symmetric_in_row_k", symmetric);
}

void run_singularity(const RunConfig& cfg, Report& rep) {
  const auto v = load_point(cfg);
  const auto prof = gtkit::singularity(v);
  Json comps = Json::array();
  for (const auto& row : prof.components) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c);
    comps.push_back(r);
  }
  const auto norm = gtkit::normalize(v);
  rep.result = Json{{"point", io::to_json(v)},
                    {"eta", io::to_json(prof.eta)},
                    {"eta_text", prof.eta.to_string()},
                    {"components", comps},
                    {"normal_form", gtkit::is_normal_form(v)},
                    {"fully_critical", gtkit::is_fully_critical(v)},
                    {"normalization",
                     Json{{"sigma", permutation_json(norm.sigma)},
                          {"normal", io::to_json(norm.normal)},
                          {"shift", io::to_json(norm.shift)},
                          {"critical", io::to_json(norm.critical)}}}};
  rep.check("normal_form_of_normalization", gtkit::is_normal_form(norm.normal));
  rep.check("critical_point_of_normalization", gtkit::is_fully_critical(norm.critical) &&
                                                   gtkit::singularity(norm.critical).eta == prof.eta);
}

void run_derived(const RunConfig& cfg, Report& rep) {
  const auto eta = load_eta(cfg);
  Json entries = Json::array();
  long total = 0;
  bool counts = true, valid = true;
  for (const auto& z : gtkit::normal_points(eta, cfg.radius)) {
    const auto eps = gtkit::stabilizer_refinement(z, eta);
    const auto sh = gtkit::shuffles(eta, eps);
    Json list = Json::array();
    for (const auto& s : sh) {
      list.push_back(permutation_json(s));
      valid = valid && gtkit::is_shuffle(s, eps);
    }
    const gtkit::Rational mult = eta.factorial() / eps.factorial();
    counts = counts && mult == gtkit::Rational(static_cast<long>(sh.size()));
    total += static_cast<long>(sh.size());
    entries.push_back(Json{{"z", io::to_json(z)}, {"eps", io::to_json(eps)}, {"shuffles", list}});
  }
  rep.result = Json{{"eta", io::to_json(eta)},
                    {"radius", cfg.radius},
                    {"points", entries.size()},
                    {"derived_tableaux", total},
                    {"entries", entries}};
  rep.check("shuffle_counts", counts, "each z carries eta!/eps(z)! shuffles");
  rep.check("shuffles_increasing_on_eps_blocks", valid);
}

void run_act(const RunConfig& cfg, Report& rep) {
  const auto eta = load_eta(cfg);
  const int n = eta.rank();
  const auto z = io::integral_point_from_json(read_json_file(cfg.on, "--on"));
  if (z.rank() != n) throw gtkit::InputError("--on has rank " + std::to_string(z.rank()) + ", expected " + std::to_string(n));
  if (!gtkit::in_normal_form(z, eta)) throw gtkit::NotInNormalForm("z = " + z.to_string() + " is not in N_eta");
  const auto nu = parse_shuffle(cfg.shuffle, eta);
  const auto eps = gtkit::stabilizer_refinement(z, eta);
  if (!gtkit::is_shuffle(nu, eps))
    throw gtkit::NotInNormalForm(nu.to_cycle_notation() + " is not a shuffle of eps(z) = " + eps.to_string());
  const auto g = gtkit::parse_generator(cfg.gen);
  check_generator(g, n);
  const auto table = gtkit::DualBasisTable::build(eta, cfg.max_fact);
  const gtkit::Lattice lat(eta, table);
  const gtkit::DerivedTableau source{z, nu};
  rep.result = Json{{"eta", io::to_json(eta)}, {"generator", g.to_string()}, {"source", derived_json(source)}};
  gtkit::DerivedVector image;
  try {
    image = lattice_act(lat, g.a, g.b, gtkit::DerivedVector::basis(source));
  } catch (const gtkit::LatticeViolation& e) {
    rep.check("coefficients_in_B_eta", false, e.what());
    return;
  }
  Json terms = Json::array();
  bool in_b = true;
  for (const auto& [d, c] : image.terms()) {
    const bool ok = gtkit::in_B_eta(c, eta);
    in_b = in_b && ok;
    terms.push_back(Json{{"target", derived_json(d)}, {"coefficient", io::to_json(c)}, {"text", c.to_string()}, {"in_B_eta", ok}});
  }
  rep.result["image"] = terms;
  if (!cfg.point.empty()) {
    const auto v = load_point(cfg);
    const gtkit::EvaluatedModule m(lat, v);
    const auto ev = m.act_any(g.a, g.b, gtkit::EvaluatedVector::basis(source));
    Json eterms = Json::array();
    for (const auto& [d, c] : ev.terms())
      eterms.push_back(Json{{"target", derived_json(d)}, {"value", io::to_json(c)}, {"text", c.to_string()}});
    rep.result["evaluated_at"] = io::to_json(v);
    rep.result["evaluated_image"] = eterms;
  }
  rep.check("coefficients_in_B_eta", in_b);
}

Json support_json(const gtkit::SupportReport& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries)
    entries.push_back(Json{{"z", io::to_json(e.z)},
                           {"eps", io::to_json(e.eps)},
                           {"multiplicity", e.multiplicity},
                           {"derived_count", e.derived_count},
                           {"fingerprint", fractions_json(e.fingerprint)}});
  return Json{{"eta", io::to_json(s.eta)}, {"characters", s.entries.size()}, {"entries", entries}};
}

void run_support(const RunConfig& cfg, Report& rep) {
  const auto v = load_point(cfg);
  const auto s = gtkit::support_window(v, cfg.radius);
  rep.result = support_json(s);
  rep.result["radius"] = cfg.radius;
  rep.check("multiplicities_equal_shuffle_counts", s.multiplicities_consistent);
  rep.check("fingerprints_distinct", s.fingerprints_distinct);
}

void run_certify(const RunConfig& cfg, Report& rep) {
  static const std::vector<std::string> kSuites = {"all", "closure", "relations", "gamma", "support", "degeneration"};
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end()) throw UsageError("unknown suite " + cfg.suite);
  auto want = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };
  const auto v = load_point(cfg);
  if (!gtkit::is_fully_critical(v)) throw gtkit::NotInNormalForm("point " + v.to_string() + " is not fully critical");
  const auto eta = gtkit::singularity(v).eta;
  const auto table = gtkit::DualBasisTable::build(eta, cfg.max_fact);
  const auto points = gtkit::normal_points(eta, cfg.radius);
  rep.result = Json{{"eta", io::to_json(eta)}, {"radius", cfg.radius}, {"window_points", points.size()}};

  if (want("closure")) {
    const auto c = gtkit::certify_closure(eta, table, cfg.radius, cfg.jobs);
    rep.result["closure"] = Json{{"applications", c.applications}, {"coefficients", c.coefficients}, {"violations", c.violations}};
    rep.check("lattice_closure", c.ok(), c.first_violation);
  }
  if (want("relations")) {
    // Serre relations reach three steps past the window, so this suite gets its own radius.
    const auto points = gtkit::normal_points(eta, cfg.relations_radius);
    std::vector<long> checked(points.size()), failed(points.size());
    std::vector<std::string> first(points.size());
    std::vector<std::unique_ptr<gtkit::Lattice>> lats(static_cast<std::size_t>(cfg.jobs));
    std::vector<std::unique_ptr<gtkit::EvaluatedModule>> mods(static_cast<std::size_t>(cfg.jobs));
    gtkit::parallel_for(cfg.jobs, points.size(), [&](int w, std::size_t idx) {
      auto& m = mods[static_cast<std::size_t>(w)];
      if (!m) {
        lats[static_cast<std::size_t>(w)] = std::make_unique<gtkit::Lattice>(eta, table);
        m = std::make_unique<gtkit::EvaluatedModule>(*lats[static_cast<std::size_t>(w)], v);
      }
      for (const auto& d : gtkit::derived_tableaux(eta, points[idx]))
        for (const auto& r : gtkit::verify_relations(*m, gtkit::EvaluatedVector::basis(d))) {
          ++checked[idx];
          if (!r.ok && failed[idx]++ == 0) first[idx] = d.to_string() + " " + r.relation;
        }
      m->clear_cache();
      lats[static_cast<std::size_t>(w)]->clear_cache();
    });
    long total = 0, bad = 0;
    std::string first_failure;
    for (std::size_t p = 0; p < points.size(); ++p) {
      total += checked[p];
      if (bad == 0 && failed[p] != 0) first_failure = first[p];
      bad += failed[p];
    }
    rep.result["relations"] = Json{{"radius", cfg.relations_radius}, {"checked", total}, {"failed", bad}};
    rep.check("module_relations", bad == 0, first_failure);
  }
  if (want("gamma")) {
    const gtkit::GammaEngine engine(table);
    const int n = eta.rank();
    std::vector<int> max_exp(points.size());
    std::vector<std::string> first(points.size());
    gtkit::parallel_for(cfg.jobs, points.size(), [&](int, std::size_t idx) {
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i) {
          const auto a = engine.action(k, i, v, points[idx]);
          for (int e : a.min_exponent) max_exp[idx] = std::max(max_exp[idx], e);
          if (!a.nilpotent_within_bound && first[idx].empty())
            first[idx] = "c" + std::to_string(k) + std::to_string(i) + " at z = " + points[idx].to_string();
        }
    });
    int overall = 0;
    std::string first_failure;
    for (std::size_t p = 0; p < points.size(); ++p) {
      overall = std::max(overall, max_exp[p]);
      if (first_failure.empty()) first_failure = first[p];
    }
    rep.result["gamma"] = Json{{"max_min_exponent", overall}, {"bound", "l(nu) + 1"}};
    rep.check("gamma_nilpotency", first_failure.empty(), first_failure);
  }
  if (want("support")) {
    const auto s = gtkit::support_window(v, cfg.support_radius);
    rep.result["support"] = Json{{"radius", cfg.support_radius}, {"characters", s.entries.size()}};
    rep.check("multiplicities_equal_shuffle_counts", s.multiplicities_consistent);
    rep.check("fingerprints_distinct", s.fingerprints_distinct);
  }
  if (want("degeneration")) {
    if (eta.is_trivial()) {
      const gtkit::Lattice lat(eta, table);
      const gtkit::EvaluatedModule m(lat, v);
      const auto d = gtkit::compare_with_generic(m, cfg.radius);
      rep.result["degeneration"] = Json{{"compared", d.compared}, {"mismatches", d.mismatches}};
      rep.check("generic_degeneration", d.ok(), d.first_mismatch);
    } else {
      rep.result["degeneration"] = Json{{"skipped", "singularity is not trivial"}};
    }
  }
}

void run_verify_identities(const RunConfig& cfg, Report& rep) {
  std::vector<gtkit::Refinement> etas;
  if (cfg.exhaustive) {
    etas = gtkit::refinements_up_to(4, cfg.max_fact);
  } else {
    for (const auto& eta : gtkit::representative_parabolics())
      if (eta.factorial() <= cfg.max_fact) etas.push_back(eta);
  }
  std::vector<std::vector<gtkit::IdentityReport>> per(etas.size());
  gtkit::parallel_for(cfg.jobs, etas.size(), [&](int, std::size_t idx) {
    gtkit::Rng rng(cfg.seed + idx);
    const auto table = gtkit::DualBasisTable::build(etas[idx], cfg.max_fact);
    per[idx] = gtkit::verify_identities(etas[idx], rng, cfg.trials, &table);
    per[idx].push_back(gtkit::verify_d_coefficients(table, rng, cfg.samples));
    const auto cert = gtkit::certify(table);
    per[idx].push_back({"dual_basis_certificate", etas[idx].to_string(), 1, cert.ok() ? 1 : 0, cert.first_failure});
  });
  Json refinements = Json::array(), reports = Json::array();
  for (std::size_t idx = 0; idx < etas.size(); ++idx) {
    refinements.push_back(io::to_json(etas[idx]));
    for (const auto& r : per[idx]) {
      reports.push_back(Json{{"identity", r.name},
                             {"refinement", r.refinement},
                             {"trials", r.trials},
                             {"passed", r.passed},
                             {"status", r.ok() ? "pass" : "fail"},
                             {"counterexample", r.counterexample}});
      rep.check(r.name + " " + r.refinement, r.ok(), r.counterexample);
    }
  }
  rep.result = Json{{"refinements", refinements}, {"reports", reports}};
}

// ---------------------------------------------------------------------------

int emit(const RunConfig& cfg, const Json& report) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(cfg.output);
  out << text;
  if (!out) {
    std::cerr << "gtkit: cannot write " << cfg.output << "\n";
    return 1;
  }
  return 0;
}

int run(RunConfig cfg) {
  Json report{{"tool", "gtkit"}, {"version", gtkit::kVersion}};
  Report rep;
  int code = kPass;
  try {
    if (cfg.radius < 0 || cfg.support_radius < 0 || cfg.relations_radius < 0) throw UsageError("radius must be >= 0");
    if (cfg.max_fact < 1) throw UsageError("--max-fact must be >= 1");
    if (cfg.jobs < 1) throw UsageError("--jobs must be >= 1");
    if (cfg.command == "vlambda") run_vlambda(cfg, rep);
    else if (cfg.command == "verify-findim") run_verify_findim(cfg, rep);
    else if (cfg.command == "gamma") run_gamma(cfg, rep);
    else if (cfg.command == "singularity") run_singularity(cfg, rep);
    else if (cfg.command == "derived") run_derived(cfg, rep);
    else if (cfg.command == "act") run_act(cfg, rep);
    else if (cfg.command == "support") run_support(cfg, rep);
    else if (cfg.command == "certify") run_certify(cfg, rep);
    else if (cfg.command == "verify-identities") run_verify_identities(cfg, rep);
    code = rep.pass() ? kPass : kChecksFailed;
  } catch (const UsageError& e) {
    report["error"] = Json{{"name", e.name()}, {"message", e.what()}};
    code = kUsage;
  } catch (const gtkit::InputError& e) {
    report["error"] = Json{{"name", e.name()}, {"message", e.what()}};
    code = kInput;
  } catch (const gtkit::Error& e) {
    report["error"] = Json{{"name", e.name()}, {"message", e.what()}};
    code = kDomain;
  } catch (const Json::exception& e) {
    report["error"] = Json{{"name", "InputError"}, {"message", e.what()}};
    code = kInput;
  } catch (const std::invalid_argument& e) {
    report["error"] = Json{{"name", "InvalidArgument"}, {"message", e.what()}};
    code = kInput;
  }
  report["config"] = cfg.to_json();
  report["result"] = rep.result;
  report["checks"] = rep.checks();
  report["pass"] = code == kPass;
  if (report.contains("error")) std::cerr << "gtkit: " << report["error"]["name"].get<std::string>() << ": "
                                          << report["error"]["message"].get<std::string>() << "\n";
  if (emit(cfg, report) != 0 && code == kPass) code = kChecksFailed;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Gelfand-Tsetlin modules for gl(n): construction and exact verification"};
  app.require_subcommand(1);
  app.fallthrough();
  try {
    cfg.max_fact = gtkit::max_factorial_from_env();
  } catch (const std::invalid_argument& e) {
    std::cerr << "gtkit: " << e.what() << "\n";
    return kUsage;
  }
  app.add_option("-o,--output,--emit", cfg.output, "Write the JSON report here instead of stdout");
  app.add_option("--seed", cfg.seed, "Seed for randomized trials")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  app.add_option("--max-fact", cfg.max_fact, "Bound on eta! (default: GTKIT_MAX_FACT or 24)")->capture_default_str();

  auto* vl = app.add_subcommand("vlambda", "Basis and E_ab matrices of V(lambda)");
  vl->add_option("--weight", cfg.weight, "Dominant weight, e.g. 2,1,0")->delimiter(',')->required();
  auto* vf = app.add_subcommand("verify-findim", "Check V(lambda): Weyl dimension, commutators, Gamma action");
  vf->add_option("--weight", cfg.weight, "Dominant weight, e.g. 2,1,0")->delimiter(',')->required();
  auto* ga = app.add_subcommand("gamma", "The polynomial gamma_{k,i}");
  ga->add_option("--k", cfg.k, "Row k, 1 <= k <= n")->required();
  ga->add_option("--i", cfg.i, "Degree i, 1 <= i <= k")->required();
  ga->add_option("--point", cfg.point, "Evaluate at this tableau (JSON)");
  auto* si = app.add_subcommand("singularity", "Singularity, normal form and critical point of a tableau");
  si->add_option("--point", cfg.point, "Tableau JSON")->required();
  auto* de = app.add_subcommand("derived", "Derived tableaux D_nu T(z) on a window");
  de->add_option("--point", cfg.point, "Tableau JSON (its singularity is used)");
  de->add_option("--eta", cfg.eta, "Refinement as JSON, e.g. [[1],[2],[1,1,1]]");
  de->add_option("--radius", cfg.radius, "Window radius around 0")->capture_default_str();
  auto* ac = app.add_subcommand("act", "Apply E_ab to a derived tableau");
  ac->add_option("--gen", cfg.gen, "Generator, e.g. E21")->capture_default_str();
  ac->add_option("--on", cfg.on, "Integral point z (JSON)")->required();
  ac->add_option("--shuffle", cfg.shuffle, "nu: id, cycles like (45), or a one-line array")->capture_default_str();
  ac->add_option("--point", cfg.point, "Tableau JSON; also evaluates at it when fully critical");
  ac->add_option("--eta", cfg.eta, "Refinement as JSON");
  auto* su = app.add_subcommand("support", "Characters and multiplicities of V(T(v)) on a window");
  su->add_option("--point", cfg.point, "Fully critical tableau JSON")->required();
  int support_radius = 2;
  su->add_option("--radius", support_radius, "Window radius around 0")->capture_default_str();
  auto* ce = app.add_subcommand("certify", "Closure, relations, Gamma nilpotency, support and degeneration checks");
  ce->add_option("--point", cfg.point, "Fully critical tableau JSON")->required();
  ce->add_option("--suite", cfg.suite, "all|closure|relations|gamma|support|degeneration")->capture_default_str();
  ce->add_option("--radius", cfg.radius, "Window radius for the action checks")->capture_default_str();
  ce->add_option("--support-radius", cfg.support_radius, "Window radius for the support suite")->capture_default_str();
  ce->add_option("--relations-radius", cfg.relations_radius, "Window radius for the relations suite")->capture_default_str();
  auto* vi = app.add_subcommand("verify-identities", "Divided-difference identities and dual bases");
  vi->add_option("--trials", cfg.trials, "Random trials per identity")->capture_default_str();
  vi->add_option("--samples", cfg.samples, "Sampled triples for the d-coefficient check")->capture_default_str();
  vi->add_flag("--exhaustive", cfg.exhaustive, "Every refinement of rank <= 4 instead of one per block shape");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "support") cfg.radius = support_radius;
  return run(cfg);
}
