#include "heis/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "heis/constants.hpp"
#include "heis/hardy.hpp"
#include "heis/potentials.hpp"
#include "heis/report.hpp"
#include "heis/resolvent.hpp"
#include "heis/simd.hpp"

namespace heis {
namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kNumerical = 3;
constexpr double kConsistencyTol = 1e-8;

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require_cfg(bool ok, const std::string& msg) {
  if (!ok) throw usage_error(msg);
}

double parse_double_full(const std::string& s) {
  if (s.empty()) throw usage_error("empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw usage_error("cannot parse number: '" + s + "'");
  return v;
}

// fine/coarse pair for a named preset; thorough refines the standard rule
std::pair<CylParams, CylParams> preset_pair(const std::string& preset, int d) {
  CylParams fine;
  if (preset == "fast") {
    fine = light_params(d);
  } else if (preset == "standard") {
    fine = standard_params(d);
  } else {
    fine = standard_params(d);
    fine.r_nodes += 2;
    fine.t_nodes += 2;
    fine.sphere_degree += 2;
  }
  return {fine, coarse_params(fine)};
}

PotentialSpec load_potential(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  require_cfg(first != std::string::npos, "empty potential spec");
  std::string text;
  if (arg[first] == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    require_cfg(static_cast<bool>(in), "cannot read potential file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return parse_potential(nlohmann::json::parse(text));
}

std::vector<int> default_dims(const RunConfig& cfg, std::vector<int> fallback) {
  return cfg.dims.empty() ? std::move(fallback) : cfg.dims;
}

void require_dims_at_least(const std::vector<int>& dims, int floor,
                           const std::string& sub) {
  for (int d : dims)
    require_cfg(d >= floor, sub + " needs d >= " + std::to_string(floor) +
                                ", got " + std::to_string(d));
}

ojson perturbed_to_json(const constants::PerturbedConstants& p) {
  ojson j;
  j["delta"] = p.delta;
  j["b"] = p.b;
  j["b1"] = p.b1;
  j["b2"] = p.b2;
  j["b3"] = p.b3;
  j["gradient_constant"] = report_number(p.K_b);
  ojson m;
  m["value"] = report_number(p.M.value);
  m["gamma1"] = p.M.gamma1;
  m["gamma2"] = p.M.gamma2;
  j["two_budget_constant"] = m;
  ojson kb;
  kb["value"] = report_number(p.kappa_b.value);
  kb["delta"] = p.kappa_b.delta;
  kb["branch_gap"] = p.kappa_b.branch_gap;
  j["uniform_inverse_z"] = kb;
  ojson mu;
  mu["value"] = report_number(p.mu.value);
  mu["delta"] = p.mu.delta;
  mu["branch_gap"] = p.mu.branch_gap;
  j["uniform_two_budget"] = mu;
  j["b3_threshold"] = report_number(p.b3_threshold);
  ojson w;
  w["lower"] = p.window.lower;
  w["upper"] = p.window.upper;
  w["nonempty"] = p.window.nonempty;
  j["aperture_window"] = w;
  return j;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return cfg.out_dir + "/" + name;
}

bool want_json(const RunConfig& cfg) {
  return cfg.format == "json" || cfg.format == "both";
}

bool want_csv(const RunConfig& cfg) {
  return cfg.format == "csv" || cfg.format == "both";
}

int run_table(const RunConfig& cfg) {
  const auto dims = default_dims(cfg, {2, 3, 4, 5, 6});
  require_dims_at_least(dims, 2, "table");
  std::vector<constants::TableRow> rows;
  for (int d : dims)
    rows.push_back({d, constants::delta_star(d), constants::kappa_d(d)});
  write_text_file(out_path(cfg, "constants.csv"), table_csv(rows));
  if (want_json(cfg))
    write_text_file(out_path(cfg, "constants.json"), table_json(rows).dump(2) + "\n");
  return kPass;
}

int run_constants(const RunConfig& cfg) {
  const auto dims = default_dims(cfg, {2});
  require_dims_at_least(dims, 2, "constants");
  ojson arr = ojson::array();
  std::vector<constants::TableRow> rows;
  for (int d : dims) {
    const auto r = constants::make_report(d);
    rows.push_back({d, r.delta_star, r.kappa});
    ojson j;
    j["d"] = d;
    j["delta_star"] = report_number(r.delta_star);
    j["gamma_at_star"] = report_number(r.gamma_at_star);
    j["kappa"] = report_number(r.kappa);
    j["kappa_minimax"] = r.kappa_minimax;
    j["kappa_implicit"] = r.kappa_implicit;
    j["kappa_lower_bound"] = report_number(r.kappa_lower);
    j["K_at_star"] = report_number(r.K_at_star);
    j["K_at_star_minimization"] = r.K_at_star_minimization;
    j["K_at_star_implicit"] = r.K_at_star_implicit;
    j["threshold_identity_residual"] = r.threshold_residual;
    const auto deltas =
        cfg.deltas.empty() ? std::vector<double>{r.delta_star} : cfg.deltas;
    ojson pert = ojson::array();
    for (double del : deltas) {
      require_cfg(del > 0, "delta must be positive");
      // budget showcase: the free limit (recovers the unperturbed
      // constants) and one interior point of every budget range
      pert.push_back(perturbed_to_json(
          constants::make_perturbed(d, del, 0.0, 0.0, 0.0, 0.0)));
      pert.push_back(perturbed_to_json(
          constants::make_perturbed(d, del, 0.3, 0.3, 0.3, 0.1)));
    }
    j["perturbed"] = std::move(pert);
    arr.push_back(std::move(j));
  }
  if (want_json(cfg))
    write_text_file(out_path(cfg, "constants_report.json"),
                    report_envelope("constants", std::move(arr)).dump(2) + "\n");
  if (want_csv(cfg))
    write_text_file(out_path(cfg, "constants.csv"), table_csv(rows));
  return kPass;
}

int run_hardy(const RunConfig& cfg) {
  const auto dims = default_dims(cfg, {2});
  require_dims_at_least(dims, 1, "hardy");
  bool all_pass = true;
  ojson arr = ojson::array();
  for (int d : dims) {
    const auto [fp, cp] = preset_pair(cfg.preset, d);
    const auto fine = make_cylinder_rule(d, fp);
    const auto coarse = make_cylinder_rule(d, cp);
    for (const auto& row : check_family(d, cfg.members, fine, coarse)) {
      ojson j;
      j["d"] = d;
      j["member"] = row.member;
      j["inequality"] = row.inequality;
      j["lhs"] = report_number(row.lhs);
      j["rhs"] = report_number(row.rhs);
      j["quotient"] = report_number(row.quotient);
      j["quad_error"] = row.quad_err;
      j["pass"] = row.pass;
      arr.push_back(std::move(j));
      all_pass = all_pass && row.pass;
    }
  }
  write_text_file(out_path(cfg, "hardy.json"),
                  report_envelope("hardy", std::move(arr)).dump(2) + "\n");
  return all_pass ? kPass : kFail;
}

struct BatchEntry {
  int member = 0;
  cplx lambda;
  double delta = 1;
  std::string theorem = "free";
  std::string potential;  // serialized spec, empty for none
};

std::vector<BatchEntry> load_batch(const std::string& path,
                                   const std::vector<FamilyMember>& family) {
  std::ifstream in(path);
  require_cfg(static_cast<bool>(in), "cannot read batch file: " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  require_cfg(j.is_array(), "batch file must hold a JSON array");
  std::vector<BatchEntry> out;
  for (const auto& item : j) {
    BatchEntry e;
    const auto& mem = item.at("member");
    if (mem.is_number_integer()) {
      e.member = mem.get<int>();
    } else {
      const std::string name = mem.get<std::string>();
      const auto it =
          std::find_if(family.begin(), family.end(),
                       [&](const FamilyMember& f) { return f.name == name; });
      require_cfg(it != family.end(), "unknown member id: " + name);
      e.member = static_cast<int>(it - family.begin());
    }
    require_cfg(e.member >= 0 && e.member < static_cast<int>(family.size()),
                "member index out of range");
    e.lambda = cplx(item.value("lambda1", 0.0), item.value("lambda2", 0.0));
    e.delta = item.value("delta", 1.0);
    require_cfg(e.delta > 0, "batch delta must be positive");
    e.theorem = item.value("theorem", std::string("free"));
    if (item.contains("potential"))
      e.potential = potential_to_json(parse_potential(item.at("potential"))).dump();
    out.push_back(std::move(e));
  }
  return out;
}

// budgets for the perturbed theorems come from certified analytic bounds
// only; an uncertifiable potential is a config error, not a failed verdict
struct Budgets {
  double b = 0, b1 = 0, b2 = 0;
};

Budgets certified_budgets(const PotentialSpec& p, int d,
                          const CylinderRule& rule,
                          const std::string& theorem) {
  const auto bounds = compute_bounds(p, d, rule, 0);
  Budgets out;
  if (theorem == "repulsive") {
    require_cfg(bounds.b2.certified(),
                "no certified radial-growth budget for this potential");
    out.b = *bounds.b2.upper;
  } else if (theorem == "two-budget") {
    require_cfg(bounds.b1.certified() && bounds.b2.certified(),
                "no certified budgets for this potential");
    out.b1 = *bounds.b1.upper;
    out.b2 = *bounds.b2.upper;
  }
  return out;
}

int run_resolvent(const RunConfig& cfg) {
  const auto dims = default_dims(cfg, {2});
  require_dims_at_least(dims, 2, "resolvent");
  require_cfg(cfg.theorem == "free" || cfg.theorem == "repulsive" ||
                  cfg.theorem == "two-budget",
              "unknown theorem: " + cfg.theorem);

  bool all_pass = true;
  ojson blocks = ojson::array();
  std::vector<std::pair<std::string, Verdict>> csv_rows;

  for (int d : dims) {
    const auto [fp, cp] = preset_pair(cfg.preset, d);
    const auto fine = make_cylinder_rule(d, fp);
    const auto coarse = make_cylinder_rule(d, cp);
    const auto family = builtin_family(d, std::max(cfg.members, 1), cfg.seed);

    std::vector<BatchEntry> entries;
    if (!cfg.batch_path.empty()) {
      entries = load_batch(cfg.batch_path, family);
    } else {
      std::string pot;
      if (!cfg.potential.empty())
        pot = potential_to_json(load_potential(cfg.potential)).dump();
      const auto deltas =
          cfg.deltas.empty()
              ? std::vector<double>{constants::delta_star(d), 1.0, 5.0}
              : cfg.deltas;
      for (int m = 0; m < cfg.members; ++m)
        for (double del : deltas) {
          require_cfg(del > 0, "delta must be positive");
          const auto grid =
              cfg.lambdas.empty() ? lambda_grid(del) : cfg.lambdas;
          for (cplx lam : grid)
            entries.push_back({m, lam, del, cfg.theorem, pot});
        }
    }

    // one engine pass per distinct (member, potential) pair
    std::map<std::string, std::shared_ptr<ResolventBase>> bases;
    std::map<std::string, Budgets> budgets;
    std::map<std::string, double> consistency;
    for (const auto& e : entries) {
      require_cfg(e.theorem == "free" || e.theorem == "repulsive" ||
                      e.theorem == "two-budget",
                  "unknown theorem: " + e.theorem);
      require_cfg(e.potential.empty() || e.theorem != "free",
                  "the free verdicts take no potential; pick a perturbed "
                  "theorem");
      const std::string key = std::to_string(e.member) + "|" + e.potential;
      if (bases.count(key)) continue;
      std::shared_ptr<const SlabPotential> slab;
      Budgets bud;
      if (!e.potential.empty()) {
        const auto spec = parse_potential(nlohmann::json::parse(e.potential));
        slab = make_slab_potential(spec);
        bud = certified_budgets(spec, d, fine, e.theorem);
      }
      bases[key] = std::make_shared<ResolventBase>(family[e.member], fine,
                                                   coarse, slab);
      budgets[key] = bud;
      consistency[key] = consistency_residual(*bases[key], e.lambda, cfg.seed);
      all_pass = all_pass && consistency[key] <= kConsistencyTol;
    }

    for (const auto& e : entries) {
      const std::string key = std::to_string(e.member) + "|" + e.potential;
      const auto& base = *bases[key];
      const auto& bud = budgets[key];
      std::vector<Verdict> verdicts;
      if (e.theorem == "free")
        verdicts = verify_free(base, e.lambda, e.delta);
      else if (e.theorem == "repulsive")
        verdicts = verify_repulsive(base, e.lambda, e.delta, bud.b);
      else
        verdicts = verify_two_budget(base, e.lambda, e.delta, bud.b1, bud.b2);

      ojson block;
      block["d"] = d;
      block["member"] = family[e.member].name;
      block["lambda"] = {e.lambda.real(), e.lambda.imag()};
      block["delta"] = e.delta;
      block["theorem"] = e.theorem;
      if (!e.potential.empty())
        block["potential"] = nlohmann::json::parse(e.potential);
      block["consistency_residual"] = consistency[key];
      ojson rows = ojson::array();
      for (const auto& v : verdicts) {
        rows.push_back(verdict_to_json(v, family[e.member].name));
        csv_rows.emplace_back(family[e.member].name, v);
        all_pass = all_pass && v.pass;
      }
      block["verdicts"] = std::move(rows);
      blocks.push_back(std::move(block));
    }
  }

  write_text_file(out_path(cfg, "verdicts.json"),
                  report_envelope("resolvent", std::move(blocks)).dump(2) + "\n");
  if (want_csv(cfg))
    write_text_file(out_path(cfg, "verdicts.csv"), verdict_csv(csv_rows));
  return all_pass ? kPass : kFail;
}

int run_identities(const RunConfig& cfg) {
  const auto dims = default_dims(cfg, {2});
  require_dims_at_least(dims, 2, "identities");
  bool all_pass = true;
  ojson blocks = ojson::array();
  for (int d : dims) {
    const auto [fp, cp] = preset_pair(cfg.preset, d);
    const auto fine = make_cylinder_rule(d, fp);
    const auto coarse = make_cylinder_rule(d, cp);
    const auto family = builtin_family(d, cfg.members, cfg.seed);
    std::shared_ptr<const SlabPotential> slab;
    if (!cfg.potential.empty())
      slab = make_slab_potential(load_potential(cfg.potential));
    const double del = cfg.deltas.empty() ? 1.0 : cfg.deltas[0];
    require_cfg(del > 0, "delta must be positive");
    const auto grid = cfg.lambdas.empty() ? lambda_grid(del) : cfg.lambdas;
    for (const auto& m : family) {
      const ResolventBase base(m, fine, coarse, slab);
      for (cplx lam : grid) {
        ojson block;
        block["d"] = d;
        block["member"] = m.name;
        block["lambda"] = {lam.real(), lam.imag()};
        ojson rows = ojson::array();
        for (const auto& c : multiplier_identities(base, lam, cfg.tol)) {
          rows.push_back(identity_to_json(c, m.name));
          all_pass = all_pass && c.pass;
        }
        block["identities"] = std::move(rows);
        blocks.push_back(std::move(block));
      }
    }
  }
  write_text_file(out_path(cfg, "identities.json"),
                  report_envelope("identities", std::move(blocks)).dump(2) + "\n");
  return all_pass ? kPass : kFail;
}

int run_potential_check(const RunConfig& cfg) {
  const auto dims = default_dims(cfg, {2});
  require_dims_at_least(dims, 2, "potential-check");
  require_cfg(!cfg.potential.empty(), "potential-check needs --potential");
  const PotentialSpec p = load_potential(cfg.potential);
  ojson arr = ojson::array();
  for (int d : dims) {
    const auto [fp, cp] = preset_pair(cfg.preset, d);
    const auto fine = make_cylinder_rule(d, fp);
    const auto bounds = compute_bounds(p, d, fine, cfg.members, cfg.seed);
    ojson j;
    j["d"] = d;
    j["potential"] = potential_to_json(p);
    j["w1d_loc"] = p.w1d_loc(d);
    j["bounds"] = bounds_to_json(bounds);
    j["single_budget"] = thm_v1_to_json(check_thm_V1(bounds, d));
    j["three_budget"] = thm_v2_to_json(check_thm_V2(bounds, d));
    const std::vector<double> rays = {0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
    ojson profs = ojson::array();
    for (const auto& prof :
         radial_repulsivity_profile(p, rays, {0.0, 2.0, 8.0})) {
      ojson pj;
      pj["t"] = prof.t;
      pj["r"] = prof.r;
      pj["drrV"] = prof.drrV;
      pj["max_positive"] = prof.max_positive;
      pj["repulsive"] = prof.repulsive;
      profs.push_back(std::move(pj));
    }
    j["repulsivity"] = std::move(profs);
    arr.push_back(std::move(j));
  }
  write_text_file(out_path(cfg, "potential.json"),
                  report_envelope("potential-check", std::move(arr)).dump(2) + "\n");
  return kPass;
}

int dispatch(const RunConfig& cfg) {
  require_cfg(cfg.preset == "fast" || cfg.preset == "standard" ||
                  cfg.preset == "thorough",
              "unknown quadrature preset: " + cfg.preset);
  require_cfg(cfg.format == "json" || cfg.format == "csv" ||
                  cfg.format == "both",
              "unknown format: " + cfg.format);
  require_cfg(cfg.members >= 1 && cfg.members <= 200,
              "members must lie in [1, 200]");
  require_cfg(cfg.tol > 0, "tolerance must be positive");
  require_cfg(!cfg.out_dir.empty(), "output directory must be set");

  if (cfg.simd == "scalar")
    simd::set_backend(simd::Backend::scalar);
  else if (cfg.simd == "avx2")
    simd::set_backend(simd::Backend::avx2);
  else if (cfg.simd == "auto")
    simd::set_backend(simd::Backend::auto_detect);
  else
    throw usage_error("unknown simd backend: " + cfg.simd);

  write_text_file(out_path(cfg, "run_meta.json"),
                  run_meta({cfg.subcommand}, cfg.seed, cfg.preset).dump(2) + "\n");

  if (cfg.subcommand == "table") return run_table(cfg);
  if (cfg.subcommand == "constants") return run_constants(cfg);
  if (cfg.subcommand == "hardy") return run_hardy(cfg);
  if (cfg.subcommand == "resolvent") return run_resolvent(cfg);
  if (cfg.subcommand == "identities") return run_identities(cfg);
  if (cfg.subcommand == "potential-check") return run_potential_check(cfg);
  throw usage_error("unknown subcommand: " + cfg.subcommand);
}

}  // namespace

int run(const RunConfig& cfg) {
  try {
    return dispatch(cfg);
  } catch (const hypothesis_error& e) {
    std::cerr << "hypothesis violated by the input data: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
}

cplx parse_lambda(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw usage_error("empty spectral parameter");
  if (s.back() != 'i') return {parse_double_full(s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // split before the last sign that does not follow an exponent marker
  size_t split = std::string::npos;
  for (size_t k = 1; k < body.size(); ++k)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E')
      split = k;
  auto unit_or = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double_full(t);
  };
  if (split == std::string::npos) return {0.0, unit_or(body)};
  return {parse_double_full(body.substr(0, split)),
          unit_or(body.substr(split))};
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> out;
  auto push_int = [&](const std::string& t) {
    const double v = parse_double_full(t);
    const int d = static_cast<int>(v);
    if (v != d || d < 1) throw usage_error("bad dimension: '" + t + "'");
    out.push_back(d);
  };
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const double lo = parse_double_full(s.substr(0, dots));
    const double hi = parse_double_full(s.substr(dots + 2));
    if (lo != static_cast<int>(lo) || hi != static_cast<int>(hi) || lo < 1 ||
        hi < lo)
      throw usage_error("bad dimension range: '" + s + "'");
    for (int d = static_cast<int>(lo); d <= static_cast<int>(hi); ++d)
      out.push_back(d);
  } else {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) push_int(tok);
  }
  if (out.empty() || out.size() > 64)
    throw usage_error("bad dimension list: '" + s + "'");
  return out;
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{
      "verification toolkit for Hardy inequalities and uniform resolvent "
      "estimates on the Heisenberg group"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> dim_args, lambda_args;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", dim_args,
                    "dimensions: single value, 2..6 range, or 2,3 list");
    sub->add_option("--delta", cfg.deltas, "aperture list");
    sub->add_option("--lambda", lambda_args,
                    "spectral parameter a+bi (repeatable)");
    sub->add_option("--seed", cfg.seed, "family seed");
    sub->add_option("--quad", cfg.preset, "quadrature preset")
        ->check(CLI::IsMember({"fast", "standard", "thorough"}));
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"json", "csv", "both"}));
    sub->add_option("--members", cfg.members, "family size for batches");
    sub->add_option("--tol", cfg.tol, "identity relative tolerance");
    sub->add_option("--simd", cfg.simd, "kernel backend")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  };

  add_common(app.add_subcommand(
      "table", "aperture/constant table at five decimals plus sidecar"));
  add_common(app.add_subcommand(
      "constants", "full constants report with perturbed variants"));
  add_common(app.add_subcommand("hardy", "weighted inequality family sweep"));
  auto* res = app.add_subcommand(
      "resolvent", "manufactured-solution estimate verdicts");
  add_common(res);
  res->add_option("--batch", cfg.batch_path, "JSON batch file");
  res->add_option("--theorem", cfg.theorem, "estimate set")
      ->check(CLI::IsMember({"free", "repulsive", "two-budget"}));
  res->add_option("--potential", cfg.potential,
                  "potential spec (inline JSON or path)");
  auto* ids =
      app.add_subcommand("identities", "multiplier identity residual batch");
  add_common(ids);
  ids->add_option("--potential", cfg.potential,
                  "potential spec (inline JSON or path)");
  auto* pot = app.add_subcommand("potential-check",
                                 "budget bounds and theorem decisions");
  add_common(pot);
  pot->add_option("--potential", cfg.potential,
                  "potential spec (inline JSON or path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    for (const auto& s : dim_args) {
      const auto parsed = parse_dims(s);
      cfg.dims.insert(cfg.dims.end(), parsed.begin(), parsed.end());
    }
    for (const auto& s : lambda_args) cfg.lambdas.push_back(parse_lambda(s));
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  }
  return run(cfg);
}

}  // namespace heis
