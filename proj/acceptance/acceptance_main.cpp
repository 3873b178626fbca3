// Acceptance gate: one self-contained check per release criterion, each
// printing a single [PASS]/[FAIL] line with its runtime.  Failures print a
// file:line detail per violated condition and the process exits nonzero.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heis/calculus.hpp"
#include "heis/cli.hpp"
#include "heis/constants.hpp"
#include "heis/family.hpp"
#include "heis/field.hpp"
#include "heis/geometry.hpp"
#include "heis/hardy.hpp"
#include "heis/numerics.hpp"
#include "heis/potentials.hpp"
#include "heis/quadrature.hpp"
#include "heis/resolvent.hpp"

#include "json.hpp"

using namespace heis;

namespace {

int g_failures = 0;

void fail_line(const char* file, int line, const std::string& msg) {
  ++g_failures;
  std::printf("       %s:%d: %s\n", file, line, msg.c_str());
}

#define REQUIRE_A(cond)                                  \
  do {                                                   \
    if (!(cond)) fail_line(__FILE__, __LINE__, #cond);   \
  } while (0)

#define REQUIRE_NEAR(x, ref, tol)                                             \
  do {                                                                        \
    const double x_ = (x), ref_ = (ref), tol_ = (tol);                        \
    if (!(std::abs(x_ - ref_) <= tol_)) {                                     \
      char buf_[160];                                                         \
      std::snprintf(buf_, sizeof buf_, "%s = %.12g, want %.12g +- %.3g", #x,  \
                    x_, ref_, tol_);                                          \
      fail_line(__FILE__, __LINE__, buf_);                                    \
    }                                                                         \
  } while (0)

// ---------------------------------------------------------------- criterion 1

void table_reproduction() {
  struct Ref {
    int d;
    double delta_star, kappa;
  };
  const Ref refs[] = {{2, 0.237340, 5.21337},
                      {3, 0.121514, 2.30737},
                      {4, 0.0817278, 1.47064},
                      {5, 0.0615799, 1.07744},
                      {6, 0.0494043, 0.849645}};
  for (const auto& r : refs) {
    REQUIRE_NEAR(constants::delta_star(r.d), r.delta_star, 1e-5);
    REQUIRE_NEAR(constants::kappa_d(r.d), r.kappa, 1e-5);
  }
}

// ---------------------------------------------------------------- criterion 2

void constant_consistency() {
  for (int d = 2; d <= 12; ++d) {
    const auto r = constants::make_report(d);
    REQUIRE_NEAR(r.kappa, r.kappa_minimax, 1e-9);
    REQUIRE_NEAR(r.kappa, r.kappa_implicit, 1e-9);
    REQUIRE_NEAR(r.kappa_minimax, r.kappa_implicit, 1e-9);
  }
  for (int i = 0; i < 20; ++i) {
    const double del =
        std::exp(std::log(0.05) + i / 19.0 * std::log(10.0 / 0.05));
    for (int d = 2; d <= 12; ++d) {
      const double a = constants::K_d(d, del);
      const double b = constants::K_d_minimization(d, del);
      const double c = constants::K_d_implicit(d, del);
      REQUIRE_NEAR(a, b, 1e-9);
      REQUIRE_NEAR(a, c, 1e-9);
    }
  }
}

// ---------------------------------------------------------------- criterion 3

void bound_checks() {
  for (int d = 2; d <= 50; ++d) {
    const double lower = 4.0 / (d - 1) + 1.0 / ((d - 1.0) * (d - 1.0));
    REQUIRE_A(constants::kappa_d(d) > lower);
    REQUIRE_NEAR(constants::threshold_identity_residual(d), 0.0, 1e-9);
  }
}

// ---------------------------------------------------------------- criterion 4

void oracle_calculus() {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);

  for (int d : {2, 3}) {
    const KoranyiGaugeField rho(d);
    auto sample = [&] {
      HPoint p = HPoint::zero(d);
      do {
        for (int j = 0; j < d; ++j) {
          p.x[j] = coord(rng);
          p.y[j] = coord(rng);
        }
        p.t = coord(rng);
      } while (zmod(p) < 0.3);
      return p;
    };

    for (int it = 0; it < 500; ++it) {
      const HPoint p = sample();
      const double r = zmod(p), g = koranyi_norm(p);
      const auto grad = horizontal_gradient(rho, p);  // exact partial route
      const auto closed = koranyi::horizontal_gradient(p);
      for (int f = 0; f < 2 * d; ++f)
        REQUIRE_NEAR(grad[f].real(), closed[f], 1e-10);
      REQUIRE_NEAR(std::sqrt(horizontal_gradient_sq(rho, p)), r / g, 1e-10);
      REQUIRE_NEAR(koranyi::gradient_norm(p), r / g, 1e-12);
      const double g3 = g * g * g;
      REQUIRE_NEAR(sublaplacian(rho, p).real(), -(2 * d + 1) * r * r / g3,
                   1e-10);
      REQUIRE_NEAR(koranyi::sublaplacian(p), -(2 * d + 1) * r * r / g3, 1e-12);
    }

    // frame stencils: central differences along the exact frame flows halve
    // to at least second order
    auto flow = [&](const HPoint& p, int frame, double s) {
      HPoint q = p;
      if (frame < d) {
        q.x[frame] += s;
        q.t += 2 * p.y[frame] * s;
      } else {
        q.y[frame - d] += s;
        q.t -= 2 * p.x[frame - d] * s;
      }
      return q;
    };
    auto stencil_sublap = [&](const HPoint& p, double h) {
      cplx acc = 0;
      for (int f = 0; f < 2 * d; ++f)
        acc -= (rho.value(flow(p, f, h)) - 2.0 * rho.value(p) +
                rho.value(flow(p, f, -h))) /
               (h * h);
      return acc.real();
    };

    double worst_order = 10.0;
    for (int it = 0; it < 40; ++it) {
      const HPoint p = sample();
      const double exact_grad = apply_field(rho, 0, p).real();
      const double e1 =
          std::abs(apply_field_fd(rho, 0, p, 1e-2).real() - exact_grad);
      const double e2 =
          std::abs(apply_field_fd(rho, 0, p, 5e-3).real() - exact_grad);
      if (e1 > 1e-13 && e2 > 1e-13)
        worst_order = std::min(worst_order, std::log2(e1 / e2));

      const double exact_sub = sublaplacian(rho, p).real();
      const double s1 = std::abs(stencil_sublap(p, 1e-2) - exact_sub);
      const double s2 = std::abs(stencil_sublap(p, 5e-3) - exact_sub);
      if (s1 > 1e-11 && s2 > 1e-11)
        worst_order = std::min(worst_order, std::log2(s1 / s2));
    }
    REQUIRE_A(worst_order >= 1.9);
  }
}

// ---------------------------------------------------------------- criterion 5

void hardy_suite() {
  for (int d : {2, 3}) {
    const auto fine = make_cylinder_rule(d, sweep_params(d));
    const auto coarse = make_cylinder_rule(d, coarse_params(sweep_params(d)));
    const auto rows = check_family(d, 100, fine, coarse);
    REQUIRE_A(rows.size() >= 300);
    for (const auto& row : rows) {
      if (!row.pass) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s / %s: quotient %.8f err %.2g",
                      row.member.c_str(), row.inequality.c_str(), row.quotient,
                      row.quad_err);
        fail_line(__FILE__, __LINE__, buf);
      }
    }
  }
  const auto rule = make_cylinder_rule(2, sweep_params(2));
  REQUIRE_A(best_sharpness(2, rule) >= 0.8);
}

// ---------------------------------------------------------------- criterion 6

void resolvent_suite() {
  const int d = 2;
  const auto fine = make_cylinder_rule(d, standard_params(d));
  const auto coarse = make_cylinder_rule(d, coarse_params(standard_params(d)));
  const auto family = builtin_family(d, 20, 2026);
  const std::vector<double> deltas = {constants::delta_star(d), 1.0, 5.0};

  int verdicts = 0, identities = 0;
  for (const auto& m : family) {
    const ResolventBase base(m, fine, coarse);
    std::vector<cplx> lambdas_seen;
    for (double del : deltas) {
      for (cplx lam : lambda_grid(del)) {
        for (const auto& v : verify_free(base, lam, del)) {
          ++verdicts;
          if (!v.pass) {
            char buf[200];
            std::snprintf(buf, sizeof buf,
                          "%s %s delta=%.4g lambda=(%.3g,%.3g) margin=%.3g",
                          m.name.c_str(), v.inequality.c_str(), del,
                          lam.real(), lam.imag(), v.margin);
            fail_line(__FILE__, __LINE__, buf);
          }
        }
        if (std::find(lambdas_seen.begin(), lambdas_seen.end(), lam) ==
            lambdas_seen.end())
          lambdas_seen.push_back(lam);
      }
    }
    for (cplx lam : lambdas_seen) {
      for (const auto& c : multiplier_identities(base, lam, 1e-5)) {
        ++identities;
        if (!c.pass || (c.applicable && !(c.rel <= 1e-5))) {
          char buf[200];
          std::snprintf(buf, sizeof buf, "%s %s rel=%.3g at (%.3g,%.3g)",
                        m.name.c_str(), c.name.c_str(), c.rel,
                        lam.real(), lam.imag());
          fail_line(__FILE__, __LINE__, buf);
        }
      }
    }
  }
  REQUIRE_A(verdicts == 20 * 3 * 12 * 5);
  REQUIRE_A(identities >= 20 * 24 * 7);
}

// ---------------------------------------------------------------- criterion 7

double grid_scan_min(int d, double del, double b2) {
  const int N = 400;
  std::vector<double> g1s(N), g2s(N);
  for (int i = 0; i < N; ++i) {
    g1s[i] = std::exp(std::log(1e-2) +
                      (std::log(1e2) - std::log(1e-2)) * i / (N - 1.0));
    g2s[i] = (i + 0.5) / N;
  }
  double best = 1e300;
  int bi = 0, bj = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const double v = constants::M_db2_expr(d, del, b2, g1s[i], g2s[j]);
      if (v < best) {
        best = v;
        bi = i;
        bj = j;
      }
    }
  // polish within the winning cell so the scan resolves the cell-size bias
  const double lo1 = g1s[std::max(bi - 1, 0)];
  const double hi1 = g1s[std::min(bi + 1, N - 1)];
  const double lo2 = g2s[std::max(bj - 1, 0)];
  const double hi2 = g2s[std::min(bj + 1, N - 1)];
  double g2 = g2s[bj];
  for (int sweep = 0; sweep < 40; ++sweep) {
    const auto m1 = num::golden_min(
        [&](double x) { return constants::M_db2_expr(d, del, b2, x, g2); },
        lo1, hi1);
    const auto m2 = num::golden_min(
        [&](double y) { return constants::M_db2_expr(d, del, b2, m1.x, y); },
        lo2, hi2);
    g2 = m2.x;
    if (std::abs(m2.fx - best) < 1e-15 * (1 + std::abs(best))) return m2.fx;
    best = m2.fx;
  }
  return best;
}

void perturbed_suite() {
  const int d = 2;
  const auto fine = make_cylinder_rule(d, standard_params(d));
  const auto coarse = make_cylinder_rule(d, coarse_params(standard_params(d)));
  const auto family = builtin_family(d, 20, 2026);
  const std::vector<double> deltas = {constants::delta_star(d), 1.0, 5.0};

  using nlohmann::json;
  const json catalog[] = {
      json{{"form", "power"}, {"coeff", 0.0}, {"exponent", 2.0}},
      json{{"form", "power"}, {"coeff", 0.1}, {"exponent", 2.0}},
      json{{"form", "power"}, {"coeff", -0.05}, {"exponent", 2.0}},
      json{{"form", "gaussian"}, {"coeff", 0.1}, {"rate", 1.0}},
  };

  std::vector<double> b2_values;
  for (const auto& js : catalog) {
    const PotentialSpec spec = parse_potential(js);
    const auto bounds = compute_bounds(spec, d, fine, 0);
    REQUIRE_A(bounds.method == "analytic");
    REQUIRE_A(bounds.b.certified() && bounds.b1.certified() &&
              bounds.b2.certified() && bounds.b3.certified());
    const double b1 = *bounds.b1.upper, b2 = *bounds.b2.upper;
    b2_values.push_back(b2);
    const bool nonneg = b1 == 0.0 && spec.value(1.0, 0.0).real() >= 0;

    const auto slab = make_slab_potential(spec);
    for (const auto& m : family) {
      const ResolventBase base(m, fine, coarse, slab);
      for (double del : deltas)
        for (cplx lam : lambda_grid(del)) {
          if (nonneg)
            for (const auto& v : verify_repulsive(base, lam, del, b2))
              if (!v.pass)
                fail_line(__FILE__, __LINE__,
                          m.name + " repulsive " + v.inequality);
          for (const auto& v : verify_two_budget(base, lam, del, b1, b2))
            if (!v.pass)
              fail_line(__FILE__, __LINE__,
                        m.name + " two-budget " + v.inequality);
        }
    }
  }

  for (double b2 : b2_values)
    for (double del : deltas) {
      const double opt = constants::M_db2(d, del, b2).value;
      REQUIRE_NEAR(grid_scan_min(d, del, b2), opt, 1e-6 * (1 + opt));
    }
}

// ---------------------------------------------------------------- criterion 8

void decision_checks() {
  const int d = 2;
  const double thr = 1.0 / ((d - 1) * constants::kappa_d(d));
  REQUIRE_NEAR(thr, 0.191816, 4e-6);  // five-decimal anchor

  auto with_b = [](double b) {
    PotentialBounds pb;
    pb.method = "analytic";
    pb.b.upper = b;
    pb.b1.upper = pb.b2.upper = pb.b3.upper = 0.0;
    return pb;
  };
  REQUIRE_A(check_thm_V1(with_b(thr - 5e-10), d).met);
  REQUIRE_A(!check_thm_V1(with_b(thr + 5e-10), d).met);

  REQUIRE_NEAR(constants::b3_bound(2, 0, 0), 5.43402, 1e-5);
  const auto w = constants::delta_tilde_window(2, 0, 0, 0.1);
  REQUIRE_NEAR(w.lower, 0.1, 1e-12);
  REQUIRE_NEAR(w.upper, 20.4082, 1e-4);
  REQUIRE_A(w.nonempty);
}

// ---------------------------------------------------------------- criterion 9

void determinism() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() /
                        ("heis-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(root);

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  RunConfig cfg;
  cfg.subcommand = "resolvent";
  cfg.dims = {2};
  cfg.members = 2;
  cfg.deltas = {1.0};
  cfg.preset = "fast";
  cfg.seed = 17;
  cfg.out_dir = (root / "a").string();
  REQUIRE_A(run(cfg) == 0);
  cfg.out_dir = (root / "b").string();
  REQUIRE_A(run(cfg) == 0);
  const std::string va = slurp(root / "a" / "verdicts.json");
  REQUIRE_A(!va.empty());
  REQUIRE_A(va == slurp(root / "b" / "verdicts.json"));

  cfg.subcommand = "identities";
  cfg.tol = 2e-4;  // fast-preset quadrature floor
  cfg.members = 1;
  cfg.out_dir = (root / "c").string();
  REQUIRE_A(run(cfg) == 0);
  cfg.out_dir = (root / "d").string();
  REQUIRE_A(run(cfg) == 0);
  const std::string ia = slurp(root / "c" / "identities.json");
  REQUIRE_A(!ia.empty());
  REQUIRE_A(ia == slurp(root / "d" / "identities.json"));
  fs::remove_all(root);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> body;
    double budget_s;  // 0 = no stated runtime bound
  };
  const std::vector<Criterion> criteria = {
      {"1. aperture/constant table matches at 1e-5", table_reproduction, 1.0},
      {"2. three-route constants agree at 1e-9", constant_consistency, 10.0},
      {"3. lower bound and threshold identity", bound_checks, 0.0},
      {"4. Koranyi oracle calculus and stencil order", oracle_calculus, 0.0},
      {"5. Hardy suite over 100 members, d=2,3", hardy_suite, 0.0},
      {"6. free resolvent verdicts and identities", resolvent_suite, 300.0},
      {"7. perturbed verdicts and two-budget scan", perturbed_suite, 0.0},
      {"8. decision thresholds and spectral window", decision_checks, 0.0},
      {"9. byte-identical reruns", determinism, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    g_failures = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body();
    } catch (const std::exception& e) {
      fail_line(__FILE__, 0, std::string("unexpected exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      ++g_failures;
      std::printf("       runtime %.2f s exceeds the %.0f s budget\n", secs,
                  c.budget_s);
    }
    std::printf("[%s] %s (%.2f s)\n", g_failures == 0 ? "PASS" : "FAIL",
                c.name, secs);
    if (g_failures) ++failed;
  }
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
