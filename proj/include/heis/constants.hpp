#pragma once

// Closed-form and optimization routes to every constant in the resolvent
// estimates.  Each quantity with independent characterizations exposes all
// of them, so agreement between routes is a checkable statement rather than
// a tautology:
//   K_d(delta)   cubic-root closed form / direct minimization / implicit root
//   kappa_d      branch crossing / minimax / single implicit equation
// Perturbed variants carry the subordination strengths of the potential.

#include <vector>

namespace heis::constants {

// Positive root of sqrt(delta) g^3 + (4d-3) g^2 - (1-b^2)(d-1)^2 = 0.
// delta = 0 degenerates to (d-1) sqrt((1-b^2)/(4d-3)).
double gamma_delta(int d, double delta, double b = 0.0);

// gradient bound inside the cone: three routes plus the raw expression
double K_d(int d, double delta);              // (d-1)/gamma_delta^2
double K_d_minimization(int d, double delta); // golden search over gamma
double K_d_implicit(int d, double delta);     // root in K of the rescaled cubic
double K_d_expr(int d, double delta, double gamma);

// perturbed versions; throw std::domain_error unless 0 <= b < 1
double K_db(int d, double delta, double b);
double K_db_minimization(int d, double delta, double b);
double K_db_expr(int d, double delta, double b, double gamma);

// cone opening at which the two uniform branches cross
double delta_star(int d);
// the uniform weighted-resolvent constant and its alternates
double kappa_d(int d);          // (1 + 1/delta_star) / (d-1)^2
double kappa_d_minimax(int d);  // golden search on the max of the branches
double kappa_d_implicit(int d); // unique root of the single implicit equation
double kappa_lower_bound(int d);  // 4/(d-1) + 1/(d-1)^2, strictly below kappa_d

struct Crossing {
  double delta = 0;
  double value = 0;
  double branch_gap = 0;  // |first - second| at delta
};

// uniform constant for nonnegative potentials with radial growth bound b
Crossing kappa_db(int d, double b);

struct Mdb2Result {
  double value = 0;
  double gamma1 = 0;
  double gamma2 = 0;
};

// double optimization for sign-indefinite real potentials
Mdb2Result M_db2(int d, double delta, double b2);
double M_db2_expr(int d, double delta, double b2, double gamma1, double gamma2);

// uniform constant for real potentials with strengths (b1, b2)
Crossing mu_db(int d, double b1, double b2);

// admissible imaginary strength for complex potentials
double b3_bound(int d, double b1, double b2);            // A + sqrt(A^2 + C)
double b3_window_threshold(int d, double b1, double b2); // -A + sqrt(A^2 + C)

struct DeltaWindow {
  double lower = 0;
  double upper = 0;
  bool nonempty = false;
};

// admissible cone openings for the complex-potential argument;
// b3 = 0 is rejected as degenerate
DeltaWindow delta_tilde_window(int d, double b1, double b2, double b3);

// residual of the threshold identity satisfied by c = 1/((d-1) kappa_d)
double threshold_identity_residual(int d);

// every perturbed constant at one (dimension, aperture, budget) tuple;
// b3 = 0 degenerates the spectral window to all of (0, inf)
struct PerturbedConstants {
  int d = 0;
  double delta = 0;
  double b = 0, b1 = 0, b2 = 0, b3 = 0;
  double K_b = 0;         // budgeted gradient constant at delta
  Mdb2Result M;           // two-budget constant with its argmin
  Crossing kappa_b;       // budgeted uniform inverse-z constant
  Crossing mu;            // two-budget uniform constant
  double b3_threshold = 0;
  DeltaWindow window;
};

PerturbedConstants make_perturbed(int d, double delta, double b, double b1,
                                  double b2, double b3);

struct TableRow {
  int d = 0;
  double delta_star = 0;
  double kappa = 0;
};

// computed rows for d = 2..6
std::vector<TableRow> table_rows();

struct ConstantsReport {
  int d = 0;
  double delta_star = 0;
  double gamma_at_star = 0;
  double kappa = 0;
  double kappa_minimax = 0;
  double kappa_implicit = 0;
  double kappa_lower = 0;
  double K_at_star = 0;
  double K_at_star_minimization = 0;
  double K_at_star_implicit = 0;
  double threshold_residual = 0;
};

ConstantsReport make_report(int d);

}  // namespace heis::constants
