#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hardy/report.hpp"

namespace hardy {

enum class Suite { Main, Kolyada, Compare, Sqrd, Lemmas, All };

std::string_view suite_name(Suite suite);
Suite suite_from_name(std::string_view name);

/// {1, 1.25, 1.5, 1.75, 2, 2.5, 3, 4}
std::vector<double> default_p_grid();

struct SweepOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::vector<double> p_grid = default_p_grid();
  /// When set, each sample draws its own p uniformly from [p_lo, p_hi]
  /// instead of running over p_grid.
  bool random_p = false;
  double p_lo = 1.0;
  double p_hi = 4.0;
  std::size_t max_pieces = 8;
  /// Relative slack allowed on the two-sided bounds.
  double slack = 1e-12;
};

// Randomized cone sweeps. worst_violation is the largest relative excess over
// either bound (negative when every sample sits strictly inside).
VerificationReport sweep_dual_bounds(const SweepOptions& options);
VerificationReport sweep_hardy_bounds(const SweepOptions& options);
VerificationReport sweep_compare_bounds(const SweepOptions& options);
/// ||(H*^2 - H*)g|| against ||H* g|| for random nonnegative (not necessarily
/// monotone) steps g; the left side goes through quadrature.
VerificationReport sweep_sqrd_bounds(const SweepOptions& options);

/// Worst |(H-I)(H*-I)f - f| over 100-point grids; tolerance 1e-10.
VerificationReport sweep_inversion(const SweepOptions& options);
/// At p = 2 both ratios equal 1; tolerance 1e-10.
VerificationReport sweep_isometry(const SweepOptions& options);

/// h(t^{1/p} u) against (1-t) h(0) + t h(u): <= for p <= 2, >= for p >= 2.
VerificationReport check_lemma_tech(double p, std::span<const double> u_grid,
                                    std::span<const double> t_grid);

/// g(s) = s \int_s^\infty |y-1|^{p-2} e^{-y} dy - \int_s^\infty |y-1|^{p-2}(y-1) e^{-y} dy
double g_function(double p, double s);

/// Sign of g on the grid, g(0) = (1 - C_p)/p, and |g(decay_at)| <= 1e-4.
std::vector<VerificationReport> check_g_function(double p, std::span<const double> s_grid,
                                                 double decay_at = 10.0);

/// Both integral identities for h, plus h(0) = C_p.
std::vector<VerificationReport> check_identities(double p, std::span<const double> r_grid);

/// Approach of the f_q / g_q ratios to p-1 and (p-1)^2, and eps ||g_q|| = 1.
std::vector<VerificationReport> check_family_limits(double p);

/// Monotone approach of the k_eps norms to 1 and C_p^{1/p}.
VerificationReport check_keps_convergence(double p, std::span<const double> eps_list);

std::vector<VerificationReport> run_suite(Suite suite, const SweepOptions& options);

}  // namespace hardy
