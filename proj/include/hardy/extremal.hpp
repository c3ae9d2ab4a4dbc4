#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hardy/cone.hpp"

namespace hardy {

enum class SearchMode { Sup, Inf };

std::string_view mode_name(SearchMode mode);
SearchMode mode_from_name(std::string_view name);

struct TracePoint {
  std::size_t iteration = 0;
  double ratio = 0.0;
};

struct SearchOptions {
  std::size_t pieces = 8;
  std::size_t budget = 5000;  ///< objective evaluations per restart
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
};

struct SearchResult {
  double p = 0.0;
  SearchMode mode = SearchMode::Sup;
  double best_ratio = 0.0;
  StepFunction best_function{{1.0}, {1.0}};
  std::size_t iterations = 0;
  /// Best-so-far ratio of the winning restart, recorded at each improvement.
  std::vector<TracePoint> trace;
  /// Most extreme ratio over every evaluated iterate of every restart (the
  /// largest in sup mode, the smallest in inf mode).
  double extreme_ratio = 0.0;
  std::size_t winning_restart = 0;
};

/// Maps free coordinates (2N reals) onto an N-level cone step function:
/// a_n = sum_{k<=n} e^{x_k}, ln b_n = y_1 - sum_{2<=k<=n} y_k^2.
StepFunction decode_cone(std::span<const double> coords);

/// ||(H*-I)f||_p / ||f||_p for a cone step function.
double dual_ratio(const StepFunction& f, double p);

/// Multi-start Nelder-Mead over the cone, extremising ||(H*-I)f||_p/||f||_p.
/// Deterministic for a fixed (seed, budget, pieces, restarts).
SearchResult search(double p, SearchMode mode, const SearchOptions& options = {});

struct FamilyScan {
  double p = 0.0;
  std::vector<double> q_list;
  /// ||(H*-I) f_q||_p / ||f_q||_p, tends to p - 1.
  std::vector<double> ratios_test1;
  /// ||(H*-I)(f_q - g_q)||_p / ||(H-I)(f_q - g_q)||_p, tends to (p - 1)^2.
  std::vector<double> ratios_test2;
  /// eps ||g_q||_p with eps = q^{(p-1)/p} (p-q)^{1/p}; identically 1.
  std::vector<double> eps_check;
};

/// Closed-form ratios along the g_q / f_q family; every q must lie in (1, p).
FamilyScan family_scan(double p, std::span<const double> q_list);

/// q = p - 10^{-k}, k = 1..count.
std::vector<double> default_q_list(double p, int count = 4);

struct KepsRow {
  double eps = 0.0;
  double norm_dual_image = 0.0;  ///< ||H* k_eps||_p
  double norm_sqrd_image = 0.0;  ///< ||(H*^2 - H*) k_eps||_p
};

std::vector<KepsRow> keps_scan(double p, std::span<const double> eps_list);

}  // namespace hardy
