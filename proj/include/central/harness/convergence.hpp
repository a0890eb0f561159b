#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "central/core_grid.hpp"
#include "central/errors.hpp"

namespace central::harness {

struct ErrorSample {
  int n = 0;
  ErrorNorms errors;
};

struct ConvergenceRow {
  int n = 0;
  double l1 = 0.0;
  std::optional<double> l1_rate;
  double linf = 0.0;
  std::optional<double> linf_rate;
  double l2 = 0.0;
  std::optional<double> l2_rate;
};

/// Observed order between two errors at resolutions n_coarse < n_fine.
inline double observed_order(double err_coarse, double err_fine, int n_coarse, int n_fine) {
  return std::log(err_coarse / err_fine) / std::log(static_cast<double>(n_fine) / n_coarse);
}

/// Per-row log2 rates; resolutions must double from row to row.
inline std::vector<ConvergenceRow> convergence_table(const std::vector<ErrorSample>& samples) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const ErrorSample& s = samples[k];
    ConvergenceRow row{s.n, s.errors.l1, std::nullopt, s.errors.linf, std::nullopt, s.errors.l2, std::nullopt};
    if (k > 0) {
      const ErrorSample& p = samples[k - 1];
      if (s.n != 2 * p.n)
        throw MismatchedResolutions("convergence_table: N=" + std::to_string(s.n) + " does not double N=" +
                                    std::to_string(p.n));
      row.l1_rate = std::log2(p.errors.l1 / s.errors.l1);
      row.linf_rate = std::log2(p.errors.linf / s.errors.linf);
      row.l2_rate = std::log2(p.errors.l2 / s.errors.l2);
    }
    rows.push_back(row);
  }
  return rows;
}

struct EndpointRates {
  double l1 = 0.0;
  double linf = 0.0;
  double l2 = 0.0;
};

/// Order fitted between the first and last rows only.
inline std::optional<EndpointRates> endpoint_rates(const std::vector<ErrorSample>& samples) {
  if (samples.size() < 2) return std::nullopt;
  const ErrorSample& a = samples.front();
  const ErrorSample& b = samples.back();
  return EndpointRates{observed_order(a.errors.l1, b.errors.l1, a.n, b.n),
                       observed_order(a.errors.linf, b.errors.linf, a.n, b.n),
                       observed_order(a.errors.l2, b.errors.l2, a.n, b.n)};
}

}  // namespace central::harness
