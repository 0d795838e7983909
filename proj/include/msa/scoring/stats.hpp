#pragma once

#include <cstddef>
#include <string_view>

namespace msa::scoring {

/// Summary statistics of one group; std_dev uses the n-1 denominator.
struct GroupStats {
  std::size_t n = 0;
  double mean = 0.0;
  double std_dev = 0.0;

  /// Throws InvalidArgument unless n >= 2 and std_dev >= 0 (and both finite).
  void validate() const;

  /// Parses "n,mean,sd".
  static GroupStats parse(std::string_view text);
};

enum class TTestVariant { Pooled, Welch };

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p_two_tailed = 1.0;
};

/// Two-sample t from summary statistics. Errors: InvalidArgument, DegenerateVariance.
TTestResult two_sample_t(const GroupStats& a, const GroupStats& b, TTestVariant variant = TTestVariant::Pooled);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// mean +/- z(level) * sd / sqrt(n), normal approximation. Errors: InvalidArgument.
ConfidenceInterval mean_confidence_interval(const GroupStats& g, double level);

/// Two-decimal presentation rounding (half away from zero).
double round2(double x);

}  // namespace msa::scoring
