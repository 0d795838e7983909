#include "msa/scoring/stats.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <string>

#include "msa/error.hpp"
#include "msa/text.hpp"

namespace msa::scoring {

void GroupStats::validate() const {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "group needs n >= 2");
  if (!std::isfinite(mean) || !std::isfinite(std_dev)) throw Error(ErrorCode::InvalidArgument, "non-finite statistic");
  if (std_dev < 0) throw Error(ErrorCode::InvalidArgument, "std_dev must be >= 0");
}

GroupStats GroupStats::parse(std::string_view text) {
  std::string s(text);
  for (auto& c : s)
    if (c == ',') c = ' ';
  const auto parts = text::split_whitespace(s);
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "expected n,mean,sd", std::string(text));
  GroupStats g;
  try {
    std::size_t used = 0;
    const long long n = std::stoll(parts[0], &used);
    if (used != parts[0].size() || n < 0) throw std::invalid_argument("n");
    g.n = static_cast<std::size_t>(n);
    g.mean = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("mean");
    g.std_dev = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument("sd");
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "expected n,mean,sd", std::string(text));
  }
  g.validate();
  return g;
}

TTestResult two_sample_t(const GroupStats& a, const GroupStats& b, TTestVariant variant) {
  a.validate();
  b.validate();
  if (a.std_dev == 0.0 && b.std_dev == 0.0)
    throw Error(ErrorCode::DegenerateVariance, "both groups have zero standard deviation");

  const double na = static_cast<double>(a.n);
  const double nb = static_cast<double>(b.n);
  const double va = a.std_dev * a.std_dev;
  const double vb = b.std_dev * b.std_dev;
  TTestResult r;
  double se = 0.0;
  if (variant == TTestVariant::Pooled) {
    r.df = na + nb - 2.0;
    const double sp2 = ((na - 1.0) * va + (nb - 1.0) * vb) / r.df;
    se = std::sqrt(sp2 * (1.0 / na + 1.0 / nb));
  } else {
    const double qa = va / na;
    const double qb = vb / nb;
    se = std::sqrt(qa + qb);
    r.df = (qa + qb) * (qa + qb) / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  }
  r.t = (a.mean - b.mean) / se;
  boost::math::students_t dist(r.df);
  r.p_two_tailed = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t)));
  return r;
}

ConfidenceInterval mean_confidence_interval(const GroupStats& g, double level) {
  g.validate();
  if (!(level > 0.0 && level < 1.0)) throw Error(ErrorCode::InvalidArgument, "level must be in (0, 1)");
  const double z = boost::math::quantile(boost::math::normal(), 0.5 + level / 2.0);
  const double half = z * g.std_dev / std::sqrt(static_cast<double>(g.n));
  return {g.mean - half, g.mean + half};
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

}  // namespace msa::scoring
