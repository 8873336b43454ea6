// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/indices.hpp"

#include <cmath>
#include <sstream>

#include "gri/error.hpp"
#include "internal.hpp"

namespace gri {

using detail::poverty_gap;

NamedIndex NamedIndex::fgt(double z, double alpha) {
  NamedIndex i;
  i.kind = Kind::FGT;
  i.poverty_line = z;
  i.alpha = alpha;
  return i;
}

NamedIndex NamedIndex::sen(double z) {
  NamedIndex i;
  i.kind = Kind::Sen;
  i.poverty_line = z;
  return i;
}

NamedIndex NamedIndex::kakwani(double z, int k) {
  NamedIndex i;
  i.kind = Kind::Kakwani;
  i.poverty_line = z;
  i.k = k;
  return i;
}

NamedIndex NamedIndex::shorrocks(double z) {
  NamedIndex i;
  i.kind = Kind::Shorrocks;
  i.poverty_line = z;
  return i;
}

NamedIndex NamedIndex::thon(double z) {
  NamedIndex i;
  i.kind = Kind::Thon;
  i.poverty_line = z;
  return i;
}

NamedIndex NamedIndex::takayama(double z, ScoreFunction d) {
  NamedIndex i;
  i.kind = Kind::Takayama;
  i.poverty_line = z;
  i.d = std::move(d);
  return i;
}

NamedIndex NamedIndex::takayama_ratio(double z, ScoreFunction d) {
  NamedIndex i = takayama(z, std::move(d));
  i.kind = Kind::TakayamaRatio;
  return i;
}

NamedIndex NamedIndex::central_moment(int l) {
  NamedIndex i;
  i.kind = Kind::CentralMoment;
  i.order = l;
  return i;
}

NamedIndex NamedIndex::odd_moment(int p) {
  NamedIndex i;
  i.kind = Kind::OddNormalizedMoment;
  i.order = p;
  return i;
}

NamedIndex NamedIndex::even_moment(int p) {
  NamedIndex i;
  i.kind = Kind::EvenNormalizedMoment;
  i.order = p;
  return i;
}

bool NamedIndex::uses_poverty_line() const noexcept {
  switch (kind) {
    case Kind::CentralMoment:
    case Kind::OddNormalizedMoment:
    case Kind::EvenNormalizedMoment:
      return false;
    default:
      return true;
  }
}

std::string NamedIndex::name() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::FGT: os << "fgt(alpha=" << alpha << ")"; break;
    case Kind::Sen: os << "sen"; break;
    case Kind::Kakwani: os << "kakwani(k=" << k << ")"; break;
    case Kind::Shorrocks: os << "shorrocks"; break;
    case Kind::Thon: os << "thon"; break;
    case Kind::Takayama: os << "takayama"; break;
    case Kind::TakayamaRatio: os << "takayama-ratio"; break;
    case Kind::CentralMoment: os << "central-moment(l=" << order << ")"; break;
    case Kind::OddNormalizedMoment: os << "odd-moment(p=" << order << ")"; break;
    case Kind::EvenNormalizedMoment: os << "even-moment(p=" << order << ")"; break;
  }
  return os.str();
}

void NamedIndex::validate() const {
  if (uses_poverty_line() && !(poverty_line > 0.0 && std::isfinite(poverty_line))) {
    throw Error(ErrorCode::BadThreshold, "poverty line must be positive", poverty_line);
  }
  switch (kind) {
    case Kind::FGT:
      if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw Error(ErrorCode::BadParams, "alpha must be >= 0", alpha);
      break;
    case Kind::Kakwani:
      if (k < 1) throw Error(ErrorCode::BadParams, "k must be >= 1", k);
      break;
    case Kind::CentralMoment:
      if (order < 1) throw Error(ErrorCode::BadParams, "moment order must be >= 1", order);
      break;
    case Kind::OddNormalizedMoment:
    case Kind::EvenNormalizedMoment:
      if (order < 2) throw Error(ErrorCode::BadParams, "normalized moment order must be >= 2", order);
      break;
    default:
      break;
  }
}

double fgt_estimate(const EmpiricalSample& sample, double z, double alpha) {
  NamedIndex::fgt(z, alpha).validate();
  const std::size_t q = sample.count_at_most(z);
  double acc = 0.0;
  for (std::size_t j = 0; j < q; ++j) acc += std::pow(poverty_gap(sample[j], z), alpha);
  return acc / static_cast<double>(sample.n());
}

namespace {

double evaluate_d(const ScoreFunction& d, double x) { return d ? d(x) : x; }

double takayama_cn(const EmpiricalSample& sample, double z, const ScoreFunction& d) {
  const std::size_t n = sample.n();
  const auto nd = static_cast<double>(n);
  double acc = 0.0;
  std::size_t k = 0;
  while (k < n && sample[k] <= z) {
    std::size_t end = k + 1;
    while (end < n && sample[end] == sample[k]) ++end;
    const double weight = 1.0 - static_cast<double>(end) / nd + 1.0 / nd;
    const double dv = evaluate_d(d, sample[k]);
    if (!std::isfinite(dv)) throw Error(ErrorCode::NonFiniteScore, "d is not finite at a sample point", sample[k]);
    acc += static_cast<double>(end - k) * weight * dv;
    k = end;
  }
  return acc / nd;
}

// J_k and K_k of the Kakwani representation (Sen is k = 1).
struct KakwaniConstants {
  double fz;
  double J;
  double K;
};

KakwaniConstants kakwani_constants(const DistributionModel& F, double z, int k) {
  const double fz = F.cdf(z);
  if (fz <= 0.0) return {0.0, 0.0, 0.0};
  const double kinks[] = {z};
  const auto grid = detail::exact_grid(F, kinks, k);
  auto u = grid.u();
  auto x = grid.x();
  auto w = grid.weights();
  double jk = 0.0;
  double ik = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (x[i] > z) continue;
    const double g = poverty_gap(x[i], z);
    const double base = std::max(0.0, 1.0 - u[i] / fz);
    jk += w[i] * std::pow(base, k) * g;
    ik += w[i] * std::pow(base, k - 1) * g;
  }
  jk *= (k + 1);
  const double kk = k * (k + 1.0) / fz * ik + jk / fz;
  if (!std::isfinite(jk) || !std::isfinite(kk)) throw Error(ErrorCode::NonFiniteConstant, "Kakwani constants");
  return {fz, jk, kk};
}

double sform_integral(const DistributionModel& F, double z, int degree,
                      const std::function<double(double u, double x)>& f) {
  const double kinks[] = {z};
  const auto grid = detail::exact_grid(F, kinks, degree);
  auto u = grid.u();
  auto x = grid.x();
  auto w = grid.weights();
  double acc = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) acc += w[i] * f(u[i], x[i]);
  if (!std::isfinite(acc)) throw Error(ErrorCode::NonFiniteIntegral, "value functional");
  return acc;
}

void check_threshold(const DistributionModel& F, double z, bool require_interior) {
  const double fz = F.cdf(z);
  if (require_interior && !(fz > 0.0 && fz < 1.0)) {
    throw Error(ErrorCode::ThresholdOutsideSupport, "need 0 < F(Z) < 1", fz);
  }
}

GriRepresentation zero_representation() {
  GriRepresentation rep;
  rep.h = [](double) { return 0.0; };
  rep.value = [](const DistributionModel&) { return 0.0; };
  return rep;
}

GriRepresentation kakwani_representation(const DistributionModel& F, double z, int k) {
  const auto c = kakwani_constants(F, z, k);
  if (c.fz <= 0.0) return zero_representation();
  const double fz = c.fz;
  const double J = c.J;
  const double K = c.K;
  GriRepresentation rep;
  rep.h = [F, z, k, fz, J, K](double y) {
    if (y > z) return 0.0;
    const double r = F.cdf(y) / fz;
    return (k + 1.0) * (std::pow(1.0 - r, k) * poverty_gap(y, z) - J / fz * std::pow(r, k)) + K;
  };
  rep.q = [F, z, k, fz, J](double y) {
    if (y > z) return 0.0;
    const double r = F.cdf(y) / fz;
    return -k * (k + 1.0) / fz * (std::pow(1.0 - r, k - 1) * poverty_gap(y, z) + J / fz * std::pow(r, k - 1));
  };
  rep.value = [z, k](const DistributionModel& G) { return kakwani_constants(G, z, k).J; };
  rep.kinks = {z};
  return rep;
}

GriRepresentation shorrocks_representation(const DistributionModel& F, double z) {
  GriRepresentation rep;
  rep.h = [F, z](double y) { return y <= z ? 2.0 * (1.0 - F.cdf(y)) * poverty_gap(y, z) : 0.0; };
  rep.q = [z](double y) { return y <= z ? -2.0 * poverty_gap(y, z) : 0.0; };
  rep.value = [z](const DistributionModel& G) {
    return sform_integral(G, z, 1, [z](double u, double x) { return 2.0 * (1.0 - u) * poverty_gap(x, z); });
  };
  rep.kinks = {z};
  return rep;
}

GriRepresentation takayama_c_representation(const DistributionModel& F, double z, const ScoreFunction& d) {
  GriRepresentation rep;
  rep.h = [F, z, d](double y) { return y <= z ? (1.0 - F.cdf(y)) * evaluate_d(d, y) : 0.0; };
  rep.q = [z, d](double y) { return y <= z ? -evaluate_d(d, y) : 0.0; };
  rep.value = [z, d](const DistributionModel& G) {
    return sform_integral(G, z, 1, [z, d](double u, double x) { return x <= z ? (1.0 - u) * evaluate_d(d, x) : 0.0; });
  };
  rep.kinks = {z};
  return rep;
}

}  // namespace

double named_estimate(const EmpiricalSample& sample, const NamedIndex& index) {
  index.validate();
  const double z = index.poverty_line;
  const std::size_t n = sample.n();
  const auto nd = static_cast<double>(n);
  switch (index.kind) {
    case NamedIndex::Kind::FGT:
      return fgt_estimate(sample, z, index.alpha);
    case NamedIndex::Kind::Sen:
    case NamedIndex::Kind::Kakwani: {
      const std::size_t q = sample.count_at_most(z);
      if (q == 0) return 0.0;
      const int k = index.kind == NamedIndex::Kind::Sen ? 1 : index.k;
      const auto qd = static_cast<double>(q);
      double phi = 0.0;
      double acc = 0.0;
      for (std::size_t j = 1; j <= q; ++j) {
        phi += std::pow(static_cast<double>(j), k);
        acc += std::pow(qd - static_cast<double>(j) + 1.0, k) * poverty_gap(sample[j - 1], z);
      }
      return qd / (nd * phi) * acc;
    }
    case NamedIndex::Kind::Shorrocks: {
      const std::size_t q = sample.count_at_most(z);
      double acc = 0.0;
      for (std::size_t j = 1; j <= q; ++j) acc += (2.0 * nd - 2.0 * j + 1.0) * poverty_gap(sample[j - 1], z);
      return acc / (nd * nd);
    }
    case NamedIndex::Kind::Thon: {
      const std::size_t q = sample.count_at_most(z);
      double acc = 0.0;
      for (std::size_t j = 1; j <= q; ++j) acc += (nd - j + 1.0) * poverty_gap(sample[j - 1], z);
      return 2.0 * acc / (nd * (nd + 1.0));
    }
    case NamedIndex::Kind::Takayama:
      return takayama_cn(sample, z, index.d);
    case NamedIndex::Kind::TakayamaRatio: {
      const double mu = empirical_measure(sample, [](double x) { return x; });
      if (mu == 0.0) throw Error(ErrorCode::ZeroMean, "sample mean is zero");
      return takayama_cn(sample, z, index.d) / mu;
    }
    case NamedIndex::Kind::CentralMoment:
      return central_moment_estimate(sample, index.order);
    case NamedIndex::Kind::OddNormalizedMoment:
      return normalized_moment_estimate(sample, index.order, MomentKind::Odd);
    case NamedIndex::Kind::EvenNormalizedMoment:
      return normalized_moment_estimate(sample, index.order, MomentKind::Even);
  }
  return 0.0;
}

GriRepresentation named_representation(const DistributionModel& F, const NamedIndex& index, bool require_interior) {
  index.validate();
  const double z = index.poverty_line;
  if (index.uses_poverty_line() && index.kind != NamedIndex::Kind::FGT) check_threshold(F, z, require_interior);
  switch (index.kind) {
    case NamedIndex::Kind::FGT: {
      if (require_interior) check_threshold(F, z, true);
      const double alpha = index.alpha;
      GriRepresentation rep;
      rep.h = [z, alpha](double x) { return x <= z ? std::pow(poverty_gap(x, z), alpha) : 0.0; };
      auto h = rep.h;
      rep.kinks = {z};
      rep.value = [h, z](const DistributionModel& G) {
        const double kinks[] = {z};
        return G.integrate_score(h, kinks);
      };
      return rep;
    }
    case NamedIndex::Kind::Sen:
      return kakwani_representation(F, z, 1);
    case NamedIndex::Kind::Kakwani:
      return kakwani_representation(F, z, index.k);
    case NamedIndex::Kind::Shorrocks:
    case NamedIndex::Kind::Thon:
      return shorrocks_representation(F, z);
    case NamedIndex::Kind::Takayama:
      return takayama_c_representation(F, z, index.d);
    case NamedIndex::Kind::TakayamaRatio: {
      const auto top = takayama_c_representation(F, z, index.d);
      try {
        return compose_ratio(F, top, mean_representation());
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ZeroDenominator) throw Error(ErrorCode::ZeroMean, "mean of F is zero");
        throw;
      }
    }
    case NamedIndex::Kind::CentralMoment:
      return moment_representation(F, index.order);
    case NamedIndex::Kind::OddNormalizedMoment:
      return normalized_moment_representation(F, index.order, MomentKind::Odd);
    case NamedIndex::Kind::EvenNormalizedMoment:
      return normalized_moment_representation(F, index.order, MomentKind::Even);
  }
  return zero_representation();
}

}  // namespace gri
