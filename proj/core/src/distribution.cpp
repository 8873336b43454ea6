// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gri/error.hpp"
#include "gri/quadrature.hpp"

namespace gri {

struct DistributionModel::Impl {
  Kind kind;
  std::optional<EmpiricalSample> sample;
  std::shared_ptr<const ContinuousLaw> law;
  QuadratureConfig config;
};

namespace {

class MixtureLaw final : public ContinuousLaw {
 public:
  MixtureLaw(std::vector<std::shared_ptr<const ContinuousLaw>> parts, std::vector<double> weights)
      : parts_(std::move(parts)), weights_(std::move(weights)) {}

  double cdf(double x) const override {
    double acc = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) acc += weights_[i] * parts_[i]->cdf(x);
    return std::min(acc, 1.0);
  }

  double quantile(double s) const override {
    if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::OutOfRange, "quantile needs 0 < s < 1", s);
    // The mixture quantile lies between the smallest and largest component quantiles.
    double lo = parts_.front()->quantile(s);
    double hi = lo;
    for (const auto& p : parts_) {
      const double v = p->quantile(s);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (cdf(mid) >= s) hi = mid; else lo = mid;
    }
    return hi;
  }

  std::string describe() const override {
    std::ostringstream os;
    os << "mixture(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ", ";
      os << weights_[i] << "*" << parts_[i]->describe();
    }
    os << ")";
    return os.str();
  }

 private:
  std::vector<std::shared_ptr<const ContinuousLaw>> parts_;
  std::vector<double> weights_;
};

}  // namespace

DistributionModel DistributionModel::empirical(EmpiricalSample sample) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Empirical;
  impl->sample = std::move(sample);
  return DistributionModel(std::move(impl));
}

DistributionModel DistributionModel::parametric(std::shared_ptr<const ContinuousLaw> law, QuadratureConfig config) {
  if (!law) throw Error(ErrorCode::BadParams, "null law");
  if (config.grid < 1 || config.order < 1 || config.tail_levels < 0) {
    throw Error(ErrorCode::BadParams, "invalid quadrature configuration");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Parametric;
  impl->law = std::move(law);
  impl->config = config;
  return DistributionModel(std::move(impl));
}

DistributionModel DistributionModel::mixture(std::span<const DistributionModel> components,
                                             std::span<const double> weights) {
  if (components.empty() || components.size() != weights.size()) {
    throw Error(ErrorCode::BadWeights, "need one weight per component");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::BadWeights, "weights must be nonnegative", w);
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorCode::BadWeights, "weights must sum to 1", total);

  const bool all_empirical = std::all_of(components.begin(), components.end(),
                                         [](const DistributionModel& m) { return m.is_empirical(); });
  const bool all_parametric = std::none_of(components.begin(), components.end(),
                                           [](const DistributionModel& m) { return m.is_empirical(); });
  if (all_empirical) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < components.size(); ++i) n += weights[i] > 0.0 ? components[i].sample().n() : 0;
    std::vector<double> pooled;
    pooled.reserve(n);
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (weights[i] == 0.0) continue;
      const double share = static_cast<double>(components[i].sample().n()) / static_cast<double>(n);
      if (std::abs(share - weights[i]) > 1e-9) {
        throw Error(ErrorCode::BadWeights, "empirical mixture weights must equal group shares", weights[i]);
      }
      auto v = components[i].sample().values();
      pooled.insert(pooled.end(), v.begin(), v.end());
    }
    return empirical(EmpiricalSample::build(pooled));
  }
  if (!all_parametric) throw Error(ErrorCode::BadParams, "cannot mix empirical and parametric components");

  std::vector<std::shared_ptr<const ContinuousLaw>> parts;
  std::vector<double> kept;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (weights[i] == 0.0) continue;
    parts.push_back(components[i].law_ptr());
    kept.push_back(weights[i] / total);
  }
  return parametric(std::make_shared<MixtureLaw>(std::move(parts), std::move(kept)), components.front().quadrature());
}

DistributionModel::Kind DistributionModel::kind() const noexcept { return impl_->kind; }

double DistributionModel::cdf(double x) const {
  if (impl_->kind == Kind::Empirical) return ecdf(*impl_->sample, x);
  return impl_->law->cdf(x);
}

double DistributionModel::quantile(double s) const {
  if (impl_->kind == Kind::Empirical) return equantile(*impl_->sample, s);
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::OutOfRange, "quantile needs 0 < s < 1", s);
  return impl_->law->quantile(s);
}

double DistributionModel::integrate_score(const ScoreFunction& f, std::span<const double> kinks) const {
  if (impl_->kind == Kind::Empirical) {
    const double v = empirical_measure(*impl_->sample, f);
    return v;
  }
  return QuantileGrid(*this, kinks).integrate(f);
}

std::vector<double> DistributionModel::panel_edges(std::span<const double> kinks) const {
  std::vector<double> edges;
  if (impl_->kind == Kind::Empirical) {
    const std::size_t n = impl_->sample->n();
    edges.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) edges[j] = static_cast<double>(j) / static_cast<double>(n);
    edges.back() = 1.0;
    return edges;
  }
  const auto& cfg = impl_->config;
  const double g = static_cast<double>(cfg.grid);
  edges.reserve(static_cast<std::size_t>(cfg.grid + 2 * cfg.tail_levels + kinks.size() + 1));
  for (int k = 0; k <= cfg.grid; ++k) edges.push_back(k / g);
  double step = 1.0 / g;
  for (int l = 0; l < cfg.tail_levels; ++l) {
    step *= 0.5;
    edges.push_back(step);
    edges.push_back(1.0 - step);
  }
  for (double z : kinks) {
    const double s = impl_->law->cdf(z);
    if (s > 1e-15 && s < 1.0 - 1e-15) edges.push_back(s);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<double> out;
  out.reserve(edges.size());
  for (double e : edges) {
    if (out.empty() || e - out.back() > 1e-14) out.push_back(e);
  }
  out.front() = 0.0;
  out.back() = 1.0;
  return out;
}

int DistributionModel::panel_order() const noexcept {
  return impl_->kind == Kind::Empirical ? 2 : impl_->config.order;
}

const EmpiricalSample& DistributionModel::sample() const {
  if (impl_->kind != Kind::Empirical) throw Error(ErrorCode::BadParams, "model is not empirical");
  return *impl_->sample;
}

const ContinuousLaw& DistributionModel::law() const {
  if (impl_->kind != Kind::Parametric) throw Error(ErrorCode::BadParams, "model is not parametric");
  return *impl_->law;
}

std::shared_ptr<const ContinuousLaw> DistributionModel::law_ptr() const {
  if (impl_->kind != Kind::Parametric) throw Error(ErrorCode::BadParams, "model is not parametric");
  return impl_->law;
}

const QuadratureConfig& DistributionModel::quadrature() const noexcept { return impl_->config; }

DistributionModel DistributionModel::with_quadrature(QuadratureConfig config) const {
  if (impl_->kind == Kind::Empirical) return *this;
  return parametric(impl_->law, config);
}

std::string DistributionModel::describe() const {
  if (impl_->kind == Kind::Empirical) return "empirical(n=" + std::to_string(impl_->sample->n()) + ")";
  return impl_->law->describe();
}

double residual_stat(const EmpiricalSample& sample, const ScoreFunction& q, const DistributionModel& F) {
  const std::size_t n = sample.n();
  double acc = 0.0;
  std::size_t k = 0;
  while (k < n) {
    std::size_t end = k + 1;
    while (end < n && sample[end] == sample[k]) ++end;
    const double x = sample[k];
    const double qx = q(x);
    if (!std::isfinite(qx)) throw Error(ErrorCode::NonFiniteScore, "q is not finite at a sample point", x);
    const double diff = static_cast<double>(end) / static_cast<double>(n) - F.cdf(x);
    acc += static_cast<double>(end - k) * diff * qx;
    k = end;
  }
  return acc / static_cast<double>(n);
}

}  // namespace gri
