// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/families.hpp"

#include <cmath>
#include <sstream>

#include "gri/error.hpp"
#include "gri/normal.hpp"

namespace gri {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

bool finite(double a) { return std::isfinite(a); }

}  // namespace

std::shared_ptr<const ParametricFamily> ParametricFamily::uniform(double a, double b) {
  require(finite(a) && finite(b) && a < b, "uniform(a, b) needs a < b");
  return std::make_shared<ParametricFamily>(Kind::Uniform, a, b);
}

std::shared_ptr<const ParametricFamily> ParametricFamily::exponential(double lambda) {
  require(finite(lambda) && lambda > 0.0, "exponential needs lambda > 0");
  return std::make_shared<ParametricFamily>(Kind::Exponential, lambda, 0.0);
}

std::shared_ptr<const ParametricFamily> ParametricFamily::lognormal(double mu, double sigma) {
  require(finite(mu) && finite(sigma) && sigma > 0.0, "lognormal needs sigma > 0");
  return std::make_shared<ParametricFamily>(Kind::LogNormal, mu, sigma);
}

std::shared_ptr<const ParametricFamily> ParametricFamily::pareto(double xm, double a) {
  require(finite(xm) && xm > 0.0, "pareto needs x_m > 0");
  require(finite(a) && a > 2.0, "pareto needs tail index a > 2 (finite variance)");
  return std::make_shared<ParametricFamily>(Kind::Pareto, xm, a);
}

std::shared_ptr<const ParametricFamily> ParametricFamily::normal(double mu, double sigma) {
  require(finite(mu) && finite(sigma) && sigma > 0.0, "normal needs sigma > 0");
  return std::make_shared<ParametricFamily>(Kind::Normal, mu, sigma);
}

double ParametricFamily::cdf(double x) const {
  switch (kind_) {
    case Kind::Uniform:
      if (x <= p1_) return 0.0;
      if (x >= p2_) return 1.0;
      return (x - p1_) / (p2_ - p1_);
    case Kind::Exponential:
      return x <= 0.0 ? 0.0 : -std::expm1(-p1_ * x);
    case Kind::LogNormal:
      return x <= 0.0 ? 0.0 : normal_cdf((std::log(x) - p1_) / p2_);
    case Kind::Pareto:
      return x <= p1_ ? 0.0 : 1.0 - std::pow(p1_ / x, p2_);
    case Kind::Normal:
      return normal_cdf((x - p1_) / p2_);
  }
  return 0.0;
}

double ParametricFamily::quantile(double s) const {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::OutOfRange, "quantile needs 0 < s < 1", s);
  switch (kind_) {
    case Kind::Uniform:
      return p1_ + s * (p2_ - p1_);
    case Kind::Exponential:
      return -std::log1p(-s) / p1_;
    case Kind::LogNormal:
      return std::exp(p1_ + p2_ * normal_quantile(s));
    case Kind::Pareto:
      return p1_ * std::pow(1.0 - s, -1.0 / p2_);
    case Kind::Normal:
      return p1_ + p2_ * normal_quantile(s);
  }
  return 0.0;
}

std::string ParametricFamily::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Uniform: os << "uniform(" << p1_ << ", " << p2_ << ")"; break;
    case Kind::Exponential: os << "exponential(" << p1_ << ")"; break;
    case Kind::LogNormal: os << "lognormal(" << p1_ << ", " << p2_ << ")"; break;
    case Kind::Pareto: os << "pareto(" << p1_ << ", " << p2_ << ")"; break;
    case Kind::Normal: os << "normal(" << p1_ << ", " << p2_ << ")"; break;
  }
  return os.str();
}

double ParametricFamily::mean() const noexcept {
  switch (kind_) {
    case Kind::Uniform: return 0.5 * (p1_ + p2_);
    case Kind::Exponential: return 1.0 / p1_;
    case Kind::LogNormal: return std::exp(p1_ + 0.5 * p2_ * p2_);
    case Kind::Pareto: return p2_ * p1_ / (p2_ - 1.0);
    case Kind::Normal: return p1_;
  }
  return 0.0;
}

double ParametricFamily::variance() const noexcept {
  switch (kind_) {
    case Kind::Uniform: return (p2_ - p1_) * (p2_ - p1_) / 12.0;
    case Kind::Exponential: return 1.0 / (p1_ * p1_);
    case Kind::LogNormal: return std::expm1(p2_ * p2_) * std::exp(2.0 * p1_ + p2_ * p2_);
    case Kind::Pareto: return p1_ * p1_ * p2_ / ((p2_ - 1.0) * (p2_ - 1.0) * (p2_ - 2.0));
    case Kind::Normal: return p2_ * p2_;
  }
  return 0.0;
}

DistributionModel to_model(const FamilyPtr& family, QuadratureConfig config) {
  return DistributionModel::parametric(family, config);
}

}  // namespace gri
