// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "gri/error.hpp"
#include "gri/normal.hpp"
#include "gri/quadrature.hpp"

namespace gri {
namespace {

// A discrete joint law on (0,1)^2: node grids per axis and the mass linking them. Every
// matrix entry is computed from this one measure, so the results are PSD by construction.
struct Coupling {
  QuantileGrid a;
  QuantileGrid b;
  bool independent = false;
  std::vector<std::uint32_t> ia;
  std::vector<std::uint32_t> ib;
  std::vector<double> mass;
  std::vector<double> wa;
  std::vector<double> wb;

  Coupling(QuantileGrid ga, QuantileGrid gb) : a(std::move(ga)), b(std::move(gb)) {}

  void add(std::size_t i, std::size_t j, double m) {
    ia.push_back(static_cast<std::uint32_t>(i));
    ib.push_back(static_cast<std::uint32_t>(j));
    mass.push_back(m);
  }

  void finish() {
    if (independent) {
      wa.assign(a.weights().begin(), a.weights().end());
      wb.assign(b.weights().begin(), b.weights().end());
      return;
    }
    wa.assign(a.size(), 0.0);
    wb.assign(b.size(), 0.0);
    for (std::size_t e = 0; e < mass.size(); ++e) {
      wa[ia[e]] += mass[e];
      wb[ib[e]] += mass[e];
    }
  }
};

std::vector<double> union_edges(std::vector<double> e1, const std::vector<double>& e2) {
  e1.insert(e1.end(), e2.begin(), e2.end());
  std::sort(e1.begin(), e1.end());
  std::vector<double> out;
  for (double e : e1) {
    if (out.empty() || e - out.back() > 1e-14) out.push_back(e);
  }
  out.back() = 1.0;
  return out;
}

std::vector<double> copula_axis_edges(const DistributionModel& F, std::span<const double> kinks, int cells) {
  if (F.is_empirical()) return F.panel_edges();
  QuadratureConfig cfg = F.quadrature();
  cfg.grid = cells;
  return F.with_quadrature(cfg).panel_edges(kinks);
}

Coupling build_coupling(const BivariateFrame& f, std::span<const double> k1, std::span<const double> k2) {
  const auto& F1 = f.margin1;
  const auto& F2 = f.margin2;
  switch (f.copula.kind()) {
    case CopulaModel::Kind::Independence: {
      Coupling c(QuantileGrid(F1, k1), QuantileGrid(F2, k2));
      c.independent = true;
      c.finish();
      return c;
    }
    case CopulaModel::Kind::Comonotone: {
      const auto edges = union_edges(F1.panel_edges(k1), F2.panel_edges(k2));
      const int order = std::max(F1.panel_order(), F2.panel_order());
      Coupling c(QuantileGrid(F1, edges, order), QuantileGrid(F2, edges, order));
      for (std::size_t k = 0; k < c.a.size(); ++k) c.add(k, k, c.a.weights()[k]);
      c.finish();
      return c;
    }
    case CopulaModel::Kind::Gaussian: {
      if (f.copula_grid < 1) throw Error(ErrorCode::BadParams, "copula grid must be positive", f.copula_grid);
      const auto rows = copula_axis_edges(F1, k1, f.copula_grid);
      const auto cols = copula_axis_edges(F2, k2, f.copula_grid);
      Coupling c(QuantileGrid(F1, rows, F1.panel_order()), QuantileGrid(F2, cols, 1));
      const double rho = f.copula.rho();
      const double sd = std::sqrt(1.0 - rho * rho);
      std::vector<double> zc(cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        zc[j] = j == 0 ? -INFINITY : (j + 1 == cols.size() ? INFINITY : normal_quantile(cols[j]));
      }
      c.ia.reserve(c.a.size() * c.b.size());
      c.ib.reserve(c.a.size() * c.b.size());
      c.mass.reserve(c.a.size() * c.b.size());
      for (std::size_t g = 0; g < c.a.size(); ++g) {
        const double zu = normal_quantile(c.a.u()[g]);
        const double wg = c.a.weights()[g];
        double prev = 0.0;
        for (std::size_t j = 0; j + 1 < cols.size(); ++j) {
          const double next = j + 2 == cols.size() ? 1.0 : normal_cdf((zc[j + 1] - rho * zu) / sd);
          const double m = wg * (next - prev);
          if (m > 0.0) c.add(g, j, m);
          prev = next;
        }
      }
      c.finish();
      return c;
    }
    case CopulaModel::Kind::Empirical: {
      const std::size_t n = f.copula.size();
      auto px = f.copula.position_x();
      auto py = f.copula.position_y();
      const bool checkerboard = F1.is_empirical() && F2.is_empirical() && F1.sample().n() == n &&
                                F2.sample().n() == n;
      if (checkerboard) {
        // Mass 1/n spread over the cell of each pair's ordinal positions; both margins
        // are then exactly the step measures of the samples.
        Coupling c(QuantileGrid(F1, F1.panel_edges(), 2), QuantileGrid(F2, F2.panel_edges(), 2));
        const double m = 0.25 / static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t s = 0; s < 2; ++s) {
            for (std::size_t t = 0; t < 2; ++t) c.add(2 * px[j] + s, 2 * py[j] + t, m);
          }
        }
        c.finish();
        return c;
      }
      auto rx = f.copula.rank_x();
      auto ry = f.copula.rank_y();
      const auto nd = static_cast<double>(n);
      std::vector<double> u(n), v(n), w(n, 1.0 / nd);
      for (std::size_t j = 0; j < n; ++j) {
        u[j] = (static_cast<double>(rx[j]) - 0.5) / nd;
        v[j] = (static_cast<double>(ry[j]) - 0.5) / nd;
      }
      Coupling c(QuantileGrid::from_points(F1, std::move(u), w), QuantileGrid::from_points(F2, std::move(v), w));
      for (std::size_t j = 0; j < n; ++j) c.add(j, j, 1.0 / nd);
      c.finish();
      return c;
    }
  }
  throw Error(ErrorCode::BadParams, "unknown copula kind");
}

std::vector<double> centered(std::span<const double> w, const std::vector<double>& v) {
  const double m = weighted_mean(w, v);
  std::vector<double> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k] - m;
  return out;
}

// Covariance of (av..., bv...) under the coupling.
SymMatrix coupled_covariance(const Coupling& c, const std::vector<std::vector<double>>& av,
                             const std::vector<std::vector<double>>& bv) {
  const std::size_t na = av.size();
  const std::size_t dim = na + bv.size();
  std::vector<std::vector<double>> ac;
  std::vector<std::vector<double>> bc;
  for (const auto& v : av) ac.push_back(centered(c.wa, v));
  for (const auto& v : bv) bc.push_back(centered(c.wb, v));
  SymMatrix m(dim);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = i; j < na; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < c.wa.size(); ++k) acc += c.wa[k] * ac[i][k] * ac[j][k];
      m(i, j) = m(j, i) = acc;
    }
  }
  for (std::size_t i = 0; i < bc.size(); ++i) {
    for (std::size_t j = i; j < bc.size(); ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < c.wb.size(); ++k) acc += c.wb[k] * bc[i][k] * bc[j][k];
      m(na + i, na + j) = m(na + j, na + i) = acc;
    }
  }
  if (!c.independent) {
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < bc.size(); ++j) {
        double acc = 0.0;
        for (std::size_t e = 0; e < c.mass.size(); ++e) acc += c.mass[e] * ac[i][c.ia[e]] * bc[j][c.ib[e]];
        m(i, na + j) = m(na + j, i) = acc;
      }
    }
  }
  for (double v : m.a) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteIntegral, "joint covariance is not finite");
  }
  return m;
}

std::vector<double> h_on(const QuantileGrid& g, const GriRepresentation& rep) {
  return rep.h ? g.evaluate(rep.h) : std::vector<double>(g.size(), 0.0);
}

std::vector<double> lambda_on(const DistributionModel& F, const QuantileGrid& g, const GriRepresentation& rep,
                              std::span<const double> kinks) {
  if (!rep.q) return std::vector<double>(g.size(), 0.0);
  return TailIntegral(F, rep.q, kinks).at(g.u());
}

std::vector<double> sum(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

double nonnegative(double v, const char* what) {
  if (v < -1e-9) throw Error(ErrorCode::NegativeVariance, what, v);
  return std::max(v, 0.0);
}

}  // namespace

JointCovariance temporal_joint_covariance(const BivariateFrame& frame, const GriRepresentation& rep1,
                                          const GriRepresentation& rep2) {
  const Coupling c = build_coupling(frame, rep1.kinks, rep2.kinks);
  const auto h1 = h_on(c.a, rep1);
  const auto l1 = lambda_on(frame.margin1, c.a, rep1, rep1.kinks);
  const auto h2 = h_on(c.b, rep2);
  const auto l2 = lambda_on(frame.margin2, c.b, rep2, rep2.kinks);
  const SymMatrix p = coupled_covariance(c, {h1, l1}, {h2, l2});

  JointCovariance out;
  out.gamma11 = p(0, 2);
  out.gamma12 = p(0, 3);
  out.gamma21 = p(1, 2);
  out.gamma22 = p(1, 3);
  out.cross = out.gamma11 + out.gamma22 + out.gamma12 + out.gamma21;
  out.matrix = SymMatrix(2);
  out.matrix(0, 0) = nonnegative(p(0, 0) + p(1, 1) + 2.0 * p(0, 1), "period-1 variance is negative");
  out.matrix(1, 1) = nonnegative(p(2, 2) + p(3, 3) + 2.0 * p(2, 3), "period-2 variance is negative");
  out.matrix(0, 1) = out.matrix(1, 0) = out.cross;
  out.delta_var = nonnegative(p(0, 0) + p(1, 1) + 2.0 * p(0, 1) + p(2, 2) + p(3, 3) + 2.0 * p(2, 3) - 2.0 * out.cross,
                              "variance of the difference is negative");
  return out;
}

JointCovariance temporal_joint_covariance(const BivariateFrame& frame, const GriRepresentation& rep) {
  return temporal_joint_covariance(frame, rep, rep);
}

JointCovariance temporal_joint_covariance(const BivariateFrame& frame, const RepBuilder& build) {
  return temporal_joint_covariance(frame, build(frame.margin1), build(frame.margin2));
}

JointCovariance relative_variation_law(const JointCovariance& joint, double i1, double i2) {
  if (i1 == 0.0 || !std::isfinite(i1)) throw Error(ErrorCode::ZeroBaseIndex, "base-period index is zero", i1);
  JointCovariance out = joint;
  const double g[2] = {-i2 / (i1 * i1), 1.0 / i1};
  out.rel_var = nonnegative(g[0] * g[0] * joint.matrix(0, 0) + 2.0 * g[0] * g[1] * joint.matrix(0, 1) +
                                g[1] * g[1] * joint.matrix(1, 1),
                            "relative variation variance is negative");
  out.gamma4 = 1.0 / i1;
  out.gamma5 = (i2 - i1) / (i1 * i1);
  return out;
}

JointCovariance relative_variation_law(const BivariateFrame& frame, const GriRepresentation& rep, double i1,
                                       double i2) {
  return relative_variation_law(temporal_joint_covariance(frame, rep), i1, i2);
}

JointCovariance mutual_variation_covariance(const BivariateFrame& frame, const GriRepresentation& repI1,
                                            const GriRepresentation& repI2, const GriRepresentation& repJ1,
                                            const GriRepresentation& repJ2) {
  const auto k1 = merge_kinks(repI1.kinks, repJ1.kinks);
  const auto k2 = merge_kinks(repI2.kinks, repJ2.kinks);
  const Coupling c = build_coupling(frame, k1, k2);
  const auto pI1 = sum(h_on(c.a, repI1), lambda_on(frame.margin1, c.a, repI1, k1));
  const auto pJ1 = sum(h_on(c.a, repJ1), lambda_on(frame.margin1, c.a, repJ1, k1));
  const auto pI2 = sum(h_on(c.b, repI2), lambda_on(frame.margin2, c.b, repI2, k2));
  const auto pJ2 = sum(h_on(c.b, repJ2), lambda_on(frame.margin2, c.b, repJ2, k2));
  // p is ordered (I1, J1, I2, J2); the result uses (I1, I2, J1, J2).
  const SymMatrix p = coupled_covariance(c, {pI1, pJ1}, {pI2, pJ2});
  constexpr std::size_t perm[4] = {0, 2, 1, 3};
  JointCovariance out;
  out.matrix = SymMatrix(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out.matrix(i, j) = p(perm[i], perm[j]);
  }
  const auto& m = out.matrix;
  out.cross = m(0, 1);
  out.delta_var = nonnegative(m(0, 0) + m(1, 1) - 2.0 * m(0, 1), "variance of the difference is negative");
  out.delta_cross = m(1, 3) - m(1, 2) - m(0, 3) + m(0, 2);
  return out;
}

JointCovariance mutual_variation_covariance(const BivariateFrame& frame, const GriRepresentation& repI,
                                            const GriRepresentation& repJ) {
  return mutual_variation_covariance(frame, repI, repI, repJ, repJ);
}

double mutual_relative_covariance(const JointCovariance& joint, double i1, double i2, double j1, double j2) {
  if (i1 == 0.0 || !std::isfinite(i1)) throw Error(ErrorCode::ZeroBaseIndex, "base-period index I1 is zero", i1);
  if (j1 == 0.0 || !std::isfinite(j1)) throw Error(ErrorCode::ZeroBaseIndex, "base-period index J1 is zero", j1);
  if (joint.matrix.dim != 4) throw Error(ErrorCode::BadParams, "need the 4x4 mutual covariance");
  const double vi[4] = {-i2 / (i1 * i1), 1.0 / i1, 0.0, 0.0};
  const double vj[4] = {0.0, 0.0, -j2 / (j1 * j1), 1.0 / j1};
  return joint.matrix.bilinear(vi, vj);
}

double mutual_relative_covariance(const BivariateFrame& frame, const GriRepresentation& repI,
                                  const GriRepresentation& repJ, double i1, double i2, double j1, double j2) {
  return mutual_relative_covariance(mutual_variation_covariance(frame, repI, repJ), i1, i2, j1, j2);
}

}  // namespace gri
