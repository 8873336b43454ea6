// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "gri/distribution.hpp"
#include "gri/representation.hpp"

namespace gri {

struct NamedIndex {
  enum class Kind {
    FGT,
    Sen,
    Kakwani,
    Shorrocks,
    Thon,
    Takayama,       // C = int (1 - F) d 1{x <= Z} dF
    TakayamaRatio,  // C / mu
    CentralMoment,
    OddNormalizedMoment,
    EvenNormalizedMoment,
  };

  Kind kind = Kind::FGT;
  double poverty_line = 0.0;
  double alpha = 0.0;  // FGT
  int k = 1;           // Kakwani
  int order = 1;       // moment order l, or p for normalized moments
  ScoreFunction d;     // Takayama; empty means the identity

  static NamedIndex fgt(double z, double alpha);
  static NamedIndex sen(double z);
  static NamedIndex kakwani(double z, int k);
  static NamedIndex shorrocks(double z);
  static NamedIndex thon(double z);
  static NamedIndex takayama(double z, ScoreFunction d = {});
  static NamedIndex takayama_ratio(double z, ScoreFunction d = {});
  static NamedIndex central_moment(int l);
  static NamedIndex odd_moment(int p);
  static NamedIndex even_moment(int p);

  [[nodiscard]] bool uses_poverty_line() const noexcept;
  [[nodiscard]] std::string name() const;
  // Throws BadThreshold / BadParams.
  void validate() const;
};

[[nodiscard]] double fgt_estimate(const EmpiricalSample& sample, double z, double alpha);

// Finite-n formulas. Sen and Kakwani are 0 when nobody is poor.
[[nodiscard]] double named_estimate(const EmpiricalSample& sample, const NamedIndex& index);

// Closed-form (h, q) with constants computed from F. Poverty kinds need 0 < F(Z) < 1
// (ThresholdOutsideSupport); pass require_interior = false to accept F(Z) = 1 and to get
// the zero representation when F(Z) = 0.
[[nodiscard]] GriRepresentation named_representation(const DistributionModel& F, const NamedIndex& index,
                                                     bool require_interior = true);

// ---- General poverty index -------------------------------------------------------------

using Kernel2 = std::function<double(double, double)>;

struct GpiSpec {
  std::function<double(double q, double n, double z)> A;
  std::function<double(double)> w;
  ScoreFunction d;
  double mu1 = 0.0, mu2 = 0.0, mu3 = 0.0, mu4 = 0.0;
  double poverty_line = 0.0;
  // Limit kernels of the representation; missing partials fall back to central differences.
  Kernel2 c, dc_dx, dc_dy;
  Kernel2 pi, dpi_dx, dpi_dy;

  static GpiSpec sen(double z);
  static GpiSpec kakwani(double z, int k);
  static GpiSpec shorrocks(double z);
  static GpiSpec thon(double z);
  static GpiSpec fgt(double z, double alpha);
};

struct GpiConstants {
  double H_c = 0.0;
  double H_pi = 0.0;
  double J = 0.0;
  double K_c = 0.0;
  double K_pi = 0.0;
  double K = 0.0;
};

[[nodiscard]] double gpi_estimate(const EmpiricalSample& sample, const GpiSpec& spec);
[[nodiscard]] GpiConstants gpi_constants(const DistributionModel& F, const GpiSpec& spec);
[[nodiscard]] GriRepresentation gpi_representation(const DistributionModel& F, const GpiSpec& spec);

// ---- Moments ----------------------------------------------------------------------------

[[nodiscard]] double central_moment_estimate(const EmpiricalSample& sample, int l);
// A(l)(x) built from the raw moments m_1..m_{l} of F.
[[nodiscard]] double moment_score(int l, double x, std::span<const double> raw_moments);
[[nodiscard]] GriRepresentation moment_representation(const DistributionModel& F, int l);

enum class MomentKind { Odd, Even };
[[nodiscard]] double normalized_moment_estimate(const EmpiricalSample& sample, int p, MomentKind kind);
[[nodiscard]] GriRepresentation normalized_moment_representation(const DistributionModel& F, int p, MomentKind kind);

}  // namespace gri
