#pragma once

#include "pdmosc/params.hpp"

namespace pdmosc {

/// Mass and potential profiles at one radius. M * f^2 = 1 by construction.
struct Profiles {
  double f;     // 1 + alpha r^2
  double M;     // 1 / f^2
  double Veff;  // L(L+1)/r^2 + (omega^2 - 8 alpha^2) r^2 / 4 - alpha
};

/// Shared by the eigenfunction code and the finite-difference oracle; the
/// oracle deliberately uses nothing else from the analytic-state modules.
inline Profiles profiles(const OscParams& p, double r) {
  Profiles out;
  out.f = 1 + p.alpha * r * r;
  out.M = 1 / (out.f * out.f);
  out.Veff = p.L * (p.L + 1) / (r * r) +
             0.25 * (p.omega * p.omega - 8 * p.alpha * p.alpha) * r * r - p.alpha;
  return out;
}

}  // namespace pdmosc
