// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISOCARTAN_CARTAN_HPP
#define ISOCARTAN_CARTAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocartan/focal.hpp"
#include "isocartan/model.hpp"
#include "isocartan/rootsys.hpp"

namespace isocartan {

struct Tolerances {
  double membership = 1e-7;  // focal-block exclusion threshold
  double accept = 1e-9;      // identity acceptance threshold
  double merge = 1e-9;       // radius merge threshold
};

/// Per-term ledger of one Cartan-sum evaluation at a radius.
struct IdentityReport {
  struct Term {
    std::size_t block = 0;   // index into model.blocks
    Complex weight;          // the summand (mu + lambda T)/(lambda - T)
    bool in_s = false;       // false exactly for focal blocks at this radius
  };

  Complex radius;
  std::vector<Term> terms;   // one per block, in block order
  Complex total;             // sum of weight * mult over in_s terms
  bool passed = false;       // |total| < accept tolerance
};

/// Classical two-term identity in a space form of curvature c:
///   sum over lambda != lambda0 of (c + lambda lambda0)/(lambda - lambda0) m.
/// Throws UnknownEigenvalueError if lambda0 is not in the spectrum.
IdentityReport cartan_sum_spaceform(const HypersurfaceModel& model,
                                    double lambda0,
                                    double accept_tol = 1e-12);

/// The Cartan-type sum at a focal radius: each non-focal block contributes
/// ((mu + lambda T(mu))/(lambda - T(mu))) * mult with T = tau (compact /
/// nonnegative curvature, real radius) or tau_hat (noncompact / negative
/// curvature).  Blocks with |lambda - T(mu)| <= membership tolerance are
/// focal and excluded.  PoleError from the kernel is rethrown naming the
/// offending block.
IdentityReport cartan_sum(const HypersurfaceModel& model, const FocalRadius& r0,
                          const Tolerances& tol = {});

/// Shape-operator eigenvalue of the focal image of a (lambda, mu) block:
///   compact:    -(mu + lambda tau_{r0}(mu)) / (lambda - tau_{r0}(mu))
///   noncompact: the same times the unit factor r0/|r0|.
/// Throws FocalBlockError when the block is focal at r0.
Complex kappa(double lambda, double mu, Complex r0, const AmbientKind& ambient,
              double membership_tol = 1e-7);

/// Real part of the Cartan-sum coefficient of a block whose own focal radius
/// has real part re_r, evaluated at the reference radius r0, via the closed
/// form (valid for mu < 0, away from |lambda| = sqrt(-mu)):
///
///   sqrt(-mu) (1 + tan^2(sqrt(-mu) Im r0)) tanh(sqrt(-mu)(re_r - Re r0)) / D
///
/// where D = tanh^2(sqrt(-mu)(re_r - Re r0)) + tan^2(sqrt(-mu) Im r0) when
/// |lambda| > sqrt(-mu), and D = 1 + tanh^2(...) tan^2(...) when
/// |lambda| < sqrt(-mu).  Throws CaseUndefinedError at the boundary case.
double cartan_term_re_closed_form(double lambda, double mu, double re_r,
                                  Complex r0);

/// Checker for the spectral structure of proper noncompact models:
/// (a) at most two shape eigenvalues per Jacobi eigenvalue;
/// (b) a common real part s0 of all complex focal radii exists, with
///     mu = 0 eigenvalues in {1/s0, 0} and mu < 0 eigenvalues in
///     {sqrt(-mu) coth(sqrt(-mu) s0), sqrt(-mu) tanh(sqrt(-mu) s0)};
/// (c) when projection data is supplied, the eigenvalue count respects
///     spec_count_bound over the projection.
struct SpectralStructureReport {
  bool per_mu_count_ok = false;
  bool spectra_ok = false;
  bool bound_ok = true;       // true when no projection was supplied
  double s0 = 0.0;            // extracted common real part
  int distinct_lambda = 0;
  int bound = 0;              // 0 when no projection was supplied
  std::vector<std::string> failures;
  bool passed = false;
};

SpectralStructureReport check_theorem_c(
    const HypersurfaceModel& model,
    const std::optional<RootProjection>& proj = std::nullopt,
    double tol = 1e-9);

/// Checker for the tube structure of proper noncompact models:
/// (a) a unique positive real focal radius s0;
/// (b) every non-focal block has kappa(lambda, mu, s0) = 0 (the focal
///     submanifold is totally geodesic);
/// (c) the tube eigenvalue flow reproduces the model at s = 0 and sends
///     horizontal eigenvalues to 0 as s -> s0.
struct TubeStructureReport {
  bool unique_radius_ok = false;
  bool kappa_ok = false;
  bool flow_ok = false;
  double s0 = 0.0;
  double max_kappa = 0.0;  // max |kappa| over non-focal blocks at s0
  std::vector<std::string> failures;
  bool passed = false;
};

TubeStructureReport check_theorem_d(const HypersurfaceModel& model,
                                    double tol = 1e-9);

/// The model of the parallel hypersurface at distance s toward the focal
/// submanifold at s0: vertical eigenvalues flow as
/// sqrt(-mu) coth(sqrt(-mu)(s0-s)) (1/(s0-s) for mu = 0) and horizontal ones
/// as sqrt(-mu) tanh(sqrt(-mu)(s0-s)) (0 for mu = 0).
HypersurfaceModel tube_flow(const HypersurfaceModel& model, double s0, double s,
                            double tol = 1e-9);

/// Principal-value truncation of the reciprocal-gap sum over the focal
/// lattice r_k = k r1 + (1-k) r2 (an arithmetic lattice of step r1 - r2,
/// multiplicity m1 on odd k, m2 on even k):
///   sum over 0 < |j| <= K of mult(i0+j) / (r_{i0+j} - r_{i0}).
/// Antipodal pairing makes every symmetric truncation vanish exactly.
/// Requires r2 < 0 < r1; throws DegenerateLatticeError when r1 == r2.
double lifted_trace(double r1, double r2, int m1, int m2, std::int64_t i0,
                    std::int64_t K);

/// Same sum truncated over the fixed window |k| <= K instead of symmetrically
/// around i0; the unpaired boundary band makes it decay like O(1/K), which is
/// the behaviour worth demonstrating for unequal multiplicities.
double lifted_trace_window(double r1, double r2, int m1, int m2,
                           std::int64_t i0, std::int64_t K);

}  // namespace isocartan

#endif  // ISOCARTAN_CARTAN_HPP
