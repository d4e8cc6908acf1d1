// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISOCARTAN_FOCAL_HPP
#define ISOCARTAN_FOCAL_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "isocartan/model.hpp"

namespace isocartan {

using Complex = std::complex<double>;

/// Scalar kernel for nonnegative Jacobi eigenvalues:
///   tau_r(s) = sqrt(s)/tan(r sqrt(s)) for s > 0, and 1/r at s = 0.
/// Throws PoleError when sin(r sqrt(s)) vanishes (within pole_tol) and
/// for r = 0.
double tau(double r, double s, double pole_tol = 1e-12);

/// Complex-analytic kernel for nonpositive Jacobi eigenvalues:
///   tau_hat_z(s) = sqrt(-s)/tanh(z sqrt(-s)) for s < 0, and 1/z at s = 0.
/// Real on real z.  Throws PoleError at zeros of tanh(z sqrt(-s)), i.e.
/// z sqrt(-s) in i pi Z, and for z = 0.
Complex tau_hat(Complex z, double s, double pole_tol = 1e-12);

/// Coefficient of the normal Jacobi field of a (lambda, mu) block along the
/// normal geodesic, as an entire function of the complex arclength s:
///   cos(sqrt(mu) s) - lambda sin(sqrt(mu) s)/sqrt(mu)   (mu != 0)
///   1 - lambda s                                        (mu == 0)
/// Its zeros are exactly the focal radii of the block.
Complex jacobi_coeff(Complex s, double lambda, double mu);

/// A focal radius with the blocks whose Jacobi coefficient vanishes there.
struct FocalRadius {
  Complex value;
  std::vector<std::size_t> focal_blocks;  // indices into model.blocks
  int multiplicity = 0;                   // summed block multiplicity
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo < x && x <= hi; }
  bool empty() const { return !(lo < hi); }
};

/// Real focal radii of all blocks inside `window`, merged within merge_tol.
/// Closed forms per block:
///   mu > 0:            atan2(sqrt(mu), lambda)/sqrt(mu) + k pi/sqrt(mu)
///   mu = 0, lambda!=0: 1/lambda
///   mu < 0, |lambda| > sqrt(-mu): artanh(sqrt(-mu)/lambda)/sqrt(-mu)
/// Blocks with no real radius (mu < 0, |lambda| <= sqrt(-mu); or
/// lambda = mu = 0) contribute nothing.  Throws EmptyWindowError when no
/// radius lands in the window.
std::vector<FocalRadius> focal_radii_real(const HypersurfaceModel& model,
                                          Interval window,
                                          double merge_tol = 1e-9);

/// Complex focal radii of a noncompact (or negatively curved space form)
/// model with Re in re_window and Im in [im_window.lo, im_window.hi].
/// Closed forms per block with a = sqrt(-mu):
///   |lambda| > a:  artanh(a/lambda)/a + k pi i/a
///   |lambda| < a:  artanh(lambda/a)/a + pi i/(2a) + k pi i/a
///   mu = 0:        the single radius 1/lambda (lambda != 0)
/// Non-proper blocks (lambda = +-a) have a zero-free coefficient and are
/// skipped; is_proper() is the designated detector for them.  Conjugate
/// radii are both reported; merged multiplicity sums the focal blocks.
std::vector<FocalRadius> focal_radii_complex(const HypersurfaceModel& model,
                                             Interval re_window,
                                             Interval im_window,
                                             double merge_tol = 1e-9);

/// Window defaults from the block spectrum: the largest coefficient period
/// pi/sqrt(|mu|) over blocks with mu != 0 (pi when there is none).
double max_period(const HypersurfaceModel& model);
Interval default_re_window(const HypersurfaceModel& model);  // (0, 4 period]
Interval default_im_window(const HypersurfaceModel& model);  // |Im| <= 2 period

}  // namespace isocartan

#endif  // ISOCARTAN_FOCAL_HPP
