// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/focal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace isocartan {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(Complex z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

// Enumerates base + k*step for all integers k landing in the window, and
// appends (radius, block) hits.
void collect_real_lattice(double base, double step, std::size_t block,
                          Interval window,
                          std::vector<std::pair<double, std::size_t>>& out) {
  const long k_lo = static_cast<long>(std::ceil((window.lo - base) / step));
  const long k_hi = static_cast<long>(std::floor((window.hi - base) / step));
  for (long k = k_lo; k <= k_hi; ++k) {
    const double r = base + static_cast<double>(k) * step;
    if (window.contains(r)) out.emplace_back(r, block);
  }
}

std::vector<FocalRadius> merge_radii(
    std::vector<std::pair<Complex, std::size_t>> hits,
    const HypersurfaceModel& model, double merge_tol) {
  std::sort(hits.begin(), hits.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  // Proximity clustering; radius counts are small enough for the quadratic
  // pass, and it is immune to ties split across the lexicographic order.
  std::vector<FocalRadius> radii;
  for (const auto& [value, block] : hits) {
    FocalRadius* home = nullptr;
    for (auto& r : radii)
      if (std::abs(r.value - value) <= merge_tol) {
        home = &r;
        break;
      }
    if (home == nullptr) {
      radii.push_back({value, {block}, model.blocks[block].mult});
      continue;
    }
    if (std::find(home->focal_blocks.begin(), home->focal_blocks.end(),
                  block) == home->focal_blocks.end()) {
      home->focal_blocks.push_back(block);
      home->multiplicity += model.blocks[block].mult;
    }
  }
  std::sort(radii.begin(), radii.end(),
            [](const FocalRadius& a, const FocalRadius& b) {
              if (a.value.real() != b.value.real())
                return a.value.real() < b.value.real();
              return a.value.imag() < b.value.imag();
            });
  return radii;
}

}  // namespace

double tau(double r, double s, double pole_tol) {
  if (r == 0.0) throw PoleError("tau: r = 0");
  if (s < 0.0) throw Error("tau: defined on s >= 0 only");
  if (s == 0.0) return 1.0 / r;
  const double b = std::sqrt(s);
  const double sine = std::sin(r * b);
  if (std::abs(sine) <= pole_tol)
    throw PoleError("tau: pole at r*sqrt(s) = " + std::to_string(r * b));
  return b * std::cos(r * b) / sine;
}

Complex tau_hat(Complex z, double s, double pole_tol) {
  if (z == Complex(0.0, 0.0)) throw PoleError("tau_hat: z = 0");
  if (s > 0.0) throw Error("tau_hat: defined on s <= 0 only");
  if (s == 0.0) return 1.0 / z;
  const double a = std::sqrt(-s);
  const Complex th = std::tanh(z * a);
  if (std::abs(th) <= pole_tol)
    throw PoleError("tau_hat: pole at z*sqrt(-s) = " + fmt(z * a));
  return a / th;
}

Complex jacobi_coeff(Complex s, double lambda, double mu) {
  if (mu == 0.0) return Complex(1.0, 0.0) - lambda * s;
  // w = sqrt(mu) continued to i sqrt(-mu) for mu < 0, so that the one
  // expression covers both circular and hyperbolic regimes.
  const Complex w = mu > 0.0 ? Complex(std::sqrt(mu), 0.0)
                             : Complex(0.0, std::sqrt(-mu));
  return std::cos(w * s) - lambda * std::sin(w * s) / w;
}

double max_period(const HypersurfaceModel& model) {
  double period = 0.0;
  for (const auto& b : model.blocks)
    if (b.mu != 0.0) period = std::max(period, kPi / std::sqrt(std::abs(b.mu)));
  return period > 0.0 ? period : kPi;
}

Interval default_re_window(const HypersurfaceModel& model) {
  return {0.0, 4.0 * max_period(model)};
}

Interval default_im_window(const HypersurfaceModel& model) {
  const double h = 2.0 * max_period(model);
  return {-h, h};
}

std::vector<FocalRadius> focal_radii_real(const HypersurfaceModel& model,
                                          Interval window, double merge_tol) {
  if (window.empty()) throw Error("focal_radii_real: empty window");
  std::vector<std::pair<double, std::size_t>> hits;
  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    const auto& b = model.blocks[i];
    if (b.mu > 0.0) {
      const double w = std::sqrt(b.mu);
      // First zero of cos(w s) - (lambda/w) sin(w s) past 0, then the
      // pi/w lattice.
      const double base = std::atan2(w, b.lambda) / w;
      collect_real_lattice(base, kPi / w, i, window, hits);
    } else if (b.mu == 0.0) {
      if (b.lambda != 0.0 && window.contains(1.0 / b.lambda))
        hits.emplace_back(1.0 / b.lambda, i);
    } else {
      const double a = std::sqrt(-b.mu);
      if (std::abs(b.lambda) > a) {
        const double r = std::atanh(a / b.lambda) / a;
        if (window.contains(r)) hits.emplace_back(r, i);
      }
      // |lambda| <= a: the coefficient has no real zero.
    }
  }
  if (hits.empty())
    throw EmptyWindowError("focal_radii_real: no radius in window (" +
                           std::to_string(window.lo) + ", " +
                           std::to_string(window.hi) + "]");
  std::vector<std::pair<Complex, std::size_t>> chits;
  chits.reserve(hits.size());
  for (const auto& [r, blk] : hits) chits.emplace_back(Complex(r, 0.0), blk);
  return merge_radii(std::move(chits), model, merge_tol);
}

std::vector<FocalRadius> focal_radii_complex(const HypersurfaceModel& model,
                                             Interval re_window,
                                             Interval im_window,
                                             double merge_tol) {
  const bool negative_space_form =
      model.ambient.is_space_form() && model.ambient.c < 0.0;
  if (!model.ambient.is_noncompact() && !negative_space_form)
    throw WrongAmbientError(
        "focal_radii_complex: model must be of noncompact type or a "
        "negatively curved space form");

  std::vector<std::pair<Complex, std::size_t>> hits;
  auto collect_imag_lattice = [&](double re, double im_base, double im_step,
                                  std::size_t block) {
    const long k_lo =
        static_cast<long>(std::ceil((im_window.lo - im_base) / im_step));
    const long k_hi =
        static_cast<long>(std::floor((im_window.hi - im_base) / im_step));
    for (long k = k_lo; k <= k_hi; ++k) {
      const double im = im_base + static_cast<double>(k) * im_step;
      if (im < im_window.lo || im > im_window.hi) continue;
      if (re_window.contains(re)) hits.emplace_back(Complex(re, im), block);
    }
  };

  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    const auto& b = model.blocks[i];
    if (b.mu == 0.0) {
      if (b.lambda != 0.0 && re_window.contains(1.0 / b.lambda) &&
          im_window.lo <= 0.0 && 0.0 <= im_window.hi)
        hits.emplace_back(Complex(1.0 / b.lambda, 0.0), i);
      continue;  // lambda = mu = 0: coefficient is constant 1
    }
    const double a = std::sqrt(-b.mu);
    const double abs_l = std::abs(b.lambda);
    if (abs_l > a) {
      collect_imag_lattice(std::atanh(a / b.lambda) / a, 0.0, kPi / a, i);
    } else if (abs_l < a) {
      collect_imag_lattice(std::atanh(b.lambda / a) / a, kPi / (2.0 * a),
                           kPi / a, i);
    }
    // lambda = +-a: zero-free coefficient, radius-free block by design;
    // is_proper() is the detector for this situation.
  }
  if (hits.empty())
    throw EmptyWindowError("focal_radii_complex: no radius in window");
  return merge_radii(std::move(hits), model, merge_tol);
}

}  // namespace isocartan
