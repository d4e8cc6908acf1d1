// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace isocartan {

namespace {

std::string fmt(Complex z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

bool uses_hat_kernel(const AmbientKind& ambient) {
  if (ambient.is_noncompact()) return true;
  if (ambient.is_space_form()) return ambient.c < 0.0;
  return false;
}

// Kernel value T(mu) at the radius, dispatching on the ambient kind.
// Compact-side evaluation requires a real radius.
Complex kernel_at(const AmbientKind& ambient, Complex r0, double mu) {
  if (uses_hat_kernel(ambient)) return tau_hat(r0, mu);
  if (r0.imag() != 0.0)
    throw Error("compact-side kernel needs a real radius, got " + fmt(r0));
  return Complex(tau(r0.real(), mu), 0.0);
}

Complex unit_factor(Complex r0) { return r0 / std::abs(r0); }

// Groups block indices by equal mu within tol.
std::vector<std::pair<double, std::vector<std::size_t>>> group_by_mu(
    const HypersurfaceModel& model, double tol) {
  std::vector<std::pair<double, std::vector<std::size_t>>> groups;
  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    const double mu = model.blocks[i].mu;
    bool placed = false;
    for (auto& [value, members] : groups)
      if (std::abs(value - mu) <= tol) {
        members.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({mu, {i}});
  }
  return groups;
}

int count_distinct(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  int count = values.empty() ? 0 : 1;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] > tol) ++count;
  return count;
}

}  // namespace

IdentityReport cartan_sum_spaceform(const HypersurfaceModel& model,
                                    double lambda0, double accept_tol) {
  if (!model.ambient.is_space_form())
    throw WrongAmbientError("cartan_sum_spaceform: model is not a space form");
  const double c = model.ambient.c;

  bool known = false;
  for (const auto& b : model.blocks) known = known || (b.lambda == lambda0);
  if (!known)
    throw UnknownEigenvalueError("lambda0 = " + std::to_string(lambda0) +
                                 " is not an eigenvalue of the model");

  IdentityReport report;
  report.radius = Complex(0.0, 0.0);
  Complex total(0.0, 0.0);
  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    const auto& b = model.blocks[i];
    IdentityReport::Term term;
    term.block = i;
    term.in_s = (b.lambda != lambda0);
    if (term.in_s) {
      term.weight = Complex((c + b.lambda * lambda0) / (b.lambda - lambda0));
      total += term.weight * static_cast<double>(b.mult);
    }
    report.terms.push_back(term);
  }
  report.total = total;
  report.passed = std::abs(total) < accept_tol;
  return report;
}

IdentityReport cartan_sum(const HypersurfaceModel& model, const FocalRadius& r0,
                          const Tolerances& tol) {
  IdentityReport report;
  report.radius = r0.value;
  Complex total(0.0, 0.0);
  for (std::size_t i = 0; i < model.blocks.size(); ++i) {
    const auto& b = model.blocks[i];
    Complex T;
    try {
      T = kernel_at(model.ambient, r0.value, b.mu);
    } catch (const PoleError& e) {
      throw PoleError(std::string(e.what()) + " while summing block " +
                      std::to_string(i) + " at radius " + fmt(r0.value));
    }
    IdentityReport::Term term;
    term.block = i;
    term.in_s = std::abs(Complex(b.lambda) - T) > tol.membership;
    if (term.in_s) {
      term.weight = (Complex(b.mu) + b.lambda * T) / (Complex(b.lambda) - T);
      total += term.weight * static_cast<double>(b.mult);
    }
    report.terms.push_back(term);
  }
  report.total = total;
  report.passed = std::abs(total) < tol.accept;
  return report;
}

Complex kappa(double lambda, double mu, Complex r0, const AmbientKind& ambient,
              double membership_tol) {
  const Complex T = kernel_at(ambient, r0, mu);
  if (std::abs(Complex(lambda) - T) <= membership_tol)
    throw FocalBlockError("kappa is undefined on the focal block (lambda=" +
                          std::to_string(lambda) + ", mu=" +
                          std::to_string(mu) + ") at radius " + fmt(r0));
  const Complex base = -(Complex(mu) + lambda * T) / (Complex(lambda) - T);
  return uses_hat_kernel(ambient) ? unit_factor(r0) * base : base;
}

double cartan_term_re_closed_form(double lambda, double mu, double re_r,
                                  Complex r0) {
  if (!(mu < 0.0)) throw Error("closed form requires mu < 0");
  const double a = std::sqrt(-mu);
  if (std::abs(std::abs(lambda) - a) <= 1e-12)
    throw CaseUndefinedError(
        "closed form undefined at |lambda| = sqrt(-mu) (non-proper block)");
  const double gap = std::tanh(a * (re_r - r0.real()));
  const double t = std::tan(a * r0.imag());
  const double numerator = a * (1.0 + t * t) * gap;
  const double denominator =
      std::abs(lambda) > a ? gap * gap + t * t : 1.0 + gap * gap * t * t;
  return numerator / denominator;
}

SpectralStructureReport check_theorem_c(
    const HypersurfaceModel& model, const std::optional<RootProjection>& proj,
    double tol) {
  SpectralStructureReport report;
  auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };

  if (!model.ambient.is_noncompact() &&
      !(model.ambient.is_space_form() && model.ambient.c < 0.0)) {
    fail("model is not of noncompact type");
    return report;
  }
  if (!is_proper(model, tol).proper) {
    fail("model is not proper");
    return report;
  }

  // (a) at most two shape eigenvalues per Jacobi eigenvalue.
  report.per_mu_count_ok = true;
  for (const auto& [mu, members] : group_by_mu(model, tol)) {
    std::vector<double> lambdas;
    for (auto i : members) lambdas.push_back(model.blocks[i].lambda);
    const int distinct = count_distinct(lambdas, tol);
    if (distinct > 2) {
      report.per_mu_count_ok = false;
      fail("mu = " + std::to_string(mu) + " carries " +
           std::to_string(distinct) + " > 2 shape eigenvalues");
    }
  }

  // (b) common real part of the complex focal radii, then the allowed
  // two-element spectra per mu.
  std::vector<FocalRadius> radii;
  try {
    radii = focal_radii_complex(model, default_re_window(model),
                                default_im_window(model));
  } catch (const EmptyWindowError&) {
    fail("no complex focal radius in the default window");
    return report;
  }
  std::vector<double> re_parts;
  re_parts.reserve(radii.size());
  for (const auto& r : radii) re_parts.push_back(r.value.real());
  std::sort(re_parts.begin(), re_parts.end());
  const double s0 = re_parts[re_parts.size() / 2];
  const double spread = re_parts.back() - re_parts.front();
  report.s0 = s0;
  report.spectra_ok = true;
  if (spread > tol) {
    report.spectra_ok = false;
    fail("real parts of the complex focal radii spread over " +
         std::to_string(spread));
  }
  if (report.spectra_ok) {
    for (const auto& b : model.blocks) {
      bool allowed = true;
      if (b.mu == 0.0) {
        allowed = std::abs(b.lambda - 1.0 / s0) <= tol ||
                  std::abs(b.lambda) <= tol;
      } else if (b.mu < 0.0) {
        const double a = std::sqrt(-b.mu);
        allowed = std::abs(b.lambda - a / std::tanh(a * s0)) <= tol ||
                  std::abs(b.lambda - a * std::tanh(a * s0)) <= tol;
      }
      if (!allowed) {
        report.spectra_ok = false;
        fail("lambda = " + std::to_string(b.lambda) + " at mu = " +
             std::to_string(b.mu) +
             " is outside the coth/tanh spectrum at s0 = " +
             std::to_string(s0));
      }
    }
  }

  // (c) eigenvalue-count bound over the projection, when supplied.
  std::vector<double> lambdas;
  for (const auto& b : model.blocks) lambdas.push_back(b.lambda);
  report.distinct_lambda = count_distinct(lambdas, tol);
  if (proj.has_value()) {
    report.bound = spec_count_bound(proj->class_count(),
                                    proj->rank_one_count(), proj->rank);
    report.bound_ok = report.distinct_lambda <= report.bound;
    if (!report.bound_ok)
      fail("distinct eigenvalue count " +
           std::to_string(report.distinct_lambda) + " exceeds the bound " +
           std::to_string(report.bound));
  }

  report.passed =
      report.per_mu_count_ok && report.spectra_ok && report.bound_ok;
  return report;
}

HypersurfaceModel tube_flow(const HypersurfaceModel& model, double s0, double s,
                            double tol) {
  if (!(0.0 <= s && s < s0)) throw Error("tube_flow requires 0 <= s < s0");
  std::vector<CurvatureBlock> blocks;
  for (const auto& b : model.blocks) {
    CurvatureBlock nb = b;
    const double gap = s0 - s;
    if (b.mu == 0.0) {
      if (std::abs(b.lambda - 1.0 / s0) <= tol)
        nb.lambda = 1.0 / gap;
      else if (std::abs(b.lambda) <= tol)
        nb.lambda = 0.0;
      else
        throw Error("tube_flow: flat block eigenvalue off the {1/s0, 0} set");
    } else {
      const double a = std::sqrt(-b.mu);
      if (std::abs(b.lambda - a / std::tanh(a * s0)) <= tol)
        nb.lambda = a / std::tanh(a * gap);  // vertical: collapses at s0
      else if (std::abs(b.lambda - a * std::tanh(a * s0)) <= tol)
        nb.lambda = a * std::tanh(a * gap);  // horizontal: flattens at s0
      else
        throw Error("tube_flow: block eigenvalue off the coth/tanh spectrum");
    }
    blocks.push_back(nb);
  }
  std::ostringstream name;
  name << model.name << "@s=" << s;
  return HypersurfaceModel::make(name.str(), model.ambient, std::move(blocks));
}

TubeStructureReport check_theorem_d(const HypersurfaceModel& model,
                                    double tol) {
  TubeStructureReport report;
  auto fail = [&](const std::string& msg) { report.failures.push_back(msg); };

  const auto structural = check_theorem_c(model, std::nullopt, tol);
  if (!structural.passed) {
    fail("spectral structure check failed; tube check not applicable");
    return report;
  }

  // (a) a unique positive real focal radius.
  std::vector<FocalRadius> real_radii;
  try {
    real_radii = focal_radii_real(
        model, Interval{0.0, 8.0 * max_period(model) + 8.0}, tol);
  } catch (const EmptyWindowError&) {
    fail("no positive real focal radius; the model is not a tube");
    return report;
  }
  report.unique_radius_ok = real_radii.size() == 1;
  if (!report.unique_radius_ok)
    fail("expected a unique positive real focal radius, found " +
         std::to_string(real_radii.size()));
  const double s0 = real_radii.front().value.real();
  report.s0 = s0;

  // (b) the focal image is totally geodesic: kappa vanishes on every
  // non-focal block.
  report.kappa_ok = true;
  for (const auto& b : model.blocks) {
    try {
      const double k = std::abs(
          kappa(b.lambda, b.mu, Complex(s0, 0.0), model.ambient));
      report.max_kappa = std::max(report.max_kappa, k);
    } catch (const FocalBlockError&) {
      // focal blocks carry no image eigenvalue
    }
  }
  if (report.max_kappa > tol) {
    report.kappa_ok = false;
    fail("max |kappa| at s0 is " + std::to_string(report.max_kappa));
  }

  // (c) the tube eigenvalue flow: reproduces the model at s = 0 and sends
  // horizontal eigenvalues to 0 as s -> s0.
  report.flow_ok = true;
  try {
    const auto at_zero = tube_flow(model, s0, 0.0, tol);
    for (std::size_t i = 0; i < model.blocks.size(); ++i)
      if (std::abs(at_zero.blocks[i].lambda - model.blocks[i].lambda) > tol)
        report.flow_ok = false;
    const double eps = 1e-8 * s0;
    const auto near_focal = tube_flow(model, s0, s0 - eps, tol);
    for (std::size_t i = 0; i < model.blocks.size(); ++i) {
      const auto& b = model.blocks[i];
      const bool horizontal =
          b.mu < 0.0
              ? std::abs(b.lambda -
                         std::sqrt(-b.mu) * std::tanh(std::sqrt(-b.mu) * s0)) <=
                    tol
              : std::abs(b.lambda) <= tol;
      if (horizontal && std::abs(near_focal.blocks[i].lambda) > 1e-6)
        report.flow_ok = false;
    }
  } catch (const Error& e) {
    report.flow_ok = false;
    fail(e.what());
  }
  if (!report.flow_ok) fail("tube eigenvalue flow check failed");

  report.passed =
      report.unique_radius_ok && report.kappa_ok && report.flow_ok;
  return report;
}

double lifted_trace(double r1, double r2, int m1, int m2, std::int64_t i0,
                    std::int64_t K) {
  if (r1 == r2) throw DegenerateLatticeError("focal lattice degenerates");
  if (!(r2 < 0.0 && 0.0 < r1))
    throw Error("lifted_trace requires r2 < 0 < r1");
  if (K < 1) throw Error("lifted_trace requires K >= 1");
  const double step = r1 - r2;
  auto mult = [&](std::int64_t k) {
    return ((k % 2 + 2) % 2 == 1) ? m1 : m2;  // r1 sits at k = 1, r2 at k = 0
  };
  double total = 0.0;
  for (std::int64_t j = 1; j <= K; ++j) {
    // Gap written as j*step so the antipodal pair cancels exactly.
    total += static_cast<double>(mult(i0 + j)) / (static_cast<double>(j) * step);
    total -= static_cast<double>(mult(i0 - j)) / (static_cast<double>(j) * step);
  }
  return total;
}

double lifted_trace_window(double r1, double r2, int m1, int m2,
                           std::int64_t i0, std::int64_t K) {
  if (r1 == r2) throw DegenerateLatticeError("focal lattice degenerates");
  if (!(r2 < 0.0 && 0.0 < r1))
    throw Error("lifted_trace_window requires r2 < 0 < r1");
  const double step = r1 - r2;
  auto mult = [&](std::int64_t k) { return ((k % 2 + 2) % 2 == 1) ? m1 : m2; };
  double total = 0.0;
  for (std::int64_t k = -K; k <= K; ++k) {
    if (k == i0) continue;
    total += static_cast<double>(mult(k)) /
             (static_cast<double>(k - i0) * step);
  }
  return total;
}

}  // namespace isocartan
