// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISOCARTAN_ROOTSYS_HPP
#define ISOCARTAN_ROOTSYS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "isocartan/model.hpp"
#include "isocartan/rational.hpp"

namespace isocartan {

enum class RootType { A, B, C, D, BC, E6, E7, E8, F4, G2 };

std::string to_string(RootType type);

/// An irreducible restricted root system: the positive roots as exact integer
/// vectors, with one multiplicity per length class (= per Weyl orbit for the
/// types handled here).
///
/// Realizations use the standard orthogonal coordinates.  A_{n-1} lives in
/// the sum-zero hyperplane of Z^n and G2 in the sum-zero hyperplane of Z^3;
/// E6/E7 are the usual subsets of E8.  E/F coordinates are doubled so that
/// half-integer roots stay integral; only squared-length ratios matter.
struct RootSystemData {
  RootType type;
  int rank = 0;
  std::vector<std::vector<std::int64_t>> positive_roots;
  std::vector<int> root_mult;                   // parallel to positive_roots
  std::map<std::int64_t, int> class_mult;       // squared length -> mult

  int ambient_coords() const {
    return positive_roots.empty() ? 0
                                  : static_cast<int>(positive_roots[0].size());
  }
  int mult_sum() const;  // sum of root multiplicities over positive roots
};

/// Builds the positive roots of `type` and attaches `class_mult`
/// (squared root length -> multiplicity).  An empty map means every class
/// has multiplicity one.  Simply-laced types have a single class; B/C/F4/G2
/// have two; BC has three (short e_i, middle e_i+-e_j, long 2e_i).
RootSystemData make_root_system(RootType type, int rank,
                                std::map<std::int64_t, int> class_mult = {});

/// Squared lengths present in a system, ascending.
std::vector<std::int64_t> length_classes(const RootSystemData& roots);

/// One class of the projection of the positive roots onto a line: all roots
/// sharing the same nonzero |alpha(v)|, with their summed multiplicity.
struct ProjectionClass {
  double beta = 0.0;        // |alpha(v)| as a double
  Rational beta_sq;         // exact (alpha(v))^2, the grouping key
  int total_mult = 0;
  bool is_rank_one_class = false;  // total_mult == 1
};

struct RootProjection {
  std::vector<ProjectionClass> classes;  // ascending beta, all beta > 0
  int kernel_mult = 0;                   // summed mult of roots with alpha(v)=0
  int rank = 0;                          // rank of the source system

  int class_count() const { return static_cast<int>(classes.size()); }
  int rank_one_count() const;
};

/// Groups positive roots by |alpha(v)| with exact rational arithmetic on
/// (alpha(v))^2; roots annihilated by v are reported via kernel_mult.
/// Throws ZeroVectorError if v = 0.  `v` has one coordinate per ambient
/// coordinate of the realization.
RootProjection project_roots(const RootSystemData& roots,
                             std::span<const Rational> v);

/// Eigenvalues of the normal Jacobi operator determined by a projection:
/// mu = -beta^2 per class for a noncompact ambient (+beta^2 for compact),
/// plus mu = 0 with multiplicity (rank - 1) + kernel_mult when positive.
std::vector<std::pair<double, int>> jacobi_spectrum(const RootProjection& proj,
                                                    const AmbientKind& ambient);

/// Eigenvalue-count bound 2#(classes \ rank-one) + #(rank-one) + {2,1,0}
/// according to rank >= 3 / rank == 2 / rank == 1.  Applied to a full root
/// system this is the invariant m_{G/K}; applied to a projection it bounds
/// the number of distinct principal curvatures.
int spec_count_bound(int class_count, int rank_one_count, int rank);

}  // namespace isocartan

#endif  // ISOCARTAN_ROOTSYS_HPP
