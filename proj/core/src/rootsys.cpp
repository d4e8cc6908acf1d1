// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace isocartan {

namespace {

using Vec = std::vector<std::int64_t>;

std::int64_t norm_sq(const Vec& v) {
  std::int64_t n = 0;
  for (auto x : v) n += x * x;
  return n;
}

bool first_nonzero_positive(const Vec& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return false;
}

void push(std::vector<Vec>& roots, Vec v) {
  if (!first_nonzero_positive(v))
    for (auto& x : v) x = -x;
  roots.push_back(std::move(v));
}

std::vector<Vec> type_a(int rank) {
  // A_{rank} in the sum-zero hyperplane of Z^{rank+1}: e_i - e_j.
  const int n = rank + 1;
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v(n, 0);
      v[i] = 1;
      v[j] = -1;
      roots.push_back(v);
    }
  return roots;
}

std::vector<Vec> type_b(int n) {
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    roots.push_back(v);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        Vec v(n, 0);
        v[i] = 1;
        v[j] = s;
        roots.push_back(v);
      }
  return roots;
}

std::vector<Vec> type_c(int n) {
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = 2;
    roots.push_back(v);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        Vec v(n, 0);
        v[i] = 1;
        v[j] = s;
        roots.push_back(v);
      }
  return roots;
}

std::vector<Vec> type_d(int n) {
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        Vec v(n, 0);
        v[i] = 1;
        v[j] = s;
        roots.push_back(v);
      }
  return roots;
}

std::vector<Vec> type_bc(int n) {
  auto roots = type_b(n);
  for (int i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = 2;
    roots.push_back(v);
  }
  return roots;
}

std::vector<Vec> type_g2() {
  // Sum-zero realization in Z^3; short roots have squared length 2,
  // long roots 6.
  std::vector<Vec> roots;
  push(roots, {1, -1, 0});
  push(roots, {0, 1, -1});
  push(roots, {1, 0, -1});
  push(roots, {2, -1, -1});
  push(roots, {-1, 2, -1});
  push(roots, {1, 1, -2});
  return roots;
}

// F4 and the E series are built with doubled coordinates so the
// half-integer roots stay integral.
std::vector<Vec> type_f4() {
  std::vector<Vec> roots;
  for (int i = 0; i < 4; ++i) {
    Vec v(4, 0);
    v[i] = 2;
    roots.push_back(v);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int s : {1, -1}) {
        Vec v(4, 0);
        v[i] = 2;
        v[j] = 2 * s;
        roots.push_back(v);
      }
  for (int mask = 0; mask < 8; ++mask) {
    Vec v{1, 1, 1, 1};
    for (int b = 0; b < 3; ++b)
      if (mask & (1 << b)) v[b + 1] = -1;
    roots.push_back(v);
  }
  return roots;
}

std::vector<Vec> all_e8() {
  std::vector<Vec> roots;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          Vec v(8, 0);
          v[i] = si;
          v[j] = sj;
          roots.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    Vec v(8, 1);
    int minus = 0;
    for (int b = 0; b < 8; ++b)
      if (mask & (1 << b)) {
        v[b] = -1;
        ++minus;
      }
    if (minus % 2 == 0) roots.push_back(v);
  }
  return roots;
}

std::vector<Vec> positive_of(std::vector<Vec> all) {
  std::vector<Vec> pos;
  for (auto& v : all)
    if (first_nonzero_positive(v)) pos.push_back(std::move(v));
  return pos;
}

std::vector<Vec> type_e8() { return positive_of(all_e8()); }

std::vector<Vec> type_e7() {
  // Roots of E8 annihilated by e7 + e8.
  std::vector<Vec> sub;
  for (auto& v : all_e8())
    if (v[6] + v[7] == 0) sub.push_back(std::move(v));
  return positive_of(std::move(sub));
}

std::vector<Vec> type_e6() {
  // Roots of E8 with a6 = a7 = -a8.
  std::vector<Vec> sub;
  for (auto& v : all_e8())
    if (v[5] == v[6] && v[5] == -v[7]) sub.push_back(std::move(v));
  return positive_of(std::move(sub));
}

int expected_count(RootType type, int rank) {
  switch (type) {
    case RootType::A:
      return rank * (rank + 1) / 2;
    case RootType::B:
    case RootType::C:
      return rank * rank;
    case RootType::D:
      return rank * (rank - 1);
    case RootType::BC:
      return rank * rank + rank;
    case RootType::E6:
      return 36;
    case RootType::E7:
      return 63;
    case RootType::E8:
      return 120;
    case RootType::F4:
      return 24;
    case RootType::G2:
      return 6;
  }
  return 0;
}

}  // namespace

std::string to_string(RootType type) {
  switch (type) {
    case RootType::A:
      return "A";
    case RootType::B:
      return "B";
    case RootType::C:
      return "C";
    case RootType::D:
      return "D";
    case RootType::BC:
      return "BC";
    case RootType::E6:
      return "E6";
    case RootType::E7:
      return "E7";
    case RootType::E8:
      return "E8";
    case RootType::F4:
      return "F4";
    case RootType::G2:
      return "G2";
  }
  return "?";
}

RootSystemData make_root_system(RootType type, int rank,
                                std::map<std::int64_t, int> class_mult) {
  RootSystemData data;
  data.type = type;
  data.rank = rank;

  switch (type) {
    case RootType::A:
      if (rank < 1) throw Error("type A requires rank >= 1");
      data.positive_roots = type_a(rank);
      break;
    case RootType::B:
      if (rank < 1) throw Error("type B requires rank >= 1");
      data.positive_roots = type_b(rank);
      break;
    case RootType::C:
      if (rank < 1) throw Error("type C requires rank >= 1");
      data.positive_roots = type_c(rank);
      break;
    case RootType::D:
      if (rank < 2) throw Error("type D requires rank >= 2");
      data.positive_roots = type_d(rank);
      break;
    case RootType::BC:
      if (rank < 1) throw Error("type BC requires rank >= 1");
      data.positive_roots = type_bc(rank);
      break;
    case RootType::E6:
      data.rank = 6;
      data.positive_roots = type_e6();
      break;
    case RootType::E7:
      data.rank = 7;
      data.positive_roots = type_e7();
      break;
    case RootType::E8:
      data.rank = 8;
      data.positive_roots = type_e8();
      break;
    case RootType::F4:
      data.rank = 4;
      data.positive_roots = type_f4();
      break;
    case RootType::G2:
      data.rank = 2;
      data.positive_roots = type_g2();
      break;
  }

  if (static_cast<int>(data.positive_roots.size()) !=
      expected_count(type, data.rank))
    throw Error("root count mismatch for " + to_string(type));

  // Attach multiplicities, keyed by squared length; default 1 per class.
  for (const auto& r : data.positive_roots) data.class_mult[norm_sq(r)] = 1;
  for (const auto& [len, mult] : class_mult) {
    auto it = data.class_mult.find(len);
    if (it == data.class_mult.end())
      throw Error("no root class of squared length " + std::to_string(len) +
                  " in " + to_string(type));
    if (mult < 1) throw Error("root multiplicity must be >= 1");
    it->second = mult;
  }
  data.root_mult.reserve(data.positive_roots.size());
  for (const auto& r : data.positive_roots)
    data.root_mult.push_back(data.class_mult.at(norm_sq(r)));
  return data;
}

int RootSystemData::mult_sum() const {
  int total = 0;
  for (int m : root_mult) total += m;
  return total;
}

std::vector<std::int64_t> length_classes(const RootSystemData& roots) {
  std::vector<std::int64_t> lengths;
  for (const auto& [len, mult] : roots.class_mult) lengths.push_back(len);
  return lengths;
}

int RootProjection::rank_one_count() const {
  int count = 0;
  for (const auto& c : classes) count += c.is_rank_one_class ? 1 : 0;
  return count;
}

RootProjection project_roots(const RootSystemData& roots,
                             std::span<const Rational> v) {
  if (v.size() != static_cast<std::size_t>(roots.ambient_coords()))
    throw Error("projection vector has wrong dimension");
  bool zero = true;
  for (const auto& x : v) zero = zero && x.is_zero();
  if (zero) throw ZeroVectorError("project_roots: v = 0");

  RootProjection proj;
  proj.rank = roots.rank;

  // Group by the exact square of alpha(v); the square avoids both abs()
  // and irrational class keys.
  std::map<std::pair<std::int64_t, std::int64_t>, int> groups;
  for (std::size_t i = 0; i < roots.positive_roots.size(); ++i) {
    Rational value = 0;
    const auto& alpha = roots.positive_roots[i];
    for (std::size_t k = 0; k < alpha.size(); ++k)
      value = value + Rational(alpha[k]) * v[k];
    if (value.is_zero()) {
      proj.kernel_mult += roots.root_mult[i];
      continue;
    }
    const Rational sq = value * value;
    groups[{sq.num(), sq.den()}] += roots.root_mult[i];
  }

  for (const auto& [key, mult] : groups) {
    ProjectionClass cls;
    cls.beta_sq = Rational(key.first, key.second);
    cls.beta = std::sqrt(cls.beta_sq.to_double());
    cls.total_mult = mult;
    cls.is_rank_one_class = (mult == 1);
    proj.classes.push_back(cls);
  }
  std::sort(proj.classes.begin(), proj.classes.end(),
            [](const ProjectionClass& a, const ProjectionClass& b) {
              return a.beta_sq < b.beta_sq;
            });
  return proj;
}

std::vector<std::pair<double, int>> jacobi_spectrum(
    const RootProjection& proj, const AmbientKind& ambient) {
  const double sign = ambient.is_compact() ? 1.0 : -1.0;
  std::vector<std::pair<double, int>> spectrum;
  for (const auto& cls : proj.classes)
    spectrum.emplace_back(sign * cls.beta_sq.to_double(), cls.total_mult);
  const int zero_mult = (proj.rank - 1) + proj.kernel_mult;
  if (zero_mult > 0) spectrum.emplace_back(0.0, zero_mult);
  std::sort(spectrum.begin(), spectrum.end());
  return spectrum;
}

int spec_count_bound(int class_count, int rank_one_count, int rank) {
  const int base = 2 * (class_count - rank_one_count) + rank_one_count;
  if (rank >= 3) return base + 2;
  if (rank == 2) return base + 1;
  return base;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw ParseError("cannot parse rational '" + text + "'");
  }
}

}  // namespace isocartan
