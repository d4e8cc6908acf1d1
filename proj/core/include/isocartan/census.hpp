// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISOCARTAN_CENSUS_HPP
#define ISOCARTAN_CENSUS_HPP

#include <string>
#include <vector>

#include "isocartan/rootsys.hpp"

namespace isocartan {

/// One classified irreducible symmetric space of noncompact (Table "real
/// form") or complex ("group manifold") kind, with its restricted root data.
struct SymmetricSpaceEntry {
  std::string label;          // classification label, e.g. "EVIII", "II-G2"
  std::string quotient_name;  // e.g. "E8(8)/SO'(16)"
  int rank = 0;
  int ambient_dim = 0;        // dim G/K = rank + sum of root multiplicities
  RootSystemData roots;
  bool flagged = false;       // row is cross-checked and reported as a diff
  std::string note;
};

/// The four census columns for one entry.
struct CensusRow {
  std::string label;
  std::string quotient_name;
  int sharp_dp = 0;    // number of positive roots
  int sharp_dp1 = 0;   // positive roots with multiplicity one
  int m = 0;           // the rank-dependent eigenvalue-count invariant
  int dim_m = 0;       // ambient_dim - 1

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Derives the census columns from the entry's root data.
CensusRow census_entry(const SymmetricSpaceEntry& entry);

/// The built-in census: concrete instances of every classified family,
/// covering each case branch of the parameterized rows.
const std::vector<SymmetricSpaceEntry>& builtin_census();

/// The published reference values for the built-in census, stored separately
/// from the computed census so that discrepancies are diffed, never masked.
const std::vector<CensusRow>& reference_census();

/// The reference census in its on-disk CSV form.
std::string reference_census_csv();

/// Looks up a built-in entry by label ("G", "EVIII", "AIII(2,4)", ...).
const SymmetricSpaceEntry* find_entry(const std::string& label);

struct CensusDiff {
  std::string label;
  bool flagged = false;
  CensusRow computed;
  CensusRow reference;
  bool equal = false;
};

/// Compares computed vs reference rows.  Returns one record per mismatch
/// plus one per flagged row (flagged rows are always reported).
std::vector<CensusDiff> diff_census(const std::vector<CensusRow>& computed,
                                    const std::vector<CensusRow>& reference);

// Emitters for the census table (columns: Type, G/K, #roots, #mult-one
// roots, m, dim M).
std::string census_to_markdown(const std::vector<CensusRow>& rows);
std::string census_to_csv(const std::vector<CensusRow>& rows);
std::string census_to_json(const std::vector<CensusRow>& rows);

}  // namespace isocartan

#endif  // ISOCARTAN_CENSUS_HPP
