// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#include "isocartan/census.hpp"

#include <sstream>

namespace isocartan {

namespace {

using M = std::map<std::int64_t, int>;

SymmetricSpaceEntry entry(std::string label, std::string quotient,
                          RootSystemData roots, bool flagged = false,
                          std::string note = "") {
  SymmetricSpaceEntry e;
  e.label = std::move(label);
  e.quotient_name = std::move(quotient);
  e.rank = roots.rank;
  e.ambient_dim = roots.rank + roots.mult_sum();
  e.roots = std::move(roots);
  e.flagged = flagged;
  e.note = std::move(note);
  return e;
}

std::vector<SymmetricSpaceEntry> build_census() {
  std::vector<SymmetricSpaceEntry> c;

  // Real forms (noncompact type), one concrete instance per case branch of
  // each classified family.
  c.push_back(entry("AI(3)", "SL(3,R)/SO(3)", make_root_system(RootType::A, 2)));
  c.push_back(entry("AI(4)", "SL(4,R)/SO(4)", make_root_system(RootType::A, 3)));
  c.push_back(entry("AI(6)", "SL(6,R)/SO(6)", make_root_system(RootType::A, 5)));
  c.push_back(entry("AII(3)", "SU*(6)/Sp(3)",
                    make_root_system(RootType::A, 2, M{{2, 4}})));
  c.push_back(entry("AII(4)", "SU*(8)/Sp(4)",
                    make_root_system(RootType::A, 3, M{{2, 4}})));
  c.push_back(entry("AIII(1,3)", "SU(1,3)/S(U(1)xU(3))",
                    make_root_system(RootType::BC, 1, M{{1, 4}, {4, 1}})));
  c.push_back(entry("AIII(2,4)", "SU(2,4)/S(U(2)xU(4))",
                    make_root_system(RootType::BC, 2, M{{1, 4}, {2, 2}, {4, 1}})));
  c.push_back(entry("AIII(3,5)", "SU(3,5)/S(U(3)xU(5))",
                    make_root_system(RootType::BC, 3, M{{1, 4}, {2, 2}, {4, 1}})));
  c.push_back(entry("AIII(2,2)", "SU(2,2)/S(U(2)xU(2))",
                    make_root_system(RootType::C, 2, M{{2, 2}, {4, 1}})));
  c.push_back(entry("AIII(3,3)", "SU(3,3)/S(U(3)xU(3))",
                    make_root_system(RootType::C, 3, M{{2, 2}, {4, 1}})));
  c.push_back(entry("BDI(3,4)", "SO0(3,4)/SO(3)xSO(4)",
                    make_root_system(RootType::B, 3, M{{1, 1}, {2, 1}})));
  c.push_back(entry("BDI(3,5)", "SO0(3,5)/SO(3)xSO(5)",
                    make_root_system(RootType::B, 3, M{{1, 2}, {2, 1}})));
  c.push_back(entry("BDI(4,6)", "SO0(4,6)/SO(4)xSO(6)",
                    make_root_system(RootType::B, 4, M{{1, 2}, {2, 1}})));
  c.push_back(entry("BDI(2,3)", "SO0(2,3)/SO(2)xSO(3)",
                    make_root_system(RootType::B, 2, M{{1, 1}, {2, 1}})));
  c.push_back(entry("BDI(2,5)", "SO0(2,5)/SO(2)xSO(5)",
                    make_root_system(RootType::B, 2, M{{1, 3}, {2, 1}})));
  c.push_back(entry("BDI(1,2)", "SO0(1,2)/SO(1)xSO(2)",
                    make_root_system(RootType::A, 1)));
  c.push_back(entry("BDI(1,4)", "SO0(1,4)/SO(1)xSO(4)",
                    make_root_system(RootType::A, 1, M{{2, 3}})));
  c.push_back(entry("DIII(4)", "SO*(8)/U(4)",
                    make_root_system(RootType::C, 2, M{{2, 4}, {4, 1}})));
  c.push_back(entry("DIII(5)", "SO*(10)/U(5)",
                    make_root_system(RootType::BC, 2, M{{1, 4}, {2, 4}, {4, 1}})));
  c.push_back(entry("DIII(6)", "SO*(12)/U(6)",
                    make_root_system(RootType::C, 3, M{{2, 4}, {4, 1}})));
  c.push_back(entry(
      "DIII(7)", "SO*(14)/U(7)",
      make_root_system(RootType::BC, 3, M{{1, 4}, {2, 4}, {4, 1}}), true,
      "odd/even instances share the same m even though the mult-one counts "
      "differ; cross-checked against the published value"));
  c.push_back(entry("CI(2)", "Sp(2,R)/U(2)", make_root_system(RootType::C, 2)));
  c.push_back(entry("CI(3)", "Sp(3,R)/U(3)", make_root_system(RootType::C, 3)));
  c.push_back(entry("CII(1,2)", "Sp(1,2)/Sp(1)xSp(2)",
                    make_root_system(RootType::BC, 1, M{{1, 4}, {4, 3}})));
  c.push_back(entry("CII(2,3)", "Sp(2,3)/Sp(2)xSp(3)",
                    make_root_system(RootType::BC, 2, M{{1, 4}, {2, 4}, {4, 3}})));
  c.push_back(entry("CII(3,4)", "Sp(3,4)/Sp(3)xSp(4)",
                    make_root_system(RootType::BC, 3, M{{1, 4}, {2, 4}, {4, 3}})));
  c.push_back(entry("CII(2,2)", "Sp(2,2)/Sp(2)xSp(2)",
                    make_root_system(RootType::C, 2, M{{2, 4}, {4, 3}})));
  c.push_back(entry("CII(3,3)", "Sp(3,3)/Sp(3)xSp(3)",
                    make_root_system(RootType::C, 3, M{{2, 4}, {4, 3}})));
  c.push_back(entry("EI", "E6(6)/Sp(4)", make_root_system(RootType::E6, 6)));
  c.push_back(entry(
      "EII", "E6(2)/SU(6).SU(2)",
      make_root_system(RootType::F4, 4, M{{4, 2}, {8, 1}}), true,
      "rank-4 restricted system of type F4; the rank-4 branch of the count "
      "formula reproduces the published m"));
  c.push_back(entry("EIII", "E6(-14)/Spin(10).U(1)",
                    make_root_system(RootType::BC, 2, M{{1, 8}, {2, 6}, {4, 1}})));
  c.push_back(entry("EIV", "E6(-26)/F4",
                    make_root_system(RootType::A, 2, M{{2, 8}})));
  c.push_back(entry("EV", "E7(7)/(SU(8)/{+-1})",
                    make_root_system(RootType::E7, 7)));
  c.push_back(entry("EVI", "E7(-5)/SO'(12).SU(2)",
                    make_root_system(RootType::F4, 4, M{{4, 4}, {8, 1}})));
  c.push_back(entry("EVII", "E7(-25)/E6.U(1)",
                    make_root_system(RootType::C, 3, M{{2, 8}, {4, 1}})));
  c.push_back(entry("EVIII", "E8(8)/SO'(16)", make_root_system(RootType::E8, 8)));
  c.push_back(entry("EIX", "E8(-24)/E7.Sp(1)",
                    make_root_system(RootType::F4, 4, M{{4, 8}, {8, 1}})));
  c.push_back(entry("FI", "F4(4)/Sp(3).Sp(1)", make_root_system(RootType::F4, 4)));
  c.push_back(entry("FII", "F4(-20)/Spin(9)",
                    make_root_system(RootType::BC, 1, M{{1, 8}, {4, 7}})));
  c.push_back(entry("G", "G2(2)/SO(4)", make_root_system(RootType::G2, 2)));

  // Complex simple groups as symmetric spaces (all multiplicities 2).
  c.push_back(entry("II-A(3)", "SL(3,C)/SU(3)",
                    make_root_system(RootType::A, 2, M{{2, 2}})));
  c.push_back(entry("II-A(4)", "SL(4,C)/SU(4)",
                    make_root_system(RootType::A, 3, M{{2, 2}})));
  c.push_back(entry("II-BD(5)", "SO(5,C)/SO(5)",
                    make_root_system(RootType::B, 2, M{{1, 2}, {2, 2}})));
  c.push_back(entry("II-BD(6)", "SO(6,C)/SO(6)",
                    make_root_system(RootType::D, 3, M{{2, 2}})));
  c.push_back(entry("II-BD(7)", "SO(7,C)/SO(7)",
                    make_root_system(RootType::B, 3, M{{1, 2}, {2, 2}})));
  c.push_back(entry("II-BD(8)", "SO(8,C)/SO(8)",
                    make_root_system(RootType::D, 4, M{{2, 2}})));
  c.push_back(entry("II-C(3)", "Sp(3,C)/Sp(3)",
                    make_root_system(RootType::C, 3, M{{2, 2}, {4, 2}})));
  c.push_back(entry("II-C(4)", "Sp(4,C)/Sp(4)",
                    make_root_system(RootType::C, 4, M{{2, 2}, {4, 2}})));
  c.push_back(entry("II-E6", "E6(C)/E6",
                    make_root_system(RootType::E6, 6, M{{8, 2}})));
  c.push_back(entry("II-E7", "E7(C)/E7",
                    make_root_system(RootType::E7, 7, M{{8, 2}})));
  c.push_back(entry("II-E8", "E8(C)/E8",
                    make_root_system(RootType::E8, 8, M{{8, 2}})));
  c.push_back(entry("II-F4", "F4(C)/F4",
                    make_root_system(RootType::F4, 4, M{{4, 2}, {8, 2}})));
  c.push_back(entry("II-G2", "G2(C)/G2",
                    make_root_system(RootType::G2, 2, M{{2, 2}, {6, 2}})));
  return c;
}

// Published column values, one row per built-in entry, resolved per concrete
// parameter instance.  Stored independently of the root data on purpose.
struct RefRow {
  const char* label;
  int sharp_dp, sharp_dp1, m, dim_m;
};

constexpr RefRow kReference[] = {
    {"AI(3)", 3, 3, 4, 4},        {"AI(4)", 6, 6, 8, 8},
    {"AI(6)", 15, 15, 17, 19},    {"AII(3)", 3, 0, 7, 13},
    {"AII(4)", 6, 0, 14, 26},     {"AIII(1,3)", 2, 1, 3, 5},
    {"AIII(2,4)", 6, 2, 11, 15},  {"AIII(3,5)", 12, 3, 23, 29},
    {"AIII(2,2)", 4, 2, 7, 7},    {"AIII(3,3)", 9, 3, 17, 17},
    {"BDI(3,4)", 9, 9, 11, 11},   {"BDI(3,5)", 9, 6, 14, 14},
    {"BDI(4,6)", 16, 12, 22, 23}, {"BDI(2,3)", 4, 4, 5, 5},
    {"BDI(2,5)", 4, 2, 7, 9},     {"BDI(1,2)", 1, 1, 1, 1},
    {"BDI(1,4)", 1, 0, 2, 3},     {"DIII(4)", 4, 2, 7, 11},
    {"DIII(5)", 6, 2, 11, 19},    {"DIII(6)", 9, 3, 17, 29},
    {"DIII(7)", 12, 3, 23, 41},   {"CI(2)", 4, 4, 5, 5},
    {"CI(3)", 9, 9, 11, 11},      {"CII(1,2)", 2, 0, 4, 7},
    {"CII(2,3)", 6, 0, 13, 23},   {"CII(3,4)", 12, 0, 26, 47},
    {"CII(2,2)", 4, 0, 9, 15},    {"CII(3,3)", 9, 0, 20, 35},
    {"EI", 36, 36, 38, 41},       {"EII", 24, 12, 38, 39},
    {"EIII", 6, 2, 11, 31},       {"EIV", 3, 0, 7, 25},
    {"EV", 63, 63, 65, 69},       {"EVI", 24, 12, 38, 63},
    {"EVII", 9, 3, 17, 53},       {"EVIII", 120, 120, 122, 127},
    {"EIX", 24, 12, 38, 111},     {"FI", 24, 24, 26, 27},
    {"FII", 2, 0, 4, 15},         {"G", 6, 6, 7, 7},
    {"II-A(3)", 3, 0, 7, 7},      {"II-A(4)", 6, 0, 14, 14},
    {"II-BD(5)", 4, 0, 9, 9},     {"II-BD(6)", 6, 0, 14, 14},
    {"II-BD(7)", 9, 0, 20, 20},   {"II-BD(8)", 12, 0, 26, 27},
    {"II-C(3)", 9, 0, 20, 20},    {"II-C(4)", 16, 0, 34, 35},
    {"II-E6", 36, 0, 74, 77},     {"II-E7", 63, 0, 128, 132},
    {"II-E8", 120, 0, 242, 247},  {"II-F4", 24, 0, 50, 51},
    {"II-G2", 6, 0, 13, 13},
};

}  // namespace

CensusRow census_entry(const SymmetricSpaceEntry& e) {
  CensusRow row;
  row.label = e.label;
  row.quotient_name = e.quotient_name;
  row.sharp_dp = static_cast<int>(e.roots.positive_roots.size());
  for (int m : e.roots.root_mult) row.sharp_dp1 += (m == 1) ? 1 : 0;
  row.m = spec_count_bound(row.sharp_dp, row.sharp_dp1, e.rank);
  row.dim_m = e.ambient_dim - 1;
  return row;
}

const std::vector<SymmetricSpaceEntry>& builtin_census() {
  static const std::vector<SymmetricSpaceEntry> census = build_census();
  return census;
}

const std::vector<CensusRow>& reference_census() {
  static const std::vector<CensusRow> rows = [] {
    std::vector<CensusRow> out;
    for (const auto& ref : kReference) {
      const SymmetricSpaceEntry* e = find_entry(ref.label);
      CensusRow row;
      row.label = ref.label;
      row.quotient_name = e ? e->quotient_name : "";
      row.sharp_dp = ref.sharp_dp;
      row.sharp_dp1 = ref.sharp_dp1;
      row.m = ref.m;
      row.dim_m = ref.dim_m;
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

std::string reference_census_csv() { return census_to_csv(reference_census()); }

const SymmetricSpaceEntry* find_entry(const std::string& label) {
  for (const auto& e : builtin_census())
    if (e.label == label) return &e;
  return nullptr;
}

std::vector<CensusDiff> diff_census(const std::vector<CensusRow>& computed,
                                    const std::vector<CensusRow>& reference) {
  std::vector<CensusDiff> diffs;
  for (const auto& ref : reference) {
    const CensusRow* comp = nullptr;
    for (const auto& row : computed)
      if (row.label == ref.label) {
        comp = &row;
        break;
      }
    if (comp == nullptr) continue;
    const SymmetricSpaceEntry* e = find_entry(ref.label);
    const bool flagged = e != nullptr && e->flagged;
    const bool equal = *comp == ref;
    if (!equal || flagged)
      diffs.push_back({ref.label, flagged, *comp, ref, equal});
  }
  return diffs;
}

std::string census_to_markdown(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "| Type | G/K | #pos | #mult1 | m | dim M |\n";
  os << "|------|-----|------|--------|---|-------|\n";
  for (const auto& r : rows)
    os << "| " << r.label << " | " << r.quotient_name << " | " << r.sharp_dp
       << " | " << r.sharp_dp1 << " | " << r.m << " | " << r.dim_m << " |\n";
  return os.str();
}

namespace {

// Labels like "AIII(1,3)" contain commas and need the standard quoting.
std::string csv_field(const std::string& value) {
  if (value.find(',') == std::string::npos &&
      value.find('"') == std::string::npos)
    return value;
  std::string quoted = "\"";
  for (char ch : value) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "Type,G/K,sharp_pos,sharp_mult1,m,dim_M\n";
  for (const auto& r : rows)
    os << csv_field(r.label) << ',' << csv_field(r.quotient_name) << ','
       << r.sharp_dp << ',' << r.sharp_dp1 << ',' << r.m << ',' << r.dim_m
       << '\n';
  return os.str();
}

std::string census_to_json(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "  {\"type\":\"" << r.label << "\",\"quotient\":\""
       << r.quotient_name << "\",\"sharp_pos\":" << r.sharp_dp
       << ",\"sharp_mult1\":" << r.sharp_dp1 << ",\"m\":" << r.m
       << ",\"dim_M\":" << r.dim_m << "}" << (i + 1 < rows.size() ? "," : "")
       << "\n";
  }
  os << "]\n";
  return os.str();
}

}  // namespace isocartan
