// Copyright (c) 2026 isocartan contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef ISOCARTAN_JSON_IO_HPP
#define ISOCARTAN_JSON_IO_HPP

#include <string>
#include <vector>

#include "isocartan/cartan.hpp"
#include "isocartan/focal.hpp"
#include "isocartan/model.hpp"

namespace isocartan {

// Canonical on-disk model schema:
//   {"name": str,
//    "ambient": {"kind": "compact"|"noncompact"|"spaceform", "c": number?},
//    "blocks": [{"lambda": number, "mu": number, "mult": int}, ...]}
std::string model_to_json(const HypersurfaceModel& model);

/// Parses the model schema.  Throws ParseError naming the offending field.
HypersurfaceModel model_from_json(const std::string& text);

/// Reads and parses a model file.  Throws ParseError naming the file.
HypersurfaceModel model_from_file(const std::string& path);

// Radii report: [{"re": x, "im": y, "mult": m, "blocks": [indices]}, ...],
// ordered by (Re, Im).
std::string radii_to_json(const std::vector<FocalRadius>& radii);

// Identity report with per-term breakdown.
std::string report_to_json(const IdentityReport& report,
                           const HypersurfaceModel& model);
std::string reports_to_json(const std::vector<IdentityReport>& reports,
                            const HypersurfaceModel& model);

/// Human-readable term table with columns
/// (lambda, mu, m, in_S, term, |total|, verdict).
std::string report_to_text(const IdentityReport& report,
                           const HypersurfaceModel& model);

}  // namespace isocartan

#endif  // ISOCARTAN_JSON_IO_HPP
