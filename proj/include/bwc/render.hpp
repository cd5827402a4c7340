// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "bwc/bayer_macri.hpp"
#include "bwc/config.hpp"
#include "bwc/walls.hpp"

namespace bwc {

// A wall with its divisor-expression column for table output.
struct WallRow {
    WallRecord record;
    DivisorExpr divisor;
    bool condition_c_ok = true;
};

// Whether a global wall-to-divisor correspondence is established for
// this lattice ("yes" for the projective plane and K3, else "unknown").
std::string global_map_status(const Surface& S);

// Builds the divisor column for one wall record, dispatching on the
// shape of ch and the wall model.
WallRow make_wall_row(const ChernCharacter& ch, const WallRecord& record);

std::string render_walls_text(const JobSpec& job, const std::vector<WallRow>& rows);
std::string render_walls_csv(const std::vector<WallRow>& rows);
std::string render_walls_json(const JobSpec& job, const std::vector<WallRow>& rows);

// Two panels: nested semicircles in (s, t) and the wall lines in (s, q)
// with the pivot marked when ch0 != 0. Rational data is converted to
// decimals only here, at a precision declared in the file header.
std::string render_walls_svg(const ChernCharacter& ch, const Frame& frame,
                             const std::vector<WallRecord>& walls);

// Dispatches a CLI command over a validated job and returns the artifact
// text (the SVG body for `plot`). Commands: walls, decompose, nefcone,
// chamber, dual-check, k3-walls, plot.
std::string run_job(const std::string& command, const JobSpec& job);

} // namespace bwc
