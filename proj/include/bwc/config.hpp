// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>

#include "bwc/nefcone.hpp"
#include "bwc/rational.hpp"
#include "bwc/stability.hpp"
#include "bwc/surface.hpp"
#include "bwc/walls.hpp"

namespace bwc {

// One configuration value with its source position (1-based; 0 when the
// value came from a command-line flag).
struct ConfigValue {
    std::string text;
    int line = 0;
    int column = 0;
};

// Keys are "section.name" in the documented key=value format with
// sections [surface], [character], [frame], [search], [output].
using RawConfig = std::map<std::string, ConfigValue>;

// Parses the text format. Full-line comments start with '#' or ';'.
// Throws ParseError with the offending position.
RawConfig parse_config_text(const std::string& text);

// A fully validated job. Every rational was parsed exactly; decimal
// literals are rejected at parse time.
struct JobSpec {
    std::optional<Surface> surface;
    std::optional<FiberedSurface> fibered;
    std::optional<ChernCharacter> ch;
    std::optional<ChernCharacter> chp;
    std::optional<Frame> frame;
    Rat s = Rat(0);
    Rat t = Rat(1);
    std::optional<long> n;
    SearchBounds bounds;
    std::string format = "text";
    bool twisted = false;

    const Surface& surface_ref() const;
    const ChernCharacter& ch_ref() const;
    const ChernCharacter& chp_ref() const;
    const Frame& frame_ref() const;
    long n_ref() const;
};

// Validates a raw configuration into a JobSpec. Unknown keys, malformed
// values, and violated invariants raise ParseError or ValidationError
// citing the key and, when applicable, the invariant.
JobSpec resolve_job(const RawConfig& raw);

// parse_config_text followed by resolve_job.
JobSpec parse_job(const std::string& config_text);

} // namespace bwc
