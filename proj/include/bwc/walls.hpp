// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bwc/rational.hpp"
#include "bwc/stability.hpp"
#include "bwc/surface.hpp"

namespace bwc {

enum class WallModel { Untwisted, TwistedK3 };

std::string to_string(WallModel model);

// A potential wall W(ch, ch') in a fixed frame: the locus where the two
// Bridgeland slopes agree. In the (s, t) model it is the semicircle
// (s - C)^2 + t^2 = C^2 + D; in the twisted K3 model the radius squared
// is shifted by 2 / H^2 while C and D are unchanged.
//
// A record with radius_sq <= 0 is geometrically empty and flagged so.
// Coincident walls produced by distinct destabilizers share one record;
// destabilizers() lists them all, first entry is the representative.
struct WallRecord {
    ChernCharacter ch;
    std::vector<ChernCharacter> destabilizers;
    Frame frame;
    Rat C;
    Rat D;
    Rat radius_sq;
    WallModel model = WallModel::Untwisted;

    const ChernCharacter& destabilizer() const { return destabilizers.front(); }
    bool empty() const { return radius_sq <= 0; }

    // Rational points (s, t), t > 0, on the semicircle. Available exactly
    // when radius_sq is the square of a rational; otherwise empty.
    std::vector<std::pair<Rat, Rat>> rational_points(int count) const;
};

// Center and constant of W(ch, ch'). The denominator g (x c1' - r y1),
// in frame coordinates, must not vanish; DegenerateWall otherwise.
WallRecord wall_of_pair(const ChernCharacter& ch, const ChernCharacter& chp,
                        const Frame& frame);

// F(ch) = (d/g)(u - y2/x)^2 + (y1^2 g - y2^2 d - 2 x z) / (x^2 g),
// independent of the destabilizer; nonnegative for Bogomolov-type ch.
// ZeroRank when ch0 = 0. Fprime is the same form on (r, c1, c2, chi).
Rat F_invariant(const ChernCharacter& ch, const Frame& frame);
Rat Fprime_invariant(const ChernCharacter& chp, const Frame& frame);

// The wall as a semi-line q = C s + D/2 on q > s^2/2. When ch0 != 0 all
// wall lines of ch pass through the pivot (y1/x, (y1^2/x^2 - F)/2).
struct SqLine {
    Rat slope;
    Rat intercept;
    std::optional<std::pair<Rat, Rat>> pivot;
};

SqLine sq_line_of_wall(const WallRecord& w);

// Checks the derived-dual mirror: the wall of (-ch*, -ch'*) in the
// gamma-negated frame has C negated and D, radius preserved, and the
// slope mirrors as mu(-ch*) at (-s, t) = -mu(ch) at (s, t).
struct DualWallReport {
    WallRecord wall;
    WallRecord dual_wall;
    bool center_negated = false;
    bool d_preserved = false;
    bool radius_preserved = false;
    bool slope_mirrored = false;

    bool all_ok() const {
        return center_negated && d_preserved && radius_preserved && slope_mirrored;
    }
};

DualWallReport dual_wall_check(const ChernCharacter& ch, const ChernCharacter& chp,
                               const Frame& frame);

// Destabilizer search grid: integer rank in [-max_rank, max_rank],
// integer Picard coordinates of ch1' within the bounds, and
// ch2' = k / (2 chi_denom) for integers |k| <= chi_num_bound.
struct SearchBounds {
    long max_rank = 1;
    long c1_bound = 3;
    long c2_bound = 3;
    long chi_num_bound = 12;
    long chi_denom = 1;
};

// Enumerates nonempty potential walls over the grid. A candidate ch' is
// kept when the wall is nonempty, both ch' and ch - ch' pass the
// realizability screen (Bogomolov bound for nonzero rank, nonnegative
// H-degree for torsion classes, nonnegative length for point classes),
// and 0 < Im Z(ch') <= Im Z(ch) holds on the wall (decided exactly at
// the apex s = C, where the common factor t g > 0 cancels).
//
// Records are deduplicated by (C, radius_sq) and sorted outermost first:
// descending radius (walls of a fixed character are nested), ties by C,
// destabilizer lists in lexicographic character order. Candidates with a
// vanishing wall denominator are skipped silently. The output never
// certifies a wall as an actual Bridgeland wall; every record is a
// potential wall only.
//
// EmptySearch when the bounds describe an empty grid.
std::vector<WallRecord> enumerate_walls(const ChernCharacter& ch, const Frame& frame,
                                        const SearchBounds& bounds,
                                        WallModel model = WallModel::Untwisted);

// Twisted K3 wall of a pair: same C and D, radius_sq = C^2 + D + 2/g.
// NotK3 unless the surface has K = 0 and chi(O) = 2.
WallRecord k3_wall_of_pair(const ChernCharacter& ch, const ChernCharacter& chp,
                           const Frame& frame);

// The enumeration screen for one destabilizer of a wall with center C:
// both ch' and ch - ch' pass the realizability test and the heart
// ordering 0 < Im Z(ch') <= Im Z(ch) holds along the wall.
bool admissible_destabilizer(const ChernCharacter& ch, const ChernCharacter& chp,
                             const Rat& center, const Frame& frame);

} // namespace bwc
