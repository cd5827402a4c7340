// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bwc/bayer_macri.hpp"
#include "bwc/rational.hpp"
#include "bwc/stability.hpp"
#include "bwc/surface.hpp"
#include "bwc/walls.hpp"

namespace bwc {

// A surface fibered over the projective line with a section E of square
// -e and generic fiber F: a Hirzebruch surface (e >= 0) or an elliptic
// surface with a section (e >= 2). Picard rank two, all fibers assumed
// reduced and irreducible; none of that is validated beyond the lattice.
enum class FiberedKind { Hirzebruch, Elliptic };

class FiberedSurface {
public:
    FiberedSurface(FiberedKind kind, int e);

    FiberedKind kind() const { return kind_; }
    int e() const { return e_; }
    const Surface& lattice() const { return lattice_; }

    Divisor section() const;              // E
    Divisor fiber() const;                // F
    Divisor section_plus_fibers() const;  // E + eF

    // Output symbol for the nef generator E + eF; reads "E~" when e = 0.
    std::string section_symbol() const;

private:
    FiberedKind kind_;
    int e_;
    Surface lattice_;
};

// The ample class H = lambda (E + eF) + (1 - lambda) F, 0 < lambda < 1,
// with gamma = -lambda (E + eF) + (1 - lambda + e lambda) F chosen so
// that H.gamma = 0 and gamma^2 = -H^2 (hence d = g).
Frame toy_frame(const FiberedSurface& fs, const Rat& lambda, const Rat& u);

// The two rank-one destabilizer characters that can cut the Gieseker
// wall of ch = (1, 0, -n): (1, -F, 0) and (1, -E, -e/2).
std::pair<ChernCharacter, ChernCharacter> gieseker_candidates(const FiberedSurface& fs,
                                                              long n);

// Line bundle of the candidate's wall in the frame (lambda, u), expanded
// on the (E+eF)~ / F~ basis with the canonical symbol kept formal and
// B0 = B/2 substituted. Both candidate bundles are derived from the wall
// center by direct expansion; no tabulated closed form is used.
DivisorExpr candidate_line_bundle(const FiberedSurface& fs, long n, const Rat& lambda,
                                  const Rat& u, const ChernCharacter& chp);

// The frame on which the two candidate walls coincide and the two
// destabilizers have equal degree against H. Wall coincidence alone
// determines a one-parameter family of frames along which the resulting
// bundle is constant; the equal-degree condition pins the symmetric
// representative. Both equations are affine and solved exactly; the
// candidate bundles are verified equal at the solution.
std::pair<Rat, Rat> solve_balanced(const FiberedSurface& fs, long n);

// At the balanced frame, centers C_k of rank-k walls (k >= 2) satisfy
// C_k^2 <= (u^2 + 2n/g) (2k-1)^2 / ((2k-1)^2 - 1) <= (u^2 + 2n/g) 9/8.
// The report carries the exact comparison against the Gieseker center
// and the per-k bounds for k = 2 .. k_max.
struct HigherRankBoundReport {
    Rat lhs;                  // (u^2 + 2n/g) * 9/8
    Rat rhs;                  // (u - 2n)^2
    bool strict = false;      // lhs < rhs
    std::vector<Rat> per_k;   // bound on C_k^2, k = 2 .. k_max
};

HigherRankBoundReport higher_rank_bound_check(const FiberedSurface& fs, long n,
                                              int k_max = 6);

// Exhaustive rank-one sweep: destabilizers (1, -(mF + kE), L^2/2) over
// 0 <= m, k <= bound, (m, k) != (0, 0), length zero. Dominant means no
// such wall reaches outside the Gieseker wall; the two candidates attain
// it with equality.
struct RankOneSweepReport {
    long bound = 0;
    Rat gieseker_center;
    bool dominant = true;
    std::vector<ChernCharacter> violators;
};

RankOneSweepReport rank_one_sweep(const FiberedSurface& fs, long n, long bound);

// Nef cone generators of the Hilbert scheme of n points, n >= 2:
// (E+eF)~, F~, and the Gieseker-wall bundle computed at the balanced
// frame with the kind's canonical class substituted.
std::array<DivisorExpr, 3> nef_cone(const FiberedSurface& fs, long n);

} // namespace bwc
