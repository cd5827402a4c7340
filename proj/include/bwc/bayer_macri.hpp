// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bwc/rational.hpp"
#include "bwc/stability.hpp"
#include "bwc/surface.hpp"
#include "bwc/walls.hpp"

namespace bwc {

// Formal symbols for divisor classes on the moduli space.
namespace sym {
inline const std::string H = "H~";          // tilde of the frame's H
inline const std::string Gamma = "gamma~";  // tilde of the frame's gamma
inline const std::string K = "K~";          // tilde of the canonical class
inline const std::string B0 = "B0";         // boundary-type divisor
inline const std::string Support = "S";     // support-morphism bundle
inline const std::string T = "T";           // dimension-1 companion bundle
inline const std::string B = "B";           // Hilbert-Chow boundary (B0 = B/2)

inline std::string picard(const std::string& generator_name) {
    return generator_name + "~";
}
} // namespace sym

// A formal rational combination of divisor symbols. Expressions arising
// from nef line bundles are meaningful up to one positive rational
// scalar; proportional() decides that relation through the canonical
// normalization (first nonzero coefficient in pivot order scaled to
// +-1, which keeps its sign).
class DivisorExpr {
public:
    DivisorExpr() = default;

    DivisorExpr& add(const std::string& symbol, const Rat& c);
    Rat coeff(const std::string& symbol) const;
    const std::map<std::string, Rat>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    DivisorExpr operator+(const DivisorExpr& o) const;
    DivisorExpr operator-(const DivisorExpr& o) const;
    DivisorExpr scaled(const Rat& c) const;
    bool operator==(const DivisorExpr& o) const { return coeffs_ == o.coeffs_; }

    DivisorExpr normalized() const;
    bool proportional(const DivisorExpr& o) const;

    // Replaces the frame-level symbols H~, gamma~ (and K~ unless kept) by
    // their expansions over the Picard generator tildes; tilde is linear
    // in the divisor argument.
    DivisorExpr expand_frame_symbols(const Frame& frame, bool keep_canonical = false) const;

    // Replaces one symbol by an expression.
    DivisorExpr substituted(const std::string& symbol, const DivisorExpr& repl) const;

    std::string str() const;

private:
    std::map<std::string, Rat> coeffs_;
};

// w_sigma(ch) = (Im Z) Re Omega_Z - (Re Z) Im Omega_Z, always
// perpendicular to v(ch) under the Mukai pairing.
struct WSigma {
    MukaiVector vector;
    StabilityPoint source;
    ChernCharacter ch;
};

WSigma w_sigma(const ChernCharacter& ch, const StabilityPoint& p);

// True when a = c b for one positive rational scalar c.
bool positively_proportional(const MukaiVector& a, const MukaiVector& b);

// Building blocks of the rank-nonzero decomposition. All three pair to
// zero against v(ch). ZeroRank when ch0 = 0.
//   m(L, ch) = (0, L, (ch1/ch0 - 3K/4).L)
//   w(ch)    = (1, -3K/4, -ch2/ch0 - chi(O)/2 + 11 K^2/32)
//   u(ch)    = w(ch) + m(K/2, ch)
MukaiVector m_vector(const Divisor& L, const ChernCharacter& ch, const Surface& S);
MukaiVector w_vector(const ChernCharacter& ch, const Surface& S);
MukaiVector u_vector(const ChernCharacter& ch, const Surface& S);

// t(ch, ch') = (1, C H + u gamma - 3K/4, -3K/4.(C H + u gamma)
//               - chi(O)/2 + 11 K^2/32), with C the wall center.
MukaiVector t_vector(const ChernCharacter& ch, const ChernCharacter& chp,
                     const Frame& frame);

// Decomposition for ch = (0, 0, n), n > 0. The class is a positive
// multiple of Im Omega_Z = (0, omega, (beta - 3K/4).omega); its image on
// the symmetric-product side depends only on H, so the expression is
// reported on the Picard generator tildes. Distinct s values move the
// Mukai vector by a summand pairing to zero against v(ch), which is what
// independent_of_s records.
struct Dim0Result {
    MukaiVector image;
    DivisorExpr expr;
    bool independent_of_s = false;
};

Dim0Result decompose_dim0(const ChernCharacter& ch, const StabilityPoint& p);

// Decomposition on a wall for ch0 = 0, ch1.H > 0:
//   expr = (g D / 2 + d u^2 / 2) S - T.
// The coefficient has a second closed form (chi - g C c1 + u d c2) / r in
// the destabilizer's frame coordinates; both are returned and must agree.
struct Dim1Result {
    DivisorExpr expr;
    Rat coeff_wall_form;
    Rat coeff_simplified;
};

Dim1Result decompose_dim1(const ChernCharacter& ch, const ChernCharacter& chp,
                          const Frame& frame);

// Pointwise decomposition for ch0 != 0 on the upper half plane:
//   w_sigma = Im Z . (mu m(omega) + m(beta) + w)
//           = Im Z . (mu m(omega) + m(alpha) + u),   alpha = beta - K/2.
// Both component sums are returned together with the exact reassembly
// and the line bundle expression (-mu t - s) H~ - u gamma~ + K~/2 - B0.
struct Dim2Result {
    Rat mu;
    MukaiVector m_omega;
    MukaiVector m_beta;
    MukaiVector w_part;
    MukaiVector m_alpha;
    MukaiVector u_part;
    MukaiVector reassembled;
    DivisorExpr expr;
};

Dim2Result decompose_dim2(const ChernCharacter& ch, const StabilityPoint& p);

// Wall-to-divisor correspondence for ch0 > 0:
//   expr = -C H~ - u gamma~ + K~/2 - B0,
// together with its expansion over the Picard generator tildes.
//
// Condition (C) is checked from lattice data: ch0 > 0, Bogomolov type,
// and gcd(ch0, ch1.H, ch2 - ch1.K/2) = 1 (rational inputs are cleared to
// integers first). ConditionCViolated unless overridden.
struct GlobalLineBundle {
    DivisorExpr frame_symbols;
    DivisorExpr picard_symbols;
};

GlobalLineBundle global_line_bundle_dim2(const ChernCharacter& ch, const WallRecord& wall,
                                         bool override_condition_c = false);

// The mirrored-side form of the same correspondence, for ch0 < 0 at a
// wall in its own frame: +C H~ + u gamma~ + K~/2 - B0. Expanding both
// sides over Picard tildes, the mirrored expression of the dual pair
// agrees with the original one.
GlobalLineBundle global_line_bundle_dim2_dual(const ChernCharacter& ch,
                                              const WallRecord& wall);

// Specialization to the projective plane: -(C + 3/2) H~ - B0.
DivisorExpr abch_p2(const ChernCharacter& ch, const ChernCharacter& chp);

// Twisted K3 correspondence. Dimension 1 keeps (g D/2 + d u^2/2) S - T
// with the record's untwisted D; dimension 2 is -C H~ - u gamma~ - B0
// with no canonical term.
DivisorExpr k3_line_bundle(const ChernCharacter& ch, const WallRecord& wall);

// Exact identities satisfied at rational points of a wall:
//   mu omega + beta = C H + u gamma
//   beta.(mu omega + beta) - (omega^2 + beta^2)/2 = -g D/2 - d u^2/2.
// Points are sampled from the record when its radius squared is a
// rational square; callers may supply explicit points instead.
struct RelationReport {
    int points_checked = 0;
    bool slope_relation_ok = true;
    bool quadratic_relation_ok = true;
};

RelationReport relation_checks(const ChernCharacter& ch, const WallRecord& wall,
                               const Frame& frame,
                               const std::vector<std::pair<Rat, Rat>>& points = {});

} // namespace bwc
