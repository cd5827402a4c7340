// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bwc/rational.hpp"
#include "bwc/surface.hpp"

namespace bwc {

struct WallRecord;

// A frame is an ample class H, an orthogonal class gamma with
// gamma^2 <= 0, and a twist u >= 0. It fixes the (s, t) coordinates on
// a half plane of stability conditions via omega = tH, beta = sH + u gamma.
// Ampleness of H is declared by the caller; the lattice model carries no
// cone data to verify it against.
//
// Derived quantities g = H^2 > 0 and d = -gamma^2 >= 0 satisfy d = 0 iff
// gamma = 0 (Hodge index). On a rank-1 lattice gamma = 0 and u = 0 are
// required; with gamma = 0 a nonzero u would be unobservable.
class Frame {
public:
    Frame(Surface surface, Divisor H, Divisor gamma, Rat u);

    const Surface& surface() const { return surface_; }
    const Divisor& H() const { return H_; }
    const Divisor& gamma() const { return gamma_; }
    const Rat& u() const { return u_; }
    const Rat& g() const { return g_; }
    const Rat& d() const { return d_; }

    // Coordinates (c1, c2) of a divisor in the (H, gamma) basis.
    // Throws InvalidInput when the divisor is outside the span.
    std::pair<Rat, Rat> coords_of(const Divisor& D) const;

    // The same frame with gamma negated. The sign of gamma is a caller
    // choice; this is the explicit orientation flip used by duality.
    Frame negate_gamma() const;

private:
    Surface surface_;
    Divisor H_;
    Divisor gamma_;
    Rat u_;
    Rat g_;
    Rat d_;
};

// A point sigma_{s,t} of the frame's half plane, t > 0.
class StabilityPoint {
public:
    StabilityPoint(Frame frame, Rat s, Rat t);

    const Frame& frame() const { return frame_; }
    const Surface& surface() const { return frame_.surface(); }
    const Rat& s() const { return s_; }
    const Rat& t() const { return t_; }

    Divisor omega() const;   // t H
    Divisor beta() const;    // s H + u gamma
    Divisor alpha() const;   // beta - K_S / 2

private:
    Frame frame_;
    Rat s_;
    Rat t_;
};

struct ComplexRational {
    Rat re;
    Rat im;

    bool operator==(const ComplexRational& o) const { return re == o.re && im == o.im; }
    std::string str() const;
};

// Real and imaginary Mukai vectors of a characteristic class such as
// Omega_Z; degree-truncated at 2.
struct CharacteristicVector {
    MukaiVector re;
    MukaiVector im;
};

// Z_{omega,beta}(ch): re = -ch2 + beta.ch1 - ch0 (beta^2 - omega^2) / 2,
//                     im = omega.ch1 - ch0 omega.beta.
ComplexRational central_charge(const ChernCharacter& ch, const StabilityPoint& p);

// The sqrt(td)-twisted charge. Equals the untwisted charge of
// ch . sqrt(td(S)), which is the Mukai vector of ch read as a character.
ComplexRational twisted_central_charge(const ChernCharacter& ch, const StabilityPoint& p);

// Characteristic vector of Z: pairing against v(ch) recovers Z(ch).
CharacteristicVector omega_vector(const StabilityPoint& p);

// Characteristic vector of the twisted charge, exp(beta - K/2 + i omega)
// truncated at degree 2.
CharacteristicVector omega_hat_vector(const StabilityPoint& p);

// Mukai pairing of a characteristic vector against a real Mukai vector,
// and its C-bilinear extension to two characteristic vectors.
ComplexRational pair_characteristic(const CharacteristicVector& w,
                                    const MukaiVector& v, const Surface& S);
ComplexRational pair_characteristic(const CharacteristicVector& w,
                                    const CharacteristicVector& v, const Surface& S);

// Bridgeland slope -Re Z / Im Z with the distinguished value +infinity
// when Im Z = 0. Infinity orders above every rational.
class Slope {
public:
    static Slope infinity() { return Slope(true, Rat(0)); }
    static Slope finite(Rat v) { return Slope(false, std::move(v)); }

    bool is_infinite() const { return infinite_; }
    const Rat& value() const;

    bool operator==(const Slope& o) const;
    bool operator<(const Slope& o) const;

    std::string str() const;

private:
    Slope(bool inf, Rat v) : infinite_(inf), value_(std::move(v)) {}
    bool infinite_;
    Rat value_;
};

Slope bridgeland_slope(const ChernCharacter& ch, const StabilityPoint& p);

// Right GL2+ normalization: re' = re - (s/t) im, im' = im / t. Fixes the
// skyscraper charge and preserves every potential wall.
ComplexRational gl2_normalized_charge(const ChernCharacter& ch, const StabilityPoint& p);

// Change of model (s, t) -> (s, q) with q = (s^2 + t^2) / 2 > s^2 / 2.
std::pair<Rat, Rat> st_to_sq(const Rat& s, const Rat& t);

enum class ChamberLabel { TC, SC, GC, UW, DGC, DUW, INTERIOR, INVALID };

std::string to_string(ChamberLabel label);

// Classifies the point against the supplied wall list (expected to be
// the enumeration output for this character and frame). GC / DGC / SC
// mean "outside every wall found under the search bound"; callers report
// the bound alongside the label.
ChamberLabel chamber_classify(const ChernCharacter& ch, const StabilityPoint& p,
                              const std::vector<WallRecord>& walls);

} // namespace bwc
