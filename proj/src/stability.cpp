// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwc/stability.hpp"

#include "bwc/errors.hpp"
#include "bwc/walls.hpp"

namespace bwc {

Frame::Frame(Surface surface, Divisor H, Divisor gamma, Rat u)
    : surface_(std::move(surface)), H_(std::move(H)), gamma_(std::move(gamma)),
      u_(std::move(u)) {
    if (H_.rank() != surface_.rank() || gamma_.rank() != surface_.rank())
        throw ValidationError("frame divisors must match the surface rank");
    if (surface_.intersect(H_, gamma_) != 0)
        throw ValidationError("frame requires Hodge orthogonality H.gamma = 0");
    g_ = surface_.intersect(H_, H_);
    if (g_ <= 0)
        throw ValidationError("frame requires H^2 > 0");
    Rat gamma_sq = surface_.intersect(gamma_, gamma_);
    if (gamma_sq > 0)
        throw ValidationError("frame requires gamma^2 <= 0");
    d_ = -gamma_sq;
    if ((d_ == 0) != gamma_.is_zero())
        throw ValidationError("gamma^2 = 0 forces gamma = 0 on this lattice");
    if (u_ < 0)
        throw ValidationError("frame requires u >= 0");
    if (gamma_.is_zero() && u_ != 0)
        throw ValidationError("u must be 0 when gamma = 0");
}

std::pair<Rat, Rat> Frame::coords_of(const Divisor& D) const {
    Rat c1 = surface_.intersect(D, H_) / g_;
    Rat c2(0);
    if (d_ != 0)
        c2 = -surface_.intersect(D, gamma_) / d_;
    if (!(H_.scaled(c1) + gamma_.scaled(c2) == D))
        throw InvalidInput("divisor " + D.str() + " is outside the (H, gamma) span");
    return {c1, c2};
}

Frame Frame::negate_gamma() const { return Frame(surface_, H_, -gamma_, u_); }

StabilityPoint::StabilityPoint(Frame frame, Rat s, Rat t)
    : frame_(std::move(frame)), s_(std::move(s)), t_(std::move(t)) {
    if (t_ <= 0)
        throw ValidationError("stability point requires t > 0");
}

Divisor StabilityPoint::omega() const { return frame_.H().scaled(t_); }

Divisor StabilityPoint::beta() const {
    return frame_.H().scaled(s_) + frame_.gamma().scaled(frame_.u());
}

Divisor StabilityPoint::alpha() const {
    return beta() - frame_.surface().canonical_class().scaled(rat(1, 2));
}

std::string ComplexRational::str() const {
    return rat_str(re) + (im < 0 ? " - " : " + ") + rat_str(abs(im)) + "i";
}

ComplexRational central_charge(const ChernCharacter& ch, const StabilityPoint& p) {
    const Surface& S = p.surface();
    Divisor om = p.omega();
    Divisor be = p.beta();
    Rat ch0(ch.ch0);
    Rat re = -ch.ch2 + S.intersect(be, ch.ch1)
           - ch0 / 2 * (S.intersect(be, be) - S.intersect(om, om));
    Rat im = S.intersect(om, ch.ch1) - ch0 * S.intersect(om, be);
    return {re, im};
}

ComplexRational twisted_central_charge(const ChernCharacter& ch, const StabilityPoint& p) {
    const Surface& S = p.surface();
    GradedClass tw = graded_mul({Rat(ch.ch0), ch.ch1, ch.ch2}, sqrt_todd(S), S);
    // ch0 is unchanged by the twist, so this stays a genuine character.
    ChernCharacter shifted{ch.ch0, tw.d1, tw.r2};
    return central_charge(shifted, p);
}

CharacteristicVector omega_vector(const StabilityPoint& p) {
    const Surface& S = p.surface();
    Divisor om = p.omega();
    Divisor A = p.beta() - S.canonical_class().scaled(rat(3, 4));
    Rat re2 = -S.intersect(om, om) / 2 + S.intersect(A, A) / 2
            - (Rat(S.chi_O()) - S.canonical_square() / 8) / 2;
    MukaiVector re{Rat(1), A, re2};
    MukaiVector im{Rat(0), om, S.intersect(A, om)};
    return {re, im};
}

CharacteristicVector omega_hat_vector(const StabilityPoint& p) {
    const Surface& S = p.surface();
    Divisor om = p.omega();
    Divisor A = p.beta() - S.canonical_class().scaled(rat(1, 2));
    MukaiVector re{Rat(1), A, (S.intersect(A, A) - S.intersect(om, om)) / 2};
    MukaiVector im{Rat(0), om, S.intersect(A, om)};
    return {re, im};
}

ComplexRational pair_characteristic(const CharacteristicVector& w,
                                    const MukaiVector& v, const Surface& S) {
    return {mukai_pairing(w.re, v, S), mukai_pairing(w.im, v, S)};
}

ComplexRational pair_characteristic(const CharacteristicVector& w,
                                    const CharacteristicVector& v, const Surface& S) {
    Rat rr = mukai_pairing(w.re, v.re, S);
    Rat ii = mukai_pairing(w.im, v.im, S);
    Rat ri = mukai_pairing(w.re, v.im, S);
    Rat ir = mukai_pairing(w.im, v.re, S);
    return {rr - ii, ri + ir};
}

const Rat& Slope::value() const {
    if (infinite_)
        throw InvalidInput("infinite slope has no rational value");
    return value_;
}

bool Slope::operator==(const Slope& o) const {
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return value_ == o.value_;
}

bool Slope::operator<(const Slope& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
}

std::string Slope::str() const { return infinite_ ? "+inf" : rat_str(value_); }

Slope bridgeland_slope(const ChernCharacter& ch, const StabilityPoint& p) {
    ComplexRational Z = central_charge(ch, p);
    if (Z.im == 0) return Slope::infinity();
    return Slope::finite(-Z.re / Z.im);
}

ComplexRational gl2_normalized_charge(const ChernCharacter& ch, const StabilityPoint& p) {
    ComplexRational Z = central_charge(ch, p);
    return {Z.re - p.s() / p.t() * Z.im, Z.im / p.t()};
}

std::pair<Rat, Rat> st_to_sq(const Rat& s, const Rat& t) {
    if (t <= 0) throw ValidationError("the (s, q) model requires t > 0");
    return {s, (s * s + t * t) / 2};
}

std::string to_string(ChamberLabel label) {
    switch (label) {
        case ChamberLabel::TC: return "TC";
        case ChamberLabel::SC: return "SC";
        case ChamberLabel::GC: return "GC";
        case ChamberLabel::UW: return "UW";
        case ChamberLabel::DGC: return "DGC";
        case ChamberLabel::DUW: return "DUW";
        case ChamberLabel::INTERIOR: return "INTERIOR";
        case ChamberLabel::INVALID: return "INVALID";
    }
    return "?";
}

ChamberLabel chamber_classify(const ChernCharacter& ch, const StabilityPoint& p,
                              const std::vector<WallRecord>& walls) {
    const Frame& fr = p.frame();
    const Surface& S = fr.surface();

    if (ch.ch0 == 0 && ch.ch1.is_zero())
        return ch.ch2 > 0 && is_integer(ch.ch2) ? ChamberLabel::TC
                                                : ChamberLabel::INVALID;

    ComplexRational Z = central_charge(ch, p);
    if (Z.im < 0) return ChamberLabel::INVALID;

    if (ch.ch0 != 0 && Z.im == 0)
        return ch.ch0 > 0 ? ChamberLabel::UW : ChamberLabel::DUW;
    if (Z.im == 0) return ChamberLabel::INVALID;

    // A point on or inside some wall belongs to no outer chamber.
    for (const WallRecord& w : walls) {
        if (w.empty()) continue;
        Rat lhs = (p.s() - w.C) * (p.s() - w.C) + p.t() * p.t();
        if (lhs <= w.radius_sq) return ChamberLabel::INTERIOR;
    }

    if (ch.ch0 != 0) {
        Rat s0 = S.intersect(ch.ch1, fr.H()) / (Rat(ch.ch0) * fr.g());
        if (ch.ch0 > 0 && p.s() < s0) return ChamberLabel::GC;
        if (ch.ch0 < 0 && p.s() > s0) return ChamberLabel::DGC;
        return ChamberLabel::INVALID;
    }
    if (S.intersect(ch.ch1, fr.H()) > 0) return ChamberLabel::SC;
    return ChamberLabel::INVALID;
}

} // namespace bwc
