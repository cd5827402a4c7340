// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwc/bayer_macri.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bwc/errors.hpp"

namespace bwc {

namespace {

// Print order: geometric symbols first, then the moduli-side bundles.
int print_rank(const std::string& s) {
    if (s == sym::H) return 0;
    if (s == sym::Gamma) return 1;
    if (s == sym::K) return 2;
    if (s == sym::B0) return 100;
    if (s == sym::Support) return 101;
    if (s == sym::T) return 102;
    if (s == sym::B) return 103;
    return 10;
}

// Pivot order for the canonical representative: B0, then S, then the
// geometric symbols. T and B never lead.
int pivot_rank(const std::string& s) {
    if (s == sym::B0) return 0;
    if (s == sym::Support) return 1;
    if (s == sym::H) return 2;
    if (s == sym::Gamma) return 3;
    if (s == sym::K) return 4;
    if (s == sym::T) return 100;
    if (s == sym::B) return 101;
    return 10;
}

template <typename RankFn>
std::vector<std::pair<std::string, Rat>> ordered_terms(
    const std::map<std::string, Rat>& coeffs, RankFn rank) {
    std::vector<std::pair<std::string, Rat>> terms(coeffs.begin(), coeffs.end());
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const auto& a, const auto& b) {
                         int ra = rank(a.first), rb = rank(b.first);
                         if (ra != rb) return ra < rb;
                         return a.first < b.first;
                     });
    return terms;
}

} // namespace

DivisorExpr& DivisorExpr::add(const std::string& symbol, const Rat& c) {
    if (c == 0) return *this;
    auto [it, inserted] = coeffs_.emplace(symbol, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
    return *this;
}

Rat DivisorExpr::coeff(const std::string& symbol) const {
    auto it = coeffs_.find(symbol);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

DivisorExpr DivisorExpr::operator+(const DivisorExpr& o) const {
    DivisorExpr result(*this);
    for (const auto& [s, c] : o.coeffs_) result.add(s, c);
    return result;
}

DivisorExpr DivisorExpr::operator-(const DivisorExpr& o) const {
    return *this + o.scaled(rat(-1));
}

DivisorExpr DivisorExpr::scaled(const Rat& c) const {
    DivisorExpr result;
    if (c == 0) return result;
    for (const auto& [s, v] : coeffs_) result.coeffs_.emplace(s, Rat(v * c));
    return result;
}

DivisorExpr DivisorExpr::normalized() const {
    if (coeffs_.empty()) return *this;
    auto terms = ordered_terms(coeffs_, pivot_rank);
    Rat pivot = abs(terms.front().second);
    return scaled(1 / pivot);
}

bool DivisorExpr::proportional(const DivisorExpr& o) const {
    return normalized() == o.normalized();
}

DivisorExpr DivisorExpr::expand_frame_symbols(const Frame& frame,
                                              bool keep_canonical) const {
    const Surface& S = frame.surface();
    auto tilde = [&](const Divisor& D) {
        DivisorExpr e;
        for (int i = 0; i < S.rank(); ++i)
            e.add(sym::picard(S.basis_name(i)), D[i]);
        return e;
    };
    DivisorExpr result;
    for (const auto& [s, c] : coeffs_) {
        if (s == sym::H)
            result = result + tilde(frame.H()).scaled(c);
        else if (s == sym::Gamma)
            result = result + tilde(frame.gamma()).scaled(c);
        else if (s == sym::K && !keep_canonical)
            result = result + tilde(S.canonical_class()).scaled(c);
        else
            result.add(s, c);
    }
    return result;
}

DivisorExpr DivisorExpr::substituted(const std::string& symbol,
                                     const DivisorExpr& repl) const {
    DivisorExpr result;
    for (const auto& [s, c] : coeffs_) {
        if (s == symbol)
            result = result + repl.scaled(c);
        else
            result.add(s, c);
    }
    return result;
}

std::string DivisorExpr::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : ordered_terms(coeffs_, print_rank)) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1) os << rat_str(a) << "*";
        os << s;
    }
    return os.str();
}

WSigma w_sigma(const ChernCharacter& ch, const StabilityPoint& p) {
    const Surface& S = p.surface();
    ComplexRational Z = central_charge(ch, p);
    CharacteristicVector omega = omega_vector(p);
    MukaiVector w = omega.re.scaled(Z.im) - omega.im.scaled(Z.re);
    if (mukai_pairing(w, mukai_vector(ch, S), S) != 0)
        throw InvalidInput("w_sigma failed the perpendicularity invariant");
    return {w, p, ch};
}

bool positively_proportional(const MukaiVector& a, const MukaiVector& b) {
    std::vector<Rat> av{a.v0}, bv{b.v0};
    for (const Rat& c : a.v1.coords()) av.push_back(c);
    for (const Rat& c : b.v1.coords()) bv.push_back(c);
    av.push_back(a.v2);
    bv.push_back(b.v2);
    if (av.size() != bv.size()) return false;
    for (size_t i = 0; i < bv.size(); ++i) {
        if (bv[i] == 0) continue;
        Rat c = av[i] / bv[i];
        if (c <= 0) return false;
        return a == b.scaled(c);
    }
    return a == b;   // b = 0: proportional only to 0
}

MukaiVector m_vector(const Divisor& L, const ChernCharacter& ch, const Surface& S) {
    if (ch.ch0 == 0) throw ZeroRank("m(L, ch) needs ch0 != 0");
    Divisor slope_class = ch.ch1.scaled(ratio(Int(1), ch.ch0)) -
                          S.canonical_class().scaled(rat(3, 4));
    return {Rat(0), L, S.intersect(slope_class, L)};
}

MukaiVector w_vector(const ChernCharacter& ch, const Surface& S) {
    if (ch.ch0 == 0) throw ZeroRank("w(ch) needs ch0 != 0");
    Rat k2 = S.canonical_square();
    return {Rat(1), S.canonical_class().scaled(rat(-3, 4)),
            -ch.ch2 / Rat(ch.ch0) - Rat(S.chi_O()) / 2 + rat(11, 32) * k2};
}

MukaiVector u_vector(const ChernCharacter& ch, const Surface& S) {
    return w_vector(ch, S) +
           m_vector(S.canonical_class().scaled(rat(1, 2)), ch, S);
}

MukaiVector t_vector(const ChernCharacter& ch, const ChernCharacter& chp,
                     const Frame& frame) {
    const Surface& S = frame.surface();
    WallRecord wall = wall_of_pair(ch, chp, frame);
    Divisor center_class = frame.H().scaled(wall.C) + frame.gamma().scaled(frame.u());
    Divisor k34 = S.canonical_class().scaled(rat(3, 4));
    return {Rat(1), center_class - k34,
            -S.intersect(k34, center_class) - Rat(S.chi_O()) / 2 +
                rat(11, 32) * S.canonical_square()};
}

Dim0Result decompose_dim0(const ChernCharacter& ch, const StabilityPoint& p) {
    if (!(ch.ch0 == 0 && ch.ch1.is_zero() && ch.ch2 > 0 && is_integer(ch.ch2)))
        throw WrongShape("dimension-0 decomposition needs ch = (0, 0, n) with n > 0");
    const Surface& S = p.surface();
    const Frame& fr = p.frame();

    Dim0Result result;
    result.image = w_sigma(ch, p).vector;

    for (int i = 0; i < S.rank(); ++i)
        result.expr.add(sym::picard(S.basis_name(i)), fr.H()[i]);

    // Moving s changes the class by a summand annihilated by pairing
    // against v(ch); decided exactly at s and s + 1.
    StabilityPoint shifted(fr, p.s() + 1, p.t());
    MukaiVector delta = w_sigma(ch, shifted).vector - result.image;
    result.independent_of_s =
        mukai_pairing(delta, mukai_vector(ch, S), S) == 0 &&
        delta.v0 == 0 && delta.v1.is_zero();
    return result;
}

Dim1Result decompose_dim1(const ChernCharacter& ch, const ChernCharacter& chp,
                          const Frame& frame) {
    const Surface& S = frame.surface();
    if (ch.ch0 != 0 || !(S.intersect(ch.ch1, frame.H()) > 0))
        throw WrongShape("dimension-1 decomposition needs ch0 = 0 and ch1.H > 0");
    if (chp.ch0 == 0)
        throw ZeroRank("a destabilizer of a dimension-1 class has nonzero rank");

    WallRecord wall = wall_of_pair(ch, chp, frame);
    Rat coeff = frame.g() / 2 * wall.D + frame.d() / 2 * frame.u() * frame.u();

    auto [c1, c2] = frame.coords_of(chp.ch1);
    Rat simplified = (chp.ch2 - frame.g() * wall.C * c1 +
                      frame.u() * frame.d() * c2) / Rat(chp.ch0);
    if (coeff != simplified)
        throw InvalidInput("dimension-1 coefficient forms disagree");

    Dim1Result result;
    result.expr.add(sym::Support, coeff).add(sym::T, rat(-1));
    result.coeff_wall_form = coeff;
    result.coeff_simplified = simplified;
    return result;
}

Dim2Result decompose_dim2(const ChernCharacter& ch, const StabilityPoint& p) {
    if (ch.ch0 == 0)
        throw WrongShape("dimension-2 decomposition needs ch0 != 0");
    ComplexRational Z = central_charge(ch, p);
    if (!(Z.im > 0))
        throw NotUpperHalfPlane("dimension-2 decomposition needs Im Z > 0");

    const Surface& S = p.surface();
    Dim2Result result;
    result.mu = -Z.re / Z.im;
    result.m_omega = m_vector(p.omega(), ch, S);
    result.m_beta = m_vector(p.beta(), ch, S);
    result.w_part = w_vector(ch, S);
    result.m_alpha = m_vector(p.alpha(), ch, S);
    result.u_part = u_vector(ch, S);

    MukaiVector beta_form = result.m_omega.scaled(result.mu) + result.m_beta + result.w_part;
    MukaiVector alpha_form = result.m_omega.scaled(result.mu) + result.m_alpha + result.u_part;
    if (!(beta_form == alpha_form))
        throw InvalidInput("alpha and beta forms of the decomposition disagree");

    result.reassembled = beta_form.scaled(Z.im);
    if (!(result.reassembled == w_sigma(ch, p).vector))
        throw InvalidInput("decomposition does not reassemble to w_sigma");

    result.expr.add(sym::H, -result.mu * p.t() - p.s())
        .add(sym::Gamma, -p.frame().u())
        .add(sym::K, rat(1, 2))
        .add(sym::B0, rat(-1));
    return result;
}

namespace {

// gcd(ch0, ch1.H, ch2 - ch1.K/2), cleared to integers first.
bool condition_c_gcd(const ChernCharacter& ch, const Frame& frame) {
    const Surface& S = frame.surface();
    Rat a(ch.ch0);
    Rat b = S.intersect(ch.ch1, frame.H());
    Rat c = ch.ch2 - S.intersect(ch.ch1, S.canonical_class()) / 2;
    Int lcm(1);
    for (const Rat* r : {&a, &b, &c})
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r->get_den().get_mpz_t());
    Int g(0);
    for (const Rat* r : {&a, &b, &c}) {
        Int cleared = r->get_num() * (lcm / r->get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cleared.get_mpz_t());
    }
    return g == 1;
}

DivisorExpr dim2_wall_expr(const Rat& C, const Frame& frame, bool with_canonical,
                           bool mirrored_side) {
    Rat sign = mirrored_side ? rat(1) : rat(-1);
    DivisorExpr expr;
    expr.add(sym::H, sign * C)
        .add(sym::Gamma, sign * frame.u())
        .add(sym::B0, rat(-1));
    if (with_canonical) expr.add(sym::K, rat(1, 2));
    return expr;
}

} // namespace

GlobalLineBundle global_line_bundle_dim2(const ChernCharacter& ch, const WallRecord& wall,
                                         bool override_condition_c) {
    if (!(ch.ch0 > 0))
        throw WrongShape("the wall-to-divisor correspondence needs ch0 > 0");
    const Frame& frame = wall.frame;
    if (!override_condition_c) {
        if (bogomolov_discriminant(ch, frame.surface()) < 0)
            throw ConditionCViolated("ch is not of Bogomolov type");
        if (!condition_c_gcd(ch, frame))
            throw ConditionCViolated(
                "gcd(ch0, ch1.H, ch2 - ch1.K/2) != 1; pass the override to proceed");
    }
    DivisorExpr expr = dim2_wall_expr(wall.C, frame, /*with_canonical=*/true,
                                      /*mirrored_side=*/false);
    return {expr, expr.expand_frame_symbols(frame)};
}

GlobalLineBundle global_line_bundle_dim2_dual(const ChernCharacter& ch,
                                              const WallRecord& wall) {
    if (!(ch.ch0 < 0))
        throw WrongShape("the mirrored correspondence needs ch0 < 0");
    DivisorExpr expr = dim2_wall_expr(wall.C, wall.frame, /*with_canonical=*/true,
                                      /*mirrored_side=*/true);
    return {expr, expr.expand_frame_symbols(wall.frame)};
}

DivisorExpr abch_p2(const ChernCharacter& ch, const ChernCharacter& chp) {
    if (ch.ch1.rank() != 1)
        throw WrongSurface("abch_p2 is specific to the projective plane");
    Surface p2 = surface_p2();
    if (!(ch.ch0 > 0))
        throw WrongShape("abch_p2 needs ch0 > 0");
    Frame frame(p2, Divisor({rat(1)}), Divisor({rat(0)}), rat(0));
    WallRecord wall = wall_of_pair(ch, chp, frame);
    DivisorExpr expr;
    expr.add(sym::H, -(wall.C + rat(3, 2))).add(sym::B0, rat(-1));
    return expr;
}

DivisorExpr k3_line_bundle(const ChernCharacter& ch, const WallRecord& wall) {
    const Frame& frame = wall.frame;
    if (!frame.surface().is_k3_like())
        throw NotK3("k3_line_bundle requires a K3 lattice");
    if (wall.model != WallModel::TwistedK3)
        throw InvalidInput("k3_line_bundle expects a twisted wall record");

    if (ch.ch0 == 0) {
        if (!(frame.surface().intersect(ch.ch1, frame.H()) > 0))
            throw WrongShape("dimension-1 twisted bundle needs ch1.H > 0");
        Rat coeff = frame.g() / 2 * wall.D + frame.d() / 2 * frame.u() * frame.u();
        DivisorExpr expr;
        expr.add(sym::Support, coeff).add(sym::T, rat(-1));
        return expr;
    }
    if (ch.ch0 < 0)
        throw WrongShape("apply the derived dual first for ch0 < 0");
    return dim2_wall_expr(wall.C, frame, /*with_canonical=*/false,
                          /*mirrored_side=*/false);
}

RelationReport relation_checks(const ChernCharacter& ch, const WallRecord& wall,
                               const Frame& frame,
                               const std::vector<std::pair<Rat, Rat>>& points) {
    if (wall.model != WallModel::Untwisted)
        throw InvalidInput("relation_checks applies to untwisted walls");
    std::vector<std::pair<Rat, Rat>> samples = points;
    if (samples.empty()) samples = wall.rational_points(7);

    const Surface& S = frame.surface();
    RelationReport report;
    for (const auto& [s, t] : samples) {
        StabilityPoint p(frame, s, t);
        ComplexRational Z = central_charge(ch, p);
        if (Z.im == 0) continue;
        Rat mu = -Z.re / Z.im;
        report.points_checked++;

        Divisor lhs1 = p.omega().scaled(mu) + p.beta();
        Divisor rhs1 = frame.H().scaled(wall.C) + frame.gamma().scaled(frame.u());
        if (!(lhs1 == rhs1)) report.slope_relation_ok = false;

        Divisor om = p.omega();
        Divisor be = p.beta();
        Rat lhs2 = S.intersect(be, lhs1) -
                   (S.intersect(om, om) + S.intersect(be, be)) / 2;
        Rat rhs2 = -frame.g() / 2 * wall.D -
                   frame.d() / 2 * frame.u() * frame.u();
        if (lhs2 != rhs2) report.quadratic_relation_ok = false;
    }
    return report;
}

} // namespace bwc
