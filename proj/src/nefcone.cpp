// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwc/nefcone.hpp"

#include "bwc/errors.hpp"

namespace bwc {

namespace {

// Rewrites E~, F~ coefficients onto the ((E+eF)~, F~) output basis:
// a E~ + b F~ = a (E+eF)~ + (b - a e) F~.
DivisorExpr to_section_fiber_basis(const DivisorExpr& expr, const FiberedSurface& fs) {
    DivisorExpr result;
    Rat a = expr.coeff(sym::picard("E"));
    Rat b = expr.coeff(sym::picard("F"));
    result.add(fs.section_symbol(), a);
    result.add(sym::picard("F"), b - a * rat(fs.e()));
    for (const auto& [s, c] : expr.coefficients())
        if (s != sym::picard("E") && s != sym::picard("F")) result.add(s, c);
    return result;
}

ChernCharacter ideal_points_character(long n) {
    return {Int(1), Divisor({rat(0), rat(0)}), rat(-n)};
}

} // namespace

FiberedSurface::FiberedSurface(FiberedKind kind, int e)
    : kind_(kind), e_(e),
      lattice_(kind == FiberedKind::Hirzebruch ? surface_hirzebruch(e)
                                               : surface_elliptic(e)) {}

Divisor FiberedSurface::section() const { return Divisor({rat(1), rat(0)}); }

Divisor FiberedSurface::fiber() const { return Divisor({rat(0), rat(1)}); }

Divisor FiberedSurface::section_plus_fibers() const {
    return Divisor({rat(1), rat(e_)});
}

std::string FiberedSurface::section_symbol() const {
    if (e_ == 0) return sym::picard("E");
    return sym::picard("(E+" + std::to_string(e_) + "F)");
}

Frame toy_frame(const FiberedSurface& fs, const Rat& lambda, const Rat& u) {
    if (!(lambda > 0 && lambda < 1))
        throw OutOfRange("toy frame needs 0 < lambda < 1");
    if (u < 0)
        throw OutOfRange("toy frame needs u >= 0");
    Divisor H = fs.section_plus_fibers().scaled(lambda) +
                fs.fiber().scaled(1 - lambda);
    Divisor gamma = fs.section_plus_fibers().scaled(-lambda) +
                    fs.fiber().scaled(1 - lambda + rat(fs.e()) * lambda);
    Frame frame(fs.lattice(), H, gamma, u);
    if (frame.d() != frame.g())
        throw InvalidInput("toy frame violates gamma^2 = -H^2");
    return frame;
}

std::pair<ChernCharacter, ChernCharacter> gieseker_candidates(const FiberedSurface& fs,
                                                              long n) {
    if (n < 2) throw OutOfRange("Hilbert scheme candidates need n >= 2");
    ChernCharacter fiber_type{Int(1), -fs.fiber(), rat(0)};
    ChernCharacter section_type{Int(1), -fs.section(), rat(-fs.e(), 2)};
    return {fiber_type, section_type};
}

DivisorExpr candidate_line_bundle(const FiberedSurface& fs, long n, const Rat& lambda,
                                  const Rat& u, const ChernCharacter& chp) {
    Frame frame = toy_frame(fs, lambda, u);
    WallRecord wall = wall_of_pair(ideal_points_character(n), chp, frame);
    GlobalLineBundle bundle =
        global_line_bundle_dim2(ideal_points_character(n), wall);
    DivisorExpr picard =
        bundle.frame_symbols.expand_frame_symbols(frame, /*keep_canonical=*/true);
    DivisorExpr half_boundary;
    half_boundary.add(sym::B, rat(1, 2));
    return to_section_fiber_basis(picard, fs).substituted(sym::B0, half_boundary);
}

std::pair<Rat, Rat> solve_balanced(const FiberedSurface& fs, long n) {
    if (n < 2) throw OutOfRange("balanced frame solve needs n >= 2");
    auto [cand_f, cand_e] = gieseker_candidates(fs, n);
    const Surface& S = fs.lattice();

    // Equal degree of the two destabilizers against H(lambda). The
    // difference (E - F).H(lambda) is affine in lambda; solve exactly.
    Divisor diff = fs.section() - fs.fiber();
    auto degree_gap = [&](const Rat& lambda) {
        Divisor H = fs.section_plus_fibers().scaled(lambda) +
                    fs.fiber().scaled(1 - lambda);
        return S.intersect(diff, H);
    };
    Rat at0 = degree_gap(rat(0));
    Rat at1 = degree_gap(rat(1));
    if (at0 == at1)
        throw NoSolution("destabilizer degrees never balance on this family");
    Rat lambda = at0 / (at0 - at1);
    if (!(lambda > 0 && lambda < 1))
        throw NoSolution("balanced lambda falls outside (0, 1)");

    // Wall coincidence: both centers are affine in u at fixed lambda.
    ChernCharacter ch = ideal_points_character(n);
    auto center = [&](const ChernCharacter& chp, const Rat& u) {
        return wall_of_pair(ch, chp, toy_frame(fs, lambda, u)).C;
    };
    Rat f0 = center(cand_f, rat(0));
    Rat f_slope = center(cand_f, rat(1)) - f0;
    Rat e0 = center(cand_e, rat(0));
    Rat e_slope = center(cand_e, rat(1)) - e0;
    if (f_slope == e_slope) {
        if (f0 != e0)
            throw NoSolution("candidate centers never coincide on this family");
        throw NoSolution("candidate centers coincide for every u; no pinned frame");
    }
    Rat u = (e0 - f0) / (f_slope - e_slope);
    if (u < 0)
        throw NoSolution("balanced u is negative");

    if (!(candidate_line_bundle(fs, n, lambda, u, cand_f) ==
          candidate_line_bundle(fs, n, lambda, u, cand_e)))
        throw NoSolution("candidate bundles disagree at the balanced frame");
    return {lambda, u};
}

HigherRankBoundReport higher_rank_bound_check(const FiberedSurface& fs, long n,
                                              int k_max) {
    auto [lambda, u] = solve_balanced(fs, n);
    Frame frame = toy_frame(fs, lambda, u);
    Rat base = u * u + 2 * rat(n) / frame.g();

    HigherRankBoundReport report;
    report.lhs = base * rat(9, 8);
    Rat center = u - 2 * rat(n);
    report.rhs = center * center;
    report.strict = report.lhs < report.rhs;
    for (int k = 2; k <= k_max; ++k) {
        Rat odd = rat(2 * k - 1);
        report.per_k.push_back(base * odd * odd / (odd * odd - 1));
    }
    return report;
}

RankOneSweepReport rank_one_sweep(const FiberedSurface& fs, long n, long bound) {
    auto [lambda, u] = solve_balanced(fs, n);
    Frame frame = toy_frame(fs, lambda, u);
    ChernCharacter ch = ideal_points_character(n);
    auto [cand_f, cand_e] = gieseker_candidates(fs, n);

    RankOneSweepReport report;
    report.bound = bound;
    report.gieseker_center = wall_of_pair(ch, cand_f, frame).C;

    // Positive length only shrinks the wall, so length zero is extremal
    // within each (m, k) family.
    for (long m = 0; m <= bound; ++m) {
        for (long k = 0; k <= bound; ++k) {
            if (m == 0 && k == 0) continue;
            Divisor L = fs.fiber().scaled(rat(-m)) + fs.section().scaled(rat(-k));
            ChernCharacter chp{Int(1), L, frame.surface().intersect(L, L) / 2};
            WallRecord wall = wall_of_pair(ch, chp, frame);
            if (wall.empty()) continue;
            if (!admissible_destabilizer(ch, chp, wall.C, frame)) continue;
            bool is_candidate = chp == cand_f || chp == cand_e;
            if (is_candidate) {
                if (wall.C != report.gieseker_center) {
                    report.dominant = false;
                    report.violators.push_back(chp);
                }
                continue;
            }
            // All rank-one walls here are nested around the same pivot
            // with C < 0, so farther outside means more negative center.
            if (wall.C <= report.gieseker_center) {
                report.dominant = false;
                report.violators.push_back(chp);
            }
        }
    }
    return report;
}

std::array<DivisorExpr, 3> nef_cone(const FiberedSurface& fs, long n) {
    if (n < 2) throw OutOfRange("the Hilbert scheme cone needs n >= 2");
    auto [lambda, u] = solve_balanced(fs, n);
    auto [cand_f, cand_e] = gieseker_candidates(fs, n);

    HigherRankBoundReport bound = higher_rank_bound_check(fs, n);
    if (!bound.strict)
        throw NoSolution("higher-rank walls are not excluded for these parameters");

    Frame frame = toy_frame(fs, lambda, u);
    ChernCharacter ch = ideal_points_character(n);
    WallRecord wall = wall_of_pair(ch, cand_f, frame);
    WallRecord wall_e = wall_of_pair(ch, cand_e, frame);
    if (wall.C != wall_e.C || wall.D != wall_e.D)
        throw NoSolution("candidate walls fail to coincide at the balanced frame");

    GlobalLineBundle bundle = global_line_bundle_dim2(ch, wall);
    DivisorExpr half_boundary;
    half_boundary.add(sym::B, rat(1, 2));
    DivisorExpr third = to_section_fiber_basis(bundle.picard_symbols, fs)
                            .substituted(sym::B0, half_boundary);

    DivisorExpr first;
    first.add(fs.section_symbol(), rat(1));
    DivisorExpr second;
    second.add(sym::picard("F"), rat(1));
    return {first, second, third};
}

} // namespace bwc
