// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwc/walls.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "bwc/errors.hpp"

namespace bwc {

namespace {

struct FrameCoords {
    Rat x, y1, y2, z;   // ch in frame coordinates
};

FrameCoords frame_coords(const ChernCharacter& ch, const Frame& frame) {
    auto [c1, c2] = frame.coords_of(ch.ch1);
    return {Rat(ch.ch0), c1, c2, ch.ch2};
}

// Lexicographic character order used for deterministic destabilizer lists.
bool char_less(const ChernCharacter& a, const ChernCharacter& b) {
    if (a.ch0 != b.ch0) return a.ch0 < b.ch0;
    for (int i = 0; i < a.ch1.rank(); ++i)
        if (a.ch1[i] != b.ch1[i]) return a.ch1[i] < b.ch1[i];
    return a.ch2 < b.ch2;
}

// Coarse realizability filter for a subobject or quotient class. Classes
// of nonzero rank must satisfy the Bogomolov bound; the bound does not
// apply to torsion classes (a sheaf on a negative curve violates it), so
// rank-0 classes are screened by nonnegative degree instead, and pure
// point classes by nonnegative length.
bool admissible_factor(const ChernCharacter& ch, const Frame& frame) {
    if (ch.ch0 != 0)
        return bogomolov_discriminant(ch, frame.surface()) >= 0;
    if (!ch.ch1.is_zero())
        return frame.surface().intersect(ch.ch1, frame.H()) >= 0;
    return ch.ch2 >= 0;
}

} // namespace

std::string to_string(WallModel model) {
    return model == WallModel::Untwisted ? "untwisted" : "twistedK3";
}

std::vector<std::pair<Rat, Rat>> WallRecord::rational_points(int count) const {
    std::vector<std::pair<Rat, Rat>> points;
    std::optional<Rat> rho = exact_sqrt(radius_sq);
    if (!rho || *rho == 0) return points;
    // Tangent-line parametrization from (C + rho, 0); m in (0, 1) keeps t > 0.
    for (int i = 1; i <= count; ++i) {
        Rat m = ratio(Int(i), Int(count + 1));
        Rat denom = 1 + m * m;
        points.emplace_back(C + *rho * (1 - m * m) / denom, *rho * 2 * m / denom);
    }
    return points;
}

WallRecord wall_of_pair(const ChernCharacter& ch, const ChernCharacter& chp,
                        const Frame& frame) {
    FrameCoords a = frame_coords(ch, frame);
    FrameCoords b = frame_coords(chp, frame);
    const Rat& g = frame.g();
    const Rat& d = frame.d();
    const Rat& u = frame.u();

    Rat denom = g * (a.x * b.y1 - b.x * a.y1);
    if (denom == 0)
        throw DegenerateWall("the pair ch = " + ch.str() + ", ch' = " + chp.str() +
                             " defines no wall in this frame");

    Rat C = (a.x * b.z - b.x * a.z + u * d * (a.x * b.y2 - b.x * a.y2)) / denom;
    Rat D = (2 * a.z * b.y1 - 2 * b.y2 * u * d * a.y1 - a.x * u * u * d * b.y1 +
             2 * a.y2 * u * d * b.y1 - 2 * b.z * a.y1 + b.x * u * u * d * a.y1) /
            denom;
    return WallRecord{ch, {chp}, frame, C, D, C * C + D, WallModel::Untwisted};
}

namespace {

Rat f_form(const Rat& x, const Rat& y1, const Rat& y2, const Rat& z,
           const Frame& frame) {
    const Rat& g = frame.g();
    const Rat& d = frame.d();
    Rat shift = frame.u() - y2 / x;
    return d / g * shift * shift + (y1 * y1 * g - y2 * y2 * d - 2 * x * z) / (x * x * g);
}

} // namespace

Rat F_invariant(const ChernCharacter& ch, const Frame& frame) {
    if (ch.ch0 == 0)
        throw ZeroRank("F is defined only for ch0 != 0");
    FrameCoords a = frame_coords(ch, frame);
    return f_form(a.x, a.y1, a.y2, a.z, frame);
}

Rat Fprime_invariant(const ChernCharacter& chp, const Frame& frame) {
    if (chp.ch0 == 0)
        throw ZeroRank("F' is defined only for rank != 0 destabilizers");
    FrameCoords b = frame_coords(chp, frame);
    return f_form(b.x, b.y1, b.y2, b.z, frame);
}

SqLine sq_line_of_wall(const WallRecord& w) {
    SqLine line{w.C, w.D / 2, std::nullopt};
    if (w.ch.ch0 != 0) {
        FrameCoords a = frame_coords(w.ch, w.frame);
        Rat F = f_form(a.x, a.y1, a.y2, a.z, w.frame);
        Rat pivot_s = a.y1 / a.x;
        line.pivot = std::make_pair(pivot_s, (pivot_s * pivot_s - F) / 2);
    }
    return line;
}

DualWallReport dual_wall_check(const ChernCharacter& ch, const ChernCharacter& chp,
                               const Frame& frame) {
    DualWallReport report{wall_of_pair(ch, chp, frame),
                          wall_of_pair(derived_dual(ch), derived_dual(chp),
                                       frame.negate_gamma()),
                          false, false, false, false};
    report.center_negated = report.dual_wall.C == -report.wall.C;
    report.d_preserved = report.dual_wall.D == report.wall.D;
    report.radius_preserved = report.dual_wall.radius_sq == report.wall.radius_sq;

    // mu at mirrored points: mu_{(-s,t)}(-ch*) = -mu_{(s,t)}(ch). The
    // identity is pointwise, so a few generic sample points decide it.
    report.slope_mirrored = true;
    const Rat samples[][2] = {{rat(0), rat(1)}, {rat(-2), rat(3)}, {rat(5, 2), rat(1, 3)}};
    for (const auto& st : samples) {
        StabilityPoint p(frame, st[0], st[1]);
        StabilityPoint pm(frame.negate_gamma(), -st[0], st[1]);
        Slope mu = bridgeland_slope(ch, p);
        Slope mu_dual = bridgeland_slope(derived_dual(ch), pm);
        bool ok = mu.is_infinite() ? mu_dual.is_infinite()
                                   : (!mu_dual.is_infinite() &&
                                      mu_dual.value() == -mu.value());
        if (!ok) report.slope_mirrored = false;
    }
    return report;
}

WallRecord k3_wall_of_pair(const ChernCharacter& ch, const ChernCharacter& chp,
                           const Frame& frame) {
    if (!frame.surface().is_k3_like())
        throw NotK3("twisted walls require a K3 lattice (K = 0, chi(O) = 2), got " +
                    frame.surface().name());
    WallRecord w = wall_of_pair(ch, chp, frame);
    w.radius_sq += 2 / frame.g();
    w.model = WallModel::TwistedK3;
    return w;
}

bool admissible_destabilizer(const ChernCharacter& ch, const ChernCharacter& chp,
                             const Rat& center, const Frame& frame) {
    if (!admissible_factor(chp, frame)) return false;
    if (!admissible_factor(ch - chp, frame)) return false;
    FrameCoords a = frame_coords(ch, frame);
    FrameCoords b = frame_coords(chp, frame);
    // Im ordering at the apex s = C; the common factor t g > 0 cancels.
    Rat im_sub = b.y1 - b.x * center;
    Rat im_tot = a.y1 - a.x * center;
    return im_sub > 0 && im_sub <= im_tot;
}

std::vector<WallRecord> enumerate_walls(const ChernCharacter& ch, const Frame& frame,
                                        const SearchBounds& bounds, WallModel model) {
    if (bounds.max_rank < 0 || bounds.c1_bound < 0 || bounds.c2_bound < 0 ||
        bounds.chi_num_bound < 0 || bounds.chi_denom < 1)
        throw EmptySearch("search bounds describe an empty destabilizer grid");
    if (model == WallModel::TwistedK3 && !frame.surface().is_k3_like())
        throw NotK3("twisted enumeration requires a K3 lattice");

    const Surface& S = frame.surface();
    const int rank = S.rank();
    FrameCoords a = frame_coords(ch, frame);
    Rat shift = model == WallModel::TwistedK3 ? Rat(2 / frame.g()) : Rat(0);

    // Grouped by exact (C, radius_sq); walls of one character are nested,
    // so this key separates genuinely distinct circles.
    std::map<std::pair<Rat, Rat>, WallRecord> found;

    std::vector<long> second_range{0};
    if (rank == 2) {
        second_range.clear();
        for (long v = -bounds.c2_bound; v <= bounds.c2_bound; ++v)
            second_range.push_back(v);
    }

    for (long r = -bounds.max_rank; r <= bounds.max_rank; ++r) {
        for (long p1 = -bounds.c1_bound; p1 <= bounds.c1_bound; ++p1) {
            for (long p2 : second_range) {
                for (long k = -bounds.chi_num_bound; k <= bounds.chi_num_bound; ++k) {
                    std::vector<Rat> coords{rat(p1)};
                    if (rank == 2) coords.push_back(rat(p2));
                    ChernCharacter chp{Int(r), Divisor(std::move(coords)),
                                       rat(k, 2 * bounds.chi_denom)};
                    if (chp.ch0 == 0 && chp.ch1.is_zero()) continue;

                    FrameCoords b{Rat(chp.ch0), Rat(0), Rat(0), chp.ch2};
                    try {
                        auto c = frame.coords_of(chp.ch1);
                        b.y1 = c.first;
                        b.y2 = c.second;
                    } catch (const InvalidInput&) {
                        continue;   // outside the frame span
                    }

                    Rat denom = frame.g() * (a.x * b.y1 - b.x * a.y1);
                    if (denom == 0) continue;

                    Rat C = (a.x * b.z - b.x * a.z +
                             frame.u() * frame.d() * (a.x * b.y2 - b.x * a.y2)) / denom;
                    Rat D = (2 * a.z * b.y1 - 2 * b.y2 * frame.u() * frame.d() * a.y1 -
                             a.x * frame.u() * frame.u() * frame.d() * b.y1 +
                             2 * a.y2 * frame.u() * frame.d() * b.y1 -
                             2 * b.z * a.y1 +
                             b.x * frame.u() * frame.u() * frame.d() * a.y1) / denom;
                    Rat radius_sq = C * C + D + shift;
                    if (radius_sq <= 0) continue;

                    if (!admissible_factor(chp, frame)) continue;
                    if (!admissible_factor(ch - chp, frame)) continue;

                    // Heart ordering at the apex s = C; the factor t g > 0 cancels.
                    Rat im_sub = b.y1 - b.x * C;
                    Rat im_tot = a.y1 - a.x * C;
                    if (!(im_sub > 0 && im_sub <= im_tot)) continue;

                    auto key = std::make_pair(C, radius_sq);
                    auto it = found.find(key);
                    if (it == found.end()) {
                        found.emplace(key, WallRecord{ch, {chp}, frame, C, D,
                                                      radius_sq, model});
                    } else {
                        it->second.destabilizers.push_back(chp);
                    }
                }
            }
        }
    }

    std::vector<WallRecord> walls;
    walls.reserve(found.size());
    for (auto& [key, record] : found) {
        std::sort(record.destabilizers.begin(), record.destabilizers.end(), char_less);
        walls.push_back(std::move(record));
    }
    std::sort(walls.begin(), walls.end(), [](const WallRecord& l, const WallRecord& r) {
        if (l.radius_sq != r.radius_sq) return l.radius_sq > r.radius_sq;
        return l.C < r.C;
    });
    return walls;
}

} // namespace bwc
