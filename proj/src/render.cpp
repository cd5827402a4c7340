// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "bwc/errors.hpp"
#include "bwc/nefcone.hpp"

namespace bwc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

double to_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

std::string dec(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::pair<Rat, Rat> destabilizer_frame_coords(const WallRecord& w) {
    return w.frame.coords_of(w.destabilizer().ch1);
}

} // namespace

std::string global_map_status(const Surface& S) {
    bool is_p2 = S.rank() == 1 && S.intersection_matrix()[0][0] == 1 &&
                 S.chi_O() == 1 && S.canonical_class() == Divisor({rat(-3)});
    if (is_p2 || S.is_k3_like()) return "yes";
    return "unknown";
}

WallRow make_wall_row(const ChernCharacter& ch, const WallRecord& record) {
    WallRow row{record, {}, true};
    if (record.model == WallModel::TwistedK3) {
        row.divisor = k3_line_bundle(ch, record).expand_frame_symbols(record.frame);
        return row;
    }
    if (ch.ch0 > 0) {
        try {
            row.divisor = global_line_bundle_dim2(ch, record).picard_symbols;
        } catch (const ConditionCViolated&) {
            row.condition_c_ok = false;
            row.divisor = global_line_bundle_dim2(ch, record, true).picard_symbols;
        }
    } else if (ch.ch0 < 0) {
        row.divisor = global_line_bundle_dim2_dual(ch, record).picard_symbols;
    } else {
        row.divisor = decompose_dim1(ch, record.destabilizer(), record.frame).expr;
    }
    return row;
}

std::string render_walls_text(const JobSpec& job, const std::vector<WallRow>& rows) {
    std::ostringstream os;
    const Surface& S = job.surface_ref();
    os << "surface: " << S.name() << "\n";
    os << "character: ch = " << job.ch_ref().str() << "\n";
    os << "global map known: " << global_map_status(S) << "\n";
    os << "potential walls: " << rows.size()
       << "  (search bounds: max_rank=" << job.bounds.max_rank
       << " c1=" << job.bounds.c1_bound << " c2=" << job.bounds.c2_bound
       << " chi_num=" << job.bounds.chi_num_bound
       << " chi_denom=" << job.bounds.chi_denom << ")\n";
    if (rows.empty()) return os.str();

    os << "\n";
    os << "C | D | radius_sq | destabilizer | divisor | model\n";
    for (const WallRow& row : rows) {
        const WallRecord& w = row.record;
        os << rat_str(w.C) << " | " << rat_str(w.D) << " | " << rat_str(w.radius_sq)
           << " | " << w.destabilizer().str();
        if (w.destabilizers.size() > 1)
            os << " (+" << w.destabilizers.size() - 1 << " coincident)";
        os << " | " << row.divisor.str();
        if (!row.condition_c_ok) os << " [condition C violated]";
        os << " | " << to_string(w.model) << "\n";
    }
    return os.str();
}

std::string render_walls_csv(const std::vector<WallRow>& rows) {
    std::ostringstream os;
    os << "# schema: walls-v1\n";
    os << "C,D,radius_sq,ch0',c1,c2,chi',divisor_expr,model\n";
    for (const WallRow& row : rows) {
        const WallRecord& w = row.record;
        auto [c1, c2] = destabilizer_frame_coords(w);
        os << rat_str(w.C) << "," << rat_str(w.D) << "," << rat_str(w.radius_sq)
           << "," << w.destabilizer().ch0.get_str() << "," << rat_str(c1) << ","
           << rat_str(c2) << "," << rat_str(w.destabilizer().ch2) << ","
           << csv_escape(row.divisor.str()) << "," << to_string(w.model) << "\n";
    }
    return os.str();
}

std::string render_walls_json(const JobSpec& job, const std::vector<WallRow>& rows) {
    ordered_json doc;
    doc["schema"] = "walls-v1";
    doc["surface"] = job.surface_ref().name();
    doc["character"] = job.ch_ref().str();
    doc["global_map_known"] = global_map_status(job.surface_ref());
    doc["walls"] = ordered_json::array();
    for (const WallRow& row : rows) {
        const WallRecord& w = row.record;
        auto [c1, c2] = destabilizer_frame_coords(w);
        ordered_json entry;
        entry["C"] = rat_str(w.C);
        entry["D"] = rat_str(w.D);
        entry["radius_sq"] = rat_str(w.radius_sq);
        entry["ch0'"] = w.destabilizer().ch0.get_str();
        entry["c1"] = rat_str(c1);
        entry["c2"] = rat_str(c2);
        entry["chi'"] = rat_str(w.destabilizer().ch2);
        entry["divisor_expr"] = row.divisor.str();
        entry["model"] = to_string(w.model);
        ordered_json others = ordered_json::array();
        for (size_t i = 1; i < w.destabilizers.size(); ++i)
            others.push_back(w.destabilizers[i].str());
        entry["coincident_destabilizers"] = others;
        doc["walls"].push_back(entry);
    }
    return doc.dump(2) + "\n";
}

std::string render_walls_svg(const ChernCharacter& ch, const Frame& frame,
                             const std::vector<WallRecord>& walls) {
    const double panel = 360.0, margin = 40.0, gap = 60.0;
    const double width = 2 * panel + 2 * margin + gap;
    const double height = panel + 2 * margin;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!-- walls of ch = " << ch.str() << " on " << frame.surface().name()
       << " -->\n";
    os << "<!-- rational coordinates converted to decimal at 6 digits of "
          "precision for rendering only -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << dec(width) << "\" height=\"" << dec(height) << "\">\n";

    if (walls.empty()) {
        os << "  <text x=\"" << dec(width / 2) << "\" y=\"" << dec(height / 2)
           << "\" text-anchor=\"middle\" font-size=\"16\">trivial chamber: no "
              "walls</text>\n";
        os << "</svg>\n";
        return os.str();
    }

    double s_min = 0, s_max = 0, r_max = 0;
    for (const WallRecord& w : walls) {
        double c = to_double(w.C);
        double r = std::sqrt(std::max(0.0, to_double(w.radius_sq)));
        s_min = std::min(s_min, c - r);
        s_max = std::max(s_max, c + r);
        r_max = std::max(r_max, r);
    }
    double pad = 0.15 * std::max(1.0, s_max - s_min);
    s_min -= pad;
    s_max += pad;
    // Equal axis scales keep the wall circles round; every circle fits
    // because its diameter is contained in the s-range.
    double sx = panel / (s_max - s_min);
    double sy = sx;
    (void)r_max;

    auto st_x = [&](double s) { return margin + (s - s_min) * sx; };
    auto st_y = [&](double t) { return margin + panel - t * sy; };

    os << "  <g stroke=\"black\" fill=\"none\">\n";
    os << "    <line x1=\"" << dec(st_x(s_min)) << "\" y1=\"" << dec(st_y(0))
       << "\" x2=\"" << dec(st_x(s_max)) << "\" y2=\"" << dec(st_y(0)) << "\"/>\n";
    for (const WallRecord& w : walls) {
        double c = to_double(w.C);
        double r = std::sqrt(std::max(0.0, to_double(w.radius_sq)));
        os << "    <path d=\"M " << dec(st_x(c - r)) << " " << dec(st_y(0))
           << " A " << dec(r * sx) << " " << dec(r * sy) << " 0 0 1 "
           << dec(st_x(c + r)) << " " << dec(st_y(0)) << "\" stroke=\"#1f5fa8\"/>\n";
    }
    os << "  </g>\n";
    os << "  <text x=\"" << dec(margin + panel / 2) << "\" y=\""
       << dec(height - 10) << "\" text-anchor=\"middle\" font-size=\"12\">(s, t) "
          "model</text>\n";

    // Right panel: lines q = C s + D/2 over the wall's s-extent, plus the
    // boundary parabola q = s^2/2.
    double left2 = margin + panel + gap;
    double q_min = 1e300, q_max = -1e300;
    for (const WallRecord& w : walls) {
        double c = to_double(w.C), d = to_double(w.D);
        double r = std::sqrt(std::max(0.0, to_double(w.radius_sq)));
        for (double s : {c - r, c + r}) {
            double q = c * s + d / 2;
            q_min = std::min(q_min, q);
            q_max = std::max(q_max, q);
        }
    }
    std::optional<std::pair<Rat, Rat>> pivot = sq_line_of_wall(walls.front()).pivot;
    if (pivot) {
        q_min = std::min(q_min, to_double(pivot->second));
        q_max = std::max(q_max, to_double(pivot->second));
    }
    for (double s : {s_min, s_max}) {
        q_max = std::max(q_max, s * s / 2);
    }
    double qpad = 0.15 * std::max(1.0, q_max - q_min);
    q_min -= qpad;
    q_max += qpad;
    auto sq_x = [&](double s) { return left2 + (s - s_min) * sx; };
    auto sq_y = [&](double q) {
        return margin + panel - (q - q_min) / (q_max - q_min) * panel;
    };

    os << "  <g stroke=\"black\" fill=\"none\">\n";
    os << "    <polyline stroke=\"#888888\" points=\"";
    const int kSamples = 64;
    for (int i = 0; i <= kSamples; ++i) {
        double s = s_min + (s_max - s_min) * i / kSamples;
        os << dec(sq_x(s)) << "," << dec(sq_y(s * s / 2));
        if (i != kSamples) os << " ";
    }
    os << "\"/>\n";
    for (const WallRecord& w : walls) {
        double c = to_double(w.C), d = to_double(w.D);
        double r = std::sqrt(std::max(0.0, to_double(w.radius_sq)));
        double sa = c - r, sb = c + r;
        os << "    <line stroke=\"#1f5fa8\" x1=\"" << dec(sq_x(sa)) << "\" y1=\""
           << dec(sq_y(c * sa + d / 2)) << "\" x2=\"" << dec(sq_x(sb))
           << "\" y2=\"" << dec(sq_y(c * sb + d / 2)) << "\"/>\n";
    }
    if (pivot) {
        os << "    <circle fill=\"#c03030\" stroke=\"none\" cx=\""
           << dec(sq_x(to_double(pivot->first))) << "\" cy=\""
           << dec(sq_y(to_double(pivot->second))) << "\" r=\"3\"/>\n";
    }
    os << "  </g>\n";
    os << "  <text x=\"" << dec(left2 + panel / 2) << "\" y=\"" << dec(height - 10)
       << "\" text-anchor=\"middle\" font-size=\"12\">(s, q) model</text>\n";
    os << "</svg>\n";
    return os.str();
}

namespace {

std::vector<WallRow> enumerate_rows(const JobSpec& job, WallModel model) {
    const ChernCharacter& ch = job.ch_ref();
    std::vector<WallRecord> walls =
        enumerate_walls(ch, job.frame_ref(), job.bounds, model);
    std::vector<WallRow> rows;
    rows.reserve(walls.size());
    for (const WallRecord& w : walls) rows.push_back(make_wall_row(ch, w));
    return rows;
}

std::string run_walls(const JobSpec& job, WallModel model) {
    std::vector<WallRow> rows = enumerate_rows(job, model);
    if (job.format == "csv") return render_walls_csv(rows);
    if (job.format == "json") return render_walls_json(job, rows);
    if (job.format == "svg")
        throw ValidationError("use the plot command for SVG output");
    return render_walls_text(job, rows);
}

std::string run_decompose(const JobSpec& job) {
    const ChernCharacter& ch = job.ch_ref();
    const Frame& frame = job.frame_ref();
    StabilityPoint p(frame, job.s, job.t);
    std::ostringstream os;

    if (ch.ch0 == 0 && ch.ch1.is_zero()) {
        Dim0Result r = decompose_dim0(ch, p);
        os << "shape: dimension 0\n";
        os << "w_sigma: " << r.image.str() << "\n";
        os << "divisor: " << r.expr.str() << "\n";
        os << "independent of s: " << (r.independent_of_s ? "yes" : "no") << "\n";
        return os.str();
    }
    if (ch.ch0 == 0) {
        Dim1Result r = decompose_dim1(ch, job.chp_ref(), frame);
        os << "shape: dimension 1\n";
        os << "divisor: " << r.expr.str() << "\n";
        os << "coefficient (wall form): " << rat_str(r.coeff_wall_form) << "\n";
        os << "coefficient (simplified): " << rat_str(r.coeff_simplified) << "\n";
        return os.str();
    }
    Dim2Result r = decompose_dim2(ch, p);
    os << "shape: dimension 2\n";
    os << "mu: " << rat_str(r.mu) << "\n";
    os << "m(omega): " << r.m_omega.str() << "\n";
    os << "m(beta):  " << r.m_beta.str() << "\n";
    os << "w:        " << r.w_part.str() << "\n";
    os << "m(alpha): " << r.m_alpha.str() << "\n";
    os << "u:        " << r.u_part.str() << "\n";
    os << "w_sigma:  " << r.reassembled.str() << "\n";
    os << "divisor:  " << r.expr.str() << "\n";
    return os.str();
}

std::string run_nefcone(const JobSpec& job) {
    if (!job.fibered)
        throw ValidationError("nefcone needs a fibered preset (hirzebruch or elliptic)");
    const FiberedSurface& fs = *job.fibered;
    long n = job.n_ref();

    auto [lambda, u] = solve_balanced(fs, n);
    auto gens = nef_cone(fs, n);
    HigherRankBoundReport bound = higher_rank_bound_check(fs, n);
    long sweep_bound = std::max<long>(10, job.bounds.c1_bound);
    RankOneSweepReport sweep = rank_one_sweep(fs, n, sweep_bound);

    if (job.format == "json") {
        ordered_json doc;
        doc["schema"] = "nefcone-v1";
        doc["surface"] = fs.lattice().name();
        doc["n"] = n;
        doc["generators"] = {gens[0].str(), gens[1].str(), gens[2].str()};
        doc["balanced_lambda"] = rat_str(lambda);
        doc["balanced_u"] = rat_str(u);
        doc["gieseker_center"] = rat_str(sweep.gieseker_center);
        doc["higher_rank_lhs"] = rat_str(bound.lhs);
        doc["higher_rank_rhs"] = rat_str(bound.rhs);
        doc["higher_rank_strict"] = bound.strict;
        doc["rank_one_sweep_bound"] = sweep.bound;
        doc["rank_one_dominant"] = sweep.dominant;
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "surface: " << fs.lattice().name() << ", n = " << n << "\n";
    os << "nef cone generators:\n";
    for (const auto& g : gens) os << "  " << g.str() << "\n";
    os << "balanced frame: lambda = " << rat_str(lambda) << ", u = " << rat_str(u)
       << "\n";
    os << "Gieseker wall center: " << rat_str(sweep.gieseker_center) << "\n";
    os << "higher-rank bound: " << rat_str(bound.lhs) << " < " << rat_str(bound.rhs)
       << (bound.strict ? " (strict)" : " (FAILS)") << "\n";
    os << "rank-one sweep up to " << sweep.bound << ": "
       << (sweep.dominant ? "no outer wall" : "OUTER WALL FOUND") << "\n";
    return os.str();
}

std::string run_chamber(const JobSpec& job) {
    const ChernCharacter& ch = job.ch_ref();
    const Frame& frame = job.frame_ref();
    StabilityPoint p(frame, job.s, job.t);
    std::vector<WallRecord> walls = enumerate_walls(ch, frame, job.bounds);
    ChamberLabel label = chamber_classify(ch, p, walls);

    if (job.format == "json") {
        ordered_json doc;
        doc["schema"] = "chamber-v1";
        doc["label"] = to_string(label);
        doc["s"] = rat_str(job.s);
        doc["t"] = rat_str(job.t);
        doc["walls_found"] = walls.size();
        doc["search_max_rank"] = job.bounds.max_rank;
        doc["search_c1_bound"] = job.bounds.c1_bound;
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "point: (s, t) = (" << rat_str(job.s) << ", " << rat_str(job.t) << ")\n";
    os << "label: " << to_string(label) << "\n";
    os << "relative to " << walls.size()
       << " wall(s) found under bounds max_rank=" << job.bounds.max_rank
       << " c1=" << job.bounds.c1_bound << "\n";
    return os.str();
}

std::string run_dual_check(const JobSpec& job) {
    DualWallReport r =
        dual_wall_check(job.ch_ref(), job.chp_ref(), job.frame_ref());
    std::ostringstream os;
    os << "wall:      C = " << rat_str(r.wall.C) << ", D = " << rat_str(r.wall.D)
       << ", radius_sq = " << rat_str(r.wall.radius_sq) << "\n";
    os << "dual wall: C = " << rat_str(r.dual_wall.C)
       << ", D = " << rat_str(r.dual_wall.D)
       << ", radius_sq = " << rat_str(r.dual_wall.radius_sq) << "\n";
    os << "center negated:  " << (r.center_negated ? "pass" : "FAIL") << "\n";
    os << "D preserved:     " << (r.d_preserved ? "pass" : "FAIL") << "\n";
    os << "radius preserved:" << (r.radius_preserved ? " pass" : " FAIL") << "\n";
    os << "slope mirrored:  " << (r.slope_mirrored ? "pass" : "FAIL") << "\n";
    return os.str();
}

} // namespace

std::string run_job(const std::string& command, const JobSpec& job) {
    if (command == "walls")
        return run_walls(job, job.twisted ? WallModel::TwistedK3
                                          : WallModel::Untwisted);
    if (command == "k3-walls") return run_walls(job, WallModel::TwistedK3);
    if (command == "decompose") return run_decompose(job);
    if (command == "nefcone") return run_nefcone(job);
    if (command == "chamber") return run_chamber(job);
    if (command == "dual-check") return run_dual_check(job);
    if (command == "plot") {
        std::vector<WallRecord> walls = enumerate_walls(
            job.ch_ref(), job.frame_ref(), job.bounds,
            job.twisted ? WallModel::TwistedK3 : WallModel::Untwisted);
        return render_walls_svg(job.ch_ref(), job.frame_ref(), walls);
    }
    throw ValidationError("unknown command '" + command + "'");
}

} // namespace bwc
