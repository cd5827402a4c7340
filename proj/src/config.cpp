// Copyright 2026 The bwc Authors
// SPDX-License-Identifier: Apache-2.0

#include "bwc/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bwc/errors.hpp"

namespace bwc {

namespace {

const std::set<std::string> kKnownKeys = {
    "surface.preset", "surface.name", "surface.e", "surface.rank",
    "surface.intersection", "surface.canonical", "surface.chi_o",
    "character.ch", "character.chp", "character.n",
    "frame.H", "frame.gamma", "frame.u", "frame.lambda", "frame.s", "frame.t",
    "search.max_rank", "search.c1_bound", "search.c2_bound",
    "search.chi_num_bound", "search.chi_denom",
    "output.format", "output.twisted",
};

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Rat parse_rat_at(const ConfigValue& v, const std::string& key) {
    try {
        return rat_parse(v.text);
    } catch (const Error& err) {
        throw ParseError(v.line, v.column,
                         "value of '" + key + "': " + err.message());
    }
}

long parse_long_at(const ConfigValue& v, const std::string& key) {
    Rat r = parse_rat_at(v, key);
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw ParseError(v.line, v.column, "value of '" + key + "' must be an integer");
    return r.get_num().get_si();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// Divisor coordinates are whitespace separated: "1 0".
Divisor parse_divisor(const ConfigValue& v, const std::string& key, int rank) {
    std::istringstream is(v.text);
    std::vector<Rat> coords;
    std::string tok;
    while (is >> tok)
        coords.push_back(parse_rat_at({tok, v.line, v.column}, key));
    if (static_cast<int>(coords.size()) != rank)
        throw ValidationError("'" + key + "' needs " + std::to_string(rank) +
                              " coordinate(s)");
    return Divisor(std::move(coords));
}

// A character is "ch0, c1 c2, ch2": three comma-separated fields, the
// middle one holding the divisor coordinates.
ChernCharacter parse_character(const ConfigValue& v, const std::string& key,
                               int rank) {
    auto fields = split(v.text, ',');
    if (fields.size() != 3)
        throw ValidationError("'" + key +
                              "' needs the form ch0, ch1 coords, ch2 "
                              "(3 comma-separated fields)");
    Rat ch0 = parse_rat_at({trim(fields.front()), v.line, v.column}, key);
    if (!is_integer(ch0))
        throw ValidationError("'" + key + "': ch0 must be an integer");
    Divisor ch1 = parse_divisor({trim(fields[1]), v.line, v.column}, key, rank);
    Rat ch2 = parse_rat_at({trim(fields.back()), v.line, v.column}, key);
    return {ch0.get_num(), ch1, ch2};
}

std::vector<std::vector<Int>> parse_matrix(const ConfigValue& v,
                                           const std::string& key) {
    std::vector<std::vector<Int>> rows;
    for (const std::string& row_text : split(v.text, ';')) {
        std::istringstream is(row_text);
        std::vector<Int> row;
        std::string tok;
        while (is >> tok) {
            Rat r = parse_rat_at({tok, v.line, v.column}, key);
            if (!is_integer(r))
                throw ValidationError("'" + key + "' entries must be integers");
            row.push_back(r.get_num());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

RawConfig parse_config_text(const std::string& text) {
    RawConfig raw;
    std::istringstream is(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ParseError(line_no, 1, "unterminated section header");
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw ParseError(line_no, 1, "empty section name");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(line_no, 1, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ParseError(line_no, 1, "missing key before '='");
        if (section.empty())
            throw ParseError(line_no, 1, "key '" + key + "' outside any section");
        std::string full = section + "." + key;
        if (raw.count(full))
            throw ParseError(line_no, 1, "duplicate key '" + full + "'");
        int col = static_cast<int>(eq) + 2;
        raw[full] = ConfigValue{trim(line.substr(eq + 1)), line_no, col};
    }
    return raw;
}

const Surface& JobSpec::surface_ref() const {
    if (!surface) throw ValidationError("no surface configured");
    return *surface;
}

const ChernCharacter& JobSpec::ch_ref() const {
    if (!ch) throw ValidationError("this command needs a character ([character] ch)");
    return *ch;
}

const ChernCharacter& JobSpec::chp_ref() const {
    if (!chp)
        throw ValidationError("this command needs a destabilizer ([character] chp)");
    return *chp;
}

const Frame& JobSpec::frame_ref() const {
    if (!frame)
        throw ValidationError(
            "this command needs a frame ([frame] H/gamma/u, or lambda/u on a "
            "fibered preset)");
    return *frame;
}

long JobSpec::n_ref() const {
    if (!n) throw ValidationError("this command needs [character] n >= 2");
    return *n;
}

JobSpec resolve_job(const RawConfig& raw) {
    for (const auto& [key, value] : raw)
        if (!kKnownKeys.count(key))
            throw ValidationError("unknown configuration key '" + key + "'");

    auto get = [&](const std::string& key) -> const ConfigValue* {
        auto it = raw.find(key);
        return it == raw.end() ? nullptr : &it->second;
    };

    JobSpec job;

    // [surface]
    std::string preset = get("surface.preset") ? get("surface.preset")->text : "p2";
    std::optional<long> e;
    if (const auto* v = get("surface.e")) e = parse_long_at(*v, "surface.e");

    if (preset == "p2") {
        job.surface = surface_p2();
    } else if (preset == "hirzebruch" || preset == "elliptic") {
        if (!e)
            throw ValidationError("preset '" + preset + "' needs surface.e (-e flag)");
        FiberedKind kind = preset == "hirzebruch" ? FiberedKind::Hirzebruch
                                                  : FiberedKind::Elliptic;
        job.fibered = FiberedSurface(kind, static_cast<int>(*e));
        job.surface = job.fibered->lattice();
    } else if (preset == "k3") {
        std::vector<std::vector<Int>> m{{Int(2)}};
        if (const auto* v = get("surface.intersection"))
            m = parse_matrix(*v, "surface.intersection");
        job.surface = surface_k3(std::move(m));
    } else if (preset == "custom") {
        const auto* mv = get("surface.intersection");
        const auto* kv = get("surface.canonical");
        const auto* cv = get("surface.chi_o");
        if (!mv || !kv || !cv)
            throw ValidationError(
                "custom surfaces need surface.intersection, surface.canonical "
                "and surface.chi_o");
        auto m = parse_matrix(*mv, "surface.intersection");
        int rank = static_cast<int>(m.size());
        Divisor K = parse_divisor(*kv, "surface.canonical", rank);
        long chi = parse_long_at(*cv, "surface.chi_o");
        std::string name = get("surface.name") ? get("surface.name")->text : "custom";
        job.surface = Surface(name, std::move(m), K, static_cast<int>(chi));
    } else {
        throw ValidationError("unknown surface preset '" + preset +
                              "' (use p2, hirzebruch, elliptic, k3 or custom)");
    }

    int rank = job.surface->rank();

    // [character]
    if (const auto* v = get("character.ch"))
        job.ch = parse_character(*v, "character.ch", rank);
    if (const auto* v = get("character.chp"))
        job.chp = parse_character(*v, "character.chp", rank);
    if (const auto* v = get("character.n")) {
        long n = parse_long_at(*v, "character.n");
        if (n < 2) throw ValidationError("character.n must be at least 2");
        job.n = n;
        if (!job.ch && rank == 2)
            job.ch = ChernCharacter{Int(1), Divisor::zero(2), rat(-n)};
        if (!job.ch && rank == 1)
            job.ch = ChernCharacter{Int(1), Divisor::zero(1), rat(-n)};
    }

    // [frame]
    Rat u(0);
    if (const auto* v = get("frame.u")) u = parse_rat_at(*v, "frame.u");
    if (const auto* v = get("frame.lambda")) {
        if (!job.fibered)
            throw ValidationError(
                "frame.lambda needs a fibered preset (hirzebruch or elliptic)");
        job.frame = toy_frame(*job.fibered, parse_rat_at(*v, "frame.lambda"), u);
    } else if (const auto* v = get("frame.H")) {
        Divisor H = parse_divisor(*v, "frame.H", rank);
        Divisor gamma = Divisor::zero(rank);
        if (const auto* gv = get("frame.gamma"))
            gamma = parse_divisor(*gv, "frame.gamma", rank);
        job.frame = Frame(*job.surface, H, gamma, u);
    } else if (rank == 1) {
        job.frame = Frame(*job.surface, Divisor({rat(1)}), Divisor({rat(0)}), u);
    }
    if (const auto* v = get("frame.s")) job.s = parse_rat_at(*v, "frame.s");
    if (const auto* v = get("frame.t")) {
        job.t = parse_rat_at(*v, "frame.t");
        if (job.t <= 0) throw ValidationError("frame.t must be positive");
    }

    // [search]
    if (const auto* v = get("search.max_rank"))
        job.bounds.max_rank = parse_long_at(*v, "search.max_rank");
    if (const auto* v = get("search.c1_bound"))
        job.bounds.c1_bound = parse_long_at(*v, "search.c1_bound");
    if (const auto* v = get("search.c2_bound"))
        job.bounds.c2_bound = parse_long_at(*v, "search.c2_bound");
    if (const auto* v = get("search.chi_num_bound"))
        job.bounds.chi_num_bound = parse_long_at(*v, "search.chi_num_bound");
    if (const auto* v = get("search.chi_denom"))
        job.bounds.chi_denom = parse_long_at(*v, "search.chi_denom");

    // [output]
    if (const auto* v = get("output.format")) {
        if (v->text != "text" && v->text != "csv" && v->text != "json" &&
            v->text != "svg")
            throw ValidationError("output.format must be text, csv, json or svg");
        job.format = v->text;
    }
    if (const auto* v = get("output.twisted")) {
        if (v->text == "true" || v->text == "1")
            job.twisted = true;
        else if (v->text == "false" || v->text == "0")
            job.twisted = false;
        else
            throw ValidationError("output.twisted must be true or false");
    }
    return job;
}

JobSpec parse_job(const std::string& config_text) {
    return resolve_job(parse_config_text(config_text));
}

} // namespace bwc
