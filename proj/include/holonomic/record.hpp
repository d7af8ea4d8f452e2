// Copyright 2026 The Holonomic Gates Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Text formats: flat key=value records and comma-separated trajectories.
// Every real is written with 17 significant digits so it parses back to the
// same double and output is byte-identical for identical inputs.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holonomic/su2.hpp"
#include "holonomic/synthesis.hpp"
#include "holonomic/trajectory.hpp"

namespace holonomic {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Fixed-point with `digits` decimals; used for human-facing fidelities.
inline std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

inline double parse_real(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("not a real number: '" + std::string(text) + "'");
    }
    return v;
}

/// Ordered key=value record, one pair per line.
class KeyValueRecord {
   public:
    void set(std::string key, std::string value) {
        for (auto &[k, v] : items_) {
            if (k == key) {
                v = std::move(value);
                return;
            }
        }
        items_.emplace_back(std::move(key), std::move(value));
    }
    void set(std::string key, double value) { set(std::move(key), format_real(value)); }
    void set(std::string key, std::int64_t value) { set(std::move(key), std::to_string(value)); }
    void set(std::string key, int value) { set(std::move(key), std::to_string(value)); }
    void set(std::string key, bool value) { set(std::move(key), std::string(value ? "true" : "false")); }

    std::optional<std::string> get(std::string_view key) const {
        for (const auto &[k, v] : items_) {
            if (k == key) return v;
        }
        return std::nullopt;
    }

    double get_real(std::string_view key) const {
        const auto v = get(key);
        if (!v) throw ParseError("missing key '" + std::string(key) + "'");
        return parse_real(*v);
    }

    const std::vector<std::pair<std::string, std::string>> &items() const { return items_; }

    void write(std::ostream &os) const {
        for (const auto &[k, v] : items_) os << k << '=' << v << '\n';
    }

    std::string str() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }

    /// Blank lines and lines starting with '#' are ignored.
    static KeyValueRecord parse(std::istream &is) {
        KeyValueRecord r;
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos || eq == 0) {
                throw ParseError("line " + std::to_string(lineno) + ": expected key=value");
            }
            r.set(line.substr(0, eq), line.substr(eq + 1));
        }
        return r;
    }

    static KeyValueRecord parse(std::string_view text) {
        std::istringstream is{std::string(text)};
        return parse(is);
    }

   private:
    std::vector<std::pair<std::string, std::string>> items_;
};

inline std::string join_reals(const std::vector<double> &values, char sep = ';') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += format_real(values[i]);
    }
    return out;
}

inline std::vector<double> split_reals(std::string_view text, char sep = ';') {
    std::vector<double> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        out.push_back(parse_real(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

inline KeyValueRecord synthesis_record(const std::string &target, int length, const SynthesisResult &r,
                                       std::uint64_t seed) {
    KeyValueRecord rec;
    rec.set("target", target);
    rec.set("length", length);
    rec.set("betas", join_reals(r.sequence.betas));
    rec.set("infidelity_magnitude", 1.0 - r.fidelity.magnitude);
    rec.set("infidelity_phase_sensitive", 1.0 - r.fidelity.phase_sensitive);
    rec.set("evaluations", r.evaluations);
    rec.set("restarts_used", r.restarts_used);
    rec.set("seed", std::to_string(seed));
    rec.set("converged", r.converged);
    return rec;
}

inline constexpr std::string_view kTrajectoryHeader = "beta,t,branch,x,y,z";

inline void write_trajectory_csv(std::ostream &os, const std::vector<TrajectoryRecord> &records) {
    os << kTrajectoryHeader << '\n';
    for (const auto &r : records) {
        os << format_real(r.beta) << ',' << format_real(r.t) << ',' << r.branch << ',' << format_real(r.point.x) << ','
           << format_real(r.point.y) << ',' << format_real(r.point.z) << '\n';
    }
}

inline std::vector<TrajectoryRecord> read_trajectory_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line != kTrajectoryHeader) {
        throw ParseError("trajectory file: missing header '" + std::string(kTrajectoryHeader) + "'");
    }
    std::vector<TrajectoryRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string_view> cols;
        std::string_view rest(line);
        while (true) {
            const auto c = rest.find(',');
            cols.push_back(rest.substr(0, c));
            if (c == std::string_view::npos) break;
            rest.remove_prefix(c + 1);
        }
        if (cols.size() != 6) throw ParseError("trajectory file: expected 6 columns");
        const double branch = parse_real(cols[2]);
        if (branch != 0.0 && branch != 1.0) throw ParseError("trajectory file: branch must be 0 or 1");
        out.push_back({parse_real(cols[0]), parse_real(cols[1]), static_cast<int>(branch),
                       {parse_real(cols[3]), parse_real(cols[4]), parse_real(cols[5])}});
    }
    return out;
}

/// Reads a 2x2 complex matrix given as eight reals
///   re00 im00 re01 im01
///   re10 im10 re11 im11
/// separated by whitespace or commas; '#' starts a comment.
inline Unitary2 read_matrix(std::istream &is) {
    std::vector<double> values;
    std::string line;
    while (std::getline(is, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (auto &c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) values.push_back(parse_real(tok));
    }
    if (values.size() != 8) {
        throw ParseError("matrix file: expected 8 reals, found " + std::to_string(values.size()));
    }
    return {complex{values[0], values[1]}, complex{values[2], values[3]}, complex{values[4], values[5]},
            complex{values[6], values[7]}};
}

}  // namespace holonomic
