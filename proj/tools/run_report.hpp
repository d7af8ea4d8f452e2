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

#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "holonomic/record.hpp"

namespace holonomic::cli {

/// What one CLI invocation did: inputs, numeric outputs, and the verdict of
/// every tolerance check it ran.
class RunReport {
   public:
    struct Check {
        std::string name;
        double value = 0.0;
        double limit = 0.0;
        bool upper_bound = true;  // pass iff value <= limit, else value > limit
        bool passed = false;
    };

    explicit RunReport(std::string command)
        : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

    void param(std::string key, std::string value) { params_.set(std::move(key), std::move(value)); }
    void param(std::string key, double value) { params_.set(std::move(key), value); }

    void value(std::string key, std::string v) { values_.set(std::move(key), std::move(v)); }
    void value(std::string key, double v) { values_.set(std::move(key), v); }

    /// Records value <= limit.
    bool check_at_most(std::string name, double value, double limit) {
        const bool ok = value <= limit;
        checks_.push_back({std::move(name), value, limit, true, ok});
        return ok;
    }

    /// Records value > limit.
    bool check_above(std::string name, double value, double limit) {
        const bool ok = value > limit;
        checks_.push_back({std::move(name), value, limit, false, ok});
        return ok;
    }

    bool all_passed() const {
        for (const auto &c : checks_) {
            if (!c.passed) return false;
        }
        return true;
    }

    const std::vector<Check> &checks() const { return checks_; }

    void render(std::ostream &os, bool machine) const {
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (machine) {
            KeyValueRecord rec;
            rec.set("command", command_);
            for (const auto &[k, v] : params_.items()) rec.set("param." + k, v);
            for (const auto &[k, v] : values_.items()) rec.set("value." + k, v);
            for (const auto &c : checks_) {
                rec.set("check." + c.name + ".value", c.value);
                rec.set("check." + c.name + ".limit", c.limit);
                rec.set("check." + c.name + ".relation", std::string(c.upper_bound ? "<=" : ">"));
                rec.set("check." + c.name + ".passed", c.passed);
            }
            rec.set("all_passed", all_passed());
            rec.set("wall_time_s", wall);
            rec.write(os);
            return;
        }
        os << "command: " << command_ << '\n';
        for (const auto &[k, v] : params_.items()) os << "  " << k << " = " << v << '\n';
        for (const auto &[k, v] : values_.items()) os << k << ": " << v << '\n';
        for (const auto &c : checks_) {
            char line[256];
            std::snprintf(line, sizeof line, "[%s] %-28s %.3e %s %.1e\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                          c.value, c.upper_bound ? "<=" : ">", c.limit);
            os << line;
        }
        if (!checks_.empty()) os << (all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
        char t[64];
        std::snprintf(t, sizeof t, "wall time: %.3f s\n", wall);
        os << t;
    }

   private:
    std::string command_;
    std::chrono::steady_clock::time_point start_;
    KeyValueRecord params_;
    KeyValueRecord values_;
    std::vector<Check> checks_;
};

}  // namespace holonomic::cli
