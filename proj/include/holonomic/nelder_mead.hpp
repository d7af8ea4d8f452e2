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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace holonomic {

/// Box [lower, upper] shared by every coordinate.
struct Interval {
    double lower = 0.0;
    double upper = 1.0;

    double width() const { return upper - lower; }

    /// Mirror-reflects x into the interval (period 2 * width).
    double reflect(double x) const {
        const double w = width();
        if (w <= 0.0) return lower;
        double r = std::fmod(x - lower, 2.0 * w);
        if (r < 0.0) r += 2.0 * w;
        if (r > w) r = 2.0 * w - r;
        return std::clamp(lower + r, lower, upper);
    }
};

struct NelderMeadOptions {
    double initial_step = 0.1;     // absolute edge length of the starting simplex
    int max_evaluations = 5000;
    double f_tolerance = 1e-14;    // spread of objective values over the simplex
    double x_tolerance = 1e-10;    // max coordinate distance from the best vertex
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool simplex_converged = false;
};

/// Nelder-Mead simplex minimization over a box. Every trial point is
/// mirror-reflected into the box before evaluation, so the objective is only
/// ever sampled inside it. Standard coefficients: reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2. Deterministic for a given start.
template <class Objective>
NelderMeadResult nelder_mead(Objective &&objective, std::span<const double> start, Interval box,
                             const NelderMeadOptions &opts = {}) {
    const std::size_t n = start.size();
    NelderMeadResult result;
    if (n == 0) {
        result.value = objective(std::span<const double>{});
        result.evaluations = 1;
        result.simplex_converged = true;
        return result;
    }

    using Point = std::vector<double>;
    auto project = [&](Point p) {
        for (auto &v : p) v = box.reflect(v);
        return p;
    };
    auto eval = [&](const Point &p) {
        ++result.evaluations;
        return objective(std::span<const double>(p));
    };

    std::vector<Point> simplex(n + 1, project(Point(start.begin(), start.end())));
    for (std::size_t i = 0; i < n; ++i) {
        Point &v = simplex[i + 1];
        const double step = v[i] + opts.initial_step <= box.upper ? opts.initial_step : -opts.initial_step;
        v[i] = box.reflect(v[i] + step);
    }
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<Point> s(n + 1);
        std::vector<double> f(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            s[i] = std::move(simplex[order[i]]);
            f[i] = values[order[i]];
        }
        simplex = std::move(s);
        values = std::move(f);
    };

    auto converged = [&] {
        if (values[n] - values[0] > opts.f_tolerance) return false;
        double spread = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t k = 0; k < n; ++k) spread = std::max(spread, std::abs(simplex[i][k] - simplex[0][k]));
        }
        return spread <= opts.x_tolerance;
    };

    auto along = [&](const Point &centroid, double coef) {
        Point p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + coef * (simplex[n][k] - centroid[k]);
        return project(std::move(p));
    };

    sort_simplex();
    while (result.evaluations < opts.max_evaluations) {
        if (converged()) {
            result.simplex_converged = true;
            break;
        }
        Point centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k];
        }
        for (auto &c : centroid) c /= static_cast<double>(n);

        Point reflected = along(centroid, -1.0);
        const double f_reflected = eval(reflected);
        if (f_reflected < values[0]) {
            Point expanded = along(centroid, -2.0);
            const double f_expanded = eval(expanded);
            if (f_expanded < f_reflected) {
                simplex[n] = std::move(expanded);
                values[n] = f_expanded;
            } else {
                simplex[n] = std::move(reflected);
                values[n] = f_reflected;
            }
        } else if (f_reflected < values[n - 1]) {
            simplex[n] = std::move(reflected);
            values[n] = f_reflected;
        } else {
            const bool outside = f_reflected < values[n];
            Point contracted = along(centroid, outside ? -0.5 : 0.5);
            const double f_contracted = eval(contracted);
            if (f_contracted < (outside ? f_reflected : values[n])) {
                simplex[n] = std::move(contracted);
                values[n] = f_contracted;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t k = 0; k < n; ++k) {
                        simplex[i][k] = box.reflect(simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]));
                    }
                    values[i] = eval(simplex[i]);
                }
            }
        }
        sort_simplex();
    }
    if (!result.simplex_converged) result.simplex_converged = converged();
    result.x = simplex[0];
    result.value = values[0];
    return result;
}

}  // namespace holonomic
