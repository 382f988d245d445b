#pragma once

/*
   Independent reference procedures used to check the library. None of
   them shares code with Fourier-Motzkin elimination.
 */

#include "hornfb/core/printer.hpp"
#include "hornfb/linear/cube.hpp"

#include <functional>
#include <random>
#include <vector>

namespace oracle {

using hornfb::cube;
using hornfb::lin_constraint;
using hornfb::lin_term;
using hornfb::rational;
using hornfb::relation;
using hornfb::valuation;
using hornfb::variable;

// Solve A x = b exactly; nullopt unless the solution is unique.
inline std::optional<std::vector<rational>> solve_unique(std::vector<std::vector<rational>> a, std::vector<rational> b) {
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0)
            ++piv;
        if (piv == n)
            return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    std::vector<rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

/*
   Satisfiability of a cube by vertex enumeration. The non-strict
   relaxation is intersected with the box |x_i| <= bound; the barycenter of
   the vertices of that polytope lies in its relative interior, so the
   strict system is satisfiable (within the box) iff the barycenter
   satisfies it. Returns a satisfying point or nullopt.
 */
inline std::optional<valuation> vertex_sat(const cube &c, const rational &bound = rational(1000000)) {
    auto vars_set = c.variables();
    std::vector<variable> vars(vars_set.begin(), vars_set.end());
    std::size_t n = vars.size();
    if (n == 0) {
        for (auto &k : c.constraints)
            if (!lin_constraint::holds(k.lhs.constant(), k.rel))
                return std::nullopt;
        return valuation{};
    }
    // Hyperplanes: a.x = b
    struct plane {
        std::vector<rational> a;
        rational b;
    };
    std::vector<plane> planes;
    for (auto &k : c.constraints) {
        plane p{std::vector<rational>(n), -k.lhs.constant()};
        for (std::size_t i = 0; i < n; ++i)
            p.a[i] = k.lhs.coefficient(vars[i]);
        planes.push_back(p);
    }
    for (std::size_t i = 0; i < n; ++i) {
        plane lo{std::vector<rational>(n), -bound}, hi{std::vector<rational>(n), bound};
        lo.a[i] = 1;
        hi.a[i] = 1;
        planes.push_back(lo);
        planes.push_back(hi);
    }
    auto value_at = [&](const lin_term &t, const std::vector<rational> &x) {
        rational r = t.constant();
        for (std::size_t i = 0; i < n; ++i)
            r += t.coefficient(vars[i]) * x[i];
        return r;
    };
    auto in_relaxation = [&](const std::vector<rational> &x) {
        for (auto &xi : x)
            if (xi > bound || xi < -bound)
                return false;
        for (auto &k : c.constraints) {
            rational v = value_at(k.lhs, x);
            if (k.rel == relation::eq ? v != 0 : v > 0)
                return false;
        }
        return true;
    };
    std::vector<std::vector<rational>> vertices;
    std::vector<std::size_t> idx(n);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
        if (depth == n) {
            std::vector<std::vector<rational>> a;
            std::vector<rational> b;
            for (auto i : idx) {
                a.push_back(planes[i].a);
                b.push_back(planes[i].b);
            }
            auto x = solve_unique(a, b);
            if (x && in_relaxation(*x))
                vertices.push_back(*x);
            return;
        }
        for (std::size_t i = start; i < planes.size(); ++i) {
            idx[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    if (vertices.empty())
        return std::nullopt;
    std::vector<rational> center(n);
    for (auto &v : vertices)
        for (std::size_t i = 0; i < n; ++i)
            center[i] += v[i];
    for (auto &ci : center)
        ci /= static_cast<long>(vertices.size());
    valuation val;
    for (std::size_t i = 0; i < n; ++i)
        val[vars[i]] = center[i];
    for (auto &k : c.constraints)
        if (!k.evaluate(val).value())
            return std::nullopt;
    return val;
}

// Random cube over up to `max_vars` of the variables X0..X3.
inline cube random_cube(std::mt19937 &rng, std::size_t max_vars = 4, std::size_t max_constraints = 6) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    std::size_t nvars = pick(1, static_cast<int>(max_vars));
    std::size_t ncons = pick(1, static_cast<int>(max_constraints));
    cube out;
    for (std::size_t k = 0; k < ncons; ++k) {
        lin_term t(rational(pick(-5, 5)));
        for (std::size_t i = 0; i < nvars; ++i)
            if (pick(0, 2) > 0)
                t.add("X" + std::to_string(i), rational(pick(-3, 3)));
        int r = pick(0, 9);
        relation rel = r < 5 ? relation::le : (r < 8 ? relation::lt : relation::eq);
        out.constraints.push_back({t, rel});
    }
    return out;
}

} // namespace oracle
