#pragma once

/*
   Conjunctive cubes and disjunctive normal form for negation-free formulas.
 */

#include "hornfb/core/formula.hpp"
#include "hornfb/error.hpp"

#include <algorithm>
#include <vector>

namespace hornfb {

inline constexpr std::size_t default_dnf_cap = 4096;

struct cube {
    std::vector<lin_constraint> constraints;

    std::set<variable> variables() const {
        std::set<variable> out;
        for (auto &c : constraints)
            for (auto &[v, k] : c.lhs.coefficients())
                out.insert(v);
        return out;
    }

    bool mentions(const variable &v) const {
        for (auto &c : constraints)
            if (c.lhs.coefficient(v) != 0)
                return true;
        return false;
    }

    std::optional<bool> evaluate(const valuation &val) const {
        bool unknown = false;
        for (auto &c : constraints) {
            auto r = c.evaluate(val);
            if (!r)
                unknown = true;
            else if (!*r)
                return false;
        }
        if (unknown)
            return std::nullopt;
        return true;
    }

    formula to_formula() const {
        std::vector<formula> parts;
        for (auto &c : constraints)
            parts.push_back(formula::atom(c));
        return formula::conj(std::move(parts));
    }

    friend bool operator==(const cube &, const cube &) = default;
};

struct dnf {
    std::vector<cube> cubes; // empty = unsatisfiable

    formula to_formula() const {
        std::vector<formula> parts;
        for (auto &c : cubes)
            parts.push_back(c.to_formula());
        return formula::disj(std::move(parts));
    }
};

namespace detail {

inline std::vector<cube> dnf_cubes(const formula &f, std::size_t cap) {
    switch (f.node_kind()) {
    case formula::kind::tt:
        return {cube{}};
    case formula::kind::ff:
        return {};
    case formula::kind::atom:
        if (f.constraint().rel == relation::ne)
            throw std::invalid_argument("to_dnf: formula contains '!='");
        return {cube{{f.constraint()}}};
    case formula::kind::disj: {
        std::vector<cube> out;
        for (auto &k : f.children()) {
            auto part = dnf_cubes(k, cap);
            out.insert(out.end(), part.begin(), part.end());
            if (out.size() > cap)
                throw resource_error("DNF exceeds " + std::to_string(cap) + " cubes");
        }
        return out;
    }
    case formula::kind::conj: {
        std::vector<cube> acc{cube{}};
        for (auto &k : f.children()) {
            auto part = dnf_cubes(k, cap);
            if (acc.size() * part.size() > cap)
                throw resource_error("DNF exceeds " + std::to_string(cap) + " cubes");
            std::vector<cube> next;
            next.reserve(acc.size() * part.size());
            for (auto &a : acc)
                for (auto &b : part) {
                    cube c = a;
                    c.constraints.insert(c.constraints.end(), b.constraints.begin(), b.constraints.end());
                    next.push_back(std::move(c));
                }
            acc = std::move(next);
        }
        return acc;
    }
    }
    return {};
}

} // namespace detail

// Exact DNF; duplicate constraints within a cube are removed.
inline dnf to_dnf(const formula &f, std::size_t cap = default_dnf_cap) {
    dnf out{detail::dnf_cubes(f, cap)};
    for (auto &c : out.cubes) {
        std::sort(c.constraints.begin(), c.constraints.end());
        c.constraints.erase(std::unique(c.constraints.begin(), c.constraints.end()), c.constraints.end());
    }
    return out;
}

} // namespace hornfb
