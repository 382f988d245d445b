#pragma once

/*
   Fourier-Motzkin elimination over exact rationals, with the derived
   decision procedures: satisfiability of cubes and formulas, witness
   points, and exact projection of a cube onto a box.
 */

#include "hornfb/domain/box.hpp"
#include "hornfb/linear/cube.hpp"

#include <map>
#include <stdexcept>

namespace hornfb {

namespace detail {

// Scale so the first coefficient has magnitude one; equalities also get a
// positive leading coefficient.
inline lin_constraint normalize_constraint(const lin_constraint &c) {
    const auto &coeffs = c.lhs.coefficients();
    if (coeffs.empty())
        return c;
    rational lead = coeffs.begin()->second;
    rational scale = 1 / (lead < 0 ? rational(-lead) : lead);
    if (c.rel == relation::eq && lead < 0)
        scale = -scale;
    return {c.lhs * scale, c.rel};
}

inline bool is_contradiction(const cube &c) {
    return c.constraints.size() == 1 && c.constraints.front() == lin_constraint::contradiction();
}

} // namespace detail

// Evaluates ground constraints, drops duplicates, and keeps only the
// tightest inequality per linear part. An unsatisfiable ground constraint
// collapses the cube to the single constraint `1 <= 0`.
inline cube simplify(const cube &in) {
    using coeff_map = std::map<variable, rational>;
    std::map<coeff_map, lin_constraint> ineqs, eqs;
    auto contradiction = [] { return cube{{lin_constraint::contradiction()}}; };
    for (auto &raw : in.constraints) {
        if (raw.rel == relation::ne)
            throw std::invalid_argument("simplify: cube contains '!='");
        if (raw.is_ground()) {
            if (!lin_constraint::holds(raw.lhs.constant(), raw.rel))
                return contradiction();
            continue;
        }
        auto c = detail::normalize_constraint(raw);
        const auto &key = c.lhs.coefficients();
        if (c.rel == relation::eq) {
            auto [it, inserted] = eqs.emplace(key, c);
            if (!inserted && it->second.lhs.constant() != c.lhs.constant())
                return contradiction();
            continue;
        }
        auto [it, inserted] = ineqs.emplace(key, c);
        if (inserted)
            continue;
        auto &old = it->second;
        // Larger constant is tighter; at equal constants strict is tighter.
        if (c.lhs.constant() > old.lhs.constant() ||
            (c.lhs.constant() == old.lhs.constant() && c.rel == relation::lt))
            old = c;
    }
    cube out;
    for (auto &[k, c] : eqs)
        out.constraints.push_back(c);
    for (auto &[k, c] : ineqs)
        out.constraints.push_back(c);
    return out;
}

// Projects `v` out of the cube: substitution through an equality when one
// mentions `v`, otherwise pairwise combination of lower and upper bounds.
inline cube fm_eliminate(const cube &in, const variable &v) {
    for (std::size_t i = 0; i < in.constraints.size(); ++i) {
        const auto &e = in.constraints[i];
        rational a = e.lhs.coefficient(v);
        if (e.rel != relation::eq || a == 0)
            continue;
        lin_term rest = e.lhs - lin_term::var(v, a);
        lin_term replacement = rest * rational(-1 / a);
        cube out;
        for (std::size_t j = 0; j < in.constraints.size(); ++j)
            if (j != i)
                out.constraints.push_back({in.constraints[j].lhs.substitute(v, replacement), in.constraints[j].rel});
        return simplify(out);
    }

    cube out;
    std::vector<const lin_constraint *> lower, upper;
    for (auto &c : in.constraints) {
        rational a = c.lhs.coefficient(v);
        if (a == 0)
            out.constraints.push_back(c);
        else if (a > 0)
            upper.push_back(&c);
        else
            lower.push_back(&c);
    }
    for (auto *u : upper) {
        rational au = u->lhs.coefficient(v);
        for (auto *l : lower) {
            rational al = -l->lhs.coefficient(v);
            lin_term sum = u->lhs * al + l->lhs * au;
            bool strict = u->rel == relation::lt || l->rel == relation::lt;
            out.constraints.push_back({sum, strict ? relation::lt : relation::le});
        }
    }
    return simplify(out);
}

namespace detail {

// Prefer variables with an equality, then the fewest generated pairs.
inline variable pick_elimination_variable(const cube &c, const std::set<variable> &candidates) {
    std::optional<variable> best;
    long best_cost = 0;
    for (auto &v : candidates) {
        long lo = 0, hi = 0;
        bool has_eq = false;
        for (auto &k : c.constraints) {
            rational a = k.lhs.coefficient(v);
            if (a == 0)
                continue;
            if (k.rel == relation::eq)
                has_eq = true;
            else if (a > 0)
                ++hi;
            else
                ++lo;
        }
        long cost = has_eq ? -1 : lo * hi - lo - hi;
        if (!best || cost < best_cost) {
            best = v;
            best_cost = cost;
        }
    }
    return *best;
}

inline cube eliminate_all(cube c, const std::set<variable> &keep) {
    c = simplify(c);
    for (;;) {
        if (is_contradiction(c))
            return c;
        std::set<variable> candidates;
        for (auto &v : c.variables())
            if (!keep.count(v))
                candidates.insert(v);
        if (candidates.empty())
            return c;
        c = fm_eliminate(c, pick_elimination_variable(c, candidates));
    }
}

// Tightest interval for the single variable `v` of a simplified cube.
inline interval bounds_of(const cube &c, const variable &v) {
    interval out = interval::top();
    auto tighten_lo = [&](bound b) {
        if (compare_lower(b, out.lo) > 0)
            out.lo = b;
    };
    auto tighten_hi = [&](bound b) {
        if (compare_upper(b, out.hi) < 0)
            out.hi = b;
    };
    for (auto &k : c.constraints) {
        rational a = k.lhs.coefficient(v);
        if (a == 0) {
            if (!lin_constraint::holds(k.lhs.constant(), k.rel))
                return {bound::closed(1), bound::closed(0)};
            continue;
        }
        if (k.lhs.coefficients().size() != 1)
            throw std::logic_error("bounds_of: constraint over several variables");
        rational value = -k.lhs.constant() / a;
        bool strict = k.rel == relation::lt;
        if (k.rel == relation::eq) {
            tighten_lo(bound::closed(value));
            tighten_hi(bound::closed(value));
        } else if (a > 0) {
            tighten_hi({false, value, strict});
        } else {
            tighten_lo({false, value, strict});
        }
    }
    return out;
}

inline rational pick_value(const interval &d) {
    if (d.lo.infinite && d.hi.infinite)
        return 0;
    if (d.hi.infinite)
        return d.lo.strict ? rational(d.lo.value + 1) : d.lo.value;
    if (d.lo.infinite)
        return d.hi.strict ? rational(d.hi.value - 1) : d.hi.value;
    if (!d.lo.strict)
        return d.lo.value;
    if (!d.hi.strict)
        return d.hi.value;
    return (d.lo.value + d.hi.value) / 2;
}

} // namespace detail

inline bool is_sat(const cube &c) { return !detail::is_contradiction(detail::eliminate_all(c, {})); }

// A rational point satisfying the cube, or nullopt if there is none.
// Variables are eliminated one at a time and then assigned in reverse order.
inline std::optional<valuation> find_point(const cube &c) {
    std::vector<std::pair<variable, cube>> stages;
    cube cur = simplify(c);
    for (;;) {
        if (detail::is_contradiction(cur))
            return std::nullopt;
        auto vars = cur.variables();
        if (vars.empty())
            break;
        variable v = detail::pick_elimination_variable(cur, vars);
        stages.emplace_back(v, cur);
        cur = fm_eliminate(cur, v);
    }
    valuation val;
    for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
        const auto &[v, stage] = *it;
        // Variables that cancelled out during this elimination are free.
        for (auto &x : stage.variables())
            if (x != v)
                val.emplace(x, rational(0));
        cube local;
        for (auto &k : stage.constraints) {
            if (k.lhs.coefficient(v) == 0)
                continue;
            lin_term t(k.lhs.constant());
            for (auto &[x, a] : k.lhs.coefficients())
                t += x == v ? lin_term::var(x, a) : lin_term(a * val.at(x));
            local.constraints.push_back({t, k.rel});
        }
        auto d = detail::bounds_of(local, v);
        if (d.is_empty())
            throw std::logic_error("find_point: empty interval during back-substitution");
        val[v] = detail::pick_value(d);
    }
    for (auto &v : c.variables())
        val.emplace(v, rational(0));
    return val;
}

namespace detail {

class lazy_sat_search {
  public:
    explicit lazy_sat_search(std::size_t cap) : cap_(cap) {}

    std::optional<cube> run(const formula &f) {
        std::vector<const formula *> pending{&f};
        cube start;
        if (search(pending, start))
            return found_;
        return std::nullopt;
    }

  private:
    bool search(std::vector<const formula *> &pending, cube &cur) {
        while (!pending.empty()) {
            const formula *f = pending.back();
            pending.pop_back();
            switch (f->node_kind()) {
            case formula::kind::tt:
                break;
            case formula::kind::ff:
                return false;
            case formula::kind::atom:
                if (f->constraint().rel == relation::ne)
                    throw std::invalid_argument("is_sat: formula contains '!='");
                cur.constraints.push_back(f->constraint());
                break;
            case formula::kind::conj:
                for (auto it = f->children().rbegin(); it != f->children().rend(); ++it)
                    pending.push_back(&*it);
                break;
            case formula::kind::disj:
                if (!is_sat(cur))
                    return false;
                for (auto &k : f->children()) {
                    auto branch_pending = pending;
                    branch_pending.push_back(&k);
                    cube branch = cur;
                    if (search(branch_pending, branch))
                        return true;
                }
                return false;
            }
        }
        if (++leaves_ > cap_)
            throw resource_error("satisfiability search exceeds " + std::to_string(cap_) + " cubes");
        if (!is_sat(cur))
            return false;
        found_ = simplify(cur);
        return true;
    }

    std::size_t cap_;
    std::size_t leaves_ = 0;
    cube found_;
};

} // namespace detail

// A satisfiable cube of the formula's DNF, explored lazily with pruning.
inline std::optional<cube> find_sat_cube(const formula &f, std::size_t cap = default_dnf_cap) {
    return detail::lazy_sat_search(cap).run(f);
}

inline bool is_sat(const formula &f, std::size_t cap = default_dnf_cap) { return find_sat_cube(f, cap).has_value(); }

inline std::optional<valuation> find_point(const formula &f, std::size_t cap = default_dnf_cap) {
    auto c = find_sat_cube(f, cap);
    if (!c)
        return std::nullopt;
    return find_point(*c);
}

// Tightest box over `vars` containing the projection of the cube's
// solution set; the empty box if the cube is unsatisfiable.
inline box project_to_box(const cube &c, const std::vector<variable> &vars) {
    std::set<variable> targets(vars.begin(), vars.end());
    cube reduced = detail::eliminate_all(c, targets);
    if (detail::is_contradiction(reduced))
        return box::bottom(vars.size());
    std::vector<interval> dims;
    for (auto &t : vars) {
        cube single = detail::eliminate_all(reduced, {t});
        if (detail::is_contradiction(single))
            return box::bottom(vars.size());
        dims.push_back(detail::bounds_of(single, t));
    }
    return box::from_intervals(std::move(dims));
}

} // namespace hornfb
