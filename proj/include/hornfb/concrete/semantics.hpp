#pragma once

/*
   Concrete collecting semantics over a finite universe of constants:
   the ground direct-consequence relation of a system, the post / pre /
   restricted-pre operators, and their least fixed points.

   Clause constraints are decided by enumerating every valuation of the
   clause variables over the universe (partial valuations that already
   falsify the constraint are cut off).
 */

#include "hornfb/core/system.hpp"
#include "hornfb/domain/element.hpp"
#include "hornfb/error.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>

namespace hornfb {

struct ground_atom {
    pred_id pred = 0;
    std::vector<rational> args;

    friend bool operator==(const ground_atom &a, const ground_atom &b) { return a.pred == b.pred && a.args == b.args; }
    friend bool operator<(const ground_atom &a, const ground_atom &b) {
        if (a.pred != b.pred)
            return a.pred < b.pred;
        return std::lexicographical_compare(a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
    }
};

using interpretation = std::set<ground_atom>;

struct consequence {
    std::set<ground_atom> premises; // duplicates in a clause body collapse
    ground_atom conclusion;

    friend bool operator==(const consequence &a, const consequence &b) {
        return a.conclusion == b.conclusion && a.premises == b.premises;
    }
    friend bool operator<(const consequence &a, const consequence &b) {
        if (!(a.conclusion == b.conclusion))
            return a.conclusion < b.conclusion;
        return a.premises < b.premises;
    }
};

using ground_rel = std::set<consequence>;

inline constexpr double max_valuations_per_clause = 1e6;

inline std::string to_string(const horn_system &sys, const ground_atom &a) {
    std::string out = sys.decl(a.pred).name;
    if (a.args.empty())
        return out;
    out += "(";
    for (std::size_t i = 0; i < a.args.size(); ++i)
        out += (i ? "," : "") + to_string(a.args[i]);
    return out + ")";
}

inline const std::vector<rational> &require_universe(const horn_system &sys) {
    if (!sys.universe)
        throw input_error("the system declares no universe");
    return *sys.universe;
}

// Calls `visit` with every valuation of `vars` over `universe` satisfying `phi`.
inline void for_each_model(const formula &phi, const std::vector<variable> &vars, const std::vector<rational> &universe,
                           const std::function<void(const valuation &)> &visit) {
    double total = 1;
    for (std::size_t i = 0; i < vars.size(); ++i)
        total *= static_cast<double>(universe.size());
    if (total > max_valuations_per_clause)
        throw resource_error("more than 10^6 valuations to enumerate for one clause");
    valuation val;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        auto partial = evaluate(phi, val);
        if (partial && !*partial)
            return;
        if (i == vars.size()) {
            if (partial.value_or(false))
                visit(val);
            return;
        }
        for (auto &c : universe) {
            val[vars[i]] = c;
            go(i + 1);
        }
        val.erase(vars[i]);
    };
    go(0);
}

inline ground_atom instantiate(const pred_app &app, const valuation &val) {
    ground_atom a{app.pred, {}};
    for (auto &v : app.args)
        a.args.push_back(val.at(v));
    return a;
}

inline ground_rel ground_relation(const horn_system &sys) {
    const auto &universe = require_universe(sys);
    ground_rel rel;
    for (auto &c : sys.clauses) {
        auto vs = c.variables();
        std::vector<variable> vars(vs.begin(), vs.end());
        for_each_model(c.constraint, vars, universe, [&](const valuation &val) {
            consequence k;
            for (auto &b : c.body)
                k.premises.insert(instantiate(b, val));
            k.conclusion = instantiate(c.head, val);
            rel.insert(std::move(k));
        });
    }
    return rel;
}

// All atoms over the universe, the falsity atom included.
inline interpretation atom_universe(const horn_system &sys) {
    const auto &universe = require_universe(sys);
    interpretation out;
    for (pred_id p = 0; p < sys.num_preds(); ++p) {
        std::vector<rational> args(sys.decl(p).arity);
        std::function<void(std::size_t)> go = [&](std::size_t i) {
            if (i == args.size()) {
                out.insert({p, args});
                return;
            }
            for (auto &c : universe) {
                args[i] = c;
                go(i + 1);
            }
        };
        go(0);
    }
    return out;
}

// The goal atoms A_g: every grounding of a goal entry that satisfies its constraint.
inline interpretation ground_goal(const horn_system &sys, const goal_spec &goal) {
    const auto &universe = require_universe(sys);
    interpretation out;
    for (auto &e : goal.entries)
        for_each_model(e.constraint, e.atom.args, universe,
                       [&](const valuation &val) { out.insert(instantiate(e.atom, val)); });
    return out;
}

inline interpretation ground_goal(const horn_system &sys) { return ground_goal(sys, sys.effective_goal()); }

inline bool subset(const interpretation &a, const interpretation &b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline interpretation intersect(const interpretation &a, const interpretation &b) {
    interpretation out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

inline interpretation post(const ground_rel &rel, const interpretation &x) {
    interpretation out;
    for (auto &k : rel)
        if (subset(k.premises, x))
            out.insert(k.conclusion);
    return out;
}

inline interpretation pre(const ground_rel &rel, const interpretation &x) {
    interpretation out;
    for (auto &k : rel)
        if (x.count(k.conclusion))
            out.insert(k.premises.begin(), k.premises.end());
    return out;
}

inline interpretation pre_restricted(const ground_rel &rel, const interpretation &r, const interpretation &x) {
    interpretation out;
    for (auto &k : rel)
        if (x.count(k.conclusion) && subset(k.premises, r))
            out.insert(k.premises.begin(), k.premises.end());
    return out;
}

// Least X with post(X) ∩ bound ⊆ X, by counting missing premises.
inline interpretation lfp_forward(const ground_rel &rel, const std::optional<interpretation> &bound = std::nullopt) {
    std::vector<const consequence *> ks;
    std::map<ground_atom, std::vector<std::size_t>> waiting;
    std::vector<std::size_t> missing;
    std::deque<ground_atom> queue;
    interpretation out;
    auto add = [&](const ground_atom &a) {
        if (bound && !bound->count(a))
            return;
        if (out.insert(a).second)
            queue.push_back(a);
    };
    for (auto &k : rel) {
        ks.push_back(&k);
        missing.push_back(k.premises.size());
        for (auto &p : k.premises)
            waiting[p].push_back(ks.size() - 1);
        if (k.premises.empty())
            add(k.conclusion);
    }
    while (!queue.empty()) {
        auto a = queue.front();
        queue.pop_front();
        auto it = waiting.find(a);
        if (it == waiting.end())
            continue;
        for (auto i : it->second)
            if (--missing[i] == 0)
                add(ks[i]->conclusion);
    }
    return out;
}

inline interpretation lfp_forward(const horn_system &sys) { return lfp_forward(ground_relation(sys)); }

// Least X with seed ∪ pre_R(X) ⊆ X; R = nullopt means no restriction.
inline interpretation lfp_backward(const ground_rel &rel, const interpretation &seed,
                                   const std::optional<interpretation> &restriction = std::nullopt) {
    std::map<ground_atom, std::vector<const consequence *>> by_head;
    for (auto &k : rel)
        if (!restriction || subset(k.premises, *restriction))
            by_head[k.conclusion].push_back(&k);
    interpretation out;
    std::deque<ground_atom> queue;
    auto add = [&](const ground_atom &a) {
        if (out.insert(a).second)
            queue.push_back(a);
    };
    for (auto &a : seed)
        add(a);
    while (!queue.empty()) {
        auto a = queue.front();
        queue.pop_front();
        auto it = by_head.find(a);
        if (it == by_head.end())
            continue;
        for (auto *k : it->second)
            for (auto &p : k->premises)
                add(p);
    }
    return out;
}

inline interpretation lfp_backward(const horn_system &sys, const interpretation &goal) {
    return lfp_backward(ground_relation(sys), goal);
}

// Least X with (goal ∩ M) ∪ pre_M(X) ⊆ X where M is the forward least fixed point.
inline interpretation lfp_combined(const ground_rel &rel, const interpretation &goal) {
    auto m = lfp_forward(rel);
    return lfp_backward(rel, intersect(goal, m), m);
}

inline interpretation lfp_combined(const horn_system &sys, const interpretation &goal) {
    return lfp_combined(ground_relation(sys), goal);
}

inline bool is_model(const ground_rel &rel, const interpretation &m) { return subset(post(rel, m), m); }

// The forward iteration restricted to the combined semantics reproduces it.
inline bool check_forward_restriction(const ground_rel &rel, const interpretation &goal) {
    auto combined = lfp_combined(rel, goal);
    return lfp_forward(rel, combined) == combined;
}

inline bool check_forward_restriction(const horn_system &sys, const interpretation &goal) {
    return check_forward_restriction(ground_relation(sys), goal);
}

// Atoms in the concretization of an abstract element.
inline interpretation gamma(const horn_system &sys, const abstract_element &e) {
    interpretation out;
    for (auto &a : atom_universe(sys))
        if (e.gamma_contains(a.pred, a.args))
            out.insert(a);
    return out;
}

// Atoms whose arguments satisfy the per-predicate formula over A1..An.
inline interpretation gamma(const horn_system &sys, const std::vector<formula> &model) {
    interpretation out;
    for (auto &a : atom_universe(sys)) {
        valuation val;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            val[positional_var(i)] = a.args[i];
        if (evaluate(model.at(a.pred), val).value_or(false))
            out.insert(a);
    }
    return out;
}

} // namespace hornfb
