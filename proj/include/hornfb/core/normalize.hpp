#pragma once

/*
   Clause normalization: predicate arguments become pairwise-distinct
   variables within each application, the original argument terms turn
   into equality conjuncts, and `!=` is rewritten as a disjunction of
   strict inequalities.
 */

#include "hornfb/core/system.hpp"
#include "hornfb/error.hpp"

namespace hornfb {

struct raw_pred_app {
    std::string name;
    std::vector<lin_term> args;
    std::size_t line = 0;
    std::size_t column = 0;
};

// A clause as written; `head == nullopt` stands for the falsity predicate.
struct raw_clause {
    std::optional<raw_pred_app> head;
    std::vector<raw_pred_app> body;
    formula constraint;
};

namespace detail {

class fresh_names {
  public:
    explicit fresh_names(std::set<variable> used) : used_(std::move(used)) {}

    variable next() {
        for (;;) {
            variable v = "V" + std::to_string(counter_++);
            if (used_.insert(v).second)
                return v;
        }
    }

  private:
    std::set<variable> used_;
    std::size_t counter_ = 0;
};

inline void collect_variables(const raw_pred_app &a, std::set<variable> &out) {
    for (auto &t : a.args)
        for (auto &[v, c] : t.coefficients())
            out.insert(v);
}

inline pred_app resolve_app(const raw_pred_app &a, const horn_system &sys, fresh_names &fresh,
                            std::vector<formula> &equalities) {
    auto id = sys.find(a.name);
    if (!id)
        throw parse_error("undeclared predicate '" + a.name + "'", a.line, a.column);
    if (sys.decl(*id).arity != a.args.size())
        throw parse_error("predicate '" + a.name + "' has arity " + std::to_string(sys.decl(*id).arity) +
                              ", applied to " + std::to_string(a.args.size()) + " arguments",
                          a.line, a.column);
    pred_app out{*id, {}};
    std::set<variable> seen;
    for (auto &t : a.args) {
        auto v = t.as_variable();
        if (v && seen.insert(*v).second) {
            out.args.push_back(*v);
            continue;
        }
        variable f = fresh.next();
        seen.insert(f);
        out.args.push_back(f);
        equalities.push_back(formula::atom(lin_constraint::eq(lin_term::var(f), t)));
    }
    return out;
}

} // namespace detail

inline clause normalize_clause(const raw_clause &raw, const horn_system &sys) {
    std::set<variable> used = variables(raw.constraint);
    for (auto &a : raw.body)
        detail::collect_variables(a, used);
    if (raw.head)
        detail::collect_variables(*raw.head, used);
    detail::fresh_names fresh(used);

    std::vector<formula> conjuncts{eliminate_ne(raw.constraint)};
    clause out;
    for (auto &a : raw.body) {
        if (a.name == horn_system::falsity_name)
            throw parse_error("falsity predicate in clause body", a.line, a.column);
        out.body.push_back(detail::resolve_app(a, sys, fresh, conjuncts));
    }
    if (raw.head)
        out.head = detail::resolve_app(*raw.head, sys, fresh, conjuncts);
    else
        out.head = pred_app{horn_system::falsity, {}};
    out.constraint = formula::conj(std::move(conjuncts));
    return out;
}

// Goal entries follow the same argument discipline; the constraint may only
// mention the entry's own arguments.
inline goal_entry normalize_goal(const raw_pred_app &app, const formula &constraint, const horn_system &sys) {
    std::set<variable> used = variables(constraint);
    detail::collect_variables(app, used);
    detail::fresh_names fresh(used);
    std::vector<formula> conjuncts{eliminate_ne(constraint)};
    goal_entry g;
    if (app.name == horn_system::falsity_name && app.args.empty())
        g.atom = pred_app{horn_system::falsity, {}};
    else
        g.atom = detail::resolve_app(app, sys, fresh, conjuncts);
    g.constraint = formula::conj(std::move(conjuncts));
    std::set<variable> args(g.atom.args.begin(), g.atom.args.end());
    for (auto &v : variables(g.constraint))
        if (!args.count(v))
            throw parse_error("goal constraint mentions '" + v + "', which is not an argument of the goal atom",
                              app.line, app.column);
    return g;
}

} // namespace hornfb
