#pragma once

/*
   Systems of constrained Horn clauses.

   Predicates are referred to by their index in `horn_system::decls`.
   Index 0 is always the distinguished 0-ary falsity predicate; it may
   only occur as a clause head.
 */

#include "hornfb/core/formula.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hornfb {

using pred_id = std::size_t;

struct pred_decl {
    std::string name;
    std::size_t arity = 0;
    bool is_false = false;

    friend bool operator==(const pred_decl &, const pred_decl &) = default;
};

// After normalization the arguments of one application are pairwise distinct.
struct pred_app {
    pred_id pred = 0;
    std::vector<variable> args;

    friend bool operator==(const pred_app &, const pred_app &) = default;
};

// body_1, ..., body_n, constraint -> head
struct clause {
    std::vector<pred_app> body;
    formula constraint;
    pred_app head;

    bool is_initial() const { return body.empty(); }

    std::set<variable> variables() const {
        auto vs = hornfb::variables(constraint);
        for (auto &a : body)
            vs.insert(a.args.begin(), a.args.end());
        vs.insert(head.args.begin(), head.args.end());
        return vs;
    }

    friend bool operator==(const clause &, const clause &) = default;
};

// One goal entry denotes the atoms p(c) such that `constraint` holds for args = c.
struct goal_entry {
    pred_app atom;
    formula constraint;

    friend bool operator==(const goal_entry &, const goal_entry &) = default;
};

struct goal_spec {
    std::vector<goal_entry> entries;

    friend bool operator==(const goal_spec &, const goal_spec &) = default;
};

class horn_system {
  public:
    static constexpr pred_id falsity = 0;
    static constexpr const char *falsity_name = "false";

    horn_system() { decls.push_back({falsity_name, 0, true}); }

    std::vector<pred_decl> decls;
    std::vector<clause> clauses;
    std::optional<goal_spec> goal;
    std::optional<std::vector<rational>> universe;

    std::size_t num_preds() const { return decls.size(); }
    const pred_decl &decl(pred_id p) const { return decls.at(p); }

    std::optional<pred_id> find(const std::string &name) const {
        for (pred_id p = 0; p < decls.size(); ++p)
            if (decls[p].name == name)
                return p;
        return std::nullopt;
    }

    pred_id add_pred(std::string name, std::size_t arity) {
        decls.push_back({std::move(name), arity, false});
        return decls.size() - 1;
    }

    // The explicit goal, or {false} when none was given.
    goal_spec effective_goal() const {
        if (goal)
            return *goal;
        return goal_spec{{goal_entry{pred_app{falsity, {}}, formula::top()}}};
    }

    friend bool operator==(const horn_system &, const horn_system &) = default;
};

// Positional argument names used by model formulas: A1, ..., An.
inline variable positional_var(std::size_t i) { return "A" + std::to_string(i + 1); }

inline std::vector<variable> positional_vars(std::size_t arity) {
    std::vector<variable> vs;
    for (std::size_t i = 0; i < arity; ++i)
        vs.push_back(positional_var(i));
    return vs;
}

// Map from positional names to the actual arguments of an application.
inline std::map<variable, variable> positional_renaming(const pred_app &app) {
    std::map<variable, variable> m;
    for (std::size_t i = 0; i < app.args.size(); ++i)
        m.emplace(positional_var(i), app.args[i]);
    return m;
}

} // namespace hornfb
