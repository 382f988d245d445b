#pragma once

/*
   Exact inclusion checks phrased as unsatisfiability queries, independent
   of the box projection used during iteration: a clause is respected by
   an interpretation when its constraint, the body interpretations and the
   negated head interpretation have no common rational solution.
 */

#include "hornfb/core/printer.hpp"
#include "hornfb/domain/element.hpp"
#include "hornfb/linear/fourier_motzkin.hpp"

namespace hornfb {

struct clause_violation {
    std::size_t clause_index = 0;
    std::size_t body_position = 0; // meaningful for backward checks only
    valuation witness;
};

namespace detail {

inline formula instance(const formula &positional, const pred_app &app) {
    return rename(positional, positional_renaming(app));
}

inline formula instance(const box &b, const pred_app &app) { return b.to_formula(app.args); }

inline std::optional<valuation> violation(const std::vector<formula> &parts, std::size_t cap) {
    return find_point(formula::conj(parts), cap);
}

} // namespace detail

// Clauses whose instance φ ∧ ⋀ δ_body ∧ ¬δ_head is satisfiable.
inline std::vector<clause_violation> check_model(const horn_system &sys, const std::vector<formula> &model,
                                                 std::size_t cap = default_dnf_cap) {
    std::vector<clause_violation> out;
    for (std::size_t i = 0; i < sys.clauses.size(); ++i) {
        const auto &c = sys.clauses[i];
        std::vector<formula> parts{c.constraint};
        for (auto &b : c.body)
            parts.push_back(detail::instance(model.at(b.pred), b));
        parts.push_back(negate(detail::instance(model.at(c.head.pred), c.head)));
        if (auto w = detail::violation(parts, cap))
            out.push_back({i, 0, *w});
    }
    return out;
}

// Goal entries whose constraint is satisfiable together with the model.
inline std::vector<std::size_t> goal_overlaps(const horn_system &, const goal_spec &goal,
                                              const std::vector<formula> &model, std::size_t cap = default_dnf_cap) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < goal.entries.size(); ++i) {
        const auto &e = goal.entries[i];
        if (is_sat(formula::conj(e.constraint, detail::instance(model.at(e.atom.pred), e.atom)), cap))
            out.push_back(i);
    }
    return out;
}

// post#(d) ⊓ r ⊑ d, clause by clause.
inline std::vector<clause_violation> certify_post(const horn_system &sys, const abstract_element &d,
                                                  const abstract_element &r, std::size_t cap = default_dnf_cap) {
    std::vector<clause_violation> out;
    for (std::size_t i = 0; i < sys.clauses.size(); ++i) {
        const auto &c = sys.clauses[i];
        std::vector<formula> parts{c.constraint};
        for (auto &b : c.body)
            parts.push_back(detail::instance(d[b.pred], b));
        parts.push_back(detail::instance(r[c.head.pred], c.head));
        parts.push_back(negate(detail::instance(d[c.head.pred], c.head)));
        if (auto w = detail::violation(parts, cap))
            out.push_back({i, 0, *w});
    }
    return out;
}

// pre#_r(b) ⊑ b for every clause and body position; seed inclusion g ⊓ r ⊑ b
// is an exact lattice check done by the caller.
inline std::vector<clause_violation> certify_pre(const horn_system &sys, const abstract_element &b,
                                                 const abstract_element &r, std::size_t cap = default_dnf_cap) {
    std::vector<clause_violation> out;
    for (std::size_t i = 0; i < sys.clauses.size(); ++i) {
        const auto &c = sys.clauses[i];
        for (std::size_t j = 0; j < c.body.size(); ++j) {
            std::vector<formula> parts{c.constraint, detail::instance(b[c.head.pred], c.head)};
            for (auto &a : c.body)
                parts.push_back(detail::instance(r[a.pred], a));
            parts.push_back(negate(detail::instance(b[c.body[j].pred], c.body[j])));
            if (auto w = detail::violation(parts, cap))
                out.push_back({i, j, *w});
        }
    }
    return out;
}

inline std::string describe(const horn_system &sys, const clause_violation &v) {
    std::string out = "clause " + std::to_string(v.clause_index + 1) + ": " + to_string(sys, sys.clauses.at(v.clause_index));
    out += "  witness {";
    bool first = true;
    for (auto &[x, val] : v.witness) {
        out += (first ? "" : ", ") + x + " = " + to_string(val);
        first = false;
    }
    return out + "}";
}

} // namespace hornfb
