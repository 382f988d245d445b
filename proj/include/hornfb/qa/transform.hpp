#pragma once

/*
   Query-answer transformation and the analyses built on it: the two-step
   scheme (analyze the transformed system, strengthen the original clause
   heads with the answers, analyze again) and an iterated emulation of the
   alternation sequence through plain forward analyses of rewritten systems.
 */

#include "hornfb/solver/alternation.hpp"

namespace hornfb {

struct qa_system {
    horn_system system;
    std::vector<pred_id> query;  // original pred -> p_q
    std::vector<pred_id> answer; // original pred -> p_a
};

namespace detail {

inline std::string fresh_pred_name(const horn_system &original, const horn_system &target, std::string base) {
    std::string name = base;
    for (int i = 1; original.find(name) || target.find(name); ++i)
        name = base + std::to_string(i);
    return name;
}

inline pred_app remap(const pred_app &a, const std::vector<pred_id> &ids) { return {ids.at(a.pred), a.args}; }

} // namespace detail

inline qa_system qa_transform(const horn_system &sys, const goal_spec &goal) {
    qa_system out;
    auto &q = out.system;
    q.universe = sys.universe;
    for (pred_id p = 0; p < sys.num_preds(); ++p) {
        const auto &d = sys.decl(p);
        out.query.push_back(q.add_pred(detail::fresh_pred_name(sys, q, d.name + "_q"), d.arity));
        out.answer.push_back(q.add_pred(detail::fresh_pred_name(sys, q, d.name + "_a"), d.arity));
    }
    for (auto &c : sys.clauses) {
        clause answer{{detail::remap(c.head, out.query)}, c.constraint, detail::remap(c.head, out.answer)};
        for (auto &b : c.body)
            answer.body.push_back(detail::remap(b, out.answer));
        q.clauses.push_back(answer);
        for (std::size_t i = 0; i < c.body.size(); ++i) {
            clause query{{detail::remap(c.head, out.query)}, c.constraint, detail::remap(c.body[i], out.query)};
            for (std::size_t j = 0; j < i; ++j)
                query.body.push_back(detail::remap(c.body[j], out.answer));
            q.clauses.push_back(query);
        }
    }
    goal_spec qa_goal;
    for (auto &e : goal.entries) {
        q.clauses.push_back({{}, e.constraint, detail::remap(e.atom, out.query)});
        qa_goal.entries.push_back({detail::remap(e.atom, out.answer), e.constraint});
    }
    q.goal = qa_goal;
    return out;
}

inline qa_system qa_transform(const horn_system &sys) { return qa_transform(sys, sys.effective_goal()); }

struct qa_result {
    verdict status = verdict::unknown;
    std::size_t rounds = 0;
    std::vector<formula> model; // per original predicate, positional variables
    std::vector<abstract_element> d, b; // over the original predicates; b[0] = ⊤
    analysis_stats stats;
};

// Original system with φ strengthened by `heads[p]` on every clause with head p.
inline horn_system strengthen_heads(const horn_system &sys, const abstract_element &heads) {
    horn_system out = sys;
    for (auto &c : out.clauses)
        c.constraint = formula::conj(c.constraint, heads[c.head.pred].to_formula(c.head.args));
    return out;
}

/*
   Two-step scheme. The witness model maps p to δ_s ∨ ¬Q_p where δ_s is
   the result on the strengthened system and Q_p the query box of p: atoms
   outside the query boxes cannot take part in deriving the goal.
 */
inline qa_result qa_two_step(const horn_system &sys, const goal_spec &goal, const analysis_config &cfg) {
    qa_result res;
    auto qa = qa_transform(sys, goal);
    compiled_system qcs(qa.system, cfg.dnf_cap);
    auto dq = analyze_forward(qcs, abstract_element::top(qa.system), cfg, res.stats);

    auto answers = abstract_element::top(sys);
    auto queries = abstract_element::top(sys);
    for (pred_id p = 0; p < sys.num_preds(); ++p) {
        answers.set(p, dq[qa.answer[p]]);
        queries.set(p, dq[qa.query[p]]);
    }
    auto strengthened = strengthen_heads(sys, answers);
    compiled_system scs(strengthened, cfg.dnf_cap);
    auto ds = analyze_forward(scs, abstract_element::top(strengthened), cfg, res.stats);

    res.rounds = 2;
    res.d = {answers, ds};
    res.b = {abstract_element::top(sys), queries};
    auto g = goal_element(sys, goal, cfg.dnf_cap);
    res.status = meet(g, ds).is_bottom() ? verdict::safe : verdict::unknown;
    for (pred_id p = 0; p < sys.num_preds(); ++p)
        res.model.push_back(formula::disj(ds[p].to_formula(), negate(queries[p].to_formula())));
    return res;
}

inline qa_result qa_two_step(const horn_system &sys, const analysis_config &cfg = {}) {
    return qa_two_step(sys, sys.effective_goal(), cfg);
}

// Forward system of a round: every clause gets the previous backward result
// of its head conjoined to the constraint.
inline horn_system forward_system(const horn_system &sys, const abstract_element &beta) {
    return strengthen_heads(sys, beta);
}

/*
   Backward system of a round: every clause P1..Pn ⊢ φ → P is reversed into n clauses
   P ⊢ φ ∧ ⋀ δ(Pi) → Pi, and each goal entry gives a seed clause
   ⊢ φ_g ∧ δ(p) → p. The falsity predicate becomes an ordinary
   predicate named after it; `ids` maps original predicates to the new ones.
 */
inline horn_system backward_system(const horn_system &sys, const goal_spec &goal, const abstract_element &delta,
                                   std::vector<pred_id> &ids) {
    horn_system out;
    out.universe = sys.universe;
    ids.assign(sys.num_preds(), 0);
    for (pred_id p = 0; p < sys.num_preds(); ++p) {
        const auto &d = sys.decl(p);
        std::string name = d.is_false ? detail::fresh_pred_name(sys, out, d.name + "_b") : d.name;
        ids[p] = out.add_pred(name, d.arity);
    }
    for (auto &c : sys.clauses) {
        std::vector<formula> parts{c.constraint};
        for (auto &b : c.body)
            parts.push_back(delta[b.pred].to_formula(b.args));
        formula phi = formula::conj(parts);
        for (auto &b : c.body)
            out.clauses.push_back({{detail::remap(c.head, ids)}, phi, detail::remap(b, ids)});
    }
    for (auto &e : goal.entries)
        out.clauses.push_back(
            {{}, formula::conj(e.constraint, delta[e.atom.pred].to_formula(e.atom.args)), detail::remap(e.atom, ids)});
    return out;
}

inline qa_result qa_iterated(const horn_system &sys, const goal_spec &goal, const analysis_config &cfg) {
    if (cfg.max_rounds == 0)
        throw std::invalid_argument("max_rounds must be positive");
    qa_result res;
    auto g = goal_element(sys, goal, cfg.dnf_cap);
    res.b.push_back(abstract_element::top(sys));
    bool top_first = cfg.start == analysis_config::direction::backward || cfg.coarse_first;
    for (std::size_t k = 1; k <= cfg.max_rounds; ++k) {
        res.rounds = k;
        if (k == 1 && top_first) {
            res.d.push_back(abstract_element::top(sys));
        } else {
            auto hd = forward_system(sys, res.b.back());
            compiled_system cs(hd, cfg.dnf_cap);
            res.d.push_back(analyze_forward(cs, abstract_element::top(hd), cfg, res.stats));
        }
        if (meet(g, res.d.back()).is_bottom()) {
            res.status = verdict::safe;
            break;
        }
        if (k == cfg.max_rounds)
            break;
        std::vector<pred_id> ids;
        auto hb = backward_system(sys, goal, res.d.back(), ids);
        compiled_system cs(hb, cfg.dnf_cap);
        auto bk = analyze_forward(cs, abstract_element::top(hb), cfg, res.stats);
        auto mapped = abstract_element::top(sys);
        for (pred_id p = 0; p < sys.num_preds(); ++p)
            mapped.set(p, bk[ids[p]]);
        res.b.push_back(mapped);
        if (k > 1 && res.d[k - 1] == res.d[k - 2] && res.b[k] == res.b[k - 1])
            break;
    }
    alternation_trace tr{res.d, res.b};
    res.model = refined_model(sys, tr);
    return res;
}

inline qa_result qa_iterated(const horn_system &sys, const analysis_config &cfg = {}) {
    return qa_iterated(sys, sys.effective_goal(), cfg);
}

} // namespace hornfb
