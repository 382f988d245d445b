#pragma once

/*
   Alternating forward / restricted backward analysis. The sequence is
   b0 = ⊤, d1, b1, d2, ... where each d_i is a forward post-fixpoint under
   restriction b_{i-1} and each b_i is a backward fixpoint under
   restriction d_i seeded with the goal. The refined model is
   γ(d_k) ∪ ⋃_{i<k} (γ(d_i) \ γ(b_i)); it excludes the goal as soon as the
   goal does not meet d_k.
 */

#include "hornfb/solver/fixpoint.hpp"

namespace hornfb {

enum class verdict { safe, unknown };

inline const char *to_string(verdict v) { return v == verdict::safe ? "SAFE" : "UNKNOWN"; }

struct alternation_trace {
    std::vector<abstract_element> d; // d[0] is d_1
    std::vector<abstract_element> b; // b[0] is b_0 = ⊤; b.size() is d.size() or d.size() + 1

    std::size_t rounds() const { return d.size(); }
};

enum class stop_reason { goal_unreachable, stabilized, round_limit };

inline const char *to_string(stop_reason s) {
    switch (s) {
    case stop_reason::goal_unreachable:
        return "goal-unreachable";
    case stop_reason::stabilized:
        return "stabilized";
    case stop_reason::round_limit:
        return "round-limit";
    }
    return "?";
}

struct alternation_result {
    alternation_trace trace;
    verdict status = verdict::unknown;
    stop_reason reason = stop_reason::round_limit;
    abstract_element goal;
    analysis_stats stats;
};

inline alternation_result alternate(const horn_system &sys, const goal_spec &goal_spec_, const analysis_config &cfg) {
    if (cfg.max_rounds == 0)
        throw std::invalid_argument("max_rounds must be positive");
    compiled_system cs(sys, cfg.dnf_cap);
    alternation_result res;
    res.goal = goal_element(sys, goal_spec_, cfg.dnf_cap);
    auto &tr = res.trace;
    tr.b.push_back(abstract_element::top(sys));
    bool top_first = cfg.start == analysis_config::direction::backward || cfg.coarse_first;

    for (std::size_t k = 1; k <= cfg.max_rounds; ++k) {
        if (k == 1 && top_first)
            tr.d.push_back(abstract_element::top(sys));
        else
            tr.d.push_back(analyze_forward(cs, tr.b.back(), cfg, res.stats));
        const auto &dk = tr.d.back();
        if (meet(res.goal, dk).is_bottom()) {
            res.status = verdict::safe;
            res.reason = stop_reason::goal_unreachable;
            return res;
        }
        if (k == cfg.max_rounds) {
            res.reason = stop_reason::round_limit;
            return res;
        }
        if (k == 1 && cfg.coarse_first)
            tr.b.push_back(coarse_element(sys, coarse_backward(sys, goal_spec_)));
        else
            tr.b.push_back(analyze_backward(cs, res.goal, dk, cfg, res.stats));
        if (k > 1 && tr.d[k - 1] == tr.d[k - 2] && tr.b[k] == tr.b[k - 1]) {
            res.reason = stop_reason::stabilized;
            return res;
        }
    }
    return res;
}

inline alternation_result alternate(const horn_system &sys, const analysis_config &cfg = {}) {
    return alternate(sys, sys.effective_goal(), cfg);
}

// Per-predicate formula δ_k ∨ ⋁_{i<k} (δ_i ∧ ¬β_i) over positional variables.
inline std::vector<formula> refined_model(const horn_system &sys, const alternation_trace &tr) {
    std::vector<formula> out;
    std::size_t k = tr.d.size();
    for (pred_id p = 0; p < sys.num_preds(); ++p) {
        std::vector<formula> parts{tr.d.at(k - 1)[p].to_formula()};
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const auto &bi = tr.b.at(i + 1)[p];
            parts.push_back(formula::conj(tr.d[i][p].to_formula(), negate(bi.to_formula())));
        }
        out.push_back(formula::disj(std::move(parts)));
    }
    return out;
}

struct trace_check {
    bool forward_laws = true;   // post#(d_i) ⊓ b_{i-1} ⊑ d_i
    bool goal_laws = true;      // g ⊓ d_i ⊑ b_i
    bool backward_laws = true;  // pre#_{d_i}(b_i) ⊑ b_i
    bool descending = true;     // b_i ⊑ d_i ⊑ b_{i-1}
    std::vector<std::string> failures;

    bool ok() const { return forward_laws && goal_laws && backward_laws && descending; }
};

// Re-checks every inclusion of the alternation sequence exactly.
inline trace_check check_trace(const horn_system &sys, const abstract_element &goal, const alternation_trace &tr,
                               std::size_t cap = default_dnf_cap) {
    trace_check out;
    for (std::size_t i = 1; i <= tr.d.size(); ++i) {
        const auto &di = tr.d[i - 1];
        const auto &prev = tr.b[i - 1];
        auto fwd = certify_post(sys, di, prev, cap);
        if (!fwd.empty()) {
            out.forward_laws = false;
            out.failures.push_back("d" + std::to_string(i) + ": " + describe(sys, fwd.front()));
        }
        if (!leq(di, prev)) {
            out.descending = false;
            out.failures.push_back("d" + std::to_string(i) + " not below b" + std::to_string(i - 1));
        }
        if (i >= tr.b.size())
            continue;
        const auto &bi = tr.b[i];
        if (!leq(meet(goal, di), bi)) {
            out.goal_laws = false;
            out.failures.push_back("goal meet d" + std::to_string(i) + " not below b" + std::to_string(i));
        }
        auto bwd = certify_pre(sys, bi, di, cap);
        if (!bwd.empty()) {
            out.backward_laws = false;
            out.failures.push_back("b" + std::to_string(i) + ": " + describe(sys, bwd.front()));
        }
        if (!leq(bi, di)) {
            out.descending = false;
            out.failures.push_back("b" + std::to_string(i) + " not below d" + std::to_string(i));
        }
    }
    return out;
}

} // namespace hornfb
