#pragma once

/*
   Forward and restricted backward box analyses. Both run a priority
   worklist over the predicate dependency order (reversed for backward),
   widen at the cycle-cutting predicates once they have been updated
   `widening_delay` times, then run descending Gauss-Seidel passes, and
   finally re-check the result exactly before returning it.
 */

#include "hornfb/core/dependency.hpp"
#include "hornfb/domain/transformers.hpp"
#include "hornfb/solver/certify.hpp"

#include <set>

namespace hornfb {

struct analysis_config {
    enum class direction { forward, backward };

    std::size_t max_rounds = 5;
    std::size_t widening_delay = 2;
    std::size_t descending_passes = 1;
    direction start = direction::forward;
    bool coarse_first = false;
    std::size_t dnf_cap = default_dnf_cap;
};

struct analysis_stats {
    std::size_t forward_runs = 0;
    std::size_t backward_runs = 0;
    std::size_t updates = 0;
    std::size_t widenings = 0;
    std::size_t transformer_calls = 0;

    analysis_stats &operator+=(const analysis_stats &o) {
        forward_runs += o.forward_runs;
        backward_runs += o.backward_runs;
        updates += o.updates;
        widenings += o.widenings;
        transformer_calls += o.transformer_calls;
        return *this;
    }
};

// Per-system data shared by all analyses of one system.
class compiled_system {
  public:
    compiled_system(const horn_system &sys, std::size_t cap)
        : sys_(&sys), order_(compute_dependency_order(sys)), by_head_(sys.num_preds()), uses_(sys.num_preds()),
          cap_(cap) {
        for (std::size_t i = 0; i < sys.clauses.size(); ++i) {
            const auto &c = sys.clauses[i];
            phi_.push_back(to_dnf(c.constraint, cap));
            by_head_[c.head.pred].push_back(i);
            for (std::size_t j = 0; j < c.body.size(); ++j)
                uses_[c.body[j].pred].push_back({i, j});
        }
    }

    const horn_system &system() const { return *sys_; }
    const dependency_order &order() const { return order_; }
    const dnf &constraint_dnf(std::size_t clause) const { return phi_[clause]; }
    const std::vector<std::size_t> &clauses_with_head(pred_id p) const { return by_head_[p]; }
    const std::vector<std::pair<std::size_t, std::size_t>> &uses(pred_id p) const { return uses_[p]; }
    std::size_t cap() const { return cap_; }

  private:
    const horn_system *sys_;
    dependency_order order_;
    std::vector<dnf> phi_;
    std::vector<std::vector<std::size_t>> by_head_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> uses_;
    std::size_t cap_;
};

namespace detail {

/*
   Shared chaotic iteration. `rank_of` orders the worklist, `eval(p, x)`
   computes the transformer for p (already met with the restriction),
   `dependents(p)` lists the predicates to revisit when p changes.
 */
template <class Eval, class Dependents>
abstract_element iterate(abstract_element x, const std::vector<pred_id> &seq, const std::vector<bool> &widening_point,
                         const abstract_element &restriction, const analysis_config &cfg, analysis_stats &stats,
                         Eval eval, Dependents dependents) {
    std::vector<std::size_t> pos(x.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < seq.size(); ++i)
        pos[seq[i]] = i;
    std::set<std::pair<std::size_t, pred_id>> work;
    for (auto p : seq)
        work.insert({pos[p], p});
    std::vector<std::size_t> updates(x.size(), 0);

    while (!work.empty()) {
        pred_id p = work.begin()->second;
        work.erase(work.begin());
        box fresh = eval(p, x);
        box next = join(x[p], fresh);
        if (widening_point[p] && updates[p] >= cfg.widening_delay && !(next == x[p])) {
            next = meet(widen(x[p], next), restriction[p]);
            ++stats.widenings;
        }
        if (next == x[p])
            continue;
        x.set(p, std::move(next));
        ++updates[p];
        ++stats.updates;
        for (auto q : dependents(p))
            if (pos[q] != static_cast<std::size_t>(-1))
                work.insert({pos[q], q});
    }

    for (std::size_t pass = 0; pass < cfg.descending_passes; ++pass)
        for (auto p : seq)
            x.set(p, meet(x[p], eval(p, x)));
    return x;
}

} // namespace detail

inline box forward_transformer(const compiled_system &cs, pred_id p, const abstract_element &d,
                               const abstract_element &restriction, analysis_stats &stats) {
    const auto &sys = cs.system();
    box out = box::bottom(sys.decl(p).arity);
    for (auto i : cs.clauses_with_head(p)) {
        ++stats.transformer_calls;
        out = join(out, clause_post(sys.clauses[i], cs.constraint_dnf(i), d));
    }
    return meet(out, restriction[p]);
}

inline box backward_transformer(const compiled_system &cs, pred_id p, const abstract_element &b,
                                const abstract_element &seed, const abstract_element &restriction,
                                analysis_stats &stats) {
    const auto &sys = cs.system();
    box out = seed[p];
    for (auto [i, j] : cs.uses(p)) {
        ++stats.transformer_calls;
        out = join(out, clause_pre_restricted(sys.clauses[i], cs.constraint_dnf(i), j, restriction, b));
    }
    return meet(out, restriction[p]);
}

// Element d with post#(d) ⊓ restriction ⊑ d and d ⊑ restriction.
inline abstract_element analyze_forward(const compiled_system &cs, const abstract_element &restriction,
                                        const analysis_config &cfg, analysis_stats &stats) {
    const auto &sys = cs.system();
    ++stats.forward_runs;
    auto seq = cs.order().flattened();
    auto result = detail::iterate(
        abstract_element::bottom(sys), seq, cs.order().widening_point, restriction, cfg, stats,
        [&](pred_id p, const abstract_element &d) { return forward_transformer(cs, p, d, restriction, stats); },
        [&](pred_id p) {
            std::vector<pred_id> out;
            for (auto [i, j] : cs.uses(p))
                out.push_back(sys.clauses[i].head.pred);
            return out;
        });
    auto bad = certify_post(sys, result, restriction, cs.cap());
    if (!bad.empty() || !leq(result, restriction))
        throw certification_error("forward analysis result is not a post-fixpoint: " +
                                  (bad.empty() ? std::string("exceeds restriction") : describe(sys, bad.front())));
    return result;
}

inline abstract_element analyze_forward(const horn_system &sys, const abstract_element &restriction,
                                        const analysis_config &cfg = {}) {
    analysis_stats stats;
    return analyze_forward(compiled_system(sys, cfg.dnf_cap), restriction, cfg, stats);
}

// Element b with (goal ⊓ restriction) ⊔ pre#_restriction(b) ⊑ b and b ⊑ restriction.
inline abstract_element analyze_backward(const compiled_system &cs, const abstract_element &goal,
                                         const abstract_element &restriction, const analysis_config &cfg,
                                         analysis_stats &stats) {
    const auto &sys = cs.system();
    ++stats.backward_runs;
    auto seed = meet(goal, restriction);
    auto seq = cs.order().flattened();
    std::reverse(seq.begin(), seq.end());
    auto result = detail::iterate(
        seed, seq, cs.order().widening_point, restriction, cfg, stats,
        [&](pred_id p, const abstract_element &b) { return backward_transformer(cs, p, b, seed, restriction, stats); },
        [&](pred_id p) {
            std::vector<pred_id> out;
            for (auto i : cs.clauses_with_head(p))
                for (auto &a : sys.clauses[i].body)
                    out.push_back(a.pred);
            return out;
        });
    auto bad = certify_pre(sys, result, restriction, cs.cap());
    if (!bad.empty() || !leq(seed, result) || !leq(result, restriction))
        throw certification_error("backward analysis result is not closed: " +
                                  (bad.empty() ? std::string("seed or restriction violated")
                                               : describe(sys, bad.front())));
    return result;
}

inline abstract_element analyze_backward(const horn_system &sys, const abstract_element &goal,
                                         const abstract_element &restriction, const analysis_config &cfg = {}) {
    analysis_stats stats;
    return analyze_backward(compiled_system(sys, cfg.dnf_cap), goal, restriction, cfg, stats);
}

// Box hull of the goal entries, per predicate.
inline abstract_element goal_element(const horn_system &sys, const goal_spec &goal, std::size_t cap = default_dnf_cap) {
    auto g = abstract_element::bottom(sys);
    for (auto &e : goal.entries) {
        box hull = box::bottom(e.atom.args.size());
        for (auto &c : to_dnf(e.constraint, cap).cubes)
            hull = join(hull, project_to_box(c, e.atom.args));
        g.set(e.atom.pred, join(g[e.atom.pred], hull));
    }
    return g;
}

inline abstract_element goal_element(const horn_system &sys, std::size_t cap = default_dnf_cap) {
    return goal_element(sys, sys.effective_goal(), cap);
}

// Predicates that may take part in deriving a goal predicate; members map
// to ⊤, the rest to ⊥.
inline std::set<pred_id> coarse_backward(const horn_system &sys, const goal_spec &goal) {
    std::set<pred_id> out;
    std::vector<pred_id> stack;
    for (auto &e : goal.entries)
        if (out.insert(e.atom.pred).second)
            stack.push_back(e.atom.pred);
    while (!stack.empty()) {
        pred_id p = stack.back();
        stack.pop_back();
        for (auto &c : sys.clauses)
            if (c.head.pred == p)
                for (auto &b : c.body)
                    if (out.insert(b.pred).second)
                        stack.push_back(b.pred);
    }
    return out;
}

inline abstract_element coarse_element(const horn_system &sys, const std::set<pred_id> &members) {
    auto e = abstract_element::bottom(sys);
    for (auto p : members)
        e.set(p, box::top(sys.decl(p).arity));
    return e;
}

} // namespace hornfb
