#pragma once

/*
   Predicate dependency graph (edge body predicate -> head predicate),
   its strongly connected components in topological order, and widening
   points chosen by recursive decomposition of each component (the head
   of a component is removed and the rest decomposed again), so that
   every cycle of the graph passes through at least one widening point.
 */

#include "hornfb/core/system.hpp"

#include <algorithm>
#include <functional>

namespace hornfb {

struct dependency_component {
    std::vector<pred_id> members; // in iteration order; members.front() is the component head
    bool recursive = false;       // more than one member, or a self-loop
};

struct dependency_order {
    std::vector<dependency_component> components; // topological: producers before consumers
    std::vector<bool> widening_point;             // indexed by pred_id
    std::vector<std::size_t> rank;                // position in the flattened order; npos if absent

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<pred_id> flattened() const {
        std::vector<pred_id> out;
        for (auto &c : components)
            out.insert(out.end(), c.members.begin(), c.members.end());
        return out;
    }
};

namespace detail {

using adjacency = std::vector<std::vector<pred_id>>;

// Tarjan's algorithm restricted to `nodes`; components come out in
// topological order, members in DFS discovery order.
inline std::vector<std::vector<pred_id>> tarjan(const adjacency &succ, const std::vector<pred_id> &nodes) {
    std::vector<bool> in_set(succ.size(), false);
    for (auto n : nodes)
        in_set[n] = true;
    std::vector<long> index(succ.size(), -1), low(succ.size(), 0);
    std::vector<bool> on_stack(succ.size(), false);
    std::vector<pred_id> stack;
    std::vector<std::vector<pred_id>> sccs;
    long counter = 0;

    std::function<void(pred_id)> visit = [&](pred_id v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : succ[v]) {
            if (!in_set[w])
                continue;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<pred_id> scc;
            pred_id w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                scc.push_back(w);
            } while (w != v);
            std::sort(scc.begin(), scc.end(), [&](pred_id a, pred_id b) { return index[a] < index[b]; });
            sccs.push_back(std::move(scc));
        }
    };
    for (auto n : nodes)
        if (index[n] < 0)
            visit(n);
    std::reverse(sccs.begin(), sccs.end());
    return sccs;
}

inline bool has_self_loop(const adjacency &succ, pred_id p) {
    return std::find(succ[p].begin(), succ[p].end(), p) != succ[p].end();
}

inline void mark_widening_points(const adjacency &succ, const std::vector<pred_id> &scc, std::vector<bool> &out) {
    if (scc.size() == 1 && !has_self_loop(succ, scc.front()))
        return;
    out[scc.front()] = true;
    std::vector<pred_id> rest(scc.begin() + 1, scc.end());
    for (auto &sub : tarjan(succ, rest))
        mark_widening_points(succ, sub, out);
}

} // namespace detail

inline detail::adjacency dependency_graph(const horn_system &sys) {
    detail::adjacency succ(sys.num_preds());
    for (auto &c : sys.clauses)
        for (auto &b : c.body)
            if (std::find(succ[b.pred].begin(), succ[b.pred].end(), c.head.pred) == succ[b.pred].end())
                succ[b.pred].push_back(c.head.pred);
    return succ;
}

inline dependency_order compute_dependency_order(const horn_system &sys) {
    auto succ = dependency_graph(sys);
    std::vector<bool> present(sys.num_preds(), false);
    for (auto &c : sys.clauses) {
        present[c.head.pred] = true;
        for (auto &b : c.body)
            present[b.pred] = true;
    }
    std::vector<pred_id> nodes;
    for (pred_id p = 0; p < sys.num_preds(); ++p)
        if (present[p])
            nodes.push_back(p);

    dependency_order order;
    order.widening_point.assign(sys.num_preds(), false);
    order.rank.assign(sys.num_preds(), dependency_order::npos);
    for (auto &scc : detail::tarjan(succ, nodes)) {
        dependency_component comp;
        comp.recursive = scc.size() > 1 || detail::has_self_loop(succ, scc.front());
        detail::mark_widening_points(succ, scc, order.widening_point);
        comp.members = std::move(scc);
        order.components.push_back(std::move(comp));
    }
    std::size_t r = 0;
    for (auto p : order.flattened())
        order.rank[p] = r++;
    return order;
}

} // namespace hornfb
