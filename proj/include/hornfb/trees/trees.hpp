#pragma once

/*
   Derivation trees over the ground consequence relation, enumerated to a
   bounded depth, and executable checks that their set-of-atoms
   abstractions coincide with the forward, backward and combined
   collecting semantics.
 */

#include "hornfb/concrete/semantics.hpp"

#include <set>

namespace hornfb {

// A node with no children is a leaf. Children are kept sorted, so trees
// built from the same premise set compare equal.
struct deriv_tree {
    ground_atom node;
    std::vector<deriv_tree> children;

    friend bool operator==(const deriv_tree &a, const deriv_tree &b) {
        return a.node == b.node && a.children == b.children;
    }
    friend bool operator<(const deriv_tree &a, const deriv_tree &b) {
        if (!(a.node == b.node))
            return a.node < b.node;
        return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
                                            b.children.end());
    }
};

using tree_set = std::set<deriv_tree>;

inline constexpr std::size_t default_tree_limit = 200000;

namespace detail {

inline void check_tree_limit(const tree_set &t, std::size_t limit) {
    if (t.size() > limit)
        throw resource_error("more than " + std::to_string(limit) + " derivation trees");
}

} // namespace detail

// Leaves for initial consequences, plus one new root over trees of `t`
// whose roots are exactly the (distinct) premises.
inline tree_set tree_post(const ground_rel &rel, const tree_set &t, std::size_t limit = default_tree_limit) {
    std::map<ground_atom, std::vector<const deriv_tree *>> by_root;
    for (auto &x : t)
        by_root[x.node].push_back(&x);
    tree_set out;
    for (auto &k : rel) {
        std::vector<const std::vector<const deriv_tree *> *> choices;
        bool possible = true;
        for (auto &p : k.premises) {
            auto it = by_root.find(p);
            if (it == by_root.end()) {
                possible = false;
                break;
            }
            choices.push_back(&it->second);
        }
        if (!possible)
            continue;
        std::vector<deriv_tree> kids(choices.size());
        std::function<void(std::size_t)> go = [&](std::size_t i) {
            if (i == choices.size()) {
                out.insert({k.conclusion, kids});
                detail::check_tree_limit(out, limit);
                return;
            }
            for (auto *c : *choices[i]) {
                kids[i] = *c;
                go(i + 1);
            }
        };
        go(0);
    }
    return out;
}

inline tree_set forward_trees(const ground_rel &rel, std::size_t depth, std::size_t limit = default_tree_limit) {
    tree_set t;
    for (std::size_t i = 0; i < depth; ++i)
        t = tree_post(rel, t, limit);
    return t;
}

namespace detail {

// All ways of expanding exactly one leaf of `t`.
inline void expand_one_leaf(const deriv_tree &t, const std::map<ground_atom, std::vector<const consequence *>> &by_head,
                            const std::function<void(deriv_tree)> &emit) {
    if (t.children.empty()) {
        auto it = by_head.find(t.node);
        if (it == by_head.end())
            return;
        for (auto *k : it->second) {
            if (k->premises.empty())
                continue; // expanding by an initial consequence gives the same leaf back
            deriv_tree e{t.node, {}};
            for (auto &p : k->premises)
                e.children.push_back({p, {}});
            emit(std::move(e));
        }
        return;
    }
    for (std::size_t i = 0; i < t.children.size(); ++i)
        expand_one_leaf(t.children[i], by_head, [&](deriv_tree sub) {
            deriv_tree copy = t;
            copy.children[i] = std::move(sub);
            emit(std::move(copy));
        });
}

} // namespace detail

inline tree_set tree_pre(const ground_rel &rel, const tree_set &t, std::size_t limit = default_tree_limit) {
    std::map<ground_atom, std::vector<const consequence *>> by_head;
    for (auto &k : rel)
        by_head[k.conclusion].push_back(&k);
    tree_set out;
    for (auto &x : t)
        detail::expand_one_leaf(x, by_head, [&](deriv_tree e) {
            out.insert(std::move(e));
            detail::check_tree_limit(out, limit);
        });
    return out;
}

// depth 1 gives the goal leaves; each further step adds one-leaf expansions.
inline tree_set backward_trees(const ground_rel &rel, const interpretation &goal, std::size_t depth,
                               std::size_t limit = default_tree_limit) {
    tree_set seed;
    for (auto &a : goal)
        seed.insert({a, {}});
    tree_set t;
    for (std::size_t i = 0; i < depth; ++i) {
        tree_set next = seed;
        auto expanded = tree_pre(rel, t, limit);
        next.insert(expanded.begin(), expanded.end());
        detail::check_tree_limit(next, limit);
        t = std::move(next);
    }
    return t;
}

inline void collect_nodes(const deriv_tree &t, interpretation &out) {
    out.insert(t.node);
    for (auto &c : t.children)
        collect_nodes(c, out);
}

inline interpretation atoms_abstraction(const tree_set &t) {
    interpretation out;
    for (auto &x : t)
        collect_nodes(x, out);
    return out;
}

inline bool is_subtree_closed(const tree_set &t) {
    for (auto &x : t)
        for (auto &c : x.children)
            if (!t.count(c))
                return false;
    return true;
}

namespace detail {

// Trees obtained from `t` by collapsing one internal node all of whose
// children are leaves back into a leaf.
inline void collapse_one(const deriv_tree &t, const std::function<void(deriv_tree)> &emit) {
    if (t.children.empty())
        return;
    bool all_leaves = true;
    for (auto &c : t.children)
        all_leaves &= c.children.empty();
    if (all_leaves)
        emit({t.node, {}});
    for (std::size_t i = 0; i < t.children.size(); ++i)
        collapse_one(t.children[i], [&](deriv_tree sub) {
            deriv_tree copy = t;
            copy.children[i] = std::move(sub);
            emit(std::move(copy));
        });
}

} // namespace detail

// Every tree's one-step pre-trees (one expansion undone) are in the set.
inline bool is_pre_tree_closed(const tree_set &t) {
    for (auto &x : t) {
        bool ok = true;
        detail::collapse_one(x, [&](deriv_tree p) { ok = ok && t.count(p) > 0; });
        if (!ok)
            return false;
    }
    return true;
}

enum class check_status { pass, fail, skipped };

inline const char *to_string(check_status s) {
    switch (s) {
    case check_status::pass:
        return "PASS";
    case check_status::fail:
        return "FAIL";
    case check_status::skipped:
        return "SKIPPED";
    }
    return "?";
}

struct tree_check_report {
    check_status forward = check_status::skipped;  // atoms of forward trees = forward lfp
    check_status backward = check_status::skipped; // atoms of backward trees = backward lfp
    check_status combined = check_status::skipped; // atoms of their intersection = combined lfp
    std::optional<std::size_t> forward_depth, backward_depth; // depth at which the abstraction stabilized
    std::optional<std::size_t> forward_tree_depth, backward_tree_depth; // depth at which the tree set stabilized
    std::size_t forward_trees = 0, backward_trees = 0, common_trees = 0;
    std::string note;

    bool any_fail() const {
        return forward == check_status::fail || backward == check_status::fail || combined == check_status::fail;
    }
};

/*
   Enumerates forward and backward trees up to depth_cap + 1. The forward
   (backward) check runs once the atom abstraction is equal at two
   consecutive depths. The combined check needs both tree sets themselves
   to stop growing, since a later tree could add atoms to the intersection.
 */
inline tree_check_report check_tree_abstractions(const ground_rel &rel, const interpretation &goal, std::size_t depth_cap,
                                         std::size_t limit = default_tree_limit) {
    tree_check_report r;
    auto status = [](bool ok) { return ok ? check_status::pass : check_status::fail; };
    tree_set fwd, bwd;
    try {
        tree_set prev;
        for (std::size_t d = 1; d <= depth_cap + 1; ++d) {
            auto next = tree_post(rel, prev, limit);
            if (!r.forward_depth && d > 1 && atoms_abstraction(next) == atoms_abstraction(prev))
                r.forward_depth = d - 1;
            if (d > 1 && next == prev) {
                r.forward_tree_depth = d - 1;
                break;
            }
            prev = std::move(next);
        }
        fwd = prev;

        tree_set seed;
        for (auto &a : goal)
            seed.insert({a, {}});
        prev.clear();
        for (std::size_t d = 1; d <= depth_cap + 1; ++d) {
            tree_set next = seed;
            auto expanded = tree_pre(rel, prev, limit);
            next.insert(expanded.begin(), expanded.end());
            detail::check_tree_limit(next, limit);
            if (!r.backward_depth && d > 1 && atoms_abstraction(next) == atoms_abstraction(prev))
                r.backward_depth = d - 1;
            if (d > 1 && next == prev) {
                r.backward_tree_depth = d - 1;
                break;
            }
            prev = std::move(next);
        }
        bwd = prev;
    } catch (const resource_error &e) {
        r.note = e.what();
    }
    r.forward_trees = fwd.size();
    r.backward_trees = bwd.size();

    if (r.forward_depth)
        r.forward = status(atoms_abstraction(forward_trees(rel, *r.forward_depth, limit)) == lfp_forward(rel));
    if (r.backward_depth)
        r.backward = status(atoms_abstraction(backward_trees(rel, goal, *r.backward_depth, limit)) ==
                            lfp_backward(rel, goal));
    if (r.forward_tree_depth && r.backward_tree_depth) {
        tree_set common;
        std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(), std::inserter(common, common.end()));
        r.common_trees = common.size();
        r.combined = status(atoms_abstraction(common) == lfp_combined(rel, goal));
    }
    return r;
}

inline std::string to_string(const horn_system &sys, const deriv_tree &t) {
    std::string out = to_string(sys, t.node);
    if (t.children.empty())
        return out;
    out += "<";
    for (std::size_t i = 0; i < t.children.size(); ++i)
        out += (i ? ", " : "") + to_string(sys, t.children[i]);
    return out + ">";
}

} // namespace hornfb
