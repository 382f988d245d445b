#pragma once

/*
   Negation-free quantifier-free formulas: And/Or trees over linear
   constraints plus the literals true and false.

   Nodes are only built through the smart constructors below, which keep
   a canonical shape: nested And/Or of the same kind are flattened,
   neutral literals are dropped, absorbing literals collapse the node and
   single-child nodes are replaced by their child. Parsing and printing
   rely on this canonical shape for round-trips.
 */

#include "hornfb/core/linear.hpp"

#include <set>
#include <vector>

namespace hornfb {

class formula {
  public:
    enum class kind { tt, ff, atom, conj, disj };

    formula() = default; // true

    static formula top() { return formula(kind::tt); }
    static formula bottom() { return formula(kind::ff); }

    static formula atom(lin_constraint c) {
        if (c.is_ground())
            return lin_constraint::holds(c.lhs.constant(), c.rel) ? top() : bottom();
        formula f(kind::atom);
        f.atom_ = std::move(c);
        return f;
    }

    static formula conj(std::vector<formula> kids) { return combine(kind::conj, std::move(kids)); }
    static formula disj(std::vector<formula> kids) { return combine(kind::disj, std::move(kids)); }
    static formula conj(formula a, formula b) { return conj(std::vector<formula>{std::move(a), std::move(b)}); }
    static formula disj(formula a, formula b) { return disj(std::vector<formula>{std::move(a), std::move(b)}); }

    kind node_kind() const { return kind_; }
    bool is_true() const { return kind_ == kind::tt; }
    bool is_false() const { return kind_ == kind::ff; }
    const lin_constraint &constraint() const { return atom_; }
    const std::vector<formula> &children() const { return kids_; }

    friend bool operator==(const formula &a, const formula &b) {
        return a.kind_ == b.kind_ && a.atom_ == b.atom_ && a.kids_ == b.kids_;
    }

  private:
    explicit formula(kind k) : kind_(k) {}

    static formula combine(kind k, std::vector<formula> kids) {
        const kind neutral = k == kind::conj ? kind::tt : kind::ff;
        const kind absorbing = k == kind::conj ? kind::ff : kind::tt;
        formula out(k);
        for (auto &f : kids) {
            if (f.kind_ == neutral)
                continue;
            if (f.kind_ == absorbing)
                return formula(absorbing);
            if (f.kind_ == k) {
                for (auto &g : f.kids_)
                    out.kids_.push_back(std::move(g));
            } else {
                out.kids_.push_back(std::move(f));
            }
        }
        if (out.kids_.empty())
            return formula(neutral);
        if (out.kids_.size() == 1)
            return std::move(out.kids_.front());
        return out;
    }

    kind kind_ = kind::tt;
    lin_constraint atom_;
    std::vector<formula> kids_;
};

// Negation pushed through to the leaves; the result is again negation-free.
inline formula negate(const formula &f) {
    switch (f.node_kind()) {
    case formula::kind::tt:
        return formula::bottom();
    case formula::kind::ff:
        return formula::top();
    case formula::kind::atom: {
        const auto &c = f.constraint();
        switch (c.rel) {
        case relation::le: // not (t <= 0)  ==  -t < 0
            return formula::atom({-c.lhs, relation::lt});
        case relation::lt: // not (t < 0)  ==  -t <= 0
            return formula::atom({-c.lhs, relation::le});
        case relation::eq:
            return formula::disj(formula::atom({c.lhs, relation::lt}), formula::atom({-c.lhs, relation::lt}));
        case relation::ne:
            return formula::atom({c.lhs, relation::eq});
        }
        break;
    }
    case formula::kind::conj:
    case formula::kind::disj: {
        std::vector<formula> kids;
        for (auto &k : f.children())
            kids.push_back(negate(k));
        return f.node_kind() == formula::kind::conj ? formula::disj(std::move(kids))
                                                    : formula::conj(std::move(kids));
    }
    }
    return formula::top();
}

// Rewrites every `t != 0` leaf as `t < 0 ; -t < 0`.
inline formula eliminate_ne(const formula &f) {
    switch (f.node_kind()) {
    case formula::kind::atom:
        if (f.constraint().rel == relation::ne)
            return formula::disj(formula::atom({f.constraint().lhs, relation::lt}),
                                 formula::atom({-f.constraint().lhs, relation::lt}));
        return f;
    case formula::kind::conj:
    case formula::kind::disj: {
        std::vector<formula> kids;
        for (auto &k : f.children())
            kids.push_back(eliminate_ne(k));
        return f.node_kind() == formula::kind::conj ? formula::conj(std::move(kids))
                                                    : formula::disj(std::move(kids));
    }
    default:
        return f;
    }
}

inline bool is_negation_free(const formula &f) {
    if (f.node_kind() == formula::kind::atom)
        return f.constraint().rel != relation::ne;
    for (auto &k : f.children())
        if (!is_negation_free(k))
            return false;
    return true;
}

inline formula rename(const formula &f, const std::map<variable, variable> &m) {
    switch (f.node_kind()) {
    case formula::kind::atom:
        return formula::atom({f.constraint().lhs.rename(m), f.constraint().rel});
    case formula::kind::conj:
    case formula::kind::disj: {
        std::vector<formula> kids;
        for (auto &k : f.children())
            kids.push_back(rename(k, m));
        return f.node_kind() == formula::kind::conj ? formula::conj(std::move(kids))
                                                    : formula::disj(std::move(kids));
    }
    default:
        return f;
    }
}

inline void collect_variables(const formula &f, std::set<variable> &out) {
    if (f.node_kind() == formula::kind::atom) {
        for (auto &[v, c] : f.constraint().lhs.coefficients())
            out.insert(v);
        return;
    }
    for (auto &k : f.children())
        collect_variables(k, out);
}

inline std::set<variable> variables(const formula &f) {
    std::set<variable> out;
    collect_variables(f, out);
    return out;
}

// Three-valued evaluation under a possibly partial valuation.
inline std::optional<bool> evaluate(const formula &f, const valuation &val) {
    switch (f.node_kind()) {
    case formula::kind::tt:
        return true;
    case formula::kind::ff:
        return false;
    case formula::kind::atom:
        return f.constraint().evaluate(val);
    case formula::kind::conj: {
        bool unknown = false;
        for (auto &k : f.children()) {
            auto r = evaluate(k, val);
            if (!r)
                unknown = true;
            else if (!*r)
                return false;
        }
        return unknown ? std::nullopt : std::optional<bool>(true);
    }
    case formula::kind::disj: {
        bool unknown = false;
        for (auto &k : f.children()) {
            auto r = evaluate(k, val);
            if (!r)
                unknown = true;
            else if (*r)
                return true;
        }
        return unknown ? std::nullopt : std::optional<bool>(false);
    }
    }
    return std::nullopt;
}

} // namespace hornfb
