#pragma once

// Textual rendering in the same syntax the parser accepts.

#include "hornfb/core/system.hpp"

#include <sstream>
#include <string>

namespace hornfb {

namespace detail {

inline void print_linear_part(std::ostream &os, const std::map<variable, rational> &coeffs) {
    bool first = true;
    for (auto &[v, c] : coeffs) {
        rational mag = c < 0 ? rational(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1)
            os << to_string(mag) << "*";
        os << v;
        first = false;
    }
    if (first)
        os << "0";
}

} // namespace detail

inline std::string to_string(const lin_term &t) {
    std::ostringstream os;
    if (t.is_constant()) {
        os << to_string(t.constant());
        return os.str();
    }
    detail::print_linear_part(os, t.coefficients());
    if (t.constant() > 0)
        os << " + " << to_string(t.constant());
    else if (t.constant() < 0)
        os << " - " << to_string(rational(-t.constant()));
    return os.str();
}

inline std::string to_string(const lin_constraint &c) {
    std::ostringstream os;
    const auto &coeffs = c.lhs.coefficients();
    bool flip = (c.rel == relation::le || c.rel == relation::lt) && !coeffs.empty() &&
                coeffs.begin()->second < 0;
    if (flip) {
        lin_term neg = -c.lhs;
        detail::print_linear_part(os, neg.coefficients());
        os << (c.rel == relation::le ? " >= " : " > ") << to_string(rational(-neg.constant()));
        return os.str();
    }
    detail::print_linear_part(os, coeffs);
    switch (c.rel) {
    case relation::le:
        os << " <= ";
        break;
    case relation::lt:
        os << " < ";
        break;
    case relation::eq:
        os << " = ";
        break;
    case relation::ne:
        os << " != ";
        break;
    }
    os << to_string(rational(-c.lhs.constant()));
    return os.str();
}

inline std::string to_string(const formula &f) {
    switch (f.node_kind()) {
    case formula::kind::tt:
        return "true";
    case formula::kind::ff:
        return "false";
    case formula::kind::atom:
        return to_string(f.constraint());
    case formula::kind::conj:
    case formula::kind::disj: {
        bool is_conj = f.node_kind() == formula::kind::conj;
        std::string out;
        for (std::size_t i = 0; i < f.children().size(); ++i) {
            if (i > 0)
                out += is_conj ? ", " : " ; ";
            const auto &k = f.children()[i];
            bool wrap = k.node_kind() == formula::kind::conj || k.node_kind() == formula::kind::disj;
            out += wrap ? "(" + to_string(k) + ")" : to_string(k);
        }
        return out;
    }
    }
    return "true";
}

inline std::string to_string(const horn_system &sys, const pred_app &app) {
    std::string out = sys.decl(app.pred).name;
    if (app.args.empty())
        return out;
    out += "(";
    for (std::size_t i = 0; i < app.args.size(); ++i)
        out += (i ? ", " : "") + app.args[i];
    return out + ")";
}

inline std::string to_string(const horn_system &sys, const clause &c) {
    std::string out = to_string(sys, c.head);
    std::vector<std::string> items;
    for (auto &a : c.body)
        items.push_back(to_string(sys, a));
    if (c.constraint.node_kind() == formula::kind::conj) {
        for (auto &k : c.constraint.children())
            items.push_back(k.node_kind() == formula::kind::disj ? "(" + to_string(k) + ")" : to_string(k));
    } else if (!c.constraint.is_true() || items.empty()) {
        if (!c.constraint.is_true())
            items.push_back(to_string(c.constraint));
    }
    if (!items.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < items.size(); ++i)
            out += (i ? ", " : "") + items[i];
    }
    return out + ".";
}

inline std::string to_string(const horn_system &sys) {
    std::ostringstream os;
    if (sys.universe) {
        os << "universe {";
        for (std::size_t i = 0; i < sys.universe->size(); ++i)
            os << (i ? ", " : "") << to_string((*sys.universe)[i]);
        os << "}.\n";
    }
    for (auto &d : sys.decls)
        if (!d.is_false)
            os << "pred " << d.name << "/" << d.arity << ".\n";
    for (auto &c : sys.clauses)
        os << to_string(sys, c) << "\n";
    if (sys.goal) {
        for (auto &e : sys.goal->entries) {
            os << "goal " << to_string(sys, e.atom);
            if (!e.constraint.is_true())
                os << " : " << to_string(e.constraint);
            os << ".\n";
        }
    }
    return os.str();
}

} // namespace hornfb
