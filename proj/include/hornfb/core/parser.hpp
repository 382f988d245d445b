#pragma once

/*
   Recursive-descent parser for the textual CHC format.

     decl      ::= "pred" IDENT "/" NAT "."
     universe  ::= "universe" "{" RAT ("," RAT)* "}" "."
     clause    ::= head ":-" bodyitem ("," bodyitem)* "." | head "."
     head      ::= IDENT "(" args ")" | IDENT | "false"
     bodyitem  ::= predapp | cform
     cform     ::= prim (";" prim)*
     prim      ::= comparison | "true" | "false" | "(" cform ("," cform)* ")"
     goal      ::= "goal" predapp (":" cform ("," cform)*)? "."
     model     ::= "model" IDENT ("(" VAR ("," VAR)* ")")? ":" cform ("," cform)* "."

   ";" binds tighter than ",". Model lines are only accepted by
   parse_model_file.
 */

#include "hornfb/core/lexer.hpp"
#include "hornfb/core/normalize.hpp"
#include "hornfb/core/printer.hpp"

#include <algorithm>

namespace hornfb {

namespace detail {

class parser {
  public:
    explicit parser(std::string_view src) : toks_(tokenize(src)) {}

    const token &peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool at_end() const { return peek().kind == token_kind::end; }

    const token &next() {
        const token &t = toks_[pos_];
        if (t.kind != token_kind::end)
            ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string &msg, const token &t) const {
        std::string found = t.kind == token_kind::end ? "end of input" : "'" + t.text + "'";
        throw parse_error(msg + " (found " + found + ")", t.line, t.column);
    }

    void expect_punct(std::string_view p) {
        if (!peek().is_punct(p))
            fail("expected '" + std::string(p) + "'", peek());
        next();
    }

    bool accept_punct(std::string_view p) {
        if (peek().is_punct(p)) {
            next();
            return true;
        }
        return false;
    }

    // ---- linear terms ----

    lin_term parse_sum() {
        lin_term acc;
        bool negate_first = false;
        if (peek().is_punct("-")) {
            next();
            negate_first = true;
        } else if (peek().is_punct("+")) {
            next();
        }
        acc = parse_product();
        if (negate_first)
            acc = -acc;
        for (;;) {
            if (accept_punct("+"))
                acc += parse_product();
            else if (accept_punct("-"))
                acc -= parse_product();
            else
                return acc;
        }
    }

    lin_term parse_product() {
        lin_term acc = parse_unary();
        for (;;) {
            const token &op = peek();
            if (accept_punct("*")) {
                lin_term rhs = parse_unary();
                if (acc.is_constant())
                    acc = rhs * acc.constant();
                else if (rhs.is_constant())
                    acc *= rhs.constant();
                else
                    throw parse_error("non-linear term (product of variables)", op.line, op.column);
            } else if (accept_punct("/")) {
                lin_term rhs = parse_unary();
                if (!rhs.is_constant())
                    throw parse_error("non-linear term (division by a variable)", op.line, op.column);
                if (rhs.constant() == 0)
                    throw parse_error("division by zero", op.line, op.column);
                acc *= rational(1) / rhs.constant();
            } else {
                return acc;
            }
        }
    }

    lin_term parse_unary() {
        if (accept_punct("-"))
            return -parse_unary();
        const token &t = peek();
        if (t.kind == token_kind::number) {
            next();
            return lin_term(parse_rational(t.text));
        }
        if (t.kind == token_kind::var) {
            next();
            return lin_term::var(t.text);
        }
        if (accept_punct("(")) {
            lin_term inner = parse_sum();
            expect_punct(")");
            return inner;
        }
        fail("expected a term", t);
    }

    // ---- constraint formulas ----

    formula parse_comparison() {
        lin_term lhs = parse_sum();
        const token &op = peek();
        relation rel;
        bool swap = false;
        if (op.is_punct("<="))
            rel = relation::le;
        else if (op.is_punct("<"))
            rel = relation::lt;
        else if (op.is_punct(">=")) {
            rel = relation::le;
            swap = true;
        } else if (op.is_punct(">")) {
            rel = relation::lt;
            swap = true;
        } else if (op.is_punct("="))
            rel = relation::eq;
        else if (op.is_punct("!="))
            rel = relation::ne;
        else
            fail("expected a comparison operator", op);
        next();
        lin_term rhs = parse_sum();
        return swap ? formula::atom(lin_constraint::make(rhs, rel, lhs))
                    : formula::atom(lin_constraint::make(lhs, rel, rhs));
    }

    formula parse_prim() {
        const token &t = peek();
        if (t.is(token_kind::ident, "true")) {
            next();
            return formula::top();
        }
        if (t.is(token_kind::ident, "false")) {
            next();
            return formula::bottom();
        }
        if (t.is_punct("(")) {
            std::size_t save = pos_;
            try {
                next();
                formula f = parse_conj();
                expect_punct(")");
                // "(X) <= 1" style: the parenthesis belonged to a term.
                if (is_relop(peek()) || is_arith(peek()))
                    throw parse_error("not a parenthesized formula");
                return f;
            } catch (const parse_error &) {
                pos_ = save;
            }
        }
        return parse_comparison();
    }

    static bool is_relop(const token &t) {
        return t.is_punct("<=") || t.is_punct("<") || t.is_punct(">=") || t.is_punct(">") ||
               t.is_punct("=") || t.is_punct("!=");
    }
    static bool is_arith(const token &t) {
        return t.is_punct("+") || t.is_punct("-") || t.is_punct("*") || t.is_punct("/");
    }

    formula parse_disj() {
        std::vector<formula> kids{parse_prim()};
        while (accept_punct(";"))
            kids.push_back(parse_prim());
        return formula::disj(std::move(kids));
    }

    formula parse_conj() {
        std::vector<formula> kids{parse_disj()};
        while (accept_punct(","))
            kids.push_back(parse_disj());
        return formula::conj(std::move(kids));
    }

    // ---- predicate applications ----

    raw_pred_app parse_app() {
        const token &name = peek();
        if (name.kind != token_kind::ident)
            fail("expected a predicate name", name);
        next();
        raw_pred_app app{name.text, {}, name.line, name.column};
        if (accept_punct("(")) {
            if (!accept_punct(")")) {
                app.args.push_back(parse_sum());
                while (accept_punct(","))
                    app.args.push_back(parse_sum());
                expect_punct(")");
            }
        }
        return app;
    }

    bool starts_app() const {
        const token &t = peek();
        return t.kind == token_kind::ident && t.text != "true" && t.text != "false";
    }

    raw_clause parse_clause() {
        raw_clause rc;
        const token &h = peek();
        if (h.is(token_kind::ident, "false")) {
            next();
            if (peek().is_punct("("))
                fail("the falsity predicate takes no arguments", peek());
        } else {
            rc.head = parse_app();
        }
        std::vector<formula> conjuncts;
        if (accept_punct(":-")) {
            do {
                if (peek().is(token_kind::ident, "false") && peek(1).is_punct("("))
                    throw parse_error("falsity predicate in clause body", peek().line, peek().column);
                if (starts_app())
                    rc.body.push_back(parse_app());
                else
                    conjuncts.push_back(parse_disj());
            } while (accept_punct(","));
        }
        expect_punct(".");
        rc.constraint = formula::conj(std::move(conjuncts));
        return rc;
    }

    std::size_t position() const { return pos_; }

  private:
    std::vector<token> toks_;
    std::size_t pos_ = 0;
};

inline bool is_reserved(const std::string &name) {
    return name == "pred" || name == "universe" || name == "goal" || name == "model" || name == "true" ||
           name == "false";
}

} // namespace detail

// Parses and normalizes a whole system. Declarations may appear anywhere in the file.
inline horn_system parse_system(std::string_view text) {
    detail::parser p(text);
    horn_system sys;
    struct pending_goal {
        raw_pred_app app;
        formula constraint;
    };
    std::vector<raw_clause> raw_clauses;
    std::vector<pending_goal> goals;

    while (!p.at_end()) {
        const token &t = p.peek();
        if (t.is(token_kind::ident, "pred")) {
            p.next();
            const token &name = p.peek();
            if (name.kind != token_kind::ident || detail::is_reserved(name.text))
                p.fail("expected a predicate name", name);
            p.next();
            p.expect_punct("/");
            const token &n = p.peek();
            if (n.kind != token_kind::number || n.text.find_first_not_of("0123456789") != std::string::npos)
                p.fail("expected a non-negative arity", n);
            p.next();
            p.expect_punct(".");
            if (sys.find(name.text))
                throw parse_error("predicate '" + name.text + "' declared twice", name.line, name.column);
            sys.add_pred(name.text, std::stoul(n.text));
        } else if (t.is(token_kind::ident, "universe")) {
            p.next();
            if (sys.universe)
                throw parse_error("universe declared twice", t.line, t.column);
            p.expect_punct("{");
            std::vector<rational> values;
            do {
                bool neg = p.accept_punct("-");
                const token &v = p.peek();
                if (v.kind != token_kind::number)
                    p.fail("expected a rational constant", v);
                p.next();
                rational r = parse_rational(v.text);
                values.push_back(neg ? rational(-r) : r);
            } while (p.accept_punct(","));
            p.expect_punct("}");
            p.expect_punct(".");
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            sys.universe = std::move(values);
        } else if (t.is(token_kind::ident, "goal")) {
            p.next();
            pending_goal g;
            if (p.peek().is(token_kind::ident, "false")) {
                const token &f = p.next();
                g.app = raw_pred_app{horn_system::falsity_name, {}, f.line, f.column};
            } else {
                g.app = p.parse_app();
            }
            g.constraint = p.accept_punct(":") ? p.parse_conj() : formula::top();
            p.expect_punct(".");
            goals.push_back(std::move(g));
        } else if (t.is(token_kind::ident, "model")) {
            p.fail("model lines are only allowed in model files", t);
        } else if (t.kind == token_kind::ident) {
            raw_clauses.push_back(p.parse_clause());
        } else {
            p.fail("expected a declaration, clause or goal", t);
        }
    }

    for (auto &rc : raw_clauses)
        sys.clauses.push_back(normalize_clause(rc, sys));
    if (!goals.empty()) {
        goal_spec spec;
        for (auto &g : goals)
            spec.entries.push_back(normalize_goal(g.app, g.constraint, sys));
        sys.goal = std::move(spec);
    }
    return sys;
}

// A standalone constraint formula, e.g. "X >= 0, (Y < 1 ; Y > 2)".
inline formula parse_formula(std::string_view text) {
    detail::parser p(text);
    formula f = p.parse_conj();
    if (!p.at_end())
        p.fail("trailing input after formula", p.peek());
    return f;
}

// Per-predicate formulas over positional variables A1..An, one
// `model p : cform .` line per predicate. Unlisted predicates map to false.
inline std::vector<formula> parse_model_file(std::string_view text, const horn_system &sys) {
    detail::parser p(text);
    std::vector<formula> model(sys.num_preds(), formula::bottom());
    std::vector<bool> given(sys.num_preds(), false);
    while (!p.at_end()) {
        const token &kw = p.peek();
        if (!kw.is(token_kind::ident, "model"))
            p.fail("expected 'model'", kw);
        p.next();
        const token &name = p.peek();
        if (name.kind != token_kind::ident)
            p.fail("expected a predicate name", name);
        p.next();
        auto id = sys.find(name.text);
        if (!id)
            throw parse_error("unknown predicate '" + name.text + "'", name.line, name.column);
        if (given[*id])
            throw parse_error("predicate '" + name.text + "' given twice", name.line, name.column);
        given[*id] = true;
        std::size_t arity = sys.decl(*id).arity;
        std::vector<variable> params = positional_vars(arity);
        if (p.accept_punct("(")) {
            params.clear();
            if (!p.accept_punct(")")) {
                do {
                    const token &v = p.peek();
                    if (v.kind != token_kind::var)
                        p.fail("expected a variable", v);
                    p.next();
                    params.push_back(v.text);
                } while (p.accept_punct(","));
                p.expect_punct(")");
            }
            if (params.size() != arity)
                throw parse_error("predicate '" + name.text + "' has arity " + std::to_string(arity), name.line,
                                  name.column);
            if (std::set<variable>(params.begin(), params.end()).size() != params.size())
                throw parse_error("repeated model parameter", name.line, name.column);
        }
        p.expect_punct(":");
        formula f = eliminate_ne(p.parse_conj());
        p.expect_punct(".");
        std::map<variable, variable> to_positional;
        for (std::size_t i = 0; i < params.size(); ++i)
            to_positional.emplace(params[i], positional_var(i));
        for (auto &v : variables(f))
            if (!to_positional.count(v))
                throw parse_error("model formula for '" + name.text + "' mentions unknown variable '" + v + "'",
                                  name.line, name.column);
        model[*id] = rename(f, to_positional);
    }
    return model;
}

inline std::string model_file_text(const horn_system &sys, const std::vector<formula> &model) {
    std::string out;
    for (pred_id p = 0; p < sys.num_preds(); ++p)
        out += "model " + sys.decl(p).name + " : " + to_string(model.at(p)) + ".\n";
    return out;
}

} // namespace hornfb
