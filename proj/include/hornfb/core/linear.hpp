#pragma once

/*
   Linear terms and atomic constraints over rational variables.

   A constraint is kept in the canonical shape `lhs rel 0`; comparisons
   written with a right-hand side are folded into the constant.
 */

#include "hornfb/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace hornfb {

using variable = std::string;
using valuation = std::map<variable, rational>;

class lin_term {
  public:
    lin_term() = default;
    explicit lin_term(rational constant) : constant_(std::move(constant)) {}

    static lin_term var(const variable &v, const rational &coeff = rational(1)) {
        lin_term t;
        t.add(v, coeff);
        return t;
    }

    const std::map<variable, rational> &coefficients() const { return coeffs_; }
    const rational &constant() const { return constant_; }

    rational coefficient(const variable &v) const {
        auto it = coeffs_.find(v);
        return it == coeffs_.end() ? rational(0) : it->second;
    }

    bool is_constant() const { return coeffs_.empty(); }

    // Single variable with coefficient one and no constant.
    std::optional<variable> as_variable() const {
        if (coeffs_.size() == 1 && constant_ == 0 && coeffs_.begin()->second == 1)
            return coeffs_.begin()->first;
        return std::nullopt;
    }

    std::set<variable> variables() const {
        std::set<variable> vs;
        for (auto &[v, c] : coeffs_)
            vs.insert(v);
        return vs;
    }

    void add(const variable &v, const rational &coeff) {
        if (coeff == 0)
            return;
        auto [it, inserted] = coeffs_.emplace(v, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                coeffs_.erase(it);
        }
    }

    lin_term &operator+=(const lin_term &o) {
        for (auto &[v, c] : o.coeffs_)
            add(v, c);
        constant_ += o.constant_;
        return *this;
    }

    lin_term &operator-=(const lin_term &o) {
        for (auto &[v, c] : o.coeffs_)
            add(v, -c);
        constant_ -= o.constant_;
        return *this;
    }

    lin_term &operator*=(const rational &k) {
        if (k == 0) {
            coeffs_.clear();
            constant_ = 0;
            return *this;
        }
        for (auto &[v, c] : coeffs_)
            c *= k;
        constant_ *= k;
        return *this;
    }

    friend lin_term operator+(lin_term a, const lin_term &b) { return a += b; }
    friend lin_term operator-(lin_term a, const lin_term &b) { return a -= b; }
    friend lin_term operator*(lin_term a, const rational &k) { return a *= k; }
    friend lin_term operator*(const rational &k, lin_term a) { return a *= k; }
    friend lin_term operator-(lin_term a) { return a *= rational(-1); }

    friend bool operator==(const lin_term &a, const lin_term &b) {
        return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
    }

    // Replace `v` by `replacement`.
    lin_term substitute(const variable &v, const lin_term &replacement) const {
        auto it = coeffs_.find(v);
        if (it == coeffs_.end())
            return *this;
        lin_term out = *this;
        rational c = it->second;
        out.coeffs_.erase(v);
        out += replacement * c;
        return out;
    }

    // Simultaneous renaming; variables absent from the map are kept.
    lin_term rename(const std::map<variable, variable> &m) const {
        lin_term out(constant_);
        for (auto &[v, c] : coeffs_) {
            auto it = m.find(v);
            out.add(it == m.end() ? v : it->second, c);
        }
        return out;
    }

    // nullopt if some variable is unassigned.
    std::optional<rational> evaluate(const valuation &val) const {
        rational r = constant_;
        for (auto &[v, c] : coeffs_) {
            auto it = val.find(v);
            if (it == val.end())
                return std::nullopt;
            r += c * it->second;
        }
        return r;
    }

  private:
    std::map<variable, rational> coeffs_; // never stores zero coefficients
    rational constant_;
};

// `ne` only appears in surface syntax; normalized formulas never contain it.
enum class relation { le, lt, eq, ne };

struct lin_constraint {
    lin_term lhs;
    relation rel = relation::le;

    // Build `a rel b` as `a - b rel 0`.
    static lin_constraint make(const lin_term &a, relation rel, const lin_term &b) {
        return {a - b, rel};
    }
    static lin_constraint le(const lin_term &a, const lin_term &b) { return make(a, relation::le, b); }
    static lin_constraint lt(const lin_term &a, const lin_term &b) { return make(a, relation::lt, b); }
    static lin_constraint eq(const lin_term &a, const lin_term &b) { return make(a, relation::eq, b); }

    // The canonical unsatisfiable ground constraint `1 <= 0`.
    static lin_constraint contradiction() { return {lin_term(rational(1)), relation::le}; }

    bool is_ground() const { return lhs.is_constant(); }

    static bool holds(const rational &value, relation rel) {
        switch (rel) {
        case relation::le:
            return value <= 0;
        case relation::lt:
            return value < 0;
        case relation::eq:
            return value == 0;
        case relation::ne:
            return value != 0;
        }
        return false;
    }

    std::optional<bool> evaluate(const valuation &val) const {
        auto v = lhs.evaluate(val);
        if (!v)
            return std::nullopt;
        return holds(*v, rel);
    }

    friend bool operator==(const lin_constraint &a, const lin_constraint &b) {
        return a.rel == b.rel && a.lhs == b.lhs;
    }
    friend bool operator<(const lin_constraint &a, const lin_constraint &b);
};

inline bool operator<(const lin_constraint &a, const lin_constraint &b) {
    if (a.rel != b.rel)
        return a.rel < b.rel;
    if (a.lhs.coefficients() != b.lhs.coefficients())
        return a.lhs.coefficients() < b.lhs.coefficients();
    return a.lhs.constant() < b.lhs.constant();
}

} // namespace hornfb
