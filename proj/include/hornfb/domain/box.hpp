#pragma once

/*
   Intervals with exact rational, possibly strict, possibly infinite bounds,
   and boxes (one interval per predicate argument). A box of arity zero is
   a two-point lattice: empty (unreached) or not (reached).
 */

#include "hornfb/core/formula.hpp"
#include "hornfb/core/system.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hornfb {

// An infinite bound is always open; `value` is ignored when infinite.
struct bound {
    bool infinite = true;
    rational value;
    bool strict = true;

    static bound inf() { return {}; }
    static bound closed(rational v) { return {false, std::move(v), false}; }
    static bound open(rational v) { return {false, std::move(v), true}; }

    friend bool operator==(const bound &a, const bound &b) {
        if (a.infinite || b.infinite)
            return a.infinite == b.infinite;
        return a.value == b.value && a.strict == b.strict;
    }
};

namespace detail {

// -1 if lower bound a admits strictly more values than b, 0 if equal, 1 otherwise.
inline int compare_lower(const bound &a, const bound &b) {
    if (a.infinite || b.infinite)
        return a.infinite == b.infinite ? 0 : (a.infinite ? -1 : 1);
    if (a.value != b.value)
        return a.value < b.value ? -1 : 1;
    if (a.strict == b.strict)
        return 0;
    return a.strict ? 1 : -1;
}

// 1 if upper bound a admits strictly more values than b, 0 if equal, -1 otherwise.
inline int compare_upper(const bound &a, const bound &b) {
    if (a.infinite || b.infinite)
        return a.infinite == b.infinite ? 0 : (a.infinite ? 1 : -1);
    if (a.value != b.value)
        return a.value < b.value ? -1 : 1;
    if (a.strict == b.strict)
        return 0;
    return a.strict ? -1 : 1;
}

} // namespace detail

struct interval {
    bound lo, hi;

    static interval top() { return {}; }
    static interval point(const rational &v) { return {bound::closed(v), bound::closed(v)}; }

    bool is_empty() const {
        if (lo.infinite || hi.infinite)
            return false;
        if (lo.value != hi.value)
            return lo.value > hi.value;
        return lo.strict || hi.strict;
    }

    bool contains(const rational &v) const {
        if (!lo.infinite && (lo.strict ? !(v > lo.value) : !(v >= lo.value)))
            return false;
        if (!hi.infinite && (hi.strict ? !(v < hi.value) : !(v <= hi.value)))
            return false;
        return true;
    }

    bool is_top() const { return lo.infinite && hi.infinite; }

    friend bool operator==(const interval &a, const interval &b) { return a.lo == b.lo && a.hi == b.hi; }
};

class box {
  public:
    box() = default;

    static box top(std::size_t arity) { return box(arity, false); }
    static box bottom(std::size_t arity) { return box(arity, true); }

    static box from_intervals(std::vector<interval> dims) {
        box b(dims.size(), false);
        b.dims_ = std::move(dims);
        b.canonicalize();
        return b;
    }

    std::size_t arity() const { return arity_; }
    bool is_empty() const { return empty_; }
    bool is_top() const {
        if (empty_)
            return false;
        for (auto &d : dims_)
            if (!d.is_top())
                return false;
        return true;
    }

    // Only meaningful on a non-empty box.
    const interval &operator[](std::size_t i) const { return dims_.at(i); }
    const std::vector<interval> &intervals() const { return dims_; }

    bool contains(const std::vector<rational> &point) const {
        if (empty_ || point.size() != arity_)
            return false;
        for (std::size_t i = 0; i < arity_; ++i)
            if (!dims_[i].contains(point[i]))
                return false;
        return true;
    }

    friend bool operator==(const box &a, const box &b) {
        if (a.arity_ != b.arity_ || a.empty_ != b.empty_)
            return false;
        return a.empty_ || a.dims_ == b.dims_;
    }

    friend bool leq(const box &a, const box &b) {
        check_arity(a, b);
        if (a.empty_)
            return true;
        if (b.empty_)
            return false;
        for (std::size_t i = 0; i < a.arity_; ++i) {
            if (detail::compare_lower(a.dims_[i].lo, b.dims_[i].lo) < 0)
                return false;
            if (detail::compare_upper(a.dims_[i].hi, b.dims_[i].hi) > 0)
                return false;
        }
        return true;
    }

    friend box join(const box &a, const box &b) {
        check_arity(a, b);
        if (a.empty_)
            return b;
        if (b.empty_)
            return a;
        box out = a;
        for (std::size_t i = 0; i < a.arity_; ++i) {
            if (detail::compare_lower(b.dims_[i].lo, a.dims_[i].lo) < 0)
                out.dims_[i].lo = b.dims_[i].lo;
            if (detail::compare_upper(b.dims_[i].hi, a.dims_[i].hi) > 0)
                out.dims_[i].hi = b.dims_[i].hi;
        }
        return out;
    }

    friend box meet(const box &a, const box &b) {
        check_arity(a, b);
        if (a.empty_)
            return a;
        if (b.empty_)
            return b;
        box out = a;
        for (std::size_t i = 0; i < a.arity_; ++i) {
            if (detail::compare_lower(b.dims_[i].lo, a.dims_[i].lo) > 0)
                out.dims_[i].lo = b.dims_[i].lo;
            if (detail::compare_upper(b.dims_[i].hi, a.dims_[i].hi) < 0)
                out.dims_[i].hi = b.dims_[i].hi;
        }
        out.canonicalize();
        return out;
    }

    // Bounds of `b` that are not within those of `a` jump to infinity.
    friend box widen(const box &a, const box &b) {
        check_arity(a, b);
        if (a.empty_)
            return b;
        if (b.empty_)
            return a;
        box out = a;
        for (std::size_t i = 0; i < a.arity_; ++i) {
            if (detail::compare_lower(b.dims_[i].lo, a.dims_[i].lo) < 0)
                out.dims_[i].lo = bound::inf();
            if (detail::compare_upper(b.dims_[i].hi, a.dims_[i].hi) > 0)
                out.dims_[i].hi = bound::inf();
        }
        return out;
    }

    // Conjunction of bound constraints over `vars` (one per argument).
    formula to_formula(const std::vector<variable> &vars) const {
        if (empty_)
            return formula::bottom();
        std::vector<formula> parts;
        for (std::size_t i = 0; i < arity_; ++i) {
            auto x = lin_term::var(vars.at(i));
            const auto &d = dims_[i];
            if (!d.lo.infinite) {
                auto c = lin_term(d.lo.value);
                parts.push_back(formula::atom(d.lo.strict ? lin_constraint::lt(c, x) : lin_constraint::le(c, x)));
            }
            if (!d.hi.infinite) {
                auto c = lin_term(d.hi.value);
                parts.push_back(formula::atom(d.hi.strict ? lin_constraint::lt(x, c) : lin_constraint::le(x, c)));
            }
        }
        return formula::conj(std::move(parts));
    }

    formula to_formula() const { return to_formula(positional_vars(arity_)); }

  private:
    box(std::size_t arity, bool empty) : arity_(arity), empty_(empty), dims_(empty ? 0 : arity) {}

    static void check_arity(const box &a, const box &b) {
        if (a.arity_ != b.arity_)
            throw std::invalid_argument("box arity mismatch");
    }

    void canonicalize() {
        for (auto &d : dims_) {
            if (d.lo.infinite)
                d.lo = bound::inf();
            if (d.hi.infinite)
                d.hi = bound::inf();
            if (d.is_empty()) {
                empty_ = true;
                dims_.clear();
                return;
            }
        }
    }

    std::size_t arity_ = 0;
    bool empty_ = true;
    std::vector<interval> dims_;
};

inline std::string to_string(const interval &d) {
    std::string out = d.lo.infinite ? "(-oo" : (d.lo.strict ? "(" : "[") + to_string(d.lo.value);
    out += ",";
    out += d.hi.infinite ? "+oo)" : to_string(d.hi.value) + (d.hi.strict ? ")" : "]");
    return out;
}

// Compact text such as "[0,+oo) x (-oo,5]"; "empty" / "reached" for degenerate boxes.
inline std::string to_string(const box &b) {
    if (b.is_empty())
        return "empty";
    if (b.arity() == 0)
        return "reached";
    std::string out;
    for (std::size_t i = 0; i < b.arity(); ++i)
        out += (i ? " x " : "") + to_string(b[i]);
    return out;
}

} // namespace hornfb
