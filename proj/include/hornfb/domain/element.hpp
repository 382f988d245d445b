#pragma once

/*
   Elements of the box domain: one box per predicate of a system, the
   falsity predicate included as a 0-ary box.
 */

#include "hornfb/domain/box.hpp"

#include <map>

namespace hornfb {

class abstract_element {
  public:
    abstract_element() = default;

    static abstract_element bottom(const horn_system &sys) { return filled(sys, false); }
    static abstract_element top(const horn_system &sys) { return filled(sys, true); }

    std::size_t size() const { return boxes_.size(); }
    const box &operator[](pred_id p) const { return boxes_.at(p); }
    void set(pred_id p, box b) {
        if (b.arity() != boxes_.at(p).arity())
            throw std::invalid_argument("abstract_element: arity mismatch");
        boxes_[p] = std::move(b);
    }

    bool is_bottom() const {
        for (auto &b : boxes_)
            if (!b.is_empty())
                return false;
        return true;
    }

    friend bool operator==(const abstract_element &, const abstract_element &) = default;

    friend bool leq(const abstract_element &a, const abstract_element &b) {
        check_size(a, b);
        for (std::size_t p = 0; p < a.size(); ++p)
            if (!leq(a.boxes_[p], b.boxes_[p]))
                return false;
        return true;
    }

    friend abstract_element join(const abstract_element &a, const abstract_element &b) {
        return pointwise(a, b, [](const box &x, const box &y) { return join(x, y); });
    }
    friend abstract_element meet(const abstract_element &a, const abstract_element &b) {
        return pointwise(a, b, [](const box &x, const box &y) { return meet(x, y); });
    }
    friend abstract_element widen(const abstract_element &a, const abstract_element &b) {
        return pointwise(a, b, [](const box &x, const box &y) { return widen(x, y); });
    }

    bool gamma_contains(pred_id p, const std::vector<rational> &args) const { return boxes_.at(p).contains(args); }

    // Per-predicate formula over positional variables A1..An.
    std::vector<formula> to_formulas() const {
        std::vector<formula> out;
        for (auto &b : boxes_)
            out.push_back(b.to_formula());
        return out;
    }

  private:
    static abstract_element filled(const horn_system &sys, bool is_top) {
        abstract_element e;
        for (auto &d : sys.decls)
            e.boxes_.push_back(is_top ? box::top(d.arity) : box::bottom(d.arity));
        return e;
    }

    static void check_size(const abstract_element &a, const abstract_element &b) {
        if (a.size() != b.size())
            throw std::invalid_argument("abstract_element: predicate count mismatch");
    }

    template <class F> static abstract_element pointwise(const abstract_element &a, const abstract_element &b, F f) {
        check_size(a, b);
        abstract_element out;
        for (std::size_t p = 0; p < a.size(); ++p)
            out.boxes_.push_back(f(a.boxes_[p], b.boxes_[p]));
        return out;
    }

    std::vector<box> boxes_;
};

// Predicate name -> box digest, for reports and traces.
inline std::map<std::string, std::string> digest(const horn_system &sys, const abstract_element &e) {
    std::map<std::string, std::string> out;
    for (pred_id p = 0; p < e.size(); ++p)
        out[sys.decl(p).name] = to_string(e[p]);
    return out;
}

} // namespace hornfb
