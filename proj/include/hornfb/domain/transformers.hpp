#pragma once

/*
   Best box transformers for a single clause: the constraint is put in DNF,
   each cube is conjoined with the relevant argument boxes and projected
   exactly onto the target arguments, and the per-cube boxes are joined.
 */

#include "hornfb/domain/element.hpp"
#include "hornfb/linear/fourier_motzkin.hpp"

namespace hornfb {

namespace detail {

inline void append_box(cube &c, const box &b, const std::vector<variable> &args) {
    for (std::size_t i = 0; i < b.arity(); ++i) {
        const auto &d = b[i];
        auto x = lin_term::var(args[i]);
        if (!d.lo.infinite)
            c.constraints.push_back(d.lo.strict ? lin_constraint::lt(lin_term(d.lo.value), x)
                                                : lin_constraint::le(lin_term(d.lo.value), x));
        if (!d.hi.infinite)
            c.constraints.push_back(d.hi.strict ? lin_constraint::lt(x, lin_term(d.hi.value))
                                                : lin_constraint::le(x, lin_term(d.hi.value)));
    }
}

inline box project_cubes(const dnf &phi, const std::vector<std::pair<const box *, const pred_app *>> &context,
                         const std::vector<variable> &target) {
    box out = box::bottom(target.size());
    for (auto &c : phi.cubes) {
        cube k = c;
        for (auto &[b, app] : context)
            append_box(k, *b, app->args);
        out = join(out, project_to_box(k, target));
    }
    return out;
}

} // namespace detail

// Tightest box for the head arguments given body boxes from `d`.
inline box clause_post(const clause &c, const dnf &phi, const abstract_element &d) {
    std::size_t arity = c.head.args.size();
    std::vector<std::pair<const box *, const pred_app *>> context;
    for (auto &a : c.body) {
        if (d[a.pred].is_empty())
            return box::bottom(arity);
        context.emplace_back(&d[a.pred], &a);
    }
    return detail::project_cubes(phi, context, c.head.args);
}

inline box clause_post(const clause &c, const abstract_element &d, std::size_t cap = default_dnf_cap) {
    return clause_post(c, to_dnf(c.constraint, cap), d);
}

// Tightest box for the arguments of body position `j`, with every body box
// drawn from `restriction` and the head box from `b`.
inline box clause_pre_restricted(const clause &c, const dnf &phi, std::size_t j, const abstract_element &restriction,
                                 const abstract_element &b) {
    std::size_t arity = c.body.at(j).args.size();
    if (b[c.head.pred].is_empty())
        return box::bottom(arity);
    std::vector<std::pair<const box *, const pred_app *>> context{{&b[c.head.pred], &c.head}};
    for (auto &a : c.body) {
        if (restriction[a.pred].is_empty())
            return box::bottom(arity);
        context.emplace_back(&restriction[a.pred], &a);
    }
    return detail::project_cubes(phi, context, c.body[j].args);
}

inline box clause_pre_restricted(const clause &c, std::size_t j, const abstract_element &restriction,
                                 const abstract_element &b, std::size_t cap = default_dnf_cap) {
    return clause_pre_restricted(c, to_dnf(c.constraint, cap), j, restriction, b);
}

} // namespace hornfb
