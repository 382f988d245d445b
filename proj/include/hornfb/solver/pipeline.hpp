#pragma once

// One analysis run in any of the supported modes, with its certificates.

#include "hornfb/qa/transform.hpp"

namespace hornfb {

enum class run_mode { fwd, alt, qa2, qa_iter };

inline const char *to_string(run_mode m) {
    switch (m) {
    case run_mode::fwd:
        return "fwd";
    case run_mode::alt:
        return "alt";
    case run_mode::qa2:
        return "qa2";
    case run_mode::qa_iter:
        return "qa-iter";
    }
    return "?";
}

inline std::optional<run_mode> parse_run_mode(std::string_view s) {
    for (auto m : {run_mode::fwd, run_mode::alt, run_mode::qa2, run_mode::qa_iter})
        if (s == to_string(m))
            return m;
    return std::nullopt;
}

struct run_certificates {
    bool sequence_laws = true;         // inclusion laws of the computed sequence
    bool model_check = true;   // refined model respects every clause
    bool goal_disjoint = true; // refined model misses every goal entry
    std::vector<std::string> failures;
};

struct run_report {
    run_mode mode = run_mode::alt;
    verdict status = verdict::unknown;
    std::size_t rounds = 0;
    std::optional<stop_reason> reason;
    std::vector<formula> model;
    std::vector<abstract_element> d, b;
    run_certificates certs;
    analysis_stats stats;
};

namespace detail {

inline void certify_model(const horn_system &sys, const goal_spec &goal, run_report &r, std::size_t cap) {
    auto bad = check_model(sys, r.model, cap);
    r.certs.model_check = bad.empty();
    for (auto &v : bad)
        r.certs.failures.push_back("model: " + describe(sys, v));
    auto hit = goal_overlaps(sys, goal, r.model, cap);
    r.certs.goal_disjoint = hit.empty();
    if (r.status == verdict::safe && !(r.certs.model_check && r.certs.goal_disjoint))
        throw certification_error("SAFE verdict without a certified model" +
                                  (r.certs.failures.empty() ? std::string() : ": " + r.certs.failures.front()));
}

inline void certify_sequence(const horn_system &sys, const goal_spec &goal, run_report &r, std::size_t cap) {
    auto chk = check_trace(sys, goal_element(sys, goal, cap), alternation_trace{r.d, r.b}, cap);
    r.certs.sequence_laws = chk.forward_laws && chk.goal_laws && chk.backward_laws;
    for (auto &f : chk.failures)
        r.certs.failures.push_back("sequence: " + f);
}

} // namespace detail

inline run_report run_analysis(const horn_system &sys, const goal_spec &goal, run_mode mode, analysis_config cfg) {
    run_report r;
    r.mode = mode;
    switch (mode) {
    case run_mode::fwd:
    case run_mode::alt: {
        if (mode == run_mode::fwd) {
            cfg.max_rounds = 1;
            cfg.start = analysis_config::direction::forward;
            cfg.coarse_first = false;
        }
        auto a = alternate(sys, goal, cfg);
        r.status = a.status;
        r.reason = a.reason;
        r.rounds = a.trace.rounds();
        r.d = a.trace.d;
        r.b = a.trace.b;
        r.stats = a.stats;
        r.model = refined_model(sys, a.trace);
        detail::certify_sequence(sys, goal, r, cfg.dnf_cap);
        break;
    }
    case run_mode::qa_iter: {
        auto q = qa_iterated(sys, goal, cfg);
        r.status = q.status;
        r.rounds = q.rounds;
        r.d = q.d;
        r.b = q.b;
        r.stats = q.stats;
        r.model = q.model;
        detail::certify_sequence(sys, goal, r, cfg.dnf_cap);
        break;
    }
    case run_mode::qa2: {
        auto q = qa_two_step(sys, goal, cfg);
        r.status = q.status;
        r.rounds = q.rounds;
        r.d = q.d;
        r.b = q.b;
        r.stats = q.stats;
        r.model = q.model;
        auto bad = certify_post(strengthen_heads(sys, q.d.front()), q.d.back(), abstract_element::top(sys), cfg.dnf_cap);
        r.certs.sequence_laws = bad.empty();
        break;
    }
    }
    detail::certify_model(sys, goal, r, cfg.dnf_cap);
    return r;
}

inline run_report run_analysis(const horn_system &sys, run_mode mode, const analysis_config &cfg = {}) {
    return run_analysis(sys, sys.effective_goal(), mode, cfg);
}

} // namespace hornfb
