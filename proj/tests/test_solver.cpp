#include "test_util.hpp"

#include "hornfb/concrete/semantics.hpp"
#include "hornfb/gen/random_system.hpp"
#include "hornfb/solver/pipeline.hpp"

#include <gtest/gtest.h>

using namespace hornfb;

namespace {

horn_system corpus(const std::string &name) { return parse_system(testing_util::read_corpus(name)); }

interval iv(std::optional<int> lo, bool lo_strict, std::optional<int> hi, bool hi_strict) {
    interval out;
    if (lo)
        out.lo = lo_strict ? bound::open(*lo) : bound::closed(*lo);
    if (hi)
        out.hi = hi_strict ? bound::open(*hi) : bound::closed(*hi);
    return out;
}

gen::options random_options(unsigned seed) {
    gen::options opt;
    opt.explicit_goal = seed % 3 == 0;
    return opt;
}

} // namespace

TEST(Solver, DefaultConfiguration) {
    analysis_config cfg;
    EXPECT_EQ(cfg.max_rounds, 5u);
    EXPECT_EQ(cfg.start, analysis_config::direction::forward);
    EXPECT_FALSE(cfg.coarse_first);
    cfg.max_rounds = 0;
    EXPECT_THROW(alternate(corpus("lockstep.chc"), cfg), std::invalid_argument);
}

TEST(Solver, ForwardAnalysisOfLockstep) {
    auto sys = corpus("lockstep.chc");
    auto d = analyze_forward(sys, abstract_element::top(sys));
    pred_id p = *sys.find("p");
    auto nonneg = iv(0, false, std::nullopt, false);
    EXPECT_EQ(d[p], box::from_intervals({nonneg, nonneg}));
    EXPECT_EQ(d[horn_system::falsity], box::top(0));
}

TEST(Solver, AdditionLoopsNeedAlternation) {
    auto sys = corpus("addition_loops.chc");
    analysis_config fwd;
    fwd.max_rounds = 1;
    EXPECT_EQ(alternate(sys, fwd).status, verdict::unknown);

    auto res = alternate(sys);
    EXPECT_EQ(res.status, verdict::safe);
    EXPECT_EQ(res.reason, stop_reason::goal_unreachable);
    EXPECT_EQ(res.trace.rounds(), 2u);
    pred_id l1 = *sys.find("l1"), l2 = *sys.find("l2");
    auto q4 = box::from_intervals({iv(0, true, std::nullopt, false), iv(std::nullopt, false, 0, true)});
    const auto &b1 = res.trace.b.at(1);
    EXPECT_EQ(b1[l1], q4);
    EXPECT_EQ(b1[l2], q4);
    EXPECT_TRUE(res.trace.d.at(1).is_bottom());
    EXPECT_TRUE(check_trace(sys, res.goal, res.trace).ok());
    auto model = refined_model(sys, res.trace);
    EXPECT_TRUE(check_model(sys, model).empty());
    EXPECT_TRUE(goal_overlaps(sys, sys.effective_goal(), model).empty());
}

TEST(Solver, UnreachableGoalIsSafeInRoundOne) {
    auto res = alternate(corpus("empty.chc"));
    EXPECT_EQ(res.status, verdict::safe);
    EXPECT_EQ(res.trace.rounds(), 1u);
    EXPECT_EQ(res.trace.b.size(), 1u);
}

TEST(Solver, StabilizationStopsEarly) {
    auto res = alternate(corpus("lockstep.chc"));
    EXPECT_EQ(res.status, verdict::unknown);
    EXPECT_EQ(res.reason, stop_reason::stabilized);
    EXPECT_EQ(res.trace.rounds(), 2u);
}

TEST(Solver, RoundLimitIsHonored) {
    auto sys = corpus("addition_loops.chc");
    analysis_config cfg;
    cfg.max_rounds = 1;
    auto res = alternate(sys, cfg);
    EXPECT_EQ(res.reason, stop_reason::round_limit);
    EXPECT_EQ(res.trace.rounds(), 1u);
    EXPECT_EQ(res.trace.b.size(), 1u);
}

TEST(Solver, StartDirections) {
    auto sys = corpus("addition_loops.chc");
    analysis_config bwd;
    bwd.start = analysis_config::direction::backward;
    auto r1 = alternate(sys, bwd);
    EXPECT_EQ(r1.trace.d.front(), abstract_element::top(sys));
    EXPECT_TRUE(check_trace(sys, r1.goal, r1.trace).ok());

    analysis_config coarse;
    coarse.coarse_first = true;
    auto r2 = alternate(sys, coarse);
    EXPECT_EQ(r2.trace.d.front(), abstract_element::top(sys));
    ASSERT_GE(r2.trace.b.size(), 2u);
    EXPECT_EQ(r2.trace.b[1], abstract_element::top(sys)); // every predicate can reach the integrity clause
    EXPECT_TRUE(check_model(sys, refined_model(sys, r2.trace)).empty());
}

TEST(Solver, CoarseBackwardReachability) {
    auto sys = parse_system("pred a/1.\npred b/1.\npred c/1.\na(X).\nb(X) :- a(X).\nc(X) :- a(X).\nfalse :- b(X).\n");
    auto members = coarse_backward(sys, sys.effective_goal());
    EXPECT_EQ(members, (std::set<pred_id>{horn_system::falsity, *sys.find("a"), *sys.find("b")}));
}

TEST(Solver, AnalysesAreSoundOnRandomSystems) {
    for (unsigned seed = 0; seed < 150; ++seed) {
        auto sys = gen::random_system(seed, random_options(seed));
        auto rel = ground_relation(sys);
        auto goal_atoms = ground_goal(sys);
        auto m = lfp_forward(rel);
        auto combined = lfp_combined(rel, goal_atoms);

        auto d = analyze_forward(sys, abstract_element::top(sys));
        EXPECT_TRUE(subset(m, gamma(sys, d))) << "seed " << seed;
        auto g = goal_element(sys);
        EXPECT_TRUE(subset(goal_atoms, gamma(sys, g)));
        auto b = analyze_backward(sys, g, abstract_element::top(sys));
        EXPECT_TRUE(subset(lfp_backward(rel, goal_atoms), gamma(sys, b))) << "seed " << seed;

        auto res = alternate(sys);
        for (auto &di : res.trace.d)
            EXPECT_TRUE(subset(combined, gamma(sys, di))) << "seed " << seed;
        for (auto &bi : res.trace.b)
            EXPECT_TRUE(subset(combined, gamma(sys, bi))) << "seed " << seed;
        EXPECT_TRUE(check_trace(sys, res.goal, res.trace).ok()) << "seed " << seed;

        auto model = refined_model(sys, res.trace);
        EXPECT_TRUE(check_model(sys, model).empty()) << "seed " << seed;
        auto gm = gamma(sys, model);
        EXPECT_TRUE(is_model(rel, gm)) << "seed " << seed;
        if (res.status == verdict::safe) {
            EXPECT_TRUE(intersect(goal_atoms, m).empty()) << "seed " << seed;
            EXPECT_TRUE(intersect(goal_atoms, gm).empty()) << "seed " << seed;
        }
    }
}

TEST(Solver, MoreRoundsNeverLoseSafety) {
    for (unsigned seed = 0; seed < 100; ++seed) {
        auto sys = gen::random_system(500 + seed, random_options(seed));
        bool was_safe = false;
        for (std::size_t k = 1; k <= 7; ++k) {
            analysis_config cfg;
            cfg.max_rounds = k;
            bool safe = alternate(sys, cfg).status == verdict::safe;
            EXPECT_TRUE(safe || !was_safe) << "seed " << seed << " k " << k;
            was_safe = safe;
        }
    }
}

TEST(Solver, WideningDelayKeepsResultsCertified) {
    for (unsigned seed = 0; seed < 40; ++seed) {
        auto sys = gen::random_system(900 + seed, random_options(seed));
        for (std::size_t delay : {0u, 1u, 4u}) {
            analysis_config cfg;
            cfg.widening_delay = delay;
            auto res = alternate(sys, cfg);
            EXPECT_TRUE(check_trace(sys, res.goal, res.trace).ok());
            EXPECT_TRUE(check_model(sys, refined_model(sys, res.trace)).empty());
        }
    }
}

TEST(Solver, ModelCheckReportsViolations) {
    auto sys = corpus("lockstep.chc");
    std::vector<formula> all_false(sys.num_preds(), formula::bottom());
    auto bad = check_model(sys, all_false);
    ASSERT_EQ(bad.size(), 1u);
    EXPECT_EQ(bad[0].clause_index, 0u);
    EXPECT_NE(describe(sys, bad[0]).find("clause 1"), std::string::npos);

    std::vector<formula> all_true(sys.num_preds(), formula::top());
    EXPECT_TRUE(check_model(sys, all_true).empty());
    EXPECT_EQ(goal_overlaps(sys, sys.effective_goal(), all_true).size(), 1u);
}

TEST(Solver, PipelineModesOnCorpus) {
    for (auto &path : testing_util::corpus_files()) {
        auto sys = parse_system(testing_util::read_file(path));
        for (auto mode : {run_mode::fwd, run_mode::alt, run_mode::qa2, run_mode::qa_iter}) {
            auto r = run_analysis(sys, mode);
            EXPECT_TRUE(r.certs.model_check) << path << " " << to_string(mode);
            if (mode != run_mode::qa2) {
                EXPECT_TRUE(r.certs.sequence_laws) << path << " " << to_string(mode);
            }
            if (r.status == verdict::safe) {
                EXPECT_TRUE(r.certs.goal_disjoint) << path;
            }
        }
    }
}
