#include "test_util.hpp"

#include "hornfb/gen/random_system.hpp"
#include "hornfb/trees/trees.hpp"

#include <gtest/gtest.h>

using namespace hornfb;

namespace {

struct diamond_fixture {
    horn_system sys = parse_system(testing_util::read_corpus("ground_diamond.chc"));
    ground_rel rel = ground_relation(sys);
    interpretation goal = ground_goal(sys);

    std::set<std::string> render(const tree_set &t) const {
        std::set<std::string> out;
        for (auto &x : t)
            out.insert(to_string(sys, x));
        return out;
    }
};

// Each internal node with its children's roots is a consequence of the relation.
bool well_formed(const ground_rel &rel, const deriv_tree &t, bool leaves_are_initial) {
    consequence k;
    k.conclusion = t.node;
    for (auto &c : t.children)
        k.premises.insert(c.node);
    if (k.premises.size() != t.children.size())
        return false;
    if (t.children.empty() && !leaves_are_initial)
        return true;
    if (!rel.count(k))
        return false;
    for (auto &c : t.children)
        if (!well_formed(rel, c, leaves_are_initial))
            return false;
    return true;
}

} // namespace

TEST(Trees, ForwardTreesOfGroundDiamond) {
    diamond_fixture f;
    EXPECT_EQ(f.render(forward_trees(f.rel, 1)), (std::set<std::string>{"p(1)"}));
    EXPECT_EQ(f.render(forward_trees(f.rel, 2)), (std::set<std::string>{"p(1)", "p(2)<p(1)>", "p(3)<p(1)>"}));
    auto t3 = forward_trees(f.rel, 3);
    EXPECT_EQ(f.render(t3), (std::set<std::string>{"p(1)", "p(2)<p(1)>", "p(3)<p(1)>", "p(5)<p(3)<p(1)>>"}));
    EXPECT_EQ(forward_trees(f.rel, 6), t3);
}

TEST(Trees, BackwardTreesOfGroundDiamond) {
    diamond_fixture f;
    EXPECT_EQ(f.render(backward_trees(f.rel, f.goal, 1)), (std::set<std::string>{"p(5)"}));
    EXPECT_EQ(f.render(backward_trees(f.rel, f.goal, 2)),
              (std::set<std::string>{"p(5)", "p(5)<p(3)>", "p(5)<p(2), p(4)>"}));
    auto t3 = backward_trees(f.rel, f.goal, 3);
    EXPECT_EQ(f.render(t3), (std::set<std::string>{"p(5)", "p(5)<p(3)>", "p(5)<p(2), p(4)>", "p(5)<p(3)<p(1)>>",
                                                    "p(5)<p(2)<p(1)>, p(4)>"}));
    EXPECT_EQ(backward_trees(f.rel, f.goal, 6), t3);
}

TEST(Trees, CommonTreesGiveCombinedSemantics) {
    diamond_fixture f;
    auto fwd = forward_trees(f.rel, 6);
    auto bwd = backward_trees(f.rel, f.goal, 6);
    tree_set common;
    std::set_intersection(fwd.begin(), fwd.end(), bwd.begin(), bwd.end(), std::inserter(common, common.end()));
    EXPECT_EQ(f.render(common), (std::set<std::string>{"p(5)<p(3)<p(1)>>"}));
    EXPECT_EQ(atoms_abstraction(common), lfp_combined(f.rel, f.goal));
}

TEST(Trees, CheckReportOnGroundDiamond) {
    diamond_fixture f;
    auto r = check_tree_abstractions(f.rel, f.goal, 6);
    EXPECT_EQ(r.forward, check_status::pass);
    EXPECT_EQ(r.backward, check_status::pass);
    EXPECT_EQ(r.combined, check_status::pass);
    EXPECT_EQ(r.forward_trees, 4u);
    EXPECT_EQ(r.backward_trees, 5u);
    EXPECT_EQ(r.common_trees, 1u);

    auto shallow = check_tree_abstractions(f.rel, f.goal, 1);
    EXPECT_EQ(shallow.forward, check_status::skipped);
    EXPECT_EQ(shallow.combined, check_status::skipped);
}

TEST(Trees, NoInitialClausesPassVacuously) {
    auto sys = parse_system("universe {0, 1}.\npred p/1.\nfalse :- p(X), X > 0.\n");
    auto rel = ground_relation(sys);
    auto r = check_tree_abstractions(rel, ground_goal(sys), 4);
    EXPECT_EQ(r.forward, check_status::pass);
    EXPECT_EQ(r.backward, check_status::pass);
    EXPECT_EQ(r.combined, check_status::pass);
    EXPECT_EQ(r.forward_trees, 0u);
}

TEST(Trees, CyclicSystemsDoNotStabilize) {
    auto sys = parse_system("universe {0}.\npred p/1.\np(0).\np(X) :- p(X).\nfalse :- p(X).\n");
    auto r = check_tree_abstractions(ground_relation(sys), ground_goal(sys), 5);
    EXPECT_EQ(r.forward, check_status::pass); // atoms stabilize even though trees keep growing
    EXPECT_EQ(r.combined, check_status::skipped);
    EXPECT_FALSE(r.any_fail());
}

TEST(Trees, LimitIsReported) {
    auto sys = parse_system("universe {0, 1, 2}.\npred p/1.\np(X).\np(X) :- p(Y), p(Z).\n");
    auto rel = ground_relation(sys);
    EXPECT_THROW(forward_trees(rel, 4, 1000), resource_error);
    auto r = check_tree_abstractions(rel, ground_goal(sys), 6, 1000);
    EXPECT_FALSE(r.note.empty());
}

TEST(Trees, RandomAcyclicSystems) {
    gen::options opt;
    opt.acyclic = true;
    std::size_t skipped = 0;
    for (unsigned seed = 0; seed < 120; ++seed) {
        opt.explicit_goal = seed % 2;
        auto sys = gen::random_system(seed, opt);
        auto rel = ground_relation(sys);
        auto goal = ground_goal(sys);
        auto r = check_tree_abstractions(rel, goal, 8);
        EXPECT_FALSE(r.any_fail()) << "seed " << seed;
        skipped += r.combined == check_status::skipped;

        auto fwd = forward_trees(rel, 6);
        auto bwd = backward_trees(rel, goal, 6);
        EXPECT_TRUE(is_subtree_closed(fwd));
        EXPECT_TRUE(is_pre_tree_closed(bwd));
        for (auto &t : fwd)
            ASSERT_TRUE(well_formed(rel, t, true)) << "seed " << seed;
        for (auto &t : bwd) {
            ASSERT_TRUE(well_formed(rel, t, false)) << "seed " << seed;
            ASSERT_TRUE(goal.count(t.node));
        }
    }
    EXPECT_EQ(skipped, 0u);
}
