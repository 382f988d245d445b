#include "hornfb/core/dependency.hpp"
#include "hornfb/core/parser.hpp"
#include "hornfb/gen/random_system.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace hornfb;

namespace {

formula f(const std::string &text) { return parse_formula(text); }

} // namespace

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
    EXPECT_EQ(parse_rational("12"), rational(12));
    EXPECT_EQ(parse_rational("-7"), rational(-7));
    EXPECT_EQ(parse_rational("3/4"), rational(3) / 4);
    EXPECT_EQ(parse_rational("1.25"), rational(5) / 4);
    EXPECT_EQ(parse_rational("-0.5"), rational(-1) / 2);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(LinTerm, NeverStoresZeroCoefficients) {
    auto t = lin_term::var("X") + lin_term::var("Y") - lin_term::var("X");
    EXPECT_EQ(t.coefficients().size(), 1u);
    EXPECT_EQ(t.coefficient("X"), 0);
    EXPECT_EQ((t * rational(0)).coefficients().size(), 0u);
}

TEST(Formula, GroundAtomsFold) {
    EXPECT_TRUE(formula::atom(lin_constraint::le(lin_term(rational(1)), lin_term(rational(2)))).is_true());
    EXPECT_TRUE(formula::atom(lin_constraint::lt(lin_term(rational(2)), lin_term(rational(2)))).is_false());
    EXPECT_TRUE(formula::conj(formula::top(), formula::bottom()).is_false());
    EXPECT_TRUE(formula::disj(std::vector<formula>{}).is_false());
    EXPECT_TRUE(formula::conj(std::vector<formula>{}).is_true());
}

TEST(Formula, NegationOfEqualityIsTwoStrictInequalities) {
    auto n = negate(f("X = Y"));
    ASSERT_EQ(n.node_kind(), formula::kind::disj);
    EXPECT_EQ(n.children().size(), 2u);
    EXPECT_TRUE(is_negation_free(n));
    valuation v{{"X", 1}, {"Y", 1}};
    EXPECT_EQ(evaluate(n, v), false);
    v["Y"] = 2;
    EXPECT_EQ(evaluate(n, v), true);
}

TEST(Parser, ParallelIncrementSystem) {
    auto sys = parse_system(testing_util::read_corpus("lockstep.chc"));
    ASSERT_TRUE(sys.find("p"));
    EXPECT_EQ(sys.decl(*sys.find("p")).arity, 2u);
    EXPECT_EQ(sys.num_preds(), 2u); // p and the falsity predicate
    EXPECT_EQ(sys.clauses.size(), 4u);
    EXPECT_EQ(sys.clauses.back().head.pred, horn_system::falsity);
    // The init constraint is x = 0 and y = 0.
    auto &init = sys.clauses.front();
    EXPECT_TRUE(init.is_initial());
    auto &args = init.head.args;
    EXPECT_EQ(evaluate(init.constraint, {{args[0], 0}, {args[1], 0}}), true);
    EXPECT_EQ(evaluate(init.constraint, {{args[0], 0}, {args[1], 1}}), false);
}

TEST(Parser, GroundSystemWithUniverse) {
    auto sys = parse_system(testing_util::read_corpus("ground_diamond.chc"));
    EXPECT_EQ(sys.clauses.size(), 5u);
    std::size_t initial = 0;
    for (auto &c : sys.clauses)
        initial += c.is_initial();
    EXPECT_EQ(initial, 1u);
    ASSERT_TRUE(sys.universe);
    EXPECT_EQ(sys.universe->size(), 5u);
    ASSERT_TRUE(sys.goal);
    EXPECT_EQ(sys.goal->entries.size(), 1u);
}

TEST(Parser, DeclarationWithoutClauses) {
    auto sys = parse_system("pred p/1.");
    EXPECT_EQ(sys.clauses.size(), 0u);
    EXPECT_EQ(sys.num_preds(), 2u);
}

TEST(Parser, ReportsLineAndColumn) {
    try {
        parse_system("pred p/1.\np(X) :- X @ 1.");
        FAIL();
    } catch (const parse_error &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 11u);
    }
}

TEST(Parser, RejectsMalformedInput) {
    EXPECT_THROW(parse_system("p(X) :- X = 0."), parse_error);                 // undeclared
    EXPECT_THROW(parse_system("pred p/2.\np(X) :- X = 0."), parse_error);      // arity
    EXPECT_THROW(parse_system("pred p/1.\np(X) :- false(), X = 0."), parse_error); // falsity in body
    EXPECT_TRUE(parse_system("pred p/1.\np(X) :- false, X = 0.").clauses.at(0).constraint.is_false());
    EXPECT_THROW(parse_system("pred p/1.\np(X) :- p(Y), X = Y * Y."), parse_error); // non-linear
    EXPECT_THROW(parse_system("pred p/1.\npred p/1."), parse_error);
    EXPECT_THROW(parse_system("pred p/1.\np(X) :- X = 0"), parse_error); // missing dot
}

TEST(Parser, NonVariableHeadArgumentsBecomeEqualities) {
    auto sys = parse_system("pred p/2.\np(X + 1, Y + 1) :- p(X, Y), X >= 0.");
    auto &c = sys.clauses.at(0);
    auto &u = c.head.args[0];
    auto &v = c.head.args[1];
    EXPECT_NE(u, "X");
    EXPECT_NE(v, "Y");
    EXPECT_NE(u, v);
    valuation val{{"X", 2}, {"Y", 5}, {u, 3}, {v, 6}};
    EXPECT_EQ(evaluate(c.constraint, val), true);
    val[v] = 5;
    EXPECT_EQ(evaluate(c.constraint, val), false);
    val[v] = 6;
    val["X"] = -1;
    val[u] = 0;
    EXPECT_EQ(evaluate(c.constraint, val), false); // x >= 0 kept
}

TEST(Parser, RepeatedArgumentIsSplit) {
    auto sys = parse_system("pred q/2.\nq(X, X) :- X >= 1.");
    auto &c = sys.clauses.at(0);
    EXPECT_NE(c.head.args[0], c.head.args[1]);
    valuation val{{c.head.args[0], 2}, {c.head.args[1], 2}};
    EXPECT_EQ(evaluate(c.constraint, val), true);
    val[c.head.args[1]] = 3;
    EXPECT_EQ(evaluate(c.constraint, val), false);
}

TEST(Parser, DisequalityBecomesStrictDisjunction) {
    auto sys = parse_system("pred p/2.\nfalse :- p(X, Y), X != Y.");
    auto &phi = sys.clauses.at(0).constraint;
    EXPECT_TRUE(is_negation_free(phi));
    ASSERT_EQ(phi.node_kind(), formula::kind::disj);
    for (auto &k : phi.children()) {
        ASSERT_EQ(k.node_kind(), formula::kind::atom);
        EXPECT_EQ(k.constraint().rel, relation::lt);
    }
}

TEST(Parser, DisjunctionAndParentheses) {
    auto phi = f("(X < 0 ; X > 2), Y = 1");
    EXPECT_EQ(evaluate(phi, {{"X", -1}, {"Y", 1}}), true);
    EXPECT_EQ(evaluate(phi, {{"X", 1}, {"Y", 1}}), false);
    EXPECT_EQ(evaluate(phi, {{"X", 3}, {"Y", 1}}), true);
    EXPECT_EQ(evaluate(f("2*X + 1/2 <= 3.5 - X"), {{"X", 1}}), true);
    EXPECT_EQ(evaluate(f("2*X + 1/2 <= 3.5 - X"), {{"X", 2}}), false);
}

TEST(Parser, GoalConstraintLimitedToArguments) {
    EXPECT_NO_THROW(parse_system("pred p/1.\ngoal p(X) : X >= 3."));
    EXPECT_THROW(parse_system("pred p/1.\ngoal p(X) : Y >= 3."), parse_error);
}

TEST(RoundTrip, EveryCorpusFile) {
    for (auto &path : testing_util::corpus_files()) {
        SCOPED_TRACE(path);
        auto a = parse_system(testing_util::read_file(path));
        auto text = to_string(a);
        auto b = parse_system(text);
        EXPECT_EQ(a, b) << text;
        EXPECT_EQ(to_string(b), text);
    }
}

TEST(RoundTrip, RandomSystems) {
    for (unsigned seed = 0; seed < 50; ++seed) {
        auto a = gen::random_system(seed, {});
        auto b = parse_system(to_string(a));
        EXPECT_EQ(a, b) << to_string(a);
    }
}

TEST(ModelFile, PositionalAndExplicitParameters) {
    auto sys = parse_system("pred p/2.\npred q/1.");
    auto m = parse_model_file("model p(X, Y) : X <= Y.\n", sys);
    ASSERT_EQ(m.size(), sys.num_preds());
    EXPECT_TRUE(m[*sys.find("q")].is_false());
    EXPECT_EQ(evaluate(m[*sys.find("p")], {{"A1", 1}, {"A2", 2}}), true);
    auto again = parse_model_file(model_file_text(sys, m), sys);
    EXPECT_EQ(again, m);
    EXPECT_THROW(parse_model_file("model r : true.", sys), parse_error);
    EXPECT_THROW(parse_model_file("model q : true.\nmodel q : true.", sys), parse_error);
}

TEST(Dependency, ParallelIncrementHasOneSelfLoop) {
    auto sys = parse_system(testing_util::read_corpus("lockstep.chc"));
    auto order = compute_dependency_order(sys);
    pred_id p = *sys.find("p");
    ASSERT_EQ(order.components.size(), 2u);
    EXPECT_EQ(order.components[0].members, std::vector<pred_id>{p});
    EXPECT_TRUE(order.components[0].recursive);
    EXPECT_TRUE(order.widening_point[p]);
    EXPECT_FALSE(order.widening_point[horn_system::falsity]);
    EXPECT_LT(order.rank[p], order.rank[horn_system::falsity]);
}

TEST(Dependency, ProcedureEncodingOrder) {
    auto sys = parse_system(testing_util::read_corpus("lockstep_call.chc"));
    auto order = compute_dependency_order(sys);
    pred_id p = *sys.find("p"), fn = *sys.find("f"), fc = *sys.find("f_c");
    EXPECT_LT(order.rank[fc], order.rank[fn]);
    EXPECT_LT(order.rank[fn], order.rank[p]);
    EXPECT_TRUE(order.widening_point[p]);
    EXPECT_FALSE(order.widening_point[fn]);
    EXPECT_FALSE(order.widening_point[fc]);
    for (auto &c : order.components)
        EXPECT_EQ(c.members.size(), 1u);
}

TEST(Dependency, EmptySystem) {
    auto order = compute_dependency_order(parse_system("pred p/1."));
    EXPECT_TRUE(order.components.empty());
}

TEST(Dependency, EveryCycleCutAndEachPredicateOnce) {
    for (unsigned seed = 0; seed < 100; ++seed) {
        auto sys = gen::random_system(seed, {});
        auto order = compute_dependency_order(sys);
        auto flat = order.flattened();
        std::set<pred_id> seen(flat.begin(), flat.end());
        EXPECT_EQ(seen.size(), flat.size());
        // Removing the widening points must leave the graph acyclic.
        auto succ = dependency_graph(sys);
        std::vector<pred_id> rest;
        for (auto p : flat)
            if (!order.widening_point[p])
                rest.push_back(p);
        for (auto &scc : detail::tarjan(succ, rest)) {
            EXPECT_EQ(scc.size(), 1u);
            EXPECT_FALSE(detail::has_self_loop(succ, scc.front()));
        }
        // Edges between different components go forward.
        std::map<pred_id, std::size_t> comp;
        for (std::size_t i = 0; i < order.components.size(); ++i)
            for (auto p : order.components[i].members)
                comp[p] = i;
        for (auto &c : sys.clauses)
            for (auto &b : c.body)
                EXPECT_LE(comp.at(b.pred), comp.at(c.head.pred)) << "seed " << seed;
    }
}
