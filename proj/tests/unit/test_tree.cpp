#include "support.hpp"

#include <cmath>

#include "comodule/lawcheck.hpp"
#include "comodule/tree.hpp"

using namespace comodule;

namespace {
// T_0 = 1, T_d = 1 + Σ_a T_{d-1}^|P a|
std::uint64_t tree_count_oracle(const Container& c, int depth) {
    if (depth == 0) return 1;
    std::uint64_t prev = tree_count_oracle(c, depth - 1), total = 1;
    for (const auto& a : enumerate(c.shapes()))
        total += static_cast<std::uint64_t>(std::pow(prev, *cardinality(c.positions(a))));
    return total;
}

Container bb() { return Container::constant(TypeCode::boolean(), TypeCode::boolean()); }
}  // namespace

TEST_CASE("tree counts follow the recurrence") {
    // frozen: Bool◁Bool gives 1, 3, 19
    CHECK(tree_count_oracle(bb(), 1) == 3);
    CHECK(tree_count_oracle(bb(), 2) == 19);
    for (int d = 0; d <= 2; ++d) {
        CHECK(tree::count_trees(bb(), d) == tree_count_oracle(bb(), d));
        CHECK(tree::enumerate_trees(bb(), d).size() == tree_count_oracle(bb(), d));
    }
    for (const auto& c : default_catalog(2)) {
        CAPTURE(c.describe());
        CHECK(tree::enumerate_trees(c, 2).size() == tree_count_oracle(c, 2));
    }
}

TEST_CASE("paths of a tree are its leaves") {
    for (const auto& t : tree::enumerate_trees(bb(), 2)) {
        auto ps = tree::enumerate_paths(t);
        // count leaves directly
        std::function<std::size_t(const Value&)> leaves = [&](const Value& s) -> std::size_t {
            if (tree::is_leaf(s)) return 1;
            std::size_t n = 0;
            for (const auto& [p, k] : tree::children(s).entries()) n += leaves(k);
            return n;
        };
        CHECK(ps.size() == leaves(t));
        for (const auto& p : ps) CHECK(tree::conforms(bb(), t, p));
    }
}

TEST_CASE("pfst and psnd split grafted paths") {
    auto ts = tree::enumerate_trees(bb(), 1);
    auto us = tree::enumerate_trees(bb(), 1);
    for (const auto& t : ts)
        for (const auto& u : us) {
            Value g = tree::graft(t, [&](const Value&) { return u; });
            for (const auto& p : tree::enumerate_paths(g)) {
                Value first = tree::pfst(t, p), second = tree::psnd(t, p);
                CHECK(tree::conforms(bb(), t, first));
                CHECK(tree::conforms(bb(), u, second));
            }
            // leaves of g: leaves(t) · leaves(u)
            CHECK(tree::enumerate_paths(g).size() ==
                  tree::enumerate_paths(t).size() * tree::enumerate_paths(u).size());
        }
}

TEST_CASE("cook follows the oracle down the tree") {
    // node(false, {false: leaf, true: node(true, ...)}) with h = not
    Value inner = tree::node(Value::boolean(true), Value::table({{Value::boolean(false), tree::leaf()},
                                                                 {Value::boolean(true), tree::leaf()}}));
    Value t = tree::node(Value::boolean(false),
                         Value::table({{Value::boolean(false), tree::leaf()}, {Value::boolean(true), inner}}));
    Assignment h(bb(), Value::table({{Value::boolean(false), Value::boolean(true)},
                                     {Value::boolean(true), Value::boolean(false)}}));
    // h false = true, then h true = false
    Value expected = tree::step(Value::boolean(true), tree::step(Value::boolean(false), tree::stop()));
    CHECK(tree::cook_pure(h, t) == expected);
    CHECK(tree::cook_pure(h, tree::leaf()) == tree::stop());
}

TEST_CASE("malformed paths are rejected") {
    Value t = tree::single(bb(), Value::boolean(true));
    CHECK_FALSE(tree::conforms(bb(), t, tree::stop()));
    CHECK_THROWS_AS(tree::pfst(t, tree::stop()), MalformedPath);
}

TEST_CASE("tree monad laws on the shapes-one catalog") {
    SuiteParams p;
    p.max_shapes = 1;
    auto r = run_suite("monad-laws:tree", p);
    CHECK(r.failed == 0);
    CHECK(r.run > 0);
}
