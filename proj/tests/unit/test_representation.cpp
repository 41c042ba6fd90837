#include "support.hpp"

#include "comodule/codec.hpp"
#include "comodule/demos.hpp"
#include "comodule/lawcheck.hpp"
#include "comodule/mendler.hpp"

using namespace comodule;

namespace {
Container bb() { return Container::constant(TypeCode::boolean(), TypeCode::boolean()); }

Representation from_json(const char* text) { return parse_document(Json::parse(text)).build_representation(); }

// Baire domain ℕ◁ℕ and an argument α given as a lambda.
Assignment alpha(const std::string& src) {
    return Assignment(Container::constant(opaque_code("nat"), opaque_code("nat")), compile_lambda(src));
}

std::int64_t nat_of(const Value& v) {
    REQUIRE(v.kind() == ValueKind::Opaque);
    return v.atom();
}
}  // namespace

TEST_CASE("identity representation evaluates to h(b)") {
    auto cm = std::make_shared<TreeComodule>();
    Representation r = id_rep(cm, bb());
    for (const auto& h : cointerpret_assignments(bb()))
        for (const auto& b : enumerate(bb().shapes())) CHECK(evaluate_rep(r, h, b) == h.at(b));
    FunctionalOracle id{bb(), bb(), [](const Assignment& h) { return h; }};
    CHECK(check_represents(r, id).passed());
}

TEST_CASE("Baire functional alpha(alpha(0))") {
    Document d = demo_document("baire");
    Representation r = d.build_representation();
    // direct computation: α(α(0))
    struct Case {
        const char* src;
        std::function<std::int64_t(std::int64_t)> direct;
    };
    std::vector<Case> cases{{"\\n. succ(n)", [](std::int64_t n) { return n + 1; }},
                            {"\\n. add(n, n)", [](std::int64_t n) { return 2 * n; }},
                            {"\\n. add(n, 3)", [](std::int64_t n) { return n + 3; }},
                            {"\\n. 7", [](std::int64_t) { return std::int64_t{7}; }}};
    // frozen results of the oracle: 2, 0, 6, 7
    const std::vector<std::int64_t> frozen{2, 0, 6, 7};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CAPTURE(cases[i].src);
        CHECK(cases[i].direct(cases[i].direct(0)) == frozen[i]);
        CHECK(nat_of(evaluate_rep(r, alpha(cases[i].src), Value::unit())) == frozen[i]);
    }
    // the shipped argument is succ
    CHECK(nat_of(evaluate_rep(r, d.argument->build(), Value::unit())) == 2);
}

TEST_CASE("Baire split into two stages composes to sequential evaluation") {
    // stage one: G(α)(n) = α(n) asked through a one-query tree
    Representation f = from_json(R"j({"representation": {
        "monad": "tree",
        "domain": {"shapes": {"opaque": "nat"}, "constant": {"opaque": "nat"}},
        "codomain": {"shapes": {"opaque": "nat"}, "constant": {"opaque": "nat"}},
        "shape": {"fn": "\\n. node(n, \\p. leaf)"},
        "position": {"fn": "\\n path. arg(path, 0)"}}})j");
    Representation g = demo_document("baire").build_representation();
    Representation gf = compose_reps(g, f);
    for (const char* src : {"\\n. succ(n)", "\\n. add(n, 5)", "\\n. add(n, n)"}) {
        Assignment a = alpha(src);
        Value sequential = evaluate_rep(g, evaluate_all(f, a), Value::unit());
        CHECK(evaluate_rep(gf, a, Value::unit()) == sequential);
    }
}

TEST_CASE("a wrong representation is caught with a witness") {
    auto cm = std::make_shared<TreeComodule>();
    Representation good = id_rep(cm, bb());
    // answers the other position at the leaf
    ContainerMorphism wrong(bb(), cm->monad().apply(bb()), good.morphism.shape_fn(),
                            [](const Value&, const Value& path) { return Value::boolean(!path.arg(0).as_bool()); });
    Representation bad{cm, bb(), bb(), wrong};
    FunctionalOracle id{bb(), bb(), [](const Assignment& h) { return h; }};
    auto res = check_represents(bad, id);
    CHECK_FALSE(res.passed());
    REQUIRE(res.counterexample);
    CHECK(res.counterexample->lhs != res.counterexample->rhs);
}

TEST_CASE("composition with the identity leaves evaluation unchanged") {
    auto cm = std::make_shared<TreeComodule>();
    Container c = Container::finite(TypeCode::boolean(),
                                    {{Value::boolean(false), TypeCode::unit()}, {Value::boolean(true), TypeCode::boolean()}});
    auto ms = morphisms_between(bb(), cm->monad().apply(c), MorphismBounds{1});
    REQUIRE(!ms.empty());
    for (std::size_t k = 0; k < ms.size(); k += 7) {
        Representation r{cm, c, bb(), ms[k]};
        Representation left = compose_reps(id_rep(cm, bb()), r);
        Representation right = compose_reps(r, id_rep(cm, c));
        for (const auto& h : cointerpret_assignments(c))
            for (const auto& b : enumerate(bb().shapes())) {
                CHECK(evaluate_rep(left, h, b) == evaluate_rep(r, h, b));
                CHECK(evaluate_rep(right, h, b) == evaluate_rep(r, h, b));
            }
    }
}

TEST_CASE("exceptional representation ignores h on the raising branch") {
    Document d = demo_document("exceptional");
    Representation r = d.build_representation();
    for (const auto& h : cointerpret_assignments(r.domain)) {
        CHECK(evaluate_rep(r, h, Value::boolean(false)) == Value::boolean(true));
        CHECK(evaluate_rep(r, h, Value::boolean(true)) == h.at(Value::boolean(false)));
    }
}

TEST_CASE("algebra round trips for tree and identity") {
    auto r = run_suite("algebra-translation");
    CHECK(r.failed == 0);
    CHECK(r.run > 0);
}

TEST_CASE("find_representation recovers a represented functional") {
    auto cm = std::make_shared<IdentityComodule>();
    // F(h)(b) = h(not b)
    FunctionalOracle f{bb(), bb(), [](const Assignment& h) {
                           return Assignment(bb(), tabulate(TypeCode::boolean(), [&](const Value& b) {
                                                 return h.at(Value::boolean(!b.as_bool()));
                                             }));
                       }};
    auto found = find_representation(cm, f);
    REQUIRE(found);
    CHECK(check_represents(*found, f).passed());
}
