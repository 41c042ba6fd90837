#include "support.hpp"

#include <set>

#include "comodule/demos.hpp"
#include "comodule/lawcheck.hpp"
#include "comodule/mendler.hpp"

using namespace comodule;

namespace {
Value fin_set(std::initializer_list<std::size_t> xs) {
    std::vector<Value> v;
    for (auto x : xs) v.push_back(Value::fin(x));
    return subset::make(v);
}
std::set<std::size_t> as_std(const Value& s) {
    std::set<std::size_t> out;
    for (const auto& m : subset::members(s)) out.insert(m.as_fin());
    return out;
}
}  // namespace

TEST_CASE("finite subsets are canonical") {
    Value s = subset::make({Value::fin(2), Value::fin(0), Value::fin(2)});
    REQUIRE(subset::members(s).size() == 2);
    CHECK(subset::members(s)[0] == Value::fin(0));
    CHECK(s == fin_set({0, 2}));
    CHECK(subset::union_of(fin_set({0}), fin_set({2, 0})) == fin_set({0, 2}));
    CHECK(subset::contains(s, Value::fin(2)));
    CHECK_FALSE(subset::contains(s, Value::fin(1)));
    // 2^3 subsets, 7 of them inhabited
    std::vector<Value> base{Value::fin(0), Value::fin(1), Value::fin(2)};
    CHECK(subset::all_subsets(base).size() == 8);
    CHECK(subset::all_subsets(base, true).size() == 7);
}

TEST_CASE("Kleisli extension of finite subsets is the union of images") {
    // oracle: std::set union over the members
    auto f_std = [](std::size_t i) { return std::set<std::size_t>{i, (i + 1) % 3}; };
    Fn f = [&](const Value& v) {
        std::vector<Value> out;
        for (auto j : f_std(v.as_fin())) out.push_back(Value::fin(j));
        return subset::make(out);
    };
    std::vector<Value> base{Value::fin(0), Value::fin(1), Value::fin(2)};
    for (const auto& s : subset::all_subsets(base)) {
        std::set<std::size_t> expect;
        for (auto i : as_std(s))
            for (auto j : f_std(i)) expect.insert(j);
        CHECK(as_std(kleisli_extend_pfin(f, s)) == expect);
    }
    // frozen from the oracle: {0, 2} ↦ {0, 1, 2}, {} ↦ {}
    CHECK(kleisli_extend_pfin(f, fin_set({0, 2})) == fin_set({0, 1, 2}));
    CHECK(kleisli_extend_pfin(f, fin_set({})) == fin_set({}));
}

TEST_CASE("monads on types satisfy the Kleisli laws on small carriers") {
    TypeCode x = TypeCode::fin(3);
    std::vector<std::shared_ptr<MonadOnTypes>> ms{std::make_shared<IdentityMonad>(), std::make_shared<ExceptionMonad>(),
                                                  std::make_shared<TrivialMonad>(), std::make_shared<FinitePowerset>()};
    for (const auto& m : ms) {
        CAPTURE(m->name());
        TypeCode mx = m->apply(x);
        // f and g: two fixed Kleisli maps into M X built from unit
        Fn f = [&](const Value& v) { return m->unit(Value::fin((v.as_fin() + 1) % 3)); };
        Fn g = [&](const Value& v) { return m->unit(Value::fin((2 * v.as_fin()) % 3)); };
        for (const auto& a : enumerate(x)) CHECK(value_eq(mx, m->bind(f, m->unit(a)), f(a)));
        for (const auto& mv : enumerate(mx)) {
            CHECK(value_eq(mx, m->bind([&](const Value& v) { return m->unit(v); }, mv), mv));
            Value lhs = m->bind(g, m->bind(f, mv));
            Value rhs = m->bind([&](const Value& v) { return m->bind(g, f(v)); }, mv);
            CHECK(value_eq(mx, lhs, rhs));
        }
    }
}

TEST_CASE("exception bind short-circuits") {
    ExceptionMonad m;
    Fn f = [](const Value&) { return Value::inl(Value::boolean(true)); };
    CHECK(m.bind(f, Value::inr(Value::unit())) == Value::inr(Value::unit()));
    CHECK(m.bind(f, Value::inl(Value::boolean(false))) == Value::inl(Value::boolean(true)));
}

TEST_CASE("powerset extension is the product over members") {
    // positions: shape i has i + 1 positions
    Container c = Container::finite(
        TypeCode::fin(3), {{Value::fin(0), TypeCode::fin(1)}, {Value::fin(1), TypeCode::fin(2)}, {Value::fin(2), TypeCode::fin(3)}});
    FinitePowersetAlgebra alg;
    Family p = family_of(c);
    for (const auto& s : subset::all_subsets(enumerate(TypeCode::fin(3)))) {
        std::uint64_t expect = 1;
        for (auto i : as_std(s)) expect *= i + 1;
        CHECK(cardinality(alg.extend(p, s)) == expect);
    }
    // frozen: {0, 1, 2} ↦ 1·2·3 = 6
    CHECK(cardinality(alg.extend(p, fin_set({0, 1, 2}))) == 6u);
}

TEST_CASE("induced monad shapes") {
    Container bb = Container::constant(TypeCode::boolean(), TypeCode::boolean());
    // finite subsets of two shapes: 4; identity: 2; exception: 3; trivial: 1
    CHECK(cardinality(induced_monad(finite_powerset_instance())->apply(bb).shapes()) == 4u);
    CHECK(cardinality(induced_monad(identity_instance())->apply(bb).shapes()) == 2u);
    CHECK(cardinality(induced_monad(exception_instance())->apply(bb).shapes()) == 3u);
    CHECK(cardinality(induced_monad(self_rep_instance())->apply(bb).shapes()) == 1u);
}

TEST_CASE("finite-support cook restricts h") {
    FiniteSupportComodule cm;
    Container c = Container::constant(TypeCode::fin(3), TypeCode::boolean());
    for (const auto& h : cointerpret_assignments(c)) {
        Assignment k = cm.cook(c, h);
        for (const auto& s : subset::all_subsets(enumerate(TypeCode::fin(3)))) {
            Value t = k.at(s);
            REQUIRE(t.kind() == ValueKind::Table);
            CHECK(t.entries().size() == subset::members(s).size());
            for (const auto& [a, v] : t.entries()) CHECK(v == h.at(a));
        }
    }
}

TEST_CASE("the finite-support demo is support invariant") {
    Representation r = demo_document("finite-support").build_representation();
    auto hs = cointerpret_assignments(r.domain);
    // 2^3 assignments, 2 shapes: 128 triples
    CHECK(hs.size() * hs.size() * 2 == 128);
    for (const auto& b : enumerate(r.codomain.shapes()))
        for (const auto& h1 : hs)
            for (const auto& h2 : hs) CHECK(check_finite_support(r, h1, h2, b));
}

TEST_CASE("coherence suites for the small instances pass") {
    for (const char* s : {"mendler-coherence:identity", "mendler-coherence:finite-powerset", "mendler-coherence:trivial",
                          "mendler-coherence:exception", "monad-laws:identity", "monad-laws:finite-powerset",
                          "monad-laws:exception", "comodule-laws:identity", "comodule-laws:trivial"}) {
        CAPTURE(s);
        SuiteParams p;
        p.max_shapes = 1;
        auto r = run_suite(s, p);
        CHECK(r.ok());
        CHECK(r.failed == 0);
        CHECK(r.run > 0);
    }
}
