#include "support.hpp"

#include <cmath>

#include "comodule/container.hpp"
#include "comodule/lawcheck.hpp"

using namespace comodule;

namespace {
Container mixed() {
    // Bool ◁ {false: Unit, true: Bool}
    return Container::finite(TypeCode::boolean(),
                             {{Value::boolean(false), TypeCode::unit()}, {Value::boolean(true), TypeCode::boolean()}});
}

// Π_a Σ_b |P a|^|Q b|
std::uint64_t morphism_count_oracle(const Container& c, const Container& d) {
    std::uint64_t total = 1;
    for (const auto& a : enumerate(c.shapes())) {
        std::uint64_t sum = 0;
        for (const auto& b : enumerate(d.shapes()))
            sum += static_cast<std::uint64_t>(
                std::pow(*cardinality(c.positions(a)), *cardinality(d.positions(b))));
        total *= sum;
    }
    return total;
}
}  // namespace

TEST_CASE("morphism counts agree with the closed form") {
    Container bb = Container::constant(TypeCode::boolean(), TypeCode::boolean());
    // frozen from the oracle: mixed → bb is (1+1)·(4+4) = 16
    CHECK(morphism_count_oracle(mixed(), bb) == 16);
    CHECK(count_morphisms(mixed(), bb) == 16);
    CHECK(morphisms_between(mixed(), bb).size() == 16);
    for (const auto& c : default_catalog(1))
        for (const auto& d : default_catalog(1)) {
            CAPTURE(c.describe());
            CAPTURE(d.describe());
            CHECK(count_morphisms(c, d) == morphism_count_oracle(c, d));
            CHECK(morphisms_between(c, d).size() == morphism_count_oracle(c, d));
        }
}

TEST_CASE("catalog sizes") {
    // shapes ∈ {Empty, Unit, Bool} with ≤ n shapes, positions from 3 codes: 1 + 3 (+ 9)
    CHECK(default_catalog(1).size() == 4);
    CHECK(default_catalog(2).size() == 13);
    // Empty/Unit positions only: 1 + 2 + 4
    CHECK(prop_catalog(2).size() == 7);
}

TEST_CASE("identity and composition are unital") {
    Container bb = Container::constant(TypeCode::boolean(), TypeCode::boolean());
    auto shapes = enumerate(mixed().shapes());
    for (const auto& m : morphisms_between(mixed(), bb)) {
        CHECK_FALSE(morphism_mismatch(compose_morphisms(identity_morphism(bb), m), m, shapes));
        CHECK_FALSE(morphism_mismatch(compose_morphisms(m, identity_morphism(mixed())), m, shapes));
    }
}

TEST_CASE("cointerpretation is contravariant") {
    Container c = mixed();
    Container bb = Container::constant(TypeCode::boolean(), TypeCode::boolean());
    // |Π a. P a| = 1 · 2
    CHECK(cointerpret_assignments(c).size() == 2);
    auto ms = morphisms_between(c, bb);
    auto ns = morphisms_between(bb, bb);
    auto shapes = enumerate(c.shapes());
    for (std::size_t i = 0; i < ms.size(); i += 5)
        for (std::size_t j = 0; j < ns.size(); j += 7)
            for (const auto& h : cointerpret_assignments(bb)) {
                Assignment lhs = cointerpret_morphism(compose_morphisms(ns[j], ms[i]), h);
                Assignment rhs = cointerpret_morphism(ms[i], cointerpret_morphism(ns[j], h));
                CHECK_FALSE(assignment_mismatch(lhs, rhs, shapes));
            }
}

TEST_CASE("products: projections after pairing") {
    Container c = mixed();
    Container d = Container::constant(TypeCode::unit(), TypeCode::boolean());
    Product p = product(c, d);
    // shapes multiply: 2 · 1
    CHECK(enumerate(p.object.shapes()).size() == 2);
    auto xs = morphisms_between(identity_container(), c);
    auto ys = morphisms_between(identity_container(), d);
    auto shapes = enumerate(identity_container().shapes());
    for (const auto& f : xs)
        for (const auto& g : ys) {
            ContainerMorphism pr = pairing(f, g, p);
            CHECK_FALSE(morphism_mismatch(compose_morphisms(p.proj1, pr), f, shapes));
            CHECK_FALSE(morphism_mismatch(compose_morphisms(p.proj2, pr), g, shapes));
        }
}

TEST_CASE("the unit container is terminal and the zero container initial") {
    for (const auto& c : default_catalog(2)) {
        CHECK(count_morphisms(c, unit_container()) == 1);
        CHECK(count_morphisms(zero_container(), c) == 1);
    }
}

TEST_CASE("morphisms from tables") {
    Container bb = Container::constant(TypeCode::boolean(), TypeCode::boolean());
    Value not_table = Value::table({{Value::boolean(false), Value::boolean(true)}, {Value::boolean(true), Value::boolean(false)}});
    Value pos = Value::table({{Value::boolean(false), not_table}, {Value::boolean(true), not_table}});
    ContainerMorphism m = morphism_from_tables(bb, bb, not_table, pos);
    CHECK(m.shape(Value::boolean(false)) == Value::boolean(true));
    CHECK(m.position(Value::boolean(false), Value::boolean(false)) == Value::boolean(true));
    ContainerMorphism mm = compose_morphisms(m, m);
    CHECK_FALSE(morphism_mismatch(mm, identity_morphism(bb)));
}
