#include "support.hpp"

#include <cmath>

#include "comodule/universe.hpp"

using namespace comodule;

namespace {
// |X| computed by hand from the code structure
std::uint64_t card_oracle(const TypeCode& c) {
    switch (c.kind()) {
        case CodeKind::Empty: return 0;
        case CodeKind::Unit: return 1;
        case CodeKind::Bool: return 2;
        case CodeKind::Fin: return c.fin_size();
        case CodeKind::Sum: return card_oracle(c.left()) + card_oracle(c.right());
        case CodeKind::Prod: return card_oracle(c.left()) * card_oracle(c.right());
        case CodeKind::Fun:
            return static_cast<std::uint64_t>(std::pow(card_oracle(c.right()), card_oracle(c.left())));
        default: return 0;
    }
}
}  // namespace

TEST_CASE("cardinalities match enumeration and a structural count") {
    const TypeCode b = TypeCode::boolean(), f3 = TypeCode::fin(3);
    std::vector<TypeCode> codes{TypeCode::empty(),
                                TypeCode::unit(),
                                b,
                                f3,
                                TypeCode::sum(b, f3),
                                TypeCode::prod(b, f3),
                                TypeCode::fun(b, f3),
                                TypeCode::fun(f3, b),
                                TypeCode::fun(TypeCode::empty(), b)};
    // frozen: 0 1 2 3 5 6 9 8 1
    const std::vector<std::uint64_t> frozen{0, 1, 2, 3, 5, 6, 9, 8, 1};
    for (std::size_t i = 0; i < codes.size(); ++i) {
        CAPTURE(codes[i].to_string());
        CHECK(card_oracle(codes[i]) == frozen[i]);
        CHECK(*cardinality(codes[i]) == frozen[i]);
        CHECK(enumerate(codes[i]).size() == frozen[i]);
    }
}

TEST_CASE("every enumerated value checks against its code and values are distinct") {
    TypeCode c = TypeCode::fun(TypeCode::boolean(), TypeCode::sum(TypeCode::unit(), TypeCode::boolean()));
    auto xs = enumerate(c);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(check(c, xs[i]));
        for (std::size_t j = i + 1; j < xs.size(); ++j) CHECK_FALSE(value_eq(c, xs[i], xs[j]));
    }
    CHECK_FALSE(check(TypeCode::boolean(), Value::fin(0)));
    CHECK_FALSE(check(TypeCode::fin(2), Value::fin(2)));
}

TEST_CASE("opaque codes are not enumerable and compare through the registry") {
    TypeCode nat = TypeCode::opaque("nat");
    CHECK_FALSE(is_enumerable(nat));
    CHECK_FALSE(cardinality(nat).has_value());
    CHECK_THROWS_AS(enumerate(nat), NotEnumerable);
    CHECK(value_eq(nat, Value::opaque("nat", 3), Value::opaque("nat", 3)));
    CHECK_FALSE(value_eq(nat, Value::opaque("nat", 3), Value::opaque("nat", 4)));
    CHECK_THROWS_AS(value_eq(TypeCode::opaque("no-such-type"), Value::opaque("x", 1), Value::opaque("x", 1)),
                    NoComparator);
}

TEST_CASE("tables are canonical and reject duplicate keys") {
    Value t1 = Value::table({{Value::boolean(true), Value::fin(1)}, {Value::boolean(false), Value::fin(0)}});
    Value t2 = Value::table({{Value::boolean(false), Value::fin(0)}, {Value::boolean(true), Value::fin(1)}});
    CHECK(t1 == t2);
    CHECK(t1.apply(Value::boolean(true)) == Value::fin(1));
    CHECK_THROWS_AS(Value::table({{Value::unit(), Value::unit()}, {Value::unit(), Value::unit()}}), TypeMismatch);
    CHECK_THROWS_AS(t1.apply(Value::fin(7)), TypeMismatch);
}

TEST_CASE("listed codes sort and deduplicate members") {
    TypeCode l = TypeCode::listed("L", {Value::fin(2), Value::fin(0), Value::fin(2)});
    CHECK(*cardinality(l) == 2);
    CHECK(check(l, Value::fin(0)));
    CHECK_FALSE(check(l, Value::fin(1)));
}

TEST_CASE("dependent enumeration, first key most significant") {
    auto xs = enumerate_dependent({{Value::fin(0), TypeCode::boolean()}, {Value::fin(1), TypeCode::fin(3)}});
    REQUIRE(xs.size() == 6);
    CHECK(xs[0].apply(Value::fin(0)) == Value::boolean(false));
    CHECK(xs[0].apply(Value::fin(1)) == Value::fin(0));
    CHECK(xs[1].apply(Value::fin(1)) == Value::fin(1));
    CHECK(xs[3].apply(Value::fin(0)) == Value::boolean(true));
}

TEST_CASE("closures are not comparable") {
    Value f = Value::func([](const Value& x) { return x; });
    Value g = Value::func([](const Value& x) { return x; });
    CHECK_THROWS_AS(compare(f, g), TypeMismatch);
}
