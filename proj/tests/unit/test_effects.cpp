#include "support.hpp"

#include "comodule/demos.hpp"
#include "comodule/effects.hpp"
#include "comodule/lawcheck.hpp"

using namespace comodule;

namespace {
Value b(bool x) { return Value::boolean(x); }

// inp(x ↦ out(not x, ret x))
Value read_negate_write() {
    return io::inp(tabulate(TypeCode::boolean(), [](const Value& x) { return io::out(b(!x.as_bool()), io::ret(x)); }));
}
}  // namespace

TEST_CASE("computation counts follow the recurrence") {
    IoSignature sig;
    // oracle: C(0) = |X|, C(d) = |X| + C(d-1)^|I| + |O|·C(d-1)
    auto count = [](std::uint64_t x, std::uint64_t i, std::uint64_t o, int d) {
        std::uint64_t c = x;
        for (int k = 0; k < d; ++k) {
            std::uint64_t p = 1;
            for (std::uint64_t j = 0; j < i; ++j) p *= c;
            c = x + p + o * c;
        }
        return c;
    };
    for (int d = 0; d <= 2; ++d) {
        CAPTURE(d);
        CHECK(io::count_computations(TypeCode::boolean(), sig, d) == count(2, 2, 2, d));
        CHECK(io::enumerate_computations(TypeCode::boolean(), sig, d).size() == count(2, 2, 2, d));
    }
    // frozen: 2, 10, 122
    CHECK(count(2, 2, 2, 1) == 10);
    CHECK(count(2, 2, 2, 2) == 122);
}

TEST_CASE("bind substitutes at the returns") {
    Value c = read_negate_write();
    Fn f = [](const Value& x) { return io::out(x, io::ret(Value::unit())); };
    Value expect = io::inp(tabulate(TypeCode::boolean(), [](const Value& x) {
        return io::out(b(!x.as_bool()), io::out(x, io::ret(Value::unit())));
    }));
    CHECK(io::bind(f, c) == expect);
    CHECK(io::bind(f, io::ret(b(true))) == f(b(true)));
}

TEST_CASE("the echo runner by hand") {
    Runner rn = echo_runner(TypeCode::boolean());
    // reading yields the state, writing not x leaves not x behind
    for (bool r : {false, true}) {
        auto [fin, v] = run(rn, read_negate_write(), b(r));
        CHECK(fin == b(!r));
        CHECK(v == b(r));
    }
    CHECK(rho(rn, io::ret(b(true))) == StateMonad(TypeCode::boolean()).unit(b(true)));
}

TEST_CASE("runner enumeration size") {
    IoSignature sig;
    // (|R||I|)^|R| input tables times |R|^(|R||O|) output tables
    CHECK(enumerate_runners(sig, TypeCode::boolean()).size() == 16u * 16u);
    CHECK(enumerate_runners(sig, TypeCode::unit()).size() == 2u);
}

TEST_CASE("state monad laws over two states") {
    StateMonad m(TypeCode::boolean());
    TypeCode mx = m.apply(TypeCode::boolean());
    auto all = enumerate(mx);
    CHECK(all.size() == 16);
    Fn f = [&](const Value& x) { return m.unit(b(!x.as_bool())); };
    // g flips the state and returns its argument
    Fn g = [&](const Value& x) {
        return tabulate(TypeCode::boolean(), [&](const Value& r) { return Value::pair(b(!r.as_bool()), x); });
    };
    for (const auto& a : enumerate(TypeCode::boolean())) CHECK(value_eq(mx, m.bind(g, m.unit(a)), g(a)));
    for (const auto& v : all) {
        CHECK(value_eq(mx, m.bind([&](const Value& x) { return m.unit(x); }, v), v));
        CHECK(value_eq(mx, m.bind(g, m.bind(f, v)), m.bind([&](const Value& x) { return m.bind(g, f(x)); }, v)));
    }
}

TEST_CASE("rho is a monad morphism for every runner over two states") {
    IoSignature sig;
    auto cs = io::enumerate_computations(TypeCode::boolean(), sig, 1);
    std::vector<Value> ks;
    for (const auto& c1 : cs)
        for (std::size_t k = 0; k < cs.size(); k += 3) ks.push_back(Value::table({{b(false), c1}, {b(true), cs[k]}}));
    RhoProbe probe = make_rho_probe(TypeCode::boolean(), cs, ks);
    for (const auto& rn : enumerate_runners(sig, TypeCode::boolean())) CHECK(check_rho_monad_morphism(rn, probe).passed());
}

TEST_CASE("io-interactive demo by hand") {
    Document d = demo_document("io-interactive");
    Representation r = d.build_representation();
    Assignment h = d.argument->build();
    // From false: read gives (true, i = false), out true leaves false, h false
    // at false gives (true, p = false); value false xor false.
    // From true: read gives (false, i = true), out false leaves false, h true
    // at false gives (true, p = true); value true xor true.
    for (bool r0 : {false, true}) {
        auto [fin, v] = evaluate_rep_s(r, h, Value::unit(), b(r0));
        CHECK(fin == b(true));
        CHECK(v == b(false));
    }
}

TEST_CASE("unit maps are monad morphisms") {
    std::vector<TypeCode> codes{TypeCode::boolean(), TypeCode::fin(3)};
    CHECK_FALSE(check_monad_morphism(eta_into_exception(), codes));
    CHECK_FALSE(check_monad_morphism(eta_into_state(TypeCode::boolean()), codes));
    CHECK_FALSE(check_monad_morphism(identity_theta(std::make_shared<ExceptionMonad>()), codes));
}

TEST_CASE("comodule morphism squares") {
    Container bb = Container::constant(TypeCode::boolean(), TypeCode::boolean());
    CHECK(check_comodule_morphism_square(eta_into_exception(), bb, 1).passed());
    CHECK(check_comodule_morphism_square(eta_into_state(TypeCode::boolean()), bb, 1).passed());
}
