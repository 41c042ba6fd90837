#include "comodule/lawcheck.hpp"

namespace comodule {

namespace {

std::vector<Value> kleisli_tables(const TypeCode& x, const std::vector<Value>& targets) {
    return enumerate(TypeCode::fun(x, TypeCode::listed("M", targets)));
}

Fn fn_of(const Value& table) {
    return [table](const Value& a) { return table.apply(a); };
}

std::optional<Mismatch> differ(const TypeCode& code, const Value& lhs, const Value& rhs, const std::string& where) {
    if (value_eq(code, lhs, rhs)) return std::nullopt;
    return Mismatch{where, lhs.to_string(), rhs.to_string()};
}

}  // namespace

// ---------------------------------------------------------------- IO

SuiteReport io_kleisli_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "io-kleisli";
    Harness h(rep, params.budget);
    IoSignature sig;
    IoMonad io(sig);
    const TypeCode unit = TypeCode::unit(), boolean = TypeCode::boolean();

    for (const auto& x : {unit, boolean}) {
        TypeCode code = io.apply(x);
        auto targets = io::enumerate_computations(x, sig, x == unit ? 2 : 1);
        for (const auto& fv : kleisli_tables(x, targets))
            h.check("left unit", [&]() -> std::optional<Mismatch> {
                for (const auto& v : enumerate(x))
                    if (auto mm = differ(code, io.bind(fn_of(fv), io.unit(v)), fv.apply(v),
                                         "f = " + fv.to_string() + ", v = " + v.to_string()))
                        return mm;
                return std::nullopt;
            });
        for (const auto& c : io::enumerate_computations(x, sig, 3, 100'000))
            h.check("right unit", [&]() {
                return differ(code, io.bind([&](const Value& v) { return io.unit(v); }, c), c, "c = " + c.to_string());
            });
    }

    for (const auto& x : {unit, boolean}) {
        TypeCode code = io.apply(x);
        auto comps = io::enumerate_computations(x, sig, x == unit ? 3 : 2);
        auto fs = kleisli_tables(x, io::enumerate_computations(x, sig, 1));
        for (const auto& fv : fs)
            for (const auto& gv : fs)
                h.check("associativity", [&]() -> std::optional<Mismatch> {
                    Fn f = fn_of(fv), g = fn_of(gv);
                    Fn gf = [&](const Value& v) { return io.bind(g, f(v)); };
                    for (const auto& c : comps)
                        if (auto mm = differ(code, io.bind(g, io.bind(f, c)), io.bind(gf, c),
                                             "c = " + c.to_string() + ", f = " + fv.to_string() + ", g = " + gv.to_string()))
                            return mm;
                    return std::nullopt;
                });
    }
    return rep;
}

SuiteReport io_rho_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "io-rho";
    Harness h(rep, params.budget);
    IoSignature sig;
    const TypeCode boolean = TypeCode::boolean(), unit = TypeCode::unit();

    auto big_comps = io::enumerate_computations(boolean, sig, 2);
    auto all_fs = kleisli_tables(boolean, io::enumerate_computations(boolean, sig, 1));
    RhoProbe big = make_rho_probe(boolean, big_comps, all_fs);
    for (const auto& r : {unit, boolean})
        for (const auto& rn : enumerate_runners(sig, r))
            h.check("rho monad morphism (|R| <= 2)", [&]() { return check_rho_monad_morphism(rn, big).counterexample; });

    RhoProbe small = make_rho_probe(unit, io::enumerate_computations(unit, sig, 2),
                                    kleisli_tables(unit, io::enumerate_computations(unit, sig, 1)));
    for (const auto& rn : enumerate_runners(sig, TypeCode::fin(3)))
        h.check("rho monad morphism (|R| = 3)", [&]() { return check_rho_monad_morphism(rn, small).counterexample; });
    return rep;
}

SuiteReport effect_squares_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "effect-squares";
    Harness h(rep, params.budget);
    std::vector<MonadMorphism> thetas{eta_into_exception(), eta_into_state(TypeCode::boolean()),
                                      identity_theta(std::make_shared<ExceptionMonad>())};
    auto cat = default_catalog(params.max_shapes);
    std::vector<Container> codomains{identity_container(),
                                      Container::constant(TypeCode::boolean(), TypeCode::boolean())};
    for (const auto& theta : thetas)
        for (const auto& c : cat)
            h.check("square " + theta.name, [&]() {
                auto res = check_comodule_morphism_square(theta, c, params.max_depth, codomains);
                if (res.counterexample) res.counterexample->where = c.describe() + ", " + res.counterexample->where;
                return res.counterexample;
            });

    // θ(x) = inr ⋆ breaks the unit law and must be rejected
    MonadMorphism bogus{"constant-inr", std::make_shared<IdentityMonad>(), std::make_shared<ExceptionMonad>(),
                        [](const Value&) { return Value::inr(Value::unit()); }};
    h.check("rejects non-morphism", [&]() -> std::optional<Mismatch> {
        try {
            check_comodule_morphism_square(bogus, identity_container(), 1);
        } catch (const NotAMonadMorphism&) {
            return std::nullopt;
        }
        return Mismatch{"constant-inr accepted", "accepted", "NotAMonadMorphism"};
    });
    return rep;
}

// ---------------------------------------------------------------- propositional containers

SuiteReport pcont_heyting_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "pcont-heyting";
    Harness h(rep, params.budget);
    auto all = small_prop_containers();
    auto show = [](const PropContainer& p) { return p.describe(); };

    for (const auto& x : all) {
        h.check("reduction preorder reflexive", [&]() -> std::optional<Mismatch> {
            if (!leq(x, x)) return Mismatch{show(x), "not ≤", "≤"};
            if (!instance_reducible(x, x)) return Mismatch{show(x), "not instance-reducible", "reducible"};
            return std::nullopt;
        });
        h.check("decidable", [&]() -> std::optional<Mismatch> {
            if (!decidable_check(x)) return Mismatch{show(x), "undecidable", "decidable"};
            return std::nullopt;
        });
    }

    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all)
                h.check("reduction preorder transitive", [&]() -> std::optional<Mismatch> {
                    if (leq(x, y) && leq(y, z) && !leq(x, z))
                        return Mismatch{show(x) + " ≤ " + show(y) + " ≤ " + show(z), "x not ≤ z", "x ≤ z"};
                    if (instance_reducible(y, x) && instance_reducible(z, y) && !instance_reducible(z, x))
                        return Mismatch{show(x) + ", " + show(y) + ", " + show(z), "instance chain breaks", "transitive"};
                    return std::nullopt;
                });

    for (const auto& x : all)
        for (const auto& y : all) {
            PropProduct p = prop_product(x, y);
            PropSum s = prop_sum(x, y);
            for (const auto& z : all) {
                h.check("meet", [&]() -> std::optional<Mismatch> {
                    if (!leq(p.object, x) || !leq(p.object, y)) return Mismatch{show(x) + " × " + show(y), "not below", "below"};
                    bool lower = leq(z, x) && leq(z, y);
                    if (lower != leq(z, p.object))
                        return Mismatch{"z = " + show(z) + ", x = " + show(x) + ", y = " + show(y),
                                        lower ? "lower bound" : "not a lower bound", leq(z, p.object) ? "≤ x×y" : "not ≤ x×y"};
                    return std::nullopt;
                });
                h.check("join", [&]() -> std::optional<Mismatch> {
                    if (!leq(x, s.object) || !leq(y, s.object)) return Mismatch{show(x) + " + " + show(y), "not above", "above"};
                    bool upper = leq(x, z) && leq(y, z);
                    if (upper != leq(s.object, z))
                        return Mismatch{"z = " + show(z) + ", x = " + show(x) + ", y = " + show(y),
                                        upper ? "upper bound" : "not an upper bound", leq(s.object, z) ? "x+y ≤ z" : "not x+y ≤ z"};
                    return std::nullopt;
                });
                h.check("distributivity", [&]() -> std::optional<Mismatch> {
                    if (!check_distributive(x, y, z)) return Mismatch{show(x) + ", " + show(y) + ", " + show(z), "not iso", "iso"};
                    return std::nullopt;
                });
            }
        }

    for (const auto& c : all)
        for (const auto& a : all)
            for (const auto& b : all) {
                WeakExponential w = weak_exponential(a, b);
                PropProduct ca = prop_product(c, a);
                h.check("heyting adjunction", [&]() -> std::optional<Mismatch> {
                    bool lhs = leq(ca.object, b), rhs = leq(c, w.object);
                    if (lhs != rhs)
                        return Mismatch{"C = " + show(c) + ", A = " + show(a) + ", B = " + show(b),
                                        lhs ? "C×A ≤ B" : "not C×A ≤ B", rhs ? "C ≤ A⇒B" : "not C ≤ A⇒B"};
                    return std::nullopt;
                });
                h.check("weak exponential currying", [&]() -> std::optional<Mismatch> {
                    for (const auto& fv : enumerate(TypeCode::fun(ca.object.shapes, b.shapes))) {
                        if (!morphism_check(fv, ca.object, b)) continue;
                        PropMorphism f{ca.object, b, fv};
                        PropMorphism g = w.curry(f, c);
                        Value gx = product_map(g.map, c, a);
                        if (!morphism_check(gx, ca.object, w.domain))
                            return Mismatch{"f = " + fv.to_string(), "curry f × id not a morphism", "morphism"};
                        for (const auto& x : ca.object.elements())
                            if (!value_eq(b.shapes, w.eval.at(gx.apply(x)), f.at(x)))
                                return Mismatch{"f = " + fv.to_string() + ", at " + x.to_string(),
                                                w.eval.at(gx.apply(x)).to_string(), f.at(x).to_string()};
                    }
                    return std::nullopt;
                });
                PropExponential e = exponential_p(a, b);
                h.check("exponential uniqueness", [&]() -> std::optional<Mismatch> {
                    for (const auto& fv : enumerate(TypeCode::fun(ca.object.shapes, b.shapes))) {
                        if (!morphism_check(fv, ca.object, b)) continue;
                        PropMorphism f{ca.object, b, fv};
                        auto ms = e.mediators(f, c);
                        if (ms.size() != 1)
                            return Mismatch{"f = " + fv.to_string() + ", C = " + show(c), std::to_string(ms.size()) + " mediators",
                                            "1"};
                        if (!value_eq(TypeCode::fun(c.shapes, e.object.shapes), ms[0], e.curry(f, c).map))
                            return Mismatch{"f = " + fv.to_string(), ms[0].to_string(), e.curry(f, c).map.to_string()};
                    }
                    return std::nullopt;
                });
            }

    for (const auto& b : all) {
        h.check("exponential from the unit", [&]() -> std::optional<Mismatch> {
            PropContainer one = prop_terminal();
            PropExponential e = exponential_p(one, b);
            Value there = tabulate(e.object.shapes, [](const Value& u) { return u.apply(Value::unit()); });
            Value back = tabulate(b.shapes, [](const Value& y) { return Value::table({{Value::unit(), y}}); });
            if (!is_isomorphism(PropMorphism{e.object, b, there}, PropMorphism{b, e.object, back}))
                return Mismatch{show(b), "not iso", "iso"};
            return std::nullopt;
        });
        h.check("cointerpretation contravariant", [&]() -> std::optional<Mismatch> {
            for (const auto& x : all)
                for (const auto& fv : enumerate(TypeCode::fun(x.shapes, b.shapes)))
                    if (morphism_check(fv, x, b) && prop_cointerpret(b) && !prop_cointerpret(x))
                        return Mismatch{"f = " + fv.to_string() + " : " + show(x) + " → " + show(b), "⟨⟨X⟩⟩ false",
                                        "⟨⟨X⟩⟩ true"};
            return std::nullopt;
        });
    }
    return rep;
}

SuiteReport pcont_kleisli_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "pcont-kleisli";
    Harness h(rep, params.budget);
    auto all = small_prop_containers();

    for (const auto& a : all)
        for (const auto& b : all)
            h.check("reducibility via Kleisli maps", [&]() -> std::optional<Mismatch> {
                auto r = kleisli_reducibility_equiv(a, b);
                if (!r.agree())
                    return Mismatch{a.describe() + " vs " + b.describe(),
                                    r.instance_reducible ? "instance reducible" : "not instance reducible",
                                    r.kleisli ? "Kleisli map " + r.kleisli->to_string() : "no Kleisli map"};
                return std::nullopt;
            });

    InhabitedPowerset pp;
    const TypeCode three = TypeCode::fin(3);
    TypeCode code = pp.apply(three);
    auto subsets = enumerate(code);
    auto fs = enumerate(TypeCode::fun(three, code));
    for (const auto& fv : fs)
        h.check("ppow left unit", [&]() -> std::optional<Mismatch> {
            for (const auto& a : enumerate(three))
                if (auto mm = differ(code, pp.bind(fn_of(fv), pp.unit(a)), fv.apply(a), "f = " + fv.to_string()))
                    return mm;
            return std::nullopt;
        });
    for (const auto& m : subsets)
        h.check("ppow right unit", [&]() {
            return differ(code, pp.bind([&](const Value& x) { return pp.unit(x); }, m), m, "m = " + m.to_string());
        });
    auto gidx = stride(fs.size(), params.sweep);
    if (gidx.size() < fs.size())
        rep.sampled("ppow associativity second maps", gidx.size() * fs.size(), fs.size() * fs.size());
    for (const auto& fv : fs)
        for (auto gi : gidx)
            h.check("ppow associativity", [&]() -> std::optional<Mismatch> {
                Fn f = fn_of(fv), g = fn_of(fs[gi]);
                Fn gf = [&](const Value& x) { return pp.bind(g, f(x)); };
                for (const auto& m : subsets)
                    if (auto mm = differ(code, pp.bind(g, pp.bind(f, m)), pp.bind(gf, m),
                                         "f = " + fv.to_string() + ", g = " + fs[gi].to_string() + ", m = " + m.to_string()))
                        return mm;
                return std::nullopt;
            });

    PlusAlgebra alg;
    for (const auto& p : all)
        h.check("extension at a singleton", [&]() -> std::optional<Mismatch> {
            Family fam = family_of(p.as_container());
            for (const auto& a : p.elements()) {
                bool inhabited = *cardinality(alg.extend(fam, subset::singleton(a))) > 0;
                if (inhabited != p.holds(a))
                    return Mismatch{p.describe() + " at " + a.to_string(), inhabited ? "inhabited" : "empty",
                                    p.holds(a) ? "true" : "false"};
            }
            return std::nullopt;
        });

    for (const auto& p : all)
        h.check("cook+ witness", [&]() -> std::optional<Mismatch> {
            if (!prop_cointerpret(p)) return std::nullopt;
            for (const auto& u : enumerate(pp.apply(p.shapes))) {
                auto w = cook_plus_witness(p, u);
                if (!w) return Mismatch{p.describe() + ", u = " + u.to_string(), "no witness", "first member"};
                if (!value_eq(p.shapes, *w, subset::members(u).front()))
                    return Mismatch{p.describe() + ", u = " + u.to_string(), w->to_string(),
                                    subset::members(u).front().to_string()};
            }
            return std::nullopt;
        });
    return rep;
}

}  // namespace comodule
