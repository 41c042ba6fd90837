#include "comodule/representation.hpp"

namespace comodule {

Value evaluate_rep(const Representation& r, const Assignment& h, const Value& b) {
    if (!same_container(h.container(), r.domain))
        throw TypeMismatch("argument over " + h.container().describe() + ", expected " + r.domain.describe());
    Assignment cooked = r.comodule->cook(r.domain, h);
    Value t = r.morphism.shape(b);
    const auto& m = r.morphism;
    return r.ambient().map([&](const Value& q) { return m.position(b, q); }, cooked.at(t));
}

Assignment evaluate_all(const Representation& r, const Assignment& h) {
    return cointerpret_morphism_s(r.ambient(), r.morphism, r.comodule->cook(r.domain, h));
}

FunctionalOracle oracle_of(const Representation& r) {
    return FunctionalOracle{r.domain, r.codomain, [r](const Assignment& h) { return evaluate_all(r, h); }};
}

CheckResult check_same_functional(const Ambient& s, const FunctionalOracle& f, const FunctionalOracle& g,
                                  std::size_t budget) {
    CheckResult res;
    auto shapes = enumerate(f.codomain.shapes());
    for (const auto& h : enumerate_assignments_s(s, f.domain)) {
        if (res.cases >= budget) throw BudgetExceeded("functional comparison");
        ++res.cases;
        Assignment x = f.apply(h), y = g.apply(h);
        for (const auto& b : shapes) {
            Value u = x.at(b), v = y.at(b);
            if (!s.equal(f.codomain.positions(b), u, v)) {
                res.counterexample = Mismatch{"h = " + h.describe() + ", b = " + b.to_string(), u.to_string(), v.to_string()};
                return res;
            }
        }
    }
    return res;
}

CheckResult check_represents(const Representation& r, const FunctionalOracle& f, std::size_t budget) {
    return check_same_functional(r.ambient(), f, oracle_of(r), budget);
}

Representation id_rep(std::shared_ptr<const Comodule> m, const Container& c) {
    ContainerMorphism eta = m->monad().unit(c);
    return Representation{std::move(m), c, c, eta};
}

Representation compose_reps(const Representation& g, const Representation& f) {
    if (g.comodule != f.comodule && g.comodule->name() != f.comodule->name())
        throw MonadMismatch(g.comodule->name() + " vs " + f.comodule->name());
    if (!same_container(g.domain, f.codomain))
        throw SourceTargetMismatch(g.domain.describe() + " vs " + f.codomain.describe());
    ContainerMorphism m = compose_morphisms(f.monad().extend(f.morphism), g.morphism);
    return Representation{f.comodule, f.domain, g.codomain, m};
}

FunctionalOracle functor_F(const Comodule& m, const Container& domain, const ContainerMorphism& kleisli) {
    const Comodule* cm = &m;
    return FunctionalOracle{domain, kleisli.source(), [cm, domain, kleisli](const Assignment& h) {
                                return cointerpret_morphism_s(cm->ambient(), kleisli, cm->cook(domain, h));
                            }};
}

Container rfun_terminal() { return zero_container(); }

Representation rfun_proj1(std::shared_ptr<const Comodule> m, const Container& a, const Container& b) {
    Coproduct s = coproduct(a, b);
    ContainerMorphism mor = compose_morphisms(m->monad().unit(s.object), s.inj1);
    return Representation{std::move(m), s.object, a, mor};
}

Representation rfun_proj2(std::shared_ptr<const Comodule> m, const Container& a, const Container& b) {
    Coproduct s = coproduct(a, b);
    ContainerMorphism mor = compose_morphisms(m->monad().unit(s.object), s.inj2);
    return Representation{std::move(m), s.object, b, mor};
}

Representation rfun_pair(const Representation& f, const Representation& g) {
    if (f.comodule != g.comodule && f.comodule->name() != g.comodule->name())
        throw MonadMismatch(f.comodule->name() + " vs " + g.comodule->name());
    if (!same_container(f.domain, g.domain)) throw SourceTargetMismatch("pairing needs a common domain");
    Coproduct s = coproduct(f.codomain, g.codomain);
    return Representation{f.comodule, f.domain, s.object, copairing(f.morphism, g.morphism, s)};
}

Assignment copair_assignments(const Container& sum, const Assignment& h, const Assignment& k) {
    return Assignment(sum, tabulate(sum.shapes(), [&](const Value& x) {
                          return x.kind() == ValueKind::Inl ? h.at(x.payload()) : k.at(x.payload());
                      }));
}

// ---------------------------------------------------------------- algebras

ContainerMorphism alpha_from_cook(const Comodule& m) {
    Container id = identity_container();
    Assignment unit_answer(id, Value::table({{Value::unit(), Value::unit()}}));
    Assignment k = m.cook(id, unit_answer);
    return ContainerMorphism(
        m.monad().apply(id), id, [](const Value&) { return Value::unit(); },
        [k](const Value& t, const Value&) { return k.at(t); }, "alpha");
}

std::optional<Mismatch> check_algebra(const ContainerMonad& t, const ContainerMorphism& alpha, int depth) {
    Container id = identity_container();
    if (auto mm = morphism_mismatch(compose_morphisms(alpha, t.unit(id)), identity_morphism(id)))
        return Mismatch{"unit law, " + mm->where, mm->lhs, mm->rhs};
    Container tt = t.apply(t.apply(id));
    ContainerMorphism lhs = compose_morphisms(alpha, multiplication(t, id));
    ContainerMorphism rhs = compose_morphisms(alpha, fmap(t, alpha));
    if (auto mm = morphism_mismatch(lhs, rhs, tt.sample_shapes(depth)))
        return Mismatch{"multiplication law, " + mm->where, mm->lhs, mm->rhs};
    return std::nullopt;
}

AlgebraComodule::AlgebraComodule(std::shared_ptr<const ContainerMonad> t, ContainerMorphism alpha)
    : monad_(std::move(t)), alpha_(std::move(alpha)) {}

Assignment AlgebraComodule::cook(const Container& c, const Assignment& h) const {
    ContainerMorphism to_id(
        c, identity_container(), [](const Value&) { return Value::unit(); },
        [h](const Value& a, const Value&) { return h.at(a); }, "h");
    ContainerMorphism read = compose_morphisms(alpha_, fmap(*monad_, to_id));
    return Assignment(monad_->apply(c),
                      Value::func([read](const Value& t) { return read.position(t, Value::unit()); }, "cook"));
}

std::shared_ptr<const Comodule> cook_from_alpha(std::shared_ptr<const ContainerMonad> t, const ContainerMorphism& alpha,
                                                int depth) {
    if (auto mm = check_algebra(*t, alpha, depth)) throw NotAnAlgebra(mm->to_string());
    return std::make_shared<AlgebraComodule>(std::move(t), alpha);
}

std::optional<Representation> find_representation(std::shared_ptr<const Comodule> m, const FunctionalOracle& f,
                                                  const MorphismBounds& bounds) {
    Container target = m->monad().apply(f.domain);
    for (const auto& cand : morphisms_between(f.codomain, target, bounds)) {
        Representation r{m, f.domain, f.codomain, cand};
        if (check_represents(r, f).passed()) return r;
    }
    return std::nullopt;
}

}  // namespace comodule
