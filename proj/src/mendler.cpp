#include "comodule/mendler.hpp"

#include <algorithm>

namespace comodule {

Value MonadOnTypes::map(const Fn& g, const Value& m) const {
    return bind([&](const Value& x) { return unit(g(x)); }, m);
}

Value ExceptionMonad::bind(const Fn& f, const Value& m) const {
    if (m.kind() == ValueKind::Inl) return f(m.payload());
    return m;
}

// ---------------------------------------------------------------- subsets

namespace subset {

Value make(std::vector<Value> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Value::ctor("set", std::move(members));
}

const std::vector<Value>& members(const Value& s) {
    if (!s.is("set")) throw TypeMismatch("not a finite subset: " + s.to_string());
    return s.args();
}

Value singleton(const Value& v) { return Value::ctor("set", {v}); }

Value union_of(const Value& s, const Value& t) {
    std::vector<Value> all = members(s);
    all.insert(all.end(), members(t).begin(), members(t).end());
    return make(std::move(all));
}

bool contains(const Value& s, const Value& v) {
    const auto& ms = members(s);
    return std::binary_search(ms.begin(), ms.end(), v);
}

std::vector<Value> all_subsets(const std::vector<Value>& base, bool inhabited) {
    if (base.size() > 20) throw BudgetExceeded("subsets of a " + std::to_string(base.size()) + "-element code");
    std::vector<Value> out;
    for (std::uint64_t mask = inhabited ? 1 : 0; mask < (std::uint64_t{1} << base.size()); ++mask) {
        std::vector<Value> ms;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) ms.push_back(base[i]);
        out.push_back(make(std::move(ms)));
    }
    return out;
}

}  // namespace subset

TypeCode FinitePowerset::apply(const TypeCode& x) const {
    if (is_enumerable(x)) return TypeCode::listed("Pf", subset::all_subsets(enumerate(x)));
    return TypeCode::opaque("subsets", [x](int depth) { return subset::all_subsets(sample(x, depth)); });
}

Value FinitePowerset::bind(const Fn& f, const Value& m) const { return kleisli_extend_pfin(f, m); }

Value kleisli_extend_pfin(const Fn& f, const Value& s) {
    std::vector<Value> all;
    for (const auto& a : subset::members(s)) {
        Value fa = f(a);
        const auto& ms = subset::members(fa);
        all.insert(all.end(), ms.begin(), ms.end());
    }
    return subset::make(std::move(all));
}

Value restrict(const Assignment& h, const Value& s) {
    return tabulate(subset::members(s), [&](const Value& a) { return h.at(a); });
}

// ---------------------------------------------------------------- families

Family family_of(const Container& c) {
    return Family{c.shapes(), [c](const Value& a) { return c.positions(a); }, c.describe()};
}

Container container_of(const Family& f) { return Container::family(f.index, f.fiber, f.key); }

Family WeakMendlerAlgebra::extended(const Family& p) const {
    const WeakMendlerAlgebra* self = this;
    return Family{monad().apply(p.index), [self, p](const Value& m) { return self->extend(p, m); },
                  name() + "*(" + p.key + ")"};
}

// ---------------------------------------------------------------- induced monad

Container InducedMonad::apply(const Container& c) const {
    Family p = family_of(c);
    Family ps = alg_->extended(p);
    return Container::family(ps.index, ps.fiber, alg_->name() + "(" + c.describe() + ")");
}

ContainerMorphism InducedMonad::unit(const Container& c) const {
    auto alg = alg_;
    Family p = family_of(c);
    return ContainerMorphism(
        c, apply(c), [alg](const Value& a) { return alg->monad().unit(a); },
        [alg, p](const Value& a, const Value& x) { return alg->witness_i(p, a, x); }, "eta");
}

ContainerMorphism InducedMonad::extend(const ContainerMorphism& m) const {
    auto alg = alg_;
    Fn f = m.shape_fn();
    PosFn g = m.position_fn();
    TypeCode source = m.source().shapes();
    return ContainerMorphism(
        apply(m.source()), m.target(), [alg, f](const Value& mm) { return alg->monad().bind(f, mm); },
        [alg, f, g, source](const Value& mm, const Value& x) {
            return alg->act(g, mm, alg->witness_j(f, source, mm, x));
        },
        "extend");
}

std::shared_ptr<const ContainerMonad> induced_monad(std::shared_ptr<const WeakMendlerAlgebra> alg) {
    return std::make_shared<InducedMonad>(std::move(alg));
}

// ---------------------------------------------------------------- instances

namespace {
TypeCode choice_code(const std::vector<Value>& keys, const Family& p) {
    std::vector<std::pair<Value, TypeCode>> index;
    for (const auto& a : keys) index.emplace_back(a, p.at(a));
    return TypeCode::listed("choice", enumerate_dependent(index));
}
}  // namespace

TypeCode FinitePowersetAlgebra::extend(const Family& p, const Value& m) const {
    return choice_code(subset::members(m), p);
}

Value FinitePowersetAlgebra::act(const FamilyMap& h, const Value& m, const Value& x) const {
    return tabulate(subset::members(m), [&](const Value& a) { return h(a, x.apply(a)); });
}

Value FinitePowersetAlgebra::witness_j(const Fn& f, const TypeCode&, const Value& m, const Value& x) const {
    return tabulate(subset::members(m), [&](const Value& a) {
        return tabulate(subset::members(f(a)), [&](const Value& b) { return x.apply(b); });
    });
}

TypeCode TrivialAlgebra::extend(const Family& p, const Value&) const { return choice_code(enumerate(p.index), p); }

Value TrivialAlgebra::act(const FamilyMap& h, const Value&, const Value& x) const {
    std::vector<std::pair<Value, Value>> es;
    for (const auto& [a, y] : x.entries()) es.emplace_back(a, h(a, y));
    return Value::table(std::move(es));
}

Value TrivialAlgebra::witness_j(const Fn&, const TypeCode& source, const Value&, const Value& x) const {
    return tabulate(source, [&](const Value&) { return x; });
}

TypeCode ExceptionAlgebra::extend(const Family& p, const Value& m) const {
    if (m.kind() == ValueKind::Inl) return p.at(m.payload());
    return TypeCode::unit();
}

Value ExceptionAlgebra::act(const FamilyMap& h, const Value& m, const Value& x) const {
    if (m.kind() == ValueKind::Inl) return h(m.payload(), x);
    return x;
}

std::shared_ptr<const WeakMendlerAlgebra> identity_instance() { return std::make_shared<IdentityAlgebra>(); }
std::shared_ptr<const WeakMendlerAlgebra> finite_powerset_instance() {
    return std::make_shared<FinitePowersetAlgebra>();
}
std::shared_ptr<const WeakMendlerAlgebra> self_rep_instance() { return std::make_shared<TrivialAlgebra>(); }
std::shared_ptr<const WeakMendlerAlgebra> exception_instance() { return std::make_shared<ExceptionAlgebra>(); }

// ---------------------------------------------------------------- comodules

IdentityComodule::IdentityComodule() : monad_(induced_monad(identity_instance())) {}
Assignment IdentityComodule::cook(const Container& c, const Assignment& h) const {
    return Assignment(monad_->apply(c), h.function());
}

FiniteSupportComodule::FiniteSupportComodule() : monad_(induced_monad(finite_powerset_instance())) {}
Assignment FiniteSupportComodule::cook(const Container& c, const Assignment& h) const {
    return Assignment(monad_->apply(c), Value::func([h](const Value& s) { return restrict(h, s); }, "restrict"));
}

TrivialComodule::TrivialComodule() : monad_(induced_monad(self_rep_instance())) {}
Assignment TrivialComodule::cook(const Container& c, const Assignment& h) const {
    Value whole = tabulate(c.shapes(), [&](const Value& a) { return h.at(a); });
    return Assignment(monad_->apply(c), Value::table({{Value::unit(), whole}}));
}

ExceptionComodule::ExceptionComodule() : monad_(induced_monad(exception_instance())) {}
Assignment ExceptionComodule::cook(const Container& c, const Assignment& h) const {
    return Assignment(monad_->apply(c), Value::func([h](const Value& m) {
                          return m.kind() == ValueKind::Inl ? h.at(m.payload()) : Value::unit();
                      }));
}

bool check_finite_support(const Representation& r, const Assignment& h, const Assignment& h2, const Value& b) {
    Value support = r.morphism.shape(b);
    for (const auto& a : subset::members(support))
        if (!value_eq(r.domain.positions(a), h.at(a), h2.at(a))) return true;
    return value_eq(r.codomain.positions(b), evaluate_rep(r, h, b), evaluate_rep(r, h2, b));
}

}  // namespace comodule
