#include "comodule/pcont.hpp"

namespace comodule {

PropContainer PropContainer::make(TypeCode shapes, const std::vector<bool>& truth) {
    auto xs = enumerate(shapes);
    if (xs.size() != truth.size()) throw TypeMismatch("predicate table of the wrong length for " + shapes.to_string());
    std::vector<std::pair<Value, Value>> es;
    for (std::size_t i = 0; i < xs.size(); ++i) es.emplace_back(xs[i], Value::boolean(truth[i]));
    return PropContainer{std::move(shapes), Value::table(std::move(es))};
}

PropContainer PropContainer::from(TypeCode shapes, const std::function<bool(const Value&)>& p) {
    Value pred = tabulate(shapes, [&](const Value& a) { return Value::boolean(p(a)); });
    return PropContainer{std::move(shapes), std::move(pred)};
}

std::string PropContainer::describe() const { return shapes.to_string() + " ◁ᵖ " + pred.to_string(); }

Container PropContainer::as_container() const {
    std::vector<std::pair<Value, TypeCode>> table;
    for (const auto& a : elements()) table.emplace_back(a, holds(a) ? TypeCode::unit() : TypeCode::empty());
    return Container::finite(shapes, table);
}

bool morphism_check(const Value& f, const PropContainer& source, const PropContainer& target) {
    for (const auto& a : source.elements()) {
        Value b = f.apply(a);
        if (!check(target.shapes, b)) return false;
        if (target.holds(b) && !source.holds(a)) return false;
    }
    return true;
}

PropMorphism PropMorphism::make(PropContainer source, PropContainer target, Value map) {
    if (!morphism_check(map, source, target))
        throw InvalidPropMorphism(map.to_string() + " : " + source.describe() + " → " + target.describe());
    return PropMorphism{std::move(source), std::move(target), std::move(map)};
}

PropMorphism prop_identity(const PropContainer& c) {
    return PropMorphism{c, c, tabulate(c.shapes, [](const Value& a) { return a; })};
}

PropMorphism prop_compose(const PropMorphism& second, const PropMorphism& first) {
    Value m = tabulate(first.source.shapes, [&](const Value& a) { return second.at(first.at(a)); });
    return PropMorphism::make(first.source, second.target, m);
}

std::vector<PropContainer> small_prop_containers() {
    std::vector<PropContainer> out;
    for (const auto& code : {TypeCode::empty(), TypeCode::unit(), TypeCode::boolean()})
        for (const auto& pred : enumerate(TypeCode::fun(code, TypeCode::boolean())))
            out.push_back(PropContainer{code, pred});
    return out;
}

namespace {
std::vector<Value> all_maps(const TypeCode& from, const TypeCode& to, std::size_t budget) {
    auto n = cardinality(TypeCode::fun(from, to));
    if (!n || *n > budget) throw BudgetExceeded("maps " + from.to_string() + " → " + to.to_string());
    return enumerate(TypeCode::fun(from, to));
}
}  // namespace

std::optional<Value> functional_instance_reduce(const PropContainer& ap, const PropContainer& bq, std::size_t budget) {
    if (ap.shapes == bq.shapes) {
        Value id = tabulate(bq.shapes, [](const Value& b) { return b; });
        if (morphism_check(id, bq, ap)) return id;
    }
    for (auto& t : all_maps(bq.shapes, ap.shapes, budget))
        if (morphism_check(t, bq, ap)) return t;
    return std::nullopt;
}

bool instance_reducible(const PropContainer& ap, const PropContainer& bq) {
    auto as = ap.elements();
    for (const auto& b : bq.elements()) {
        bool found = false;
        for (const auto& a : as)
            if (!ap.holds(a) || bq.holds(b)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool leq(const PropContainer& x, const PropContainer& y) { return functional_instance_reduce(y, x).has_value(); }

PropContainer prop_terminal() { return PropContainer::make(TypeCode::unit(), {false}); }
PropContainer prop_initial() { return PropContainer::make(TypeCode::empty(), {}); }
PropContainer prop_top() { return PropContainer::make(TypeCode::unit(), {true}); }

PropProduct prop_product(const PropContainer& a, const PropContainer& b) {
    TypeCode shapes = TypeCode::prod(a.shapes, b.shapes);
    PropContainer obj = PropContainer::from(shapes, [&](const Value& x) { return a.holds(x.first()) || b.holds(x.second()); });
    Value p1 = tabulate(shapes, [](const Value& x) { return x.first(); });
    Value p2 = tabulate(shapes, [](const Value& x) { return x.second(); });
    return PropProduct{obj, PropMorphism::make(obj, a, p1), PropMorphism::make(obj, b, p2)};
}

PropSum prop_sum(const PropContainer& a, const PropContainer& b) {
    TypeCode shapes = TypeCode::sum(a.shapes, b.shapes);
    PropContainer obj = PropContainer::from(shapes, [&](const Value& x) {
        return x.kind() == ValueKind::Inl ? a.holds(x.payload()) : b.holds(x.payload());
    });
    Value i1 = tabulate(a.shapes, [](const Value& x) { return Value::inl(x); });
    Value i2 = tabulate(b.shapes, [](const Value& x) { return Value::inr(x); });
    return PropSum{obj, PropMorphism::make(a, obj, i1), PropMorphism::make(b, obj, i2)};
}

PropMorphism prop_pairing(const PropMorphism& f, const PropMorphism& g, const PropProduct& p) {
    Value m = tabulate(f.source.shapes, [&](const Value& c) { return Value::pair(f.at(c), g.at(c)); });
    return PropMorphism::make(f.source, p.object, m);
}

PropMorphism prop_copairing(const PropMorphism& f, const PropMorphism& g, const PropSum& s) {
    Value m = tabulate(s.object.shapes,
                       [&](const Value& x) { return x.kind() == ValueKind::Inl ? f.at(x.payload()) : g.at(x.payload()); });
    return PropMorphism::make(s.object, f.target, m);
}

bool is_isomorphism(const PropMorphism& f, const PropMorphism& g) {
    if (!morphism_check(f.map, f.source, f.target) || !morphism_check(g.map, g.source, g.target)) return false;
    for (const auto& x : f.source.elements())
        if (!value_eq(f.source.shapes, g.at(f.at(x)), x)) return false;
    for (const auto& y : g.source.elements())
        if (!value_eq(g.source.shapes, f.at(g.at(y)), y)) return false;
    return true;
}

bool check_distributive(const PropContainer& a, const PropContainer& b, const PropContainer& c) {
    PropSum bc = prop_sum(b, c);
    PropProduct lhs = prop_product(a, bc.object);
    PropProduct ab = prop_product(a, b), ac = prop_product(a, c);
    PropSum rhs = prop_sum(ab.object, ac.object);
    Value there = tabulate(lhs.object.shapes, [](const Value& x) {
        const Value& s = x.second();
        Value p = Value::pair(x.first(), s.payload());
        return s.kind() == ValueKind::Inl ? Value::inl(p) : Value::inr(p);
    });
    Value back = tabulate(rhs.object.shapes, [](const Value& y) {
        const Value& p = y.payload();
        Value s = y.kind() == ValueKind::Inl ? Value::inl(p.second()) : Value::inr(p.second());
        return Value::pair(p.first(), s);
    });
    if (!morphism_check(there, lhs.object, rhs.object) || !morphism_check(back, rhs.object, lhs.object)) return false;
    return is_isomorphism(PropMorphism{lhs.object, rhs.object, there}, PropMorphism{rhs.object, lhs.object, back});
}

// ---------------------------------------------------------------- exponentials

Value product_map(const Value& g, const PropContainer& c, const PropContainer& a) {
    return tabulate(TypeCode::prod(c.shapes, a.shapes),
                    [&](const Value& x) { return Value::pair(g.apply(x.first()), x.second()); });
}

WeakExponential weak_exponential(const PropContainer& ap, const PropContainer& bq) {
    auto as = ap.elements();
    std::vector<Value> shapes;
    for (const auto& k : enumerate(TypeCode::fun(ap.shapes, bq.shapes)))
        for (bool big_k : {false, true}) {
            bool ok = true;
            for (const auto& a : as)
                if (bq.holds(k.apply(a)) && !(ap.holds(a) || big_k)) ok = false;
            if (ok) shapes.push_back(Value::pair(k, Value::boolean(big_k)));
        }
    TypeCode code = TypeCode::listed("wexp", shapes);
    PropContainer obj = PropContainer::from(code, [&](const Value& s) {
        if (!s.second().as_bool()) return false;
        for (const auto& a : as)
            if (bq.holds(s.first().apply(a))) return true;
        return false;
    });
    PropProduct dom = prop_product(obj, ap);
    Value ev = tabulate(dom.object.shapes, [](const Value& x) { return x.first().first().apply(x.second()); });
    return WeakExponential{obj, dom.object, PropMorphism::make(dom.object, bq, ev), ap, bq};
}

PropMorphism WeakExponential::curry(const PropMorphism& f, const PropContainer& c) const {
    Value g = tabulate(c.shapes, [&](const Value& x) {
        Value k = tabulate(a.shapes, [&](const Value& y) { return f.at(Value::pair(x, y)); });
        return Value::pair(k, Value::boolean(c.holds(x)));
    });
    return PropMorphism::make(c, object, g);
}

bool decidable_check(const PropContainer&) { return true; }

PropExponential exponential_p(const PropContainer& ap, const PropContainer& bq) {
    auto as = ap.elements();
    TypeCode code = TypeCode::fun(ap.shapes, bq.shapes);
    PropContainer obj = PropContainer::from(code, [&](const Value& u) {
        for (const auto& a : as)
            if (bq.holds(u.apply(a)) && !ap.holds(a)) return true;
        return false;
    });
    PropProduct dom = prop_product(obj, ap);
    Value ev = tabulate(dom.object.shapes, [](const Value& x) { return x.first().apply(x.second()); });
    return PropExponential{obj, dom.object, PropMorphism::make(dom.object, bq, ev), ap, bq};
}

PropMorphism PropExponential::curry(const PropMorphism& f, const PropContainer& c) const {
    Value g = tabulate(c.shapes, [&](const Value& x) {
        return tabulate(a.shapes, [&](const Value& y) { return f.at(Value::pair(x, y)); });
    });
    return PropMorphism::make(c, object, g);
}

std::vector<Value> PropExponential::mediators(const PropMorphism& f, const PropContainer& c) const {
    std::vector<Value> out;
    TypeCode cxa = TypeCode::prod(c.shapes, a.shapes);
    for (auto& g : all_maps(c.shapes, object.shapes, 1'000'000)) {
        if (!morphism_check(g, c, object)) continue;
        Value gx = product_map(g, c, a);
        bool ok = true;
        for (const auto& x : enumerate(cxa))
            if (!value_eq(b.shapes, eval.at(gx.apply(x)), f.at(x))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(std::move(g));
    }
    return out;
}

bool prop_cointerpret(const PropContainer& ap) {
    for (const auto& a : ap.elements())
        if (!ap.holds(a)) return false;
    return true;
}

// ---------------------------------------------------------------- inhabited powerset

TypeCode InhabitedPowerset::apply(const TypeCode& x) const {
    return TypeCode::listed("P+", subset::all_subsets(enumerate(x), true));
}

namespace {
bool inhabited(const TypeCode& c) {
    auto n = cardinality(c);
    return !n || *n > 0;
}
}  // namespace

TypeCode PlusAlgebra::extend(const Family& p, const Value& u) const {
    for (const auto& a : subset::members(u))
        if (inhabited(p.at(a))) return TypeCode::unit();
    return TypeCode::empty();
}

std::shared_ptr<const MonadOnTypes> ppow_monad() { return std::make_shared<InhabitedPowerset>(); }
std::shared_ptr<const WeakMendlerAlgebra> plus_algebra() { return std::make_shared<PlusAlgebra>(); }

std::optional<Value> cook_plus_witness(const PropContainer& ap, const Value& u) {
    for (const auto& a : subset::members(u))
        if (ap.holds(a)) return a;
    return std::nullopt;
}

PlusComodule::PlusComodule() : monad_(induced_monad(plus_algebra())) {}

Assignment PlusComodule::cook(const Container& c, const Assignment& h) const {
    return Assignment(monad_->apply(c), Value::func(
                                            [c, h](const Value& u) {
                                                for (const auto& a : subset::members(u))
                                                    if (inhabited(c.positions(a))) {
                                                        (void)h.at(a);
                                                        return Value::unit();
                                                    }
                                                throw TypeMismatch("no witness in " + u.to_string());
                                            },
                                            "cook+"));
}

ReducibilityReport kleisli_reducibility_equiv(const PropContainer& ap, const PropContainer& bq, std::size_t budget) {
    ReducibilityReport rep;
    rep.instance_reducible = instance_reducible(ap, bq);
    Container a = ap.as_container();
    Family p = family_of(a);
    PlusAlgebra alg;
    TypeCode subsets = alg.monad().apply(ap.shapes);
    for (auto& u : all_maps(bq.shapes, subsets, budget)) {
        bool ok = true;
        for (const auto& b : bq.elements())
            if (inhabited(alg.extend(p, u.apply(b))) && !bq.holds(b)) {
                ok = false;
                break;
            }
        if (ok) {
            rep.kleisli = std::move(u);
            break;
        }
    }
    return rep;
}

}  // namespace comodule
