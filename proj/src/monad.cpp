#include "comodule/monad.hpp"

namespace comodule {

const Ambient& identity_ambient() {
    static const IdentityAmbient id;
    return id;
}

ContainerMorphism multiplication(const ContainerMonad& t, const Container& c) {
    return t.extend(identity_morphism(t.apply(c)));
}

ContainerMorphism fmap(const ContainerMonad& t, const ContainerMorphism& m) {
    return t.extend(compose_morphisms(t.unit(m.target()), m));
}

ContainerMorphism kleisli_compose(const ContainerMonad& t, const ContainerMorphism& g, const ContainerMorphism& f) {
    return compose_morphisms(t.extend(g), f);
}

Assignment cointerpret_morphism_s(const Ambient& s, const ContainerMorphism& m, const Assignment& alpha) {
    if (!same_container(alpha.container(), m.target()))
        throw TypeMismatch("assignment over " + alpha.container().describe() + " used with morphism into " +
                           m.target().describe());
    auto fn = [&s, m, alpha](const Value& c) {
        return s.map([&](const Value& q) { return m.position(c, q); }, alpha.at(m.shape(c)));
    };
    if (m.source().shapes_enumerable()) return Assignment(m.source(), tabulate(m.source().shapes(), fn));
    return Assignment(m.source(), Value::func(fn));
}

std::vector<Assignment> enumerate_assignments_s(const Ambient& s, const Container& c) {
    std::vector<std::pair<Value, TypeCode>> index;
    for (const auto& a : enumerate(c.shapes())) index.emplace_back(a, s.apply(c.positions(a)));
    std::vector<Assignment> out;
    for (auto& t : enumerate_dependent(index)) out.emplace_back(c, std::move(t));
    return out;
}

std::optional<Mismatch> assignment_mismatch_s(const Ambient& s, const Assignment& a, const Assignment& b,
                                              const std::vector<Value>& shapes) {
    for (const auto& x : shapes) {
        Value u = a.at(x), v = b.at(x);
        if (!s.equal(a.container().positions(x), u, v))
            return Mismatch{"at shape " + x.to_string(), u.to_string(), v.to_string()};
    }
    return std::nullopt;
}

}  // namespace comodule
