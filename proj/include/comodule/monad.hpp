#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "comodule/container.hpp"

namespace comodule {

// A functor S on the value universe. Assignments over a container C with
// respect to S are elements of Π a. S(P a).
class Ambient {
public:
    virtual ~Ambient() = default;
    virtual std::string name() const = 0;
    virtual TypeCode apply(const TypeCode& x) const = 0;
    virtual Value map(const Fn& g, const Value& sx) const = 0;
    virtual bool equal(const TypeCode& x, const Value& a, const Value& b) const { return value_eq(apply(x), a, b); }
};

class IdentityAmbient : public Ambient {
public:
    std::string name() const override { return "identity"; }
    TypeCode apply(const TypeCode& x) const override { return x; }
    Value map(const Fn& g, const Value& sx) const override { return g(sx); }
};

const Ambient& identity_ambient();

// A monad on containers in Kleisli-triple form.
class ContainerMonad {
public:
    virtual ~ContainerMonad() = default;
    virtual std::string name() const = 0;
    virtual Container apply(const Container& c) const = 0;
    virtual ContainerMorphism unit(const Container& c) const = 0;
    // m : C → T D  ↦  m† : T C → T D
    virtual ContainerMorphism extend(const ContainerMorphism& m) const = 0;
};

ContainerMorphism multiplication(const ContainerMonad& t, const Container& c);
ContainerMorphism fmap(const ContainerMonad& t, const ContainerMorphism& m);
// g ⊙ f = g† ∘ f
ContainerMorphism kleisli_compose(const ContainerMonad& t, const ContainerMorphism& g, const ContainerMorphism& f);

// The structure map of a right T-comodule on ⟨⟨−⟩⟩_S.
class Comodule {
public:
    virtual ~Comodule() = default;
    virtual std::string name() const = 0;
    virtual const ContainerMonad& monad() const = 0;
    virtual const Ambient& ambient() const { return identity_ambient(); }
    // h ∈ Π a. S(P a)  ↦  cook h ∈ Π t. S(positions of T C at t)
    virtual Assignment cook(const Container& c, const Assignment& h) const = 0;
};

// ⟨⟨m⟩⟩_S for m : C → D, taking assignments over D to assignments over C.
Assignment cointerpret_morphism_s(const Ambient& s, const ContainerMorphism& m, const Assignment& alpha);
std::vector<Assignment> enumerate_assignments_s(const Ambient& s, const Container& c);
std::optional<Mismatch> assignment_mismatch_s(const Ambient& s, const Assignment& a, const Assignment& b,
                                              const std::vector<Value>& shapes);

}  // namespace comodule
