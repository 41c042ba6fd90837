#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "comodule/monad.hpp"

namespace comodule {

struct MonadMismatch : std::runtime_error {
    explicit MonadMismatch(const std::string& what) : std::runtime_error("monad mismatch: " + what) {}
};
struct NotAnAlgebra : std::runtime_error {
    explicit NotAnAlgebra(const std::string& what) : std::runtime_error("not an algebra: " + what) {}
};

// A second-order functional ⟨⟨A◁P⟩⟩_S → ⟨⟨B◁Q⟩⟩_S presented by a morphism
// B◁Q → T(A◁P). The shape map is the tree of queries, the position map reads
// off the answer.
struct Representation {
    std::shared_ptr<const Comodule> comodule;
    Container domain;    // A◁P
    Container codomain;  // B◁Q
    ContainerMorphism morphism;

    const ContainerMonad& monad() const { return comodule->monad(); }
    const Ambient& ambient() const { return comodule->ambient(); }
};

struct FunctionalOracle {
    Container domain, codomain;
    std::function<Assignment(const Assignment&)> apply;
};

// ⟨⟨morphism⟩⟩_S (cook h) at b.
Value evaluate_rep(const Representation& r, const Assignment& h, const Value& b);
// The whole output assignment.
Assignment evaluate_all(const Representation& r, const Assignment& h);
FunctionalOracle oracle_of(const Representation& r);

struct CheckResult {
    std::size_t cases = 0;
    std::optional<Mismatch> counterexample;
    bool passed() const { return !counterexample; }
};

// Compares on every enumerated argument h and codomain shape b.
CheckResult check_represents(const Representation& r, const FunctionalOracle& f, std::size_t budget = 1'000'000);
// Compares two functionals on every enumerated argument.
CheckResult check_same_functional(const Ambient& s, const FunctionalOracle& f, const FunctionalOracle& g,
                                  std::size_t budget = 1'000'000);

Representation id_rep(std::shared_ptr<const Comodule> m, const Container& c);
// g after f, where f : A → B and g : B → C.
Representation compose_reps(const Representation& g, const Representation& f);
// The functional ⟨⟨m⟩⟩_S ∘ cook for a Kleisli map m : B → T(domain).
FunctionalOracle functor_F(const Comodule& m, const Container& domain, const ContainerMorphism& kleisli);

// Finite products of represented functionals. The product of A and B is the
// coproduct container A + B; the terminal object is the initial container.
Container rfun_terminal();
Representation rfun_proj1(std::shared_ptr<const Comodule> m, const Container& a, const Container& b);
Representation rfun_proj2(std::shared_ptr<const Comodule> m, const Container& a, const Container& b);
// f : X → A, g : X → B  ↦  X → A × B
Representation rfun_pair(const Representation& f, const Representation& g);
// The functional A × B → A whose argument is h ⊕ k (copairing of assignments).
Assignment copair_assignments(const Container& sum, const Assignment& h, const Assignment& k);

// The algebra T(Id) → Id carried by a pure comodule.
ContainerMorphism alpha_from_cook(const Comodule& m);
std::optional<Mismatch> check_algebra(const ContainerMonad& t, const ContainerMorphism& alpha, int depth);

// The comodule determined by an algebra T(Id) → Id.
class AlgebraComodule : public Comodule {
public:
    AlgebraComodule(std::shared_ptr<const ContainerMonad> t, ContainerMorphism alpha);
    std::string name() const override { return monad_->name() + "-from-algebra"; }
    const ContainerMonad& monad() const override { return *monad_; }
    Assignment cook(const Container& c, const Assignment& h) const override;

private:
    std::shared_ptr<const ContainerMonad> monad_;
    ContainerMorphism alpha_;
};

// Throws NotAnAlgebra when the unit or multiplication law fails on samples
// of the given depth.
std::shared_ptr<const Comodule> cook_from_alpha(std::shared_ptr<const ContainerMonad> t, const ContainerMorphism& alpha,
                                                int depth = 2);

// First representation in enumeration order of morphisms codomain → T(domain).
std::optional<Representation> find_representation(std::shared_ptr<const Comodule> m, const FunctionalOracle& f,
                                                  const MorphismBounds& bounds = {});

}  // namespace comodule
