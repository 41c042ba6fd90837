#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "comodule/mendler.hpp"

namespace comodule {

// Propositions are booleans here, so excluded middle holds and every
// propositional container is decidable.
struct PropContainer {
    TypeCode shapes;
    Value pred;  // table a ↦ bool

    static PropContainer make(TypeCode shapes, const std::vector<bool>& truth);
    static PropContainer from(TypeCode shapes, const std::function<bool(const Value&)>& p);
    bool holds(const Value& a) const { return pred.apply(a).as_bool(); }
    std::vector<Value> elements() const { return enumerate(shapes); }
    std::string describe() const;
    // Positions Unit where pred holds and Empty elsewhere.
    Container as_container() const;
};

struct InvalidPropMorphism : std::runtime_error {
    explicit InvalidPropMorphism(const std::string& w) : std::runtime_error("not a propositional morphism: " + w) {}
};

// f : A → B with ∀a. Q(f a) ⇒ P a.
struct PropMorphism {
    PropContainer source, target;
    Value map;  // table A → B

    // Throws InvalidPropMorphism.
    static PropMorphism make(PropContainer source, PropContainer target, Value map);
    Value at(const Value& a) const { return map.apply(a); }
};

bool morphism_check(const Value& f, const PropContainer& source, const PropContainer& target);
PropMorphism prop_identity(const PropContainer& c);
PropMorphism prop_compose(const PropMorphism& second, const PropMorphism& first);

// All propositional containers over Empty, Unit and Bool shapes.
std::vector<PropContainer> small_prop_containers();

// t : B → A with ∀b. P(t b) ⇒ Q b. The identity when A = B and it
// qualifies, otherwise the first in enumeration order.
std::optional<Value> functional_instance_reduce(const PropContainer& ap, const PropContainer& bq,
                                                std::size_t budget = 1'000'000);
// ∀b ∃a. P a ⇒ Q b
bool instance_reducible(const PropContainer& ap, const PropContainer& bq);

// x ≤ y iff some morphism x → y exists.
bool leq(const PropContainer& x, const PropContainer& y);

PropContainer prop_terminal();  // Unit, false
PropContainer prop_initial();   // Empty
PropContainer prop_top();       // Unit, true

struct PropProduct {
    PropContainer object;  // A × B, pred P a ∨ Q b
    PropMorphism proj1, proj2;
};
struct PropSum {
    PropContainer object;  // A + B, copaired pred
    PropMorphism inj1, inj2;
};
PropProduct prop_product(const PropContainer& a, const PropContainer& b);
PropSum prop_sum(const PropContainer& a, const PropContainer& b);
PropMorphism prop_pairing(const PropMorphism& f, const PropMorphism& g, const PropProduct& p);
PropMorphism prop_copairing(const PropMorphism& f, const PropMorphism& g, const PropSum& s);

// A ×ᵖ (B +ᵖ C) ≅ A×B +ᵖ A×C through the canonical maps.
bool check_distributive(const PropContainer& a, const PropContainer& b, const PropContainer& c);
// Both maps are morphisms and mutually inverse.
bool is_isomorphism(const PropMorphism& f, const PropMorphism& g);

// Shapes (k, K) with ∀a. Q(k a) ⇒ P a ∨ K; pred (k, K) = ∃a. Q(k a) ∧ K.
struct WeakExponential {
    PropContainer object;
    PropContainer domain;  // object ×ᵖ A
    PropMorphism eval;     // domain → B
    PropContainer a, b;
    // f : C ×ᵖ A → B  ↦  C → object
    PropMorphism curry(const PropMorphism& f, const PropContainer& c) const;
};
WeakExponential weak_exponential(const PropContainer& ap, const PropContainer& bq);

bool decidable_check(const PropContainer& ap);

// Shapes A → B, pred u = ∃a. Q(u a) ∧ ¬P a.
struct PropExponential {
    PropContainer object;
    PropContainer domain;
    PropMorphism eval;
    PropContainer a, b;
    PropMorphism curry(const PropMorphism& f, const PropContainer& c) const;
    // All g : C → object with eval ∘ (g × id) = f.
    std::vector<Value> mediators(const PropMorphism& f, const PropContainer& c) const;
};
PropExponential exponential_p(const PropContainer& ap, const PropContainer& bq);

// g × id : C ×ᵖ A → E ×ᵖ A
Value product_map(const Value& g, const PropContainer& c, const PropContainer& a);

// ⟨⟨A◁ᵖP⟩⟩ = ∀a. P a
bool prop_cointerpret(const PropContainer& ap);

// 𝒫₊: inhabited finite subsets.
class InhabitedPowerset : public MonadOnTypes {
public:
    std::string name() const override { return "inhabited-powerset"; }
    TypeCode apply(const TypeCode& x) const override;
    Value unit(const Value& x) const override { return subset::singleton(x); }
    Value bind(const Fn& f, const Value& m) const override { return kleisli_extend_pfin(f, m); }
};

// P⁺ u = ∃a ∈ u. P a with Unit/Empty positions.
class PlusAlgebra : public WeakMendlerAlgebra {
public:
    std::string name() const override { return "inhabited-powerset"; }
    const MonadOnTypes& monad() const override { return m_; }
    TypeCode extend(const Family& p, const Value& u) const override;
    // proofs are irrelevant, so every witness is ⋆
    Value act(const FamilyMap&, const Value&, const Value&) const override { return Value::unit(); }
    Value witness_i(const Family&, const Value&, const Value&) const override { return Value::unit(); }
    Value witness_j(const Fn&, const TypeCode&, const Value&, const Value&) const override { return Value::unit(); }

private:
    InhabitedPowerset m_;
};

std::shared_ptr<const MonadOnTypes> ppow_monad();
std::shared_ptr<const WeakMendlerAlgebra> plus_algebra();

// First member of u where the predicate holds.
std::optional<Value> cook_plus_witness(const PropContainer& ap, const Value& u);

// cook h u = ⋆, defined when P holds everywhere.
class PlusComodule : public Comodule {
public:
    PlusComodule();
    std::string name() const override { return "inhabited-powerset"; }
    const ContainerMonad& monad() const override { return *monad_; }
    Assignment cook(const Container& c, const Assignment& h) const override;

private:
    std::shared_ptr<const ContainerMonad> monad_;
};

struct ReducibilityReport {
    bool instance_reducible = false;
    std::optional<Value> kleisli;  // b ↦ inhabited subset of A
    bool agree() const { return instance_reducible == kleisli.has_value(); }
};
ReducibilityReport kleisli_reducibility_equiv(const PropContainer& ap, const PropContainer& bq,
                                              std::size_t budget = 1'000'000);

}  // namespace comodule
