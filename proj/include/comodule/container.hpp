#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "comodule/universe.hpp"

namespace comodule {

struct SourceTargetMismatch : std::runtime_error {
    explicit SourceTargetMismatch(const std::string& what) : std::runtime_error("source/target mismatch: " + what) {}
};

using PositionFn = std::function<TypeCode(const Value&)>;

// Shapes A with a family of position types P a.
class Container {
public:
    Container();  // the empty container (Empty shapes)

    // Finite shapes with an explicit position table.
    static Container finite(TypeCode shapes, const std::vector<std::pair<Value, TypeCode>>& table);
    static Container constant(TypeCode shapes, TypeCode positions);
    // Shapes given by a position-family function. `key` identifies the family
    // for structural comparison when the shapes cannot be enumerated.
    static Container family(TypeCode shapes, PositionFn positions, std::string key);

    const TypeCode& shapes() const { return shapes_; }
    TypeCode positions(const Value& a) const;
    const std::string& key() const { return key_; }

    bool shapes_enumerable() const;
    // Shapes enumerable and every position type enumerable.
    bool is_finite() const;
    // All shapes when enumerable, otherwise the opaque sampler at `depth`.
    std::vector<Value> sample_shapes(int depth) const;

    std::string describe() const;

private:
    TypeCode shapes_;
    std::shared_ptr<const std::vector<std::pair<Value, TypeCode>>> table_;
    PositionFn fn_;
    std::string key_;
};

bool same_container(const Container& c, const Container& d);

Container unit_container();     // Unit ◁ Empty, terminal
Container zero_container();     // Empty ◁ Empty, initial
Container identity_container(); // Unit ◁ Unit

using ShapeFn = std::function<Value(const Value&)>;
using PosFn = std::function<Value(const Value& a, const Value& q)>;

// A forward shape map and a backward position map.
class ContainerMorphism {
public:
    ContainerMorphism(Container source, Container target, ShapeFn shape, PosFn position, std::string label = {});

    const Container& source() const { return source_; }
    const Container& target() const { return target_; }
    Value shape(const Value& a) const { return shape_(a); }
    Value position(const Value& a, const Value& q) const { return position_(a, q); }
    const ShapeFn& shape_fn() const { return shape_; }
    const PosFn& position_fn() const { return position_; }
    const std::string& label() const { return label_; }

    // Materializes the maps as tables over the given shapes (or all shapes).
    std::string describe(const std::vector<Value>& shapes) const;

private:
    Container source_, target_;
    ShapeFn shape_;
    PosFn position_;
    std::string label_;
};

ContainerMorphism identity_morphism(const Container& c);
ContainerMorphism compose_morphisms(const ContainerMorphism& second, const ContainerMorphism& first);
// Builds a morphism from tables: shape table a ↦ b and per-shape position
// tables a ↦ (q ↦ p).
ContainerMorphism morphism_from_tables(const Container& source, const Container& target, const Value& shape_table,
                                       const Value& position_tables, std::string label = {});

struct Mismatch {
    std::string where;
    std::string lhs;
    std::string rhs;
    std::string to_string() const;
};

// Extensional equality on the given source shapes (every target position at
// the image shape is compared).
std::optional<Mismatch> morphism_mismatch(const ContainerMorphism& m, const ContainerMorphism& n,
                                          const std::vector<Value>& shapes);
std::optional<Mismatch> morphism_mismatch(const ContainerMorphism& m, const ContainerMorphism& n);

// An element of Π a. P a, or more generally of Π a. S(P a).
class Assignment {
public:
    Assignment(Container c, Value fn) : container_(std::move(c)), fn_(std::move(fn)) {}
    const Container& container() const { return container_; }
    const Value& function() const { return fn_; }
    Value at(const Value& a) const { return fn_.apply(a); }
    std::string describe() const;

private:
    Container container_;
    Value fn_;
};

struct Product {
    Container object;
    ContainerMorphism proj1, proj2;
};
struct Coproduct {
    Container object;
    ContainerMorphism inj1, inj2;
};

Product product(const Container& c, const Container& d);
Coproduct coproduct(const Container& c, const Container& d);
// ⟨m, n⟩ : X → C × D
ContainerMorphism pairing(const ContainerMorphism& m, const ContainerMorphism& n, const Product& p);
// [m, n] : C + D → X
ContainerMorphism copairing(const ContainerMorphism& m, const ContainerMorphism& n, const Coproduct& s);

struct Exponential {
    Container object;          // C ⇒ D
    ContainerMorphism eval;    // (C ⇒ D) × C → D
    Container domain;          // the product (C ⇒ D) × C
};
Exponential exponential(const Container& c, const Container& d);
// m : X × C → D  ↦  X → (C ⇒ D). `xc` must be product(X, C).object.
ContainerMorphism curry(const ContainerMorphism& m, const Container& x, const Container& c, const Exponential& e);
// u : X → (C ⇒ D)  ↦  ev ∘ (u × id_C)
ContainerMorphism uncurry(const ContainerMorphism& u, const Container& x, const Container& c, const Exponential& e);

Container compose_containers(const Container& c, const Container& d);

// Σ a. (P a → X), encoded as pairs (a, table).
TypeCode interpret(const Container& c, const TypeCode& x);
Value interpret_morphism(const ContainerMorphism& m, const Value& element);

std::vector<Assignment> cointerpret_assignments(const Container& c);
// For m : C → D, maps an assignment over D to one over C.
Assignment cointerpret_morphism(const ContainerMorphism& m, const Assignment& alpha);
std::optional<Mismatch> assignment_mismatch(const Assignment& a, const Assignment& b, const std::vector<Value>& shapes);

struct MorphismBounds {
    int target_depth = 1;            // sampler depth for non-enumerable target shapes
    std::size_t limit = 1'000'000;   // throws BudgetExceeded above this count
};
std::uint64_t count_morphisms(const Container& c, const Container& d, const MorphismBounds& b = {});
std::vector<ContainerMorphism> morphisms_between(const Container& c, const Container& d, const MorphismBounds& b = {});

}  // namespace comodule
