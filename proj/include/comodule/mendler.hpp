#pragma once

#include <memory>
#include <string>
#include <vector>

#include "comodule/monad.hpp"
#include "comodule/representation.hpp"

namespace comodule {

// A monad on the value universe in Kleisli-triple form. It doubles as an
// ambient functor through its functorial action.
class MonadOnTypes : public Ambient {
public:
    virtual Value unit(const Value& x) const = 0;
    virtual Value bind(const Fn& f, const Value& m) const = 0;
    Value map(const Fn& g, const Value& m) const override;
    // Probe values of M X; the depth bound matters only for infinite carriers.
    virtual std::vector<Value> sample_of(const TypeCode& x, int depth) const { return sample(apply(x), depth); }
};

class IdentityMonad : public MonadOnTypes {
public:
    std::string name() const override { return "identity"; }
    TypeCode apply(const TypeCode& x) const override { return x; }
    Value unit(const Value& x) const override { return x; }
    Value bind(const Fn& f, const Value& m) const override { return f(m); }
};

// M X = X + 1
class ExceptionMonad : public MonadOnTypes {
public:
    std::string name() const override { return "exception"; }
    TypeCode apply(const TypeCode& x) const override { return TypeCode::sum(x, TypeCode::unit()); }
    Value unit(const Value& x) const override { return Value::inl(x); }
    Value bind(const Fn& f, const Value& m) const override;
};

// M X = 1
class TrivialMonad : public MonadOnTypes {
public:
    std::string name() const override { return "trivial"; }
    TypeCode apply(const TypeCode&) const override { return TypeCode::unit(); }
    Value unit(const Value&) const override { return Value::unit(); }
    Value bind(const Fn&, const Value&) const override { return Value::unit(); }
};

// Finite subsets in canonical form: ctor "set" with sorted distinct members.
namespace subset {
Value make(std::vector<Value> members);
const std::vector<Value>& members(const Value& s);
Value singleton(const Value& v);
Value union_of(const Value& s, const Value& t);
bool contains(const Value& s, const Value& v);
// All subsets of the list; `inhabited` drops the empty one.
std::vector<Value> all_subsets(const std::vector<Value>& base, bool inhabited = false);
}  // namespace subset

class FinitePowerset : public MonadOnTypes {
public:
    std::string name() const override { return "finite-powerset"; }
    TypeCode apply(const TypeCode& x) const override;
    Value unit(const Value& x) const override { return subset::singleton(x); }
    Value bind(const Fn& f, const Value& m) const override;
};

// f‡ S = ⋃_{a ∈ S} f a
Value kleisli_extend_pfin(const Fn& f, const Value& s);
// The table of h on the members of S.
Value restrict(const Assignment& h, const Value& s);

// A family of types P over an index code.
struct Family {
    TypeCode index;
    PositionFn fiber;
    std::string key;
    TypeCode at(const Value& a) const { return fiber(a); }
};
Family family_of(const Container& c);
Container container_of(const Family& f);

using FamilyMap = std::function<Value(const Value& a, const Value& x)>;

// Extension P ↦ P⋆ over M A, its functorial action, and lax witnesses
// i : P⋆(η a) → P a and j : Q⋆(f† m) → (Q⋆ ∘ f)⋆ m.
class WeakMendlerAlgebra {
public:
    virtual ~WeakMendlerAlgebra() = default;
    virtual std::string name() const = 0;
    virtual const MonadOnTypes& monad() const = 0;
    virtual TypeCode extend(const Family& p, const Value& m) const = 0;
    // [h]⋆ at m
    virtual Value act(const FamilyMap& h, const Value& m, const Value& x) const = 0;
    virtual Value witness_i(const Family& p, const Value& a, const Value& x) const = 0;
    // f : A → M B, with A given by `source`
    virtual Value witness_j(const Fn& f, const TypeCode& source, const Value& m, const Value& x) const = 0;

    Family extended(const Family& p) const;
};

class InducedMonad : public ContainerMonad {
public:
    explicit InducedMonad(std::shared_ptr<const WeakMendlerAlgebra> alg) : alg_(std::move(alg)) {}
    std::string name() const override { return alg_->name(); }
    Container apply(const Container& c) const override;
    ContainerMorphism unit(const Container& c) const override;
    ContainerMorphism extend(const ContainerMorphism& m) const override;
    const WeakMendlerAlgebra& algebra() const { return *alg_; }

private:
    std::shared_ptr<const WeakMendlerAlgebra> alg_;
};

std::shared_ptr<const ContainerMonad> induced_monad(std::shared_ptr<const WeakMendlerAlgebra> alg);

class IdentityAlgebra : public WeakMendlerAlgebra {
public:
    std::string name() const override { return "identity"; }
    const MonadOnTypes& monad() const override { return m_; }
    TypeCode extend(const Family& p, const Value& m) const override { return p.at(m); }
    Value act(const FamilyMap& h, const Value& m, const Value& x) const override { return h(m, x); }
    Value witness_i(const Family&, const Value&, const Value& x) const override { return x; }
    Value witness_j(const Fn&, const TypeCode&, const Value&, const Value& x) const override { return x; }

private:
    IdentityMonad m_;
};

// P⋆ S = Π_{a ∈ S} P a
class FinitePowersetAlgebra : public WeakMendlerAlgebra {
public:
    std::string name() const override { return "finite-powerset"; }
    const MonadOnTypes& monad() const override { return m_; }
    TypeCode extend(const Family& p, const Value& m) const override;
    Value act(const FamilyMap& h, const Value& m, const Value& x) const override;
    Value witness_i(const Family&, const Value& a, const Value& x) const override { return x.apply(a); }
    Value witness_j(const Fn& f, const TypeCode& source, const Value& m, const Value& x) const override;

private:
    FinitePowerset m_;
};

// M X = 1, P⋆ ⋆ = Π a. P a
class TrivialAlgebra : public WeakMendlerAlgebra {
public:
    std::string name() const override { return "trivial"; }
    const MonadOnTypes& monad() const override { return m_; }
    TypeCode extend(const Family& p, const Value& m) const override;
    Value act(const FamilyMap& h, const Value& m, const Value& x) const override;
    Value witness_i(const Family&, const Value& a, const Value& x) const override { return x.apply(a); }
    Value witness_j(const Fn& f, const TypeCode& source, const Value& m, const Value& x) const override;

private:
    TrivialMonad m_;
};

// M X = X + 1, P⋆(inl a) = P a, P⋆(inr ⋆) = 1
class ExceptionAlgebra : public WeakMendlerAlgebra {
public:
    std::string name() const override { return "exception"; }
    const MonadOnTypes& monad() const override { return m_; }
    TypeCode extend(const Family& p, const Value& m) const override;
    Value act(const FamilyMap& h, const Value& m, const Value& x) const override;
    Value witness_i(const Family&, const Value&, const Value& x) const override { return x; }
    Value witness_j(const Fn&, const TypeCode&, const Value&, const Value& x) const override { return x; }

private:
    ExceptionMonad m_;
};

std::shared_ptr<const WeakMendlerAlgebra> identity_instance();
std::shared_ptr<const WeakMendlerAlgebra> finite_powerset_instance();
std::shared_ptr<const WeakMendlerAlgebra> self_rep_instance();
std::shared_ptr<const WeakMendlerAlgebra> exception_instance();

// Pure comodules for the induced monads above.
class IdentityComodule : public Comodule {
public:
    IdentityComodule();
    std::string name() const override { return "identity"; }
    const ContainerMonad& monad() const override { return *monad_; }
    Assignment cook(const Container& c, const Assignment& h) const override;

private:
    std::shared_ptr<const ContainerMonad> monad_;
};

// cook h S = h restricted to S
class FiniteSupportComodule : public Comodule {
public:
    FiniteSupportComodule();
    std::string name() const override { return "finite-powerset"; }
    const ContainerMonad& monad() const override { return *monad_; }
    Assignment cook(const Container& c, const Assignment& h) const override;

protected:
    std::shared_ptr<const ContainerMonad> monad_;
};

// cook h ⋆ = h
class TrivialComodule : public Comodule {
public:
    TrivialComodule();
    std::string name() const override { return "trivial"; }
    const ContainerMonad& monad() const override { return *monad_; }
    Assignment cook(const Container& c, const Assignment& h) const override;

private:
    std::shared_ptr<const ContainerMonad> monad_;
};

// cook h (inl a) = h a, cook h (inr ⋆) = ⋆
class ExceptionComodule : public Comodule {
public:
    ExceptionComodule();
    std::string name() const override { return "exception"; }
    const ContainerMonad& monad() const override { return *monad_; }
    Assignment cook(const Container& c, const Assignment& h) const override;

private:
    std::shared_ptr<const ContainerMonad> monad_;
};

// If h and h' agree on the support tree_F(b), the outputs at b agree.
bool check_finite_support(const Representation& r, const Assignment& h, const Assignment& h2, const Value& b);

}  // namespace comodule
