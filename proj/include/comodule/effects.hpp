#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comodule/mendler.hpp"
#include "comodule/tree.hpp"

namespace comodule {

// Finite input and output alphabets of an IO scenario.
struct IoSignature {
    TypeCode inputs = TypeCode::boolean();
    TypeCode outputs = TypeCode::boolean();
    std::string describe() const;
};

// Computations: ret(v) | inp(table I → computation) | out(o, computation).
// Traces:       stop(p) | istep(i, trace) | ostep(trace).
namespace io {
Value ret(Value v);
Value inp(Value continuation);
Value out(Value o, Value rest);

Value trace_stop(Value p);
Value istep(Value i, Value rest);
Value ostep(Value rest);

Value bind(const Fn& f, const Value& c);
std::uint64_t count_computations(const TypeCode& x, const IoSignature& sig, int depth);
std::vector<Value> enumerate_computations(const TypeCode& x, const IoSignature& sig, int depth,
                                          std::size_t budget = 1'000'000);
std::vector<Value> enumerate_traces(const IoSignature& sig, const PositionFn& p, const Value& c);
bool trace_conforms(const IoSignature& sig, const PositionFn& p, const Value& c, const Value& trace);
}  // namespace io

class IoMonad : public MonadOnTypes {
public:
    explicit IoMonad(IoSignature sig = {}) : sig_(std::move(sig)) {}
    std::string name() const override { return "io"; }
    TypeCode apply(const TypeCode& x) const override;
    Value unit(const Value& x) const override { return io::ret(x); }
    Value bind(const Fn& f, const Value& m) const override { return io::bind(f, m); }
    const IoSignature& signature() const { return sig_; }

private:
    IoSignature sig_;
};

// P⋆ c = traces of c ending in positions of P.
class IoAlgebra : public WeakMendlerAlgebra {
public:
    explicit IoAlgebra(IoSignature sig = {}) : m_(std::move(sig)) {}
    std::string name() const override { return "io"; }
    const MonadOnTypes& monad() const override { return m_; }
    TypeCode extend(const Family& p, const Value& c) const override;
    Value act(const FamilyMap& h, const Value& c, const Value& trace) const override;
    Value witness_i(const Family& p, const Value& a, const Value& trace) const override;
    Value witness_j(const Fn& f, const TypeCode& source, const Value& c, const Value& trace) const override;
    const IoSignature& signature() const { return m_.signature(); }

private:
    IoMonad m_;
};

std::shared_ptr<const WeakMendlerAlgebra> io_mendler_algebra(IoSignature sig = {});

// St_R X = R → R × X, with values stored as tables over R.
class StateMonad : public MonadOnTypes {
public:
    explicit StateMonad(TypeCode state) : state_(std::move(state)) {}
    std::string name() const override { return "state(" + state_.to_string() + ")"; }
    TypeCode apply(const TypeCode& x) const override;
    Value unit(const Value& x) const override;
    Value bind(const Fn& f, const Value& m) const override;
    Value map(const Fn& g, const Value& m) const override;
    const TypeCode& state() const { return state_; }

private:
    TypeCode state_;
};

// A stateful IO runner: co_inp : R → R × I, co_out : R × O → R.
struct Runner {
    TypeCode state;
    Value co_inp;   // table r ↦ (r', i)
    Value co_out;   // table (r, o) ↦ r'
    Value initial;
    std::pair<Value, Value> read(const Value& r) const;
    Value write(const Value& r, const Value& o) const;
    std::string describe() const;
};

std::vector<Runner> enumerate_runners(const IoSignature& sig, const TypeCode& state);
// R = I = O, co_inp r = (r, r), co_out(r, o) = o
Runner echo_runner(const TypeCode& alphabet);

// (final state, returned value)
std::pair<Value, Value> run(const Runner& rn, const Value& c, const Value& r);
// ρ c as a state-monad value (table over R).
Value rho(const Runner& rn, const Value& c);

// ρ(ret v) = η v and ρ(c >>= f) = ρ c >>= ρ ∘ f on the given computations
// and Kleisli maps.
CheckResult check_rho_monad_morphism(const Runner& rn, const TypeCode& x, const std::vector<Value>& computations,
                                  const std::vector<Value>& kleisli_tables);

// Computations, Kleisli maps and their binds, shared across many runners.
struct RhoProbe {
    TypeCode x;
    std::vector<Value> computations, kleisli_tables;
    std::vector<std::vector<Value>> bound;  // bound[c][f] = c >>= f
};
RhoProbe make_rho_probe(const TypeCode& x, std::vector<Value> computations, std::vector<Value> kleisli_tables);
CheckResult check_rho_monad_morphism(const Runner& rn, const RhoProbe& probe);

// Stateful comodule over the IO-induced monad: runs the computation with the
// runner and consults h at the returned value.
class IoStateComodule : public Comodule {
public:
    IoStateComodule(IoSignature sig, Runner rn);
    std::string name() const override { return "io-state"; }
    const ContainerMonad& monad() const override { return *monad_; }
    const Ambient& ambient() const override { return state_; }
    Assignment cook(const Container& c, const Assignment& h) const override;
    const Runner& runner() const { return runner_; }

    // (r, computation) ↦ (r'', trace)
    virtual Value cook_at(const Assignment& h, const Value& c, const Value& r) const;

protected:
    std::shared_ptr<const ContainerMonad> monad_;
    StateMonad state_;
    Runner runner_;
};

// Trees interleaving queries with IO: leaf | node(a, ch) | inp(ch over I) |
// out(o, t); paths stop | step(p, π) | istep(i, π) | ostep(π).
namespace iotree {
Value leaf();
Value node(Value a, Value children);
Value inp(Value children);
Value out(Value o, Value rest);
Value stop();
Value step(Value p, Value rest);
Value istep(Value i, Value rest);
Value ostep(Value rest);

std::vector<Value> enumerate_trees(const Container& c, const IoSignature& sig, int depth,
                                   std::size_t budget = 1'000'000);
std::vector<Value> enumerate_paths(const Value& t);
Value graft(const Value& t, const Fn& u);
Value pfst(const Value& t, const Value& composite);
Value psnd(const Value& t, const Value& composite);
}  // namespace iotree

class CombinedTreeMonad : public ContainerMonad {
public:
    explicit CombinedTreeMonad(IoSignature sig = {}) : sig_(std::move(sig)) {}
    std::string name() const override { return "io-tree"; }
    Container apply(const Container& c) const override;
    ContainerMorphism unit(const Container& c) const override;
    ContainerMorphism extend(const ContainerMorphism& m) const override;
    const IoSignature& signature() const { return sig_; }

private:
    IoSignature sig_;
};

std::shared_ptr<const ContainerMonad> combined_tree_monad(IoSignature sig = {});

// The four-clause stateful cook over combined trees.
class IoTreeStateComodule : public Comodule {
public:
    IoTreeStateComodule(IoSignature sig, Runner rn);
    std::string name() const override { return "io-tree-state"; }
    const ContainerMonad& monad() const override { return *monad_; }
    const Ambient& ambient() const override { return state_; }
    Assignment cook(const Container& c, const Assignment& h) const override;
    Value cook_at(const Assignment& h, const Value& t, const Value& r) const;

private:
    std::shared_ptr<const ContainerMonad> monad_;
    StateMonad state_;
    Runner runner_;
};

// Tree comodule over S-valued arguments: effects come from h only.
class PureTreeComodule : public Comodule {
public:
    explicit PureTreeComodule(std::shared_ptr<const MonadOnTypes> s);
    std::string name() const override { return "pure-" + s_->name(); }
    const ContainerMonad& monad() const override { return *monad_; }
    const Ambient& ambient() const override { return *s_; }
    Assignment cook(const Container& c, const Assignment& h) const override;
    Value cook_at(const Assignment& h, const Value& t) const;
    const MonadOnTypes& effect() const { return *s_; }

private:
    std::shared_ptr<const MonadOnTypes> s_;
    std::shared_ptr<const ContainerMonad> monad_;
};

// (final state, value) of a stateful evaluation from an initial state.
std::pair<Value, Value> evaluate_rep_s(const Representation& r, const Assignment& h, const Value& b,
                                       const Value& initial);

struct MonadMorphism {
    std::string name;
    std::shared_ptr<const MonadOnTypes> source, target;
    Fn apply;
};

MonadMorphism identity_theta(std::shared_ptr<const MonadOnTypes> s);
MonadMorphism eta_into_exception();
MonadMorphism eta_into_state(const TypeCode& state);

// Monad-morphism laws on values of the given codes.
std::optional<Mismatch> check_monad_morphism(const MonadMorphism& theta, const std::vector<TypeCode>& codes);

// ⟨⟨T C⟩⟩_θ ∘ cook_S = cook_S' ∘ ⟨⟨C⟩⟩_θ on all S-assignments and trees of
// the given depth, plus the outer square for every representation
// morphism D → T C built from depth-≤1 trees. Throws NotAMonadMorphism.
struct NotAMonadMorphism : std::runtime_error {
    explicit NotAMonadMorphism(const std::string& w) : std::runtime_error("not a monad morphism: " + w) {}
};
CheckResult check_comodule_morphism_square(const MonadMorphism& theta, const Container& c, int depth,
                                        const std::vector<Container>& codomains = {});

}  // namespace comodule
