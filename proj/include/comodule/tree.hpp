#pragma once

#include <string>
#include <vector>

#include "comodule/monad.hpp"

namespace comodule {

struct MalformedPath : std::runtime_error {
    explicit MalformedPath(const std::string& what) : std::runtime_error("malformed path: " + what) {}
};

namespace tree {

// Trees: leaf | node(label, children), children a table over the label's
// positions (or a closure when those positions are not enumerable).
Value leaf();
Value node(Value label, Value children);
bool is_leaf(const Value& t);
const Value& label(const Value& t);
const Value& children(const Value& t);
Value child(const Value& t, const Value& p);
// node(a, λ_. leaf)
Value single(const Container& c, const Value& a);

// Paths: stop | step(p, rest)
Value stop();
Value step(Value p, Value rest);

bool is_finite_tree(const Value& t);
std::size_t depth(const Value& t);
bool conforms(const Container& c, const Value& t, const Value& path);

Value cook_pure(const Assignment& h, const Value& t);

// Labels are drawn from the shape sampler at `label_depth` (defaults to
// `max_depth`) so that trees over trees can be sampled too.
std::uint64_t count_trees(const Container& c, int max_depth, int label_depth = -1);
std::vector<Value> enumerate_trees(const Container& c, int max_depth, std::size_t budget = 1'000'000,
                                   int label_depth = -1);
std::vector<Value> enumerate_paths(const Value& t);
// Listed code of the paths of a finite tree, Opaque("path") otherwise.
TypeCode path_code(const Value& t);

Value graft(const Value& t, const Fn& u);
Value pfst(const Value& t, const Value& composite);
Value psnd(const Value& t, const Value& composite);

}  // namespace tree

class TreeMonad : public ContainerMonad {
public:
    std::string name() const override { return "tree"; }
    Container apply(const Container& c) const override;
    ContainerMorphism unit(const Container& c) const override;
    ContainerMorphism extend(const ContainerMorphism& m) const override;

    // Splits a path through a grafted tree; the prefix through `t`.
    virtual Value first_part(const Value& t, const Value& composite) const { return tree::pfst(t, composite); }
};

class TreeComodule : public Comodule {
public:
    explicit TreeComodule(std::shared_ptr<const ContainerMonad> m = std::make_shared<TreeMonad>()) : monad_(std::move(m)) {}
    std::string name() const override { return "tree"; }
    const ContainerMonad& monad() const override { return *monad_; }
    Assignment cook(const Container& c, const Assignment& h) const override;

private:
    std::shared_ptr<const ContainerMonad> monad_;
};

}  // namespace comodule
