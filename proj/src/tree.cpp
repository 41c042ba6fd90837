#include "comodule/tree.hpp"

#include <algorithm>

namespace comodule {
namespace tree {

Value leaf() {
    static const Value l = Value::ctor("leaf");
    return l;
}
Value node(Value label, Value children) { return Value::ctor("node", {std::move(label), std::move(children)}); }
bool is_leaf(const Value& t) {
    if (t.is("leaf")) return true;
    if (t.is("node")) return false;
    throw TypeMismatch("not a tree: " + t.to_string());
}
const Value& label(const Value& t) { return t.arg(0); }
const Value& children(const Value& t) { return t.arg(1); }
Value child(const Value& t, const Value& p) { return t.arg(1).apply(p); }

Value single(const Container& c, const Value& a) {
    TypeCode pa = c.positions(a);
    if (is_enumerable(pa)) return node(a, tabulate(pa, [](const Value&) { return leaf(); }));
    return node(a, Value::func([](const Value&) { return leaf(); }, "const leaf"));
}

Value stop() {
    static const Value s = Value::ctor("stop");
    return s;
}
Value step(Value p, Value rest) { return Value::ctor("step", {std::move(p), std::move(rest)}); }

bool is_finite_tree(const Value& t) {
    if (is_leaf(t)) return true;
    const Value& ch = children(t);
    if (ch.kind() != ValueKind::Table) return false;
    return std::all_of(ch.entries().begin(), ch.entries().end(), [](const auto& e) { return is_finite_tree(e.second); });
}

std::size_t depth(const Value& t) {
    if (is_leaf(t)) return 0;
    std::size_t d = 0;
    for (const auto& [p, s] : children(t).entries()) d = std::max(d, depth(s));
    return d + 1;
}

bool conforms(const Container& c, const Value& t, const Value& path) {
    if (is_leaf(t)) return path.is("stop");
    if (!path.is("step")) return false;
    const Value& p = path.arg(0);
    if (!check(c.positions(label(t)), p)) return false;
    return conforms(c, child(t, p), path.arg(1));
}

Value cook_pure(const Assignment& h, const Value& t) {
    std::vector<Value> answers;
    Value cur = t;
    while (!is_leaf(cur)) {
        Value p = h.at(label(cur));
        answers.push_back(p);
        cur = child(cur, p);
    }
    Value path = stop();
    for (auto it = answers.rbegin(); it != answers.rend(); ++it) path = step(*it, path);
    return path;
}

std::uint64_t count_trees(const Container& c, int max_depth, int label_depth) {
    constexpr std::uint64_t cap = std::uint64_t{1} << 40;
    if (label_depth < 0) label_depth = max_depth;
    std::vector<Value> labels = max_depth > 0 ? c.sample_shapes(label_depth) : std::vector<Value>{};
    std::uint64_t prev = 1;
    for (int d = 1; d <= max_depth; ++d) {
        std::uint64_t next = 1;
        for (const auto& a : labels) {
            auto n = cardinality(c.positions(a));
            if (!n) throw NotEnumerable("tree positions");
            std::uint64_t k = 1;
            for (std::uint64_t i = 0; i < *n && k <= cap; ++i) k = prev > cap / k ? cap + 1 : k * prev;
            next += k;
            if (next > cap) return cap + 1;
        }
        prev = next;
    }
    return prev;
}

std::vector<Value> enumerate_trees(const Container& c, int max_depth, std::size_t budget, int label_depth) {
    if (label_depth < 0) label_depth = max_depth;
    std::uint64_t n = count_trees(c, max_depth, label_depth);
    if (n > budget) throw BudgetExceeded(std::to_string(n) + " trees of depth <= " + std::to_string(max_depth));
    std::vector<Value> labels = max_depth > 0 ? c.sample_shapes(label_depth) : std::vector<Value>{};
    std::vector<Value> level{leaf()};
    for (int d = 1; d <= max_depth; ++d) {
        std::vector<Value> next{leaf()};
        TypeCode sub = TypeCode::listed("tree", level);
        for (const auto& a : labels) {
            std::vector<std::pair<Value, TypeCode>> index;
            for (const auto& p : enumerate(c.positions(a))) index.emplace_back(p, sub);
            for (auto& ch : enumerate_dependent(index)) next.push_back(node(a, std::move(ch)));
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Value> enumerate_paths(const Value& t) {
    if (is_leaf(t)) return {stop()};
    const Value& ch = children(t);
    if (ch.kind() != ValueKind::Table) throw NotEnumerable("paths of a tree with closure children");
    std::vector<Value> out;
    for (const auto& [p, s] : ch.entries())
        for (auto& r : enumerate_paths(s)) out.push_back(step(p, std::move(r)));
    return out;
}

TypeCode path_code(const Value& t) {
    if (!is_finite_tree(t)) return TypeCode::opaque("path");
    return TypeCode::listed("path", enumerate_paths(t));
}

Value graft(const Value& t, const Fn& u) {
    if (is_leaf(t)) return u(stop());
    const Value& ch = children(t);
    if (ch.kind() == ValueKind::Table) {
        std::vector<std::pair<Value, Value>> es;
        es.reserve(ch.entries().size());
        for (const auto& [p, s] : ch.entries()) {
            Value pp = p;
            es.emplace_back(p, graft(s, [u, pp](const Value& r) { return u(step(pp, r)); }));
        }
        return node(label(t), Value::table(std::move(es)));
    }
    return node(label(t), Value::func([ch, u](const Value& p) {
                    return graft(ch.apply(p), [u, p](const Value& r) { return u(step(p, r)); });
                }));
}

Value pfst(const Value& t, const Value& composite) {
    if (is_leaf(t)) return stop();
    if (!composite.is("step")) throw MalformedPath(composite.to_string() + " at a node");
    const Value& p = composite.arg(0);
    return step(p, pfst(child(t, p), composite.arg(1)));
}

Value psnd(const Value& t, const Value& composite) {
    if (is_leaf(t)) return composite;
    if (!composite.is("step")) throw MalformedPath(composite.to_string() + " at a node");
    return psnd(child(t, composite.arg(0)), composite.arg(1));
}

}  // namespace tree

// ---------------------------------------------------------------- monad

Container TreeMonad::apply(const Container& c) const {
    Sampler sampler = [c](int depth) { return tree::enumerate_trees(c, depth); };
    return Container::family(TypeCode::opaque("tree", sampler), [](const Value& t) { return tree::path_code(t); },
                             "Tree(" + c.describe() + ")");
}

ContainerMorphism TreeMonad::unit(const Container& c) const {
    return ContainerMorphism(
        c, apply(c), [c](const Value& a) { return tree::single(c, a); },
        [](const Value& a, const Value& path) {
            if (!path.is("step") || !path.arg(1).is("stop"))
                throw MalformedPath(path.to_string() + " in the unit tree at " + a.to_string());
            return path.arg(0);
        },
        "eta");
}

namespace {
struct Extension : std::enable_shared_from_this<Extension> {
    ContainerMorphism m;
    const TreeMonad* monad;
    Extension(ContainerMorphism mm, const TreeMonad* t) : m(std::move(mm)), monad(t) {}

    Value shape(const Value& t) const {
        if (tree::is_leaf(t)) return tree::leaf();
        const Value& a = tree::label(t);
        Value ts = tree::children(t);
        auto self = shared_from_this();
        return tree::graft(m.shape(a), [self, a, ts](const Value& q) {
            return self->shape(ts.apply(self->m.position(a, q)));
        });
    }

    Value position(const Value& t, const Value& q) const {
        if (tree::is_leaf(t)) return tree::stop();
        const Value& a = tree::label(t);
        Value fa = m.shape(a);
        Value p = m.position(a, monad->first_part(fa, q));
        return tree::step(p, position(tree::child(t, p), tree::psnd(fa, q)));
    }
};
}  // namespace

ContainerMorphism TreeMonad::extend(const ContainerMorphism& m) const {
    // m : C → T D
    Container c = m.source();
    Container tc = apply(c);
    auto ext = std::make_shared<Extension>(m, this);
    return ContainerMorphism(
        tc, m.target(), [ext](const Value& t) { return ext->shape(t); },
        [ext](const Value& t, const Value& q) { return ext->position(t, q); }, "extend");
}

Assignment TreeComodule::cook(const Container& c, const Assignment& h) const {
    return Assignment(monad_->apply(c), Value::func([h](const Value& t) { return tree::cook_pure(h, t); }, "cook"));
}

}  // namespace comodule
