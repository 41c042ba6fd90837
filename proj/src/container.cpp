#include "comodule/container.hpp"

#include <algorithm>

namespace comodule {

// ---------------------------------------------------------------- Container

Container::Container()
    : shapes_(TypeCode::empty()),
      table_(std::make_shared<const std::vector<std::pair<Value, TypeCode>>>()),
      key_("Empty<|{}") {}

Container Container::finite(TypeCode shapes, const std::vector<std::pair<Value, TypeCode>>& table) {
    auto sorted = table;
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    auto keys = enumerate(shapes);
    if (keys.size() != sorted.size()) throw TypeMismatch("position table is not total on " + shapes.to_string());
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] != sorted[i].first) throw TypeMismatch("position table key " + sorted[i].first.to_string() + " is not a shape");
    Container c;
    c.shapes_ = std::move(shapes);
    c.table_ = std::make_shared<const std::vector<std::pair<Value, TypeCode>>>(std::move(sorted));
    c.key_.clear();
    c.key_ = c.describe();
    return c;
}

Container Container::constant(TypeCode shapes, TypeCode positions) {
    if (is_enumerable(shapes)) {
        std::vector<std::pair<Value, TypeCode>> t;
        for (auto& a : enumerate(shapes)) t.emplace_back(a, positions);
        return finite(std::move(shapes), t);
    }
    std::string key = shapes.to_string() + "<|const " + positions.to_string();
    return family(std::move(shapes), [positions](const Value&) { return positions; }, std::move(key));
}

Container Container::family(TypeCode shapes, PositionFn positions, std::string key) {
    Container c;
    c.shapes_ = std::move(shapes);
    c.table_.reset();
    c.fn_ = std::move(positions);
    c.key_ = std::move(key);
    return c;
}

TypeCode Container::positions(const Value& a) const {
    if (table_) {
        auto it = std::lower_bound(table_->begin(), table_->end(), a,
                                   [](const auto& e, const Value& k) { return e.first < k; });
        if (it == table_->end() || it->first != a)
            throw TypeMismatch("value " + a.to_string() + " is not a shape of " + shapes_.to_string());
        return it->second;
    }
    return fn_(a);
}

bool Container::shapes_enumerable() const { return is_enumerable(shapes_); }

bool Container::is_finite() const {
    if (!shapes_enumerable()) return false;
    if (table_) {
        for (const auto& [a, p] : *table_)
            if (!is_enumerable(p)) return false;
        return true;
    }
    for (const auto& a : enumerate(shapes_))
        if (!is_enumerable(fn_(a))) return false;
    return true;
}

std::vector<Value> Container::sample_shapes(int depth) const { return sample(shapes_, depth); }

std::string Container::describe() const {
    if (!key_.empty()) return key_;
    std::string s = shapes_.to_string() + "<|{";
    bool first = true;
    for (const auto& [a, p] : *table_) {
        if (!first) s += ", ";
        first = false;
        s += a.to_string() + ": " + p.to_string();
    }
    return s + "}";
}

bool same_container(const Container& c, const Container& d) {
    if (!c.key().empty() && c.key() == d.key()) return true;
    if (c.shapes() != d.shapes()) return false;
    if (!c.shapes_enumerable()) return false;
    for (const auto& a : enumerate(c.shapes()))
        if (c.positions(a) != d.positions(a)) return false;
    return true;
}

Container unit_container() { return Container::constant(TypeCode::unit(), TypeCode::empty()); }
Container zero_container() { return Container(); }
Container identity_container() { return Container::constant(TypeCode::unit(), TypeCode::unit()); }

// ---------------------------------------------------------------- morphisms

ContainerMorphism::ContainerMorphism(Container source, Container target, ShapeFn shape, PosFn position,
                                     std::string label)
    : source_(std::move(source)),
      target_(std::move(target)),
      shape_(std::move(shape)),
      position_(std::move(position)),
      label_(std::move(label)) {}

std::string ContainerMorphism::describe(const std::vector<Value>& shapes) const {
    std::string s = "{";
    bool first = true;
    for (const auto& a : shapes) {
        if (!first) s += "; ";
        first = false;
        Value b = shape(a);
        s += a.to_string() + " |-> " + b.to_string() + " [";
        auto qs = sample(target_.positions(b), 1);
        for (std::size_t i = 0; i < qs.size(); ++i) {
            if (i) s += ", ";
            s += qs[i].to_string() + " -> " + position(a, qs[i]).to_string();
        }
        s += "]";
    }
    return s + "}";
}

ContainerMorphism identity_morphism(const Container& c) {
    return ContainerMorphism(
        c, c, [](const Value& a) { return a; }, [](const Value&, const Value& q) { return q; }, "id");
}

ContainerMorphism compose_morphisms(const ContainerMorphism& second, const ContainerMorphism& first) {
    if (!same_container(first.target(), second.source()))
        throw SourceTargetMismatch(first.target().describe() + " vs " + second.source().describe());
    auto f = first.shape_fn();
    auto g = first.position_fn();
    auto k = second.shape_fn();
    auto l = second.position_fn();
    return ContainerMorphism(
        first.source(), second.target(), [f, k](const Value& a) { return k(f(a)); },
        [f, g, l](const Value& a, const Value& r) { return g(a, l(f(a), r)); });
}

ContainerMorphism morphism_from_tables(const Container& source, const Container& target, const Value& shape_table,
                                       const Value& position_tables, std::string label) {
    return ContainerMorphism(
        source, target, [shape_table](const Value& a) { return shape_table.apply(a); },
        [position_tables](const Value& a, const Value& q) { return position_tables.apply(a).apply(q); },
        std::move(label));
}

std::string Mismatch::to_string() const { return where + ": " + lhs + " vs " + rhs; }

std::optional<Mismatch> morphism_mismatch(const ContainerMorphism& m, const ContainerMorphism& n,
                                          const std::vector<Value>& shapes) {
    for (const auto& a : shapes) {
        Value b1 = m.shape(a);
        Value b2 = n.shape(a);
        if (!value_eq(m.target().shapes(), b1, b2))
            return Mismatch{"shape map at " + a.to_string(), b1.to_string(), b2.to_string()};
        TypeCode src = m.source().positions(a);
        for (const auto& q : sample(m.target().positions(b1), 1)) {
            Value p1 = m.position(a, q);
            Value p2 = n.position(a, q);
            if (!value_eq(src, p1, p2))
                return Mismatch{"position map at (" + a.to_string() + ", " + q.to_string() + ")", p1.to_string(),
                                p2.to_string()};
        }
    }
    return std::nullopt;
}

std::optional<Mismatch> morphism_mismatch(const ContainerMorphism& m, const ContainerMorphism& n) {
    return morphism_mismatch(m, n, m.source().sample_shapes(2));
}

std::string Assignment::describe() const {
    if (fn_.kind() == ValueKind::Table || !container_.shapes_enumerable()) return fn_.to_string();
    return tabulate(container_.shapes(), [this](const Value& a) { return fn_.apply(a); }).to_string();
}

// ---------------------------------------------------------------- products

namespace {
Container make_container(TypeCode shapes, PositionFn fn, std::string key) {
    if (is_enumerable(shapes)) {
        std::vector<std::pair<Value, TypeCode>> t;
        for (auto& a : enumerate(shapes)) t.emplace_back(a, fn(a));
        return Container::finite(std::move(shapes), t);
    }
    return Container::family(std::move(shapes), std::move(fn), std::move(key));
}
}  // namespace

Product product(const Container& c, const Container& d) {
    Container obj = make_container(
        TypeCode::prod(c.shapes(), d.shapes()),
        [c, d](const Value& ab) { return TypeCode::sum(c.positions(ab.first()), d.positions(ab.second())); },
        "(" + c.describe() + " x " + d.describe() + ")");
    ContainerMorphism p1(
        obj, c, [](const Value& ab) { return ab.first(); },
        [](const Value&, const Value& p) { return Value::inl(p); }, "proj1");
    ContainerMorphism p2(
        obj, d, [](const Value& ab) { return ab.second(); },
        [](const Value&, const Value& q) { return Value::inr(q); }, "proj2");
    return Product{obj, p1, p2};
}

Coproduct coproduct(const Container& c, const Container& d) {
    Container obj = make_container(
        TypeCode::sum(c.shapes(), d.shapes()),
        [c, d](const Value& s) {
            return s.kind() == ValueKind::Inl ? c.positions(s.payload()) : d.positions(s.payload());
        },
        "(" + c.describe() + " + " + d.describe() + ")");
    ContainerMorphism i1(
        c, obj, [](const Value& a) { return Value::inl(a); }, [](const Value&, const Value& p) { return p; }, "inj1");
    ContainerMorphism i2(
        d, obj, [](const Value& b) { return Value::inr(b); }, [](const Value&, const Value& q) { return q; }, "inj2");
    return Coproduct{obj, i1, i2};
}

ContainerMorphism pairing(const ContainerMorphism& m, const ContainerMorphism& n, const Product& p) {
    if (!same_container(m.source(), n.source())) throw SourceTargetMismatch("pairing needs a common source");
    return ContainerMorphism(
        m.source(), p.object, [m, n](const Value& x) { return Value::pair(m.shape(x), n.shape(x)); },
        [m, n](const Value& x, const Value& s) {
            return s.kind() == ValueKind::Inl ? m.position(x, s.payload()) : n.position(x, s.payload());
        },
        "pair");
}

ContainerMorphism copairing(const ContainerMorphism& m, const ContainerMorphism& n, const Coproduct& s) {
    if (!same_container(m.target(), n.target())) throw SourceTargetMismatch("copairing needs a common target");
    return ContainerMorphism(
        s.object, m.target(),
        [m, n](const Value& x) { return x.kind() == ValueKind::Inl ? m.shape(x.payload()) : n.shape(x.payload()); },
        [m, n](const Value& x, const Value& q) {
            return x.kind() == ValueKind::Inl ? m.position(x.payload(), q) : n.position(x.payload(), q);
        },
        "copair");
}

// ---------------------------------------------------------------- exponentials

Exponential exponential(const Container& c, const Container& d) {
    if (!c.is_finite() || !d.is_finite()) throw NotEnumerable("exponential needs finite containers");
    std::vector<std::pair<Value, TypeCode>> index;
    for (const auto& a : enumerate(c.shapes())) {
        std::vector<Value> options;
        TypeCode marked = TypeCode::sum(TypeCode::unit(), c.positions(a));
        for (const auto& b : enumerate(d.shapes()))
            for (const auto& t : enumerate(TypeCode::fun(d.positions(b), marked))) options.push_back(Value::pair(b, t));
        index.emplace_back(a, TypeCode::listed("choice", std::move(options)));
    }
    TypeCode shapes = TypeCode::listed("exp", enumerate_dependent(index));
    Container obj = make_container(
        shapes,
        [c, d](const Value& f) {
            std::vector<Value> ps;
            for (const auto& [a, bt] : f.entries())
                for (const auto& [q, mark] : bt.second().entries())
                    if (mark.kind() == ValueKind::Inl) ps.push_back(Value::pair(a, q));
            return TypeCode::listed("exp-pos", std::move(ps));
        },
        "");
    Product ec = product(obj, c);
    ContainerMorphism ev(
        ec.object, d, [](const Value& fa) { return fa.first().apply(fa.second()).first(); },
        [](const Value& fa, const Value& q) {
            Value mark = fa.first().apply(fa.second()).second().apply(q);
            if (mark.kind() == ValueKind::Inl) return Value::inl(Value::pair(fa.second(), q));
            return Value::inr(mark.payload());
        },
        "ev");
    return Exponential{obj, ev, ec.object};
}

ContainerMorphism curry(const ContainerMorphism& m, const Container& x, const Container& c, const Exponential& e) {
    return ContainerMorphism(
        x, e.object,
        [m, c](const Value& xv) {
            return tabulate(c.shapes(), [&](const Value& a) {
                Value xa = Value::pair(xv, a);
                Value b = m.shape(xa);
                Value marks = tabulate(m.target().positions(b), [&](const Value& q) {
                    Value p = m.position(xa, q);
                    return p.kind() == ValueKind::Inl ? Value::inl(Value::unit()) : Value::inr(p.payload());
                });
                return Value::pair(b, marks);
            });
        },
        [m](const Value& xv, const Value& aq) {
            return m.position(Value::pair(xv, aq.first()), aq.second()).payload();
        },
        "curry");
}

ContainerMorphism uncurry(const ContainerMorphism& u, const Container& x, const Container& c, const Exponential& e) {
    Container xc = product(x, c).object;
    auto ev = e.eval;
    return ContainerMorphism(
        xc, ev.target(), [u, ev](const Value& xa) { return ev.shape(Value::pair(u.shape(xa.first()), xa.second())); },
        [u, ev](const Value& xa, const Value& q) {
            Value r = ev.position(Value::pair(u.shape(xa.first()), xa.second()), q);
            if (r.kind() == ValueKind::Inl) return Value::inl(u.position(xa.first(), r.payload()));
            return r;
        },
        "uncurry");
}

// ---------------------------------------------------------------- composition

Container compose_containers(const Container& c, const Container& d) {
    std::vector<Value> shapes;
    for (const auto& a : enumerate(c.shapes()))
        for (const auto& v : enumerate(TypeCode::fun(c.positions(a), d.shapes()))) shapes.push_back(Value::pair(a, v));
    return make_container(
        TypeCode::listed("comp", std::move(shapes)),
        [c, d](const Value& av) {
            std::vector<Value> ps;
            for (const auto& [p, b] : av.second().entries())
                for (const auto& q : enumerate(d.positions(b))) ps.push_back(Value::pair(p, q));
            return TypeCode::listed("comp-pos", std::move(ps));
        },
        "");
}

TypeCode interpret(const Container& c, const TypeCode& x) {
    std::vector<Value> out;
    for (const auto& a : enumerate(c.shapes()))
        for (const auto& v : enumerate(TypeCode::fun(c.positions(a), x))) out.push_back(Value::pair(a, v));
    return TypeCode::listed("ext", std::move(out));
}

Value interpret_morphism(const ContainerMorphism& m, const Value& element) {
    const Value& a = element.first();
    const Value& v = element.second();
    Value b = m.shape(a);
    return Value::pair(b, tabulate(m.target().positions(b), [&](const Value& q) { return v.apply(m.position(a, q)); }));
}

// ---------------------------------------------------------------- cointerpretation

std::vector<Assignment> cointerpret_assignments(const Container& c) {
    std::vector<std::pair<Value, TypeCode>> index;
    for (const auto& a : enumerate(c.shapes())) index.emplace_back(a, c.positions(a));
    std::vector<Assignment> out;
    for (auto& t : enumerate_dependent(index)) out.emplace_back(c, std::move(t));
    return out;
}

Assignment cointerpret_morphism(const ContainerMorphism& m, const Assignment& alpha) {
    if (!same_container(alpha.container(), m.target()))
        throw TypeMismatch("assignment over " + alpha.container().describe() + " used with morphism into " +
                           m.target().describe());
    auto fn = [m, alpha](const Value& c) { return m.position(c, alpha.at(m.shape(c))); };
    if (m.source().shapes_enumerable()) return Assignment(m.source(), tabulate(m.source().shapes(), fn));
    return Assignment(m.source(), Value::func(fn));
}

std::optional<Mismatch> assignment_mismatch(const Assignment& a, const Assignment& b, const std::vector<Value>& shapes) {
    for (const auto& s : shapes) {
        Value x = a.at(s), y = b.at(s);
        if (!value_eq(a.container().positions(s), x, y)) return Mismatch{"at shape " + s.to_string(), x.to_string(), y.to_string()};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- enumeration of morphisms

namespace {
std::vector<std::vector<Value>> position_options(const Container& c, const Container& d, const MorphismBounds& b,
                                                 std::vector<Value>& sources) {
    sources = enumerate(c.shapes());
    auto targets = d.sample_shapes(b.target_depth);
    std::vector<std::vector<Value>> options;
    for (const auto& a : sources) {
        std::vector<Value> opts;
        TypeCode pa = c.positions(a);
        for (const auto& t : targets)
            for (auto& g : enumerate(TypeCode::fun(d.positions(t), pa))) opts.push_back(Value::pair(t, g));
        options.push_back(std::move(opts));
    }
    return options;
}
}  // namespace

std::uint64_t count_morphisms(const Container& c, const Container& d, const MorphismBounds& b) {
    auto targets = d.sample_shapes(b.target_depth);
    std::uint64_t total = 1;
    for (const auto& a : enumerate(c.shapes())) {
        std::uint64_t opts = 0;
        TypeCode pa = c.positions(a);
        for (const auto& t : targets) {
            auto n = cardinality(TypeCode::fun(d.positions(t), pa));
            if (!n) throw NotEnumerable("position maps into " + pa.to_string());
            opts += *n;
        }
        total *= opts;
        if (total > (std::uint64_t{1} << 40)) return total;
    }
    return total;
}

std::vector<ContainerMorphism> morphisms_between(const Container& c, const Container& d, const MorphismBounds& b) {
    std::uint64_t n = count_morphisms(c, d, b);
    if (n > b.limit)
        throw BudgetExceeded(std::to_string(n) + " morphisms from " + c.describe() + " to " + d.describe());
    std::vector<Value> sources;
    auto options = position_options(c, d, b, sources);
    std::vector<std::pair<Value, TypeCode>> index;
    for (std::size_t i = 0; i < sources.size(); ++i)
        index.emplace_back(sources[i], TypeCode::listed("option", options[i]));
    std::vector<ContainerMorphism> out;
    out.reserve(n);
    for (const auto& choice : enumerate_dependent(index)) {
        std::vector<std::pair<Value, Value>> shape, pos;
        for (const auto& [a, tg] : choice.entries()) {
            shape.emplace_back(a, tg.first());
            pos.emplace_back(a, tg.second());
        }
        out.push_back(morphism_from_tables(c, d, Value::table(std::move(shape)), Value::table(std::move(pos))));
    }
    return out;
}

}  // namespace comodule
