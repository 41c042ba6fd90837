#include "comodule/effects.hpp"

#include <algorithm>

namespace comodule {

std::string IoSignature::describe() const { return "I=" + inputs.to_string() + ", O=" + outputs.to_string(); }

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? UINT64_MAX : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

std::vector<Value> probe(const TypeCode& x, int depth) { return is_enumerable(x) ? enumerate(x) : sample(x, depth); }

// All tables keys → level.
std::vector<Value> tables_into(const std::vector<Value>& keys, const std::vector<Value>& level, const char* label) {
    TypeCode sub = TypeCode::listed(label, level);
    std::vector<std::pair<Value, TypeCode>> index;
    for (const auto& k : keys) index.emplace_back(k, sub);
    return enumerate_dependent(index);
}

}  // namespace

// ---------------------------------------------------------------- IO computations

namespace io {

Value ret(Value v) { return Value::ctor("ret", {std::move(v)}); }
Value inp(Value continuation) { return Value::ctor("inp", {std::move(continuation)}); }
Value out(Value o, Value rest) { return Value::ctor("out", {std::move(o), std::move(rest)}); }

Value trace_stop(Value p) { return Value::ctor("stop", {std::move(p)}); }
Value istep(Value i, Value rest) { return Value::ctor("istep", {std::move(i), std::move(rest)}); }
Value ostep(Value rest) { return Value::ctor("ostep", {std::move(rest)}); }

Value bind(const Fn& f, const Value& c) {
    if (c.is("ret")) return f(c.arg(0));
    if (c.is("inp")) {
        std::vector<std::pair<Value, Value>> es;
        for (const auto& [i, k] : c.arg(0).entries()) es.emplace_back(i, bind(f, k));
        return inp(Value::table(std::move(es)));
    }
    if (c.is("out")) return out(c.arg(0), bind(f, c.arg(1)));
    throw TypeMismatch("not an IO computation: " + c.to_string());
}

std::uint64_t count_computations(const TypeCode& x, const IoSignature& sig, int depth) {
    std::uint64_t nx = cardinality(x).value_or(UINT64_MAX);
    std::uint64_t ni = *cardinality(sig.inputs), no = *cardinality(sig.outputs);
    std::uint64_t n = nx;
    for (int d = 1; d <= depth; ++d) n = sat_add(sat_add(nx, sat_pow(n, ni)), sat_mul(no, n));
    return n;
}

std::vector<Value> enumerate_computations(const TypeCode& x, const IoSignature& sig, int depth, std::size_t budget) {
    if (is_enumerable(x)) {
        std::uint64_t n = count_computations(x, sig, depth);
        if (n > budget) throw BudgetExceeded(std::to_string(n) + " IO computations of depth <= " + std::to_string(depth));
    }
    std::vector<Value> rets;
    for (auto& v : probe(x, depth)) rets.push_back(ret(std::move(v)));
    auto ins = enumerate(sig.inputs);
    auto outs = enumerate(sig.outputs);
    std::vector<Value> level = rets;
    for (int d = 1; d <= depth; ++d) {
        std::vector<Value> next = rets;
        for (auto& k : tables_into(ins, level, "io")) next.push_back(inp(std::move(k)));
        for (const auto& o : outs)
            for (const auto& c : level) next.push_back(out(o, c));
        if (next.size() > budget) throw BudgetExceeded("IO computations");
        level = std::move(next);
    }
    return level;
}

std::vector<Value> enumerate_traces(const IoSignature& sig, const PositionFn& p, const Value& c) {
    std::vector<Value> res;
    if (c.is("ret")) {
        for (auto& q : enumerate(p(c.arg(0)))) res.push_back(trace_stop(std::move(q)));
    } else if (c.is("inp")) {
        for (const auto& i : enumerate(sig.inputs))
            for (auto& t : enumerate_traces(sig, p, c.arg(0).apply(i))) res.push_back(istep(i, std::move(t)));
    } else if (c.is("out")) {
        for (auto& t : enumerate_traces(sig, p, c.arg(1))) res.push_back(ostep(std::move(t)));
    } else {
        throw TypeMismatch("not an IO computation: " + c.to_string());
    }
    return res;
}

bool trace_conforms(const IoSignature& sig, const PositionFn& p, const Value& c, const Value& trace) {
    if (c.is("ret")) return trace.is("stop") && trace.args().size() == 1 && check(p(c.arg(0)), trace.arg(0));
    if (c.is("inp"))
        return trace.is("istep") && check(sig.inputs, trace.arg(0)) &&
               trace_conforms(sig, p, c.arg(0).apply(trace.arg(0)), trace.arg(1));
    if (c.is("out")) return trace.is("ostep") && trace_conforms(sig, p, c.arg(1), trace.arg(0));
    return false;
}

}  // namespace io

TypeCode IoMonad::apply(const TypeCode& x) const {
    IoSignature sig = sig_;
    return TypeCode::opaque("io", [x, sig](int depth) { return io::enumerate_computations(x, sig, depth); });
}

// ---------------------------------------------------------------- IO algebra

TypeCode IoAlgebra::extend(const Family& p, const Value& c) const {
    return TypeCode::listed("trace", io::enumerate_traces(signature(), p.fiber, c));
}

Value IoAlgebra::act(const FamilyMap& h, const Value& c, const Value& trace) const {
    if (c.is("ret")) {
        if (!trace.is("stop")) throw MalformedPath(trace.to_string() + " for " + c.to_string());
        return io::trace_stop(h(c.arg(0), trace.arg(0)));
    }
    if (c.is("inp")) {
        if (!trace.is("istep")) throw MalformedPath(trace.to_string() + " for " + c.to_string());
        const Value& i = trace.arg(0);
        return io::istep(i, act(h, c.arg(0).apply(i), trace.arg(1)));
    }
    if (!trace.is("ostep")) throw MalformedPath(trace.to_string() + " for " + c.to_string());
    return io::ostep(act(h, c.arg(1), trace.arg(0)));
}

Value IoAlgebra::witness_i(const Family&, const Value& a, const Value& trace) const {
    if (!trace.is("stop")) throw MalformedPath(trace.to_string() + " over ret " + a.to_string());
    return trace.arg(0);
}

Value IoAlgebra::witness_j(const Fn& f, const TypeCode& source, const Value& c, const Value& trace) const {
    if (c.is("ret")) return io::trace_stop(trace);
    if (c.is("inp")) {
        if (!trace.is("istep")) throw MalformedPath(trace.to_string() + " for " + c.to_string());
        const Value& i = trace.arg(0);
        return io::istep(i, witness_j(f, source, c.arg(0).apply(i), trace.arg(1)));
    }
    if (!trace.is("ostep")) throw MalformedPath(trace.to_string() + " for " + c.to_string());
    return io::ostep(witness_j(f, source, c.arg(1), trace.arg(0)));
}

std::shared_ptr<const WeakMendlerAlgebra> io_mendler_algebra(IoSignature sig) {
    return std::make_shared<IoAlgebra>(std::move(sig));
}

// ---------------------------------------------------------------- state

TypeCode StateMonad::apply(const TypeCode& x) const { return TypeCode::fun(state_, TypeCode::prod(state_, x)); }

Value StateMonad::unit(const Value& x) const {
    return tabulate(state_, [&](const Value& r) { return Value::pair(r, x); });
}

Value StateMonad::bind(const Fn& f, const Value& m) const {
    return tabulate(state_, [&](const Value& r) {
        Value rx = m.apply(r);
        return f(rx.second()).apply(rx.first());
    });
}

Value StateMonad::map(const Fn& g, const Value& m) const {
    return tabulate(state_, [&](const Value& r) {
        Value rx = m.apply(r);
        return Value::pair(rx.first(), g(rx.second()));
    });
}

std::pair<Value, Value> Runner::read(const Value& r) const {
    Value ri = co_inp.apply(r);
    return {ri.first(), ri.second()};
}

Value Runner::write(const Value& r, const Value& o) const { return co_out.apply(Value::pair(r, o)); }

std::string Runner::describe() const {
    return "runner(R=" + state.to_string() + ", in=" + co_inp.to_string() + ", out=" + co_out.to_string() + ")";
}

std::vector<Runner> enumerate_runners(const IoSignature& sig, const TypeCode& state) {
    auto ins = enumerate(TypeCode::fun(state, TypeCode::prod(state, sig.inputs)));
    auto outs = enumerate(TypeCode::fun(TypeCode::prod(state, sig.outputs), state));
    Value r0 = enumerate(state).at(0);
    std::vector<Runner> res;
    res.reserve(ins.size() * outs.size());
    for (const auto& ci : ins)
        for (const auto& co : outs) res.push_back(Runner{state, ci, co, r0});
    return res;
}

Runner echo_runner(const TypeCode& alphabet) {
    Value ci = tabulate(alphabet, [](const Value& r) { return Value::pair(r, r); });
    Value co = tabulate(TypeCode::prod(alphabet, alphabet), [](const Value& ro) { return ro.second(); });
    return Runner{alphabet, ci, co, enumerate(alphabet).at(0)};
}

std::pair<Value, Value> run(const Runner& rn, const Value& c, const Value& r) {
    Value cur = c, st = r;
    for (;;) {
        if (cur.is("ret")) return {st, cur.arg(0)};
        if (cur.is("inp")) {
            auto [r2, i] = rn.read(st);
            st = r2;
            cur = cur.arg(0).apply(i);
        } else if (cur.is("out")) {
            st = rn.write(st, cur.arg(0));
            cur = cur.arg(1);
        } else {
            throw TypeMismatch("not an IO computation: " + cur.to_string());
        }
    }
}

Value rho(const Runner& rn, const Value& c) {
    return tabulate(rn.state, [&](const Value& r) {
        auto [r2, v] = run(rn, c, r);
        return Value::pair(r2, v);
    });
}

RhoProbe make_rho_probe(const TypeCode& x, std::vector<Value> computations, std::vector<Value> kleisli_tables) {
    RhoProbe p{x, std::move(computations), std::move(kleisli_tables), {}};
    for (const auto& c : p.computations) {
        auto& row = p.bound.emplace_back();
        for (const auto& f : p.kleisli_tables) row.push_back(io::bind([&](const Value& v) { return f.apply(v); }, c));
    }
    return p;
}

CheckResult check_rho_monad_morphism(const Runner& rn, const TypeCode& x, const std::vector<Value>& computations,
                                     const std::vector<Value>& kleisli_tables) {
    return check_rho_monad_morphism(rn, make_rho_probe(x, computations, kleisli_tables));
}

CheckResult check_rho_monad_morphism(const Runner& rn, const RhoProbe& probe) {
    StateMonad st(rn.state);
    TypeCode code = st.apply(probe.x);
    CheckResult res;
    for (const auto& v : enumerate(probe.x)) {
        ++res.cases;
        Value lhs = rho(rn, io::ret(v)), rhs = st.unit(v);
        if (!value_eq(code, lhs, rhs)) {
            res.counterexample = Mismatch{"unit at " + v.to_string() + ", " + rn.describe(), lhs.to_string(), rhs.to_string()};
            return res;
        }
    }
    // ρ of each Kleisli target, computed once per runner
    std::vector<Value> targets;
    std::vector<Value> rho_targets;
    auto rho_of = [&](const Value& t) {
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (compare(targets[i], t) == 0) return rho_targets[i];
        targets.push_back(t);
        rho_targets.push_back(rho(rn, t));
        return rho_targets.back();
    };
    for (std::size_t ci = 0; ci < probe.computations.size(); ++ci) {
        const Value& c = probe.computations[ci];
        Value rc = rho(rn, c);
        for (std::size_t fi = 0; fi < probe.kleisli_tables.size(); ++fi) {
            const Value& f = probe.kleisli_tables[fi];
            ++res.cases;
            Value lhs = rho(rn, probe.bound[ci][fi]);
            Value rhs = st.bind([&](const Value& v) { return rho_of(f.apply(v)); }, rc);
            if (!value_eq(code, lhs, rhs)) {
                res.counterexample = Mismatch{"bind, c = " + c.to_string() + ", f = " + f.to_string() + ", " +
                                                  rn.describe(),
                                              lhs.to_string(), rhs.to_string()};
                return res;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------- IO stateful comodule

IoStateComodule::IoStateComodule(IoSignature sig, Runner rn)
    : monad_(induced_monad(io_mendler_algebra(std::move(sig)))), state_(rn.state), runner_(std::move(rn)) {}

Assignment IoStateComodule::cook(const Container& c, const Assignment& h) const {
    const IoStateComodule* self = this;
    TypeCode r = state_.state();
    return Assignment(monad_->apply(c), Value::func(
                                            [self, h, r](const Value& comp) {
                                                return tabulate(r, [&](const Value& st) {
                                                    return self->cook_at(h, comp, st);
                                                });
                                            },
                                            "cook"));
}

Value IoStateComodule::cook_at(const Assignment& h, const Value& c, const Value& r) const {
    if (c.is("ret")) {
        Value rp = h.at(c.arg(0)).apply(r);
        return Value::pair(rp.first(), io::trace_stop(rp.second()));
    }
    if (c.is("inp")) {
        auto [r1, i] = runner_.read(r);
        Value rest = cook_at(h, c.arg(0).apply(i), r1);
        return Value::pair(rest.first(), io::istep(i, rest.second()));
    }
    if (c.is("out")) {
        Value rest = cook_at(h, c.arg(1), runner_.write(r, c.arg(0)));
        return Value::pair(rest.first(), io::ostep(rest.second()));
    }
    throw TypeMismatch("not an IO computation: " + c.to_string());
}

// ---------------------------------------------------------------- combined trees

namespace iotree {

Value leaf() { return Value::ctor("leaf"); }
Value node(Value a, Value children) { return Value::ctor("node", {std::move(a), std::move(children)}); }
Value inp(Value children) { return Value::ctor("inp", {std::move(children)}); }
Value out(Value o, Value rest) { return Value::ctor("out", {std::move(o), std::move(rest)}); }
Value stop() { return Value::ctor("stop"); }
Value step(Value p, Value rest) { return Value::ctor("step", {std::move(p), std::move(rest)}); }
Value istep(Value i, Value rest) { return Value::ctor("istep", {std::move(i), std::move(rest)}); }
Value ostep(Value rest) { return Value::ctor("ostep", {std::move(rest)}); }

namespace {
[[noreturn]] void bad_tree(const Value& t) { throw TypeMismatch("not an IO tree: " + t.to_string()); }
[[noreturn]] void bad_path(const Value& t, const Value& p) {
    throw MalformedPath(p.to_string() + " in " + t.to_string());
}

bool is_finite(const Value& t) {
    if (t.is("leaf")) return true;
    if (t.is("node") || t.is("inp")) {
        const Value& ch = t.is("node") ? t.arg(1) : t.arg(0);
        if (ch.kind() != ValueKind::Table) return false;
        for (const auto& [k, s] : ch.entries())
            if (!is_finite(s)) return false;
        return true;
    }
    if (t.is("out")) return is_finite(t.arg(1));
    bad_tree(t);
}
}  // namespace

std::vector<Value> enumerate_trees(const Container& c, const IoSignature& sig, int depth, std::size_t budget) {
    std::vector<Value> labels = depth > 0 ? c.sample_shapes(depth) : std::vector<Value>{};
    std::vector<std::uint64_t> arities;
    for (const auto& a : labels) arities.push_back(*cardinality(c.positions(a)));
    std::uint64_t ni = *cardinality(sig.inputs), no = *cardinality(sig.outputs);
    std::uint64_t n = 1;
    for (int d = 1; d <= depth; ++d) {
        std::uint64_t m = sat_add(1, sat_add(sat_pow(n, ni), sat_mul(no, n)));
        for (auto k : arities) m = sat_add(m, sat_pow(n, k));
        n = m;
    }
    if (n > budget) throw BudgetExceeded(std::to_string(n) + " IO trees of depth <= " + std::to_string(depth));

    auto ins = enumerate(sig.inputs);
    auto outs = enumerate(sig.outputs);
    std::vector<Value> level{leaf()};
    for (int d = 1; d <= depth; ++d) {
        std::vector<Value> next{leaf()};
        for (const auto& a : labels)
            for (auto& ch : tables_into(enumerate(c.positions(a)), level, "iotree")) next.push_back(node(a, std::move(ch)));
        for (auto& ch : tables_into(ins, level, "iotree")) next.push_back(inp(std::move(ch)));
        for (const auto& o : outs)
            for (const auto& t : level) next.push_back(out(o, t));
        level = std::move(next);
    }
    return level;
}

std::vector<Value> enumerate_paths(const Value& t) {
    if (t.is("leaf")) return {stop()};
    std::vector<Value> res;
    if (t.is("node") || t.is("inp")) {
        const Value& ch = t.is("node") ? t.arg(1) : t.arg(0);
        if (ch.kind() != ValueKind::Table) throw NotEnumerable("paths of an IO tree with closure children");
        for (const auto& [k, s] : ch.entries())
            for (auto& r : enumerate_paths(s)) res.push_back(t.is("node") ? step(k, std::move(r)) : istep(k, std::move(r)));
        return res;
    }
    if (t.is("out")) {
        for (auto& r : enumerate_paths(t.arg(1))) res.push_back(ostep(std::move(r)));
        return res;
    }
    bad_tree(t);
}

namespace {
Value graft_children(const Value& ch, const Fn& u, Value (*wrap)(Value, Value)) {
    if (ch.kind() == ValueKind::Table) {
        std::vector<std::pair<Value, Value>> es;
        for (const auto& [k, s] : ch.entries())
            es.emplace_back(k, graft(s, [&u, wrap, k = k](const Value& r) { return u(wrap(k, r)); }));
        return Value::table(std::move(es));
    }
    return Value::func(
        [ch, u, wrap](const Value& k) {
            return graft(ch.apply(k), [u, wrap, k](const Value& r) { return u(wrap(k, r)); });
        },
        "graft");
}
}  // namespace

Value graft(const Value& t, const Fn& u) {
    if (t.is("leaf")) return u(stop());
    if (t.is("node")) return node(t.arg(0), graft_children(t.arg(1), u, &step));
    if (t.is("inp")) return inp(graft_children(t.arg(0), u, &istep));
    if (t.is("out")) return out(t.arg(0), graft(t.arg(1), [&u](const Value& r) { return u(ostep(r)); }));
    bad_tree(t);
}

Value pfst(const Value& t, const Value& q) {
    if (t.is("leaf")) return stop();
    if (t.is("node")) {
        if (!q.is("step")) bad_path(t, q);
        return step(q.arg(0), pfst(t.arg(1).apply(q.arg(0)), q.arg(1)));
    }
    if (t.is("inp")) {
        if (!q.is("istep")) bad_path(t, q);
        return istep(q.arg(0), pfst(t.arg(0).apply(q.arg(0)), q.arg(1)));
    }
    if (t.is("out")) {
        if (!q.is("ostep")) bad_path(t, q);
        return ostep(pfst(t.arg(1), q.arg(0)));
    }
    bad_tree(t);
}

Value psnd(const Value& t, const Value& q) {
    if (t.is("leaf")) return q;
    if (t.is("node")) {
        if (!q.is("step")) bad_path(t, q);
        return psnd(t.arg(1).apply(q.arg(0)), q.arg(1));
    }
    if (t.is("inp")) {
        if (!q.is("istep")) bad_path(t, q);
        return psnd(t.arg(0).apply(q.arg(0)), q.arg(1));
    }
    if (t.is("out")) {
        if (!q.is("ostep")) bad_path(t, q);
        return psnd(t.arg(1), q.arg(0));
    }
    bad_tree(t);
}

}  // namespace iotree

Container CombinedTreeMonad::apply(const Container& c) const {
    IoSignature sig = sig_;
    Sampler sampler = [c, sig](int depth) { return iotree::enumerate_trees(c, sig, depth); };
    return Container::family(
        TypeCode::opaque("iotree", sampler),
        [](const Value& t) {
            if (!iotree::is_finite(t)) return TypeCode::opaque("iopath");
            return TypeCode::listed("iopath", iotree::enumerate_paths(t));
        },
        "IOTree[" + sig_.describe() + "](" + c.describe() + ")");
}

ContainerMorphism CombinedTreeMonad::unit(const Container& c) const {
    return ContainerMorphism(
        c, apply(c),
        [c](const Value& a) {
            return iotree::node(a, tabulate(c.positions(a), [](const Value&) { return iotree::leaf(); }));
        },
        [](const Value& a, const Value& path) {
            if (!path.is("step") || !path.arg(1).is("stop"))
                throw MalformedPath(path.to_string() + " in the unit tree at " + a.to_string());
            return path.arg(0);
        },
        "eta");
}

namespace {
struct IoExtension : std::enable_shared_from_this<IoExtension> {
    ContainerMorphism m;
    explicit IoExtension(ContainerMorphism mm) : m(std::move(mm)) {}

    Value map_children(const Value& ch) const {
        auto self = shared_from_this();
        if (ch.kind() == ValueKind::Table) {
            std::vector<std::pair<Value, Value>> es;
            for (const auto& [k, s] : ch.entries()) es.emplace_back(k, shape(s));
            return Value::table(std::move(es));
        }
        return Value::func([self, ch](const Value& k) { return self->shape(ch.apply(k)); }, "extend");
    }

    Value shape(const Value& t) const {
        if (t.is("leaf")) return iotree::leaf();
        if (t.is("inp")) return iotree::inp(map_children(t.arg(0)));
        if (t.is("out")) return iotree::out(t.arg(0), shape(t.arg(1)));
        const Value& a = t.arg(0);
        Value ts = t.arg(1);
        auto self = shared_from_this();
        return iotree::graft(m.shape(a), [self, a, ts](const Value& q) {
            return self->shape(ts.apply(self->m.position(a, q)));
        });
    }

    Value position(const Value& t, const Value& q) const {
        if (t.is("leaf")) return iotree::stop();
        if (t.is("inp")) {
            if (!q.is("istep")) throw MalformedPath(q.to_string());
            return iotree::istep(q.arg(0), position(t.arg(0).apply(q.arg(0)), q.arg(1)));
        }
        if (t.is("out")) {
            if (!q.is("ostep")) throw MalformedPath(q.to_string());
            return iotree::ostep(position(t.arg(1), q.arg(0)));
        }
        const Value& a = t.arg(0);
        Value fa = m.shape(a);
        Value p = m.position(a, iotree::pfst(fa, q));
        return iotree::step(p, position(t.arg(1).apply(p), iotree::psnd(fa, q)));
    }
};
}  // namespace

ContainerMorphism CombinedTreeMonad::extend(const ContainerMorphism& m) const {
    auto ext = std::make_shared<IoExtension>(m);
    return ContainerMorphism(
        apply(m.source()), m.target(), [ext](const Value& t) { return ext->shape(t); },
        [ext](const Value& t, const Value& q) { return ext->position(t, q); }, "extend");
}

std::shared_ptr<const ContainerMonad> combined_tree_monad(IoSignature sig) {
    return std::make_shared<CombinedTreeMonad>(std::move(sig));
}

IoTreeStateComodule::IoTreeStateComodule(IoSignature sig, Runner rn)
    : monad_(combined_tree_monad(std::move(sig))), state_(rn.state), runner_(std::move(rn)) {}

Assignment IoTreeStateComodule::cook(const Container& c, const Assignment& h) const {
    const IoTreeStateComodule* self = this;
    TypeCode r = state_.state();
    return Assignment(monad_->apply(c), Value::func(
                                            [self, h, r](const Value& t) {
                                                return tabulate(r, [&](const Value& st) { return self->cook_at(h, t, st); });
                                            },
                                            "cook"));
}

Value IoTreeStateComodule::cook_at(const Assignment& h, const Value& t, const Value& r) const {
    if (t.is("leaf")) return Value::pair(r, iotree::stop());
    if (t.is("node")) {
        Value rp = h.at(t.arg(0)).apply(r);
        const Value& p = rp.second();
        Value rest = cook_at(h, t.arg(1).apply(p), rp.first());
        return Value::pair(rest.first(), iotree::step(p, rest.second()));
    }
    if (t.is("inp")) {
        auto [r1, i] = runner_.read(r);
        Value rest = cook_at(h, t.arg(0).apply(i), r1);
        return Value::pair(rest.first(), iotree::istep(i, rest.second()));
    }
    if (t.is("out")) {
        Value rest = cook_at(h, t.arg(1), runner_.write(r, t.arg(0)));
        return Value::pair(rest.first(), iotree::ostep(rest.second()));
    }
    throw TypeMismatch("not an IO tree: " + t.to_string());
}

// ---------------------------------------------------------------- pure S-trees

PureTreeComodule::PureTreeComodule(std::shared_ptr<const MonadOnTypes> s)
    : s_(std::move(s)), monad_(std::make_shared<TreeMonad>()) {}

Assignment PureTreeComodule::cook(const Container& c, const Assignment& h) const {
    auto self = this;
    return Assignment(monad_->apply(c), Value::func([self, h](const Value& t) { return self->cook_at(h, t); }, "cook"));
}

Value PureTreeComodule::cook_at(const Assignment& h, const Value& t) const {
    if (tree::is_leaf(t)) return s_->unit(tree::stop());
    const Value& a = tree::label(t);
    return s_->bind(
        [&](const Value& p) {
            return s_->map([&](const Value& rest) { return tree::step(p, rest); }, cook_at(h, tree::child(t, p)));
        },
        h.at(a));
}

std::pair<Value, Value> evaluate_rep_s(const Representation& r, const Assignment& h, const Value& b,
                                       const Value& initial) {
    Value v = evaluate_rep(r, h, b).apply(initial);
    return {v.first(), v.second()};
}

// ---------------------------------------------------------------- monad morphisms

MonadMorphism identity_theta(std::shared_ptr<const MonadOnTypes> s) {
    return MonadMorphism{"id(" + s->name() + ")", s, s, [](const Value& x) { return x; }};
}

MonadMorphism eta_into_exception() {
    return MonadMorphism{"identity->exception", std::make_shared<IdentityMonad>(), std::make_shared<ExceptionMonad>(),
                         [](const Value& x) { return Value::inl(x); }};
}

MonadMorphism eta_into_state(const TypeCode& state) {
    auto st = std::make_shared<StateMonad>(state);
    return MonadMorphism{"identity->" + st->name(), std::make_shared<IdentityMonad>(), st,
                         [st](const Value& x) { return st->unit(x); }};
}

std::optional<Mismatch> check_monad_morphism(const MonadMorphism& theta, const std::vector<TypeCode>& codes) {
    const MonadOnTypes& s = *theta.source;
    const MonadOnTypes& t = *theta.target;
    constexpr std::size_t kMaxKleisli = 4096;
    for (const auto& x : codes) {
        TypeCode tx = t.apply(x);
        for (const auto& v : enumerate(x)) {
            Value lhs = theta.apply(s.unit(v)), rhs = t.unit(v);
            if (!value_eq(tx, lhs, rhs))
                return Mismatch{theta.name + " unit at " + v.to_string(), lhs.to_string(), rhs.to_string()};
        }
        auto ms = s.sample_of(x, 1);
        auto fs = enumerate(TypeCode::fun(x, TypeCode::listed("sx", ms)));
        std::size_t stride = std::max<std::size_t>(1, fs.size() / kMaxKleisli);
        for (const auto& m : ms)
            for (std::size_t k = 0; k < fs.size(); k += stride) {
                const Value& f = fs[k];
                Value lhs = theta.apply(s.bind([&](const Value& v) { return f.apply(v); }, m));
                Value rhs = t.bind([&](const Value& v) { return theta.apply(f.apply(v)); }, theta.apply(m));
                if (!value_eq(tx, lhs, rhs))
                    return Mismatch{theta.name + " bind, m = " + m.to_string() + ", f = " + f.to_string(),
                                    lhs.to_string(), rhs.to_string()};
            }
    }
    return std::nullopt;
}

CheckResult check_comodule_morphism_square(const MonadMorphism& theta, const Container& c, int depth,
                                           const std::vector<Container>& codomains) {
    if (auto mm = check_monad_morphism(theta, {TypeCode::boolean()})) throw NotAMonadMorphism(mm->to_string());
    auto cs = std::make_shared<PureTreeComodule>(theta.source);
    auto ct = std::make_shared<PureTreeComodule>(theta.target);
    const MonadOnTypes& target = *theta.target;
    TreeMonad tm;
    Container tc = tm.apply(c);
    auto trees = tree::enumerate_trees(c, depth);
    auto shapes = enumerate(c.shapes());

    CheckResult res;
    auto transport = [&](const Assignment& h) {
        return Assignment(c, tabulate(shapes, [&](const Value& a) { return theta.apply(h.at(a)); }));
    };

    auto args = enumerate_assignments_s(*theta.source, c);
    for (const auto& h : args) {
        Assignment lhs_cook = cs->cook(c, h), rhs_cook = ct->cook(c, transport(h));
        for (const auto& t : trees) {
            ++res.cases;
            Value lhs = theta.apply(lhs_cook.at(t)), rhs = rhs_cook.at(t);
            if (!target.equal(tc.positions(t), lhs, rhs)) {
                res.counterexample = Mismatch{"inner square, h = " + h.describe() + ", t = " + t.to_string(),
                                              lhs.to_string(), rhs.to_string()};
                return res;
            }
        }
    }

    for (const auto& d : codomains) {
        for (const auto& m : morphisms_between(d, tc, MorphismBounds{1, 100'000})) {
            Representation rs{cs, c, d, m}, rt{ct, c, d, m};
            for (const auto& h : args) {
                Assignment ht = transport(h);
                for (const auto& b : enumerate(d.shapes())) {
                    ++res.cases;
                    Value lhs = theta.apply(evaluate_rep(rs, h, b)), rhs = evaluate_rep(rt, ht, b);
                    if (!target.equal(d.positions(b), lhs, rhs)) {
                        res.counterexample = Mismatch{"outer square, h = " + h.describe() + ", b = " + b.to_string(),
                                                      lhs.to_string(), rhs.to_string()};
                        return res;
                    }
                }
            }
        }
    }
    return res;
}

}  // namespace comodule
