#include "comodule/lawcheck.hpp"

namespace comodule {

namespace {

// pfst returns the whole remaining path at a leaf instead of stop.
class BrokenPfstTree : public TreeMonad {
public:
    Value first_part(const Value& t, const Value& q) const override {
        if (tree::is_leaf(t)) return q;
        if (!q.is("step")) throw MalformedPath(q.to_string());
        return tree::step(q.arg(0), first_part(tree::child(t, q.arg(0)), q.arg(1)));
    }
};

Value next_in(const TypeCode& code, const Value& v) {
    auto xs = enumerate(code);
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (value_eq(code, xs[i], v)) return xs[(i + 1) % xs.size()];
    throw TypeMismatch(v.to_string() + " not in " + code.to_string());
}

// The unit tree answers with the neighbouring position.
class WrongChildEta : public TreeMonad {
public:
    ContainerMorphism unit(const Container& c) const override {
        ContainerMorphism good = TreeMonad::unit(c);
        return ContainerMorphism(
            c, apply(c), good.shape_fn(),
            [c, good](const Value& a, const Value& path) { return next_in(c.positions(a), good.position(a, path)); },
            "eta");
    }
};

// ret keeps the incoming state rather than the one h produced.
class StatelessReturn : public IoStateComodule {
public:
    using IoStateComodule::IoStateComodule;
    Value cook_at(const Assignment& h, const Value& c, const Value& r) const override {
        if (c.is("ret")) {
            Value rp = h.at(c.arg(0)).apply(r);
            return Value::pair(r, io::trace_stop(rp.second()));
        }
        return IoStateComodule::cook_at(h, c, r);
    }
};

// j records the other input at each read.
class SwappedInputJ : public IoAlgebra {
public:
    using IoAlgebra::IoAlgebra;
    Value witness_j(const Fn& f, const TypeCode& source, const Value& c, const Value& trace) const override {
        if (c.is("inp") && trace.is("istep")) {
            const Value& i = trace.arg(0);
            Value rest = witness_j(f, source, c.arg(0).apply(i), trace.arg(1));
            return io::istep(next_in(signature().inputs, i), rest);
        }
        return IoAlgebra::witness_j(f, source, c, trace);
    }
};

// Restriction reads h one shape further along.
class OffByOneRestriction : public FiniteSupportComodule {
public:
    Assignment cook(const Container& c, const Assignment& h) const override {
        TypeCode shapes = c.shapes();
        return Assignment(monad_->apply(c), Value::func(
                                                [h, shapes](const Value& s) {
                                                    return tabulate(subset::members(s), [&](const Value& a) {
                                                        return h.at(next_in(shapes, a));
                                                    });
                                                },
                                                "restrict+1"));
    }
};

MonadSuiteConfig tree_config(const SuiteParams& p) {
    MonadSuiteConfig cfg;
    cfg.catalog = default_catalog(p.max_shapes);
    cfg.probe_depth = p.max_depth;
    return cfg;
}

}  // namespace

std::vector<MutationFixture> mutation_fixtures() {
    std::vector<MutationFixture> out;
    out.push_back({"pfst-base-case", "path splitting keeps the remainder at a leaf", "monad-laws:tree",
                   [](const SuiteParams& p) {
                       BrokenPfstTree t;
                       return monad_laws("monad-laws:tree[pfst-base-case]", t, tree_config(p), p);
                   }});
    out.push_back({"eta-wrong-child", "the unit tree labels the neighbouring child", "monad-laws:tree",
                   [](const SuiteParams& p) {
                       WrongChildEta t;
                       return monad_laws("monad-laws:tree[eta-wrong-child]", t, tree_config(p), p);
                   }});
    out.push_back({"cook-drops-state", "the stateful IO cook forgets the state produced by h", "comodule-laws:io-state",
                   [](const SuiteParams& p) {
                       SuiteReport total;
                       total.suite = "comodule-laws:io-state[cook-drops-state]";
                       ComoduleSuiteConfig cfg;
                       cfg.catalog = default_catalog(p.max_shapes);
                       cfg.probe_depth = p.max_depth;
                       cfg.exhaustive = false;
                       for (const auto& rn : sample_runners(IoSignature{})) {
                           StatelessReturn cm(IoSignature{}, rn);
                           total.merge(comodule_laws(total.suite, cm, cfg, p));
                       }
                       return total;
                   }});
    out.push_back({"j-swapped-input", "the IO algebra's j witness records the wrong input", "mendler-coherence:io",
                   [](const SuiteParams& p) {
                       SwappedInputJ alg;
                       return mendler_coherence("mendler-coherence:io[j-swapped-input]", alg, p);
                   }});
    out.push_back({"restrict-off-by-one", "finite-support cook restricts h at the next shape",
                   "comodule-laws:finite-powerset", [](const SuiteParams& p) {
                       OffByOneRestriction cm;
                       ComoduleSuiteConfig cfg;
                       cfg.catalog = default_catalog(p.max_shapes);
                       cfg.probe_depth = p.max_depth;
                       return comodule_laws("comodule-laws:finite-powerset[restrict-off-by-one]", cm, cfg, p);
                   }});
    return out;
}

}  // namespace comodule
