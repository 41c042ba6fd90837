#include <map>

#include "comodule/lawcheck.hpp"

namespace comodule {

namespace {

// Lazily computed Kleisli maps catalog[i] → T(catalog[j]).
class KleisliTable {
public:
    KleisliTable(const ContainerMonad& t, const std::vector<Container>& cat, int depth) : t_(t), cat_(cat), depth_(depth) {}
    const std::vector<ContainerMorphism>& at(std::size_t i, std::size_t j) {
        auto key = std::make_pair(i, j);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto ms = morphisms_between(cat_[i], t_.apply(cat_[j]), MorphismBounds{depth_, 10'000'000});
        return cache_.emplace(key, std::move(ms)).first->second;
    }

private:
    const ContainerMonad& t_;
    const std::vector<Container>& cat_;
    int depth_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ContainerMorphism>> cache_;
};

// Same morphism, with the shape map cached; extensions are re-evaluated on the
// same probe trees for every partner in a sweep.
ContainerMorphism memo_shapes(const ContainerMorphism& m) {
    auto cache = std::make_shared<std::map<Value, Value>>();
    ShapeFn f = m.shape_fn();
    return ContainerMorphism(
        m.source(), m.target(),
        [cache, f](const Value& a) {
            auto it = cache->find(a);
            if (it != cache->end()) return it->second;
            Value b = f(a);
            cache->emplace(a, b);
            return b;
        },
        m.position_fn(), m.label());
}

}  // namespace

// ---------------------------------------------------------------- monad laws

SuiteReport monad_laws(const std::string& name, const ContainerMonad& t, const MonadSuiteConfig& cfg,
                       const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = name;
    Harness h(rep, params.budget);
    const auto& cat = cfg.catalog;
    KleisliTable kl(t, cat, cfg.kleisli_depth);

    std::vector<std::vector<Value>> probes;
    for (const auto& c : cat) probes.push_back(t.apply(c).sample_shapes(cfg.probe_depth));

    for (std::size_t i = 0; i < cat.size(); ++i) {
        const Container& c = cat[i];
        h.check("right unit", [&]() -> std::optional<Mismatch> {
            auto mm = morphism_mismatch(t.extend(t.unit(c)), identity_morphism(t.apply(c)), probes[i]);
            if (mm) mm->where = c.describe() + ", " + mm->where;
            return mm;
        });
    }

    for (std::size_t i = 0; i < cat.size(); ++i) {
        auto shapes = enumerate(cat[i].shapes());
        for (std::size_t j = 0; j < cat.size(); ++j) {
            const auto& fs = kl.at(i, j);
            auto idx = cfg.exhaustive ? stride(fs.size(), fs.size()) : stride(fs.size(), params.sweep);
            if (idx.size() < fs.size())
                rep.sampled("left unit", idx.size(), fs.size());
            ContainerMorphism eta = t.unit(cat[i]);
            for (auto k : idx) {
                const auto& f = fs[k];
                h.check("left unit", [&]() -> std::optional<Mismatch> {
                    auto mm = morphism_mismatch(compose_morphisms(t.extend(f), eta), f, shapes);
                    if (mm) mm->where = "f = " + f.describe(shapes) + ", " + mm->where;
                    return mm;
                });
            }
        }
    }

    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = 0; j < cat.size(); ++j) {
            const auto& fs = kl.at(i, j);
            if (fs.empty()) continue;
            std::vector<ContainerMorphism> efs;
            for (const auto& f : fs) efs.push_back(memo_shapes(t.extend(f)));
            auto src_shapes = enumerate(cat[i].shapes());
            for (std::size_t k = 0; k < cat.size(); ++k) {
                const auto& gs = kl.at(j, k);
                std::size_t total = fs.size() * gs.size();
                if (total == 0) continue;
                auto idx = cfg.exhaustive ? stride(total, total) : stride(total, params.sweep);
                if (idx.size() < total)
                    rep.sampled("associativity", idx.size(), total);
                std::vector<std::optional<ContainerMorphism>> egs(gs.size());
                for (auto n : idx) {
                    std::size_t fi = n / gs.size(), gi = n % gs.size();
                    if (!egs[gi]) egs[gi] = memo_shapes(t.extend(gs[gi]));
                    const ContainerMorphism& eg = *egs[gi];
                    h.check("associativity", [&]() -> std::optional<Mismatch> {
                        ContainerMorphism lhs = compose_morphisms(eg, efs[fi]);
                        ContainerMorphism rhs = t.extend(compose_morphisms(eg, fs[fi]));
                        auto mm = morphism_mismatch(lhs, rhs, probes[i]);
                        if (mm)
                            mm->where = "f = " + fs[fi].describe(src_shapes) + ", g = " +
                                        gs[gi].describe(enumerate(cat[j].shapes())) + ", " + mm->where;
                        return mm;
                    });
                }
            }
        }
    return rep;
}

// ---------------------------------------------------------------- comodule laws

SuiteReport comodule_laws(const std::string& name, const Comodule& m, const ComoduleSuiteConfig& cfg,
                          const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = name;
    Harness h(rep, params.budget);
    const Ambient& s = m.ambient();
    const ContainerMonad& t = m.monad();
    const auto& cat = cfg.catalog;

    auto args_of = [&](const Container& c, const std::string& what) {
        auto hs = enumerate_assignments_s(s, c);
        if (cfg.exhaustive || hs.size() <= params.sweep) return hs;
        auto idx = stride(hs.size(), params.sweep);
        rep.sampled(what + " arguments", idx.size(), hs.size());
        std::vector<Assignment> out;
        for (auto k : idx) out.push_back(hs[k]);
        return out;
    };

    for (const auto& c : cat) {
        Container tc = t.apply(c);
        auto shapes = enumerate(c.shapes());
        auto nested = cfg.nested_probe ? cfg.nested_probe(tc) : t.apply(tc).sample_shapes(1);
        ContainerMorphism eta = t.unit(c);
        ContainerMorphism mu = multiplication(t, c);
        for (const auto& arg : args_of(c, "counit/multiplication")) {
            h.check("counit", [&]() -> std::optional<Mismatch> {
                auto mm = assignment_mismatch_s(s, cointerpret_morphism_s(s, eta, m.cook(c, arg)), arg, shapes);
                if (mm) mm->where = "h = " + arg.describe() + ", " + mm->where;
                return mm;
            });
            h.check("multiplication", [&]() -> std::optional<Mismatch> {
                Assignment cooked = m.cook(c, arg);
                auto mm = assignment_mismatch_s(s, cointerpret_morphism_s(s, mu, cooked), m.cook(tc, cooked), nested);
                if (mm) mm->where = "h = " + arg.describe() + ", " + mm->where;
                return mm;
            });
        }
    }

    for (const auto& c : cat) {
        auto probes = t.apply(c).sample_shapes(cfg.probe_depth);
        auto src_shapes = enumerate(c.shapes());
        for (const auto& d : cat) {
            auto mors = morphisms_between(c, d);
            if (mors.empty()) continue;
            auto args = args_of(d, "naturality");
            for (const auto& mor : mors) {
                ContainerMorphism tm = fmap(t, mor);
                for (const auto& arg : args)
                    h.check("naturality", [&]() -> std::optional<Mismatch> {
                        Assignment lhs = m.cook(c, cointerpret_morphism_s(s, mor, arg));
                        Assignment rhs = cointerpret_morphism_s(s, tm, m.cook(d, arg));
                        auto mm = assignment_mismatch_s(s, lhs, rhs, probes);
                        if (mm) mm->where = "m = " + mor.describe(src_shapes) + ", h = " + arg.describe() + ", " + mm->where;
                        return mm;
                    });
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------- Mendler coherence

namespace {

struct ProbeFamily {
    Family family;
    std::vector<TypeCode> fibers;
};

std::vector<ProbeFamily> families_over(const TypeCode& index, const std::vector<TypeCode>& fibers) {
    auto xs = enumerate(index);
    std::vector<ProbeFamily> out;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < xs.size(); ++i) combos *= fibers.size();
    for (std::size_t k = 0; k < combos; ++k) {
        std::vector<std::pair<Value, TypeCode>> table;
        std::vector<TypeCode> chosen(xs.size());
        std::size_t rest = k;
        for (std::size_t i = xs.size(); i-- > 0;) {
            chosen[i] = fibers[rest % fibers.size()];
            rest /= fibers.size();
        }
        for (std::size_t i = 0; i < xs.size(); ++i) table.emplace_back(xs[i], chosen[i]);
        Container c = Container::finite(index, table);
        out.push_back(ProbeFamily{family_of(c), chosen});
    }
    return out;
}

// All family maps Π a. P a → Q a as tables.
std::vector<Value> family_maps(const TypeCode& index, const Family& p, const Family& q) {
    std::vector<std::pair<Value, TypeCode>> idx;
    for (const auto& a : enumerate(index)) idx.emplace_back(a, TypeCode::fun(p.at(a), q.at(a)));
    return enumerate_dependent(idx);
}

FamilyMap as_family_map(const Value& table) {
    return [table](const Value& a, const Value& x) { return table.apply(a).apply(x); };
}

std::optional<Mismatch> compare_in(const TypeCode& code, const Value& lhs, const Value& rhs, const std::string& where) {
    if (!check(code, lhs)) return Mismatch{where + " (lhs outside " + code.to_string() + ")", lhs.to_string(), rhs.to_string()};
    if (!check(code, rhs)) return Mismatch{where + " (rhs outside " + code.to_string() + ")", lhs.to_string(), rhs.to_string()};
    if (!value_eq(code, lhs, rhs)) return Mismatch{where, lhs.to_string(), rhs.to_string()};
    return std::nullopt;
}

Family compose_family(const WeakMendlerAlgebra& alg, const Family& q, const Fn& f, const TypeCode& index,
                      const std::string& key) {
    const WeakMendlerAlgebra* a = &alg;
    return Family{index, [a, q, f](const Value& x) { return a->extend(q, f(x)); }, key};
}

}  // namespace

SuiteReport mendler_coherence(const std::string& name, const WeakMendlerAlgebra& alg, const SuiteParams& params,
                              const std::vector<TypeCode>& fibers_in) {
    SuiteReport rep;
    rep.suite = name;
    Harness h(rep, params.budget);
    const MonadOnTypes& mon = alg.monad();
    std::vector<TypeCode> fibers =
        fibers_in.empty() ? std::vector<TypeCode>{TypeCode::empty(), TypeCode::unit(), TypeCode::boolean()} : fibers_in;
    const std::vector<TypeCode> codes{TypeCode::unit(), TypeCode::boolean(), TypeCode::fin(3)};
    const std::vector<TypeCode> small{TypeCode::unit(), TypeCode::boolean()};
    Fn eta = [&mon](const Value& a) { return mon.unit(a); };
    FamilyMap id_map = [](const Value&, const Value& x) { return x; };

    std::map<std::string, std::vector<ProbeFamily>> fam_cache;
    auto fams = [&](const TypeCode& c) -> const std::vector<ProbeFamily>& {
        auto key = c.to_string();
        auto it = fam_cache.find(key);
        if (it == fam_cache.end()) it = fam_cache.emplace(key, families_over(c, fibers)).first;
        return it->second;
    };
    auto ms_of = [&](const TypeCode& c) { return mon.sample_of(c, 1); };
    // Kleisli maps A → M B, strided when too many.
    auto kleisli = [&](const TypeCode& a, const TypeCode& b, const std::string& law) {
        auto all = enumerate(TypeCode::fun(a, TypeCode::listed("M", ms_of(b))));
        auto idx = stride(all.size(), params.sweep);
        if (idx.size() < all.size())
            rep.sampled(law + " Kleisli maps", idx.size(), all.size());
        std::vector<Value> out;
        for (auto k : idx) out.push_back(all[k]);
        return out;
    };
    auto fn_of = [](const Value& table) -> Fn { return [table](const Value& a) { return table.apply(a); }; };

    // action preserves identities
    for (const auto& a : codes)
        for (const auto& pf : fams(a))
            for (const auto& m : ms_of(a))
                h.check("functor identity", [&]() -> std::optional<Mismatch> {
                    TypeCode code = alg.extend(pf.family, m);
                    for (const auto& x : enumerate(code))
                        if (auto mm = compare_in(code, alg.act(id_map, m, x), x,
                                                 "P = " + pf.family.key + ", m = " + m.to_string() + ", x = " + x.to_string()))
                            return mm;
                    return std::nullopt;
                });

    // action preserves composition
    for (const auto& a : small)
        for (const auto& p : fams(a))
            for (const auto& q : fams(a))
                for (const auto& r : fams(a)) {
                    auto hs = family_maps(a, p.family, q.family);
                    auto ks = family_maps(a, q.family, r.family);
                    for (const auto& hv : hs)
                        for (const auto& kv : ks)
                            h.check("functor composition", [&]() -> std::optional<Mismatch> {
                                FamilyMap hf = as_family_map(hv), kf = as_family_map(kv);
                                FamilyMap both = [&](const Value& i, const Value& x) { return kf(i, hf(i, x)); };
                                for (const auto& m : ms_of(a)) {
                                    TypeCode code = alg.extend(r.family, m);
                                    for (const auto& x : enumerate(alg.extend(p.family, m)))
                                        if (auto mm = compare_in(code, alg.act(both, m, x), alg.act(kf, m, alg.act(hf, m, x)),
                                                                 "h = " + hv.to_string() + ", h' = " + kv.to_string() +
                                                                     ", m = " + m.to_string() + ", x = " + x.to_string()))
                                            return mm;
                                }
                                return std::nullopt;
                            });
                }

    // i is natural
    for (const auto& a : codes)
        for (const auto& p : fams(a))
            for (const auto& q : fams(a))
                for (const auto& hv : family_maps(a, p.family, q.family))
                    h.check("i naturality", [&]() -> std::optional<Mismatch> {
                        FamilyMap hf = as_family_map(hv);
                        for (const auto& x0 : enumerate(a)) {
                            Value e = mon.unit(x0);
                            for (const auto& x : enumerate(alg.extend(p.family, e))) {
                                Value lhs = hf(x0, alg.witness_i(p.family, x0, x));
                                Value rhs = alg.witness_i(q.family, x0, alg.act(hf, e, x));
                                if (auto mm = compare_in(q.family.at(x0), lhs, rhs,
                                                         "h = " + hv.to_string() + ", a = " + x0.to_string() +
                                                             ", x = " + x.to_string()))
                                    return mm;
                            }
                        }
                        return std::nullopt;
                    });

    // j is natural
    for (const auto& a : small)
        for (const auto& b : small) {
            auto fs = kleisli(a, b, "j naturality");
            for (const auto& q : fams(b))
                for (const auto& q2 : fams(b))
                    for (const auto& kv : family_maps(b, q.family, q2.family))
                        for (const auto& fv : fs)
                            h.check("j naturality", [&]() -> std::optional<Mismatch> {
                                Fn f = fn_of(fv);
                                FamilyMap kf = as_family_map(kv);
                                FamilyMap lifted = [&](const Value& x0, const Value& y) { return alg.act(kf, f(x0), y); };
                                Family target = compose_family(alg, q2.family, f, a, "Q'*f");
                                for (const auto& m : ms_of(a)) {
                                    Value fm = mon.bind(f, m);
                                    TypeCode code = alg.extend(target, m);
                                    for (const auto& x : enumerate(alg.extend(q.family, fm))) {
                                        Value lhs = alg.act(lifted, m, alg.witness_j(f, a, m, x));
                                        Value rhs = alg.witness_j(f, a, m, alg.act(kf, fm, x));
                                        if (auto mm = compare_in(code, lhs, rhs,
                                                                 "k = " + kv.to_string() + ", f = " + fv.to_string() +
                                                                     ", m = " + m.to_string() + ", x = " + x.to_string()))
                                            return mm;
                                    }
                                }
                                return std::nullopt;
                            });
        }

    // i after j on a unit is the identity
    for (const auto& a : codes)
        for (const auto& b : codes) {
            auto fs = kleisli(a, b, "unit coherence (left)");
            for (const auto& q : fams(b))
                for (const auto& fv : fs)
                    h.check("unit coherence (left)", [&]() -> std::optional<Mismatch> {
                        Fn f = fn_of(fv);
                        Family qf = compose_family(alg, q.family, f, a, "Q*f");
                        for (const auto& x0 : enumerate(a)) {
                            Value e = mon.unit(x0);
                            TypeCode code = alg.extend(q.family, f(x0));
                            for (const auto& x : enumerate(alg.extend(q.family, mon.bind(f, e)))) {
                                Value lhs = alg.witness_i(qf, x0, alg.witness_j(f, a, e, x));
                                if (auto mm = compare_in(code, lhs, x,
                                                         "f = " + fv.to_string() + ", a = " + x0.to_string() +
                                                             ", x = " + x.to_string()))
                                    return mm;
                            }
                        }
                        return std::nullopt;
                    });
        }

    // [i] after j for the unit is the identity
    for (const auto& a : codes)
        for (const auto& p : fams(a))
            for (const auto& m : ms_of(a))
                h.check("unit coherence (right)", [&]() -> std::optional<Mismatch> {
                    FamilyMap ip = [&](const Value& x0, const Value& y) { return alg.witness_i(p.family, x0, y); };
                    TypeCode code = alg.extend(p.family, m);
                    for (const auto& x : enumerate(alg.extend(p.family, mon.bind(eta, m)))) {
                        Value lhs = alg.act(ip, m, alg.witness_j(eta, a, m, x));
                        if (auto mm = compare_in(code, lhs, x, "m = " + m.to_string() + ", x = " + x.to_string()))
                            return mm;
                    }
                    return std::nullopt;
                });

    // associativity coherence
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                auto fs = kleisli(a, b, "associativity coherence");
                auto gs = kleisli(b, c, "associativity coherence");
                for (const auto& r : fams(c))
                    for (const auto& fv : fs)
                        for (const auto& gv : gs)
                            h.check("associativity coherence", [&]() -> std::optional<Mismatch> {
                                Fn f = fn_of(fv), g = fn_of(gv);
                                Fn gf = [&](const Value& x0) { return mon.bind(g, f(x0)); };
                                Family rg = compose_family(alg, r.family, g, b, "R*g");
                                Family rgf = compose_family(alg, rg, f, a, "(R*g)*f");
                                FamilyMap jg = [&](const Value& x0, const Value& y) { return alg.witness_j(g, b, f(x0), y); };
                                for (const auto& m : ms_of(a)) {
                                    TypeCode code = alg.extend(rgf, m);
                                    Value fm = mon.bind(f, m);
                                    for (const auto& x : enumerate(alg.extend(r.family, mon.bind(gf, m)))) {
                                        Value lhs = alg.act(jg, m, alg.witness_j(gf, a, m, x));
                                        Value rhs = alg.witness_j(f, a, m, alg.witness_j(g, b, fm, x));
                                        if (auto mm = compare_in(code, lhs, rhs,
                                                                 "f = " + fv.to_string() + ", g = " + gv.to_string() +
                                                                     ", m = " + m.to_string() + ", x = " + x.to_string()))
                                            return mm;
                                    }
                                }
                                return std::nullopt;
                            });
            }
    return rep;
}

// ---------------------------------------------------------------- category structure

SuiteReport container_category_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "container-category";
    Harness h(rep, params.budget);
    auto cat = default_catalog(params.max_shapes);
    auto small = default_catalog(std::min(params.max_shapes, 1));

    auto pick = [&](const std::vector<ContainerMorphism>& all, const std::string& what) {
        auto idx = stride(all.size(), params.sweep);
        if (idx.size() < all.size()) rep.sampled(what, idx.size(), all.size());
        std::vector<ContainerMorphism> out;
        for (auto k : idx) out.push_back(all[k]);
        return out;
    };

    for (const auto& c : cat)
        for (const auto& d : cat) {
            auto shapes = enumerate(c.shapes());
            for (const auto& m : morphisms_between(c, d)) {
                h.check("identity", [&]() -> std::optional<Mismatch> {
                    if (auto mm = morphism_mismatch(compose_morphisms(m, identity_morphism(c)), m, shapes)) return mm;
                    return morphism_mismatch(compose_morphisms(identity_morphism(d), m), m, shapes);
                });
            }
        }

    for (const auto& c : cat)
        for (const auto& d : cat)
            for (const auto& e : cat) {
                auto fs = pick(morphisms_between(c, d), "composition maps");
                auto gs = pick(morphisms_between(d, e), "composition maps");
                auto ks = pick(morphisms_between(e, c), "composition maps");
                auto shapes = enumerate(c.shapes());
                for (const auto& f : fs)
                    for (const auto& g : gs)
                        h.check("composition associativity", [&]() -> std::optional<Mismatch> {
                            for (const auto& k : ks) {
                                auto lhs = compose_morphisms(k, compose_morphisms(g, f));
                                auto rhs = compose_morphisms(compose_morphisms(k, g), f);
                                if (auto mm = morphism_mismatch(lhs, rhs, shapes)) return mm;
                            }
                            return std::nullopt;
                        });
            }

    for (const auto& x : cat)
        for (const auto& c : cat)
            for (const auto& d : cat) {
                Product p = product(c, d);
                Coproduct s = coproduct(c, d);
                auto xs = enumerate(x.shapes());
                auto ms = pick(morphisms_between(x, c), "product legs");
                auto ns = pick(morphisms_between(x, d), "product legs");
                for (const auto& m : ms)
                    for (const auto& n : ns)
                        h.check("product beta", [&]() -> std::optional<Mismatch> {
                            ContainerMorphism pr = pairing(m, n, p);
                            if (auto mm = morphism_mismatch(compose_morphisms(p.proj1, pr), m, xs)) return mm;
                            return morphism_mismatch(compose_morphisms(p.proj2, pr), n, xs);
                        });
                for (const auto& k : pick(morphisms_between(x, p.object), "product eta"))
                    h.check("product eta", [&]() -> std::optional<Mismatch> {
                        ContainerMorphism back = pairing(compose_morphisms(p.proj1, k), compose_morphisms(p.proj2, k), p);
                        return morphism_mismatch(back, k, xs);
                    });
                auto cs = enumerate(c.shapes()), ds = enumerate(d.shapes());
                auto us = pick(morphisms_between(c, x), "coproduct legs");
                auto vs = pick(morphisms_between(d, x), "coproduct legs");
                for (const auto& u : us)
                    for (const auto& v : vs)
                        h.check("coproduct beta", [&]() -> std::optional<Mismatch> {
                            ContainerMorphism cp = copairing(u, v, s);
                            if (auto mm = morphism_mismatch(compose_morphisms(cp, s.inj1), u, cs)) return mm;
                            return morphism_mismatch(compose_morphisms(cp, s.inj2), v, ds);
                        });
            }

    for (const auto& x : small)
        for (const auto& c : small)
            for (const auto& d : small) {
                Exponential e = exponential(c, d);
                Product xc = product(x, c);
                auto xcs = enumerate(xc.object.shapes());
                for (const auto& m : pick(morphisms_between(xc.object, d), "curry inputs"))
                    h.check("curry/uncurry", [&]() -> std::optional<Mismatch> {
                        ContainerMorphism cu = curry(m, x, c, e);
                        return morphism_mismatch(uncurry(cu, x, c, e), m, xcs);
                    });
                auto xs = enumerate(x.shapes());
                for (const auto& u : pick(morphisms_between(x, e.object), "uncurry inputs"))
                    h.check("uncurry/curry", [&]() -> std::optional<Mismatch> {
                        return morphism_mismatch(curry(uncurry(u, x, c, e), x, c, e), u, xs);
                    });
            }
    return rep;
}

// ---------------------------------------------------------------- representations

SuiteReport representation_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "representation";
    Harness h(rep, params.budget);
    auto cm = std::make_shared<TreeComodule>();
    const ContainerMonad& t = cm->monad();
    auto cat = default_catalog(params.max_shapes);
    MorphismBounds kb{1, 10'000'000};

    // F(m) and the representation m agree
    for (const auto& c : cat)
        for (const auto& d : cat)
            for (const auto& m : morphisms_between(d, t.apply(c), kb))
                h.check("soundness", [&]() -> std::optional<Mismatch> {
                    Representation r{cm, c, d, m};
                    auto res = check_represents(r, functor_F(*cm, c, m));
                    return res.counterexample;
                });

    // evaluation of a composite is the composite of evaluations
    auto small = default_catalog(std::min(params.max_shapes, 2));
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                auto fs = morphisms_between(b, t.apply(a), kb);
                auto gs = morphisms_between(c, t.apply(b), kb);
                std::size_t total = fs.size() * gs.size();
                auto idx = stride(total, params.sweep);
                if (idx.size() < total)
                    rep.sampled("composition", idx.size(), total);
                auto hs = cointerpret_assignments(a);
                auto cs = enumerate(c.shapes());
                for (auto n : idx) {
                    const auto& f = fs[n / gs.size()];
                    const auto& g = gs[n % gs.size()];
                    h.check("composition", [&]() -> std::optional<Mismatch> {
                        Representation rf{cm, a, b, f}, rg{cm, b, c, g};
                        Representation rgf = compose_reps(rg, rf);
                        for (const auto& arg : hs) {
                            Assignment lhs = evaluate_all(rgf, arg);
                            Assignment rhs = evaluate_all(rg, evaluate_all(rf, arg));
                            if (auto mm = assignment_mismatch(lhs, rhs, cs)) {
                                mm->where = "h = " + arg.describe() + ", " + mm->where;
                                return mm;
                            }
                        }
                        return std::nullopt;
                    });
                }
            }

    // finite products of represented functionals
    auto tiny = default_catalog(1);
    for (const auto& x : tiny)
        for (const auto& a : tiny)
            for (const auto& b : tiny) {
                Coproduct s = coproduct(a, b);
                auto fs = morphisms_between(a, t.apply(x), kb);
                auto gs = morphisms_between(b, t.apply(x), kb);
                auto hs = cointerpret_assignments(x);
                auto as = enumerate(a.shapes()), bs = enumerate(b.shapes());
                for (const auto& f : fs)
                    for (const auto& g : gs)
                        h.check("product beta", [&]() -> std::optional<Mismatch> {
                            Representation rf{cm, x, a, f}, rg{cm, x, b, g};
                            Representation pr = rfun_pair(rf, rg);
                            Representation l1 = compose_reps(rfun_proj1(cm, a, b), pr);
                            Representation l2 = compose_reps(rfun_proj2(cm, a, b), pr);
                            for (const auto& arg : hs) {
                                if (auto mm = assignment_mismatch(evaluate_all(l1, arg), evaluate_all(rf, arg), as)) return mm;
                                if (auto mm = assignment_mismatch(evaluate_all(l2, arg), evaluate_all(rg, arg), bs)) return mm;
                            }
                            return std::nullopt;
                        });
                auto ks = morphisms_between(s.object, t.apply(x), kb);
                auto idx = stride(ks.size(), params.sweep * 4);
                if (idx.size() < ks.size()) rep.sampled("product eta", idx.size(), ks.size());
                auto ss = enumerate(s.object.shapes());
                for (auto n : idx)
                    h.check("product eta", [&]() -> std::optional<Mismatch> {
                        Representation rk{cm, x, s.object, ks[n]};
                        Representation back = rfun_pair(compose_reps(rfun_proj1(cm, a, b), rk),
                                                        compose_reps(rfun_proj2(cm, a, b), rk));
                        for (const auto& arg : hs)
                            if (auto mm = assignment_mismatch(evaluate_all(back, arg), evaluate_all(rk, arg), ss)) return mm;
                        return std::nullopt;
                    });
            }

    // a map into the terminal functional is unique: ⟨⟨0⟩⟩ has one element
    for (const auto& x : cat)
        h.check("terminal", [&]() -> std::optional<Mismatch> {
            auto ms = morphisms_between(rfun_terminal(), t.apply(x), kb);
            if (ms.size() != 1) return Mismatch{"maps into the terminal from " + x.describe(), std::to_string(ms.size()), "1"};
            return std::nullopt;
        });
    return rep;
}

SuiteReport algebra_translation_suite(const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "algebra-translation";
    Harness h(rep, params.budget);
    auto cat = default_catalog(params.max_shapes);
    std::vector<std::shared_ptr<const Comodule>> instances{std::make_shared<TreeComodule>(),
                                                           std::make_shared<IdentityComodule>()};
    for (const auto& cm : instances) {
        auto t = std::shared_ptr<const ContainerMonad>(cm, &cm->monad());
        ContainerMorphism alpha = alpha_from_cook(*cm);
        std::string tag = " (" + cm->name() + ")";
        h.check("algebra laws" + tag, [&]() { return check_algebra(*t, alpha, params.max_depth); });
        auto back = cook_from_alpha(t, alpha, params.max_depth);
        for (const auto& c : cat) {
            auto probes = t->apply(c).sample_shapes(params.max_depth);
            for (const auto& arg : cointerpret_assignments(c))
                h.check("cook → α → cook" + tag, [&]() -> std::optional<Mismatch> {
                    return assignment_mismatch(back->cook(c, arg), cm->cook(c, arg), probes);
                });
        }
        h.check("α → cook → α" + tag, [&]() -> std::optional<Mismatch> {
            ContainerMorphism again = alpha_from_cook(*back);
            return morphism_mismatch(again, alpha, t->apply(identity_container()).sample_shapes(params.max_depth + 1));
        });
    }
    return rep;
}

SuiteReport finite_support_suite(const Comodule& m, const SuiteParams& params) {
    SuiteReport rep;
    rep.suite = "finite-support";
    Harness h(rep, params.budget);
    std::shared_ptr<const Comodule> cm(&m, [](const Comodule*) {});
    auto cat = default_catalog(params.max_shapes);
    for (const auto& c : cat)
        for (const auto& d : cat) {
            auto ms = morphisms_between(d, m.monad().apply(c));
            auto idx = stride(ms.size(), params.sweep);
            if (idx.size() < ms.size())
                rep.sampled("representations", idx.size(), ms.size());
            auto hs = cointerpret_assignments(c);
            auto bs = enumerate(d.shapes());
            for (auto k : idx)
                h.check("support invariance", [&]() -> std::optional<Mismatch> {
                    Representation r{cm, c, d, ms[k]};
                    for (const auto& h1 : hs)
                        for (const auto& h2 : hs)
                            for (const auto& b : bs)
                                if (!check_finite_support(r, h1, h2, b))
                                    return Mismatch{"b = " + b.to_string() + ", h = " + h1.describe() + ", h' = " + h2.describe(),
                                                    evaluate_rep(r, h1, b).to_string(), evaluate_rep(r, h2, b).to_string()};
                    return std::nullopt;
                });
        }
    return rep;
}

}  // namespace comodule
