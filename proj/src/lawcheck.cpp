#include "comodule/lawcheck.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "json.hpp"

namespace comodule {

std::size_t default_budget() {
    if (const char* env = std::getenv("COMODULE_BUDGET")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return 1'000'000'000;
}

std::vector<Container> default_catalog(int max_shapes) {
    const std::vector<TypeCode> codes{TypeCode::empty(), TypeCode::unit(), TypeCode::boolean()};
    std::vector<Container> out;
    for (const auto& shapes : codes) {
        auto xs = enumerate(shapes);
        if (static_cast<int>(xs.size()) > max_shapes) continue;
        std::size_t combos = 1;
        for (std::size_t i = 0; i < xs.size(); ++i) combos *= codes.size();
        for (std::size_t k = 0; k < combos; ++k) {
            std::vector<std::pair<Value, TypeCode>> table;
            std::size_t rest = k;
            // first shape most significant
            std::vector<std::size_t> digits(xs.size());
            for (std::size_t i = xs.size(); i-- > 0;) {
                digits[i] = rest % codes.size();
                rest /= codes.size();
            }
            for (std::size_t i = 0; i < xs.size(); ++i) table.emplace_back(xs[i], codes[digits[i]]);
            out.push_back(Container::finite(shapes, table));
        }
    }
    return out;
}

std::vector<Container> prop_catalog(int max_shapes) {
    std::vector<Container> out;
    for (const auto& c : default_catalog(max_shapes)) {
        bool prop = true;
        for (const auto& a : enumerate(c.shapes()))
            if (*cardinality(c.positions(a)) > 1) prop = false;
        if (prop) out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- reports

void SuiteReport::merge(const SuiteReport& other) {
    run += other.run;
    passed += other.passed;
    failed += other.failed;
    skipped += other.skipped;
    for (const auto& c : other.counterexamples) {
        bool seen = false;
        for (const auto& d : counterexamples)
            if (d.law == c.law) seen = true;
        if (!seen) counterexamples.push_back(c);
    }
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    for (const auto& [k, v] : other.sampling) sampled(k, v.first, v.second);
}

void SuiteReport::sampled(const std::string& what, std::size_t used, std::size_t total) {
    auto& slot = sampling[what];
    slot.first += used;
    slot.second += total;
}

namespace {
std::string clip(const std::string& s, std::size_t n = 400) {
    if (s.size() <= n) return s;
    return s.substr(0, n) + "...";
}

std::string status(const SuiteReport& r) {
    if (r.failed > 0) return "FAIL";
    if (r.run == 0 && r.skipped > 0) return "SKIPPED";
    if (r.skipped > 0) return "PASS (partial)";
    return "PASS";
}
}  // namespace

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << suite << ": " << status(*this) << "  run=" << run << " passed=" << passed << " failed=" << failed
       << " skipped=" << skipped << "\n";
    if (skipped > 0) os << "  warning: " << skipped << " case(s) skipped by the budget\n";
    for (const auto& c : counterexamples) {
        os << "  counterexample [" << c.law << "]: " << clip(c.detail.where) << "\n";
        os << "    lhs: " << clip(c.detail.lhs) << "\n";
        os << "    rhs: " << clip(c.detail.rhs) << "\n";
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    for (const auto& [k, v] : sampling)
        os << "  sampled: " << k << ": " << v.first << " of " << v.second << " (strided)\n";
    return os.str();
}

std::string SuiteReport::json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["status"] = status(*this);
    j["run"] = run;
    j["passed"] = passed;
    j["failed"] = failed;
    j["skipped"] = skipped;
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : counterexamples)
        j["counterexamples"].push_back(
            {{"law", c.law}, {"where", c.detail.where}, {"lhs", c.detail.lhs}, {"rhs", c.detail.rhs}});
    j["notes"] = notes;
    j["sampling"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : sampling) j["sampling"][k] = {{"used", v.first}, {"available", v.second}};
    return j.dump(2);
}

void Harness::check(const std::string& law, const std::function<std::optional<Mismatch>()>& body) {
    if (report_.run >= budget_) {
        ++report_.skipped;
        return;
    }
    ++report_.run;
    std::optional<Mismatch> mm;
    try {
        mm = body();
    } catch (const std::exception& e) {
        mm = Mismatch{std::string("exception: ") + e.what(), "(threw)", "(not evaluated)"};
    }
    if (!mm) {
        ++report_.passed;
        return;
    }
    ++report_.failed;
    for (const auto& c : report_.counterexamples)
        if (c.law == law) return;
    report_.counterexamples.push_back(Counterexample{law, *mm});
}

std::vector<std::size_t> stride(std::size_t n, std::size_t cap) {
    std::vector<std::size_t> out;
    if (n == 0 || cap == 0) return out;
    if (n <= cap) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(i);
        return out;
    }
    for (std::size_t k = 0; k < cap; ++k) out.push_back(k * n / cap);
    return out;
}

// ---------------------------------------------------------------- registry

std::vector<Runner> sample_runners(const IoSignature& sig) {
    std::vector<Runner> out = enumerate_runners(sig, TypeCode::unit());
    if (sig.inputs == TypeCode::boolean() && sig.outputs == TypeCode::boolean()) {
        out.push_back(echo_runner(TypeCode::boolean()));
        // reads flip the state; writes xor into it
        Value ci = tabulate(TypeCode::boolean(), [](const Value& r) {
            return Value::pair(Value::boolean(!r.as_bool()), r);
        });
        Value co = tabulate(TypeCode::prod(TypeCode::boolean(), TypeCode::boolean()), [](const Value& ro) {
            return Value::boolean(ro.first().as_bool() != ro.second().as_bool());
        });
        out.push_back(Runner{TypeCode::boolean(), ci, co, Value::boolean(false)});
    }
    return out;
}

namespace {

using SuiteFn = std::function<SuiteReport(const SuiteParams&)>;

MonadSuiteConfig monad_config(const std::string& inst, const SuiteParams& p) {
    MonadSuiteConfig cfg;
    cfg.catalog = inst == "inhabited-powerset" ? prop_catalog(p.max_shapes) : default_catalog(p.max_shapes);
    cfg.probe_depth = p.max_depth;
    cfg.exhaustive = inst == "tree" || inst == "identity" || inst == "trivial" || inst == "exception" ||
                     inst == "inhabited-powerset";
    return cfg;
}

ComoduleSuiteConfig comodule_config(const std::string& inst, const SuiteParams& p) {
    ComoduleSuiteConfig cfg;
    cfg.catalog = inst == "inhabited-powerset" ? prop_catalog(p.max_shapes) : default_catalog(p.max_shapes);
    cfg.probe_depth = p.max_depth;
    if (inst == "tree" || inst == "tree-state" || inst == "tree-exception")
        cfg.nested_probe = [](const Container& tc) { return tree::enumerate_trees(tc, 2, 1'000'000, 1); };
    cfg.exhaustive = !(inst == "io-state" || inst == "io-tree-state");
    return cfg;
}

SuiteReport per_runner(const std::string& name, const std::function<std::shared_ptr<Comodule>(const Runner&)>& make,
                       const SuiteParams& p, const std::string& inst) {
    SuiteReport total;
    total.suite = name;
    IoSignature sig;
    for (const auto& rn : sample_runners(sig)) {
        auto cm = make(rn);
        SuiteParams q = p;
        q.budget = p.budget > total.run ? p.budget - total.run : 0;
        SuiteReport r = comodule_laws(name, *cm, comodule_config(inst, p), q);
        total.merge(r);
    }
    return total;
}

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> reg = [] {
        std::map<std::string, SuiteFn> m;
        m["container-category"] = container_category_suite;

        auto add_monad = [&](const std::string& inst, std::function<std::shared_ptr<const ContainerMonad>()> make) {
            std::string name = "monad-laws:" + inst;
            m[name] = [name, inst, make](const SuiteParams& p) {
                auto t = make();
                return monad_laws(name, *t, monad_config(inst, p), p);
            };
        };
        add_monad("tree", [] { return std::make_shared<TreeMonad>(); });
        add_monad("identity", [] { return induced_monad(identity_instance()); });
        add_monad("finite-powerset", [] { return induced_monad(finite_powerset_instance()); });
        add_monad("trivial", [] { return induced_monad(self_rep_instance()); });
        add_monad("exception", [] { return induced_monad(exception_instance()); });
        add_monad("io", [] { return induced_monad(io_mendler_algebra()); });
        add_monad("io-tree", [] { return combined_tree_monad(); });
        add_monad("inhabited-powerset", [] { return induced_monad(plus_algebra()); });

        auto add_comodule = [&](const std::string& inst, std::function<std::shared_ptr<const Comodule>()> make) {
            std::string name = "comodule-laws:" + inst;
            m[name] = [name, inst, make](const SuiteParams& p) {
                auto cm = make();
                return comodule_laws(name, *cm, comodule_config(inst, p), p);
            };
        };
        add_comodule("tree", [] { return std::make_shared<TreeComodule>(); });
        add_comodule("identity", [] { return std::make_shared<IdentityComodule>(); });
        add_comodule("finite-powerset", [] { return std::make_shared<FiniteSupportComodule>(); });
        add_comodule("trivial", [] { return std::make_shared<TrivialComodule>(); });
        add_comodule("exception", [] { return std::make_shared<ExceptionComodule>(); });
        add_comodule("inhabited-powerset", [] { return std::make_shared<PlusComodule>(); });
        add_comodule("tree-exception",
                     [] { return std::make_shared<PureTreeComodule>(std::make_shared<ExceptionMonad>()); });
        add_comodule("tree-state", [] {
            return std::make_shared<PureTreeComodule>(std::make_shared<StateMonad>(TypeCode::boolean()));
        });
        m["comodule-laws:io-state"] = [](const SuiteParams& p) {
            return per_runner(
                "comodule-laws:io-state",
                [](const Runner& rn) { return std::make_shared<IoStateComodule>(IoSignature{}, rn); }, p, "io-state");
        };
        m["comodule-laws:io-tree-state"] = [](const SuiteParams& p) {
            return per_runner(
                "comodule-laws:io-tree-state",
                [](const Runner& rn) { return std::make_shared<IoTreeStateComodule>(IoSignature{}, rn); }, p,
                "io-tree-state");
        };

        auto add_mendler = [&](const std::string& inst, std::function<std::shared_ptr<const WeakMendlerAlgebra>()> make,
                               std::vector<TypeCode> fibers) {
            std::string name = "mendler-coherence:" + inst;
            m[name] = [name, make, fibers](const SuiteParams& p) { return mendler_coherence(name, *make(), p, fibers); };
        };
        add_mendler("identity", identity_instance, {});
        add_mendler("finite-powerset", finite_powerset_instance, {});
        add_mendler("trivial", self_rep_instance, {});
        add_mendler("exception", exception_instance, {});
        add_mendler("io", [] { return io_mendler_algebra(); }, {});
        add_mendler("inhabited-powerset", plus_algebra, {TypeCode::empty(), TypeCode::unit()});

        m["representation"] = representation_suite;
        m["algebra-translation"] = algebra_translation_suite;
        m["finite-support"] = [](const SuiteParams& p) { return finite_support_suite(FiniteSupportComodule(), p); };
        m["io-kleisli"] = io_kleisli_suite;
        m["io-rho"] = io_rho_suite;
        m["effect-squares"] = effect_squares_suite;
        m["pcont-heyting"] = pcont_heyting_suite;
        m["pcont-kleisli"] = pcont_kleisli_suite;
        return m;
    }();
    return reg;
}

}  // namespace

std::vector<std::string> list_suites() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) throw UnknownSuite(name);
    return it->second(params);
}

}  // namespace comodule
