#include "comodule/demos.hpp"

#include <map>
#include <sstream>

#include "comodule/lawcheck.hpp"

namespace comodule {

namespace detail {
const std::vector<std::pair<std::string, std::string>>& embedded_demo_files();
}

std::vector<std::string> demo_files() {
    std::vector<std::string> out;
    for (const auto& [stem, text] : detail::embedded_demo_files()) out.push_back(stem);
    return out;
}

const std::string& demo_file_text(const std::string& stem) {
    for (const auto& [s, text] : detail::embedded_demo_files())
        if (s == stem) return text;
    throw UnknownDemo(stem + ".json");
}

Document demo_document(const std::string& stem) {
    Json j;
    try {
        j = Json::parse(demo_file_text(stem));
    } catch (const Json::parse_error& e) {
        throw SchemaError(stem + ".json: " + e.what());
    }
    return parse_document(j);
}

std::vector<std::string> demo_names() {
    return {"baire", "finite-support", "exceptional", "io-interactive", "instance-zorn-shape"};
}

namespace {

void verdict(std::ostringstream& os, DemoResult& res, const SuiteReport& r, const std::string& scope) {
    os << "law suite (" << scope << "):\n" << r.text();
    if (!r.ok()) res.ok = false;
}

SuiteParams small_params() {
    SuiteParams p;
    p.max_shapes = 1;
    return p;
}

DemoResult baire() {
    DemoResult res;
    std::ostringstream os;
    Document d = demo_document("baire");
    Representation r = d.build_representation();
    Assignment h = d.argument->build();
    Value star = Value::unit();
    Value t = r.morphism.shape(star);
    os << *d.description << "\n";
    os << "tree at *: " << t.to_string() << "\n";
    os << "  root query " << show(tree::label(t)) << "; below answer p the query is p, then a leaf\n";
    Value path = r.comodule->cook(r.domain, h).at(t);
    os << "path chosen by alpha = succ: " << path.to_string() << "\n";
    Value out = evaluate_rep(r, h, star);
    os << "F(succ) = " << show(out) << "\n";
    // α(α(0)) with α = succ, computed directly
    std::int64_t direct = (0 + 1) + 1;
    bool agree = out.kind() == ValueKind::Opaque && out.atom() == direct;
    os << "direct alpha(alpha(0)) = " << direct << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
    if (!agree) res.ok = false;
    verdict(os, res, run_suite("monad-laws:tree", small_params()), "monad-laws:tree, catalog shapes <= 1");
    res.text = os.str();
    return res;
}

DemoResult finite_support() {
    DemoResult res;
    std::ostringstream os;
    Document d = demo_document("finite-support");
    Representation r = d.build_representation();
    Assignment h = d.argument->build();
    os << *d.description << "\n";
    for (const auto& b : enumerate(r.codomain.shapes())) {
        os << "b = " << b.to_string() << ": support " << r.morphism.shape(b).to_string()
           << ", F(h)(b) = " << evaluate_rep(r, h, b).to_string() << "\n";
    }
    std::size_t pairs = 0, bad = 0;
    auto hs = cointerpret_assignments(r.domain);
    for (const auto& b : enumerate(r.codomain.shapes()))
        for (const auto& h1 : hs)
            for (const auto& h2 : hs) {
                ++pairs;
                if (!check_finite_support(r, h1, h2, b)) ++bad;
            }
    os << "support invariance: " << pairs << " (h, h', b) triples, " << bad << " failures\n";
    if (bad) res.ok = false;
    verdict(os, res, run_suite("comodule-laws:finite-powerset"), "comodule-laws:finite-powerset");
    res.text = os.str();
    return res;
}

DemoResult exceptional() {
    DemoResult res;
    std::ostringstream os;
    Document d = demo_document("exceptional");
    Representation r = d.build_representation();
    os << *d.description << "\n";
    auto hs = cointerpret_assignments(r.domain);
    for (const auto& b : enumerate(r.codomain.shapes())) {
        Value s = r.morphism.shape(b);
        os << "b = " << b.to_string() << " -> " << s.to_string()
           << (s.kind() == ValueKind::Inr ? " (raises)" : " (queries h)") << "\n";
        std::vector<Value> outs;
        for (const auto& h : hs) {
            outs.push_back(evaluate_rep(r, h, b));
            os << "  h = " << h.describe() << ": " << outs.back().to_string() << "\n";
        }
        bool constant = true;
        for (const auto& o : outs) constant = constant && value_eq(r.codomain.positions(b), o, outs.front());
        os << "  " << (constant ? "independent of h" : "depends on h") << "\n";
        if (s.kind() == ValueKind::Inr && !constant) res.ok = false;
    }
    verdict(os, res, run_suite("monad-laws:exception"), "monad-laws:exception");
    res.text = os.str();
    return res;
}

DemoResult io_interactive() {
    DemoResult res;
    std::ostringstream os;
    Document d = demo_document("io-interactive");
    Representation r = d.build_representation();
    Assignment h = d.argument->build();
    const Runner& rn = d.io->runner;
    os << *d.description << "\n";
    os << "runner: " << rn.describe() << "\n";
    os << "computation at *: " << r.morphism.shape(Value::unit()).to_string() << "\n";
    for (const auto& r0 : enumerate(rn.state)) {
        auto [fin, v] = evaluate_rep_s(r, h, Value::unit(), r0);
        os << "from state " << r0.to_string() << (value_eq(rn.state, r0, rn.initial) ? " (init)" : "")
           << ": final state " << fin.to_string() << ", value " << v.to_string() << "\n";
    }
    IoStateComodule cm(d.io->sig, rn);
    ComoduleSuiteConfig cfg;
    cfg.catalog = default_catalog(1);
    cfg.probe_depth = 2;
    verdict(os, res, comodule_laws("comodule-laws:io-state[demo runner]", cm, cfg, small_params()),
            "comodule-laws:io-state with this runner, catalog shapes <= 1");
    res.text = os.str();
    return res;
}

DemoResult instance_zorn_shape() {
    DemoResult res;
    std::ostringstream os;
    auto show_pair = [&](const std::string& from, const std::string& to) {
        PropContainer a = *demo_document(from).prop, b = *demo_document(to).prop;
        os << from << " " << a.describe() << "  vs  " << to << " " << b.describe() << "\n";
        auto t = functional_instance_reduce(a, b);
        auto rep = kleisli_reducibility_equiv(a, b);
        os << "  instance reducible: " << (rep.instance_reducible ? "yes" : "no") << "\n";
        os << "  reduction map: " << (t ? t->to_string() : "irreducible") << "\n";
        os << "  Kleisli map into inhabited subsets: " << (rep.kleisli ? rep.kleisli->to_string() : "none") << "\n";
        if (!rep.agree()) res.ok = false;
    };
    os << "every target instance b is met by some candidate a with P a => Q b\n";
    show_pair("zorn-from", "zorn-to");
    show_pair("prop-top", "prop-terminal");
    verdict(os, res, run_suite("monad-laws:inhabited-powerset"), "monad-laws:inhabited-powerset");
    res.text = os.str();
    return res;
}

}  // namespace

DemoResult run_demo(const std::string& name) {
    if (name == "baire") return baire();
    if (name == "finite-support") return finite_support();
    if (name == "exceptional") return exceptional();
    if (name == "io-interactive") return io_interactive();
    if (name == "instance-zorn-shape") return instance_zorn_shape();
    throw UnknownDemo(name);
}

}  // namespace comodule
