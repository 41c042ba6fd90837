#include "comodule/codec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>

#include "comodule/mendler.hpp"

namespace comodule {

TypeCode opaque_code(const std::string& name) {
    if (name == "nat")
        return TypeCode::opaque("nat", [](int depth) {
            std::vector<Value> out;
            for (int i = 0; i <= 4 * std::max(depth, 1); ++i) out.push_back(nat(i));
            return out;
        });
    return TypeCode::opaque(name);
}

Value nat(std::int64_t n) { return Value::opaque("nat", n); }

std::string show(const Value& v) {
    if (v.kind() == ValueKind::Opaque && v.name() == "nat") return std::to_string(v.atom());
    return v.to_string();
}

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing \"") + key + "\" in " + j.dump());
    return j.at(key);
}

std::size_t as_index(const Json& j) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw SchemaError("expected a non-negative integer, got " + j.dump());
    return j.get<std::size_t>();
}

const Json& pair_array(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) throw SchemaError(std::string(what) + " needs two entries: " + j.dump());
    return j;
}

}  // namespace

// ---------------------------------------------------------------- codes

TypeCode parse_code(const Json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "empty") return TypeCode::empty();
        if (s == "unit") return TypeCode::unit();
        if (s == "bool") return TypeCode::boolean();
        throw SchemaError("unknown code " + s);
    }
    if (!j.is_object() || j.empty()) throw SchemaError("bad code " + j.dump());
    if (j.contains("fin")) return TypeCode::fin(as_index(j.at("fin")));
    if (j.contains("sum")) {
        const auto& a = pair_array(j.at("sum"), "sum");
        return TypeCode::sum(parse_code(a[0]), parse_code(a[1]));
    }
    if (j.contains("prod")) {
        const auto& a = pair_array(j.at("prod"), "prod");
        return TypeCode::prod(parse_code(a[0]), parse_code(a[1]));
    }
    if (j.contains("fun")) {
        const auto& a = pair_array(j.at("fun"), "fun");
        return TypeCode::fun(parse_code(a[0]), parse_code(a[1]));
    }
    if (j.contains("opaque")) return opaque_code(j.at("opaque").get<std::string>());
    if (j.contains("listed")) {
        std::vector<Value> ms;
        for (const auto& m : member(j, "members")) ms.push_back(parse_value(m));
        return TypeCode::listed(j.at("listed").get<std::string>(), std::move(ms));
    }
    throw SchemaError("bad code " + j.dump());
}

Json emit_code(const TypeCode& c) {
    switch (c.kind()) {
        case CodeKind::Empty: return "empty";
        case CodeKind::Unit: return "unit";
        case CodeKind::Bool: return "bool";
        case CodeKind::Fin: return Json{{"fin", c.fin_size()}};
        case CodeKind::Sum: return Json{{"sum", {emit_code(c.left()), emit_code(c.right())}}};
        case CodeKind::Prod: return Json{{"prod", {emit_code(c.left()), emit_code(c.right())}}};
        case CodeKind::Fun: return Json{{"fun", {emit_code(c.left()), emit_code(c.right())}}};
        case CodeKind::Opaque: return Json{{"opaque", c.name()}};
        case CodeKind::Listed: {
            Json ms = Json::array();
            for (const auto& m : c.members()) ms.push_back(emit_value(m));
            return Json{{"listed", c.name()}, {"members", ms}};
        }
    }
    throw SchemaError("unreachable code kind");
}

// ---------------------------------------------------------------- values

Value parse_value(const Json& j) {
    if (j.is_null()) return Value::unit();
    if (j.is_boolean()) return Value::boolean(j.get<bool>());
    if (j.is_number()) return Value::fin(as_index(j));
    if (!j.is_object() || j.empty()) throw SchemaError("bad value " + j.dump());
    if (j.contains("pair")) {
        const auto& a = pair_array(j.at("pair"), "pair");
        return Value::pair(parse_value(a[0]), parse_value(a[1]));
    }
    if (j.contains("inl")) return Value::inl(parse_value(j.at("inl")));
    if (j.contains("inr")) return Value::inr(parse_value(j.at("inr")));
    if (j.contains("table")) {
        std::vector<std::pair<Value, Value>> es;
        for (const auto& e : j.at("table")) {
            const auto& kv = pair_array(e, "table entry");
            es.emplace_back(parse_value(kv[0]), parse_value(kv[1]));
        }
        return Value::table(std::move(es));
    }
    if (j.contains("nat")) return nat(j.at("nat").get<std::int64_t>());
    if (j.contains("opaque")) return Value::opaque(j.at("opaque").get<std::string>(), member(j, "atom").get<std::int64_t>());
    if (j.contains("ctor")) {
        std::vector<Value> args;
        if (j.contains("args"))
            for (const auto& a : j.at("args")) args.push_back(parse_value(a));
        return Value::ctor(j.at("ctor").get<std::string>(), std::move(args));
    }
    if (j.contains("fn")) return compile_lambda(j.at("fn").get<std::string>());
    throw SchemaError("bad value " + j.dump());
}

Json emit_value(const Value& v) {
    switch (v.kind()) {
        case ValueKind::Unit: return nullptr;
        case ValueKind::Bool: return v.as_bool();
        case ValueKind::Fin: return v.as_fin();
        case ValueKind::Pair: return Json{{"pair", {emit_value(v.first()), emit_value(v.second())}}};
        case ValueKind::Inl: return Json{{"inl", emit_value(v.payload())}};
        case ValueKind::Inr: return Json{{"inr", emit_value(v.payload())}};
        case ValueKind::Table: {
            Json es = Json::array();
            for (const auto& [k, x] : v.entries()) es.push_back({emit_value(k), emit_value(x)});
            return Json{{"table", es}};
        }
        case ValueKind::Opaque:
            if (v.name() == "nat") return Json{{"nat", v.atom()}};
            return Json{{"opaque", v.name()}, {"atom", v.atom()}};
        case ValueKind::Ctor: {
            Json j{{"ctor", v.name()}};
            if (!v.args().empty()) {
                Json as = Json::array();
                for (const auto& a : v.args()) as.push_back(emit_value(a));
                j["args"] = as;
            }
            return j;
        }
        case ValueKind::Func:
            if (v.source().empty()) throw SchemaError("closure without source text cannot be emitted");
            return Json{{"fn", v.source()}};
    }
    throw SchemaError("unreachable value kind");
}

Value parse_value_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError("not JSON: " + text);
    }
    return parse_value(j);
}

// ---------------------------------------------------------------- lambda terms

namespace {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum Kind { Var, Nat, Fin, Unit, Bool, Lam, Call } kind;
    std::string name;             // Var / Lam binder / Call head
    std::int64_t number = 0;      // Nat, Fin, Bool
    std::vector<TermPtr> args;    // Call arguments, Lam body in args[0]
    std::string text;             // Lam source slice
};

class LambdaParser {
public:
    explicit LambdaParser(const std::string& s) : s_(s) {}

    TermPtr parse() {
        auto t = expr();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return t;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw SchemaError("lambda term '" + s_ + "' at offset " + std::to_string(i_) + ": " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(const std::string& tok) {
        skip();
        if (s_.compare(i_, tok.size(), tok) == 0) {
            i_ += tok.size();
            return true;
        }
        return false;
    }
    void expect(const std::string& tok) {
        if (!eat(tok)) fail("expected '" + tok + "'");
    }
    bool ident_start() {
        skip();
        return i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_');
    }
    std::string ident() {
        if (!ident_start()) fail("expected a name");
        std::size_t b = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '-' ||
                                  s_[i_] == '\''))
            ++i_;
        return s_.substr(b, i_ - b);
    }
    std::int64_t number() {
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected digits");
        return std::stoll(s_.substr(b, i_ - b));
    }

    TermPtr expr() {
        skip();
        std::size_t start = i_;
        if (eat("\\") || eat("\xce\xbb")) {
            std::vector<std::string> binders;
            while (ident_start()) binders.push_back(ident());
            if (binders.empty()) fail("lambda without binder");
            expect(".");
            TermPtr body = expr();
            std::string text = s_.substr(start, i_ - start);
            for (std::size_t k = binders.size(); k-- > 0;) {
                auto t = std::make_shared<Term>();
                t->kind = Term::Lam;
                t->name = binders[k];
                t->args = {body};
                t->text = text;
                body = t;
            }
            return body;
        }
        return atom();
    }

    TermPtr atom() {
        skip();
        auto t = std::make_shared<Term>();
        if (eat("(")) {
            auto inner = expr();
            expect(")");
            return inner;
        }
        if (eat("*")) {
            t->kind = Term::Unit;
            return t;
        }
        if (eat("#")) {
            t->kind = Term::Fin;
            t->number = number();
            return t;
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            t->kind = Term::Nat;
            t->number = number();
            return t;
        }
        std::string name = ident();
        if (name == "true" || name == "false") {
            t->kind = Term::Bool;
            t->number = name == "true";
            return t;
        }
        t->name = name;
        if (eat("(")) {
            t->kind = Term::Call;
            if (!eat(")")) {
                do t->args.push_back(expr());
                while (eat(","));
                expect(")");
            }
            return t;
        }
        t->kind = Term::Var;
        return t;
    }
};

struct Env {
    std::string name;
    Value value;
    std::shared_ptr<const Env> next;
};
using EnvPtr = std::shared_ptr<const Env>;

const Value* lookup_env(const EnvPtr& env, const std::string& n) {
    for (const Env* e = env.get(); e; e = e->next.get())
        if (e->name == n) return &e->value;
    return nullptr;
}

std::int64_t as_nat(const Value& v) {
    if (v.kind() != ValueKind::Opaque || v.name() != "nat") throw TypeMismatch("expected a natural, got " + v.to_string());
    return v.atom();
}

Value eval(const TermPtr& t, const EnvPtr& env);

Value call_builtin(const std::string& f, const std::vector<Value>& xs, bool& found) {
    found = true;
    auto arity = [&](std::size_t n) {
        if (xs.size() != n) throw TypeMismatch(f + " takes " + std::to_string(n) + " argument(s)");
    };
    if (f == "succ") return arity(1), nat(as_nat(xs[0]) + 1);
    if (f == "add") return arity(2), nat(as_nat(xs[0]) + as_nat(xs[1]));
    if (f == "fst") return arity(1), xs[0].first();
    if (f == "snd") return arity(1), xs[0].second();
    if (f == "pair") return arity(2), Value::pair(xs[0], xs[1]);
    if (f == "inl") return arity(1), Value::inl(xs[0]);
    if (f == "inr") return arity(1), Value::inr(xs[0]);
    if (f == "not") return arity(1), Value::boolean(!xs[0].as_bool());
    if (f == "and") return arity(2), Value::boolean(xs[0].as_bool() && xs[1].as_bool());
    if (f == "or") return arity(2), Value::boolean(xs[0].as_bool() || xs[1].as_bool());
    if (f == "xor") return arity(2), Value::boolean(xs[0].as_bool() != xs[1].as_bool());
    if (f == "set") return subset::make(xs);
    if (f == "arg") {
        arity(2);
        std::size_t k = xs[1].kind() == ValueKind::Fin ? xs[1].as_fin() : static_cast<std::size_t>(as_nat(xs[1]));
        return xs[0].arg(k);
    }
    found = false;
    return Value::unit();
}

Value eval(const TermPtr& t, const EnvPtr& env) {
    switch (t->kind) {
        case Term::Nat: return nat(t->number);
        case Term::Fin: return Value::fin(static_cast<std::size_t>(t->number));
        case Term::Unit: return Value::unit();
        case Term::Bool: return Value::boolean(t->number != 0);
        case Term::Var: {
            if (const Value* v = lookup_env(env, t->name)) return *v;
            return Value::ctor(t->name);
        }
        case Term::Lam: {
            TermPtr body = t->args[0];
            std::string binder = t->name;
            return Value::func(
                [body, binder, env](const Value& x) {
                    return eval(body, std::make_shared<const Env>(Env{binder, x, env}));
                },
                t->text);
        }
        case Term::Call: {
            if (t->name == "if" && !lookup_env(env, t->name)) {
                if (t->args.size() != 3) throw TypeMismatch("if takes 3 arguments");
                return eval(t->args[eval(t->args[0], env).as_bool() ? 1 : 2], env);
            }
            std::vector<Value> xs;
            for (const auto& a : t->args) xs.push_back(eval(a, env));
            if (const Value* f = lookup_env(env, t->name)) {
                Value r = *f;
                for (const auto& x : xs) r = r.apply(x);
                return r;
            }
            bool found = false;
            Value r = call_builtin(t->name, xs, found);
            if (found) return r;
            return Value::ctor(t->name, std::move(xs));
        }
    }
    throw SchemaError("unreachable term kind");
}

}  // namespace

Value compile_lambda(const std::string& source) {
    TermPtr t = LambdaParser(source).parse();
    if (t->kind != Term::Lam) throw SchemaError("\"fn\" must be a lambda: " + source);
    Value v = eval(t, nullptr);
    // keep the whole text, including leading whitespace, for round trips
    return Value::func([v](const Value& x) { return v.apply(x); }, source);
}

// ---------------------------------------------------------------- containers

Container ContainerSpec::build() const {
    if (constant) return Container::constant(shapes, *constant);
    return Container::finite(shapes, table);
}

ContainerSpec parse_container(const Json& j) {
    ContainerSpec c;
    c.shapes = parse_code(member(j, "shapes"));
    if (j.contains("constant")) {
        if (j.contains("positions")) throw SchemaError("container has both \"constant\" and \"positions\"");
        c.constant = parse_code(j.at("constant"));
        return c;
    }
    for (const auto& e : member(j, "positions")) {
        const auto& kv = pair_array(e, "position entry");
        c.table.emplace_back(parse_value(kv[0]), parse_code(kv[1]));
    }
    if (!is_enumerable(c.shapes)) throw SchemaError("a position table needs enumerable shapes");
    auto shapes = enumerate(c.shapes);
    if (shapes.size() != c.table.size()) throw SchemaError("position table does not cover the shapes exactly");
    for (const auto& [a, p] : c.table) {
        bool known = false;
        for (const auto& s : shapes) known = known || value_eq(c.shapes, s, a);
        if (!known) throw SchemaError("shape " + a.to_string() + " is not in " + c.shapes.to_string());
    }
    return c;
}

Json emit_container(const ContainerSpec& c) {
    Json j{{"shapes", emit_code(c.shapes)}};
    if (c.constant) {
        j["constant"] = emit_code(*c.constant);
        return j;
    }
    Json ps = Json::array();
    for (const auto& [a, p] : c.table) ps.push_back({emit_value(a), emit_code(p)});
    j["positions"] = ps;
    return j;
}

// ---------------------------------------------------------------- representations

namespace {

std::shared_ptr<const Comodule> comodule_named(const std::string& name, const std::optional<IoScenario>& io) {
    if (name == "tree") return std::make_shared<TreeComodule>();
    if (name == "identity") return std::make_shared<IdentityComodule>();
    if (name == "finite-powerset") return std::make_shared<FiniteSupportComodule>();
    if (name == "trivial") return std::make_shared<TrivialComodule>();
    if (name == "exception") return std::make_shared<ExceptionComodule>();
    if (name == "io-state" || name == "io-tree-state") {
        if (!io) throw SchemaError("monad " + name + " needs I, O and runner");
        if (name == "io-state") return std::make_shared<IoStateComodule>(io->sig, io->runner);
        return std::make_shared<IoTreeStateComodule>(io->sig, io->runner);
    }
    throw SchemaError("unknown monad " + name);
}

}  // namespace

Representation RepresentationSpec::build(const std::optional<IoScenario>& io) const {
    auto cm = comodule_named(monad, io);
    Container dom = domain.build(), cod = codomain.build();
    Value sh = shape, pos = position;
    ContainerMorphism m(
        cod, cm->monad().apply(dom), [sh](const Value& b) { return sh.apply(b); },
        [pos](const Value& b, const Value& q) { return pos.apply(b).apply(q); }, "representation");
    return Representation{cm, dom, cod, m};
}

Representation Document::build_representation() const {
    if (!representation) throw SchemaError("document has no representation");
    return representation->build(io);
}

namespace {

IoScenario parse_scenario(const Json& j) {
    IoScenario s;
    s.sig.inputs = parse_code(member(j, "I"));
    s.sig.outputs = parse_code(member(j, "O"));
    const Json& r = member(j, "runner");
    s.runner.state = parse_code(member(r, "state"));
    s.runner.initial = parse_value(member(r, "init"));
    s.runner.co_inp = parse_value(member(r, "co_inp"));
    s.runner.co_out = parse_value(member(r, "co_out"));
    if (!check(s.runner.state, s.runner.initial)) throw SchemaError("runner init outside the state code");
    return s;
}

RepresentationSpec parse_representation(const Json& j) {
    RepresentationSpec r;
    r.monad = member(j, "monad").get<std::string>();
    r.domain = parse_container(member(j, "domain"));
    r.codomain = parse_container(member(j, "codomain"));
    r.shape = parse_value(member(j, "shape"));
    r.position = parse_value(member(j, "position"));
    return r;
}

Json emit_representation(const RepresentationSpec& r) {
    return Json{{"monad", r.monad},
                {"domain", emit_container(r.domain)},
                {"codomain", emit_container(r.codomain)},
                {"shape", emit_value(r.shape)},
                {"position", emit_value(r.position)}};
}

}  // namespace

Document parse_document(const Json& j) {
    if (!j.is_object()) throw SchemaError("document must be an object");
    static const std::vector<std::string> known{"description", "I", "O", "runner", "representation",
                                                "argument", "computation", "prop"};
    for (const auto& [k, v] : j.items())
        if (std::find(known.begin(), known.end(), k) == known.end()) throw SchemaError("unknown key \"" + k + "\"");
    Document d;
    if (j.contains("description")) d.description = j.at("description").get<std::string>();
    if (j.contains("I") || j.contains("O") || j.contains("runner")) d.io = parse_scenario(j);
    if (j.contains("representation")) d.representation = parse_representation(j.at("representation"));
    if (j.contains("argument")) {
        const Json& a = j.at("argument");
        d.argument = AssignmentSpec{parse_container(member(a, "container")), parse_value(member(a, "map"))};
    }
    if (j.contains("computation")) d.computation = parse_value(j.at("computation"));
    if (j.contains("prop")) {
        const Json& p = j.at("prop");
        PropContainer pc{parse_code(member(p, "shapes")), parse_value(member(p, "pred"))};
        for (const auto& a : enumerate(pc.shapes))
            if (pc.pred.apply(a).kind() != ValueKind::Bool) throw SchemaError("prop predicate must be boolean");
        d.prop = pc;
    }
    if (d.representation && d.representation->stateful() && !d.io)
        throw SchemaError("stateful representation without I, O and runner");
    return d;
}

Json emit_document(const Document& d) {
    Json j = Json::object();
    if (d.description) j["description"] = *d.description;
    if (d.io) {
        j["I"] = emit_code(d.io->sig.inputs);
        j["O"] = emit_code(d.io->sig.outputs);
        j["runner"] = Json{{"state", emit_code(d.io->runner.state)},
                           {"init", emit_value(d.io->runner.initial)},
                           {"co_inp", emit_value(d.io->runner.co_inp)},
                           {"co_out", emit_value(d.io->runner.co_out)}};
    }
    if (d.representation) j["representation"] = emit_representation(*d.representation);
    if (d.argument)
        j["argument"] = Json{{"container", emit_container(d.argument->container)}, {"map", emit_value(d.argument->fn)}};
    if (d.computation) j["computation"] = emit_value(*d.computation);
    if (d.prop) j["prop"] = Json{{"shapes", emit_code(d.prop->shapes)}, {"pred", emit_value(d.prop->pred)}};
    return j;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return parse_document(j);
}

}  // namespace comodule
