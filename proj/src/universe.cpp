#include "comodule/universe.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

namespace comodule {

namespace {
constexpr std::uint64_t kMaxEnumeration = 50'000'000;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > std::numeric_limits<std::uint64_t>::max() / b ? std::numeric_limits<std::uint64_t>::max() : a * b;
}
std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r = sat_mul(r, base);
        if (r == std::numeric_limits<std::uint64_t>::max()) break;
    }
    return r;
}
}  // namespace

// ---------------------------------------------------------------- TypeCode

struct TypeCode::Node {
    CodeKind kind = CodeKind::Empty;
    std::size_t n = 0;
    TypeCode l, r;
    std::string name;
    std::vector<Value> members;
    Sampler sampler;
    Node() = default;
    explicit Node(CodeKind k) : kind(k) {}
};

TypeCode::TypeCode(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

TypeCode::TypeCode() : node_(nullptr) {}

CodeKind TypeCode::kind() const { return node_ ? node_->kind : CodeKind::Empty; }

TypeCode TypeCode::empty() { return TypeCode(); }
TypeCode TypeCode::unit() {
    static const auto n = std::make_shared<const Node>(CodeKind::Unit);
    return TypeCode(n);
}
TypeCode TypeCode::boolean() {
    static const auto n = std::make_shared<const Node>(CodeKind::Bool);
    return TypeCode(n);
}
TypeCode TypeCode::fin(std::size_t k) {
    auto n = std::make_shared<Node>(CodeKind::Fin);
    n->n = k;
    return TypeCode(std::move(n));
}
TypeCode TypeCode::sum(TypeCode l, TypeCode r) {
    auto n = std::make_shared<Node>(CodeKind::Sum);
    n->l = std::move(l);
    n->r = std::move(r);
    return TypeCode(std::move(n));
}
TypeCode TypeCode::prod(TypeCode l, TypeCode r) {
    auto n = std::make_shared<Node>(CodeKind::Prod);
    n->l = std::move(l);
    n->r = std::move(r);
    return TypeCode(std::move(n));
}
TypeCode TypeCode::fun(TypeCode dom, TypeCode cod) {
    auto n = std::make_shared<Node>(CodeKind::Fun);
    n->l = std::move(dom);
    n->r = std::move(cod);
    return TypeCode(std::move(n));
}
TypeCode TypeCode::opaque(std::string name, Sampler sampler) {
    auto n = std::make_shared<Node>(CodeKind::Opaque);
    n->name = std::move(name);
    n->sampler = std::move(sampler);
    return TypeCode(std::move(n));
}
TypeCode TypeCode::listed(std::string label, std::vector<Value> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto n = std::make_shared<Node>(CodeKind::Listed);
    n->name = std::move(label);
    n->members = std::move(members);
    return TypeCode(std::move(n));
}

std::size_t TypeCode::fin_size() const { return node_ ? node_->n : 0; }
const TypeCode& TypeCode::left() const {
    if (!node_) throw TypeMismatch("Empty has no components");
    return node_->l;
}
const TypeCode& TypeCode::right() const {
    if (!node_) throw TypeMismatch("Empty has no components");
    return node_->r;
}
const std::string& TypeCode::name() const {
    static const std::string none;
    return node_ ? node_->name : none;
}
const std::vector<Value>& TypeCode::members() const {
    static const std::vector<Value> none;
    return node_ ? node_->members : none;
}
const Sampler& TypeCode::sampler() const {
    static const Sampler none;
    return node_ ? node_->sampler : none;
}

std::string TypeCode::to_string() const {
    switch (kind()) {
        case CodeKind::Empty: return "Empty";
        case CodeKind::Unit: return "Unit";
        case CodeKind::Bool: return "Bool";
        case CodeKind::Fin: return "Fin(" + std::to_string(fin_size()) + ")";
        case CodeKind::Sum: return "(" + left().to_string() + " + " + right().to_string() + ")";
        case CodeKind::Prod: return "(" + left().to_string() + " x " + right().to_string() + ")";
        case CodeKind::Fun: return "(" + left().to_string() + " -> " + right().to_string() + ")";
        case CodeKind::Opaque: return "Opaque(" + name() + ")";
        case CodeKind::Listed: {
            std::string s = name() + "{";
            for (std::size_t i = 0; i < members().size(); ++i) {
                if (i) s += ", ";
                s += members()[i].to_string();
            }
            return s + "}";
        }
    }
    return "?";
}

bool operator==(const TypeCode& a, const TypeCode& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case CodeKind::Empty:
        case CodeKind::Unit:
        case CodeKind::Bool: return true;
        case CodeKind::Fin: return a.fin_size() == b.fin_size();
        case CodeKind::Sum:
        case CodeKind::Prod:
        case CodeKind::Fun: return a.left() == b.left() && a.right() == b.right();
        case CodeKind::Opaque: return a.name() == b.name();
        case CodeKind::Listed: return a.name() == b.name() && a.members() == b.members();
    }
    return false;
}

// ---------------------------------------------------------------- Value

struct Value::Node {
    ValueKind kind = ValueKind::Unit;
    std::uint64_t num = 0;
    std::int64_t atom = 0;
    std::string name;
    std::vector<Value> kids;
    std::vector<std::pair<Value, Value>> entries;
    Fn fn;
    Node() = default;
    explicit Node(ValueKind k) : kind(k) {}
};

Value::Value(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
Value::Value() : node_(nullptr) {}

ValueKind Value::kind() const { return node_ ? node_->kind : ValueKind::Unit; }

Value Value::unit() { return Value(); }
Value Value::boolean(bool b) {
    static const auto f = [] {
        auto n = std::make_shared<Node>(ValueKind::Bool);
        n->num = 0;
        return std::shared_ptr<const Node>(n);
    }();
    static const auto t = [] {
        auto n = std::make_shared<Node>(ValueKind::Bool);
        n->num = 1;
        return std::shared_ptr<const Node>(n);
    }();
    return Value(b ? t : f);
}
Value Value::fin(std::size_t i) {
    auto n = std::make_shared<Node>(ValueKind::Fin);
    n->num = i;
    return Value(std::move(n));
}
Value Value::pair(Value a, Value b) {
    auto n = std::make_shared<Node>(ValueKind::Pair);
    n->kids = {std::move(a), std::move(b)};
    return Value(std::move(n));
}
Value Value::inl(Value v) {
    auto n = std::make_shared<Node>(ValueKind::Inl);
    n->kids = {std::move(v)};
    return Value(std::move(n));
}
Value Value::inr(Value v) {
    auto n = std::make_shared<Node>(ValueKind::Inr);
    n->kids = {std::move(v)};
    return Value(std::move(n));
}
Value Value::table(std::vector<std::pair<Value, Value>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return compare(x.first, y.first) < 0; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (compare(entries[i - 1].first, entries[i].first) == 0)
            throw TypeMismatch("duplicate table key " + entries[i].first.to_string());
    }
    auto n = std::make_shared<Node>(ValueKind::Table);
    n->entries = std::move(entries);
    return Value(std::move(n));
}
Value Value::opaque(std::string name, std::int64_t atom) {
    auto n = std::make_shared<Node>(ValueKind::Opaque);
    n->name = std::move(name);
    n->atom = atom;
    return Value(std::move(n));
}
Value Value::ctor(std::string tag, std::vector<Value> args) {
    auto n = std::make_shared<Node>(ValueKind::Ctor);
    n->name = std::move(tag);
    n->kids = std::move(args);
    return Value(std::move(n));
}
Value Value::func(Fn f, std::string source) {
    auto n = std::make_shared<Node>(ValueKind::Func);
    n->fn = std::move(f);
    n->name = std::move(source);
    return Value(std::move(n));
}

namespace {
void expect(const Value& v, ValueKind k, const char* what) {
    if (v.kind() != k) throw TypeMismatch(std::string("expected ") + what + ", got " + v.to_string());
}
}  // namespace

bool Value::as_bool() const {
    expect(*this, ValueKind::Bool, "boolean");
    return node_->num != 0;
}
std::size_t Value::as_fin() const {
    expect(*this, ValueKind::Fin, "fin-index");
    return node_->num;
}
const Value& Value::first() const {
    expect(*this, ValueKind::Pair, "pair");
    return node_->kids[0];
}
const Value& Value::second() const {
    expect(*this, ValueKind::Pair, "pair");
    return node_->kids[1];
}
const Value& Value::payload() const {
    if (kind() != ValueKind::Inl && kind() != ValueKind::Inr) throw TypeMismatch("expected injection, got " + to_string());
    return node_->kids[0];
}
const std::vector<std::pair<Value, Value>>& Value::entries() const {
    expect(*this, ValueKind::Table, "table");
    return node_->entries;
}
const std::string& Value::name() const {
    if (kind() != ValueKind::Opaque && kind() != ValueKind::Ctor) throw TypeMismatch("expected opaque or constructor, got " + to_string());
    return node_->name;
}
std::int64_t Value::atom() const {
    expect(*this, ValueKind::Opaque, "opaque");
    return node_->atom;
}
const std::vector<Value>& Value::args() const {
    expect(*this, ValueKind::Ctor, "constructor");
    return node_->kids;
}
const Value& Value::arg(std::size_t i) const {
    const auto& a = args();
    if (i >= a.size()) throw TypeMismatch("constructor " + node_->name + " has no argument " + std::to_string(i));
    return a[i];
}
const std::string& Value::source() const {
    expect(*this, ValueKind::Func, "function");
    return node_->name;
}

std::optional<Value> Value::lookup(const Value& x) const {
    const auto& es = entries();
    auto it = std::lower_bound(es.begin(), es.end(), x,
                               [](const auto& e, const Value& k) { return compare(e.first, k) < 0; });
    if (it == es.end() || compare(it->first, x) != 0) return std::nullopt;
    return it->second;
}

Value Value::apply(const Value& x) const {
    if (kind() == ValueKind::Func) return node_->fn(x);
    if (kind() != ValueKind::Table) throw TypeMismatch("cannot apply non-function " + to_string());
    auto r = lookup(x);
    if (!r) throw TypeMismatch("argument " + x.to_string() + " outside table domain " + to_string());
    return *r;
}

std::string Value::to_string() const {
    switch (kind()) {
        case ValueKind::Unit: return "*";
        case ValueKind::Bool: return node_->num ? "true" : "false";
        case ValueKind::Fin: return std::to_string(node_->num);
        case ValueKind::Pair: return "(" + first().to_string() + ", " + second().to_string() + ")";
        case ValueKind::Inl: return "inl " + payload().to_string();
        case ValueKind::Inr: return "inr " + payload().to_string();
        case ValueKind::Table: {
            std::string s = "{";
            bool firstEntry = true;
            for (const auto& [k, v] : entries()) {
                if (!firstEntry) s += ", ";
                firstEntry = false;
                s += k.to_string() + " -> " + v.to_string();
            }
            return s + "}";
        }
        case ValueKind::Opaque: return node_->name + ":" + std::to_string(node_->atom);
        case ValueKind::Ctor: {
            if (node_->kids.empty()) return node_->name;
            std::string s = node_->name + "(";
            for (std::size_t i = 0; i < node_->kids.size(); ++i) {
                if (i) s += ", ";
                s += node_->kids[i].to_string();
            }
            return s + ")";
        }
        case ValueKind::Func: return node_->name.empty() ? "<fn>" : node_->name;
    }
    return "?";
}

int compare(const Value& a, const Value& b) {
    if (a.same_node(b) && a.kind() != ValueKind::Func) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    auto cmp3 = [](auto x, auto y) { return x < y ? -1 : (y < x ? 1 : 0); };
    switch (a.kind()) {
        case ValueKind::Unit: return 0;
        case ValueKind::Bool: return cmp3(a.as_bool(), b.as_bool());
        case ValueKind::Fin: return cmp3(a.as_fin(), b.as_fin());
        case ValueKind::Pair: {
            int c = compare(a.first(), b.first());
            return c ? c : compare(a.second(), b.second());
        }
        case ValueKind::Inl:
        case ValueKind::Inr: return compare(a.payload(), b.payload());
        case ValueKind::Table: {
            const auto& x = a.entries();
            const auto& y = b.entries();
            if (&x == &y) return 0;
            for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
                int c = compare(x[i].first, y[i].first);
                if (c) return c;
                c = compare(x[i].second, y[i].second);
                if (c) return c;
            }
            return cmp3(x.size(), y.size());
        }
        case ValueKind::Opaque: {
            int c = a.name().compare(b.name());
            if (c) return c < 0 ? -1 : 1;
            return cmp3(a.atom(), b.atom());
        }
        case ValueKind::Ctor: {
            int c = a.name().compare(b.name());
            if (c) return c < 0 ? -1 : 1;
            const auto& x = a.args();
            const auto& y = b.args();
            if (&x == &y) return 0;
            for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
                int d = compare(x[i], y[i]);
                if (d) return d;
            }
            return cmp3(x.size(), y.size());
        }
        case ValueKind::Func: throw TypeMismatch("closures are not comparable");
    }
    return 0;
}

// ---------------------------------------------------------------- enumeration

Cardinality cardinality(const TypeCode& code) {
    switch (code.kind()) {
        case CodeKind::Empty: return 0;
        case CodeKind::Unit: return 1;
        case CodeKind::Bool: return 2;
        case CodeKind::Fin: return code.fin_size();
        case CodeKind::Sum: {
            auto l = cardinality(code.left()), r = cardinality(code.right());
            if (!l || !r) return std::nullopt;
            return sat_add(*l, *r);
        }
        case CodeKind::Prod: {
            auto l = cardinality(code.left()), r = cardinality(code.right());
            if (l && *l == 0) return 0;
            if (r && *r == 0) return 0;
            if (!l || !r) return std::nullopt;
            return sat_mul(*l, *r);
        }
        case CodeKind::Fun: {
            auto d = cardinality(code.left()), c = cardinality(code.right());
            if (d && *d == 0) return 1;
            if (c && (*c == 0 || *c == 1)) return *c;
            if (!d || !c) return std::nullopt;
            return sat_pow(*c, *d);
        }
        case CodeKind::Opaque: return std::nullopt;
        case CodeKind::Listed: return code.members().size();
    }
    return std::nullopt;
}

bool is_enumerable(const TypeCode& code) {
    switch (code.kind()) {
        case CodeKind::Opaque: return false;
        case CodeKind::Sum:
        case CodeKind::Prod:
        case CodeKind::Fun: return is_enumerable(code.left()) && is_enumerable(code.right());
        default: return true;
    }
}

namespace {
std::vector<Value> function_tables(const std::vector<Value>& keys, const std::vector<Value>& vals) {
    std::vector<Value> out;
    if (vals.empty() && !keys.empty()) return out;
    std::vector<std::size_t> idx(keys.size(), 0);
    while (true) {
        std::vector<std::pair<Value, Value>> es;
        es.reserve(keys.size());
        for (std::size_t i = 0; i < keys.size(); ++i) es.emplace_back(keys[i], vals[idx[i]]);
        out.push_back(Value::table(std::move(es)));
        std::size_t k = keys.size();
        while (k > 0) {
            --k;
            if (++idx[k] < vals.size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (keys.empty()) return out;
    }
}
}  // namespace

std::vector<Value> enumerate(const TypeCode& code) {
    if (!is_enumerable(code)) throw NotEnumerable(code.to_string());
    auto card = cardinality(code);
    if (!card || *card > kMaxEnumeration) throw BudgetExceeded("enumerating " + code.to_string());
    switch (code.kind()) {
        case CodeKind::Empty: return {};
        case CodeKind::Unit: return {Value::unit()};
        case CodeKind::Bool: return {Value::boolean(false), Value::boolean(true)};
        case CodeKind::Fin: {
            std::vector<Value> out;
            for (std::size_t i = 0; i < code.fin_size(); ++i) out.push_back(Value::fin(i));
            return out;
        }
        case CodeKind::Sum: {
            std::vector<Value> out;
            for (auto& v : enumerate(code.left())) out.push_back(Value::inl(v));
            for (auto& v : enumerate(code.right())) out.push_back(Value::inr(v));
            return out;
        }
        case CodeKind::Prod: {
            std::vector<Value> out;
            auto rs = enumerate(code.right());
            for (auto& l : enumerate(code.left()))
                for (auto& r : rs) out.push_back(Value::pair(l, r));
            return out;
        }
        case CodeKind::Fun: return function_tables(enumerate(code.left()), enumerate(code.right()));
        case CodeKind::Listed: return code.members();
        case CodeKind::Opaque: break;
    }
    throw NotEnumerable(code.to_string());
}

std::vector<Value> sample(const TypeCode& code, int depth) {
    if (is_enumerable(code)) return enumerate(code);
    switch (code.kind()) {
        case CodeKind::Opaque:
            if (code.sampler()) return code.sampler()(depth);
            throw NotEnumerable(code.to_string());
        case CodeKind::Sum: {
            std::vector<Value> out;
            for (auto& v : sample(code.left(), depth)) out.push_back(Value::inl(v));
            for (auto& v : sample(code.right(), depth)) out.push_back(Value::inr(v));
            return out;
        }
        case CodeKind::Prod: {
            std::vector<Value> out;
            auto rs = sample(code.right(), depth);
            for (auto& l : sample(code.left(), depth))
                for (auto& r : rs) out.push_back(Value::pair(l, r));
            return out;
        }
        case CodeKind::Fun:
            if (!is_enumerable(code.left())) throw NotEnumerable(code.to_string());
            return function_tables(enumerate(code.left()), sample(code.right(), depth));
        default: throw NotEnumerable(code.to_string());
    }
}

bool check(const TypeCode& code, const Value& v) {
    switch (code.kind()) {
        case CodeKind::Empty: return false;
        case CodeKind::Unit: return v.kind() == ValueKind::Unit;
        case CodeKind::Bool: return v.kind() == ValueKind::Bool;
        case CodeKind::Fin: return v.kind() == ValueKind::Fin && v.as_fin() < code.fin_size();
        case CodeKind::Sum:
            if (v.kind() == ValueKind::Inl) return check(code.left(), v.payload());
            if (v.kind() == ValueKind::Inr) return check(code.right(), v.payload());
            return false;
        case CodeKind::Prod:
            return v.kind() == ValueKind::Pair && check(code.left(), v.first()) && check(code.right(), v.second());
        case CodeKind::Fun: {
            if (v.kind() == ValueKind::Func) return true;
            if (v.kind() != ValueKind::Table) return false;
            if (!is_enumerable(code.left())) {
                for (const auto& [k, x] : v.entries())
                    if (!check(code.left(), k) || !check(code.right(), x)) return false;
                return true;
            }
            auto keys = enumerate(code.left());
            const auto& es = v.entries();
            if (keys.size() != es.size()) return false;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                if (compare(keys[i], es[i].first) != 0) return false;
                if (!check(code.right(), es[i].second)) return false;
            }
            return true;
        }
        case CodeKind::Opaque:
            return v.kind() != ValueKind::Opaque || v.name() == code.name();
        case CodeKind::Listed:
            return std::binary_search(code.members().begin(), code.members().end(), v);
    }
    return false;
}

bool value_eq(const TypeCode& code, const Value& v, const Value& w) {
    switch (code.kind()) {
        case CodeKind::Sum:
            if (v.kind() != w.kind()) return false;
            return value_eq(v.kind() == ValueKind::Inl ? code.left() : code.right(), v.payload(), w.payload());
        case CodeKind::Prod:
            return value_eq(code.left(), v.first(), w.first()) && value_eq(code.right(), v.second(), w.second());
        case CodeKind::Fun: {
            if (v.kind() == ValueKind::Table && w.kind() == ValueKind::Table && !is_enumerable(code.left())) {
                if (v.entries().size() != w.entries().size()) return false;
                for (const auto& [k, x] : v.entries()) {
                    auto y = w.lookup(k);
                    if (!y || !value_eq(code.right(), x, *y)) return false;
                }
                return true;
            }
            for (const auto& k : enumerate(code.left()))
                if (!value_eq(code.right(), v.apply(k), w.apply(k))) return false;
            return true;
        }
        case CodeKind::Opaque: return comparator_for(code.name())(v, w);
        default: return compare(v, w) == 0;
    }
}

std::vector<Value> enumerate_dependent(const std::vector<std::pair<Value, TypeCode>>& index) {
    std::vector<std::vector<Value>> choices;
    std::uint64_t total = 1;
    for (const auto& [k, c] : index) {
        choices.push_back(enumerate(c));
        total = sat_mul(total, choices.back().size());
        if (choices.back().empty()) return {};
    }
    if (total > kMaxEnumeration) throw BudgetExceeded("dependent product of size " + std::to_string(total));
    std::vector<Value> out;
    out.reserve(total);
    std::vector<std::size_t> idx(index.size(), 0);
    while (true) {
        std::vector<std::pair<Value, Value>> es;
        es.reserve(index.size());
        for (std::size_t i = 0; i < index.size(); ++i) es.emplace_back(index[i].first, choices[i][idx[i]]);
        out.push_back(Value::table(std::move(es)));
        std::size_t k = index.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++idx[k] < choices[k].size()) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if (done) return out;
    }
}

// ---------------------------------------------------------------- comparators

namespace {
struct Registry {
    std::mutex mu;
    std::map<std::string, Comparator> cmps;
};
Registry& registry() {
    static Registry r;
    static const bool seeded = [] {
        Comparator structural = [](const Value& a, const Value& b) { return compare(a, b) == 0; };
        for (const char* n : {"nat", "int", "tree", "path", "io", "trace", "iotree", "iopath", "subsets"})
            r.cmps[n] = structural;
        return true;
    }();
    (void)seeded;
    return r;
}
}  // namespace

void register_comparator(const std::string& name, Comparator cmp) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    r.cmps[name] = std::move(cmp);
}

Comparator comparator_for(const std::string& name) {
    auto& r = registry();
    std::lock_guard lock(r.mu);
    auto it = r.cmps.find(name);
    if (it == r.cmps.end()) throw NoComparator(name);
    return it->second;
}

Value tabulate(const std::vector<Value>& keys, const Fn& f) {
    std::vector<std::pair<Value, Value>> es;
    es.reserve(keys.size());
    for (const auto& k : keys) es.emplace_back(k, f(k));
    return Value::table(std::move(es));
}

Value tabulate(const TypeCode& dom, const Fn& f) { return tabulate(enumerate(dom), f); }

}  // namespace comodule
