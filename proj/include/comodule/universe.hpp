#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace comodule {

struct NotEnumerable : std::runtime_error {
    explicit NotEnumerable(const std::string& what) : std::runtime_error("not enumerable: " + what) {}
};
struct NoComparator : std::runtime_error {
    explicit NoComparator(const std::string& name) : std::runtime_error("no comparator registered for opaque type " + name) {}
};
struct TypeMismatch : std::runtime_error {
    explicit TypeMismatch(const std::string& what) : std::runtime_error("type mismatch: " + what) {}
};
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

class Value;
class TypeCode;

enum class CodeKind { Empty, Unit, Bool, Fin, Sum, Prod, Fun, Opaque, Listed };

// Produces probe values for a non-enumerable code, up to a depth bound.
using Sampler = std::function<std::vector<Value>(int depth)>;

class TypeCode {
public:
    TypeCode();  // Empty

    static TypeCode empty();
    static TypeCode unit();
    static TypeCode boolean();
    static TypeCode fin(std::size_t n);
    static TypeCode sum(TypeCode l, TypeCode r);
    static TypeCode prod(TypeCode l, TypeCode r);
    static TypeCode fun(TypeCode dom, TypeCode cod);
    static TypeCode opaque(std::string name, Sampler sampler = {});
    // A finite code given by an explicit member list (sorted and deduplicated
    // on construction). Used for derived finite types such as the paths of a
    // fixed tree, which the binary constructors cannot express.
    static TypeCode listed(std::string label, std::vector<Value> members);

    CodeKind kind() const;
    std::size_t fin_size() const;
    const TypeCode& left() const;   // Sum/Prod left, Fun domain
    const TypeCode& right() const;  // Sum/Prod right, Fun codomain
    const std::string& name() const;
    const std::vector<Value>& members() const;
    const Sampler& sampler() const;

    std::string to_string() const;

private:
    struct Node;
    explicit TypeCode(std::shared_ptr<const Node> n);
    std::shared_ptr<const Node> node_;
};

bool operator==(const TypeCode& a, const TypeCode& b);
inline bool operator!=(const TypeCode& a, const TypeCode& b) { return !(a == b); }

enum class ValueKind { Unit, Bool, Fin, Pair, Inl, Inr, Table, Opaque, Ctor, Func };

using Fn = std::function<Value(const Value&)>;

class Value {
public:
    Value();  // unit

    static Value unit();
    static Value boolean(bool b);
    static Value fin(std::size_t i);
    static Value pair(Value a, Value b);
    static Value inl(Value v);
    static Value inr(Value v);
    // Keys are sorted canonically; duplicate keys throw TypeMismatch.
    static Value table(std::vector<std::pair<Value, Value>> entries);
    static Value opaque(std::string name, std::int64_t atom);
    // Named constructor with arguments, used for inductive data (trees, paths,
    // computations, traces, finite subsets).
    static Value ctor(std::string tag, std::vector<Value> args = {});
    // A closure; `source` optionally records a textual form for printing and
    // serialization.
    static Value func(Fn f, std::string source = {});

    ValueKind kind() const;
    bool as_bool() const;
    std::size_t as_fin() const;
    const Value& first() const;    // Pair
    const Value& second() const;   // Pair
    const Value& payload() const;  // Inl/Inr
    const std::vector<std::pair<Value, Value>>& entries() const;  // Table
    const std::string& name() const;  // Opaque name / Ctor tag
    std::int64_t atom() const;         // Opaque
    const std::vector<Value>& args() const;  // Ctor
    const Value& arg(std::size_t i) const;
    const std::string& source() const;       // Func

    bool is(const char* tag) const { return kind() == ValueKind::Ctor && name() == tag; }

    // Table lookup or closure call.
    Value apply(const Value& x) const;
    // Table lookup returning nullopt when absent.
    std::optional<Value> lookup(const Value& x) const;

    std::string to_string() const;

    // Shares its node with `o`.
    bool same_node(const Value& o) const { return node_ == o.node_; }

private:
    struct Node;
    explicit Value(std::shared_ptr<const Node> n);
    std::shared_ptr<const Node> node_;
};

// Structural total order. Closures are not comparable and throw TypeMismatch.
int compare(const Value& a, const Value& b);
inline bool operator==(const Value& a, const Value& b) { return compare(a, b) == 0; }
inline bool operator!=(const Value& a, const Value& b) { return compare(a, b) != 0; }
inline bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

// nullopt means infinite. Finite counts saturate at UINT64_MAX.
using Cardinality = std::optional<std::uint64_t>;

Cardinality cardinality(const TypeCode& code);
bool is_enumerable(const TypeCode& code);
std::vector<Value> enumerate(const TypeCode& code);
// Probe values: enumeration when possible, otherwise the opaque sampler.
std::vector<Value> sample(const TypeCode& code, int depth);

bool check(const TypeCode& code, const Value& v);
bool value_eq(const TypeCode& code, const Value& v, const Value& w);

// All total choice tables over the index, first key most significant.
std::vector<Value> enumerate_dependent(const std::vector<std::pair<Value, TypeCode>>& index);

using Comparator = std::function<bool(const Value&, const Value&)>;
void register_comparator(const std::string& name, Comparator cmp);
// Throws NoComparator if absent.
Comparator comparator_for(const std::string& name);

// Helpers for building tables from closures over an enumerable domain.
Value tabulate(const TypeCode& dom, const Fn& f);
Value tabulate(const std::vector<Value>& keys, const Fn& f);

}  // namespace comodule
