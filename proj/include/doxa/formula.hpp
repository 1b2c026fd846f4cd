#ifndef DOXA_FORMULA_HPP
#define DOXA_FORMULA_HPP

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace doxa {

// Sorted, duplicate-free set of identifiers. Datasets and coalitions are both
// name sets; they only differ in which game universe they are checked against.
class NameSet {
public:
  NameSet() = default;
  NameSet(std::initializer_list<std::string> names) : items_(names) { normalize(); }
  explicit NameSet(std::vector<std::string> names) : items_(std::move(names)) { normalize(); }

  bool contains(const std::string& name) const {
    return std::binary_search(items_.begin(), items_.end(), name);
  }
  bool subset_of(const NameSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }
  bool disjoint_with(const NameSet& other) const {
    for (const auto& n : items_)
      if (other.contains(n)) return false;
    return true;
  }
  NameSet united(const NameSet& other) const {
    std::vector<std::string> out;
    std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                   std::back_inserter(out));
    return NameSet(std::move(out));
  }
  NameSet intersected(const NameSet& other) const {
    std::vector<std::string> out;
    std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                          std::back_inserter(out));
    return NameSet(std::move(out));
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<std::string>& items() const { return items_; }

  bool operator==(const NameSet&) const = default;

  // "a,b,c" (no braces)
  std::string join() const {
    std::string out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ',';
      out += items_[i];
    }
    return out;
  }
  // "{a,b,c}"
  std::string str() const { return "{" + join() + "}"; }

private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  std::vector<std::string> items_;
};

using VarSet = NameSet;
using ActorSet = NameSet;

// Formula constructors. The first five survive desugaring; the rest are
// syntactic sugar removed by desugar().
enum class Kind {
  Atom,
  Neg,
  Impl,
  Belief,          // B{T}{X} body
  Strategy,        // [C]{A;P}{X} body
  And,
  Or,
  Iff,
  Know,            // K{X} body        == B{}{X} body
  StrategySingle,  // [C]{T}{X} body   == [C]{T;T}{X} body
  True,
  False,
};

class Formula;

struct FormulaNode {
  Kind kind;
  std::string name;                         // Atom
  std::shared_ptr<const FormulaNode> a, b;  // unary: a; binary: a, b
  NameSet coalition;                        // Strategy, StrategySingle
  NameSet trust;                            // Belief, StrategySingle
  NameSet ante, post;                       // Strategy
  NameSet data;                             // Belief, Strategy, StrategySingle, Know
};

// Immutable formula handle with value semantics; structural equality.
class Formula {
public:
  Formula() = default;  // null handle, only useful as a container placeholder

  Kind kind() const { return node_->kind; }
  bool valid() const { return node_ != nullptr; }

  const std::string& atom_name() const {
    assert(kind() == Kind::Atom);
    return node_->name;
  }
  Formula body() const { return Formula(node_->a); }
  Formula lhs() const { return Formula(node_->a); }
  Formula rhs() const { return Formula(node_->b); }
  const NameSet& coalition() const { return node_->coalition; }
  const NameSet& trust() const { return node_->trust; }
  const NameSet& ante() const { return node_->ante; }
  const NameSet& post() const { return node_->post; }
  const NameSet& data() const { return node_->data; }
  const FormulaNode* node() const { return node_.get(); }
  const std::shared_ptr<const FormulaNode>& ptr() const { return node_; }

  bool operator==(const Formula& other) const { return equal(node_.get(), other.node_.get()); }
  bool operator!=(const Formula& other) const { return !(*this == other); }

  std::string str() const;

private:
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}

  static bool equal(const FormulaNode* x, const FormulaNode* y) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case Kind::Atom: return x->name == y->name;
      case Kind::True:
      case Kind::False: return true;
      case Kind::Neg: return equal(x->a.get(), y->a.get());
      case Kind::Impl:
      case Kind::And:
      case Kind::Or:
      case Kind::Iff: return equal(x->a.get(), y->a.get()) && equal(x->b.get(), y->b.get());
      case Kind::Know: return x->data == y->data && equal(x->a.get(), y->a.get());
      case Kind::Belief:
        return x->trust == y->trust && x->data == y->data && equal(x->a.get(), y->a.get());
      case Kind::StrategySingle:
        return x->coalition == y->coalition && x->trust == y->trust && x->data == y->data &&
               equal(x->a.get(), y->a.get());
      case Kind::Strategy:
        return x->coalition == y->coalition && x->ante == y->ante && x->post == y->post &&
               x->data == y->data && equal(x->a.get(), y->a.get());
    }
    return false;
  }

  std::shared_ptr<const FormulaNode> node_;

  friend Formula make_formula(FormulaNode&&);
};

inline Formula make_formula(FormulaNode&& n) {
  return Formula(std::make_shared<const FormulaNode>(std::move(n)));
}

inline Formula atom(std::string name) {
  FormulaNode n;
  n.kind = Kind::Atom;
  n.name = std::move(name);
  return make_formula(std::move(n));
}

namespace detail {
inline std::shared_ptr<const FormulaNode> hold(const Formula& f) {
  assert(f.valid());
  return f.ptr();
}
}  // namespace detail

inline Formula neg(const Formula& f) {
  FormulaNode n;
  n.kind = Kind::Neg;
  n.a = detail::hold(f);
  return make_formula(std::move(n));
}

inline Formula impl(const Formula& l, const Formula& r) {
  FormulaNode n;
  n.kind = Kind::Impl;
  n.a = detail::hold(l);
  n.b = detail::hold(r);
  return make_formula(std::move(n));
}

inline Formula belief(NameSet trust, NameSet data, const Formula& body) {
  FormulaNode n;
  n.kind = Kind::Belief;
  n.trust = std::move(trust);
  n.data = std::move(data);
  n.a = detail::hold(body);
  return make_formula(std::move(n));
}

inline Formula strategy(NameSet coalition, NameSet ante, NameSet post, NameSet data,
                        const Formula& body) {
  FormulaNode n;
  n.kind = Kind::Strategy;
  n.coalition = std::move(coalition);
  n.ante = std::move(ante);
  n.post = std::move(post);
  n.data = std::move(data);
  n.a = detail::hold(body);
  return make_formula(std::move(n));
}

inline Formula single_strategy(NameSet coalition, NameSet trust, NameSet data,
                               const Formula& body) {
  FormulaNode n;
  n.kind = Kind::StrategySingle;
  n.coalition = std::move(coalition);
  n.trust = std::move(trust);
  n.data = std::move(data);
  n.a = detail::hold(body);
  return make_formula(std::move(n));
}

inline Formula know(NameSet data, const Formula& body) {
  FormulaNode n;
  n.kind = Kind::Know;
  n.data = std::move(data);
  n.a = detail::hold(body);
  return make_formula(std::move(n));
}

inline Formula conj(const Formula& l, const Formula& r) {
  FormulaNode n;
  n.kind = Kind::And;
  n.a = detail::hold(l);
  n.b = detail::hold(r);
  return make_formula(std::move(n));
}

inline Formula disj(const Formula& l, const Formula& r) {
  FormulaNode n;
  n.kind = Kind::Or;
  n.a = detail::hold(l);
  n.b = detail::hold(r);
  return make_formula(std::move(n));
}

inline Formula equiv(const Formula& l, const Formula& r) {
  FormulaNode n;
  n.kind = Kind::Iff;
  n.a = detail::hold(l);
  n.b = detail::hold(r);
  return make_formula(std::move(n));
}

inline Formula top() {
  FormulaNode n;
  n.kind = Kind::True;
  return make_formula(std::move(n));
}

inline Formula bottom() {
  FormulaNode n;
  n.kind = Kind::False;
  return make_formula(std::move(n));
}

namespace detail {

// Printer precedence levels, loosest to tightest.
inline constexpr int kIff = 0;
inline constexpr int kImpl = 1;
inline constexpr int kOr = 2;
inline constexpr int kAnd = 3;
inline constexpr int kUnary = 4;

inline int level_of(const FormulaNode* n) {
  switch (n->kind) {
    case Kind::Iff: return kIff;
    case Kind::Impl: return kImpl;
    case Kind::Or: return kOr;
    case Kind::And: return kAnd;
    default: return kUnary;
  }
}

inline void print_to(const FormulaNode* n, int min_level, std::string& out) {
  const bool parens = level_of(n) < min_level;
  if (parens) out += '(';
  switch (n->kind) {
    case Kind::Atom: out += n->name; break;
    case Kind::True: out += "true"; break;
    case Kind::False: out += "false"; break;
    case Kind::Neg:
      out += '!';
      print_to(n->a.get(), kUnary, out);
      break;
    case Kind::Know:
      out += 'K';
      out += n->data.str();
      print_to(n->a.get(), kUnary, out);
      break;
    case Kind::Belief:
      out += 'B';
      out += n->trust.str();
      out += n->data.str();
      print_to(n->a.get(), kUnary, out);
      break;
    case Kind::StrategySingle:
      out += '[';
      out += n->coalition.join();
      out += ']';
      out += n->trust.str();
      out += n->data.str();
      print_to(n->a.get(), kUnary, out);
      break;
    case Kind::Strategy:
      out += '[';
      out += n->coalition.join();
      out += "]{";
      out += n->ante.join();
      out += ';';
      out += n->post.join();
      out += '}';
      out += n->data.str();
      print_to(n->a.get(), kUnary, out);
      break;
    case Kind::And:
      print_to(n->a.get(), kAnd, out);
      out += " & ";
      print_to(n->b.get(), kUnary, out);
      break;
    case Kind::Or:
      print_to(n->a.get(), kOr, out);
      out += " | ";
      print_to(n->b.get(), kAnd, out);
      break;
    case Kind::Impl:
      print_to(n->a.get(), kOr, out);
      out += " -> ";
      print_to(n->b.get(), kImpl, out);
      break;
    case Kind::Iff:
      print_to(n->a.get(), kIff, out);
      out += " <-> ";
      print_to(n->b.get(), kImpl, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

// Canonical text; parse(str()) reproduces the formula, sets come out sorted.
inline std::string Formula::str() const {
  assert(valid());
  std::string out;
  detail::print_to(node_.get(), detail::kIff, out);
  return out;
}

// Atom used to encode the "true" literal as (p0 -> p0).
inline const std::string& true_atom_name() {
  static const std::string name = "p0";
  return name;
}

// Rewrites sugar into the five core constructors. Idempotent.
inline Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: return f;
    case Kind::True: return impl(atom(true_atom_name()), atom(true_atom_name()));
    case Kind::False: return neg(impl(atom(true_atom_name()), atom(true_atom_name())));
    case Kind::Neg: return neg(desugar(f.body()));
    case Kind::Impl: return impl(desugar(f.lhs()), desugar(f.rhs()));
    case Kind::And: return neg(impl(desugar(f.lhs()), neg(desugar(f.rhs()))));
    case Kind::Or: return impl(neg(desugar(f.lhs())), desugar(f.rhs()));
    case Kind::Iff: {
      const Formula l = desugar(f.lhs());
      const Formula r = desugar(f.rhs());
      // (l <-> r)  ==  (l -> r) & (r -> l), with & expanded
      return neg(impl(impl(l, r), neg(impl(r, l))));
    }
    case Kind::Know: return belief({}, f.data(), desugar(f.body()));
    case Kind::Belief: return belief(f.trust(), f.data(), desugar(f.body()));
    case Kind::StrategySingle:
      return strategy(f.coalition(), f.trust(), f.trust(), f.data(), desugar(f.body()));
    case Kind::Strategy:
      return strategy(f.coalition(), f.ante(), f.post(), f.data(), desugar(f.body()));
  }
  return f;
}

inline bool is_desugared(const Formula& f) {
  switch (f.kind()) {
    case Kind::Atom: return true;
    case Kind::Neg: return is_desugared(f.body());
    case Kind::Impl: return is_desugared(f.lhs()) && is_desugared(f.rhs());
    case Kind::Belief:
    case Kind::Strategy: return is_desugared(f.body());
    default: return false;
  }
}

// Union of every dataset and coalition mentioned by modalities in f.
inline void collect_names(const Formula& f, VarSet& variables, ActorSet& actors) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::True:
    case Kind::False: return;
    case Kind::Neg: collect_names(f.body(), variables, actors); return;
    case Kind::Impl:
    case Kind::And:
    case Kind::Or:
    case Kind::Iff:
      collect_names(f.lhs(), variables, actors);
      collect_names(f.rhs(), variables, actors);
      return;
    case Kind::Know:
      variables = variables.united(f.data());
      collect_names(f.body(), variables, actors);
      return;
    case Kind::Belief:
      variables = variables.united(f.trust()).united(f.data());
      collect_names(f.body(), variables, actors);
      return;
    case Kind::StrategySingle:
      variables = variables.united(f.trust()).united(f.data());
      actors = actors.united(f.coalition());
      collect_names(f.body(), variables, actors);
      return;
    case Kind::Strategy:
      variables = variables.united(f.ante()).united(f.post()).united(f.data());
      actors = actors.united(f.coalition());
      collect_names(f.body(), variables, actors);
      return;
  }
}

}  // namespace doxa

#endif  // DOXA_FORMULA_HPP
