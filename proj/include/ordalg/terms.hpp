#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordalg/poset.hpp"

namespace ordalg {

/// An operation symbol whose arity is a finite poset. Arguments are supplied in
/// the arity's index order.
struct OpSymbol {
  std::string name;
  FinPoset arity;
  ContextId arity_class;
};

/// Operation symbols with poset arities. Symbols are referred to by their
/// position; names are unique.
class Signature {
 public:
  Signature() = default;

  /// Throws Error on a duplicate name.
  std::size_t add(std::string name, FinPoset arity);

  std::size_t size() const { return ops_.size(); }
  const OpSymbol& op(std::size_t i) const { return ops_[i]; }
  const std::vector<OpSymbol>& ops() const { return ops_; }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Symbols whose arity lies in the given isomorphism class.
  std::vector<std::size_t> ops_of(const ContextId& arity) const;
  /// Distinct arity classes, in order of first appearance.
  std::vector<ContextId> arities() const;

  bool operator==(const Signature& other) const;

 private:
  std::vector<OpSymbol> ops_;
};

/// Syntax tree over the elements of a context. Immutable; subterms are shared.
class Term {
 public:
  static Term var(std::size_t index);
  static Term app(std::size_t op, std::vector<Term> args);

  bool is_var() const { return args_ == nullptr; }
  std::size_t var_index() const { return index_; }
  std::size_t op() const { return index_; }
  const std::vector<Term>& args() const;

  /// Nesting depth of applications; variables have depth 0.
  std::size_t depth() const { return depth_; }

  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

 private:
  Term() = default;
  std::size_t index_ = 0;
  std::size_t depth_ = 0;
  std::shared_ptr<const std::vector<Term>> args_;
};

/// Application node; throws ArityMismatch unless |args| equals the arity size.
Term make_term(const Signature& sig, std::size_t op, std::vector<Term> args);

/// The symbol applied to the variables of its own arity.
Term op_as_term(const Signature& sig, std::size_t op);

/// True iff every application has the right argument count and every variable
/// lies below context_size.
bool well_formed(const Signature& sig, std::size_t context_size, const Term& t);

/// Renders `name` or `op(t1,...,tn)`; variables use the context's labels.
std::string to_string(const Signature& sig, const FinPoset& context, const Term& t);

/// All terms of application depth <= depth, variables first. Throws Explosion
/// past the cap.
std::vector<Term> enumerate_terms(const Signature& sig, const FinPoset& context,
                                  std::size_t depth,
                                  std::size_t cap = kDefaultEnumerationCap);

/// Gamma |- lhs <= rhs.
struct Inequation {
  std::string label;
  FinPoset context;
  Term lhs;
  Term rhs;
};

/// Gamma |- s = t as the two inequations s <= t and t <= s.
std::vector<Inequation> equality(std::string label, const FinPoset& context, const Term& s,
                                 const Term& t);

/// Renders `CTX |- s <= t`.
std::string to_string(const Signature& sig, const Inequation& e,
                      const std::string& context_name);

struct Theory {
  Signature signature;
  std::vector<Inequation> inequations;
  /// Restrict models to coherent algebras.
  bool coherent = false;
};

}  // namespace ordalg
