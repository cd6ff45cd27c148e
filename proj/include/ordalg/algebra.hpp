#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordalg/poset.hpp"
#include "ordalg/terms.hpp"

namespace ordalg {

/// All monotone maps dom -> cod in lexicographic order, with O(1) lookup of
/// the position of an image sequence.
class ValuationSpace {
 public:
  ValuationSpace(FinPoset dom, FinPoset cod);

  const FinPoset& dom() const { return dom_; }
  const FinPoset& cod() const { return cod_; }
  std::size_t size() const { return images_.size(); }
  const std::vector<std::size_t>& at(std::size_t i) const { return images_[i]; }
  const std::vector<std::vector<std::size_t>>& images() const { return images_; }

  /// Position of the image sequence, or nullopt when it is not a monotone map.
  std::optional<std::size_t> find(std::span<const std::size_t> image) const;

 private:
  FinPoset dom_;
  FinPoset cod_;
  std::vector<std::vector<std::size_t>> images_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

using ValuationSpaces = std::vector<std::shared_ptr<const ValuationSpace>>;

/// One valuation space per operation symbol; symbols with the same arity share.
ValuationSpaces valuation_spaces(const Signature& sig, const FinPoset& carrier);

/// A finite Sigma-algebra: a carrier poset and, for every operation symbol, a
/// total table indexed by the lexicographic position of the monotone valuation.
class FiniteAlgebra {
 public:
  using Operation = std::function<std::size_t(std::size_t op, const std::vector<std::size_t>&)>;

  FiniteAlgebra(std::shared_ptr<const Signature> sig, FinPoset carrier,
                std::vector<std::vector<std::size_t>> tables);
  FiniteAlgebra(std::shared_ptr<const Signature> sig, FinPoset carrier, ValuationSpaces spaces,
                std::vector<std::vector<std::size_t>> tables);

  /// Fills every table by calling op_fn on each monotone valuation.
  static FiniteAlgebra from_operation(std::shared_ptr<const Signature> sig, FinPoset carrier,
                                      const Operation& op_fn);

  const Signature& signature() const { return *sig_; }
  const std::shared_ptr<const Signature>& signature_ptr() const { return sig_; }
  const FinPoset& carrier() const { return carrier_; }
  const ValuationSpace& valuations(std::size_t op) const { return *spaces_[op]; }
  const ValuationSpaces& spaces() const { return spaces_; }
  const std::vector<std::size_t>& table(std::size_t op) const { return tables_[op]; }
  const std::vector<std::vector<std::size_t>>& tables() const { return tables_; }

  /// sigma_A(u). Throws NotMonotone when u is not a monotone valuation.
  std::size_t apply(std::size_t op, std::span<const std::size_t> valuation) const;
  std::size_t apply_index(std::size_t op, std::size_t valuation_index) const {
    return tables_[op][valuation_index];
  }

 private:
  std::shared_ptr<const Signature> sig_;
  FinPoset carrier_;
  ValuationSpaces spaces_;
  std::vector<std::vector<std::size_t>> tables_;
};

bool same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b);

// --- evaluation -----------------------------------------------------------

/// The partial evaluation map f#: nullopt when some application receives
/// arguments that violate the order of its arity. Throws SignatureMismatch on
/// foreign symbols.
std::optional<std::size_t> evaluate(const FiniteAlgebra& a, std::span<const std::size_t> valuation,
                                    const Term& t);
std::optional<std::size_t> evaluate(const FiniteAlgebra& a, const MonotoneMap& f, const Term& t);

enum class FailureKind { LhsUndefined, RhsUndefined, NotLeq };
std::string to_string(FailureKind k);

struct SatisfactionFailure {
  std::vector<std::size_t> valuation;
  FailureKind kind;
  std::optional<std::size_t> lhs;
  std::optional<std::size_t> rhs;
};

struct SatisfactionResult {
  bool holds = true;
  /// First failing valuation in lexicographic order.
  std::optional<SatisfactionFailure> counterexample;
  explicit operator bool() const { return holds; }
};

SatisfactionResult satisfies(const FiniteAlgebra& a, const Inequation& e);

struct CoherenceWitness {
  std::size_t op;
  std::vector<std::size_t> smaller;
  std::vector<std::size_t> larger;
};

struct CoherenceCheck {
  bool coherent = true;
  std::optional<CoherenceWitness> witness;
  explicit operator bool() const { return coherent; }
};

/// Every operation is monotone in its valuation, pointwise.
CoherenceCheck is_coherent(const FiniteAlgebra& a);

struct InequationVerdict {
  std::size_t index;
  std::string label;
  SatisfactionResult result;
};

struct TheoryReport {
  std::vector<InequationVerdict> verdicts;
  /// Present iff the theory is coherent.
  std::optional<CoherenceCheck> coherence;
  bool passed() const;
};

TheoryReport satisfies_theory(const FiniteAlgebra& a, const Theory& th);

// --- homomorphisms and constructions -------------------------------------

struct HomomorphismWitness {
  std::size_t op;
  std::vector<std::size_t> valuation;
};

struct HomomorphismCheck {
  bool holds = true;
  std::optional<HomomorphismWitness> witness;
  explicit operator bool() const { return holds; }
};

/// h(sigma_A(u)) = sigma_B(h . u) for all symbols and valuations; h must be monotone.
HomomorphismCheck is_homomorphism(const MonotoneMap& h, const FiniteAlgebra& a,
                                  const FiniteAlgebra& b);

/// Every homomorphism a -> b, in lexicographic order of images.
std::vector<MonotoneMap> hom_search(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                    std::size_t cap = kDefaultEnumerationCap);

struct ProductAlgebra {
  FiniteAlgebra algebra;
  std::vector<MonotoneMap> projections;
};

/// Componentwise operations; the empty product is the one-point algebra.
ProductAlgebra product_algebra(std::shared_ptr<const Signature> sig,
                               std::span<const FiniteAlgebra> factors);

struct Subalgebra {
  FiniteAlgebra algebra;
  MonotoneMap inclusion;
};

/// Full subposet on S with restricted operations. Throws ClosureViolation
/// naming the first application that leaves S.
Subalgebra subalgebra(const FiniteAlgebra& a, ElementSet s);

/// Operations sigma_C(h) = c(sigma_B(i . h)) on C = c.cod() for a split pair
/// f, g: A -> B with c . f = c . g, c . i = id, f . j = id, g . j = i . c.
/// Throws SplitEquationViolated naming the failing equation.
FiniteAlgebra split_coequalizer(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                const MonotoneMap& f, const MonotoneMap& g,
                                const MonotoneMap& c, const MonotoneMap& i,
                                const MonotoneMap& j);

struct AlgebraChainUnion {
  FiniteAlgebra algebra;
  std::vector<MonotoneMap> injections;
};

/// Union of a finite chain of embedding homomorphisms stages[k] -> stages[k+1].
AlgebraChainUnion chain_union(std::span<const FiniteAlgebra> stages,
                              std::span<const MonotoneMap> embeddings);

/// Visits every algebra on the carrier satisfying all inequations of the theory
/// (and coherent, when the theory says so). Tables are assigned one symbol at a
/// time, smaller arities first, and each inequation is checked as soon as all
/// of its symbols are assigned. The visitor returns false to stop. Returns the
/// number of models visited.
std::size_t for_each_model(const std::shared_ptr<const Signature>& sig,
                           const std::vector<Inequation>& inequations, bool coherent,
                           const FinPoset& carrier,
                           const std::function<bool(const FiniteAlgebra&)>& visit);

/// Renders a valuation as `[a b c]` using the carrier's labels.
std::string valuation_string(const FinPoset& carrier, std::span<const std::size_t> valuation);

}  // namespace ordalg
