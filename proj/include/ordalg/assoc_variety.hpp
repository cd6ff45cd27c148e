#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/monad.hpp"

namespace ordalg {

struct AssocVarietyConfig {
  KleisliTriple monad;
  /// Bound on |Gamma| for operation arities.
  std::size_t max_context_size = 2;
  /// Bound on |Delta| in the Kleisli-compatibility equations; at most max_context_size.
  std::size_t max_arg_context_size = 2;
};

/// The generated signature: one symbol per element of T(Gamma) for every
/// context class Gamma within the bound.
struct GeneratedSignature {
  std::shared_ptr<const Signature> signature;
  std::vector<ContextId> contexts;
  /// symbols[c][e]: the symbol for element e of T(contexts[c]).
  std::vector<std::vector<std::size_t>> symbols;
  /// origin[op] = (context index, element index).
  std::vector<std::pair<std::size_t, std::size_t>> origin;

  std::optional<std::size_t> context_index(const FinPoset& gamma) const;
};

GeneratedSignature generate_signature(const AssocVarietyConfig& cfg);

struct GeneratedInequations {
  /// Gamma |- sigma <= tau for sigma < tau in T(Gamma).
  std::vector<Inequation> order;
  /// Gamma |- k*(sigma) = sigma(k), each stored as two inequations.
  std::vector<Inequation> kleisli;
  std::size_t kleisli_equalities() const { return kleisli.size() / 2; }
  std::vector<Inequation> all() const;
};

GeneratedInequations generate_inequations(const AssocVarietyConfig& cfg,
                                          const GeneratedSignature& sig);

/// Configuration plus the generated theory, computed once.
class AssociatedVariety {
 public:
  explicit AssociatedVariety(AssocVarietyConfig cfg);

  const AssocVarietyConfig& config() const { return cfg_; }
  const KleisliTriple& monad() const { return cfg_.monad; }
  const GeneratedSignature& generated() const { return sig_; }
  const std::shared_ptr<const Signature>& signature() const { return sig_.signature; }
  const GeneratedInequations& inequations() const { return ineqs_; }
  Theory theory() const;

 private:
  AssocVarietyConfig cfg_;
  GeneratedSignature sig_;
  GeneratedInequations ineqs_;
};

/// TX with sigma_TX(f) = f*(sigma).
FiniteAlgebra algebra_on_TX(const AssociatedVariety& v, const FinPoset& x);

struct MonVarEntry {
  FinPoset poset;
  TheoryReport report;
};

struct MonVarReport {
  std::string monad;
  std::vector<MonVarEntry> entries;
  std::size_t inequation_count = 0;
  std::size_t checks() const;
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Satisfaction of every generated inequation in algebra_on_TX(X) for each X.
MonVarReport verify_monvar(const AssociatedVariety& v, const std::vector<FinPoset>& test_posets);

struct FreeExtension {
  /// fbar(sigma) = sigma_A(f) on T(Gamma).
  MonotoneMap extension;
  bool monotone = false;
  bool homomorphism = false;
  bool extends_f = false;
  /// Homomorphisms h: T(Gamma) -> A with h . unit = f.
  std::size_t matching_homomorphisms = 0;
  bool equals_unique = false;
  bool ok() const {
    return monotone && homomorphism && extends_f && matching_homomorphisms == 1 && equals_unique;
  }
};

/// f: Gamma -> A with Gamma a canonical context within the bound. Throws
/// NotAModel when A fails a generated inequation (pass check_model = false
/// when the caller has already established it).
FreeExtension free_extension(const AssociatedVariety& v, const FiniteAlgebra& a,
                             const MonotoneMap& f, bool check_model = true);

struct CoherenceReport {
  std::string monad;
  /// (X, coherence of TX)
  std::vector<std::pair<FinPoset, CoherenceCheck>> tx;
  std::size_t models_checked = 0;
  std::size_t incoherent_models = 0;
  std::optional<FiniteAlgebra> first_incoherent;
  bool passed() const;
};

/// algebra_on_TX is coherent for each test poset, and every model of the
/// generated theory on a carrier of size <= model_carrier_max is coherent.
CoherenceReport check_associated_coherent(const AssociatedVariety& v,
                                          const std::vector<FinPoset>& test_posets,
                                          std::size_t model_carrier_max = 2);

/// For each symbol of arity Gamma, the inequation Gamma' |- sigma(x) <= sigma(x')
/// over the doubled context Gamma' in which x -> x and x -> x' are embeddings
/// with x <= x'. Satisfied exactly by the algebras where sigma is monotone.
std::vector<Inequation> coherence_inequations(const Signature& sig);

/// A signature whose symbols of each arity are ordered; labels of `symbols`
/// name the operations.
struct OrderedArity {
  FinPoset arity;
  FinPoset symbols;
};

struct DiscretizedSignature {
  std::shared_ptr<const Signature> signature;
  std::vector<Inequation> inequations;
};

/// Forgets the order on symbols and records it as Gamma |- sigma(x) <= tau(x).
DiscretizedSignature discretize_signature(const std::vector<OrderedArity>& ordered);

}  // namespace ordalg
