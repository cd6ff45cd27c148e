#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "ordalg/algebra.hpp"

namespace ordalg {

/// One stage W_k of the free-algebra chain; its elements are terms over the
/// generators.
struct FreeLevel {
  FinPoset poset;
  std::vector<Term> elements;
  std::map<Term, std::size_t> index;
};

/// Finite prefix W_0 -> W_1 -> ... -> W_n of the chain W_0 = X,
/// W_{k+1} = H W_k + X whose union carries the free (coherent) algebra on X.
struct FreeChain {
  std::shared_ptr<const Signature> signature;
  FinPoset generators;
  bool coherent = false;
  std::vector<FreeLevel> levels;
  /// embeddings[k]: W_k -> W_{k+1}, inclusion of terms.
  std::vector<MonotoneMap> embeddings;
};

/// Builds W_0 .. W_n. Each level lists the generators first, then the
/// applications sigma(f) by symbol and lexicographic valuation f: arity -> W_k.
/// Applications are pairwise incomparable unless `coherent`, in which case
/// sigma(f) <= sigma(g) iff f <= g pointwise. Throws Explosion past the cap.
FreeChain free_chain(std::shared_ptr<const Signature> sig, const FinPoset& generators,
                     std::size_t n, bool coherent,
                     std::size_t cap = kDefaultEnumerationCap);

/// t -> f#(t) on level k. Throws UndefinedEvaluation if some element has no
/// value (only possible for a coherent chain into a non-coherent algebra) and
/// NotMonotone if the result is not monotone.
MonotoneMap eval_into(const FreeChain& chain, std::size_t level, const FiniteAlgebra& a,
                      const MonotoneMap& f);

}  // namespace ordalg
