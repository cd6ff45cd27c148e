#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/monad.hpp"

namespace ordalg {

/// The Kleisli category of a monad restricted to small contexts, presented as
/// a Lawvere theory: a morphism a -> b is a monotone map objects[b] -> T(objects[a]).
struct FiniteTheoryCat {
  std::string monad;
  std::vector<ContextId> objects;
  /// homs[a][b]: the hom-poset, elements in the order of the valuation space.
  std::vector<std::vector<std::shared_ptr<const ValuationSpace>>> homs;
  std::vector<std::vector<FinPoset>> hom_posets;
  std::vector<std::size_t> identity;
  /// compose[(a * n + b) * n + c][f * |hom(b, c)| + g] = f* . g in hom(a, c)
  /// for f in hom(a, b) and g in hom(b, c).
  std::vector<std::vector<std::size_t>> compose;
  bool enriched = false;

  std::size_t size() const { return objects.size(); }
  const FinPoset& hom(std::size_t a, std::size_t b) const { return hom_posets[a][b]; }
  std::size_t composite(std::size_t a, std::size_t b, std::size_t c, std::size_t f,
                        std::size_t g) const {
    const std::size_t n = objects.size();
    return compose[(a * n + b) * n + c][f * homs[b][c]->size() + g];
  }
  std::vector<std::size_t>& table(std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t n = objects.size();
    return compose[(a * n + b) * n + c];
  }
};

/// Objects are all context classes of size <= max_size. Throws TooLarge past 3
/// and Explosion when the composition tables exceed the cap in total.
FiniteTheoryCat build_theory(const KleisliTriple& t, std::size_t max_size,
                             std::size_t cap = 50'000'000);

/// Laws `left-identity`, `right-identity`, `associativity` and, when the
/// category is flagged enriched, `monotone-composition`.
LawReport check_theory_laws(const FiniteTheoryCat& cat);

/// One line per pair of objects: `a -> b : n`.
std::string hom_size_table(const FiniteTheoryCat& cat);

}  // namespace ordalg
