#pragma once

#include <string>
#include <vector>

#include "ordalg/algebra.hpp"
#include "ordalg/catalog.hpp"

namespace fixtures {

using namespace ordalg;

inline std::vector<FinPoset> posets_up_to(std::size_t n) {
  std::vector<FinPoset> out;
  for (const auto& c : iso_classes_up_to(n)) out.push_back(c.representative());
  return out;
}

/// Every model of the theory on every carrier class of size <= max_carrier.
inline std::vector<FiniteAlgebra> models(const std::shared_ptr<const Signature>& sig,
                                         const Theory& th, std::size_t max_carrier) {
  std::vector<FiniteAlgebra> out;
  for (const auto& x : posets_up_to(max_carrier)) {
    for_each_model(sig, th.inequations, th.coherent, x, [&](const FiniteAlgebra& a) {
      out.push_back(a);
      return true;
    });
  }
  return out;
}

/// Every algebra for the signature on the given carrier.
inline std::vector<FiniteAlgebra> all_algebras(const std::shared_ptr<const Signature>& sig,
                                               const FinPoset& carrier) {
  std::vector<FiniteAlgebra> out;
  for_each_model(sig, {}, false, carrier, [&](const FiniteAlgebra& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

/// Linear-signature algebra on the 2-chain a < b; `plus` rows [a a], [a b], [b b].
inline FiniteAlgebra linear_on_chain2(std::vector<std::size_t> plus, std::vector<std::size_t> at) {
  return FiniteAlgebra(catalog::linear_signature(), FinPoset::chain(2).with_labels({"a", "b"}),
                       {std::move(plus), std::move(at)});
}

}  // namespace fixtures
