#include <doctest.h>

#include "fixtures.hpp"

using namespace ordalg;

namespace {

// Least upper bound of i and j in p, if there is one.
std::optional<std::size_t> join_in(const FinPoset& p, std::size_t i, std::size_t j) {
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.leq(i, z) && p.leq(j, z)) bounds.push_back(z);
  }
  for (std::size_t z : bounds) {
    bool least = true;
    for (std::size_t w : bounds) least = least && p.leq(z, w);
    if (least) return z;
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("signatures and theories") {
    const auto& lin = *catalog::linear_signature();
    REQUIRE(lin.size() == 2);
    CHECK(lin.op(0).name == "plus");
    CHECK(canonicalize(lin.op(0).arity) == canonicalize(FinPoset::chain(2)));
    CHECK(lin.op(1).arity.size() == 1);
    CHECK(catalog::linear_theory().inequations.size() == 1);

    const auto& sl = *catalog::semilattice_signature();
    CHECK(sl.op(0).arity.size() == 0);
    CHECK(canonicalize(sl.op(1).arity) == canonicalize(FinPoset::discrete(2)));

    const Theory internal = catalog::internal_semilattice_theory();
    CHECK(internal.coherent);
    std::size_t coherence = 0;
    for (const auto& e : internal.inequations) coherence += e.label.starts_with("coherence-") ? 1 : 0;
    CHECK(coherence == 2);
    // five equalities, two inequations each
    CHECK(internal.inequations.size() == 10 + 2);

    const Theory join = catalog::join_semilattice_theory();
    CHECK_FALSE(join.coherent);
    CHECK(join.inequations.size() == 4);
    CHECK(canonicalize(join.inequations.back().context).code() == "3.000011");

    const auto& bj = *catalog::bounded_join_signature();
    CHECK(bj.op(0).arity.size() == 1);
    CHECK(bj.op(1).arity.relation_count() == 5);
    CHECK(catalog::bounded_join_theory().inequations.size() == 4);
  }

  TEST_CASE("TX models its theory for every X of size at most 3") {
    for (const auto& x : fixtures::posets_up_to(3)) {
      INFO("X=", canonicalize(x).code());
      const auto conv = catalog::semilattice_on_TX(convex_monad(), x);
      CHECK(satisfies_theory(conv, catalog::internal_semilattice_theory()).passed());
      const auto down = catalog::semilattice_on_TX(downset_monad(), x);
      CHECK(satisfies_theory(down, catalog::join_semilattice_theory()).passed());
      CHECK(satisfies_theory(down, catalog::internal_semilattice_theory()).passed());
      const auto bdown = catalog::bounded_join_on_TX(bounded_downset_monad(), x);
      CHECK(satisfies_theory(bdown, catalog::bounded_join_theory()).passed());
    }
  }

  TEST_CASE("plus on down-sets is the join, on convex sets it need not be") {
    std::size_t non_joins = 0;
    std::string witness;
    for (const auto& x : fixtures::posets_up_to(3)) {
      const auto down = catalog::semilattice_on_TX(downset_monad(), x);
      const auto conv = catalog::semilattice_on_TX(convex_monad(), x);
      for (std::size_t i = 0; i < down.carrier().size(); ++i) {
        for (std::size_t j = 0; j < down.carrier().size(); ++j) {
          const std::size_t u[] = {i, j};
          CHECK(join_in(down.carrier(), i, j) == down.apply(1, u));
        }
      }
      const auto obj = convex_monad().object(x);
      for (std::size_t i = 0; i < conv.carrier().size(); ++i) {
        for (std::size_t j = 0; j < conv.carrier().size(); ++j) {
          const std::size_t u[] = {i, j};
          if (join_in(conv.carrier(), i, j) != conv.apply(1, u)) {
            if (non_joins++ == 0) {
              witness = describe_set(x, obj->elements[i]) + " + " + describe_set(x, obj->elements[j]);
            }
          }
        }
      }
    }
    CHECK(non_joins > 0);
    // the empty set is Egli-Milner incomparable to everything else
    CHECK(witness == "{} + {0}");
  }

  TEST_CASE("the bounded-join operation is defined on bounded pairs only") {
    const FinPoset pq = FinPoset::discrete(2).with_labels({"p", "q"});
    const auto a = catalog::bounded_join_on_TX(bounded_downset_monad(), pq);
    // {}, {p}, {q}: no valuation sends x and y to {p} and {q}
    CHECK(a.carrier().size() == 3);
    for (const auto& v : a.valuations(1).images()) CHECK_FALSE((v[0] == 1 && v[1] == 2));
    CHECK(a.valuations(0).size() == 3);
    for (std::size_t e = 0; e < 3; ++e) CHECK(a.apply_index(0, e) == 0);
  }
}
