#include <doctest.h>

#include "closure.hpp"
#include "fixtures.hpp"

using namespace ordalg;
using fixtures::linear_on_chain2;

namespace {

std::vector<FiniteAlgebra> linear_algebras(std::size_t max_carrier) {
  std::vector<FiniteAlgebra> out;
  for (const auto& x : fixtures::posets_up_to(max_carrier)) {
    for (auto& a : fixtures::all_algebras(catalog::linear_signature(), x)) out.push_back(std::move(a));
  }
  return out;
}

FiniteAlgebra join_on_chain(std::size_t n) {
  return FiniteAlgebra::from_operation(
      catalog::semilattice_signature(), FinPoset::chain(n),
      [](std::size_t op, const std::vector<std::size_t>& u) { return op == 0 ? 0 : std::max(u[0], u[1]); });
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("valuation spaces") {
    ValuationSpace v(FinPoset::chain(2), FinPoset::chain(3));
    CHECK(v.size() == 6);
    CHECK(v.at(0) == std::vector<std::size_t>{0, 0});
    CHECK(v.at(5) == std::vector<std::size_t>{2, 2});
    const std::size_t down[] = {2, 1};
    CHECK_FALSE(v.find(down));
    const std::size_t up[] = {1, 2};
    CHECK(v.at(*v.find(up)) == std::vector<std::size_t>{1, 2});
    auto spaces = valuation_spaces(*catalog::bounded_join_signature(), FinPoset::chain(2));
    CHECK(spaces[0]->size() == 2);
    // x, y <= z into a 2-chain: z = b leaves 4 choices, z = a one
    CHECK(spaces[1]->size() == 5);
  }

  TEST_CASE("algebras reject partial tables") {
    CHECK_THROWS_AS(FiniteAlgebra(catalog::linear_signature(), FinPoset::chain(2), {{0, 1}, {1, 1}}),
                    Error);
    CHECK_THROWS_AS(FiniteAlgebra(catalog::linear_signature(), FinPoset::chain(2), {{0, 1, 2}, {1, 1}}),
                    Error);
    auto a = linear_on_chain2({0, 1, 1}, {1, 1});
    const std::size_t bad[] = {1, 0};
    CHECK_THROWS_AS(a.apply(0, bad), NotMonotone);
  }

  TEST_CASE("coherence") {
    FiniteAlgebra none(std::make_shared<Signature>(), FinPoset::chain(2), {});
    CHECK(is_coherent(none));

    const auto reversed = linear_on_chain2({0, 1, 1}, {1, 0});
    const auto c = is_coherent(reversed);
    REQUIRE_FALSE(c.coherent);
    CHECK(c.witness->op == 1);
    CHECK(c.witness->smaller == std::vector<std::size_t>{0});
    CHECK(c.witness->larger == std::vector<std::size_t>{1});

    CHECK(is_coherent(linear_on_chain2({0, 1, 1}, {1, 1})));
    CHECK(is_coherent(join_on_chain(3)));
  }

  TEST_CASE("homomorphisms") {
    const auto reversed = linear_on_chain2({0, 1, 1}, {1, 0});
    const auto ident = linear_on_chain2({0, 1, 1}, {0, 1});
    const auto id = MonotoneMap::identity(reversed.carrier());
    CHECK(is_homomorphism(id, reversed, reversed));
    const auto h = is_homomorphism(id, reversed, ident);
    REQUIRE_FALSE(h.holds);
    CHECK(h.witness->op == 1);
    CHECK(h.witness->valuation == std::vector<std::size_t>{0});

    CHECK_THROWS_AS(is_homomorphism(MonotoneMap::identity(FinPoset::chain(2)), ident, join_on_chain(2)),
                    SignatureMismatch);

    // one-point algebras have exactly one homomorphism between them
    auto point = FiniteAlgebra::from_operation(catalog::linear_signature(), FinPoset::chain(1),
                                               [](std::size_t, const std::vector<std::size_t>&) { return 0; });
    CHECK(hom_search(point, point).size() == 1);

    // a constant has no value in the empty carrier, so no empty algebra exists
    CHECK_THROWS_AS(FiniteAlgebra(catalog::semilattice_signature(), FinPoset(), {{}, {}}), Error);
    auto empty = FiniteAlgebra(catalog::linear_signature(), FinPoset(), {{}, {}});
    CHECK(hom_search(point, empty).empty());
    CHECK(hom_search(empty, point).size() == 1);
  }

  TEST_CASE("hom_search agrees with brute force and is closed under composition") {
    const auto algs = linear_algebras(2);
    std::size_t total = 0;
    for (const auto& a : algs) {
      for (const auto& b : algs) {
        const auto homs = hom_search(a, b);
        std::size_t brute = 0;
        for (const auto& m : enumerate_monotone_maps(a.carrier(), b.carrier())) {
          brute += is_homomorphism(m, a, b).holds ? 1 : 0;
        }
        CHECK(homs.size() == brute);
        total += brute;
        for (const auto& c : algs) {
          if (c.carrier().size() != 2) continue;
          for (const auto& g : hom_search(b, c)) {
            for (const auto& f : homs) CHECK(is_homomorphism(g.after(f), a, c));
          }
        }
      }
    }
    CHECK(total > algs.size());
  }

  TEST_CASE("products") {
    auto empty = product_algebra(catalog::linear_signature(), {});
    CHECK(empty.algebra.carrier().size() == 1);
    CHECK(empty.projections.empty());
    CHECK(satisfies_theory(empty.algebra, catalog::linear_theory()).passed());

    const auto a = linear_on_chain2({0, 0, 1}, {1, 1});
    const FiniteAlgebra with_point[] = {a, empty.algebra};
    auto p = product_algebra(a.signature_ptr(), with_point);
    CHECK(p.algebra.carrier().same_order(a.carrier()));
    CHECK(p.algebra.tables() == a.tables());

    const FiniteAlgebra mixed[] = {a, join_on_chain(2)};
    CHECK_THROWS_AS(product_algebra(a.signature_ptr(), mixed), SignatureMismatch);

    // componentwise operations on the 2x2 grid
    const auto b = linear_on_chain2({0, 1, 1}, {1, 1});
    const FiniteAlgebra ab[] = {a, b};
    auto q = product_algebra(a.signature_ptr(), ab);
    for (std::size_t u = 0; u < q.algebra.valuations(0).size(); ++u) {
      const auto& val = q.algebra.valuations(0).at(u);
      const std::size_t r = q.algebra.apply_index(0, u);
      for (std::size_t k = 0; k < 2; ++k) {
        std::vector<std::size_t> comp{q.projections[k](val[0]), q.projections[k](val[1])};
        CHECK(q.projections[k](r) == ab[k].apply(0, comp));
      }
    }
  }

  TEST_CASE("subalgebras") {
    const auto a = linear_on_chain2({0, 1, 1}, {1, 1});
    auto full = subalgebra(a, a.carrier().all());
    CHECK(full.algebra.tables() == a.tables());
    CHECK(full.inclusion == MonotoneMap::identity(a.carrier()));
    CHECK_THROWS_AS(subalgebra(a, singleton(0)), ClosureViolation);
    auto top = subalgebra(a, singleton(1));
    CHECK(top.algebra.carrier().size() == 1);

    try {
      subalgebra(join_on_chain(2), 0);
      FAIL("empty subset accepted with a constant present");
    } catch (const ClosureViolation& e) {
      CHECK(e.op == "zero");
      CHECK(e.valuation == "[]");
    }
    CHECK_THROWS_AS(subalgebra(a, 4), Error);
  }

  TEST_CASE("split coequalizers") {
    const auto a = linear_on_chain2({0, 1, 1}, {1, 1});
    const auto id = MonotoneMap::identity(a.carrier());
    auto c = split_coequalizer(a, a, id, id, id, id, id);
    CHECK(c.tables() == a.tables());

    const auto to_top = MonotoneMap::constant(a.carrier(), a.carrier(), 1);
    try {
      split_coequalizer(a, a, id, to_top, id, id, id);
      FAIL("violated split equation accepted");
    } catch (const SplitEquationViolated& e) {
      CHECK_FALSE(e.which.empty());
    }
  }

  TEST_CASE("closure under products") {
    const Theory th = catalog::linear_theory();
    const auto small = linear_algebras(2);
    const auto t = closure::products(small, small, th);
    INFO(t.first_failure);
    CHECK(t.ok());
    for (const auto& other : {catalog::internal_semilattice_theory(), catalog::join_semilattice_theory()}) {
      const auto ms = fixtures::models(catalog::semilattice_signature(), other, 3);
      const auto u = closure::products(ms, ms, other);
      INFO(u.first_failure);
      CHECK(u.ok());
    }
  }

  TEST_CASE("closure under subalgebras") {
    const Theory th = catalog::linear_theory();
    const auto t = closure::subalgebras(linear_algebras(3), th);
    INFO(t.first_failure);
    CHECK(t.ok());
    for (const auto& other : {catalog::internal_semilattice_theory(), catalog::join_semilattice_theory()}) {
      const auto u = closure::subalgebras(fixtures::models(catalog::semilattice_signature(), other, 3), other);
      INFO(u.first_failure);
      CHECK(u.ok());
    }
  }

  TEST_CASE("closure under subalgebras on four-element carriers") {
    // products of 2-element models cover the 2x2 grid and the 4-antichain
    const Theory th = catalog::linear_theory();
    std::vector<FiniteAlgebra> ms;
    for (const auto& x : fixtures::posets_up_to(2)) {
      if (x.size() != 2) continue;
      for_each_model(catalog::linear_signature(), th.inequations, false, x, [&](const FiniteAlgebra& a) {
        ms.push_back(a);
        return true;
      });
    }
    std::vector<FiniteAlgebra> fours;
    for (const auto& a : ms) {
      for (const auto& b : ms) {
        const FiniteAlgebra pair[] = {a, b};
        fours.push_back(product_algebra(a.signature_ptr(), pair).algebra);
      }
    }
    const auto t = closure::subalgebras(fours, th);
    INFO(t.first_failure);
    CHECK(t.ok());
  }

  TEST_CASE("closure under split coequalizers") {
    const Theory th = catalog::linear_theory();
    const auto t = closure::split_coequalizers(linear_algebras(3), th);
    INFO(t.first_failure);
    CHECK(t.ok());
    for (const auto& other : {catalog::internal_semilattice_theory(), catalog::join_semilattice_theory()}) {
      const auto u = closure::split_coequalizers(fixtures::models(catalog::semilattice_signature(), other, 3), other);
      INFO(u.first_failure);
      CHECK(u.ok());
    }
  }

  TEST_CASE("closure under chain unions") {
    const auto t = closure::chain_unions(linear_algebras(3), catalog::linear_theory());
    INFO(t.first_failure);
    CHECK(t.ok());
    const auto b = linear_on_chain2({0, 1, 1}, {1, 1});
    const FiniteAlgebra stages[] = {b, b};
    const MonotoneMap bad[] = {MonotoneMap::constant(b.carrier(), b.carrier(), 0)};
    CHECK_THROWS_AS(chain_union(stages, bad), NotEmbedding);
  }

  TEST_CASE("model enumeration") {
    // E:lin on the 2-chain: at is inflationary (2 ways), plus is free (8 ways)
    std::size_t n = 0;
    for_each_model(catalog::linear_signature(), catalog::linear_theory().inequations, false,
                   FinPoset::chain(2), [&](const FiniteAlgebra&) { return ++n, true; });
    CHECK(n == 16);
    // join semilattices on a 3-chain: zero is the bottom, plus is max
    const auto joins = fixtures::models(catalog::semilattice_signature(), catalog::join_semilattice_theory(), 3);
    for (const auto& m : joins) {
      for (std::size_t u = 0; u < m.valuations(1).size(); ++u) {
        const auto& v = m.valuations(1).at(u);
        const std::size_t r = m.apply_index(1, u);
        CHECK(m.carrier().leq(v[0], r));
        CHECK(m.carrier().leq(v[1], r));
      }
    }
    std::size_t stopped = for_each_model(catalog::linear_signature(), {}, false, FinPoset::chain(2),
                                         [](const FiniteAlgebra&) { return false; });
    CHECK(stopped == 1);
  }
}
