#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace ordalg;
using fixtures::linear_on_chain2;

namespace {

const FinPoset kXY = FinPoset::discrete(2).with_labels({"x", "y"});
const FinPoset kXleY = FinPoset::chain(2).with_labels({"x", "y"});
constexpr std::size_t kPlus = 0;
constexpr std::size_t kAt = 1;

Term at(Term t) { return make_term(*catalog::linear_signature(), kAt, {std::move(t)}); }
Term plus(Term a, Term b) {
  return make_term(*catalog::linear_signature(), kPlus, {std::move(a), std::move(b)});
}

}  // namespace

TEST_SUITE("terms") {
  TEST_CASE("signatures") {
    Signature sig;
    sig.add("plus", FinPoset::chain(2));
    sig.add("at", FinPoset::chain(1));
    sig.add("meet", FinPoset::chain(2));
    CHECK_THROWS_AS(sig.add("at", FinPoset::chain(1)), Error);
    CHECK(sig.find("meet") == 2u);
    CHECK_FALSE(sig.find("none"));
    CHECK(sig.ops_of(canonicalize(FinPoset::chain(2))) == std::vector<std::size_t>{0, 2});
    CHECK(sig.arities().size() == 2);
    CHECK(sig.op(0).arity_class == canonicalize(FinPoset::chain(2)));
  }

  TEST_CASE("make_term") {
    const Signature& sig = *catalog::linear_signature();
    Term t = plus(Term::var(0), Term::var(1));
    CHECK(to_string(sig, kXleY, t) == "plus(x,y)");
    CHECK_THROWS_AS(make_term(sig, kPlus, {Term::var(0)}), ArityMismatch);

    const Signature& sl = *catalog::semilattice_signature();
    Term zero = make_term(sl, 0, {});
    CHECK_FALSE(zero.is_var());
    CHECK(zero.args().empty());
    CHECK(to_string(sl, FinPoset(), zero) == "zero");
    CHECK(well_formed(sig, 2, t));
    CHECK_FALSE(well_formed(sig, 1, t));
  }

  TEST_CASE("op_as_term evaluates to the operation") {
    const Signature& sig = *catalog::linear_signature();
    CHECK(to_string(sig, FinPoset::chain(1).with_labels({"x"}), op_as_term(sig, kAt)) == "at(x)");
    CHECK(to_string(sig, kXleY, op_as_term(sig, kPlus)) == "plus(x,y)");
    for (const auto& a : fixtures::all_algebras(catalog::linear_signature(), FinPoset::chain(3))) {
      for (std::size_t op = 0; op < sig.size(); ++op) {
        for (const auto& f : enumerate_monotone_maps(sig.op(op).arity, a.carrier())) {
          CHECK(evaluate(a, f, op_as_term(sig, op)) == a.apply(op, f.image()));
        }
      }
    }
  }

  TEST_CASE("enumerate_terms") {
    const Signature& sig = *catalog::linear_signature();
    CHECK(enumerate_terms(sig, kXY, 0).size() == 2);
    auto d1 = enumerate_terms(sig, kXY, 1);
    CHECK(d1.size() == 8);
    std::vector<std::string> shown;
    for (const auto& t : d1) shown.push_back(to_string(sig, kXY, t));
    CHECK(shown == std::vector<std::string>{"x", "y", "plus(x,x)", "plus(x,y)", "plus(y,x)",
                                            "plus(y,y)", "at(x)", "at(y)"});
    auto d2 = enumerate_terms(sig, kXY, 2);
    for (const auto& t : d1) CHECK(std::find(d2.begin(), d2.end(), t) != d2.end());
    CHECK(std::find(d2.begin(), d2.end(), plus(Term::var(1), at(Term::var(1)))) != d2.end());
    // 2 variables plus 8 * 8 sums plus 8 units
    CHECK(d2.size() == 2 + 64 + 8);
    CHECK_THROWS_AS(enumerate_terms(sig, kXY, 3, 1000), Explosion);
  }

  TEST_CASE("inequations print in context") {
    const Signature& sig = *catalog::linear_signature();
    Inequation e{"unit", FinPoset::chain(1).with_labels({"x"}), Term::var(0), at(Term::var(0))};
    CHECK(to_string(sig, e, "P1") == "P1 |- x <= at(x)");
    auto both = equality("comm", kXY, Term::var(0), Term::var(1));
    REQUIRE(both.size() == 2);
    CHECK(both[0].lhs == Term::var(0));
    CHECK(both[1].lhs == Term::var(1));
  }

  TEST_CASE("evaluation follows the arity order") {
    const FiniteAlgebra a = linear_on_chain2({0, 1, 1}, {1, 1});
    const Term y_plus_at_x = plus(Term::var(1), at(Term::var(0)));
    for (const auto& f : enumerate_monotone_maps(kXY, a.carrier())) {
      const auto v = evaluate(a, f, y_plus_at_x);
      const std::size_t ax = a.apply(kAt, std::vector<std::size_t>{f(0)});
      if (a.carrier().leq(f(1), ax)) {
        REQUIRE(v);
        CHECK(*v == a.apply(kPlus, std::vector<std::size_t>{f(1), ax}));
      } else {
        CHECK_FALSE(v);
      }
    }
    CHECK(evaluate(a, std::vector<std::size_t>{1}, Term::var(0)) == 1u);
  }

  TEST_CASE("evaluation with identity at on a discrete carrier") {
    auto carrier = FinPoset::discrete(2);
    auto a = FiniteAlgebra::from_operation(
        catalog::linear_signature(), carrier,
        [](std::size_t op, const std::vector<std::size_t>& u) { return op == kAt ? u[0] : 1 - u[0]; });
    for (std::size_t x = 0; x < 2; ++x) {
      CHECK(evaluate(a, std::vector<std::size_t>{x}, plus(Term::var(0), at(Term::var(0)))) == 1 - x);
    }
  }

  TEST_CASE("satisfaction of the unit inequation is the pointwise criterion") {
    const Theory th = catalog::linear_theory();
    const Inequation& unit = th.inequations[0];
    std::size_t yes = 0, no = 0;
    for (const auto& x : fixtures::posets_up_to(3)) {
      for (const auto& a : fixtures::all_algebras(catalog::linear_signature(), x)) {
        bool expected = true;
        for (std::size_t e = 0; e < x.size(); ++e) {
          expected = expected && x.leq(e, a.apply(kAt, std::vector<std::size_t>{e}));
        }
        const auto r = satisfies(a, unit);
        CHECK(r.holds == expected);
        (expected ? yes : no)++;
        if (!r.holds) {
          REQUIRE(r.counterexample);
          const std::size_t e = r.counterexample->valuation[0];
          CHECK_FALSE(x.leq(e, a.apply(kAt, std::vector<std::size_t>{e})));
          CHECK(r.counterexample->kind == FailureKind::NotLeq);
          // the first failing element in index order
          for (std::size_t d = 0; d < e; ++d) CHECK(x.leq(d, a.apply(kAt, std::vector<std::size_t>{d})));
        }
      }
    }
    CHECK(yes > 0);
    CHECK(no > 0);
  }

  TEST_CASE("satisfaction examples") {
    const Signature& sig = *catalog::linear_signature();
    const Inequation refl{"refl", FinPoset::chain(1), Term::var(0), Term::var(0)};
    for (const auto& a : fixtures::all_algebras(catalog::linear_signature(), FinPoset::chain(2))) {
      CHECK(satisfies(a, refl).holds);
    }

    const Inequation e{"defined", kXleY, plus(Term::var(0), at(Term::var(0))), Term::var(0)};
    // at = identity, plus = first projection: x + at(x) = x
    CHECK(satisfies(linear_on_chain2({0, 0, 1}, {0, 1}), e).holds);
    // at = top, plus = second projection: x + at(x) = b, not below a
    auto r = satisfies(linear_on_chain2({0, 1, 1}, {1, 1}), e);
    REQUIRE_FALSE(r.holds);
    CHECK(r.counterexample->valuation == std::vector<std::size_t>{0, 0});
    CHECK(r.counterexample->kind == FailureKind::NotLeq);
    // at = bottom: x + at(x) is undefined at x = b
    r = satisfies(linear_on_chain2({0, 0, 1}, {0, 0}), e);
    REQUIRE_FALSE(r.holds);
    CHECK(r.counterexample->kind == FailureKind::LhsUndefined);
    CHECK(r.counterexample->valuation == std::vector<std::size_t>{1, 1});

    const Inequation foreign{"foreign", kXY, make_term(sig, kPlus, {Term::var(0), Term::var(1)}),
                             Term::app(7, {})};
    CHECK_THROWS_AS(satisfies(linear_on_chain2({0, 1, 1}, {1, 1}), foreign), SignatureMismatch);
  }

  TEST_CASE("theories") {
    auto a = linear_on_chain2({0, 1, 1}, {1, 0});
    Theory empty{*catalog::linear_signature(), {}, false};
    CHECK(satisfies_theory(a, empty).passed());
    Theory coherent{*catalog::linear_signature(), {}, true};
    CHECK_FALSE(satisfies_theory(a, coherent).passed());

    // join-semilattice theory against plus = constant bottom on a 2-chain
    auto sl = FiniteAlgebra::from_operation(catalog::semilattice_signature(), FinPoset::chain(2),
                                            [](std::size_t, const std::vector<std::size_t>&) { return 0; });
    auto rep = satisfies_theory(sl, catalog::join_semilattice_theory());
    CHECK_FALSE(rep.passed());
    auto failing = std::find_if(rep.verdicts.begin(), rep.verdicts.end(),
                                [](const auto& v) { return !v.result.holds; });
    REQUIRE(failing != rep.verdicts.end());
    CHECK(failing->label == "upper-left");
    CHECK(failing->result.counterexample->valuation == std::vector<std::size_t>{1, 0});

    CHECK_THROWS_AS(satisfies_theory(sl, catalog::linear_theory()), SignatureMismatch);
  }

  TEST_CASE("the literal two-inequation join theory admits a projection") {
    // zero <= x and plus(x,y) <= z for bounds z: left projection satisfies both
    auto left = FiniteAlgebra::from_operation(
        catalog::semilattice_signature(), FinPoset::chain(2),
        [](std::size_t op, const std::vector<std::size_t>& u) { return op == 0 ? 0 : u[0]; });
    const Theory full = catalog::join_semilattice_theory();
    Theory literal{full.signature, {}, false};
    for (const auto& e : full.inequations) {
      if (e.label == "least" || e.label == "join") literal.inequations.push_back(e);
    }
    CHECK(satisfies_theory(left, literal).passed());
    CHECK_FALSE(satisfies_theory(left, full).passed());
  }

  TEST_CASE("evaluation commutes with homomorphisms and reflects definedness along embeddings") {
    const Signature& sig = *catalog::linear_signature();
    std::vector<FiniteAlgebra> algs;
    for (const auto& x : fixtures::posets_up_to(2)) {
      for (auto& a : fixtures::all_algebras(catalog::linear_signature(), x)) algs.push_back(a);
    }
    const auto terms = enumerate_terms(sig, kXY, 2);
    std::size_t checked = 0;
    for (const auto& a : algs) {
      for (const auto& b : algs) {
        for (const auto& h : hom_search(a, b)) {
          const bool emb = is_embedding(h);
          for (const auto& f : enumerate_monotone_maps(kXY, a.carrier())) {
            const MonotoneMap hf = h.after(f);
            for (const auto& t : terms) {
              auto va = evaluate(a, f, t);
              auto vb = evaluate(b, hf, t);
              if (va) {
                REQUIRE(vb);
                CHECK(*vb == h(*va));
                ++checked;
              }
              if (emb && vb) CHECK(va);
            }
          }
        }
      }
    }
    CHECK(checked > 1000);
  }
}
