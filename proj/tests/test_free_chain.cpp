#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "ordalg/free_chain.hpp"

using namespace ordalg;

namespace {

const FinPoset kXleY = FinPoset::chain(2).with_labels({"x", "y"});

std::shared_ptr<const Signature> binary_signature() {
  auto s = std::make_shared<Signature>();
  s->add("s", kXleY);
  return s;
}

std::vector<std::string> shown(const FreeChain& c, std::size_t k) {
  std::vector<std::string> out;
  for (const auto& t : c.levels[k].elements) out.push_back(to_string(*c.signature, c.generators, t));
  return out;
}

std::size_t find_element(const FreeChain& c, std::size_t k, const std::string& name) {
  const auto names = shown(c, k);
  const auto it = std::find(names.begin(), names.end(), name);
  REQUIRE(it != names.end());
  return static_cast<std::size_t>(it - names.begin());
}

std::vector<FinPoset> generator_posets() {
  return {FinPoset(), FinPoset::chain(1).with_labels({"x"}), kXleY,
          FinPoset::discrete(2).with_labels({"x", "y"})};
}

}  // namespace

TEST_SUITE("free_chain") {
  TEST_CASE("binary operation of chain arity over a 2-chain") {
    const auto c = free_chain(binary_signature(), kXleY, 3, false);
    REQUIRE(c.levels.size() == 4);
    CHECK(shown(c, 1) == std::vector<std::string>{"x", "y", "s(x,x)", "s(x,y)", "s(y,y)"});
    for (std::size_t k = 0; k < c.levels.size(); ++k) {
      const FinPoset& w = c.levels[k].poset;
      std::size_t comparable = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = 0; j < w.size(); ++j) {
          if (!w.less(i, j)) continue;
          ++comparable;
          CHECK(c.levels[k].elements[i].is_var());
          CHECK(c.levels[k].elements[j].is_var());
        }
      }
      CHECK(comparable == 1);
    }
  }

  TEST_CASE("the coherent chain orders applications pointwise") {
    const auto c = free_chain(binary_signature(), kXleY, 2, true);
    const FinPoset& w1 = c.levels[1].poset;
    const std::size_t xx = find_element(c, 1, "s(x,x)");
    const std::size_t xy = find_element(c, 1, "s(x,y)");
    const std::size_t yy = find_element(c, 1, "s(y,y)");
    CHECK(w1.less(xx, xy));
    CHECK(w1.less(xy, yy));
    CHECK(w1.less(xx, yy));
    for (std::size_t v : {find_element(c, 1, "x"), find_element(c, 1, "y")}) {
      for (std::size_t app : {xx, xy, yy}) CHECK_FALSE(w1.comparable(v, app));
    }

    // level 2: s(f) <= s(g) exactly when f <= g pointwise in W1
    const auto& lvl = c.levels[2];
    for (std::size_t i = 0; i < lvl.elements.size(); ++i) {
      for (std::size_t j = 0; j < lvl.elements.size(); ++j) {
        const Term& a = lvl.elements[i];
        const Term& b = lvl.elements[j];
        if (a.is_var() || b.is_var()) {
          CHECK(lvl.poset.leq(i, j) == (a.is_var() && b.is_var() && kXleY.leq(a.var_index(), b.var_index())));
          continue;
        }
        const auto& idx = c.levels[1].index;
        const bool pointwise = w1.leq(idx.at(a.args()[0]), idx.at(b.args()[0])) &&
                               w1.leq(idx.at(a.args()[1]), idx.at(b.args()[1]));
        CHECK(lvl.poset.leq(i, j) == pointwise);
      }
    }
  }

  TEST_CASE("applications are exactly the monotone valuations into the previous level") {
    for (bool coherent : {false, true}) {
      for (const auto& x : generator_posets()) {
        const auto c = free_chain(catalog::linear_signature(), x, 3, coherent);
        const Signature& sig = *c.signature;
        for (std::size_t k = 0; k + 1 < c.levels.size(); ++k) {
          std::size_t expected = x.size();
          for (std::size_t op = 0; op < sig.size(); ++op) {
            expected += count_monotone_maps(sig.op(op).arity, c.levels[k].poset);
          }
          CHECK(c.levels[k + 1].elements.size() == expected);
          for (const auto& t : c.levels[k + 1].elements) {
            if (t.is_var()) continue;
            std::vector<std::size_t> image;
            for (const auto& arg : t.args()) image.push_back(c.levels[k].index.at(arg));
            CHECK(MonotoneMap::unchecked(sig.op(t.op()).arity, c.levels[k].poset, image).is_monotone());
          }
        }
      }
    }
  }

  TEST_CASE("level sizes") {
    const auto sig = catalog::linear_signature();
    const FinPoset one = FinPoset::chain(1).with_labels({"x"});
    std::vector<std::size_t> sizes;
    for (const auto& l : free_chain(sig, one, 3, false).levels) sizes.push_back(l.elements.size());
    // W(k+1) = 1 + |W(k)| diagonal sums + |W(k)| units
    CHECK(sizes == std::vector<std::size_t>{1, 3, 7, 15});
    sizes.clear();
    for (const auto& l : free_chain(sig, kXleY, 3, true).levels) sizes.push_back(l.elements.size());
    CHECK(sizes == std::vector<std::size_t>{2, 7, 21, 70});
    CHECK_THROWS_AS(free_chain(sig, kXleY, 4, true, 300), Explosion);
  }

  TEST_CASE("the base level is the generating poset") {
    for (const auto& x : generator_posets()) {
      const auto c = free_chain(catalog::linear_signature(), x, 0, false);
      REQUIRE(c.levels.size() == 1);
      CHECK(c.embeddings.empty());
      CHECK(c.levels[0].poset.same_order(x));
      for (std::size_t i = 0; i < x.size(); ++i) CHECK(c.levels[0].elements[i] == Term::var(i));
    }
  }

  TEST_CASE("levels embed by inclusion of terms") {
    for (bool coherent : {false, true}) {
      const auto c = free_chain(catalog::linear_signature(), kXleY, 3, coherent);
      REQUIRE(c.embeddings.size() == 3);
      for (std::size_t k = 0; k < 3; ++k) {
        const auto& w = c.embeddings[k];
        CHECK(is_embedding(w));
        for (std::size_t i = 0; i < w.dom().size(); ++i) {
          CHECK(c.levels[k + 1].elements[w(i)] == c.levels[k].elements[i]);
        }
      }
    }
  }

  TEST_CASE("evaluation into algebras") {
    const auto sig = binary_signature();
    const auto c = free_chain(sig, kXleY, 2, false);
    const FinPoset c3 = FinPoset::chain(3);
    auto a = FiniteAlgebra::from_operation(sig, c3, [](std::size_t, const std::vector<std::size_t>& u) {
      return std::min<std::size_t>(2, u[0] + u[1]);
    });
    for (const auto& f : enumerate_monotone_maps(kXleY, c3)) {
      CHECK(eval_into(c, 0, a, f) == f);
      const auto e1 = eval_into(c, 1, a, f);
      CHECK(e1(find_element(c, 1, "s(x,y)")) == a.apply(0, f.image()));
      CHECK(e1.after(c.embeddings[0]) == eval_into(c, 0, a, f));
      CHECK(eval_into(c, 2, a, f).after(c.embeddings[1]) == e1);
    }
    CHECK_THROWS_AS(eval_into(c, 1, fixtures::linear_on_chain2({0, 1, 1}, {1, 1}),
                              MonotoneMap::identity(FinPoset::chain(2))),
                    SignatureMismatch);

    // a non-coherent algebra cannot interpret the coherent order
    const auto cc = free_chain(sig, kXleY, 1, true);
    auto swap = FiniteAlgebra::from_operation(sig, FinPoset::chain(2),
                                              [](std::size_t, const std::vector<std::size_t>& u) {
                                                return u[0] == u[1] ? 1 - u[0] : u[0];
                                              });
    CHECK_THROWS_AS(eval_into(cc, 1, swap, MonotoneMap::identity(FinPoset::chain(2))), NotMonotone);
  }

  TEST_CASE("every level element has a value in every algebra") {
    std::vector<FiniteAlgebra> algs;
    for (const auto& x : fixtures::posets_up_to(3)) {
      for (auto& a : fixtures::all_algebras(catalog::linear_signature(), x)) algs.push_back(std::move(a));
    }
    std::size_t evaluated = 0;
    for (const auto& x : generator_posets()) {
      const auto plain = free_chain(catalog::linear_signature(), x, 3, false);
      const auto coh = free_chain(catalog::linear_signature(), x, 3, true);
      for (const auto& a : algs) {
        const bool coherent = is_coherent(a).coherent;
        for (const auto& f : enumerate_monotone_maps(x, a.carrier())) {
          for (std::size_t k = 0; k <= 3; ++k) {
            MonotoneMap e;
            CHECK_NOTHROW(e = eval_into(plain, k, a, f));
            if (k > 0) CHECK(e.after(plain.embeddings[k - 1]) == eval_into(plain, k - 1, a, f));
            if (coherent) CHECK_NOTHROW(eval_into(coh, k, a, f));
          }
          ++evaluated;
        }
      }
    }
    CHECK(evaluated > algs.size());
  }
}
