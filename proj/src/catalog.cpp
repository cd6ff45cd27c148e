#include "ordalg/catalog.hpp"

#include "ordalg/assoc_variety.hpp"

namespace ordalg::catalog {

namespace {

FinPoset ctx(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> le = {}) {
  const std::size_t n = names.size();
  return FinPoset::from_generators(n, le, std::move(names));
}

Term v(std::size_t i) { return Term::var(i); }

void add_eq(Theory& th, const std::string& label, const FinPoset& c, const Term& s, const Term& t) {
  for (auto& e : equality(label, c, s, t)) th.inequations.push_back(std::move(e));
}

}  // namespace

std::shared_ptr<const Signature> linear_signature() {
  static const auto sig = [] {
    auto s = std::make_shared<Signature>();
    s->add("plus", ctx({"x", "y"}, {{0, 1}}));
    s->add("at", ctx({"x"}));
    return s;
  }();
  return sig;
}

Theory linear_theory() {
  Theory th{*linear_signature(), {}, false};
  const auto& sig = th.signature;
  th.inequations.push_back({"unit", ctx({"x"}), v(0), make_term(sig, 1, {v(0)})});
  return th;
}

std::shared_ptr<const Signature> semilattice_signature() {
  static const auto sig = [] {
    auto s = std::make_shared<Signature>();
    s->add("zero", FinPoset());
    s->add("plus", ctx({"x", "y"}));
    return s;
  }();
  return sig;
}

Theory internal_semilattice_theory() {
  Theory th{*semilattice_signature(), {}, true};
  const auto& sig = th.signature;
  auto zero = make_term(sig, 0, {});
  auto plus = [&](Term a, Term b) { return make_term(sig, 1, {std::move(a), std::move(b)}); };
  const FinPoset one = ctx({"x"});
  const FinPoset two = ctx({"x", "y"});
  const FinPoset three = ctx({"x", "y", "z"});
  add_eq(th, "left-unit", one, plus(zero, v(0)), v(0));
  add_eq(th, "right-unit", one, plus(v(0), zero), v(0));
  add_eq(th, "assoc", three, plus(plus(v(0), v(1)), v(2)), plus(v(0), plus(v(1), v(2))));
  add_eq(th, "comm", two, plus(v(0), v(1)), plus(v(1), v(0)));
  add_eq(th, "idem", one, plus(v(0), v(0)), v(0));
  for (auto& e : coherence_inequations(sig)) th.inequations.push_back(std::move(e));
  return th;
}

Theory join_semilattice_theory() {
  Theory th{*semilattice_signature(), {}, false};
  const auto& sig = th.signature;
  const FinPoset two = ctx({"x", "y"});
  const Term plus = make_term(sig, 1, {v(0), v(1)});
  th.inequations.push_back({"least", ctx({"x"}), make_term(sig, 0, {}), v(0)});
  th.inequations.push_back({"upper-left", two, v(0), plus});
  th.inequations.push_back({"upper-right", two, v(1), plus});
  th.inequations.push_back({"join", ctx({"x", "y", "z"}, {{0, 2}, {1, 2}}), plus, v(2)});
  return th;
}

std::shared_ptr<const Signature> bounded_join_signature() {
  static const auto sig = [] {
    auto s = std::make_shared<Signature>();
    s->add("bot", ctx({"x"}));
    s->add("j", ctx({"x", "y", "z"}, {{0, 2}, {1, 2}}));
    return s;
  }();
  return sig;
}

Theory bounded_join_theory() {
  Theory th{*bounded_join_signature(), {}, false};
  const auto& sig = th.signature;
  const FinPoset bounded = ctx({"x", "y", "z"}, {{0, 2}, {1, 2}});
  const Term j = make_term(sig, 1, {v(0), v(1), v(2)});
  th.inequations.push_back({"least", ctx({"x", "y"}), make_term(sig, 0, {v(0)}), v(1)});
  th.inequations.push_back({"upper-left", bounded, v(0), j});
  th.inequations.push_back({"upper-right", bounded, v(1), j});
  th.inequations.push_back({"least-upper", ctx({"x", "y", "z", "w"}, {{0, 2}, {1, 2}, {0, 3}, {1, 3}}),
                            j, v(3)});
  return th;
}

namespace {

FiniteAlgebra on_TX(const KleisliTriple& t, const FinPoset& x,
                    const std::shared_ptr<const Signature>& sig, std::size_t empty_op) {
  const auto tx = t.object(x);
  std::vector<ElementSet> images;
  return FiniteAlgebra::from_operation(sig, tx->carrier, [&](std::size_t op,
                                                             const std::vector<std::size_t>& f) {
    ElementSet r = 0;
    if (op != empty_op) {
      images.clear();
      for (std::size_t a : f) images.push_back(tx->elements[a]);
      r = t.extend_set(*tx, singleton(0) | singleton(1), images);
    }
    auto pos = tx->find(r);
    if (!pos) {
      throw InternalInvariantViolation(t.name() + ": " + describe_set(x, r) + " is not in TX");
    }
    return *pos;
  });
}

}  // namespace

FiniteAlgebra semilattice_on_TX(const KleisliTriple& t, const FinPoset& x) {
  return on_TX(t, x, semilattice_signature(), 0);
}

FiniteAlgebra bounded_join_on_TX(const KleisliTriple& t, const FinPoset& x) {
  return on_TX(t, x, bounded_join_signature(), 0);
}

}  // namespace ordalg::catalog
