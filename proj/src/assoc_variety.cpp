#include "ordalg/assoc_variety.hpp"

#include <algorithm>
#include <functional>

namespace ordalg {

namespace {

std::string image_string(const MonadObject& t, const MonotoneMap& k) {
  std::string s = "[";
  for (std::size_t i = 0; i < k.dom().size(); ++i) {
    if (i) s += ' ';
    s += t.carrier.label(k(i));
  }
  return s + "]";
}

std::vector<Term> variables(std::size_t n) {
  std::vector<Term> vs;
  vs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vs.push_back(Term::var(i));
  return vs;
}

}  // namespace

std::optional<std::size_t> GeneratedSignature::context_index(const FinPoset& gamma) const {
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    if (contexts[c].representative().same_order(gamma)) return c;
  }
  return std::nullopt;
}

GeneratedSignature generate_signature(const AssocVarietyConfig& cfg) {
  GeneratedSignature g;
  auto sig = std::make_shared<Signature>();
  g.contexts = iso_classes_up_to(cfg.max_context_size);
  for (std::size_t c = 0; c < g.contexts.size(); ++c) {
    const ContextId& ctx = g.contexts[c];
    auto t = cfg.monad.object(ctx.representative());
    std::vector<std::size_t> row;
    for (std::size_t e = 0; e < t->elements.size(); ++e) {
      std::string name = describe_set(ctx.representative(), t->elements[e]) + ":" + ctx.code();
      row.push_back(sig->add(std::move(name), ctx.representative()));
      g.origin.emplace_back(c, e);
    }
    g.symbols.push_back(std::move(row));
  }
  g.signature = std::move(sig);
  return g;
}

std::vector<Inequation> GeneratedInequations::all() const {
  std::vector<Inequation> out = order;
  out.insert(out.end(), kleisli.begin(), kleisli.end());
  return out;
}

GeneratedInequations generate_inequations(const AssocVarietyConfig& cfg,
                                          const GeneratedSignature& g) {
  const Signature& sig = *g.signature;
  GeneratedInequations out;
  for (std::size_t c = 0; c < g.contexts.size(); ++c) {
    const FinPoset& gamma = g.contexts[c].representative();
    auto t = cfg.monad.object(gamma);
    for (std::size_t s = 0; s < t->elements.size(); ++s) {
      for (std::size_t u = 0; u < t->elements.size(); ++u) {
        if (!t->carrier.less(s, u)) continue;
        const std::size_t a = g.symbols[c][s];
        const std::size_t b = g.symbols[c][u];
        out.order.push_back({"type1 " + sig.op(a).name + " <= " + sig.op(b).name, gamma,
                             op_as_term(sig, a), op_as_term(sig, b)});
      }
    }
  }
  for (std::size_t c = 0; c < g.contexts.size(); ++c) {
    const FinPoset& gamma = g.contexts[c].representative();
    auto tg = cfg.monad.object(gamma);
    for (std::size_t d = 0; d < g.contexts.size(); ++d) {
      if (g.contexts[d].size() > cfg.max_arg_context_size) continue;
      const FinPoset& delta = g.contexts[d].representative();
      auto td = cfg.monad.object(delta);
      for (const MonotoneMap& k : enumerate_monotone_maps(delta, tg->carrier)) {
        const MonotoneMap kstar = cfg.monad.extend(delta, gamma, k);
        std::vector<Term> args;
        for (std::size_t x = 0; x < delta.size(); ++x) {
          args.push_back(op_as_term(sig, g.symbols[c][k(x)]));
        }
        for (std::size_t s = 0; s < td->elements.size(); ++s) {
          const std::size_t sigma = g.symbols[d][s];
          Term lhs = op_as_term(sig, g.symbols[c][kstar(s)]);
          Term rhs = make_term(sig, sigma, args);
          std::string label = "type2 " + g.contexts[c].code() + " k=" + image_string(*tg, k) +
                              " sigma=" + sig.op(sigma).name;
          for (auto& e : equality(std::move(label), gamma, lhs, rhs)) {
            out.kleisli.push_back(std::move(e));
          }
        }
      }
    }
  }
  return out;
}

AssociatedVariety::AssociatedVariety(AssocVarietyConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.max_arg_context_size > cfg_.max_context_size) {
    throw Error("argument-context bound exceeds the context bound");
  }
  sig_ = generate_signature(cfg_);
  ineqs_ = generate_inequations(cfg_, sig_);
}

Theory AssociatedVariety::theory() const {
  return Theory{*sig_.signature, ineqs_.all(), false};
}

FiniteAlgebra algebra_on_TX(const AssociatedVariety& v, const FinPoset& x) {
  const auto tx = v.monad().object(x);
  const GeneratedSignature& g = v.generated();
  std::vector<ElementSet> images;
  return FiniteAlgebra::from_operation(
      g.signature, tx->carrier, [&](std::size_t op, const std::vector<std::size_t>& f) {
        const auto [c, e] = g.origin[op];
        const ElementSet sigma = v.monad().object(g.contexts[c].representative())->elements[e];
        images.assign(f.size(), 0);
        for (std::size_t i = 0; i < f.size(); ++i) images[i] = tx->elements[f[i]];
        const ElementSet r = v.monad().extend_set(*tx, sigma, images);
        auto pos = tx->find(r);
        if (!pos) {
          throw InternalInvariantViolation(v.monad().name() + ": extension value " +
                                           describe_set(x, r) + " is not in TX");
        }
        return *pos;
      });
}

std::size_t MonVarReport::checks() const { return entries.size() * inequation_count; }

std::size_t MonVarReport::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries) {
    for (const auto& v : e.report.verdicts) n += v.result.holds ? 0 : 1;
  }
  return n;
}

MonVarReport verify_monvar(const AssociatedVariety& v, const std::vector<FinPoset>& test_posets) {
  MonVarReport r;
  r.monad = v.monad().name();
  const Theory th = v.theory();
  r.inequation_count = th.inequations.size();
  for (const FinPoset& x : test_posets) {
    r.entries.push_back({x, satisfies_theory(algebra_on_TX(v, x), th)});
  }
  return r;
}

FreeExtension free_extension(const AssociatedVariety& v, const FiniteAlgebra& a,
                             const MonotoneMap& f, bool check_model) {
  if (!(a.signature() == *v.signature())) {
    throw SignatureMismatch("algebra is not over the generated signature");
  }
  if (!f.cod().same_order(a.carrier())) throw DomainMismatch("f does not land in the algebra");
  const GeneratedSignature& g = v.generated();
  const CanonicalForm cf = canonical_form(f.dom());
  auto c = g.context_index(cf.id.representative());
  if (!c) throw TooLarge("context exceeds the configured bound");
  if (check_model) {
    const TheoryReport rep = satisfies_theory(a, v.theory());
    if (!rep.passed()) {
      for (const auto& vd : rep.verdicts) {
        if (!vd.result.holds) throw NotAModel("algebra fails " + vd.label);
      }
      throw NotAModel("algebra fails the generated theory");
    }
  }

  const FinPoset& gamma = g.contexts[*c].representative();
  std::vector<std::size_t> moved(gamma.size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) moved[cf.to_representative[i]] = f(i);
  const MonotoneMap fr = MonotoneMap::make(gamma, a.carrier(), moved);

  const FiniteAlgebra tgamma = algebra_on_TX(v, gamma);
  const auto& syms = g.symbols[*c];
  std::vector<std::size_t> image(syms.size());
  for (std::size_t e = 0; e < syms.size(); ++e) image[e] = a.apply(syms[e], fr.image());

  FreeExtension out;
  out.extension = MonotoneMap::unchecked(tgamma.carrier(), a.carrier(), image);
  out.monotone = out.extension.is_monotone();
  if (out.monotone) out.homomorphism = is_homomorphism(out.extension, tgamma, a).holds;
  const MonotoneMap unit = v.monad().unit(gamma);
  out.extends_f = out.extension.after(unit).image() == fr.image();
  // Homomorphisms h with h . unit = f, searched with the unit values pinned.
  const FinPoset& tc = tgamma.carrier();
  std::vector<std::optional<std::size_t>> pinned(tc.size());
  bool consistent = true;
  for (std::size_t x = 0; x < gamma.size(); ++x) {
    auto& p = pinned[unit(x)];
    if (p && *p != fr(x)) consistent = false;
    p = fr(x);
  }
  std::size_t matching = 0;
  bool equal = false;
  std::vector<std::size_t> h(tc.size());
  std::function<void(std::size_t)> search = [&](std::size_t e) {
    if (e == tc.size()) {
      if (!is_homomorphism(MonotoneMap::unchecked(tc, a.carrier(), h), tgamma, a).holds) return;
      ++matching;
      equal = h == image;
      return;
    }
    for (std::size_t w = 0; w < a.carrier().size(); ++w) {
      if (pinned[e] && *pinned[e] != w) continue;
      bool mono = true;
      for (std::size_t d = 0; d < e && mono; ++d) {
        if (tc.leq(d, e) && !a.carrier().leq(h[d], w)) mono = false;
        if (tc.leq(e, d) && !a.carrier().leq(w, h[d])) mono = false;
      }
      if (!mono) continue;
      h[e] = w;
      search(e + 1);
    }
  };
  if (consistent) search(0);
  out.matching_homomorphisms = matching;
  out.equals_unique = matching == 1 && equal;
  return out;
}

bool CoherenceReport::passed() const {
  return incoherent_models == 0 &&
         std::all_of(tx.begin(), tx.end(), [](const auto& p) { return p.second.coherent; });
}

CoherenceReport check_associated_coherent(const AssociatedVariety& v,
                                          const std::vector<FinPoset>& test_posets,
                                          std::size_t model_carrier_max) {
  CoherenceReport r;
  r.monad = v.monad().name();
  for (const FinPoset& x : test_posets) r.tx.emplace_back(x, is_coherent(algebra_on_TX(v, x)));
  const std::vector<Inequation> ineqs = v.inequations().all();
  for (const ContextId& carrier : iso_classes_up_to(model_carrier_max)) {
    for_each_model(v.signature(), ineqs, false, carrier.representative(),
                   [&](const FiniteAlgebra& m) {
                     ++r.models_checked;
                     if (!is_coherent(m).coherent) {
                       if (r.incoherent_models++ == 0) r.first_incoherent = m;
                     }
                     return true;
                   });
  }
  return r;
}

std::vector<Inequation> coherence_inequations(const Signature& sig) {
  std::vector<Inequation> out;
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const FinPoset& gamma = sig.op(op).arity;
    const std::size_t n = gamma.size();
    if (2 * n > kMaxCanonicalSize) {
      throw TooLarge("doubled context of " + sig.op(op).name + " has " + std::to_string(2 * n) +
                     " elements");
    }
    std::vector<std::pair<std::size_t, std::size_t>> le;
    std::vector<std::string> labels(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string base = gamma.has_labels() ? gamma.label(i) : "x" + std::to_string(i);
      labels[i] = base;
      labels[n + i] = base + "'";
      le.emplace_back(i, n + i);
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && gamma.leq(i, j)) {
          le.emplace_back(i, j);
          le.emplace_back(n + i, n + j);
        }
      }
    }
    FinPoset doubled = FinPoset::from_generators(2 * n, le, std::move(labels));
    std::vector<Term> lower = variables(n);
    std::vector<Term> upper;
    for (std::size_t i = 0; i < n; ++i) upper.push_back(Term::var(n + i));
    out.push_back({"coherence-" + sig.op(op).name, std::move(doubled),
                   make_term(sig, op, std::move(lower)), make_term(sig, op, std::move(upper))});
  }
  return out;
}

DiscretizedSignature discretize_signature(const std::vector<OrderedArity>& ordered) {
  auto sig = std::make_shared<Signature>();
  std::vector<std::vector<std::size_t>> ids;
  for (const auto& oa : ordered) {
    std::vector<std::size_t> row;
    for (std::size_t s = 0; s < oa.symbols.size(); ++s) {
      row.push_back(sig->add(oa.symbols.label(s), oa.arity));
    }
    ids.push_back(std::move(row));
  }
  DiscretizedSignature out;
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const auto& oa = ordered[k];
    for (std::size_t s = 0; s < oa.symbols.size(); ++s) {
      for (std::size_t t = 0; t < oa.symbols.size(); ++t) {
        if (!oa.symbols.less(s, t)) continue;
        const std::size_t a = ids[k][s];
        const std::size_t b = ids[k][t];
        out.inequations.push_back({sig->op(a).name + " <= " + sig->op(b).name, oa.arity,
                                   make_term(*sig, a, variables(oa.arity.size())),
                                   make_term(*sig, b, variables(oa.arity.size()))});
      }
    }
  }
  out.signature = std::move(sig);
  return out;
}

}  // namespace ordalg
