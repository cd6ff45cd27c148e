#include "ordalg/algebra.hpp"

#include <algorithm>
#include <limits>

namespace ordalg {

namespace {

std::uint64_t radix_limit(std::size_t base, std::size_t digits) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < digits; ++k) {
    if (base != 0 && total > std::numeric_limits<std::uint64_t>::max() / base) {
      throw TooLarge("valuation space too large to index");
    }
    total *= base;
  }
  return total;
}

std::uint64_t encode(std::span<const std::size_t> image, std::size_t base) {
  std::uint64_t code = 0;
  for (std::size_t v : image) code = code * base + v;
  return code;
}

}  // namespace

ValuationSpace::ValuationSpace(FinPoset dom, FinPoset cod)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  radix_limit(cod_.size(), dom_.size());
  for_each_monotone_image(dom_, cod_, [&](const std::vector<std::size_t>& img) {
    if (images_.size() >= kDefaultEnumerationCap) {
      throw Explosion("valuation space exceeds the enumeration cap");
    }
    index_.emplace(encode(img, cod_.size()), images_.size());
    images_.push_back(img);
    return true;
  });
}

std::optional<std::size_t> ValuationSpace::find(std::span<const std::size_t> image) const {
  if (image.size() != dom_.size()) return std::nullopt;
  for (std::size_t v : image) {
    if (v >= cod_.size()) return std::nullopt;
  }
  auto it = index_.find(encode(image, cod_.size()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ValuationSpaces valuation_spaces(const Signature& sig, const FinPoset& carrier) {
  ValuationSpaces out(sig.size());
  for (std::size_t op = 0; op < sig.size(); ++op) {
    for (std::size_t prev = 0; prev < op; ++prev) {
      if (sig.op(prev).arity.same_order(sig.op(op).arity)) {
        out[op] = out[prev];
        break;
      }
    }
    if (!out[op]) out[op] = std::make_shared<const ValuationSpace>(sig.op(op).arity, carrier);
  }
  return out;
}

// ---------------------------------------------------------------------------

FiniteAlgebra::FiniteAlgebra(std::shared_ptr<const Signature> sig, FinPoset carrier,
                             std::vector<std::vector<std::size_t>> tables)
    : FiniteAlgebra(sig, carrier, valuation_spaces(*sig, carrier), std::move(tables)) {}

FiniteAlgebra::FiniteAlgebra(std::shared_ptr<const Signature> sig, FinPoset carrier,
                             ValuationSpaces spaces, std::vector<std::vector<std::size_t>> tables)
    : sig_(std::move(sig)),
      carrier_(std::move(carrier)),
      spaces_(std::move(spaces)),
      tables_(std::move(tables)) {
  if (tables_.size() != sig_->size() || spaces_.size() != sig_->size()) {
    throw SignatureMismatch("one table per operation symbol is required");
  }
  for (std::size_t op = 0; op < tables_.size(); ++op) {
    if (tables_[op].size() != spaces_[op]->size()) {
      throw Error("table of '" + sig_->op(op).name + "' is not total: " +
                  std::to_string(tables_[op].size()) + " entries for " +
                  std::to_string(spaces_[op]->size()) + " valuations");
    }
    for (std::size_t v : tables_[op]) {
      if (v >= carrier_.size()) throw Error("table value outside the carrier");
    }
  }
}

FiniteAlgebra FiniteAlgebra::from_operation(std::shared_ptr<const Signature> sig,
                                            FinPoset carrier, const Operation& op_fn) {
  ValuationSpaces spaces = valuation_spaces(*sig, carrier);
  std::vector<std::vector<std::size_t>> tables(sig->size());
  for (std::size_t op = 0; op < sig->size(); ++op) {
    tables[op].reserve(spaces[op]->size());
    for (const auto& u : spaces[op]->images()) tables[op].push_back(op_fn(op, u));
  }
  return FiniteAlgebra(std::move(sig), std::move(carrier), std::move(spaces), std::move(tables));
}

std::size_t FiniteAlgebra::apply(std::size_t op, std::span<const std::size_t> valuation) const {
  auto idx = spaces_[op]->find(valuation);
  if (!idx) {
    throw NotMonotone("valuation " + valuation_string(carrier_, valuation) +
                      " is not a monotone map into the carrier for '" + sig_->op(op).name + "'");
  }
  return tables_[op][*idx];
}

bool same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.signature_ptr() == b.signature_ptr() || a.signature() == b.signature();
}

std::string valuation_string(const FinPoset& carrier, std::span<const std::size_t> valuation) {
  std::string s = "[";
  for (std::size_t k = 0; k < valuation.size(); ++k) {
    if (k) s += ' ';
    s += carrier.label(valuation[k]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

CoherenceCheck is_coherent(const FiniteAlgebra& a) {
  const auto& c = a.carrier();
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const auto& space = a.valuations(op);
    for (std::size_t f = 0; f < space.size(); ++f) {
      for (std::size_t g = 0; g < space.size(); ++g) {
        if (f == g) continue;
        const auto& uf = space.at(f);
        const auto& ug = space.at(g);
        bool le = true;
        for (std::size_t k = 0; k < uf.size() && le; ++k) le = c.leq(uf[k], ug[k]);
        if (le && !c.leq(a.apply_index(op, f), a.apply_index(op, g))) {
          return {false, CoherenceWitness{op, uf, ug}};
        }
      }
    }
  }
  return {};
}

HomomorphismCheck is_homomorphism(const MonotoneMap& h, const FiniteAlgebra& a,
                                  const FiniteAlgebra& b) {
  if (!same_signature(a, b)) throw SignatureMismatch("homomorphism between different signatures");
  if (!h.dom().same_order(a.carrier()) || !h.cod().same_order(b.carrier())) {
    throw DomainMismatch("map does not go between the algebra carriers");
  }
  if (!h.is_monotone()) return {false, std::nullopt};
  std::vector<std::size_t> pushed;
  for (std::size_t op = 0; op < a.signature().size(); ++op) {
    const auto& space = a.valuations(op);
    for (std::size_t idx = 0; idx < space.size(); ++idx) {
      const auto& u = space.at(idx);
      pushed.resize(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) pushed[k] = h(u[k]);
      if (h(a.apply_index(op, idx)) != b.apply(op, pushed)) {
        return {false, HomomorphismWitness{op, u}};
      }
    }
  }
  return {};
}

std::vector<MonotoneMap> hom_search(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                    std::size_t cap) {
  if (!same_signature(a, b)) throw SignatureMismatch("hom_search between different signatures");
  std::vector<MonotoneMap> out;
  std::size_t visited = 0;
  for_each_monotone_image(a.carrier(), b.carrier(), [&](const std::vector<std::size_t>& img) {
    if (++visited > cap) throw Explosion("hom_search candidate space exceeds the cap");
    auto h = MonotoneMap::unchecked(a.carrier(), b.carrier(), img);
    if (is_homomorphism(h, a, b)) out.push_back(std::move(h));
    return true;
  });
  return out;
}

ProductAlgebra product_algebra(std::shared_ptr<const Signature> sig,
                               std::span<const FiniteAlgebra> factors) {
  std::vector<FinPoset> carriers;
  for (const auto& f : factors) {
    if (!(f.signature() == *sig)) throw SignatureMismatch("product factors differ in signature");
    carriers.push_back(f.carrier());
  }
  NaryProduct prod = product(std::span<const FinPoset>(carriers));
  std::vector<std::size_t> component;
  std::vector<std::size_t> result;
  auto op_fn = [&](std::size_t op, const std::vector<std::size_t>& u) {
    result.assign(factors.size(), 0);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      component.resize(u.size());
      for (std::size_t x = 0; x < u.size(); ++x) component[x] = prod.projections[k](u[x]);
      result[k] = factors[k].apply(op, component);
    }
    return prod.index(result);
  };
  FiniteAlgebra alg = FiniteAlgebra::from_operation(sig, prod.poset, op_fn);
  return {std::move(alg), std::move(prod.projections)};
}

Subalgebra subalgebra(const FiniteAlgebra& a, ElementSet s) {
  const auto& carrier = a.carrier();
  if (!is_subset(s, carrier.all())) throw Error("subset is not contained in the carrier");
  const auto idx = members(s);
  std::vector<std::size_t> position(carrier.size(), carrier.size());
  for (std::size_t k = 0; k < idx.size(); ++k) position[idx[k]] = k;
  FinPoset sub = restrict_to(carrier, s);

  std::vector<std::size_t> lifted;
  auto op_fn = [&](std::size_t op, const std::vector<std::size_t>& u) {
    lifted.resize(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) lifted[k] = idx[u[k]];
    const std::size_t value = a.apply(op, lifted);
    if (!contains(s, value)) {
      throw ClosureViolation(a.signature().op(op).name, valuation_string(carrier, lifted));
    }
    return position[value];
  };
  FiniteAlgebra alg = FiniteAlgebra::from_operation(a.signature_ptr(), sub, op_fn);
  auto inclusion = MonotoneMap::make(sub, carrier, idx);
  return {std::move(alg), std::move(inclusion)};
}

FiniteAlgebra split_coequalizer(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                const MonotoneMap& f, const MonotoneMap& g,
                                const MonotoneMap& c, const MonotoneMap& i,
                                const MonotoneMap& j) {
  const FinPoset& target = c.cod();
  auto maps_between = [](const MonotoneMap& m, const FinPoset& d, const FinPoset& e) {
    return m.dom().same_order(d) && m.cod().same_order(e);
  };
  if (!maps_between(f, a.carrier(), b.carrier()) || !maps_between(g, a.carrier(), b.carrier()) ||
      !maps_between(c, b.carrier(), target) || !maps_between(i, target, b.carrier()) ||
      !maps_between(j, b.carrier(), a.carrier())) {
    throw DomainMismatch("split pair maps do not match the algebra carriers");
  }
  if (!is_homomorphism(f, a, b)) throw SplitEquationViolated("f is not a homomorphism");
  if (!is_homomorphism(g, a, b)) throw SplitEquationViolated("g is not a homomorphism");
  if (!(c.after(f) == c.after(g))) throw SplitEquationViolated("c.f = c.g");
  if (!(c.after(i) == MonotoneMap::identity(target))) throw SplitEquationViolated("c.i = id");
  if (!(f.after(j) == MonotoneMap::identity(b.carrier()))) {
    throw SplitEquationViolated("f.j = id");
  }
  if (!(g.after(j) == i.after(c))) throw SplitEquationViolated("g.j = i.c");

  std::vector<std::size_t> lifted;
  return FiniteAlgebra::from_operation(
      a.signature_ptr(), target, [&](std::size_t op, const std::vector<std::size_t>& h) {
        lifted.resize(h.size());
        for (std::size_t k = 0; k < h.size(); ++k) lifted[k] = i(h[k]);
        return c(b.apply(op, lifted));
      });
}

AlgebraChainUnion chain_union(std::span<const FiniteAlgebra> stages,
                              std::span<const MonotoneMap> embeddings) {
  if (stages.empty() || embeddings.size() + 1 != stages.size()) {
    throw Error("a chain of n embeddings needs n + 1 stages");
  }
  for (std::size_t k = 0; k < embeddings.size(); ++k) {
    if (!embeddings[k].dom().same_order(stages[k].carrier()) ||
        !embeddings[k].cod().same_order(stages[k + 1].carrier())) {
      throw DomainMismatch("chain link " + std::to_string(k) + " does not match its stages");
    }
    if (!is_homomorphism(embeddings[k], stages[k], stages[k + 1])) throw NotEmbedding(k);
  }
  ChainUnion carrier_union = chain_union(stages.front().carrier(), embeddings);
  return {stages.back(), std::move(carrier_union.injections)};
}

}  // namespace ordalg
