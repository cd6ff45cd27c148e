#include "ordalg/free_chain.hpp"

namespace ordalg {

namespace {

FreeLevel generator_level(const FinPoset& x) {
  FreeLevel level;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < x.size(); ++i) {
    level.elements.push_back(Term::var(i));
    level.index.emplace(level.elements.back(), i);
    labels.push_back(x.label(i));
  }
  level.poset = x.with_labels(std::move(labels));
  return level;
}

FreeLevel next_level(const Signature& sig, const FinPoset& x, const FreeLevel& prev,
                     bool coherent, std::size_t cap) {
  FreeLevel level;
  struct Composite {
    std::size_t op;
    std::vector<std::size_t> args;
  };
  std::vector<Composite> composites;
  for (std::size_t i = 0; i < x.size(); ++i) level.elements.push_back(Term::var(i));
  for (std::size_t op = 0; op < sig.size(); ++op) {
    for_each_monotone_image(sig.op(op).arity, prev.poset, [&](const std::vector<std::size_t>& f) {
      if (level.elements.size() >= cap) {
        throw Explosion("free-chain level exceeds " + std::to_string(cap) + " elements");
      }
      std::vector<Term> args;
      args.reserve(f.size());
      for (std::size_t v : f) args.push_back(prev.elements[v]);
      level.elements.push_back(Term::app(op, std::move(args)));
      composites.push_back({op, f});
      return true;
    });
  }
  const std::size_t n = level.elements.size();
  const std::size_t base = x.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) rel[i][i] = true;
  for (std::size_t i = 0; i < base; ++i) {
    for (std::size_t j = 0; j < base; ++j) rel[i][j] = x.leq(i, j);
  }
  if (coherent) {
    for (std::size_t a = 0; a < composites.size(); ++a) {
      for (std::size_t b = 0; b < composites.size(); ++b) {
        if (a == b || composites[a].op != composites[b].op) continue;
        bool le = true;
        const auto& fa = composites[a].args;
        const auto& fb = composites[b].args;
        for (std::size_t k = 0; k < fa.size() && le; ++k) le = prev.poset.leq(fa[k], fb[k]);
        rel[base + a][base + b] = le;
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    level.index.emplace(level.elements[i], i);
    labels.push_back(to_string(sig, x, level.elements[i]));
  }
  level.poset = FinPoset::from_relation(rel, std::move(labels));
  return level;
}

}  // namespace

FreeChain free_chain(std::shared_ptr<const Signature> sig, const FinPoset& generators,
                     std::size_t n, bool coherent, std::size_t cap) {
  FreeChain chain;
  chain.signature = sig;
  chain.generators = generators;
  chain.coherent = coherent;
  chain.levels.push_back(generator_level(generators));
  for (std::size_t k = 0; k < n; ++k) {
    chain.levels.push_back(next_level(*sig, generators, chain.levels.back(), coherent, cap));
    const FreeLevel& from = chain.levels[k];
    const FreeLevel& to = chain.levels[k + 1];
    std::vector<std::size_t> image;
    image.reserve(from.elements.size());
    for (const Term& t : from.elements) {
      auto it = to.index.find(t);
      if (it == to.index.end()) {
        throw InternalInvariantViolation("free-chain level " + std::to_string(k) +
                                         " is not contained in the next level");
      }
      image.push_back(it->second);
    }
    auto w = MonotoneMap::make(from.poset, to.poset, std::move(image));
    if (!is_embedding(w)) {
      throw InternalInvariantViolation("free-chain inclusion " + std::to_string(k) +
                                       " is not an embedding");
    }
    chain.embeddings.push_back(std::move(w));
  }
  return chain;
}

MonotoneMap eval_into(const FreeChain& chain, std::size_t level, const FiniteAlgebra& a,
                      const MonotoneMap& f) {
  if (!(a.signature() == *chain.signature)) {
    throw SignatureMismatch("algebra and free chain use different signatures");
  }
  if (!f.dom().same_order(chain.generators) || !f.cod().same_order(a.carrier())) {
    throw DomainMismatch("valuation must map the generators into the algebra");
  }
  const FreeLevel& w = chain.levels.at(level);
  std::vector<std::size_t> image;
  image.reserve(w.elements.size());
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    auto v = evaluate(a, f, w.elements[i]);
    if (!v) {
      throw UndefinedEvaluation("element " + w.poset.label(i) + " has no value in the algebra");
    }
    image.push_back(*v);
  }
  return MonotoneMap::make(w.poset, a.carrier(), std::move(image));
}

}  // namespace ordalg
