#include <algorithm>
#include <numeric>

#include "ordalg/algebra.hpp"

namespace ordalg {

namespace {

void collect_ops(const Term& t, std::vector<std::size_t>& out) {
  if (t.is_var()) return;
  out.push_back(t.op());
  for (const auto& a : t.args()) collect_ops(a, out);
}

bool table_monotone(const ValuationSpace& space, const FinPoset& carrier,
                    const std::vector<std::size_t>& table) {
  for (std::size_t f = 0; f < space.size(); ++f) {
    for (std::size_t g = 0; g < space.size(); ++g) {
      if (f == g) continue;
      bool le = true;
      for (std::size_t k = 0; k < space.at(f).size() && le; ++k) {
        le = carrier.leq(space.at(f)[k], space.at(g)[k]);
      }
      if (le && !carrier.leq(table[f], table[g])) return false;
    }
  }
  return true;
}

struct ModelSearch {
  std::shared_ptr<const Signature> sig;
  const std::vector<Inequation>& inequations;
  bool coherent;
  FinPoset carrier;
  const std::function<bool(const FiniteAlgebra&)>& visit;

  ValuationSpaces spaces;
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> buckets;
  std::vector<std::vector<std::size_t>> tables;
  std::size_t found = 0;

  bool check_bucket(std::size_t d) {
    if (buckets[d].empty()) return true;
    FiniteAlgebra partial(sig, carrier, spaces, tables);
    return std::all_of(buckets[d].begin(), buckets[d].end(),
                       [&](std::size_t e) { return satisfies(partial, inequations[e]).holds; });
  }

  // Returns false once the visitor asks to stop.
  bool dfs(std::size_t d) {
    if (d == order.size()) {
      ++found;
      return visit(FiniteAlgebra(sig, carrier, spaces, tables));
    }
    const std::size_t op = order[d];
    const std::size_t k = spaces[op]->size();
    const std::size_t m = carrier.size();
    auto& table = tables[op];
    table.assign(k, 0);
    while (true) {
      if ((!coherent || table_monotone(*spaces[op], carrier, table)) && check_bucket(d + 1)) {
        if (!dfs(d + 1)) return false;
      }
      std::size_t pos = k;
      bool done = true;
      while (pos-- > 0) {
        if (++table[pos] < m) {
          done = false;
          break;
        }
        table[pos] = 0;
      }
      if (done) break;
    }
    return true;
  }
};

}  // namespace

std::size_t for_each_model(const std::shared_ptr<const Signature>& sig,
                           const std::vector<Inequation>& inequations, bool coherent,
                           const FinPoset& carrier,
                           const std::function<bool(const FiniteAlgebra&)>& visit) {
  ModelSearch s{sig, inequations, coherent, carrier, visit, {}, {}, {}, {}, 0};
  s.spaces = valuation_spaces(*sig, carrier);
  s.order.resize(sig->size());
  std::iota(s.order.begin(), s.order.end(), std::size_t{0});
  std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t a, std::size_t b) {
    return s.spaces[a]->size() < s.spaces[b]->size();
  });
  std::vector<std::size_t> rank(sig->size());
  for (std::size_t d = 0; d < s.order.size(); ++d) rank[s.order[d]] = d;

  // bucket d + 1 holds the inequations complete once order[0..d] are assigned;
  // bucket 0 those mentioning no symbol at all.
  s.buckets.assign(s.order.size() + 1, {});
  for (std::size_t e = 0; e < inequations.size(); ++e) {
    std::vector<std::size_t> ops;
    collect_ops(inequations[e].lhs, ops);
    collect_ops(inequations[e].rhs, ops);
    std::size_t level = 0;
    for (std::size_t op : ops) {
      if (op >= sig->size()) throw SignatureMismatch("inequation uses an unknown symbol");
      level = std::max(level, rank[op] + 1);
    }
    s.buckets[level].push_back(e);
  }
  s.tables.assign(sig->size(), {});
  for (std::size_t op = 0; op < sig->size(); ++op) s.tables[op].assign(s.spaces[op]->size(), 0);
  // An empty carrier admits no table for a symbol that has a valuation.
  if (carrier.empty() &&
      std::any_of(s.spaces.begin(), s.spaces.end(), [](const auto& sp) { return sp->size() > 0; })) {
    return 0;
  }
  if (s.check_bucket(0)) s.dfs(0);
  return s.found;
}

}  // namespace ordalg
