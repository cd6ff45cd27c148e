#include "ordalg/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ordalg {

std::vector<std::size_t> members(ElementSet s) {
  std::vector<std::size_t> out;
  while (s != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

namespace {

void require_set_carrier(const FinPoset& x) {
  if (x.size() > kMaxSetCarrier) {
    throw TooLarge("element sets need a carrier of at most 64 elements, got " +
                   std::to_string(x.size()));
  }
}

}  // namespace

FinPoset::FinPoset() : data_(std::make_shared<const Data>()) {}

FinPoset FinPoset::from_checked(std::size_t n, std::vector<std::uint8_t> leq,
                                std::vector<std::string> labels) {
  auto d = std::make_shared<Data>();
  d->size = n;
  d->leq = std::move(leq);
  if (!labels.empty() && labels.size() != n) {
    throw Error("label count " + std::to_string(labels.size()) + " does not match size " +
                std::to_string(n));
  }
  d->labels = std::move(labels);
  if (n <= kMaxSetCarrier) {
    d->down.assign(n, 0);
    d->up.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d->leq[i * n + j]) {
          d->up[i] |= singleton(j);
          d->down[j] |= singleton(i);
        }
      }
    }
  }
  return FinPoset(std::move(d));
}

FinPoset FinPoset::from_relation(const std::vector<std::vector<bool>>& relation,
                                 std::vector<std::string> labels) {
  const std::size_t n = relation.size();
  for (const auto& row : relation) {
    if (row.size() != n) throw Error("relation matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!relation[i][i]) throw NotReflexive(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (relation[i][j] && relation[j][i]) throw NotAntisymmetric(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!relation[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (relation[j][k] && !relation[i][k]) throw NotTransitive(i, j, k);
      }
    }
  }
  std::vector<std::uint8_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = relation[i][j] ? 1 : 0;
  }
  return from_checked(n, std::move(flat), std::move(labels));
}

FinPoset FinPoset::from_generators(std::size_t n,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& le,
                                   std::vector<std::string> labels) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : le) {
    if (a >= n || b >= n) throw Error("generator pair out of range");
    r[a][b] = true;
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return from_relation(r, std::move(labels));
}

FinPoset FinPoset::chain(std::size_t n) {
  std::vector<std::uint8_t> flat(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) flat[i * n + j] = 1;
  }
  return from_checked(n, std::move(flat), {});
}

FinPoset FinPoset::discrete(std::size_t n) {
  std::vector<std::uint8_t> flat(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = 1;
  return from_checked(n, std::move(flat), {});
}

std::string FinPoset::label(std::size_t i) const {
  if (has_labels()) return data_->labels[i];
  return std::to_string(i);
}

FinPoset FinPoset::with_labels(std::vector<std::string> labels) const {
  return from_checked(size(), data_->leq, std::move(labels));
}

ElementSet FinPoset::down_set(std::size_t i) const {
  require_set_carrier(*this);
  return data_->down[i];
}

ElementSet FinPoset::up_set(std::size_t i) const {
  require_set_carrier(*this);
  return data_->up[i];
}

ElementSet FinPoset::all() const {
  require_set_carrier(*this);
  return size() == 64 ? ~ElementSet{0} : (ElementSet{1} << size()) - 1;
}

std::size_t FinPoset::relation_count() const {
  return static_cast<std::size_t>(std::count(data_->leq.begin(), data_->leq.end(), 1));
}

bool FinPoset::covers(std::size_t x, std::size_t y) const {
  if (!less(x, y)) return false;
  for (std::size_t z = 0; z < size(); ++z) {
    if (less(x, z) && less(z, y)) return false;
  }
  return true;
}

bool FinPoset::same_order(const FinPoset& other) const {
  return data_ == other.data_ || (size() == other.size() && data_->leq == other.data_->leq);
}

bool FinPoset::operator==(const FinPoset& other) const {
  return same_order(other) && data_->labels == other.data_->labels;
}

// ---------------------------------------------------------------------------

MonotoneMap MonotoneMap::make(FinPoset dom, FinPoset cod, std::vector<std::size_t> image) {
  MonotoneMap m = unchecked(std::move(dom), std::move(cod), std::move(image));
  if (!m.is_monotone()) throw NotMonotone("map is not monotone");
  return m;
}

MonotoneMap MonotoneMap::unchecked(FinPoset dom, FinPoset cod, std::vector<std::size_t> image) {
  if (image.size() != dom.size()) {
    throw DomainMismatch("image length " + std::to_string(image.size()) +
                         " differs from domain size " + std::to_string(dom.size()));
  }
  for (std::size_t v : image) {
    if (v >= cod.size()) throw DomainMismatch("image value outside the codomain");
  }
  return MonotoneMap(std::move(dom), std::move(cod), std::move(image));
}

MonotoneMap MonotoneMap::identity(const FinPoset& p) {
  std::vector<std::size_t> img(p.size());
  std::iota(img.begin(), img.end(), std::size_t{0});
  return MonotoneMap(p, p, std::move(img));
}

MonotoneMap MonotoneMap::constant(const FinPoset& dom, const FinPoset& cod, std::size_t value) {
  return make(dom, cod, std::vector<std::size_t>(dom.size(), value));
}

bool MonotoneMap::is_monotone() const {
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    for (std::size_t j = 0; j < dom_.size(); ++j) {
      if (dom_.leq(i, j) && !cod_.leq(image_[i], image_[j])) return false;
    }
  }
  return true;
}

MonotoneMap MonotoneMap::after(const MonotoneMap& inner) const {
  if (!inner.cod().same_order(dom_)) throw DomainMismatch("composition of non-composable maps");
  std::vector<std::size_t> img(inner.dom().size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[inner(i)];
  return MonotoneMap(inner.dom(), cod_, std::move(img));
}

// ---------------------------------------------------------------------------

FinPoset validate_poset(const std::vector<std::vector<bool>>& relation) {
  return FinPoset::from_relation(relation);
}

void for_each_monotone_image(const FinPoset& dom, const FinPoset& cod,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t n = dom.size();
  const std::size_t m = cod.size();
  std::vector<std::size_t> image(n, 0);
  if (n == 0) {
    visit(image);
    return;
  }
  if (m == 0) return;
  // Depth-first over positions; a candidate value is kept iff it is consistent
  // with every already assigned element in both directions.
  std::size_t pos = 0;
  std::vector<std::size_t> next(n, 0);
  while (true) {
    bool placed = false;
    while (next[pos] < m) {
      const std::size_t v = next[pos]++;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        if (dom.leq(q, pos) && !cod.leq(image[q], v)) ok = false;
        if (dom.leq(pos, q) && !cod.leq(v, image[q])) ok = false;
      }
      if (ok) {
        image[pos] = v;
        placed = true;
        break;
      }
    }
    if (placed) {
      if (pos + 1 == n) {
        if (!visit(image)) return;
      } else {
        ++pos;
        next[pos] = 0;
      }
    } else {
      if (pos == 0) return;
      --pos;
    }
  }
}

std::vector<MonotoneMap> enumerate_monotone_maps(const FinPoset& dom, const FinPoset& cod,
                                                 std::size_t cap) {
  std::vector<MonotoneMap> out;
  for_each_monotone_image(dom, cod, [&](const std::vector<std::size_t>& img) {
    if (out.size() >= cap) {
      throw Explosion("more than " + std::to_string(cap) + " monotone maps");
    }
    out.push_back(MonotoneMap::unchecked(dom, cod, img));
    return true;
  });
  return out;
}

std::size_t count_monotone_maps(const FinPoset& dom, const FinPoset& cod) {
  std::size_t count = 0;
  for_each_monotone_image(dom, cod, [&](const std::vector<std::size_t>&) {
    ++count;
    return true;
  });
  return count;
}

bool pointwise_leq(const MonotoneMap& f, const MonotoneMap& g) {
  if (!f.dom().same_order(g.dom()) || !f.cod().same_order(g.cod())) {
    throw DomainMismatch("pointwise comparison of maps with different domain or codomain");
  }
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    if (!f.cod().leq(f(i), g(i))) return false;
  }
  return true;
}

bool is_embedding(const MonotoneMap& m) {
  const auto& d = m.dom();
  const auto& c = m.cod();
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d.leq(i, j) != c.leq(m(i), m(j))) return false;
    }
  }
  return true;
}

ProductResult product(const FinPoset& x, const FinPoset& y) {
  const FinPoset factors[] = {x, y};
  NaryProduct p = product(std::span<const FinPoset>(factors));
  return {p.poset, p.projections[0], p.projections[1]};
}

std::vector<std::size_t> NaryProduct::tuple(std::size_t index) const {
  std::vector<std::size_t> t(radix.size());
  for (std::size_t k = radix.size(); k-- > 0;) {
    t[k] = index % radix[k];
    index /= radix[k];
  }
  return t;
}

std::size_t NaryProduct::index(std::span<const std::size_t> t) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < radix.size(); ++k) idx = idx * radix[k] + t[k];
  return idx;
}

NaryProduct product(std::span<const FinPoset> factors) {
  NaryProduct result;
  std::size_t n = 1;
  for (const auto& f : factors) {
    result.radix.push_back(f.size());
    n *= f.size();
  }
  std::vector<std::vector<std::size_t>> tuples(n);
  for (std::size_t i = 0; i < n; ++i) tuples[i] = result.tuple(i);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  const bool labelled = std::any_of(factors.begin(), factors.end(),
                                    [](const FinPoset& f) { return f.has_labels(); });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t k = 0; k < factors.size() && le; ++k) {
        le = factors[k].leq(tuples[i][k], tuples[j][k]);
      }
      rel[i][j] = le;
    }
    if (labelled) {
      std::string s = "(";
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) s += ",";
        s += factors[k].label(tuples[i][k]);
      }
      labels.push_back(s + ")");
    }
  }
  result.poset = FinPoset::from_relation(rel, std::move(labels));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    std::vector<std::size_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = tuples[i][k];
    result.projections.push_back(MonotoneMap::make(result.poset, factors[k], std::move(img)));
  }
  return result;
}

CoproductResult coproduct(const FinPoset& x, const FinPoset& y) {
  const std::size_t n = x.size() + y.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) rel[i][j] = x.leq(i, j);
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) rel[x.size() + i][x.size() + j] = y.leq(i, j);
  }
  std::vector<std::string> labels;
  if (x.has_labels() || y.has_labels()) {
    for (std::size_t i = 0; i < x.size(); ++i) labels.push_back(x.label(i));
    for (std::size_t i = 0; i < y.size(); ++i) labels.push_back(y.label(i));
  }
  FinPoset p = FinPoset::from_relation(rel, std::move(labels));
  std::vector<std::size_t> l(x.size()), r(y.size());
  std::iota(l.begin(), l.end(), std::size_t{0});
  std::iota(r.begin(), r.end(), x.size());
  return {p, MonotoneMap::make(x, p, std::move(l)), MonotoneMap::make(y, p, std::move(r))};
}

// ---------------------------------------------------------------------------
// Canonical forms

bool ContextId::operator<(const ContextId& other) const {
  if (size() != other.size()) return size() < other.size();
  return code_ < other.code_;
}

namespace {

// Column-major relation of x relabelled by perm (perm[new] = old).
std::vector<std::uint8_t> permuted_columns(const FinPoset& x, const std::vector<std::size_t>& perm) {
  const std::size_t n = x.size();
  std::vector<std::uint8_t> key(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < n; ++row) key[col * n + row] = x.leq(perm[row], perm[col]);
  }
  return key;
}

}  // namespace

CanonicalForm canonical_form(const FinPoset& x) {
  const std::size_t n = x.size();
  if (n > kMaxCanonicalSize) {
    throw TooLarge("canonical forms are computed for at most 8 elements, got " +
                   std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint8_t> best;
  std::vector<std::size_t> best_perm = perm;
  bool first = true;
  do {
    auto key = permuted_columns(x, perm);
    if (first || key < best) {
      first = false;
      best = std::move(key);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = x.leq(best_perm[i], best_perm[j]);
  }
  CanonicalForm cf;
  cf.id.representative_ = FinPoset::from_relation(rel);
  std::string code = std::to_string(n) + ".";
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t row = 0; row < n; ++row) {
      if (row != col) code += best[col * n + row] ? '1' : '0';
    }
  }
  cf.id.code_ = std::move(code);
  cf.to_representative.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) cf.to_representative[best_perm[i]] = i;
  return cf;
}

ContextId canonicalize(const FinPoset& x) { return canonical_form(x).id; }

MonotoneMap iso_to_representative(const FinPoset& x) {
  CanonicalForm cf = canonical_form(x);
  return MonotoneMap::make(x, cf.id.representative(), cf.to_representative);
}

const std::vector<ContextId>& iso_classes(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<ContextId>> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  if (n > kMaxCanonicalSize) throw TooLarge("iso-class enumeration is bounded by 8 elements");

  // Every finite poset has a natural labelling (i <= j implies i <= j as
  // integers), so it suffices to range over transitive strict upper triangles.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::map<std::string, ContextId> seen;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(rel[i].begin(), rel[i].end(), false);
      rel[i][i] = true;
    }
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((bits >> s) & 1U) rel[slots[s].first][slots[s].second] = true;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = i + 1; j < n && transitive; ++j) {
        if (!rel[i][j]) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
          if (rel[j][k] && !rel[i][k]) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (!transitive) continue;
    ContextId id = canonicalize(FinPoset::from_relation(rel));
    seen.emplace(id.code(), id);
  }
  std::vector<ContextId> out;
  for (auto& [code, id] : seen) out.push_back(id);
  return memo.emplace(n, std::move(out)).first->second;
}

std::vector<ContextId> iso_classes_up_to(std::size_t max_size) {
  std::vector<ContextId> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    const auto& cls = iso_classes(n);
    out.insert(out.end(), cls.begin(), cls.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subsets

ElementSet down_closure(const FinPoset& x, ElementSet s) {
  require_set_carrier(x);
  ElementSet out = 0;
  for (std::size_t i : members(s)) out |= x.down_set(i);
  return out;
}

ElementSet up_closure(const FinPoset& x, ElementSet s) {
  require_set_carrier(x);
  ElementSet out = 0;
  for (std::size_t i : members(s)) out |= x.up_set(i);
  return out;
}

ElementSet convex_hull(const FinPoset& x, ElementSet s) {
  return down_closure(x, s) & up_closure(x, s);
}

bool is_down_closed(const FinPoset& x, ElementSet s) { return down_closure(x, s) == s; }

bool is_convex(const FinPoset& x, ElementSet s) { return convex_hull(x, s) == s; }

bool is_bounded(const FinPoset& x, ElementSet s) {
  require_set_carrier(x);
  for (std::size_t z = 0; z < x.size(); ++z) {
    if (is_subset(s, x.down_set(z))) return true;
  }
  return false;
}

bool egli_milner_leq(const FinPoset& x, ElementSet s, ElementSet t) {
  require_set_carrier(x);
  for (std::size_t a : members(s)) {
    if ((x.up_set(a) & t) == 0) return false;
  }
  for (std::size_t b : members(t)) {
    if ((x.down_set(b) & s) == 0) return false;
  }
  return true;
}

FinPoset restrict_to(const FinPoset& x, ElementSet s) {
  auto idx = members(s);
  std::vector<std::vector<bool>> rel(idx.size(), std::vector<bool>(idx.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) rel[i][j] = x.leq(idx[i], idx[j]);
    if (x.has_labels()) labels.push_back(x.label(idx[i]));
  }
  return FinPoset::from_relation(rel, std::move(labels));
}

ChainUnion chain_union(const FinPoset& first, std::span<const MonotoneMap> embeddings) {
  FinPoset current = first;
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    if (!embeddings[i].dom().same_order(current)) {
      throw DomainMismatch("chain link " + std::to_string(i) + " does not start at the previous stage");
    }
    if (!embeddings[i].is_monotone() || !is_embedding(embeddings[i])) throw NotEmbedding(i);
    current = embeddings[i].cod();
  }
  // A finite chain of embeddings has its last stage as colimit; stage k is
  // injected by composing the remaining links.
  ChainUnion out;
  out.poset = current;
  out.injections.resize(embeddings.size() + 1);
  out.injections.back() = MonotoneMap::identity(current);
  for (std::size_t k = embeddings.size(); k-- > 0;) {
    out.injections[k] = out.injections[k + 1].after(embeddings[k]);
  }
  return out;
}

std::string hasse_dot(const FinPoset& x, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  os << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    os << "  n" << i << " [label=\"" << x.label(i) << "\"];\n";
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x.covers(i, j)) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace ordalg
