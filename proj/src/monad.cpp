#include "ordalg/monad.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace ordalg {

namespace {

constexpr std::size_t kMaxMonadBase = 20;

std::string memo_key(const FinPoset& x) {
  std::string key = std::to_string(x.size()) + ":";
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) key += x.leq(i, j) ? '1' : '0';
  }
  for (const auto& l : x.labels()) key += "|" + l;
  return key;
}

ElementSet union_of(ElementSet s, std::span<const ElementSet> f) {
  ElementSet acc = 0;
  for (std::size_t i : members(s)) acc |= f[i];
  return acc;
}

std::string describe_images(const FinPoset& y, std::span<const ElementSet> f) {
  std::string s = "[";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) s += ' ';
    s += describe_set(y, f[k]);
  }
  return s + "]";
}

}  // namespace

std::string describe_set(const FinPoset& x, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : members(s)) {
    if (!first) out += ',';
    first = false;
    out += x.label(i);
  }
  return out + "}";
}

std::optional<std::size_t> MonadObject::find(ElementSet s) const {
  auto it = position_.find(s);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

KleisliTriple::KleisliTriple(Spec spec) : spec_(std::move(spec)), memo_(std::make_shared<Memo>()) {}

KleisliTriple KleisliTriple::with_unit(decltype(Spec::unit) unit, std::string name) const {
  Spec s = spec_;
  s.unit = std::move(unit);
  s.name = std::move(name);
  return KleisliTriple(std::move(s));
}

KleisliTriple KleisliTriple::with_extend(decltype(Spec::extend) extend, std::string name) const {
  Spec s = spec_;
  s.extend = std::move(extend);
  s.name = std::move(name);
  return KleisliTriple(std::move(s));
}

std::shared_ptr<const MonadObject> KleisliTriple::object(const FinPoset& x) const {
  if (x.size() > kMaxMonadBase) {
    throw TooLarge("monad objects are built for posets of at most 20 elements");
  }
  const std::string key = memo_key(x);
  {
    std::shared_lock lock(memo_->mutex);
    if (auto it = memo_->objects.find(key); it != memo_->objects.end()) return it->second;
  }
  auto obj = std::make_shared<MonadObject>();
  obj->base = x;
  const ElementSet limit = ElementSet{1} << x.size();
  for (ElementSet s = 0; s < limit; ++s) {
    if (spec_.admissible(x, s)) {
      obj->position_.emplace(s, obj->elements.size());
      obj->elements.push_back(s);
    }
  }
  const std::size_t n = obj->elements.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = spec_.leq(x, obj->elements[i], obj->elements[j]);
    labels.push_back(describe_set(x, obj->elements[i]));
  }
  obj->carrier = FinPoset::from_relation(rel, std::move(labels));

  std::unique_lock lock(memo_->mutex);
  // A concurrent fill may have won; both computed the same value.
  auto [it, inserted] = memo_->objects.emplace(key, std::move(obj));
  return it->second;
}

MonotoneMap KleisliTriple::unit(const FinPoset& x) const {
  auto tx = object(x);
  std::vector<std::size_t> image;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const ElementSet s = spec_.unit(x, i);
    auto pos = tx->find(s);
    if (!pos) {
      throw InternalInvariantViolation(name() + ": unit value " + describe_set(x, s) +
                                       " is not an element of TX");
    }
    image.push_back(*pos);
  }
  return MonotoneMap::unchecked(x, tx->carrier, std::move(image));
}

std::vector<ElementSet> describe(const MonadObject& ty, const MonotoneMap& f) {
  std::vector<ElementSet> out;
  out.reserve(f.dom().size());
  for (std::size_t v : f.image()) out.push_back(ty.elements[v]);
  return out;
}

MonotoneMap KleisliTriple::extend(const FinPoset& x, const FinPoset& y, const MonotoneMap& f) const {
  auto tx = object(x);
  auto ty = object(y);
  if (!f.dom().same_order(x) || !f.cod().same_order(ty->carrier)) {
    throw DomainMismatch(name() + ": Kleisli map must go from X to TY");
  }
  const auto fs = describe(*ty, f);
  std::vector<std::size_t> image;
  image.reserve(tx->elements.size());
  for (ElementSet s : tx->elements) {
    const ElementSet r = extend_set(*ty, s, fs);
    auto pos = ty->find(r);
    if (!pos) {
      throw InternalInvariantViolation(name() + ": extension value " + describe_set(y, r) +
                                       " is not an element of TY");
    }
    image.push_back(*pos);
  }
  return MonotoneMap::unchecked(tx->carrier, ty->carrier, std::move(image));
}

MonotoneMap KleisliTriple::functor_action(const MonotoneMap& f) const {
  const FinPoset& y = f.cod();
  return extend(f.dom(), y, unit(y).after(f));
}

MonotoneMap KleisliTriple::multiplication(const FinPoset& x) const {
  const FinPoset& tx = object(x)->carrier;
  return extend(tx, x, MonotoneMap::identity(tx));
}

// ---------------------------------------------------------------------------

KleisliTriple convex_monad() {
  return KleisliTriple(KleisliTriple::Spec{
      "conv",
      [](const FinPoset& x, ElementSet s) { return is_convex(x, s); },
      [](const FinPoset& x, ElementSet s, ElementSet t) { return egli_milner_leq(x, s, t); },
      [](const FinPoset&, std::size_t i) { return singleton(i); },
      [](const FinPoset& y, ElementSet s, std::span<const ElementSet> f) {
        return convex_hull(y, union_of(s, f));
      }});
}

KleisliTriple downset_monad() {
  return KleisliTriple(KleisliTriple::Spec{
      "down",
      [](const FinPoset& x, ElementSet s) { return is_down_closed(x, s); },
      [](const FinPoset&, ElementSet s, ElementSet t) { return is_subset(s, t); },
      [](const FinPoset& x, std::size_t i) { return x.down_set(i); },
      [](const FinPoset&, ElementSet s, std::span<const ElementSet> f) { return union_of(s, f); }});
}

KleisliTriple bounded_downset_monad() {
  return KleisliTriple(KleisliTriple::Spec{
      "bdown",
      [](const FinPoset& x, ElementSet s) { return is_down_closed(x, s) && is_bounded(x, s); },
      [](const FinPoset&, ElementSet s, ElementSet t) { return is_subset(s, t); },
      [](const FinPoset& x, std::size_t i) { return x.down_set(i); },
      [](const FinPoset&, ElementSet s, std::span<const ElementSet> f) { return union_of(s, f); }});
}

std::optional<KleisliTriple> monad_by_name(const std::string& name) {
  if (name == "conv") return convex_monad();
  if (name == "down") return downset_monad();
  if (name == "bdown") return bounded_downset_monad();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Law sweeps

bool LawReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed; });
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

namespace {

struct Kleisli {
  std::size_t from;  // class index of the domain
  std::vector<ElementSet> images;
};

struct Sweep {
  std::vector<ContextId> classes;
  std::vector<std::shared_ptr<const MonadObject>> objects;
  // homs[x][y]: all monotone X -> TY as descriptions
  std::vector<std::vector<std::vector<std::vector<ElementSet>>>> homs;
};

Sweep prepare(const KleisliTriple& t, std::size_t max_size) {
  if (max_size > 5) throw TooLarge("law sweeps are bounded by posets of 5 elements");
  Sweep sw;
  sw.classes = iso_classes_up_to(max_size);
  for (const auto& c : sw.classes) sw.objects.push_back(t.object(c.representative()));
  const std::size_t n = sw.classes.size();
  sw.homs.assign(n, std::vector<std::vector<std::vector<ElementSet>>>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& ty = *sw.objects[y];
      for_each_monotone_image(sw.classes[x].representative(), ty.carrier,
                              [&](const std::vector<std::size_t>& img) {
                                std::vector<ElementSet> f;
                                f.reserve(img.size());
                                for (std::size_t v : img) f.push_back(ty.elements[v]);
                                sw.homs[x][y].push_back(std::move(f));
                                return true;
                              });
    }
  }
  return sw;
}

void fail(LawResult& r, const std::string& what) {
  if (r.passed) {
    r.passed = false;
    r.violation = what;
  }
}

}  // namespace

LawReport check_kleisli_laws(const KleisliTriple& t, std::size_t max_size) {
  const Sweep sw = prepare(t, max_size);
  const auto& spec = t.spec();
  const std::size_t n = sw.classes.size();
  LawResult mono{"monotone", true, 0, std::nullopt};
  LawResult kt1{"KT1", true, 0, std::nullopt};
  LawResult kt2{"KT2", true, 0, std::nullopt};
  LawResult kt3{"KT3", true, 0, std::nullopt};

  auto in_t = [](const MonadObject& o, ElementSet s) { return o.find(s).has_value(); };

  for (std::size_t xi = 0; xi < n; ++xi) {
    const FinPoset& x = sw.classes[xi].representative();
    const MonadObject& tx = *sw.objects[xi];
    std::vector<ElementSet> unit(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) unit[i] = spec.unit(x, i);

    ++mono.cases;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!in_t(tx, unit[i])) {
        fail(mono, "X=" + sw.classes[xi].code() + ": unit(" + x.label(i) + ") = " +
                       describe_set(x, unit[i]) + " is not in TX");
      }
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (x.leq(i, j) && !spec.leq(x, unit[i], unit[j])) {
          fail(mono, "X=" + sw.classes[xi].code() + ": unit is not monotone");
        }
      }
    }

    for (ElementSet s : tx.elements) {
      ++kt1.cases;
      const ElementSet r = t.extend_set(tx, s, unit);
      if (r != s) {
        fail(kt1, "X=" + sw.classes[xi].code() + " S=" + describe_set(x, s) + ": unit*(S) = " +
                      describe_set(x, r));
      }
    }

    for (std::size_t yi = 0; yi < n; ++yi) {
      const FinPoset& y = sw.classes[yi].representative();
      const MonadObject& ty = *sw.objects[yi];
      for (const auto& f : sw.homs[xi][yi]) {
        std::vector<ElementSet> fstar(tx.elements.size());
        for (std::size_t k = 0; k < tx.elements.size(); ++k) {
          fstar[k] = t.extend_set(ty, tx.elements[k], f);
        }
        ++mono.cases;
        for (std::size_t a = 0; a < fstar.size(); ++a) {
          if (!in_t(ty, fstar[a])) {
            fail(mono, "X=" + sw.classes[xi].code() + " Y=" + sw.classes[yi].code() +
                           " f=" + describe_images(y, f) + ": f*(" +
                           describe_set(x, tx.elements[a]) + ") = " + describe_set(y, fstar[a]) +
                           " is not in TY");
          }
          for (std::size_t b = 0; b < fstar.size(); ++b) {
            if (tx.carrier.leq(a, b) && !spec.leq(y, fstar[a], fstar[b])) {
              fail(mono, "X=" + sw.classes[xi].code() + " Y=" + sw.classes[yi].code() +
                             " f=" + describe_images(y, f) + ": f* is not monotone");
            }
          }
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
          ++kt2.cases;
          const ElementSet r = t.extend_set(ty, unit[i], f);
          if (r != f[i]) {
            fail(kt2, "X=" + sw.classes[xi].code() + " Y=" + sw.classes[yi].code() +
                          " f=" + describe_images(y, f) + ": f*(unit(" + x.label(i) +
                          ")) = " + describe_set(y, r) + " but f(" + x.label(i) +
                          ") = " + describe_set(y, f[i]));
          }
        }
      }
    }
  }

  // KT3: for fixed Y, pair every f: X -> TY with every g: Y -> TZ.
  for (std::size_t yi = 0; yi < n; ++yi) {
    const FinPoset& y = sw.classes[yi].representative();
    const MonadObject& ty = *sw.objects[yi];
    for (std::size_t xi = 0; xi < n; ++xi) {
      const FinPoset& x = sw.classes[xi].representative();
      const MonadObject& tx = *sw.objects[xi];
      for (const auto& f : sw.homs[xi][yi]) {
        std::vector<ElementSet> fstar(tx.elements.size());
        for (std::size_t k = 0; k < tx.elements.size(); ++k) {
          fstar[k] = t.extend_set(ty, tx.elements[k], f);
        }
        for (std::size_t zi = 0; zi < n; ++zi) {
          const FinPoset& z = sw.classes[zi].representative();
          const MonadObject& tz = *sw.objects[zi];
          std::vector<ElementSet> gf(x.size());
          for (const auto& g : sw.homs[yi][zi]) {
            for (std::size_t i = 0; i < x.size(); ++i) gf[i] = t.extend_set(tz, f[i], g);
            for (std::size_t k = 0; k < tx.elements.size(); ++k) {
              ++kt3.cases;
              if (!kt3.passed) continue;
              const ElementSet s = tx.elements[k];
              auto where = [&] {
                return "X=" + sw.classes[xi].code() + " Y=" + sw.classes[yi].code() +
                       " Z=" + sw.classes[zi].code() + " f=" + describe_images(y, f) +
                       " g=" + describe_images(z, g) + " S=" + describe_set(x, s);
              };
              if (!in_t(ty, fstar[k])) {
                fail(kt3, where() + ": f*(S) = " + describe_set(y, fstar[k]) + " is not in TY");
                continue;
              }
              const ElementSet lhs = t.extend_set(tz, fstar[k], g);
              const ElementSet rhs = t.extend_set(tz, s, gf);
              if (lhs != rhs) {
                fail(kt3, where() + ": g*(f*(S)) = " + describe_set(z, lhs) +
                              " but (g* . f)*(S) = " + describe_set(z, rhs));
              } else if (!in_t(tz, lhs)) {
                fail(kt3, where() + ": g*(f*(S)) = " + describe_set(z, lhs) + " is not in TZ");
              }
            }
          }
        }
      }
    }
  }

  LawReport report;
  report.monad = t.name();
  report.max_size = max_size;
  report.laws = {mono, kt1, kt2, kt3};
  return report;
}

LawReport check_enriched(const KleisliTriple& t, std::size_t max_size) {
  const Sweep sw = prepare(t, max_size);
  const auto& spec = t.spec();
  const std::size_t n = sw.classes.size();
  LawResult ext{"extension-monotone", true, 0, std::nullopt};
  LawResult fun{"functor-monotone", true, 0, std::nullopt};

  auto pointwise = [&](const FinPoset& y, const std::vector<ElementSet>& f,
                       const std::vector<ElementSet>& g) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!spec.leq(y, f[i], g[i])) return false;
    }
    return true;
  };

  for (std::size_t xi = 0; xi < n; ++xi) {
    const FinPoset& x = sw.classes[xi].representative();
    const MonadObject& tx = *sw.objects[xi];
    for (std::size_t yi = 0; yi < n; ++yi) {
      const FinPoset& y = sw.classes[yi].representative();
      const MonadObject& ty = *sw.objects[yi];
      const auto& fs = sw.homs[xi][yi];
      std::vector<std::vector<ElementSet>> stars(fs.size());
      for (std::size_t a = 0; a < fs.size(); ++a) {
        for (ElementSet s : tx.elements) stars[a].push_back(t.extend_set(ty, s, fs[a]));
      }
      for (std::size_t a = 0; a < fs.size(); ++a) {
        for (std::size_t b = 0; b < fs.size(); ++b) {
          if (a == b || !pointwise(y, fs[a], fs[b])) continue;
          ++ext.cases;
          for (std::size_t k = 0; k < tx.elements.size(); ++k) {
            if (!spec.leq(y, stars[a][k], stars[b][k])) {
              fail(ext, "X=" + sw.classes[xi].code() + " Y=" + sw.classes[yi].code() + " f=" +
                            describe_images(y, fs[a]) + " <= g=" + describe_images(y, fs[b]) +
                            " but f*(" + describe_set(x, tx.elements[k]) + ") = " +
                            describe_set(y, stars[a][k]) + " is not below " +
                            describe_set(y, stars[b][k]));
            }
          }
        }
      }

      // Tf = (unit . f)* for plain monotone f <= g: X -> Y.
      std::vector<ElementSet> unit_y(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) unit_y[i] = spec.unit(y, i);
      std::vector<std::vector<std::size_t>> plain;
      for_each_monotone_image(x, y, [&](const std::vector<std::size_t>& img) {
        plain.push_back(img);
        return true;
      });
      std::vector<std::vector<ElementSet>> tf(plain.size());
      for (std::size_t a = 0; a < plain.size(); ++a) {
        std::vector<ElementSet> uf(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) uf[i] = unit_y[plain[a][i]];
        for (ElementSet s : tx.elements) tf[a].push_back(t.extend_set(ty, s, uf));
      }
      for (std::size_t a = 0; a < plain.size(); ++a) {
        for (std::size_t b = 0; b < plain.size(); ++b) {
          bool le = a != b;
          for (std::size_t i = 0; i < x.size() && le; ++i) le = y.leq(plain[a][i], plain[b][i]);
          if (!le) continue;
          ++fun.cases;
          for (std::size_t k = 0; k < tx.elements.size(); ++k) {
            if (!spec.leq(y, tf[a][k], tf[b][k])) {
              fail(fun, "X=" + sw.classes[xi].code() + " Y=" + sw.classes[yi].code() +
                            ": Tf(" + describe_set(x, tx.elements[k]) + ") = " +
                            describe_set(y, tf[a][k]) + " is not below Tg(...) = " +
                            describe_set(y, tf[b][k]));
            }
          }
        }
      }
    }
  }
  LawReport report;
  report.monad = t.name();
  report.max_size = max_size;
  report.laws = {ext, fun};
  return report;
}

}  // namespace ordalg
