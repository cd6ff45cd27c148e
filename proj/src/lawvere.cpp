#include "ordalg/lawvere.hpp"

#include <sstream>

namespace ordalg {

namespace {

FinPoset pointwise(const ValuationSpace& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (std::size_t f = 0; f < n; ++f) {
    labels.push_back(valuation_string(s.cod(), s.at(f)));
    for (std::size_t g = 0; g < n; ++g) {
      bool le = true;
      for (std::size_t k = 0; k < s.dom().size() && le; ++k) {
        le = s.cod().leq(s.at(f)[k], s.at(g)[k]);
      }
      rel[f][g] = le;
    }
  }
  return FinPoset::from_relation(rel, std::move(labels));
}

void fail(LawResult& r, const std::string& what) {
  if (r.passed) {
    r.passed = false;
    r.violation = what;
  }
}

}  // namespace

FiniteTheoryCat build_theory(const KleisliTriple& t, std::size_t max_size, std::size_t cap) {
  if (max_size > 3) throw TooLarge("theory categories are bounded by contexts of 3 elements");
  FiniteTheoryCat cat;
  cat.monad = t.name();
  cat.objects = iso_classes_up_to(max_size);
  const std::size_t n = cat.objects.size();
  std::vector<std::shared_ptr<const MonadObject>> tobj;
  for (const auto& c : cat.objects) tobj.push_back(t.object(c.representative()));

  cat.homs.assign(n, {});
  cat.hom_posets.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto s = std::make_shared<ValuationSpace>(cat.objects[b].representative(), tobj[a]->carrier);
      cat.hom_posets[a].push_back(pointwise(*s));
      cat.homs[a].push_back(std::move(s));
    }
  }

  std::size_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) total += cat.homs[a][b]->size() * cat.homs[b][c]->size();
    }
  }
  if (total > cap) {
    throw Explosion("composition tables need " + std::to_string(total) + " entries");
  }

  for (std::size_t a = 0; a < n; ++a) {
    const FinPoset& ga = cat.objects[a].representative();
    auto id = cat.homs[a][a]->find(t.unit(ga).image());
    if (!id) throw InternalInvariantViolation("unit is not a monotone map into T");
    cat.identity.push_back(*id);
  }

  cat.compose.assign(n * n * n, {});
  std::vector<std::size_t> image;
  for (std::size_t a = 0; a < n; ++a) {
    const FinPoset& ga = cat.objects[a].representative();
    for (std::size_t b = 0; b < n; ++b) {
      const FinPoset& gb = cat.objects[b].representative();
      const ValuationSpace& fab = *cat.homs[a][b];
      std::vector<MonotoneMap> stars;
      for (std::size_t f = 0; f < fab.size(); ++f) {
        stars.push_back(t.extend(gb, ga, MonotoneMap::make(gb, tobj[a]->carrier, fab.at(f))));
      }
      for (std::size_t c = 0; c < n; ++c) {
        const ValuationSpace& fbc = *cat.homs[b][c];
        const ValuationSpace& fac = *cat.homs[a][c];
        auto& tab = cat.table(a, b, c);
        tab.resize(fab.size() * fbc.size());
        for (std::size_t f = 0; f < fab.size(); ++f) {
          for (std::size_t g = 0; g < fbc.size(); ++g) {
            image.clear();
            for (std::size_t v : fbc.at(g)) image.push_back(stars[f](v));
            auto pos = fac.find(image);
            if (!pos) throw InternalInvariantViolation("Kleisli composite is not monotone");
            tab[f * fbc.size() + g] = *pos;
          }
        }
      }
    }
  }
  cat.enriched = check_enriched(t, max_size).passed();
  return cat;
}

LawReport check_theory_laws(const FiniteTheoryCat& cat) {
  const std::size_t n = cat.size();
  LawReport rep;
  rep.monad = cat.monad;
  rep.max_size = n == 0 ? 0 : cat.objects.back().size();
  LawResult left{"left-identity", true, 0, std::nullopt};
  LawResult right{"right-identity", true, 0, std::nullopt};
  LawResult assoc{"associativity", true, 0, std::nullopt};
  auto where = [&](std::initializer_list<std::size_t> objs) {
    std::string s;
    for (std::size_t o : objs) s += (s.empty() ? "" : " ") + cat.objects[o].code();
    return "objects " + s;
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t g = 0; g < cat.homs[a][c]->size(); ++g) {
        ++left.cases;
        const std::size_t r = cat.composite(a, a, c, cat.identity[a], g);
        if (r != g) {
          fail(left, where({a, c}) + ": id . " + cat.hom(a, c).label(g) + " = " +
                         cat.hom(a, c).label(r));
        }
      }
      for (std::size_t f = 0; f < cat.homs[a][c]->size(); ++f) {
        ++right.cases;
        const std::size_t r = cat.composite(a, c, c, f, cat.identity[c]);
        if (r != f) {
          fail(right, where({a, c}) + ": " + cat.hom(a, c).label(f) + " . id = " +
                          cat.hom(a, c).label(r));
        }
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const std::size_t nf = cat.homs[a][b]->size();
          const std::size_t ng = cat.homs[b][c]->size();
          const std::size_t nh = cat.homs[c][d]->size();
          for (std::size_t f = 0; f < nf; ++f) {
            for (std::size_t g = 0; g < ng; ++g) {
              const std::size_t fg = cat.composite(a, b, c, f, g);
              for (std::size_t h = 0; h < nh; ++h) {
                ++assoc.cases;
                const std::size_t l = cat.composite(a, c, d, fg, h);
                const std::size_t r = cat.composite(a, b, d, f, cat.composite(b, c, d, g, h));
                if (l != r) {
                  fail(assoc, where({a, b, c, d}) + ": (fg)h = " + cat.hom(a, d).label(l) +
                                  " but f(gh) = " + cat.hom(a, d).label(r));
                }
              }
            }
          }
        }
      }
    }
  }
  rep.laws = {left, right, assoc};
  if (!cat.enriched) return rep;

  LawResult mono{"monotone-composition", true, 0, std::nullopt};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const FinPoset& hab = cat.hom(a, b);
        const FinPoset& hbc = cat.hom(b, c);
        const FinPoset& hac = cat.hom(a, c);
        for (std::size_t f = 0; f < hab.size(); ++f) {
          for (std::size_t g = 0; g < hbc.size(); ++g) {
            const std::size_t fg = cat.composite(a, b, c, f, g);
            for (std::size_t f2 = 0; f2 < hab.size(); ++f2) {
              if (f2 == f || !hab.leq(f, f2)) continue;
              ++mono.cases;
              if (!hac.leq(fg, cat.composite(a, b, c, f2, g))) {
                fail(mono, where({a, b, c}) + ": " + hab.label(f) + " <= " + hab.label(f2) +
                               " but composites with " + hbc.label(g) + " are not ordered");
              }
            }
            for (std::size_t g2 = 0; g2 < hbc.size(); ++g2) {
              if (g2 == g || !hbc.leq(g, g2)) continue;
              ++mono.cases;
              if (!hac.leq(fg, cat.composite(a, b, c, f, g2))) {
                fail(mono, where({a, b, c}) + ": " + hbc.label(g) + " <= " + hbc.label(g2) +
                               " but composites with " + hab.label(f) + " are not ordered");
              }
            }
          }
        }
      }
    }
  }
  rep.laws.push_back(mono);
  return rep;
}

std::string hom_size_table(const FiniteTheoryCat& cat) {
  std::ostringstream out;
  for (std::size_t a = 0; a < cat.size(); ++a) {
    for (std::size_t b = 0; b < cat.size(); ++b) {
      out << cat.objects[a].code() << " -> " << cat.objects[b].code() << " : "
          << cat.homs[a][b]->size() << "\n";
    }
  }
  return out.str();
}

}  // namespace ordalg
