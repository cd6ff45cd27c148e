#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "ordalg/poset.hpp"

namespace ordalg {

/// The poset TX of a subset monad: each element is described by a subset of X.
struct MonadObject {
  FinPoset base;
  FinPoset carrier;
  /// Description of each carrier element, ascending by bitmask.
  std::vector<ElementSet> elements;

  std::optional<std::size_t> find(ElementSet s) const;

 private:
  friend class KleisliTriple;
  std::map<ElementSet, std::size_t> position_;
};

/// A Kleisli triple (T, unit, extension) on finite posets whose objects TX are
/// posets of subsets of X.
///
/// The behaviour is supplied as plain functions so that faulty variants can be
/// built for negative tests. TX objects are computed on demand and memoised; the
/// memo is shared between copies and safe for concurrent use.
class KleisliTriple {
 public:
  struct Spec {
    std::string name;
    /// Which subsets of X are elements of TX.
    std::function<bool(const FinPoset& x, ElementSet s)> admissible;
    /// Order of TX.
    std::function<bool(const FinPoset& x, ElementSet s, ElementSet t)> leq;
    /// unit_X(x) as a subset of X.
    std::function<ElementSet(const FinPoset& x, std::size_t element)> unit;
    /// f*(S) for f: X -> TY given pointwise as subsets of Y.
    std::function<ElementSet(const FinPoset& y, ElementSet s, std::span<const ElementSet> f)>
        extend;
  };

  explicit KleisliTriple(Spec spec);

  const std::string& name() const { return spec_.name; }
  const Spec& spec() const { return spec_; }

  /// Copies with one component replaced; used to build mutants.
  KleisliTriple with_unit(decltype(Spec::unit) unit, std::string name) const;
  KleisliTriple with_extend(decltype(Spec::extend) extend, std::string name) const;

  /// TX. Throws TooLarge when X has more than 20 elements.
  std::shared_ptr<const MonadObject> object(const FinPoset& x) const;

  MonotoneMap unit(const FinPoset& x) const;

  /// f*: TX -> TY for monotone f: X -> TY. Throws InternalInvariantViolation if a
  /// value falls outside TY.
  MonotoneMap extend(const FinPoset& x, const FinPoset& y, const MonotoneMap& f) const;

  /// Raw f*(S) on descriptions; the result may fail to be admissible for a faulty triple.
  ElementSet extend_set(const MonadObject& ty, ElementSet s,
                        std::span<const ElementSet> f) const {
    return spec_.extend(ty.base, s, f);
  }

  /// Tf = (unit_Y . f)*.
  MonotoneMap functor_action(const MonotoneMap& f) const;

  /// mu_X = (id_TX)*: TTX -> TX.
  MonotoneMap multiplication(const FinPoset& x) const;

 private:
  struct Memo {
    mutable std::shared_mutex mutex;
    std::map<std::string, std::shared_ptr<const MonadObject>> objects;
  };

  Spec spec_;
  std::shared_ptr<Memo> memo_;
};

/// Convex subsets under the Egli-Milner order; unit x -> {x};
/// f*(S) = convex hull of the union of f(s).
KleisliTriple convex_monad();

/// Downsets under inclusion; unit x -> down(x); f*(S) = union of f(s).
KleisliTriple downset_monad();

/// Bounded downsets under inclusion, otherwise as downset_monad.
KleisliTriple bounded_downset_monad();

/// `conv`, `down` or `bdown`; nullopt for anything else.
std::optional<KleisliTriple> monad_by_name(const std::string& name);

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t cases = 0;
  /// Description of the first violation.
  std::optional<std::string> violation;
};

struct LawReport {
  std::string monad;
  std::size_t max_size = 0;
  std::vector<LawResult> laws;
  bool passed() const;
  const LawResult* find(const std::string& law) const;
};

/// KT1 (unit* = id), KT2 (f* . unit = f), KT3 (g* . f* = (g* . f)*) over every
/// iso-class X, Y, Z of size <= max_size and every monotone f: X -> TY,
/// g: Y -> TZ. Also records whether units and extensions are monotone maps
/// into T. Requires max_size <= 5.
LawReport check_kleisli_laws(const KleisliTriple& t, std::size_t max_size);

/// Local monotonicity: f <= g implies f* <= g*, and f <= g in Pos(X, Y)
/// implies Tf <= Tg.
LawReport check_enriched(const KleisliTriple& t, std::size_t max_size);

/// Set-level descriptions of a map into TY.
std::vector<ElementSet> describe(const MonadObject& ty, const MonotoneMap& f);

std::string describe_set(const FinPoset& x, ElementSet s);

}  // namespace ordalg
