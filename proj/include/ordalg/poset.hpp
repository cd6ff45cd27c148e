#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordalg/error.hpp"

namespace ordalg {

/// Subset of a poset's carrier, bit i set iff element i is a member.
/// Operations taking an ElementSet require the poset to have at most 64 elements.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxSetCarrier = 64;

inline bool contains(ElementSet s, std::size_t i) { return (s >> i) & 1U; }
inline ElementSet singleton(std::size_t i) { return ElementSet{1} << i; }
inline bool is_subset(ElementSet s, ElementSet t) { return (s & ~t) == 0; }
std::vector<std::size_t> members(ElementSet s);

/// A finite partial order on {0, ..., size-1}.
///
/// Immutable; copies share the underlying relation.
class FinPoset {
 public:
  /// The empty poset.
  FinPoset();

  /// Validates a square relation matrix. Throws NotReflexive, NotAntisymmetric or
  /// NotTransitive naming the first witnessing indices in lexicographic order.
  static FinPoset from_relation(const std::vector<std::vector<bool>>& relation,
                                std::vector<std::string> labels = {});

  /// Reflexive-transitive closure of the given pairs; throws NotAntisymmetric on cycles.
  static FinPoset from_generators(std::size_t size,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& le,
                                  std::vector<std::string> labels = {});

  static FinPoset chain(std::size_t n);
  static FinPoset discrete(std::size_t n);

  std::size_t size() const { return data_->size; }
  bool empty() const { return size() == 0; }
  bool leq(std::size_t i, std::size_t j) const { return data_->leq[i * data_->size + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  bool has_labels() const { return !data_->labels.empty(); }
  /// Display name of element i; falls back to its index.
  std::string label(std::size_t i) const;
  const std::vector<std::string>& labels() const { return data_->labels; }
  FinPoset with_labels(std::vector<std::string> labels) const;

  /// Elements below (resp. above) i, including i. Requires size() <= 64.
  ElementSet down_set(std::size_t i) const;
  ElementSet up_set(std::size_t i) const;
  ElementSet all() const;

  /// Number of pairs (i, j) with i <= j, counting reflexive pairs.
  std::size_t relation_count() const;

  /// True iff y covers x: x < y with nothing strictly between.
  bool covers(std::size_t x, std::size_t y) const;

  /// Same carrier size and relation; labels ignored.
  bool same_order(const FinPoset& other) const;
  bool operator==(const FinPoset& other) const;

 private:
  struct Data {
    std::size_t size = 0;
    std::vector<std::uint8_t> leq;
    std::vector<std::string> labels;
    std::vector<ElementSet> down;
    std::vector<ElementSet> up;
  };
  explicit FinPoset(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static FinPoset from_checked(std::size_t n, std::vector<std::uint8_t> leq,
                               std::vector<std::string> labels);

  std::shared_ptr<const Data> data_;
};

/// Function between finite posets, stored as the sequence of images.
/// Values built through make() are monotone; unchecked() permits arbitrary
/// functions so that law checkers can inspect faulty constructions.
class MonotoneMap {
 public:
  MonotoneMap() = default;
  static MonotoneMap make(FinPoset dom, FinPoset cod, std::vector<std::size_t> image);
  static MonotoneMap unchecked(FinPoset dom, FinPoset cod, std::vector<std::size_t> image);
  static MonotoneMap identity(const FinPoset& p);
  static MonotoneMap constant(const FinPoset& dom, const FinPoset& cod, std::size_t value);

  const FinPoset& dom() const { return dom_; }
  const FinPoset& cod() const { return cod_; }
  const std::vector<std::size_t>& image() const { return image_; }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  std::size_t operator[](std::size_t i) const { return image_[i]; }

  bool is_monotone() const;

  /// this after inner, i.e. x -> (*this)(inner(x)).
  MonotoneMap after(const MonotoneMap& inner) const;

  bool operator==(const MonotoneMap& other) const {
    return image_ == other.image_ && dom_.same_order(other.dom_) && cod_.same_order(other.cod_);
  }

 private:
  MonotoneMap(FinPoset dom, FinPoset cod, std::vector<std::size_t> image)
      : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {}
  FinPoset dom_;
  FinPoset cod_;
  std::vector<std::size_t> image_;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Same as FinPoset::from_relation.
FinPoset validate_poset(const std::vector<std::vector<bool>>& relation);

/// Visits every monotone image sequence dom -> cod in lexicographic order.
/// The callback returns false to stop early.
void for_each_monotone_image(const FinPoset& dom, const FinPoset& cod,
                             const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// All monotone maps, lexicographic on image sequences. Throws Explosion past the cap.
std::vector<MonotoneMap> enumerate_monotone_maps(const FinPoset& dom, const FinPoset& cod,
                                                 std::size_t cap = kDefaultEnumerationCap);

std::size_t count_monotone_maps(const FinPoset& dom, const FinPoset& cod);

/// f <= g pointwise. Throws DomainMismatch unless both share domain and codomain.
bool pointwise_leq(const MonotoneMap& f, const MonotoneMap& g);

/// Monotone and order-reflecting.
bool is_embedding(const MonotoneMap& m);

struct ProductResult {
  FinPoset poset;
  MonotoneMap first;
  MonotoneMap second;
};

/// Pairs (x, y) are indexed x * |Y| + y.
ProductResult product(const FinPoset& x, const FinPoset& y);

/// Product of any number of factors; tuples are indexed in mixed radix with the
/// last factor varying fastest. The empty product is the one-point poset.
struct NaryProduct {
  FinPoset poset;
  std::vector<MonotoneMap> projections;
  std::vector<std::size_t> tuple(std::size_t index) const;
  std::size_t index(std::span<const std::size_t> tuple) const;
  std::vector<std::size_t> radix;
};
NaryProduct product(std::span<const FinPoset> factors);

struct CoproductResult {
  FinPoset poset;
  MonotoneMap left;
  MonotoneMap right;
};

/// Disjoint union; X occupies indices [0, |X|) and Y follows.
CoproductResult coproduct(const FinPoset& x, const FinPoset& y);

struct CanonicalForm;
class ContextId;
CanonicalForm canonical_form(const FinPoset& x);

/// Canonical representative of an isomorphism class.
class ContextId {
 public:
  ContextId() = default;
  const FinPoset& representative() const { return representative_; }
  /// Deterministic textual key; equal iff the posets are isomorphic.
  const std::string& code() const { return code_; }
  std::size_t size() const { return representative_.size(); }
  bool operator==(const ContextId& other) const { return code_ == other.code_; }
  bool operator<(const ContextId& other) const;

 private:
  friend struct CanonicalForm;
  friend CanonicalForm canonical_form(const FinPoset& x);
  FinPoset representative_;
  std::string code_;
};

inline constexpr std::size_t kMaxCanonicalSize = 8;

struct CanonicalForm {
  ContextId id;
  /// Position of each element of the input inside the representative.
  std::vector<std::size_t> to_representative;
};

/// Minimises the column-major relation matrix over all permutations, so minimal
/// elements come first in the representative. Throws TooLarge above 8 elements.
CanonicalForm canonical_form(const FinPoset& x);
ContextId canonicalize(const FinPoset& x);

/// The isomorphism x -> representative of its class.
MonotoneMap iso_to_representative(const FinPoset& x);

/// One representative per isomorphism class of n-element posets, ordered by code.
const std::vector<ContextId>& iso_classes(std::size_t n);

/// All classes of size 0..max_size, smaller sizes first.
std::vector<ContextId> iso_classes_up_to(std::size_t max_size);

ElementSet down_closure(const FinPoset& x, ElementSet s);
ElementSet up_closure(const FinPoset& x, ElementSet s);
ElementSet convex_hull(const FinPoset& x, ElementSet s);
bool is_down_closed(const FinPoset& x, ElementSet s);
bool is_convex(const FinPoset& x, ElementSet s);

/// Some z in X lies above every member of S. The empty set is bounded iff X is nonempty.
bool is_bounded(const FinPoset& x, ElementSet s);

/// Egli-Milner preorder on arbitrary subsets; a partial order on convex subsets.
bool egli_milner_leq(const FinPoset& x, ElementSet s, ElementSet t);

/// Full subposet on the members of S, in increasing index order.
FinPoset restrict_to(const FinPoset& x, ElementSet s);

struct ChainUnion {
  FinPoset poset;
  std::vector<MonotoneMap> injections;
};

/// Union of a finite chain of embeddings w0: X0 -> X1, w1: X1 -> X2, ...
/// Throws NotEmbedding(i) or DomainMismatch when links do not compose.
ChainUnion chain_union(const FinPoset& first, std::span<const MonotoneMap> embeddings);

/// Hasse diagram in Graphviz syntax: one node per element, an edge x -> y iff y covers x.
std::string hasse_dot(const FinPoset& x, const std::string& graph_name = "poset");

}  // namespace ordalg
