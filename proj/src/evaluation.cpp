#include <algorithm>

#include "ordalg/algebra.hpp"

namespace ordalg {

namespace {

std::optional<std::size_t> eval_rec(const FiniteAlgebra& a, std::span<const std::size_t> valuation,
                                    const Term& t) {
  if (t.is_var()) {
    if (t.var_index() >= valuation.size()) {
      throw SignatureMismatch("variable " + std::to_string(t.var_index()) +
                              " outside the context");
    }
    return valuation[t.var_index()];
  }
  const Signature& sig = a.signature();
  if (t.op() >= sig.size() || t.args().size() != sig.op(t.op()).arity.size()) {
    throw SignatureMismatch("term uses a symbol foreign to the algebra's signature");
  }
  const auto& args = t.args();
  std::vector<std::size_t> values(args.size());
  for (std::size_t k = 0; k < args.size(); ++k) {
    auto v = eval_rec(a, valuation, args[k]);
    if (!v) return std::nullopt;
    values[k] = *v;
  }
  const FinPoset& arity = sig.op(t.op()).arity;
  const FinPoset& carrier = a.carrier();
  for (std::size_t i = 0; i < arity.size(); ++i) {
    for (std::size_t j = 0; j < arity.size(); ++j) {
      if (i != j && arity.leq(i, j) && !carrier.leq(values[i], values[j])) return std::nullopt;
    }
  }
  return a.apply(t.op(), values);
}

}  // namespace

std::optional<std::size_t> evaluate(const FiniteAlgebra& a, std::span<const std::size_t> valuation,
                                    const Term& t) {
  return eval_rec(a, valuation, t);
}

std::optional<std::size_t> evaluate(const FiniteAlgebra& a, const MonotoneMap& f, const Term& t) {
  if (!f.cod().same_order(a.carrier())) {
    throw DomainMismatch("valuation does not land in the algebra's carrier");
  }
  return evaluate(a, std::span<const std::size_t>(f.image()), t);
}

std::string to_string(FailureKind k) {
  switch (k) {
    case FailureKind::LhsUndefined:
      return "LhsUndefined";
    case FailureKind::RhsUndefined:
      return "RhsUndefined";
    case FailureKind::NotLeq:
      return "NotLeq";
  }
  return "?";
}

SatisfactionResult satisfies(const FiniteAlgebra& a, const Inequation& e) {
  const Signature& sig = a.signature();
  if (!well_formed(sig, e.context.size(), e.lhs) || !well_formed(sig, e.context.size(), e.rhs)) {
    throw SignatureMismatch("inequation '" + e.label + "' is not well formed over the signature");
  }
  SatisfactionResult result;
  for_each_monotone_image(e.context, a.carrier(), [&](const std::vector<std::size_t>& f) {
    auto l = evaluate(a, f, e.lhs);
    auto r = evaluate(a, f, e.rhs);
    std::optional<FailureKind> kind;
    if (!l) {
      kind = FailureKind::LhsUndefined;
    } else if (!r) {
      kind = FailureKind::RhsUndefined;
    } else if (!a.carrier().leq(*l, *r)) {
      kind = FailureKind::NotLeq;
    }
    if (kind) {
      result.holds = false;
      result.counterexample = SatisfactionFailure{f, *kind, l, r};
      return false;
    }
    return true;
  });
  return result;
}

bool TheoryReport::passed() const {
  if (coherence && !coherence->coherent) return false;
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const InequationVerdict& v) { return v.result.holds; });
}

TheoryReport satisfies_theory(const FiniteAlgebra& a, const Theory& th) {
  if (!(a.signature() == th.signature)) {
    throw SignatureMismatch("algebra and theory use different signatures");
  }
  TheoryReport report;
  for (std::size_t k = 0; k < th.inequations.size(); ++k) {
    report.verdicts.push_back({k, th.inequations[k].label, satisfies(a, th.inequations[k])});
  }
  if (th.coherent) report.coherence = is_coherent(a);
  return report;
}

}  // namespace ordalg
