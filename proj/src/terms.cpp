#include "ordalg/terms.hpp"

#include <algorithm>

namespace ordalg {

std::size_t Signature::add(std::string name, FinPoset arity) {
  if (find(name)) throw Error("duplicate operation symbol '" + name + "'");
  ContextId cls = canonicalize(arity);
  ops_.push_back(OpSymbol{std::move(name), std::move(arity), std::move(cls)});
  return ops_.size() - 1;
}

std::optional<std::size_t> Signature::find(const std::string& name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Signature::ops_of(const ContextId& arity) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].arity_class == arity) out.push_back(i);
  }
  return out;
}

std::vector<ContextId> Signature::arities() const {
  std::vector<ContextId> out;
  for (const auto& op : ops_) {
    if (std::find(out.begin(), out.end(), op.arity_class) == out.end()) {
      out.push_back(op.arity_class);
    }
  }
  return out;
}

bool Signature::operator==(const Signature& other) const {
  if (ops_.size() != other.ops_.size()) return false;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name != other.ops_[i].name) return false;
    if (!ops_[i].arity.same_order(other.ops_[i].arity)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Term Term::var(std::size_t index) {
  Term t;
  t.index_ = index;
  return t;
}

Term Term::app(std::size_t op, std::vector<Term> args) {
  Term t;
  t.index_ = op;
  std::size_t d = 0;
  for (const auto& a : args) d = std::max(d, a.depth_);
  t.depth_ = d + 1;
  t.args_ = std::make_shared<const std::vector<Term>>(std::move(args));
  return t;
}

const std::vector<Term>& Term::args() const {
  static const std::vector<Term> none;
  return args_ ? *args_ : none;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  // Variables sort before applications.
  if (a.is_var() != b.is_var()) {
    return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.index_ <=> b.index_; c != 0) return c;
  if (a.is_var() || a.args_ == b.args_) return std::strong_ordering::equal;
  const auto& x = *a.args_;
  const auto& y = *b.args_;
  if (auto c = x.size() <=> y.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Term make_term(const Signature& sig, std::size_t op, std::vector<Term> args) {
  if (op >= sig.size()) throw SignatureMismatch("unknown operation index " + std::to_string(op));
  const std::size_t expected = sig.op(op).arity.size();
  if (args.size() != expected) {
    throw ArityMismatch("operation '" + sig.op(op).name + "' expects " +
                        std::to_string(expected) + " arguments, got " +
                        std::to_string(args.size()));
  }
  return Term::app(op, std::move(args));
}

Term op_as_term(const Signature& sig, std::size_t op) {
  std::vector<Term> args;
  for (std::size_t i = 0; i < sig.op(op).arity.size(); ++i) args.push_back(Term::var(i));
  return make_term(sig, op, std::move(args));
}

bool well_formed(const Signature& sig, std::size_t context_size, const Term& t) {
  if (t.is_var()) return t.var_index() < context_size;
  if (t.op() >= sig.size() || t.args().size() != sig.op(t.op()).arity.size()) return false;
  return std::all_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return well_formed(sig, context_size, a); });
}

std::string to_string(const Signature& sig, const FinPoset& context, const Term& t) {
  if (t.is_var()) return context.label(t.var_index());
  std::string s = sig.op(t.op()).name;
  if (t.args().empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) s += ',';
    s += to_string(sig, context, t.args()[i]);
  }
  return s + ')';
}

std::vector<Term> enumerate_terms(const Signature& sig, const FinPoset& context,
                                  std::size_t depth, std::size_t cap) {
  std::vector<Term> level;
  for (std::size_t i = 0; i < context.size(); ++i) level.push_back(Term::var(i));
  if (level.size() > cap) throw Explosion("term enumeration exceeds the cap");
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Term> next(level.begin(), level.begin() + static_cast<long>(context.size()));
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t n = sig.op(op).arity.size();
      std::vector<std::size_t> pick(n, 0);
      if (n > 0 && level.empty()) continue;
      while (true) {
        if (next.size() >= cap) throw Explosion("term enumeration exceeds the cap");
        std::vector<Term> args;
        args.reserve(n);
        for (std::size_t k = 0; k < n; ++k) args.push_back(level[pick[k]]);
        next.push_back(Term::app(op, std::move(args)));
        bool done = true;
        for (std::size_t k = n; k-- > 0;) {
          if (++pick[k] < level.size()) {
            done = false;
            break;
          }
          pick[k] = 0;
        }
        if (done) break;
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Inequation> equality(std::string label, const FinPoset& context, const Term& s,
                                 const Term& t) {
  return {Inequation{label, context, s, t}, Inequation{label, context, t, s}};
}

std::string to_string(const Signature& sig, const Inequation& e,
                      const std::string& context_name) {
  return context_name + " |- " + to_string(sig, e.context, e.lhs) + " <= " +
         to_string(sig, e.context, e.rhs);
}

}  // namespace ordalg
