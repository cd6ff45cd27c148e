#include "ordalg/dsl.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace ordalg {

namespace {

enum class Tok { Ident, Punct, Turnstile, Leq, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-' ||
         c == '.';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += n;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      out.push_back({Tok::Newline, "\n", line, col});
      ++i;
      ++line;
      col = 1;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (src.substr(i, 2) == "|-") {
      out.push_back({Tok::Turnstile, "|-", line, col});
      advance(2);
    } else if (src.substr(i, 2) == "<=") {
      out.push_back({Tok::Leq, "<=", line, col});
      advance(2);
    } else if (std::string_view("{}()[],;:=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), line, col});
      advance(1);
    } else if (ident_char(c)) {
      const std::size_t start = i, start_col = col;
      while (i < src.size() && ident_char(src[i])) advance(1);
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), line, start_col});
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  TheoryFile run() {
    while (true) {
      skip_separators();
      if (peek().kind == Tok::End) break;
      statement();
      end_statement();
    }
    file_.signature = sig_;
    return std::move(file_);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  TheoryFile file_;
  std::shared_ptr<Signature> sig_ = std::make_shared<Signature>();
  bool signature_seen_ = false;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(t.line, t.column, what);
  }

  bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool at_separator() const {
    return peek().kind == Tok::Newline || peek().kind == Tok::End || at_punct(';');
  }

  void skip_separators() {
    while (peek().kind == Tok::Newline || at_punct(';')) next();
  }

  void end_statement() {
    if (!at_separator()) fail(peek(), "expected end of statement, found " + describe(peek()));
  }

  const Token& ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return next();
  }

  void expect_punct(char c) {
    if (!at_punct(c)) {
      fail(peek(), std::string("expected '") + c + "', found " + describe(peek()));
    }
    next();
  }

  void keyword(const std::string& kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) {
      fail(peek(), "expected '" + kw + "', found " + describe(peek()));
    }
    next();
  }

  // Parses `{ item (sep item)* }`, handing each item to the callback.
  template <class F>
  void block(F&& item) {
    expect_punct('{');
    while (true) {
      skip_separators();
      if (at_punct('}')) {
        next();
        return;
      }
      if (peek().kind == Tok::End) fail(peek(), "unterminated block");
      item();
      if (!at_separator() && !at_punct('}')) {
        fail(peek(), "expected end of item, found " + describe(peek()));
      }
    }
  }

  std::pair<const FinPoset*, std::string> poset_ref() {
    const Token& t = ident("poset name");
    const FinPoset* p = file_.find_poset(t.text);
    if (!p) fail(t, "unknown poset " + t.text);
    return {p, t.text};
  }

  static std::optional<std::size_t> element(const FinPoset& p, const std::string& name) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.label(i) == name) return i;
    }
    return std::nullopt;
  }

  void statement() {
    const Token& kw = ident("a declaration");
    if (kw.text == "poset") {
      poset_decl();
    } else if (kw.text == "signature") {
      signature_decl(kw);
    } else if (kw.text == "coherent") {
      file_.coherent = true;
    } else if (kw.text == "ineq" || kw.text == "eq") {
      axiom_decl(kw.text == "eq");
    } else if (kw.text == "algebra") {
      algebra_decl(kw);
    } else {
      fail(kw, "unknown declaration " + kw.text);
    }
  }

  void poset_decl() {
    const Token& name = ident("poset name");
    if (file_.find_poset(name.text)) fail(name, "duplicate poset " + name.text);
    std::vector<std::string> elems;
    std::vector<std::pair<std::size_t, std::size_t>> le;
    auto lookup = [&](const Token& t) {
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] == t.text) return i;
      }
      fail(t, "unknown element " + t.text + " of poset " + name.text);
    };
    block([&] {
      const Token& item = ident("'elems' or 'le'");
      if (item.text == "elems") {
        while (peek().kind == Tok::Ident) {
          const Token& e = next();
          for (const auto& x : elems) {
            if (x == e.text) fail(e, "duplicate element " + e.text);
          }
          elems.push_back(e.text);
        }
      } else if (item.text == "le") {
        const std::size_t a = lookup(ident("element"));
        const std::size_t b = lookup(ident("element"));
        le.emplace_back(a, b);
      } else {
        fail(item, "expected 'elems' or 'le', found '" + item.text + "'");
      }
    });
    try {
      file_.posets.push_back({name.text, FinPoset::from_generators(elems.size(), le, elems)});
    } catch (const NotAntisymmetric& e) {
      fail(name, "poset " + name.text + ": " + elems[e.first] + " and " + elems[e.second] +
                     " lie below each other");
    }
  }

  void signature_decl(const Token& kw) {
    if (signature_seen_) fail(kw, "duplicate signature block");
    if (!file_.algebras.empty()) fail(kw, "the signature must precede algebra blocks");
    signature_seen_ = true;
    block([&] {
      keyword("op");
      const Token& name = ident("operation name");
      expect_punct(':');
      auto [arity, arity_name] = poset_ref();
      if (sig_->find(name.text)) fail(name, "duplicate operation " + name.text);
      sig_->add(name.text, *arity);
      file_.arity_names.push_back(arity_name);
    });
  }

  Term term(const FinPoset& ctx) {
    const Token& t = ident("term");
    auto var = element(ctx, t.text);
    auto op = sig_->find(t.text);
    if (at_punct('(')) {
      if (!op) fail(t, "unknown operation " + t.text);
      next();
      std::vector<Term> args;
      args.push_back(term(ctx));
      while (at_punct(',')) {
        next();
        args.push_back(term(ctx));
      }
      expect_punct(')');
      const std::size_t want = sig_->op(*op).arity.size();
      if (args.size() != want) {
        fail(t, t.text + " expects " + std::to_string(want) + " arguments, got " +
                    std::to_string(args.size()));
      }
      return Term::app(*op, std::move(args));
    }
    if (var && op) fail(t, t.text + " is both a variable and an operation");
    if (var) return Term::var(*var);
    if (op) {
      if (!sig_->op(*op).arity.empty()) {
        fail(t, t.text + " expects " + std::to_string(sig_->op(*op).arity.size()) + " arguments");
      }
      return Term::app(*op, {});
    }
    fail(t, "unknown identifier " + t.text);
  }

  void axiom_decl(bool equality) {
    const Token& label = ident("label");
    expect_punct(':');
    auto [ctx, ctx_name] = poset_ref();
    if (peek().kind != Tok::Turnstile) fail(peek(), "expected '|-', found " + describe(peek()));
    next();
    Term lhs = term(*ctx);
    if (equality) {
      expect_punct('=');
    } else if (peek().kind == Tok::Leq) {
      next();
    } else {
      fail(peek(), "expected '<=', found " + describe(peek()));
    }
    Term rhs = term(*ctx);
    file_.axioms.push_back({equality, label.text, ctx_name, std::move(lhs), std::move(rhs)});
  }

  void algebra_decl(const Token& kw) {
    const Token& name = ident("algebra name");
    if (file_.find_algebra(name.text)) fail(name, "duplicate algebra " + name.text);
    keyword("on");
    auto [carrier, carrier_name] = poset_ref();
    const ValuationSpaces spaces = valuation_spaces(*sig_, *carrier);
    std::vector<std::vector<std::optional<std::size_t>>> rows(sig_->size());
    for (std::size_t op = 0; op < sig_->size(); ++op) rows[op].assign(spaces[op]->size(), {});
    auto value = [&](const Token& t) {
      auto e = element(*carrier, t.text);
      if (!e) fail(t, "unknown element " + t.text + " of poset " + carrier_name);
      return *e;
    };
    block([&] {
      keyword("op");
      const Token& opname = ident("operation name");
      auto op = sig_->find(opname.text);
      if (!op) fail(opname, "unknown operation " + opname.text);
      const FinPoset& arity = sig_->op(*op).arity;
      expect_punct('[');
      std::vector<std::size_t> val;
      const Token& open = toks_[pos_ - 1];
      while (peek().kind == Tok::Ident) val.push_back(value(next()));
      expect_punct(']');
      if (val.size() != arity.size()) {
        fail(open, opname.text + " takes " + std::to_string(arity.size()) + " arguments, row has " +
                       std::to_string(val.size()));
      }
      expect_punct('=');
      const std::size_t w = value(ident("element"));
      auto idx = spaces[*op]->find(val);
      if (!idx) {
        fail(open, "valuation " + valuation_string(*carrier, val) + " is not monotone for " +
                       opname.text);
      }
      if (rows[*op][*idx]) {
        fail(open, "duplicate row " + opname.text + " " + valuation_string(*carrier, val));
      }
      rows[*op][*idx] = w;
    });
    std::vector<std::vector<std::size_t>> tables(sig_->size());
    for (std::size_t op = 0; op < sig_->size(); ++op) {
      for (std::size_t k = 0; k < rows[op].size(); ++k) {
        if (!rows[op][k]) {
          fail(kw, "algebra " + name.text + " has no row for " + sig_->op(op).name + " " +
                       valuation_string(*carrier, spaces[op]->at(k)));
        }
        tables[op].push_back(*rows[op][k]);
      }
    }
    file_.algebras.push_back(
        {name.text, carrier_name, FiniteAlgebra(sig_, *carrier, spaces, std::move(tables))});
  }
};

std::string poset_line(const NamedPoset& p) {
  std::string s = "poset " + p.name + " {";
  if (!p.poset.empty()) {
    s += " elems";
    for (std::size_t i = 0; i < p.poset.size(); ++i) s += " " + p.poset.label(i);
    for (std::size_t i = 0; i < p.poset.size(); ++i) {
      for (std::size_t j = 0; j < p.poset.size(); ++j) {
        if (p.poset.covers(i, j)) s += " ; le " + p.poset.label(i) + " " + p.poset.label(j);
      }
    }
  }
  return s + " }\n";
}

}  // namespace

const FinPoset* TheoryFile::find_poset(const std::string& name) const {
  for (const auto& p : posets) {
    if (p.name == name) return &p.poset;
  }
  return nullptr;
}

const NamedAlgebra* TheoryFile::find_algebra(const std::string& name) const {
  for (const auto& a : algebras) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

Theory TheoryFile::theory() const {
  Theory th{*signature, {}, coherent};
  for (const auto& ax : axioms) {
    const FinPoset& ctx = *find_poset(ax.context);
    if (ax.equality) {
      for (auto& e : equality(ax.label, ctx, ax.lhs, ax.rhs)) th.inequations.push_back(std::move(e));
    } else {
      th.inequations.push_back({ax.label, ctx, ax.lhs, ax.rhs});
    }
  }
  return th;
}

bool TheoryFile::operator==(const TheoryFile& o) const {
  if (posets.size() != o.posets.size() || axioms.size() != o.axioms.size() ||
      algebras.size() != o.algebras.size()) {
    return false;
  }
  for (std::size_t i = 0; i < posets.size(); ++i) {
    if (posets[i].name != o.posets[i].name || !(posets[i].poset == o.posets[i].poset) ||
        posets[i].poset.labels() != o.posets[i].poset.labels()) {
      return false;
    }
  }
  if (!(*signature == *o.signature) || arity_names != o.arity_names || coherent != o.coherent) {
    return false;
  }
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    const Axiom& a = axioms[i];
    const Axiom& b = o.axioms[i];
    if (a.equality != b.equality || a.label != b.label || a.context != b.context ||
        !(a.lhs == b.lhs) || !(a.rhs == b.rhs)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    const NamedAlgebra& a = algebras[i];
    const NamedAlgebra& b = o.algebras[i];
    if (a.name != b.name || a.carrier != b.carrier || a.algebra.tables() != b.algebra.tables()) {
      return false;
    }
  }
  return true;
}

TheoryFile parse_theory(std::string_view text) { return Parser(text).run(); }

TheoryFile parse_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_theory(buf.str());
}

std::string print_theory(const TheoryFile& f) {
  std::string out;
  for (const auto& p : f.posets) out += poset_line(p);
  const Signature& sig = *f.signature;
  if (sig.size() > 0) {
    out += "\nsignature {\n";
    for (std::size_t op = 0; op < sig.size(); ++op) {
      out += "  op " + sig.op(op).name + " : " + f.arity_names[op] + "\n";
    }
    out += "}\n";
  }
  if (f.coherent) out += "\ncoherent\n";
  if (!f.axioms.empty()) out += "\n";
  for (const auto& ax : f.axioms) {
    const FinPoset& ctx = *f.find_poset(ax.context);
    out += (ax.equality ? "eq " : "ineq ") + ax.label + " : " + ax.context + " |- " +
           to_string(sig, ctx, ax.lhs) + (ax.equality ? " = " : " <= ") +
           to_string(sig, ctx, ax.rhs) + "\n";
  }
  for (const auto& a : f.algebras) {
    out += "\nalgebra " + a.name + " on " + a.carrier + " {\n";
    const FinPoset& c = a.algebra.carrier();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const ValuationSpace& vs = a.algebra.valuations(op);
      for (std::size_t k = 0; k < vs.size(); ++k) {
        out += "  op " + sig.op(op).name + " " + valuation_string(c, vs.at(k)) + " = " +
               c.label(a.algebra.apply_index(op, k)) + "\n";
      }
    }
    out += "}\n";
  }
  return out;
}

}  // namespace ordalg
