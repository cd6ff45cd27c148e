#include "ordalg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "ordalg/assoc_variety.hpp"
#include "ordalg/dsl.hpp"
#include "ordalg/free_chain.hpp"
#include "ordalg/lawvere.hpp"

namespace ordalg {

namespace {

using nlohmann::ordered_json;

struct InputError : Error {
  using Error::Error;
};

struct Verdict {
  std::string subject;
  bool pass = true;
  std::optional<std::string> counterexample;
};

struct Report {
  std::string command;
  ordered_json params = ordered_json::object();
  std::string preamble;
  std::vector<Verdict> verdicts;
};

KleisliTriple monad_arg(const std::string& name) {
  auto t = monad_by_name(name);
  if (!t) throw InputError("unknown monad " + name + " (expected conv, down or bdown)");
  return *t;
}

std::string failure_text(const Inequation& e, const FiniteAlgebra& a, const SatisfactionFailure& f) {
  std::string s;
  for (std::size_t i = 0; i < f.valuation.size(); ++i) {
    if (i) s += ' ';
    s += e.context.label(i) + "=" + a.carrier().label(f.valuation[i]);
  }
  s = "valuation [" + s + "]: " + to_string(f.kind);
  if (f.lhs) s += " lhs=" + a.carrier().label(*f.lhs);
  if (f.rhs) s += " rhs=" + a.carrier().label(*f.rhs);
  return s;
}

std::string coherence_text(const FiniteAlgebra& a, const CoherenceWitness& w) {
  return a.signature().op(w.op).name + " " + valuation_string(a.carrier(), w.smaller) + " <= " +
         valuation_string(a.carrier(), w.larger) + " but the values are not ordered";
}

void add_law_report(Report& r, const LawReport& rep) {
  for (const auto& l : rep.laws) {
    r.verdicts.push_back({l.law + " (" + std::to_string(l.cases) + " cases)", l.passed, l.violation});
  }
}

Report check(const std::string& path, const std::string& name) {
  Report r{"check", {{"theory", path}, {"algebra", name}}, {}, {}};
  const TheoryFile file = parse_theory_file(path);
  const NamedAlgebra* alg = file.find_algebra(name);
  if (!alg) throw InputError("no algebra named " + name + " in " + path);
  const Theory th = file.theory();
  std::vector<std::string> contexts;
  for (const auto& ax : file.axioms) contexts.insert(contexts.end(), ax.equality ? 2 : 1, ax.context);
  const TheoryReport rep = satisfies_theory(alg->algebra, th);
  for (const auto& v : rep.verdicts) {
    const Inequation& e = th.inequations[v.index];
    Verdict out{v.label + " : " + to_string(th.signature, e, contexts[v.index]), v.result.holds, {}};
    if (v.result.counterexample) out.counterexample = failure_text(e, alg->algebra, *v.result.counterexample);
    r.verdicts.push_back(std::move(out));
  }
  if (rep.coherence) {
    Verdict out{"coherent", rep.coherence->coherent, {}};
    if (rep.coherence->witness) out.counterexample = coherence_text(alg->algebra, *rep.coherence->witness);
    r.verdicts.push_back(std::move(out));
  }
  return r;
}

Report free_cmd(const std::string& path, const std::string& on, std::size_t depth, bool coherent,
                const std::string& dot) {
  Report r{"free", {{"theory", path}, {"on", on}, {"depth", depth}, {"coherent", coherent}}, {}, {}};
  const TheoryFile file = parse_theory_file(path);
  const FinPoset* x = file.find_poset(on);
  if (!x) throw InputError("no poset named " + on + " in " + path);
  const FreeChain chain = free_chain(file.signature, *x, depth, coherent || file.coherent);
  std::ostringstream table;
  table << "level size relations\n";
  for (std::size_t k = 0; k < chain.levels.size(); ++k) {
    const FinPoset& p = chain.levels[k].poset;
    table << k << " " << p.size() << " " << p.relation_count() << "\n";
    r.verdicts.push_back({"level " + std::to_string(k) + " has " + std::to_string(p.size()) +
                              " elements",
                          true, std::nullopt});
  }
  for (std::size_t k = 0; k < chain.embeddings.size(); ++k) {
    r.verdicts.push_back({"embedding " + std::to_string(k) + " -> " + std::to_string(k + 1),
                          is_embedding(chain.embeddings[k]), std::nullopt});
  }
  r.preamble = table.str();
  if (!dot.empty()) {
    std::ofstream f(dot);
    if (!f) throw InputError("cannot write " + dot);
    f << hasse_dot(chain.levels.back().poset, "W" + std::to_string(depth));
  }
  return r;
}

Report monad_laws(const std::string& monad, std::size_t k) {
  Report r{"monad-laws", {{"monad", monad}, {"max_size", k}}, {}, {}};
  const KleisliTriple t = monad_arg(monad);
  add_law_report(r, check_kleisli_laws(t, k));
  add_law_report(r, check_enriched(t, k));
  return r;
}

Report assoc_variety(const std::string& monad, std::size_t ctx, std::size_t arg,
                     std::size_t sizes, std::size_t model_size) {
  Report r{"assoc-variety",
           {{"monad", monad},
            {"context_size", ctx},
            {"arg_size", arg},
            {"check_sizes", sizes},
            {"model_size", model_size}},
           {},
           {}};
  if (arg > ctx) throw InputError("--arg-size must not exceed --context-size");
  const AssociatedVariety v({monad_arg(monad), ctx, arg});
  std::vector<FinPoset> xs;
  for (const auto& c : iso_classes_up_to(sizes)) xs.push_back(c.representative());
  std::ostringstream pre;
  pre << "symbols " << v.signature()->size() << "\n"
      << "order inequations " << v.inequations().order.size() << "\n"
      << "kleisli equalities " << v.inequations().kleisli_equalities() << "\n";
  r.preamble = pre.str();

  const MonVarReport mv = verify_monvar(v, xs);
  const Theory th = v.theory();
  for (const auto& e : mv.entries) {
    Verdict out{"TX satisfies the theory, X=" + canonicalize(e.poset).code(), e.report.passed(), {}};
    for (const auto& vd : e.report.verdicts) {
      if (vd.result.holds) continue;
      out.counterexample = vd.label + " at " +
                           valuation_string(v.monad().object(e.poset)->carrier,
                                            vd.result.counterexample->valuation);
      break;
    }
    r.verdicts.push_back(std::move(out));
  }

  std::size_t cases = 0;
  Verdict fx{"", true, {}};
  for (const auto& e : mv.entries) {
    if (!e.report.passed()) continue;
    const FiniteAlgebra a = algebra_on_TX(v, e.poset);
    for (const ContextId& c : v.generated().contexts) {
      for (const MonotoneMap& f : enumerate_monotone_maps(c.representative(), a.carrier())) {
        ++cases;
        const FreeExtension ext = free_extension(v, a, f, false);
        if (!ext.ok() && fx.pass) {
          fx.pass = false;
          fx.counterexample = "X=" + canonicalize(e.poset).code() + " Gamma=" + c.code() +
                              " f=" + valuation_string(a.carrier(), f.image()) + ": " +
                              std::to_string(ext.matching_homomorphisms) + " extensions";
        }
      }
    }
  }
  fx.subject = "unique homomorphic extension (" + std::to_string(cases) + " cases)";
  r.verdicts.push_back(std::move(fx));

  const CoherenceReport coh = check_associated_coherent(v, xs, model_size);
  for (const auto& [x, cc] : coh.tx) {
    Verdict out{"TX coherent, X=" + canonicalize(x).code(), cc.coherent, {}};
    if (cc.witness) out.counterexample = coherence_text(algebra_on_TX(v, x), *cc.witness);
    r.verdicts.push_back(std::move(out));
  }
  Verdict models{"models on at most " + std::to_string(model_size) + " elements are coherent (" +
                     std::to_string(coh.models_checked) + " models)",
                 coh.incoherent_models == 0, {}};
  if (coh.first_incoherent) {
    models.counterexample = coherence_text(*coh.first_incoherent,
                                           *is_coherent(*coh.first_incoherent).witness);
  }
  r.verdicts.push_back(std::move(models));
  return r;
}

Report lawvere(const std::string& monad, std::size_t k, bool sizes) {
  Report r{"lawvere", {{"monad", monad}, {"max_size", k}}, {}, {}};
  const FiniteTheoryCat cat = build_theory(monad_arg(monad), k);
  if (sizes) r.preamble = hom_size_table(cat);
  add_law_report(r, check_theory_laws(cat));
  return r;
}

void emit(const Report& r, bool json, std::ostream& out) {
  if (json) {
    ordered_json j;
    j["command"] = r.command;
    j["params"] = r.params;
    j["verdicts"] = ordered_json::array();
    for (const auto& v : r.verdicts) {
      ordered_json e{{"subject", v.subject}, {"pass", v.pass}};
      if (v.counterexample) e["counterexample"] = *v.counterexample;
      j["verdicts"].push_back(std::move(e));
    }
    out << j.dump(2) << "\n";
    return;
  }
  out << r.preamble;
  for (const auto& v : r.verdicts) {
    out << (v.pass ? "PASS " : "FAIL ") << v.subject;
    if (v.counterexample) out << "\n     " << *v.counterexample;
    out << "\n";
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite ordered algebra toolkit"};
  app.require_subcommand(1);
  bool json = false;
  std::string theory, algebra, on, dot, poset, monad;
  std::size_t depth = 1, max_size = 2, ctx = 2, arg = 2, sizes = 2, model_size = 2;
  bool coherent = false, table = false;

  auto* c_check = app.add_subcommand("check", "Check an algebra against the theory in its file");
  c_check->add_option("--theory", theory, "Theory file")->required();
  c_check->add_option("--algebra", algebra, "Algebra name")->required();
  c_check->add_flag("--json", json, "JSON report");

  auto* c_free = app.add_subcommand("free", "Levels of the free-algebra chain");
  c_free->add_option("--theory", theory, "Theory file")->required();
  c_free->add_option("--on", on, "Generating poset")->required();
  c_free->add_option("--depth", depth, "Number of steps")->required();
  c_free->add_flag("--coherent", coherent, "Order applications pointwise");
  c_free->add_option("--dot", dot, "Write the top level as a Hasse diagram");
  c_free->add_flag("--json", json, "JSON report");

  auto* c_laws = app.add_subcommand("monad-laws", "Kleisli laws and local monotonicity");
  c_laws->add_option("--monad", monad, "conv, down or bdown")->required();
  c_laws->add_option("--max-size", max_size, "Largest poset swept")->required();
  c_laws->add_flag("--json", json, "JSON report");

  auto* c_var = app.add_subcommand("assoc-variety", "The variety associated with a monad");
  c_var->add_option("--monad", monad, "conv, down or bdown")->required();
  c_var->add_option("--context-size", ctx, "Largest operation arity");
  c_var->add_option("--arg-size", arg, "Largest argument context in Kleisli equations");
  c_var->add_option("--check-sizes", sizes, "Largest X for which TX is checked");
  c_var->add_option("--model-size", model_size, "Largest carrier of enumerated models");
  c_var->add_flag("--json", json, "JSON report");

  auto* c_law = app.add_subcommand("lawvere", "Laws of the finite Lawvere theory");
  c_law->add_option("--monad", monad, "conv, down or bdown")->required();
  c_law->add_option("--max-size", max_size, "Largest object")->required();
  c_law->add_flag("--sizes", table, "Print hom-poset sizes");
  c_law->add_flag("--json", json, "JSON report");

  auto* c_dot = app.add_subcommand("export-dot", "Hasse diagram of a declared poset");
  c_dot->add_option("--theory", theory, "Theory file")->required();
  c_dot->add_option("--poset", poset, "Poset name")->required();

  if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "error: unknown subcommand " << args.front() << "\n";
    return 2;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Report r;
    if (c_check->parsed()) {
      r = check(theory, algebra);
    } else if (c_free->parsed()) {
      r = free_cmd(theory, on, depth, coherent, dot);
    } else if (c_laws->parsed()) {
      r = monad_laws(monad, max_size);
    } else if (c_var->parsed()) {
      r = assoc_variety(monad, ctx, arg, sizes, model_size);
    } else if (c_law->parsed()) {
      r = lawvere(monad, max_size, table);
    } else {
      const TheoryFile file = parse_theory_file(theory);
      const FinPoset* p = file.find_poset(poset);
      if (!p) throw InputError("no poset named " + poset + " in " + theory);
      out << hasse_dot(*p, poset);
      return 0;
    }
    emit(r, json, out);
    return std::all_of(r.verdicts.begin(), r.verdicts.end(), [](const Verdict& v) { return v.pass; })
               ? 0
               : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ordalg
