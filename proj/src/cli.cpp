#include "nalc/cli.hpp"

#include "nalc/oracle.hpp"
#include "nalc/parser.hpp"
#include "nalc/reasoner.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace nalc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string kb, query, queries, assertion, sub, super, grid, expr, oracle_grid;
  bool trace = false, oracle = false, json = false, model = false;
  int domain = 0;
};

class Usage : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string pq(const Degree& d) { return std::to_string(d.numerator()) + "/" + std::to_string(d.denominator()); }

json bound_json(const DegreePair& b) { return {{"n", pq(b.n)}, {"m", pq(b.m)}}; }

std::vector<Degree> parse_grid(const std::string& text) {
  std::vector<Degree> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(' '), last = item.find_last_not_of(' ');
    if (first == std::string::npos) continue;
    auto d = Degree::parse(item.substr(first, last - first + 1));
    if (!d || !d->in_unit_interval()) throw Usage("bad grid value '" + item + "'");
    out.push_back(*d);
  }
  if (out.empty()) throw Usage("empty grid");
  return out;
}

// non-empty, non-comment lines with their 1-based numbers
std::vector<std::pair<int, std::string>> query_lines(const std::string& path) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(read_file(path));
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    std::string body = line.substr(0, hash);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!body.empty() && body.back() == '\r') body.pop_back();
    out.emplace_back(n, body);
  }
  return out;
}

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  KnowledgeBase load() {
    try {
      return parse_kb(read_file(o_.kb));
    } catch (const ParseFailure& e) {
      for (const auto& pe : e.errors()) err_ << o_.kb << ":" << format_error(pe) << "\n";
      throw Usage(std::to_string(e.errors().size()) + " error(s) in " + o_.kb);
    }
  }

  // ---- entails -----------------------------------------------------------
  json entails_one(const Reasoner& r, const std::string& text, std::string& human) {
    auto q = parse_query(text);
    json j{{"query", format_neutrosophic(q)}};
    std::ostringstream h;
    bool answer;
    if (o_.trace) {
      auto proof = r.explain(q);
      answer = proof.answer;
      if (answer) proof.refutations.push_back(r.explain_combined(q));
      std::string trace = render_proof(proof);
      h << (answer ? "true" : "false") << "\n" << trace;
      j["answer"] = answer;
      j["trace"] = trace;
    } else {
      answer = r.entails(q);
      h << (answer ? "true" : "false") << "\n";
      j["answer"] = answer;
    }
    if (o_.oracle) {
      try {
        auto p = default_oracle_parameters(r.knowledge_base(), q);
        if (o_.domain > 0) p.domain_size = o_.domain;
        if (!o_.oracle_grid.empty()) p.grid = DegreeGrid::of(parse_grid(o_.oracle_grid)).with_midpoints();
        bool oracle = oracle_entails(r.knowledge_base(), q, p.domain_size, p.grid);
        j["oracle_answer"] = oracle;
        j["oracle_agreement"] = oracle == answer;
        h << "oracle: " << (oracle ? "true" : "false") << (oracle == answer ? " (agrees)" : " (DISAGREES)")
          << " [domain " << p.domain_size << ", grid of " << p.grid.values.size() << " degrees]\n";
      } catch (const ResourceLimit& e) {
        j["oracle_agreement"] = nullptr;
        h << "oracle: gave up after " << e.count() << " search nodes\n";
      }
    }
    human = h.str();
    return j;
  }

  std::string render_proof(const EntailmentProof& proof) {
    std::ostringstream os;
    int k = 0;
    const std::size_t combined = proof.answer ? proof.refutations.size() - 1 : proof.refutations.size();
    for (const auto& ref : proof.refutations) {
      const auto& res = ref.result;
      if (static_cast<std::size_t>(k) == combined) os << "combined ";
      os << "refutation " << ++k << ": " << format_constraint(ref.hypothesis) << " — "
         << (res.satisfiable() ? "satisfiable" : "unsatisfiable") << " (" << res.branch_count << " branch"
         << (res.branch_count == 1 ? "" : "es") << ")\n";
      if (res.satisfiable()) {
        os << format_trace(*res.witness);
        continue;
      }
      int b = 0;
      for (const auto& closed : res.proof) {
        if (res.proof.size() > 1 || res.closed_branches > 1) os << "branch " << ++b << ":\n";
        os << format_trace(closed.set, &closed.clash);
      }
      if (res.closed_branches > res.proof.size())
        os << "… " << res.closed_branches - res.proof.size() << " more closed branches\n";
    }
    return os.str();
  }

  int entails() {
    Reasoner r(load());
    if (o_.queries.empty()) {
      std::string human;
      json j = entails_one(r, o_.query, human);
      emit(j, human);
      return j["answer"].get<bool>() ? kTrue : kFalse;
    }
    return batch([&](const std::string& line, std::string& human) {
      json j = entails_one(r, line, human);
      return std::make_pair(j, j["answer"].get<bool>());
    });
  }

  // ---- glb / lub -----------------------------------------------------------
  int btvb(bool is_glb) {
    Reasoner r(load());
    auto one = [&](const std::string& text, std::string& human) {
      auto a = parse_assertion(text);
      BtvbResult b = is_glb ? r.glb(a) : r.lub(a);
      json j{{"query", (is_glb ? "glb " : "lub ") + format_assertion(a)},
             {"answer", true},
             {"bound", bound_json(b.bound)},
             {"candidates_examined", b.candidates_examined}};
      human = b.bound.n.fraction() + " " + b.bound.m.fraction() + " (" + b.bound.n.decimal() + " " +
              b.bound.m.decimal() + ")\n";
      return std::make_pair(j, true);
    };
    if (o_.queries.empty()) {
      std::string human;
      auto [j, ok] = one(o_.assertion, human);
      emit(j, human);
      return kTrue;
    }
    return batch(one);
  }

  // ---- others --------------------------------------------------------------
  int check() {
    Reasoner r(load());
    auto res = r.check();
    json j{{"query", "check"}, {"answer", res.satisfiable()}};
    std::ostringstream h;
    h << (res.satisfiable() ? "satisfiable" : "unsatisfiable") << "\n";
    if (o_.trace) {
      std::ostringstream t;
      if (res.satisfiable()) t << format_trace(*res.witness);
      for (const auto& closed : res.proof) t << format_trace(closed.set, &closed.clash);
      h << t.str();
      j["trace"] = t.str();
    }
    if (o_.model && res.satisfiable()) {
      VariableAssignment vars;
      auto I = extract_model(*res.witness, &vars);
      h << format_interpretation(I);
      j["model"] = format_interpretation(I);
    }
    if (o_.oracle) {
      NeutrosophicAssertion dummy{r.knowledge_base().assertions.empty()
                                      ? Assertion::of_concept(Concept::top(), Object::individual("a"))
                                      : r.knowledge_base().assertions.front().assertion,
                                  NeutrosophicAssertion::Sign::GeqLeq,
                                  {Degree::zero(), Degree::one()}};
      auto p = default_oracle_parameters(r.knowledge_base(), dummy);
      if (o_.domain > 0) p.domain_size = o_.domain;
      try {
        bool sat = oracle_satisfiable(r.knowledge_base(), p.domain_size, p.grid);
        j["oracle_agreement"] = sat == res.satisfiable();
        h << "oracle: " << (sat ? "satisfiable" : "unsatisfiable")
          << (sat == res.satisfiable() ? " (agrees)" : " (DISAGREES)") << "\n";
      } catch (const ResourceLimit& e) {
        j["oracle_agreement"] = nullptr;
        h << "oracle: gave up after " << e.count() << " search nodes\n";
      }
    }
    emit(j, h.str());
    return res.satisfiable() ? kTrue : kFalse;
  }

  int subsumes() {
    KnowledgeBase kb = load();
    Concept c = parse_concept(o_.sub), d = parse_concept(o_.super);
    bool answer = nalc::subsumes(kb, c, d);
    json j{{"query", c.text() + " <= " + d.text()}, {"answer", answer}};
    std::string human = std::string(answer ? "true" : "false") + "\n";
    if (!o_.grid.empty()) {
      bool dense = nalc::subsumes(kb, c, d, parse_grid(o_.grid));
      j["grid_answer"] = dense;
      if (dense != answer) human += "warning: the supplied grid disagrees with the default grid\n";
      answer = dense;
      j["answer"] = answer;
    }
    emit(j, human);
    return answer ? kTrue : kFalse;
  }

  int nnf_cmd() {
    Concept c = nnf(parse_concept(o_.expr));
    emit(json{{"query", o_.expr}, {"answer", c.text()}}, c.text() + "\n");
    return kTrue;
  }

  int expand_cmd() {
    KnowledgeBase e = expand(load());
    std::string text = format_kb(e);
    emit(json{{"query", "expand"}, {"answer", text}}, text);
    return kTrue;
  }

 private:
  void emit(const json& j, const std::string& human) {
    if (o_.json) out_ << j.dump(2) << "\n";
    else out_ << human;
  }

  template <class F>
  int batch(F&& one) {
    json all = json::array();
    bool all_true = true, usage = false, resource = false;
    for (const auto& [line_no, text] : query_lines(o_.queries)) {
      std::string human;
      json j;
      try {
        auto [res, ok] = one(text, human);
        j = res;
        all_true = all_true && ok;
        human = "line " + std::to_string(line_no) + ": " + human;
      } catch (const ParseFailure& e) {
        usage = true;
        j = {{"query", text}, {"error", format_error(e.errors().front())}};
        human = "line " + std::to_string(line_no) + ": error: " + format_error(e.errors().front()) + "\n";
      } catch (const TableauExhausted& e) {
        resource = true;
        j = {{"query", text}, {"error", e.what()}};
        human = "line " + std::to_string(line_no) + ": resource limit: " + e.what() + "\n";
      } catch (const std::invalid_argument& e) {
        usage = true;
        j = {{"query", text}, {"error", e.what()}};
        human = "line " + std::to_string(line_no) + ": error: " + e.what() + "\n";
      }
      j["line"] = line_no;
      all.push_back(j);
      if (!o_.json) out_ << human;
    }
    if (o_.json) out_ << all.dump(2) << "\n";
    if (usage) return kUsage;
    if (resource) return kResource;
    return all_true ? kTrue : kFalse;
  }

  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

Result run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Reasoner for neutrosophic ALC knowledge bases", "nalc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto kb_arg = [&](CLI::App* sub) { sub->add_option("kb", o.kb, "Knowledge base file")->required(); };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };

  auto* check = app.add_subcommand("check", "Satisfiability of a knowledge base");
  kb_arg(check);
  check->add_flag("--trace", o.trace, "Print the completion or the closed branches");
  check->add_flag("--model", o.model, "Print a model built from the completion");
  check->add_flag("--oracle", o.oracle, "Cross-check with bounded model search");
  check->add_option("--domain", o.domain, "Oracle domain size");
  json_flag(check);

  auto* ent = app.add_subcommand("entails", "Entailment of a bounded assertion");
  kb_arg(ent);
  auto* q = ent->add_option("--query", o.query, "e.g. 'assert (some R A)(a) >= 0.6 <= 0.5'");
  auto* qs = ent->add_option("--queries", o.queries, "File with one query per line");
  q->excludes(qs);
  ent->add_flag("--trace", o.trace, "Print the tableau derivation");
  ent->add_flag("--oracle", o.oracle, "Cross-check with bounded model search");
  ent->add_option("--domain", o.domain, "Oracle domain size (default: objects + quantifier depth)");
  ent->add_option("--oracle-grid", o.oracle_grid, "Oracle degrees, comma separated (midpoints are added)");
  json_flag(ent);

  auto* sub = app.add_subcommand("subsumes", "Subsumption w.r.t. the terminology of a knowledge base");
  kb_arg(sub);
  sub->add_option("--sub", o.sub, "Subsumed concept")->required();
  sub->add_option("--super", o.super, "Subsuming concept")->required();
  sub->add_option("--grid", o.grid, "Extra degree grid, comma separated");
  json_flag(sub);

  CLI::App* btvb[2];
  for (int i = 0; i < 2; ++i) {
    btvb[i] = app.add_subcommand(i == 0 ? "glb" : "lub", i == 0 ? "Greatest lower bound" : "Least upper bound");
    kb_arg(btvb[i]);
    auto* a = btvb[i]->add_option("--assertion", o.assertion, "e.g. 'C(a)' or 'R(a,b)'");
    auto* f = btvb[i]->add_option("--queries", o.queries, "File with one assertion per line");
    a->excludes(f);
    json_flag(btvb[i]);
  }

  auto* nnf_sub = app.add_subcommand("nnf", "Negation normal form of a concept");
  nnf_sub->add_option("concept", o.expr, "Concept in S-expression syntax")->required();
  json_flag(nnf_sub);

  auto* exp = app.add_subcommand("expand", "Print the purely assertional expansion");
  kb_arg(exp);
  json_flag(exp);

  std::ostringstream out, err;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return {rc == 0 ? kTrue : kUsage, out.str(), err.str()};
  }

  Session s(o, out, err);
  int code = kUsage;
  try {
    if (*ent && o.query.empty() && o.queries.empty()) throw Usage("entails needs --query or --queries");
    for (auto* b : btvb)
      if (*b && o.assertion.empty() && o.queries.empty()) throw Usage("needs --assertion or --queries");
    if (*check) code = s.check();
    else if (*ent) code = s.entails();
    else if (*sub) code = s.subsumes();
    else if (*btvb[0]) code = s.btvb(true);
    else if (*btvb[1]) code = s.btvb(false);
    else if (*nnf_sub) code = s.nnf_cmd();
    else if (*exp) code = s.expand_cmd();
  } catch (const ParseFailure& e) {
    for (const auto& pe : e.errors()) err << format_error(pe) << "\n";
    code = kUsage;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const InvalidKnowledgeBase& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  } catch (const TableauExhausted& e) {
    err << "resource limit: " << e.what() << " (" << e.branches() << " branches, " << e.steps() << " steps)\n";
    code = kResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  }
  return {code, out.str(), err.str()};
}

}  // namespace nalc::cli
