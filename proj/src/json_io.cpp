#include "lamlab/json_io.hpp"

namespace lamlab {

using nlohmann::json;

json term_to_json(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
      return json{{"var", t->name}};
    case TermKind::App:
      return json{{"app", json::array({term_to_json(t->left), term_to_json(t->right)})}};
    case TermKind::Abs:
      return json{{"abs", json::array({t->name, term_to_json(t->left)})}};
    case TermKind::Sub:
      return json{{"sub", json::array({t->name, term_to_json(t->left), term_to_json(t->right)})}};
  }
  throw LamError("unreachable term kind");
}

Term term_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("term object expected", 0);
  if (j.contains("var")) return var(j.at("var").get<std::string>());
  if (j.contains("app")) {
    const json& a = j.at("app");
    if (!a.is_array() || a.size() != 2) throw ParseError("app expects [fun, arg]", 0);
    return app(term_from_json(a[0]), term_from_json(a[1]));
  }
  if (j.contains("abs")) {
    const json& a = j.at("abs");
    if (!a.is_array() || a.size() != 2) throw ParseError("abs expects [binder, body]", 0);
    return abs(a[0].get<std::string>(), term_from_json(a[1]));
  }
  if (j.contains("sub")) {
    const json& a = j.at("sub");
    if (!a.is_array() || a.size() != 3) throw ParseError("sub expects [binder, body, bound]", 0);
    return closure(term_from_json(a[1]), a[0].get<std::string>(), term_from_json(a[2]));
  }
  throw ParseError("unknown term tag", 0);
}

json type_to_json(const VType& t) {
  switch (t->kind) {
    case TypeKind::Answer:
      return json{{"ans", true}};
    case TypeKind::Base:
      return json{{"base", t->base}};
    case TypeKind::Arrow: {
      json dom = json::array();
      for (const VType& d : t->domain) dom.push_back(type_to_json(d));
      return json{{"arrow", json::array({dom, type_to_json(t->codomain)})}};
    }
  }
  throw LamError("unreachable type kind");
}

VType type_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw ParseError("type object expected", 0);
  if (j.contains("ans")) return answer();
  if (j.contains("base")) return base(j.at("base").get<std::string>());
  if (j.contains("arrow")) {
    const json& a = j.at("arrow");
    if (!a.is_array() || a.size() != 2) throw ParseError("arrow expects [[domain], codomain]", 0);
    MultisetType dom;
    for (const json& d : a[0]) dom.push_back(type_from_json(d));
    return arrow(dom, type_from_json(a[1]));
  }
  throw ParseError("unknown type tag", 0);
}

namespace {

json ctx_to_json(const TypingContext& ctx) {
  json out = json::object();
  for (const auto& [name, ms] : ctx.entries()) {
    json types = json::array();
    for (const VType& t : ms) types.push_back(type_to_json(t));
    out[name] = types;
  }
  return out;
}

TypingContext ctx_from_json(const json& j) {
  TypingContext ctx;
  for (auto it = j.begin(); it != j.end(); ++it) {
    MultisetType ms;
    for (const json& t : it.value()) ms.push_back(type_from_json(t));
    ctx.assign(it.key(), canonical_multiset(ms));
  }
  return ctx;
}

Rule rule_from_string(const std::string& s) {
  if (s == "ax") return Rule::Ax;
  if (s == "val") return Rule::Val;
  if (s == "abs") return Rule::AbsI;
  if (s == "app") return Rule::AppE;
  throw ParseError("unknown rule name: " + s, 0);
}

}  // namespace

json derivation_to_json(const Derivation& d) {
  json premises = json::array();
  for (const Derivation& p : d->premises) premises.push_back(derivation_to_json(p));
  return json{{"rule", to_string(d->rule)},
              {"ctx", ctx_to_json(d->ctx)},
              {"subject", term_to_json(d->subject)},
              {"type", type_to_json(d->type)},
              {"premises", premises}};
}

Derivation derivation_from_json(const json& j) {
  std::vector<Derivation> premises;
  if (j.contains("premises"))
    for (const json& p : j.at("premises")) premises.push_back(derivation_from_json(p));
  return std::make_shared<const DerivationNode>(
      rule_from_string(j.at("rule").get<std::string>()),
      j.contains("ctx") ? ctx_from_json(j.at("ctx")) : TypingContext(),
      term_from_json(j.at("subject")), type_from_json(j.at("type")), std::move(premises));
}

json trace_to_json(const StrategyResult& r) {
  json steps = json::array();
  for (const TraceStep& s : r.trace.steps)
    steps.push_back(json{{"occ", s.occ.display()}, {"after", term_to_json(s.after)}});
  return json{{"initial", term_to_json(r.trace.initial)},
              {"steps", steps},
              {"status", r.status == StrategyStatus::Normalized ? "normalized" : "fuel"}};
}

StrategyResult trace_from_json(const json& j) {
  StrategyResult r;
  r.trace.initial = term_from_json(j.at("initial"));
  for (const json& s : j.at("steps"))
    r.trace.steps.push_back({Occurrence::parse(s.at("occ").get<std::string>()),
                             term_from_json(s.at("after"))});
  r.status = j.at("status") == "fuel" ? StrategyStatus::FuelExhausted
                                      : StrategyStatus::Normalized;
  return r;
}

json need_result_to_json(const NeedResult& r) {
  json steps = json::array();
  for (const NeedTraceStep& s : r.steps)
    steps.push_back(json{{"rule", s.rule}, {"after", term_to_json(s.after)}});
  std::string status;
  switch (r.outcome) {
    case NeedOutcome::Answer:
      status = "answer";
      break;
    case NeedOutcome::Stuck:
      status = "stuck";
      break;
    case NeedOutcome::FuelExhausted:
      status = "fuel";
      break;
  }
  json out{{"initial", term_to_json(r.initial)},
           {"steps", steps},
           {"status", status},
           {"final", term_to_json(r.final_term)}};
  if (r.outcome == NeedOutcome::Stuck) out["stuck_var"] = r.stuck_var;
  return out;
}

}  // namespace lamlab
