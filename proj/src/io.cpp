#include "superlie/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "superlie/error.hpp"

namespace superlie {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw Error(where + ": " + what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

Parity parity_value(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    const auto p = v.get<long long>();
    if (p == 0) return Parity::Even;
    if (p == 1) return Parity::Odd;
  }
  fail(where, "expected parity 0 or 1");
}

std::size_t size_value(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

Rational coefficient_value(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected a rational \"p/q\" or an integer");
}

Letter basis_name(const StructureConstants& sc, const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a generator name");
  auto r = sc.basis()->find(v.get<std::string>());
  if (!r) fail(where, "unknown generator '" + v.get<std::string>() + "'");
  return *r;
}

Coefficients combination_value(const StructureConstants& sc, const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of {basis, coeff}");
  Coefficients out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const Letter b = basis_name(sc, field(v[i], "basis", at), at + ".basis");
    out[b] += coefficient_value(field(v[i], "coeff", at), at + ".coeff");
  }
  return out;
}

Json combination_json(const StructureConstants& sc, const Coefficients& c) {
  Json out = Json::array();
  for (const auto& [v, x] : c) out.push_back({{"basis", sc.name(v)}, {"coeff", to_string(x)}});
  return out;
}

AlphabetPtr alphabet_value(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return Alphabet::parse(v.get<std::string>());
    if (!v.is_array()) fail(where, "expected an alphabet string or array");
    std::vector<Alphabet::Entry> entries;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      Parity parity = Parity::Even;
      if (v[i].contains("parity")) parity = parity_value(v[i]["parity"], at + ".parity");
      entries.push_back({string_field(v[i], "name", at), parity});
    }
    return Alphabet::make(std::move(entries));
  } catch (const Error& e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    fail(where, msg);
  }
}

Json alphabet_json(const Alphabet& alphabet) {
  Json out = Json::array();
  for (const auto& s : alphabet.symbols()) out.push_back({{"name", s.name}, {"parity", is_odd(s.parity) ? 1 : 0}});
  return out;
}

const char* kind_name(CompositionKind k) { return k == CompositionKind::Overlap ? "overlap" : "inclusion"; }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(path + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

bool is_presentation_json(const Json& j) { return j.is_object() && j.contains("generators"); }

HnnPresentation presentation_from_json(const Json& j) {
  const AlphabetPtr basis = alphabet_value(field(j, "generators", "presentation"), "generators");
  const std::size_t k = size_value(field(j, "subalgebra_size", "presentation"), "subalgebra_size");
  if (k >= basis->size()) fail("subalgebra_size", "must be smaller than the number of generators");
  const Parity d_parity = parity_value(field(j, "d_parity", "presentation"), "d_parity");
  StructureConstants sc(basis, k, d_parity);

  std::map<std::pair<Letter, Letter>, std::size_t> listed;
  if (j.contains("brackets")) {
    const Json& brackets = j["brackets"];
    if (!brackets.is_array()) fail("brackets", "expected an array");
    for (std::size_t i = 0; i < brackets.size(); ++i) {
      const std::string at = "brackets[" + std::to_string(i) + "]";
      const Letter x = basis_name(sc, field(brackets[i], "left", at), at + ".left");
      const Letter y = basis_name(sc, field(brackets[i], "right", at), at + ".right");
      const Coefficients value = combination_value(sc, field(brackets[i], "value", at), at + ".value");
      if (listed.count({x, y})) fail(at, "duplicate entry for this pair");
      if (auto it = listed.find({y, x}); it != listed.end()) {
        // Both orders given: they must agree with super anti-commutativity.
        Coefficients expected;
        for (const auto& [v, c] : sc.bracket(y, x)) expected[v] = -koszul_sign(sc.parity(x), sc.parity(y)) * c;
        Coefficients clean;
        for (const auto& [v, c] : value) {
          if (c != 0) clean[v] = c;
        }
        if (clean != expected) fail(at, "inconsistent with brackets[" + std::to_string(it->second) + "]");
        listed[{x, y}] = i;
        continue;
      }
      listed[{x, y}] = i;
      sc.set_bracket(x, y, value);
    }
  }
  if (j.contains("derivation")) {
    const Json& derivation = j["derivation"];
    if (!derivation.is_array()) fail("derivation", "expected an array");
    std::set<Letter> seen;
    for (std::size_t i = 0; i < derivation.size(); ++i) {
      const std::string at = "derivation[" + std::to_string(i) + "]";
      const Letter a = basis_name(sc, field(derivation[i], "arg", at), at + ".arg");
      if (!sc.in_subalgebra(a)) fail(at + ".arg", "'" + sc.name(a) + "' is not in the subalgebra");
      if (!seen.insert(a).second) fail(at, "duplicate entry");
      sc.set_derivation(a, combination_value(sc, field(derivation[i], "value", at), at + ".value"));
    }
  }
  std::string t_name = "t";
  if (j.contains("t")) t_name = string_field(j, "t", "presentation");
  try {
    return HnnPresentation(std::move(sc), t_name);
  } catch (const Error& e) {
    fail("presentation", e.what());
  }
}

Json to_json(const HnnPresentation& p) {
  const auto& sc = p.constants();
  Json out;
  out["generators"] = alphabet_json(*sc.basis());
  out["subalgebra_size"] = sc.subalgebra_size();
  out["d_parity"] = is_odd(sc.d_parity()) ? 1 : 0;
  Json brackets = Json::array();
  for (const auto& [pair, value] : sc.bracket_table()) {
    if (pair.first < pair.second) continue;  // the other order follows by anti-commutativity
    brackets.push_back({{"left", sc.name(pair.first)}, {"right", sc.name(pair.second)}, {"value", combination_json(sc, value)}});
  }
  out["brackets"] = brackets;
  Json derivation = Json::array();
  for (const auto& [a, value] : sc.derivation_table()) {
    derivation.push_back({{"arg", sc.name(a)}, {"value", combination_json(sc, value)}});
  }
  out["derivation"] = derivation;
  out["t"] = (*p.alphabet())[p.t()].name;
  return out;
}

RewriteSystem rules_from_json(const Json& j) {
  const AlphabetPtr alphabet = alphabet_value(field(j, "alphabet", "rules file"), "alphabet");
  const Json& rules = field(j, "rules", "rules file");
  if (!rules.is_array()) fail("rules", "expected an array");
  std::vector<RewriteRule> out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const std::string at = "rules[" + std::to_string(i) + "]";
    std::string body;
    std::string label;
    if (rules[i].is_string()) {
      body = rules[i].get<std::string>();
    } else {
      body = string_field(rules[i], "body", at);
      if (rules[i].contains("label")) label = string_field(rules[i], "label", at);
    }
    try {
      out.emplace_back(Poly::parse(alphabet, body), label);
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }
  try {
    return RewriteSystem(alphabet, std::move(out));
  } catch (const Error& e) {
    fail("rules", e.what());
  }
}

Json to_json(const RewriteSystem& system) {
  Json rules = Json::array();
  for (std::size_t i = 0; i < system.size(); ++i) {
    rules.push_back({{"label", system.rule_name(i)},
                     {"leading_word", system[i].leading_word().to_string()},
                     {"body", system[i].body().to_string()}});
  }
  return {{"alphabet", system.alphabet()->to_string()}, {"rules", rules}};
}

Json to_json(const ReductionTrace& trace, const RewriteSystem& system) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"word", s.word.to_string()},
                     {"rule", system.rule_name(s.rule)},
                     {"position", s.position},
                     {"coefficient", to_string(s.coefficient)}});
  }
  return {{"steps", steps}, {"result", trace.result.to_string()}};
}

Json to_json(const GsbReport& report, const RewriteSystem& system) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"pair", {system.rule_name(c.first), system.rule_name(c.second)}},
                      {"kind", kind_name(c.kind)},
                      {"word", c.word.to_string()},
                      {"composition", c.composition.to_string()},
                      {"normal_form", c.normal_form.to_string()},
                      {"pass", c.pass},
                      {"trace", to_json(c.trace, system)}});
  }
  return {{"pass", report.pass}, {"compositions", checks}};
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"identity", v.identity}, {"indices", v.indices}, {"residual", v.residual}});
  }
  return {{"pass", report.pass}, {"violations", violations}};
}

Json to_json(const HnnGsbReport& report, const RewriteSystem& system) {
  Json families = Json::array();
  for (const auto& f : report.families) {
    families.push_back({{"family", f.family},
                        {"pair", {f.first, f.second}},
                        {"word", f.word.to_string()},
                        {"composition", f.composition.to_string()},
                        {"normal_form", f.normal_form.to_string()},
                        {"pass", f.pass}});
  }
  return {{"pass", report.pass}, {"associative", to_json(report.associative, system)}, {"lie_families", families}};
}

Json to_json(const StructureReport& report) {
  Json lengths = Json::array();
  for (const auto& r : report.lengths) {
    lengths.push_back({{"n", r.n},
                       {"h_basis_count", r.h_basis_count},
                       {"bijection", {{"wbar_products", r.wbar_products}, {"uh2_words", r.uh2_words}, {"pass", r.bijection_ok}}},
                       {"ls_transfer", {{"checked", r.ls_checked}, {"pass", r.ls_transfer_ok}}},
                       {"admissible", {{"checked", r.admissible_checked}, {"pass", r.admissible_ok}}},
                       {"rank", {{"rank", r.rank}, {"expected", r.expected_rank}, {"pass", r.rank_ok}}},
                       {"pass", r.pass()}});
  }
  return {{"pass", report.pass}, {"lengths", lengths}};
}

Json to_json(const AdmissibleBasisReport& report) {
  return {{"pass", report.pass}, {"checked", report.checked}, {"failures", report.failures}};
}

}  // namespace superlie
