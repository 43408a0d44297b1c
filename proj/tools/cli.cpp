#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "superlie/bracketing.hpp"
#include "superlie/error.hpp"
#include "superlie/hnn.hpp"
#include "superlie/io.hpp"
#include "superlie/rewrite.hpp"

namespace superlie::cli {

namespace {

struct Options {
  std::string alphabet;
  std::string input;
  std::size_t max_len = 4;
  std::string format = "text";
  std::string strategy = "leftmost";
  std::vector<std::string> rules;
  std::string positional;
};

bool json_output(const Options& o) { return o.format == "json"; }

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::optional<Json> input_file(const Options& o) {
  if (o.input.empty()) return std::nullopt;
  return read_json_file(o.input);
}

void require_max_len(const Options& o) {
  if (o.max_len == 0) throw Error("--max-len must be at least 1");
}

/// Alphabet from --input (presentation or rule file), else from --alphabet.
AlphabetPtr alphabet_of(const Options& o) {
  if (auto j = input_file(o)) {
    if (is_presentation_json(*j)) return presentation_from_json(*j).alphabet();
    return rules_from_json(*j).alphabet();
  }
  if (o.alphabet.empty()) throw Error("an alphabet is required (--alphabet or --input)");
  return Alphabet::parse(o.alphabet);
}

RewriteSystem system_of(const Options& o) {
  if (auto j = input_file(o)) {
    if (is_presentation_json(*j)) return build_relations(presentation_from_json(*j));
    return rules_from_json(*j);
  }
  if (o.alphabet.empty()) throw Error("a rule set is required (--input, or --alphabet with --rule)");
  const AlphabetPtr alphabet = Alphabet::parse(o.alphabet);
  std::vector<RewriteRule> rules;
  for (const auto& r : o.rules) rules.emplace_back(Poly::parse(alphabet, r));
  return RewriteSystem(alphabet, std::move(rules));
}

HnnPresentation presentation_of(const Options& o) {
  auto j = input_file(o);
  if (!j) throw Error("--input with a presentation file is required");
  if (!is_presentation_json(*j)) throw Error(o.input + ": not a presentation file (no \"generators\")");
  return presentation_from_json(*j);
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

int cmd_ls_words(const Options& o, std::ostream& out) {
  require_max_len(o);
  const AlphabetPtr alphabet = alphabet_of(o);
  const auto words = enumerate_super_ls(alphabet, o.max_len);
  std::vector<std::size_t> counts(o.max_len, 0);
  for (const auto& w : words) ++counts[w.size() - 1];
  if (json_output(o)) {
    Json j;
    j["alphabet"] = alphabet->to_string();
    j["max_len"] = o.max_len;
    j["counts"] = counts;
    Json list = Json::array();
    for (const auto& w : words) list.push_back(w.to_string());
    j["words"] = list;
    print_json(out, j);
    return 0;
  }
  for (std::size_t n = 1; n <= o.max_len; ++n) {
    std::vector<std::string> row;
    for (const auto& w : words) {
      if (w.size() == n) row.push_back(w.to_string());
    }
    out << "length " << n << " (" << counts[n - 1] << "): " << join(row) << '\n';
  }
  return 0;
}

int cmd_bracket(const Options& o, std::ostream& out) {
  const Word w = Word::parse(alphabet_of(o), o.positional);
  const NcMonomial m = standard_bracket(w);
  const Poly e = expand(m);
  const auto [lw, lc] = e.leading();
  if (json_output(o)) {
    Json j;
    j["word"] = w.to_string();
    j["bracket"] = m.to_string();
    j["expansion"] = e.to_string();
    j["leading_word"] = lw.to_string();
    j["leading_coefficient"] = to_string(lc);
    print_json(out, j);
    return 0;
  }
  out << m.to_string() << '\n';
  out << "expansion: " << e.to_string() << '\n';
  out << "leading term: " << to_string(lc) << '*' << lw.to_string() << '\n';
  return 0;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const NcMonomial m = NcMonomial::parse(alphabet_of(o), o.positional);
  const Poly e = expand(m);
  const bool super_ls = is_super_ls_monomial(m);
  if (json_output(o)) {
    Json j;
    j["bracket"] = m.to_string();
    j["word"] = forget(m).to_string();
    j["expansion"] = e.to_string();
    j["super_ls"] = super_ls;
    j["admissible"] = !e.is_zero() && is_admissible(m);
    print_json(out, j);
    return 0;
  }
  out << e.to_string() << '\n';
  out << "super-LS monomial: " << (super_ls ? "yes" : "no") << '\n';
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const RewriteSystem system = system_of(o);
  const Poly input = Poly::parse(system.alphabet(), o.positional);
  const Strategy strategy = o.strategy == "rightmost" ? Strategy::Rightmost : Strategy::Leftmost;
  const Reduction r = reduce(input, system, strategy);
  if (json_output(o)) {
    Json j;
    j["input"] = input.to_string();
    j["strategy"] = o.strategy;
    j["normal_form"] = r.normal_form.to_string();
    j["trace"] = to_json(r.trace, system);
    print_json(out, j);
    return 0;
  }
  out << "normal form: " << r.normal_form.to_string() << '\n';
  out << "steps: " << r.trace.steps.size() << '\n';
  for (const auto& s : r.trace.steps) {
    out << "  " << s.word.to_string() << " by " << system.rule_name(s.rule) << " at " << s.position
        << " (coefficient " << to_string(s.coefficient) << ")\n";
  }
  return 0;
}

void print_gsb_text(const GsbReport& report, const RewriteSystem& system, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    if (!c.pass) ++failed;
    out << "  " << verdict(c.pass) << ' ' << (c.kind == CompositionKind::Overlap ? "overlap" : "inclusion") << ' '
        << c.word.to_string() << " (" << system.rule_name(c.first) << ", " << system.rule_name(c.second)
        << ") -> " << c.normal_form.to_string() << '\n';
  }
  out << "compositions: " << report.checks.size() << ", failed: " << failed << '\n';
}

int cmd_gsb_check(const Options& o, std::ostream& out) {
  const RewriteSystem system = system_of(o);
  const GsbReport report = check_gsb(system);
  if (json_output(o)) {
    print_json(out, to_json(report, system));
  } else {
    print_gsb_text(report, system, out);
    out << "Groebner-Shirshov basis: " << verdict(report.pass) << '\n';
  }
  return report.pass ? 0 : 1;
}

int cmd_hnn_verify(const Options& o, std::ostream& out) {
  require_max_len(o);
  const HnnPresentation p = presentation_of(o);
  const ValidationReport validation = validate(p.constants());
  if (!validation.pass) {
    if (json_output(o)) {
      Json j;
      j["pass"] = false;
      j["validate"] = to_json(validation);
      print_json(out, j);
    } else {
      out << "validate: FAIL\n";
      for (const auto& v : validation.violations) {
        out << "  " << v.identity << " (" << join(v.indices) << "): " << v.residual << '\n';
      }
    }
    return 1;
  }
  const RewriteSystem S = build_relations(p);
  const HnnGsbReport gsb = verify_hnn_gsb(p);
  const StructureReport structure = verify_structure_theorem(p, o.max_len);
  const bool pass = gsb.pass && structure.pass;

  std::vector<std::size_t> counts;
  for (const auto& r : structure.lengths) counts.push_back(r.h_basis_count);

  if (json_output(o)) {
    Json j;
    j["pass"] = pass;
    j["validate"] = to_json(validation);
    j["relations"] = to_json(S);
    j["gsb"] = to_json(gsb, S);
    j["structure"] = to_json(structure);
    j["h_basis_counts"] = counts;
    print_json(out, j);
    return pass ? 0 : 1;
  }
  out << "validate: PASS\n";
  out << "relations:\n";
  for (std::size_t i = 0; i < S.size(); ++i) out << "  " << S.rule_name(i) << ": " << S[i].body().to_string() << '\n';
  out << "associative compositions:\n";
  print_gsb_text(gsb.associative, S, out);
  out << "Lie compositions:\n";
  for (const auto& f : gsb.families) {
    out << "  " << verdict(f.pass) << " family " << f.family << ' ' << f.word.to_string() << " (" << f.first << ", "
        << f.second << ") -> " << f.normal_form.to_string() << '\n';
  }
  out << "Groebner-Shirshov basis: " << verdict(gsb.pass) << '\n';
  out << "structure theorem up to length " << o.max_len << ":\n";
  out << "  n  basis  W-products  t-words  bijection  LS-transfer  admissible  rank\n";
  for (const auto& r : structure.lengths) {
    out << "  " << r.n << "  " << r.h_basis_count << "  " << r.wbar_products << "  " << r.uh2_words << "  "
        << verdict(r.bijection_ok) << "  " << verdict(r.ls_transfer_ok) << " (" << r.ls_checked << ")  "
        << verdict(r.admissible_ok) << " (" << r.admissible_checked << ")  " << r.rank << '/' << r.expected_rank
        << ' ' << verdict(r.rank_ok) << '\n';
  }
  std::vector<std::string> count_text;
  for (auto c : counts) count_text.push_back(std::to_string(c));
  out << "H-basis counts: " << join(count_text, ",") << '\n';
  out << "overall: " << verdict(pass) << '\n';
  return pass ? 0 : 1;
}

int cmd_hnn_basis(const Options& o, std::ostream& out) {
  require_max_len(o);
  const HnnPresentation p = presentation_of(o);
  const auto h_basis = enumerate_h_basis(p, o.max_len);
  const auto uh_basis = enumerate_uh_basis(p, o.max_len);
  const auto generators = free_generators_W(p, o.max_len);
  if (json_output(o)) {
    Json j;
    Json h = Json::array(), uh = Json::array(), w = Json::array();
    for (const auto& m : h_basis) h.push_back(m.to_string());
    for (const auto& u : uh_basis) uh.push_back(u.to_string());
    for (const auto& m : generators) w.push_back(m.to_string());
    j["max_len"] = o.max_len;
    j["h_basis"] = h;
    j["uh_basis"] = uh;
    j["free_generators"] = w;
    print_json(out, j);
    return 0;
  }
  out << "basis of H (" << h_basis.size() << "):\n";
  for (const auto& m : h_basis) out << "  " << m.to_string() << '\n';
  out << "basis of U(H) (" << uh_basis.size() << "):\n";
  for (const auto& u : uh_basis) out << "  " << u.to_string() << '\n';
  out << "free generators of W (" << generators.size() << "):\n";
  for (const auto& m : generators) out << "  " << m.to_string() << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie superalgebra words, Groebner-Shirshov rewriting and HNN extensions", "superlie"};
  app.require_subcommand(1);
  Options o;

  auto shared = [&o](CLI::App* sub, bool needs_len) {
    sub->add_option("--alphabet", o.alphabet, "comma-separated name[:odd] tokens in increasing order");
    sub->add_option("--input", o.input, "presentation or rule file (JSON); overrides --alphabet");
    if (needs_len) sub->add_option("--max-len", o.max_len, "maximal word length")->capture_default_str();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* ls = app.add_subcommand("ls-words", "enumerate super-LS words");
  shared(ls, true);
  auto* br = app.add_subcommand("bracket", "standard bracketing of a super-LS word");
  br->add_option("word", o.positional)->required();
  shared(br, false);
  auto* ex = app.add_subcommand("expand", "expand a bracket such as [[t,x],x]");
  ex->add_option("bracket", o.positional)->required();
  shared(ex, false);
  auto* rd = app.add_subcommand("reduce", "normal form and trace of a polynomial");
  rd->add_option("poly", o.positional)->required();
  rd->add_option("--rule", o.rules, "relation, repeatable (with --alphabet)");
  rd->add_option("--strategy", o.strategy)->check(CLI::IsMember({"leftmost", "rightmost"}))->capture_default_str();
  shared(rd, false);
  auto* gc = app.add_subcommand("gsb-check", "check all compositions of a rule set");
  gc->add_option("--rule", o.rules, "relation, repeatable (with --alphabet)");
  shared(gc, false);
  auto* hv = app.add_subcommand("hnn-verify", "validate a presentation and verify the structure theorem");
  shared(hv, true);
  auto* hb = app.add_subcommand("hnn-basis", "bases of H, U(H) and the free generators of W");
  shared(hb, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (ls->parsed()) return cmd_ls_words(o, out);
    if (br->parsed()) return cmd_bracket(o, out);
    if (ex->parsed()) return cmd_expand(o, out);
    if (rd->parsed()) return cmd_reduce(o, out);
    if (gc->parsed()) return cmd_gsb_check(o, out);
    if (hv->parsed()) return cmd_hnn_verify(o, out);
    if (hb->parsed()) return cmd_hnn_basis(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace superlie::cli
