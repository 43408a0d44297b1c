#include "superlie/rewrite.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "superlie/error.hpp"

namespace superlie {

RewriteRule::RewriteRule(const Poly& body, std::string label)
    : body_(body.is_zero() ? throw Error("rewrite rule with zero body") : make_monic(body)),
      leading_(body_.leading().first),
      label_(std::move(label)) {
  if (body_.parity() == PolyParity::Mixed) {
    throw Error("rewrite rule '" + body_.to_string() + "' is not parity-homogeneous");
  }
}

RewriteSystem::RewriteSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  std::set<Word, DeglexLess> leading;
  for (const auto& r : rules_) {
    if (!same_alphabet(alphabet_, r.alphabet())) throw Error("rule over a different alphabet");
    if (!leading.insert(r.leading_word()).second) {
      throw Error("duplicate leading word '" + r.leading_word().to_string() + "'");
    }
  }
}

std::string RewriteSystem::rule_name(std::size_t i) const {
  const auto& label = rules_.at(i).label();
  return label.empty() ? "s" + std::to_string(i) : label;
}

namespace {

bool occurs_at(std::span<const Letter> w, std::span<const Letter> sub, std::size_t pos) {
  return pos + sub.size() <= w.size() && std::equal(sub.begin(), sub.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

struct Match {
  std::size_t rule;
  std::size_t position;
};

std::optional<Match> find_match(const Word& w, const RewriteSystem& system, Strategy strategy) {
  const auto letters = w.letters();
  const std::size_t n = letters.size();
  const std::size_t k = system.size();
  if (strategy == Strategy::Leftmost) {
    for (std::size_t pos = 0; pos <= n; ++pos) {
      for (std::size_t r = 0; r < k; ++r) {
        if (occurs_at(letters, system[r].leading_word().letters(), pos)) return Match{r, pos};
      }
    }
  } else {
    for (std::size_t pos = n + 1; pos-- > 0;) {
      for (std::size_t r = k; r-- > 0;) {
        if (occurs_at(letters, system[r].leading_word().letters(), pos)) return Match{r, pos};
      }
    }
  }
  return std::nullopt;
}

Poly step_element(const ReductionStep& step, const RewriteSystem& system) {
  const auto& rule = system[step.rule];
  const std::size_t len = rule.leading_word().size();
  const Word a = step.word.subword(0, step.position);
  const Word b = step.word.subword(step.position + len, step.word.size() - step.position - len);
  return step.coefficient * sandwich(a, rule.body(), b);
}

}  // namespace

bool is_reduced_word(const Word& w, const RewriteSystem& system) {
  return std::none_of(system.rules().begin(), system.rules().end(),
                      [&w](const RewriteRule& r) { return w.contains(r.leading_word()); });
}

Reduction reduce(const Poly& p, const RewriteSystem& system, Strategy strategy) {
  if (!same_alphabet(p.alphabet(), system.alphabet())) throw Error("reduce: alphabet mismatch");
  Poly current = p;
  ReductionTrace trace{{}, Poly(p.alphabet())};
  while (true) {
    std::optional<ReductionStep> step;
    for (auto it = current.terms().rbegin(); it != current.terms().rend(); ++it) {
      if (auto m = find_match(it->first, system, strategy)) {
        step = ReductionStep{it->first, m->rule, m->position, it->second};
        break;
      }
    }
    if (!step) break;
    current -= step_element(*step, system);
    trace.steps.push_back(std::move(*step));
  }
  trace.result = current;
  return Reduction{std::move(current), std::move(trace)};
}

Poly replay(const Poly& input, const ReductionTrace& trace, const RewriteSystem& system) {
  Poly current = input;
  for (const auto& step : trace.steps) {
    if (current.coefficient(step.word) != step.coefficient) throw Error("trace does not match input");
    current -= step_element(step, system);
  }
  return current;
}

Poly ideal_witness(const ReductionTrace& trace, const RewriteSystem& system) {
  Poly sum(system.alphabet());
  for (const auto& step : trace.steps) sum += step_element(step, system);
  return sum;
}

std::vector<Composition> assoc_compositions(const RewriteRule& p, const RewriteRule& q) {
  if (!same_alphabet(p.alphabet(), q.alphabet())) throw Error("compositions of rules over different alphabets");
  std::vector<Composition> out;
  const Word& pw = p.leading_word();
  const Word& qw = q.leading_word();
  const auto alphabet = pw.alphabet();
  const std::size_t lp = pw.size();
  const std::size_t lq = qw.size();

  // Overlaps: a proper suffix of p̄ of length k equals a proper prefix of q̄.
  for (std::size_t k = 1; k < lp && k < lq; ++k) {
    if (!std::equal(pw.letters().end() - static_cast<std::ptrdiff_t>(k), pw.letters().end(), qw.letters().begin())) {
      continue;
    }
    const Word b = pw.subword(0, lp - k);
    const Word a = qw.subword(k, lq - k);
    const Word w = pw.concat(a);
    out.push_back({CompositionKind::Overlap, w,
                   sandwich(Word::empty(alphabet), p.body(), a) - sandwich(b, q.body(), Word::empty(alphabet))});
  }

  // Inclusions: q̄ occurs inside p̄.
  for (std::size_t pos = 0; lq <= lp && pos + lq <= lp; ++pos) {
    if (!occurs_at(pw.letters(), qw.letters(), pos)) continue;
    if (lq == lp && p.body() == q.body()) continue;  // trivial self-inclusion
    const Word b = pw.subword(0, pos);
    const Word a = pw.subword(pos + lq, lp - pos - lq);
    out.push_back({CompositionKind::Inclusion, pw, p.body() - sandwich(b, q.body(), a)});
  }
  return out;
}

GsbReport check_gsb(const RewriteSystem& system) {
  GsbReport report;
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = 0; j < system.size(); ++j) {
      for (auto& c : assoc_compositions(system[i], system[j])) {
        Reduction r = reduce(c.value, system);
        const bool pass = r.normal_form.is_zero();
        report.pass = report.pass && pass;
        report.checks.push_back(
            {i, j, c.kind, std::move(c.word), std::move(c.value), std::move(r.normal_form), std::move(r.trace), pass});
      }
    }
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const CompositionCheck& x, const CompositionCheck& y) {
    const auto c = deglex_cmp(x.word.letters(), y.word.letters());
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return report;
}

std::vector<Word> enumerate_reduced_super_ls(const RewriteSystem& system, std::size_t max_len) {
  return enumerate_super_ls(system.alphabet(), max_len, [&system](const Word& w) { return is_reduced_word(w, system); });
}

Poly lie_composition_len2(const RewriteRule& p, const RewriteRule& q, const Word& w) {
  const Word& pw = p.leading_word();
  const Word& qw = q.leading_word();
  if (pw.size() != 2 || qw.size() != 2 || pw[1] != qw[0] || w.size() != 3 || w[0] != pw[0] || w[1] != pw[1] ||
      w[2] != qw[1]) {
    throw Error("lie_composition_len2: expected p̄ = αβ, q̄ = βγ, w = αβγ; got p̄ = " + pw.to_string() +
                ", q̄ = " + qw.to_string() + ", w = " + w.to_string());
  }
  const auto& alphabet = pw.alphabet();
  const Poly alpha(Word::letter(alphabet, w[0]));
  const Poly gamma(Word::letter(alphabet, w[2]));
  return superbracket(p.body(), gamma) - superbracket(alpha, q.body());
}

}  // namespace superlie
