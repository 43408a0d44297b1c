#include "superlie/hnn.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "hnn_internal.hpp"
#include "superlie/error.hpp"

namespace superlie {

namespace {

const Coefficients kZero{};

void accumulate(Coefficients& into, const Coefficients& c, const Rational& factor) {
  if (factor == 0) return;
  for (const auto& [v, x] : c) {
    Rational& slot = into[v];
    slot += factor * x;
    if (slot == 0) into.erase(v);
  }
}

Coefficients scaled(const Coefficients& c, const Rational& factor) {
  Coefficients out;
  accumulate(out, c, factor);
  return out;
}

Coefficients difference(const Coefficients& a, const Coefficients& b) {
  Coefficients out = a;
  accumulate(out, b, -1);
  return out;
}

std::string format(const StructureConstants& sc, const Coefficients& c) {
  if (c.empty()) return "0";
  Poly p(Word::empty(sc.basis()), 0);
  for (const auto& [v, x] : c) p.add_term(Word::letter(sc.basis(), v), x);
  return p.to_string();
}

/// Σ_v c_v [x, v]
Coefficients bracket_right(const StructureConstants& sc, Letter x, const Coefficients& c) {
  Coefficients out;
  for (const auto& [v, cv] : c) accumulate(out, sc.bracket(x, v), cv);
  return out;
}

/// Σ_v c_v [v, y]
Coefficients bracket_left(const StructureConstants& sc, const Coefficients& c, Letter y) {
  Coefficients out;
  for (const auto& [v, cv] : c) accumulate(out, sc.bracket(v, y), cv);
  return out;
}

/// Σ_v c_v d(v), only over subalgebra letters.
Coefficients derive(const StructureConstants& sc, const Coefficients& c) {
  Coefficients out;
  for (const auto& [v, cv] : c) {
    if (sc.in_subalgebra(v)) accumulate(out, sc.derivation(v), cv);
  }
  return out;
}

Parity parity_of_sum(Parity a, Parity b) { return a + b; }

Poly letter_poly(const AlphabetPtr& alphabet, Letter l) { return Poly(Word::letter(alphabet, l)); }

Poly combination(const AlphabetPtr& alphabet, const Coefficients& c) {
  Poly out(alphabet);
  for (const auto& [v, x] : c) out.add_term(Word::letter(alphabet, v), x);
  return out;
}

std::string rule_label(char kind, const std::string& a, const std::string& b = {}) {
  std::string out(1, kind);
  out += '[' + a;
  if (!b.empty()) out += ',' + b;
  out += ']';
  return out;
}

/// Weakly increasing sequences over `letters` (ascending) of length ≤ max_len,
/// odd letters at most once, the empty sequence first.
std::vector<std::vector<Letter>> monotone_sequences(const AlphabetPtr& alphabet, const std::vector<Letter>& letters,
                                                    std::size_t max_len) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> current;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    out.push_back(current);
    if (current.size() == max_len) return;
    for (std::size_t i = start; i < letters.size(); ++i) {
      const Letter l = letters[i];
      if (!current.empty() && current.back() == l && is_odd((*alphabet)[l].parity)) continue;
      current.push_back(l);
      grow(i);
      current.pop_back();
    }
  };
  grow(0);
  return out;
}

bool is_monotone(const AlphabetPtr& alphabet, const std::vector<Letter>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i - 1] > xs[i]) return false;
    if (xs[i - 1] == xs[i] && is_odd((*alphabet)[xs[i]].parity)) return false;
  }
  return true;
}

bool sorted_words_equal(std::vector<Word> a, std::vector<Word> b) {
  std::sort(a.begin(), a.end(), DeglexLess{});
  std::sort(b.begin(), b.end(), DeglexLess{});
  return a == b;
}

}  // namespace

// --- StructureConstants ---------------------------------------------------

StructureConstants::StructureConstants(AlphabetPtr basis, std::size_t subalgebra_size, Parity d_parity)
    : basis_(std::move(basis)), subalgebra_size_(subalgebra_size), d_parity_(d_parity) {
  if (!basis_) throw Error("structure constants need a basis");
  if (subalgebra_size_ > basis_->size()) throw Error("subalgebra larger than the algebra");
}

void StructureConstants::check_coefficients(const Coefficients& value) const {
  for (const auto& [v, c] : value) {
    if (v >= dim()) throw Error("coefficient index out of range");
  }
}

void StructureConstants::set_entry(Letter x, Letter y, const Coefficients& value) {
  if (x >= dim() || y >= dim()) throw Error("bracket index out of range");
  check_coefficients(value);
  Coefficients clean = scaled(value, 1);
  if (clean.empty()) {
    alpha_.erase({x, y});
  } else {
    alpha_[{x, y}] = std::move(clean);
  }
}

void StructureConstants::set_bracket(Letter x, Letter y, const Coefficients& value) {
  set_entry(x, y, value);
  if (x != y) set_entry(y, x, scaled(value, -koszul_sign(parity(x), parity(y))));
}

void StructureConstants::set_derivation(Letter a, const Coefficients& value) {
  if (!in_subalgebra(a)) throw Error("derivation defined only on the subalgebra, got '" + name(a) + "'");
  check_coefficients(value);
  Coefficients clean = scaled(value, 1);
  if (clean.empty()) {
    beta_.erase(a);
  } else {
    beta_[a] = std::move(clean);
  }
}

const Coefficients& StructureConstants::bracket(Letter x, Letter y) const {
  auto it = alpha_.find({x, y});
  return it == alpha_.end() ? kZero : it->second;
}

const Coefficients& StructureConstants::derivation(Letter a) const {
  auto it = beta_.find(a);
  return it == beta_.end() ? kZero : it->second;
}

// --- validation -----------------------------------------------------------

ValidationReport validate(const StructureConstants& sc) {
  ValidationReport report;
  const Letter n = static_cast<Letter>(sc.dim());
  auto fail = [&](std::string identity, std::vector<Letter> idx, const Coefficients& residual) {
    std::vector<std::string> names;
    for (Letter l : idx) names.push_back(sc.name(l));
    report.violations.push_back({std::move(identity), std::move(names), format(sc, residual)});
    report.pass = false;
  };

  for (Letter x = 0; x < n; ++x) {
    for (Letter y = 0; y < n; ++y) {
      const Coefficients& xy = sc.bracket(x, y);
      // super anti-commutativity
      Coefficients sym = xy;
      accumulate(sym, sc.bracket(y, x), koszul_sign(sc.parity(x), sc.parity(y)));
      if (!sym.empty()) fail("anti-commutativity", {x, y}, sym);
      for (const auto& [v, c] : xy) {
        if (sc.parity(v) != parity_of_sum(sc.parity(x), sc.parity(y))) fail("bracket-parity", {x, y, v}, {{v, c}});
        if (sc.in_subalgebra(x) && sc.in_subalgebra(y) && !sc.in_subalgebra(v)) {
          fail("subalgebra-closure", {x, y, v}, {{v, c}});
        }
      }
    }
  }
  for (const auto& [a, value] : sc.derivation_table()) {
    for (const auto& [v, c] : value) {
      if (sc.parity(v) != parity_of_sum(sc.parity(a), sc.d_parity())) fail("derivation-parity", {a, v}, {{v, c}});
    }
  }

  // super Jacobi: (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0
  for (Letter x = 0; x < n; ++x) {
    for (Letter y = 0; y < n; ++y) {
      for (Letter z = 0; z < n; ++z) {
        Coefficients j;
        accumulate(j, bracket_right(sc, x, sc.bracket(y, z)), koszul_sign(sc.parity(x), sc.parity(z)));
        accumulate(j, bracket_right(sc, y, sc.bracket(z, x)), koszul_sign(sc.parity(y), sc.parity(x)));
        accumulate(j, bracket_right(sc, z, sc.bracket(x, y)), koszul_sign(sc.parity(z), sc.parity(y)));
        if (!j.empty()) fail("jacobi", {x, y, z}, j);
      }
    }
  }

  // [x,[y,y]] = 2[[x,y],y] and [[x,x],y] = 2[x,[x,y]] for odd x, y
  for (Letter y = 0; y < n; ++y) {
    if (!is_odd(sc.parity(y))) continue;
    for (Letter x = 0; x < n; ++x) {
      Coefficients lhs = bracket_right(sc, x, sc.bracket(y, y));
      Coefficients rhs = scaled(bracket_left(sc, sc.bracket(x, y), y), 2);
      if (auto r = difference(lhs, rhs); !r.empty()) fail("odd-square-right", {x, y}, r);
      Coefficients lhs2 = bracket_left(sc, sc.bracket(y, y), x);
      Coefficients rhs2 = scaled(bracket_right(sc, y, sc.bracket(y, x)), 2);
      if (auto r = difference(lhs2, rhs2); !r.empty()) fail("odd-square-left", {y, x}, r);
    }
  }

  // d([a,b]) = [d(a),b] + (-1)^{|d||a|}[a,d(b)] on the subalgebra
  const Letter k = static_cast<Letter>(sc.subalgebra_size());
  for (Letter a = 0; a < k; ++a) {
    for (Letter b = 0; b < k; ++b) {
      Coefficients lhs = derive(sc, sc.bracket(a, b));
      Coefficients rhs = bracket_left(sc, sc.derivation(a), b);
      accumulate(rhs, bracket_right(sc, a, sc.derivation(b)), koszul_sign(sc.d_parity(), sc.parity(a)));
      if (auto r = difference(lhs, rhs); !r.empty()) fail("derivation", {a, b}, r);
    }
    // d([a,a]) = 2[d(a),a] for odd a
    if (is_odd(sc.parity(a))) {
      Coefficients lhs = derive(sc, sc.bracket(a, a));
      Coefficients rhs = scaled(bracket_left(sc, sc.derivation(a), a), 2);
      if (auto r = difference(lhs, rhs); !r.empty()) fail("derivation-odd-square", {a}, r);
    }
  }
  return report;
}

// --- presentation ---------------------------------------------------------

HnnPresentation::HnnPresentation(StructureConstants sc, std::string t_name) : sc_(std::move(sc)) {
  if (sc_.subalgebra_size() >= sc_.dim()) throw Error("the subalgebra must be proper (dim L/A >= 1)");
  if (sc_.basis()->find(t_name)) throw Error("generator name '" + t_name + "' clashes with a basis symbol");
  std::vector<Alphabet::Entry> entries;
  for (const auto& s : sc_.basis()->symbols()) entries.push_back({s.name, s.parity});
  entries.push_back({std::move(t_name), sc_.d_parity()});
  alphabet_ = Alphabet::make(std::move(entries));
  t_ = static_cast<Letter>(sc_.dim());
}

std::vector<Letter> HnnPresentation::basis_letters() const {
  std::vector<Letter> out(sc_.dim());
  for (Letter i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<Letter> HnnPresentation::subalgebra_letters() const {
  std::vector<Letter> out(sc_.subalgebra_size());
  for (Letter i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

std::vector<Letter> HnnPresentation::complement_letters() const {
  std::vector<Letter> out;
  for (Letter i = static_cast<Letter>(sc_.subalgebra_size()); i < t_; ++i) out.push_back(i);
  return out;
}

RewriteSystem build_relations(const HnnPresentation& p) {
  const auto& sc = p.constants();
  if (auto v = validate(sc); !v.pass) {
    const auto& first = v.violations.front();
    std::string where;
    for (const auto& s : first.indices) where += (where.empty() ? "" : ",") + s;
    throw Error("structure constants fail validation: " + first.identity + " at (" + where + ") with residual " +
                first.residual);
  }
  const auto& T = p.alphabet();
  std::vector<RewriteRule> rules;
  const Letter n = static_cast<Letter>(sc.dim());
  for (Letter x = 0; x < n; ++x) {
    for (Letter y = 0; y <= x; ++y) {
      if (x == y && !is_odd(sc.parity(x))) continue;
      Poly f = superbracket(letter_poly(T, x), letter_poly(T, y)) - combination(T, sc.bracket(x, y));
      rules.emplace_back(f, rule_label('f', sc.name(x), sc.name(y)));
    }
  }
  for (Letter a : p.subalgebra_letters()) {
    Poly g = superbracket(letter_poly(T, p.t()), letter_poly(T, a)) - combination(T, sc.derivation(a));
    rules.emplace_back(g, rule_label('g', sc.name(a)));
  }
  std::stable_sort(rules.begin(), rules.end(), [](const RewriteRule& a, const RewriteRule& b) {
    return DeglexLess{}(a.leading_word(), b.leading_word());
  });
  return RewriteSystem(T, std::move(rules));
}

HnnGsbReport verify_hnn_gsb(const HnnPresentation& p) {
  const auto& sc = p.constants();
  const RewriteSystem S = build_relations(p);
  HnnGsbReport report;
  report.associative = check_gsb(S);
  report.pass = report.associative.pass;

  std::map<std::string, std::size_t> by_label;
  for (std::size_t i = 0; i < S.size(); ++i) by_label[S[i].label()] = i;
  auto f = [&](Letter x, Letter y) -> const RewriteRule& { return S[by_label.at(rule_label('f', sc.name(x), sc.name(y)))]; };
  auto g = [&](Letter a) -> const RewriteRule& { return S[by_label.at(rule_label('g', sc.name(a)))]; };

  const auto& T = p.alphabet();
  auto run = [&](int family, const RewriteRule& first, const RewriteRule& second, std::vector<Letter> w) {
    Word word(T, std::move(w));
    Poly c = lie_composition_len2(first, second, word);
    Poly nf = reduce(c, S).normal_form;
    const bool pass = nf.is_zero();
    report.pass = report.pass && pass;
    report.families.push_back({family, first.label(), second.label(), std::move(word), std::move(c), std::move(nf), pass});
  };

  const Letter n = static_cast<Letter>(sc.dim());
  const Letter k = static_cast<Letter>(sc.subalgebra_size());
  const Letter t = p.t();
  for (Letter x = 0; x < n; ++x)
    for (Letter y = 0; y < x; ++y)
      for (Letter z = 0; z < y; ++z) run(1, f(x, y), f(y, z), {x, y, z});
  for (Letter a = 0; a < k; ++a)
    for (Letter b = 0; b < a; ++b) run(2, g(a), f(a, b), {t, a, b});
  for (Letter y = 0; y < n; ++y) {
    if (!is_odd(sc.parity(y))) continue;
    for (Letter x = y + 1; x < n; ++x) run(3, f(x, y), f(y, y), {x, y, y});
  }
  for (Letter x = 0; x < n; ++x) {
    if (!is_odd(sc.parity(x))) continue;
    for (Letter y = 0; y < x; ++y) run(4, f(x, x), f(x, y), {x, x, y});
  }
  for (Letter a = 0; a < k; ++a) {
    if (is_odd(sc.parity(a))) run(5, g(a), f(a, a), {t, a, a});
  }
  std::stable_sort(report.families.begin(), report.families.end(), [](const FamilyCheck& a, const FamilyCheck& b) {
    if (a.family != b.family) return a.family < b.family;
    return DeglexLess{}(a.word, b.word);
  });
  return report;
}

// --- PBW words ------------------------------------------------------------

Word PbwPattern::word(const HnnPresentation& p) const {
  std::vector<Letter> letters = prefix;
  for (const auto& b : blocks) {
    letters.insert(letters.end(), b.t_power, p.t());
    letters.insert(letters.end(), b.xs.begin(), b.xs.end());
  }
  letters.insert(letters.end(), t_tail, p.t());
  return Word(p.alphabet(), std::move(letters));
}

std::optional<PbwPattern> match_pbw(const HnnPresentation& p, const Word& w) {
  if (!same_alphabet(w.alphabet(), p.alphabet())) throw Error("match_pbw: alphabet mismatch");
  const auto& T = p.alphabet();
  const Letter t = p.t();
  const auto letters = w.letters();
  PbwPattern out;
  std::size_t i = 0;
  while (i < letters.size() && letters[i] != t) out.prefix.push_back(letters[i++]);
  if (!is_monotone(T, out.prefix)) return std::nullopt;
  while (i < letters.size()) {
    std::size_t gamma = 0;
    while (i < letters.size() && letters[i] == t) ++gamma, ++i;
    std::vector<Letter> xs;
    while (i < letters.size() && letters[i] != t) {
      if (!p.is_complement(letters[i])) return std::nullopt;
      xs.push_back(letters[i++]);
    }
    if (xs.empty()) {
      out.t_tail = gamma;
      break;
    }
    if (!is_monotone(T, xs)) return std::nullopt;
    out.blocks.push_back({gamma, std::move(xs)});
  }
  return out;
}

namespace {

std::vector<PbwPattern> pbw_patterns(const HnnPresentation& p, std::size_t max_len) {
  const auto& T = p.alphabet();
  const auto prefixes = monotone_sequences(T, p.basis_letters(), max_len);
  const auto middles = monotone_sequences(T, p.complement_letters(), max_len);
  std::vector<PbwPattern> out;
  PbwPattern current;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    for (std::size_t delta = 0; delta <= remaining; ++delta) {
      current.t_tail = delta;
      out.push_back(current);
    }
    current.t_tail = 0;
    for (std::size_t gamma = 1; gamma < remaining; ++gamma) {
      for (const auto& xs : middles) {
        if (xs.empty() || gamma + xs.size() > remaining) continue;
        current.blocks.push_back({gamma, xs});
        extend(remaining - gamma - xs.size());
        current.blocks.pop_back();
      }
    }
  };
  for (const auto& prefix : prefixes) {
    current = PbwPattern{prefix, {}, 0};
    extend(max_len - prefix.size());
  }
  return out;
}

std::vector<Word> reduced_words(const RewriteSystem& S, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_len; ++n) {
    for (auto& w : words_of_length(S.alphabet(), n)) {
      if (is_reduced_word(w, S)) out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::vector<Word> enumerate_uh_basis(const HnnPresentation& p, std::size_t max_len) {
  std::vector<Word> out;
  for (const auto& pattern : pbw_patterns(p, max_len)) out.push_back(pattern.word(p));
  std::sort(out.begin(), out.end(), DeglexLess{});
  if (!sorted_words_equal(out, reduced_words(build_relations(p), max_len))) {
    throw Error("PBW words differ from the S-reduced words; S is not a Groebner-Shirshov basis");
  }
  return out;
}

std::vector<NcMonomial> free_generators_W(const HnnPresentation& p, std::size_t max_len) {
  std::vector<NcMonomial> out;
  if (max_len == 0) return out;
  for (const auto& xs : monotone_sequences(p.alphabet(), p.complement_letters(), max_len - 1)) {
    out.push_back(right_normed_bracket(p.alphabet(), p.t(), xs));
  }
  std::sort(out.begin(), out.end(),
            [](const NcMonomial& a, const NcMonomial& b) { return DeglexLess{}(forget(a), forget(b)); });
  return out;
}


std::vector<PbwPattern> hnn_pbw_patterns(const HnnPresentation& p, std::size_t max_len) { return pbw_patterns(p, max_len); }

std::vector<std::vector<Letter>> hnn_monotone_sequences(const AlphabetPtr& alphabet, const std::vector<Letter>& letters,
                                                        std::size_t max_len) {
  return monotone_sequences(alphabet, letters, max_len);
}

}  // namespace superlie
