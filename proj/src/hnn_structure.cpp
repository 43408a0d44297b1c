#include <algorithm>
#include <functional>
#include <set>

#include "hnn_internal.hpp"
#include "superlie/error.hpp"
#include "superlie/hnn.hpp"
#include "superlie/linalg.hpp"

namespace superlie {

WbarAlphabet::WbarAlphabet(const HnnPresentation& p, std::size_t max_len) : t_alphabet_(p.alphabet()) {
  if (max_len == 0) throw Error("W-bar alphabet needs max_len >= 1");
  for (const auto& xs : hnn_monotone_sequences(p.alphabet(), p.complement_letters(), max_len - 1)) {
    std::vector<Letter> letters{p.t()};
    letters.insert(letters.end(), xs.begin(), xs.end());
    t_words_.emplace_back(p.alphabet(), std::move(letters));
  }
  std::sort(t_words_.begin(), t_words_.end(),
            [](const Word& a, const Word& b) { return lex_cmp(a, b) == std::strong_ordering::less; });
  std::vector<Alphabet::Entry> entries;
  for (std::size_t i = 0; i < t_words_.size(); ++i) {
    entries.push_back({"w" + std::to_string(i), t_words_[i].parity()});
    index_.emplace(t_words_[i], static_cast<Letter>(i));
  }
  alphabet_ = Alphabet::make(std::move(entries));
}

NcMonomial WbarAlphabet::letter_bracket(Letter w) const {
  const Word& u = t_word(w);
  return right_normed_bracket(t_alphabet_, u.front(), u.letters().subspan(1));
}

std::optional<Word> WbarAlphabet::factor(const Word& u) const {
  if (u.empty()) return Word::empty(alphabet_);
  const Letter t = t_words_.front().front();
  if (u.front() != t) return std::nullopt;
  std::vector<Letter> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= u.size(); ++i) {
    if (i < u.size() && u[i] != t) continue;
    auto it = index_.find(u.subword(start, i - start));
    if (it == index_.end()) return std::nullopt;
    out.push_back(it->second);
    start = i;
  }
  return Word(alphabet_, std::move(out));
}

Word WbarAlphabet::flatten(const Word& wbar_word) const {
  std::vector<Letter> out;
  for (Letter w : wbar_word.letters()) {
    const auto letters = t_word(w).letters();
    out.insert(out.end(), letters.begin(), letters.end());
  }
  return Word(t_alphabet_, std::move(out));
}

NcMonomial WbarAlphabet::admissible_bracketing(const Word& wbar_word) const {
  return substitute(standard_bracket(wbar_word), [this](Letter w) { return letter_bracket(w); });
}

std::vector<Word> wbar_words_of_length(const WbarAlphabet& wbar, std::size_t n) {
  std::vector<Word> out;
  std::vector<Letter> current;
  std::function<void(std::size_t)> grow = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.emplace_back(wbar.alphabet(), current);
      return;
    }
    for (Letter w = 0; w < wbar.size(); ++w) {
      const std::size_t len = wbar.t_word(w).size();
      if (len > remaining) continue;
      current.push_back(w);
      grow(remaining - len);
      current.pop_back();
    }
  };
  grow(n);
  return out;
}

NcMonomial hnn_bracketing(const HnnPresentation& p, const WbarAlphabet& wbar, const Word& u) {
  if (u.size() == 1 && u.front() != p.t()) return NcMonomial::leaf(p.alphabet(), u.front());
  auto factored = wbar.factor(u);
  if (!factored) throw Error("'" + u.to_string() + "' is not a product of W-bar letters");
  return wbar.admissible_bracketing(*factored);
}

namespace {

bool is_middle_factor(const PbwPattern& pattern) {
  return pattern.prefix.empty() && !pattern.blocks.empty() && pattern.t_tail == 0;
}

bool same_words(std::vector<Word> a, std::vector<Word> b) {
  std::sort(a.begin(), a.end(), DeglexLess{});
  std::sort(b.begin(), b.end(), DeglexLess{});
  return a == b;
}

}  // namespace

std::vector<NcMonomial> enumerate_h_basis(const HnnPresentation& p, std::size_t max_len) {
  std::vector<NcMonomial> out;
  if (max_len == 0) return out;
  const auto& T = p.alphabet();
  for (Letter x : p.basis_letters()) out.push_back(NcMonomial::leaf(T, x));
  const NcMonomial t = NcMonomial::leaf(T, p.t());
  out.push_back(t);
  if (is_odd(p.t_parity()) && max_len >= 2) out.push_back(NcMonomial::bracket(t, t));

  const WbarAlphabet wbar(p, max_len);
  for (const auto& pattern : hnn_pbw_patterns(p, max_len)) {
    if (!is_middle_factor(pattern)) continue;
    const Word u = pattern.word(p);
    if (is_super_ls(u)) out.push_back(hnn_bracketing(p, wbar, u));
  }
  std::sort(out.begin(), out.end(),
            [](const NcMonomial& a, const NcMonomial& b) { return DeglexLess{}(forget(a), forget(b)); });

  std::vector<Word> words;
  for (const auto& m : out) words.push_back(forget(m));
  if (!same_words(words, enumerate_reduced_super_ls(build_relations(p), max_len))) {
    throw Error("H-basis words differ from the S-reduced super-LS words; S is not a Groebner-Shirshov basis");
  }
  return out;
}

StructureReport verify_structure_theorem(const HnnPresentation& p, std::size_t max_len) {
  StructureReport report;
  if (max_len == 0) return report;
  const RewriteSystem S = build_relations(p);
  const WbarAlphabet wbar(p, max_len);
  const auto patterns = hnn_pbw_patterns(p, max_len);
  const auto h_basis = enumerate_h_basis(p, max_len);

  std::vector<Poly> images;
  std::vector<Word> monomial_words;
  for (Letter x : p.basis_letters()) {
    const NcMonomial leaf = NcMonomial::leaf(p.alphabet(), x);
    images.push_back(reduce(expand(leaf), S).normal_form);
    monomial_words.push_back(forget(leaf));
  }

  for (std::size_t n = 1; n <= max_len; ++n) {
    LengthReport r;
    r.n = n;
    r.h_basis_count = static_cast<std::size_t>(
        std::count_if(h_basis.begin(), h_basis.end(), [n](const NcMonomial& m) { return m.degree() == n; }));

    // (i) block rewriting t^{γ1}X^{β1}...t^δ -> W̄-letters is a bijection onto products of length n
    const auto products = wbar_words_of_length(wbar, n);
    r.wbar_products = products.size();
    std::set<Word, DeglexLess> images_of_uh2;
    bool factor_ok = true;
    for (const auto& pattern : patterns) {
      if (!pattern.prefix.empty()) continue;
      const Word u = pattern.word(p);
      if (u.size() != n) continue;
      ++r.uh2_words;
      auto f = wbar.factor(u);
      if (!f || !(wbar.flatten(*f) == u) || !images_of_uh2.insert(*f).second) factor_ok = false;
    }
    r.bijection_ok = factor_ok && r.uh2_words == r.wbar_products && images_of_uh2.size() == products.size();

    // (ii) and (iii)
    r.ls_transfer_ok = true;
    r.admissible_ok = true;
    for (const auto& u : products) {
      const Word flat = wbar.flatten(u);
      const bool over_wbar = is_super_ls(u);
      ++r.ls_checked;
      if (over_wbar != is_super_ls(flat)) r.ls_transfer_ok = false;
      if (!over_wbar) continue;
      ++r.admissible_checked;
      const NcMonomial m = wbar.admissible_bracketing(u);
      if (!(forget(m) == flat) || !is_admissible(m)) r.admissible_ok = false;
      images.push_back(reduce(expand(m), S).normal_form);
      monomial_words.push_back(flat);
    }

    // (iv) independence of everything built so far, and agreement with the H-basis
    r.rank = rank(images).rank;
    std::vector<Word> basis_words;
    for (const auto& m : h_basis) {
      if (m.degree() <= n) basis_words.push_back(forget(m));
    }
    r.expected_rank = basis_words.size();
    r.rank_ok = r.rank == images.size() && r.rank == r.expected_rank && same_words(monomial_words, basis_words);

    report.pass = report.pass && r.pass();
    report.lengths.push_back(r);
  }
  return report;
}

AdmissibleBasisReport verify_admissible_basis(const HnnPresentation& p, std::size_t max_len) {
  AdmissibleBasisReport report;
  if (max_len == 0) return report;
  const RewriteSystem S = build_relations(p);
  const WbarAlphabet wbar(p, max_len);
  std::vector<std::pair<Word, WordVector>> rows;
  for (const auto& u : enumerate_reduced_super_ls(S, max_len)) {
    ++report.checked;
    try {
      Poly v = reduce(expand(hnn_bracketing(p, wbar, u)), S).normal_form;
      std::pair<Word, WordVector> row{u, std::move(v)};
      if (!is_unitriangular(std::span(&row, 1))) report.failures.push_back(u.to_string());
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      report.failures.push_back(u.to_string() + ": " + e.what());
    }
  }
  report.pass = report.failures.empty() && is_unitriangular(rows);
  return report;
}

}  // namespace superlie
