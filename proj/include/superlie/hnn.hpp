#pragma once

// HNN extensions H = <L, t | [t,a] = d(a), a in A> of a finite-dimensional
// Lie superalgebra L given by structure constants.
//
// The basis of L is ordered b_1 < ... < b_k < x_1 < ... < x_m with the first
// k symbols spanning the subalgebra A; the extra generator t is appended as
// the largest letter and carries the parity of d.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superlie/bracketing.hpp"
#include "superlie/poly.hpp"
#include "superlie/rewrite.hpp"
#include "superlie/words.hpp"

namespace superlie {

/// Finitely supported combination of basis letters.
using Coefficients = std::map<Letter, Rational>;

class StructureConstants {
 public:
  StructureConstants(AlphabetPtr basis, std::size_t subalgebra_size, Parity d_parity);

  /// Sets [x,y] = value and [y,x] = -(-1)^{|x||y|} value.
  void set_bracket(Letter x, Letter y, const Coefficients& value);
  /// Sets the single ordered entry [x,y] only.
  void set_entry(Letter x, Letter y, const Coefficients& value);
  void set_derivation(Letter a, const Coefficients& value);

  const Coefficients& bracket(Letter x, Letter y) const;
  const Coefficients& derivation(Letter a) const;

  const AlphabetPtr& basis() const { return basis_; }
  std::size_t dim() const { return basis_->size(); }
  std::size_t subalgebra_size() const { return subalgebra_size_; }
  bool in_subalgebra(Letter x) const { return x < subalgebra_size_; }
  Parity parity(Letter x) const { return (*basis_)[x].parity; }
  Parity d_parity() const { return d_parity_; }
  const std::string& name(Letter x) const { return (*basis_)[x].name; }

  const std::map<std::pair<Letter, Letter>, Coefficients>& bracket_table() const { return alpha_; }
  const std::map<Letter, Coefficients>& derivation_table() const { return beta_; }

 private:
  void check_coefficients(const Coefficients& value) const;

  AlphabetPtr basis_;
  std::size_t subalgebra_size_;
  Parity d_parity_;
  std::map<std::pair<Letter, Letter>, Coefficients> alpha_;
  std::map<Letter, Coefficients> beta_;
};

struct Violation {
  std::string identity;              ///< e.g. "jacobi", "derivation", "subalgebra-closure"
  std::vector<std::string> indices;  ///< basis names involved
  std::string residual;              ///< nonzero left-minus-right side
};

struct ValidationReport {
  bool pass = true;
  std::vector<Violation> violations;
};

/// Checks the table exactly: anti-commutativity, parity coherence, subalgebra
/// closure, super Jacobi on all ordered triples, the odd-square identities,
/// and the superderivation law on all subalgebra pairs.
ValidationReport validate(const StructureConstants& sc);

class HnnPresentation {
 public:
  /// Rejects A = L and a generator name clash with `t_name`.
  explicit HnnPresentation(StructureConstants sc, std::string t_name = "t");

  const StructureConstants& constants() const { return sc_; }
  /// T = basis of L followed by t.
  const AlphabetPtr& alphabet() const { return alphabet_; }
  Letter t() const { return t_; }
  Parity t_parity() const { return sc_.d_parity(); }

  std::vector<Letter> basis_letters() const;
  std::vector<Letter> subalgebra_letters() const;
  std::vector<Letter> complement_letters() const;
  bool is_complement(Letter x) const { return x >= sc_.subalgebra_size() && x < t_; }

 private:
  StructureConstants sc_;
  AlphabetPtr alphabet_;
  Letter t_;
};

/// The relations f_xy (x > y), f_xx (x odd) and g_a (a in the subalgebra
/// basis), each stored monic. Throws if the structure constants fail validation.
RewriteSystem build_relations(const HnnPresentation& p);

struct FamilyCheck {
  int family;  ///< 1..5 as listed in the composition table
  std::string first;
  std::string second;
  Word word;
  Poly composition;
  Poly normal_form;
  bool pass;
};

struct HnnGsbReport {
  bool pass = true;
  GsbReport associative;
  std::vector<FamilyCheck> families;  ///< ordered by family, then word
};

/// Associative composition check on S together with the Lie compositions of
/// the five length-two families, each reduced by S.
HnnGsbReport verify_hnn_gsb(const HnnPresentation& p);

/// A^{α0} X^{β0} (t^{γ1} X^{β1} ... t^{γs} X^{βs}) t^δ with γi, |βi| ≥ 1.
struct PbwPattern {
  struct Block {
    std::size_t t_power;
    std::vector<Letter> xs;  ///< complement letters, weakly increasing
  };
  std::vector<Letter> prefix;  ///< L-basis letters, weakly increasing
  std::vector<Block> blocks;
  std::size_t t_tail = 0;

  Word word(const HnnPresentation& p) const;
};

/// Decomposes `w` into the PBW pattern, if it has that shape.
std::optional<PbwPattern> match_pbw(const HnnPresentation& p, const Word& w);

/// Pattern words of length ≤ max_len (the empty word included), deglex order.
/// Cross-checks the result against the S-reduced words of the same lengths.
std::vector<Word> enumerate_uh_basis(const HnnPresentation& p, std::size_t max_len);

/// L-basis leaves, t and [t,t] (t odd), and the admissible bracketings of the
/// super-LS middle-factor words; deglex by underlying word. Cross-checks the
/// underlying words against enumerate_reduced_super_ls.
std::vector<NcMonomial> enumerate_h_basis(const HnnPresentation& p, std::size_t max_len);

/// [t x_{i1} ... x_{is}] over complement letters, weakly increasing, odd letters at most once.
std::vector<NcMonomial> free_generators_W(const HnnPresentation& p, std::size_t max_len);

/// The words t·X^β (β over the complement, |β| ≤ max_len − 1) as letters of a
/// new alphabet ordered by the lex order of T.
class WbarAlphabet {
 public:
  WbarAlphabet(const HnnPresentation& p, std::size_t max_len);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return t_words_.size(); }
  const Word& t_word(Letter w) const { return t_words_.at(w); }
  /// Standard (right-normed) bracketing of a letter.
  NcMonomial letter_bracket(Letter w) const;

  /// Splits a T-word before each t; nullopt unless every piece is a letter.
  std::optional<Word> factor(const Word& u) const;
  Word flatten(const Word& wbar_word) const;

  /// Standard W̄-bracketing of a super-LS W̄-word with each letter replaced by
  /// its right-normed T-bracketing.
  NcMonomial admissible_bracketing(const Word& wbar_word) const;

 private:
  AlphabetPtr t_alphabet_;
  AlphabetPtr alphabet_;
  std::vector<Word> t_words_;
  std::map<Word, Letter, DeglexLess> index_;
};

/// W̄-words whose T-length is exactly n.
std::vector<Word> wbar_words_of_length(const WbarAlphabet& wbar, std::size_t n);

/// Admissible bracketing used for the basis of H: a leaf for L-basis letters,
/// the substituted W̄-bracketing for words starting with t.
NcMonomial hnn_bracketing(const HnnPresentation& p, const WbarAlphabet& wbar, const Word& u);

struct LengthReport {
  std::size_t n = 0;
  std::size_t h_basis_count = 0;  ///< basis monomials of H of length exactly n
  // (i) products of W̄-letters vs words of shape t^{γ1}X^{β1}...t^δ
  std::size_t wbar_products = 0;
  std::size_t uh2_words = 0;
  bool bijection_ok = false;
  // (ii) super-LS over T iff super-LS over W̄
  std::size_t ls_checked = 0;
  bool ls_transfer_ok = false;
  // (iii) substituted bracketings are admissible
  std::size_t admissible_checked = 0;
  bool admissible_ok = false;
  // (iv) reduced expansions of all monomials of length ≤ n are independent
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  bool rank_ok = false;

  bool pass() const { return bijection_ok && ls_transfer_ok && admissible_ok && rank_ok; }
};

struct StructureReport {
  bool pass = true;
  std::vector<LengthReport> lengths;
};

StructureReport verify_structure_theorem(const HnnPresentation& p, std::size_t max_len);

struct AdmissibleBasisReport {
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  ///< words whose reduced expansion is not unitriangular
};

/// For every S-reduced super-LS word u of length ≤ max_len, the reduced
/// expansion of hnn_bracketing(u) has leading word u with the standard
/// coefficient.
AdmissibleBasisReport verify_admissible_basis(const HnnPresentation& p, std::size_t max_len);

}  // namespace superlie
