#pragma once

// S-reduction in the free associative superalgebra and the Gröbner-Shirshov
// check through associative compositions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superlie/poly.hpp"
#include "superlie/words.hpp"

namespace superlie {

/// A monic, parity-homogeneous polynomial together with its leading word.
class RewriteRule {
 public:
  /// Normalizes `body` to be monic. Throws on zero or mixed-parity input.
  explicit RewriteRule(const Poly& body, std::string label = {});

  const Poly& body() const { return body_; }
  const Word& leading_word() const { return leading_; }
  const std::string& label() const { return label_; }
  const AlphabetPtr& alphabet() const { return body_.alphabet(); }

 private:
  Poly body_;
  Word leading_;
  std::string label_;
};

class RewriteSystem {
 public:
  explicit RewriteSystem(AlphabetPtr alphabet, std::vector<RewriteRule> rules = {});

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  const RewriteRule& operator[](std::size_t i) const { return rules_.at(i); }

  /// Display name: the rule label if set, otherwise "s<i>".
  std::string rule_name(std::size_t i) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<RewriteRule> rules_;
};

/// Which occurrence to rewrite once the deglex-largest reducible word is chosen.
enum class Strategy {
  Leftmost,   ///< leftmost occurrence, first-listed matching rule (default)
  Rightmost,  ///< rightmost occurrence, last-listed matching rule
};

struct ReductionStep {
  Word word;             ///< the word a·s̄·b that was rewritten
  std::size_t rule;      ///< index into the system
  std::size_t position;  ///< |a|
  Rational coefficient;  ///< coefficient of `word` before the step
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Poly result;
};

struct Reduction {
  Poly normal_form;
  ReductionTrace trace;
};

bool is_reduced_word(const Word& w, const RewriteSystem& system);

Reduction reduce(const Poly& p, const RewriteSystem& system, Strategy strategy = Strategy::Leftmost);

/// Re-applies the recorded steps to `input`; yields trace.result for a faithful trace.
Poly replay(const Poly& input, const ReductionTrace& trace, const RewriteSystem& system);

/// Σ c·a·s·b over the steps: the ideal element with input − output = witness.
Poly ideal_witness(const ReductionTrace& trace, const RewriteSystem& system);

enum class CompositionKind { Overlap, Inclusion };

struct Composition {
  CompositionKind kind;
  Word word;
  Poly value;
};

/// All overlap (p̄·a = b·q̄, 0 < |b| < |p̄|, a non-empty) and inclusion
/// (p̄ = b·q̄·a) compositions of p with q.
std::vector<Composition> assoc_compositions(const RewriteRule& p, const RewriteRule& q);

struct CompositionCheck {
  std::size_t first;
  std::size_t second;
  CompositionKind kind;
  Word word;
  Poly composition;
  Poly normal_form;
  ReductionTrace trace;
  bool pass;
};

struct GsbReport {
  bool pass = true;
  std::vector<CompositionCheck> checks;  ///< ordered by composition word (deglex), then pair
};

/// Reduces every pairwise composition (self-pairs included) by the system.
GsbReport check_gsb(const RewriteSystem& system);

/// Super-LS words of length ≤ max_len containing no leading word of the system.
std::vector<Word> enumerate_reduced_super_ls(const RewriteSystem& system, std::size_t max_len);

/// [p, γ] − [α, q] for p̄ = αβ, q̄ = βγ and w = αβγ.
Poly lie_composition_len2(const RewriteRule& p, const RewriteRule& q, const Word& w);

}  // namespace superlie
