#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "superlie/poly.hpp"
#include "superlie/words.hpp"

namespace superlie {

/// Non-associative monomial: an immutable binary tree with symbols at the leaves.
class NcMonomial {
 public:
  static NcMonomial leaf(AlphabetPtr alphabet, Letter l);
  static NcMonomial bracket(const NcMonomial& left, const NcMonomial& right);

  /// "[u,v]" nesting with symbol names at the leaves, e.g. "[[t,x],x]".
  static NcMonomial parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  bool is_leaf() const { return !node_->left; }
  Letter letter() const;
  NcMonomial left() const;
  NcMonomial right() const;
  std::size_t degree() const { return node_->degree; }
  Parity parity() const { return node_->parity; }

  std::string to_string() const;

  friend bool operator==(const NcMonomial& a, const NcMonomial& b);

 private:
  struct Node {
    Letter letter = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t degree = 1;
    Parity parity = Parity::Even;
  };

  NcMonomial(AlphabetPtr alphabet, std::shared_ptr<const Node> node)
      : alphabet_(std::move(alphabet)), node_(std::move(node)) {}

  AlphabetPtr alphabet_;
  std::shared_ptr<const Node> node_;
};

/// Leaf sequence of the tree (the forgetful map to associative words).
Word forget(const NcMonomial& m);

bool is_ls_monomial(const NcMonomial& m);
bool is_super_ls_monomial(const NcMonomial& m);

/// The unique super-LS monomial over a super-LS word: Shirshov standard
/// factorization (longest proper LS suffix) for LS words, (u,u) for u odd LS.
NcMonomial standard_bracket(const Word& w);

/// 2 when w = uu with u odd LS, 1 for LS words.
Rational standard_leading_coefficient(const Word& w);

/// Evaluates the tree in the free associative superalgebra.
Poly expand(const NcMonomial& m);

/// Leading word of the expansion is forget(m) with the standard leading coefficient.
bool is_admissible(const NcMonomial& m);

/// [...[[t,x1],x2],...,xs] for weakly increasing xs below t, odd letters at most once.
NcMonomial right_normed_bracket(const AlphabetPtr& alphabet, Letter t, std::span<const Letter> xs);

/// Replaces every leaf of `m` by the monomial `image(letter)`.
NcMonomial substitute(const NcMonomial& m, const std::function<NcMonomial(Letter)>& image);

}  // namespace superlie
