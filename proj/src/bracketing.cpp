#include "superlie/bracketing.hpp"

#include <cctype>
#include <vector>

#include "superlie/error.hpp"

namespace superlie {

NcMonomial NcMonomial::leaf(AlphabetPtr alphabet, Letter l) {
  if (!alphabet || l >= alphabet->size()) throw Error("leaf letter out of range");
  auto node = std::make_shared<Node>();
  node->letter = l;
  node->parity = (*alphabet)[l].parity;
  return NcMonomial(std::move(alphabet), std::move(node));
}

NcMonomial NcMonomial::bracket(const NcMonomial& left, const NcMonomial& right) {
  if (!same_alphabet(left.alphabet_, right.alphabet_)) throw Error("bracket of monomials over different alphabets");
  auto node = std::make_shared<Node>();
  node->left = left.node_;
  node->right = right.node_;
  node->degree = left.degree() + right.degree();
  node->parity = left.parity() + right.parity();
  return NcMonomial(left.alphabet_, std::move(node));
}

namespace {

class BracketParser {
 public:
  BracketParser(AlphabetPtr alphabet, std::string_view text) : alphabet_(std::move(alphabet)), text_(text) {}

  NcMonomial parse() {
    NcMonomial m = term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return m;
  }

 private:
  NcMonomial term() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      NcMonomial left = term();
      expect(',');
      NcMonomial right = term();
      expect(']');
      return NcMonomial::bracket(left, right);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '[' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected symbol or '['");
    auto name = text_.substr(start, pos_ - start);
    auto rank = alphabet_->find(name);
    if (!rank) fail("unknown symbol '" + std::string(name) + "'");
    return NcMonomial::leaf(alphabet_, *rank);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  AlphabetPtr alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_leaves(const NcMonomial& m, std::vector<Letter>& out) {
  if (m.is_leaf()) {
    out.push_back(m.letter());
    return;
  }
  collect_leaves(m.left(), out);
  collect_leaves(m.right(), out);
}

void write(const NcMonomial& m, std::string& out) {
  if (m.is_leaf()) {
    out += (*m.alphabet())[m.letter()].name;
    return;
  }
  out += '[';
  write(m.left(), out);
  out += ',';
  write(m.right(), out);
  out += ']';
}

bool is_greater(const Word& u, const Word& v) { return lex_cmp(u, v) == std::strong_ordering::greater; }

}  // namespace

NcMonomial NcMonomial::parse(AlphabetPtr alphabet, std::string_view text) {
  return BracketParser(std::move(alphabet), text).parse();
}

Letter NcMonomial::letter() const {
  if (!is_leaf()) throw Error("letter() on a bracket");
  return node_->letter;
}

NcMonomial NcMonomial::left() const {
  if (is_leaf()) throw Error("left() on a leaf");
  return NcMonomial(alphabet_, node_->left);
}

NcMonomial NcMonomial::right() const {
  if (is_leaf()) throw Error("right() on a leaf");
  return NcMonomial(alphabet_, node_->right);
}

std::string NcMonomial::to_string() const {
  std::string out;
  write(*this, out);
  return out;
}

bool operator==(const NcMonomial& a, const NcMonomial& b) {
  if (!same_alphabet(a.alphabet_, b.alphabet_)) return false;
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf() || a.degree() != b.degree()) return false;
  if (a.is_leaf()) return a.letter() == b.letter();
  return a.left() == b.left() && a.right() == b.right();
}

Word forget(const NcMonomial& m) {
  std::vector<Letter> letters;
  letters.reserve(m.degree());
  collect_leaves(m, letters);
  return Word(m.alphabet(), std::move(letters));
}

bool is_ls_monomial(const NcMonomial& m) {
  if (m.is_leaf()) return true;
  const NcMonomial u1 = m.left();
  const NcMonomial u2 = m.right();
  const Word w2 = forget(u2);
  if (!is_greater(forget(u1), w2)) return false;
  if (!is_ls_monomial(u1) || !is_ls_monomial(u2)) return false;
  if (!u1.is_leaf() && is_greater(forget(u1.right()), w2)) return false;
  return true;
}

bool is_super_ls_monomial(const NcMonomial& m) {
  if (is_ls_monomial(m)) return true;
  return !m.is_leaf() && m.left() == m.right() && is_odd(m.left().parity()) && is_ls_monomial(m.left());
}

NcMonomial standard_bracket(const Word& w) {
  if (w.empty() || !is_super_ls(w)) throw Error("standard bracketing needs a super-LS word, got '" + w.to_string() + "'");
  if (w.size() == 1) return NcMonomial::leaf(w.alphabet(), w.front());
  if (!is_lyndon_shirshov(w)) {
    NcMonomial half = standard_bracket(w.subword(0, w.size() / 2));
    return NcMonomial::bracket(half, half);
  }
  for (std::size_t split = 1; split < w.size(); ++split) {
    Word suffix = w.subword(split, w.size() - split);
    if (is_lyndon_shirshov(suffix)) {
      return NcMonomial::bracket(standard_bracket(w.subword(0, split)), standard_bracket(suffix));
    }
  }
  throw Error("no LS suffix found for '" + w.to_string() + "'");  // unreachable: the last letter is LS
}

Rational standard_leading_coefficient(const Word& w) {
  if (w.empty() || !is_super_ls(w)) throw Error("'" + w.to_string() + "' is not a super-LS word");
  return is_lyndon_shirshov(w) ? Rational(1) : Rational(2);
}

Poly expand(const NcMonomial& m) {
  if (m.is_leaf()) return Poly(Word::letter(m.alphabet(), m.letter()));
  return superbracket(expand(m.left()), expand(m.right()));
}

bool is_admissible(const NcMonomial& m) {
  const Word w = forget(m);
  const Rational expected = standard_leading_coefficient(w);
  const Poly e = expand(m);
  if (e.is_zero()) return false;
  const auto [lw, lc] = e.leading();
  return lw == w && lc == expected;
}

NcMonomial right_normed_bracket(const AlphabetPtr& alphabet, Letter t, std::span<const Letter> xs) {
  NcMonomial m = NcMonomial::leaf(alphabet, t);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Letter x = xs[i];
    if (x >= t) throw Error("right-normed bracket: letters must be below the head letter");
    if (i > 0 && xs[i - 1] > x) throw Error("right-normed bracket: letters must be weakly increasing");
    if (i > 0 && xs[i - 1] == x && is_odd((*alphabet)[x].parity)) {
      throw Error("right-normed bracket: odd letter '" + (*alphabet)[x].name + "' repeated");
    }
    m = NcMonomial::bracket(m, NcMonomial::leaf(alphabet, x));
  }
  return m;
}

NcMonomial substitute(const NcMonomial& m, const std::function<NcMonomial(Letter)>& image) {
  if (m.is_leaf()) return image(m.letter());
  return NcMonomial::bracket(substitute(m.left(), image), substitute(m.right(), image));
}

}  // namespace superlie
