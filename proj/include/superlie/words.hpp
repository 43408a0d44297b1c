#pragma once

// Super-alphabets, associative words and the two word orders.
//
// The lexicographic order used throughout is the one of Lyndon-Shirshov
// theory: letters compare by rank, and a proper prefix is GREATER than any
// of its extensions (u > uv for non-empty v). deglex compares lengths first
// and falls back to lex on equal lengths.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace superlie {

using Letter = std::uint32_t;

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr bool is_odd(Parity p) { return p == Parity::Odd; }

/// (-1)^{|a||b|}
constexpr int koszul_sign(Parity a, Parity b) { return is_odd(a) && is_odd(b) ? -1 : 1; }

struct Symbol {
  Letter rank;
  std::string name;
  Parity parity;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Totally ordered, parity-tagged generator set. Symbols are listed in increasing order.
class Alphabet {
 public:
  struct Entry {
    std::string name;
    Parity parity = Parity::Even;
  };

  static AlphabetPtr make(std::vector<Entry> entries);

  /// Comma-separated "name[:odd]" tokens in increasing order, e.g. "a,x:odd,t".
  static AlphabetPtr parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](Letter rank) const { return symbols_.at(rank); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  std::optional<Letter> find(std::string_view name) const;
  Letter rank_of(std::string_view name) const;

  /// True when every symbol name is one character, so words print without separators.
  bool compact_names() const { return compact_; }
  std::uint64_t content_hash() const { return hash_; }
  std::string to_string() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  explicit Alphabet(std::vector<Symbol> symbols);

  std::vector<Symbol> symbols_;
  std::uint64_t hash_ = 0;
  bool compact_ = true;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Associative word over an alphabet; the empty word is allowed.
class Word {
 public:
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);
  static Word empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }
  static Word letter(AlphabetPtr alphabet, Letter l) { return Word(std::move(alphabet), {l}); }

  /// Symbol names concatenated when all names are one character, otherwise
  /// '.'-separated ("t.x1.x1"). "1" denotes the empty word.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Parity parity() const;

  Word subword(std::size_t pos, std::size_t len) const;
  Word concat(const Word& other) const;
  /// Position of the first occurrence of `sub` at or after `from`, if any.
  std::optional<std::size_t> find(const Word& sub, std::size_t from = 0) const;
  bool contains(const Word& sub) const { return find(sub).has_value(); }

  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b);

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

std::strong_ordering lex_cmp(const Word& u, const Word& v);
std::strong_ordering deglex_cmp(const Word& u, const Word& v);

// Unchecked variants on raw letter sequences; callers guarantee a shared alphabet.
std::strong_ordering lex_cmp(std::span<const Letter> u, std::span<const Letter> v);
std::strong_ordering deglex_cmp(std::span<const Letter> u, std::span<const Letter> v);

/// Strict weak ordering by deglex, for ordered containers. Does not check alphabets.
struct DeglexLess {
  bool operator()(const Word& u, const Word& v) const {
    return deglex_cmp(u.letters(), v.letters()) == std::strong_ordering::less;
  }
};

bool is_lyndon_shirshov(const Word& w);
bool is_super_ls(const Word& w);

/// All words of length exactly n, in deglex order.
std::vector<Word> words_of_length(const AlphabetPtr& alphabet, std::size_t n);

using WordPredicate = std::function<bool(const Word&)>;

/// Super-LS words of length 1..max_len passing `constraint` (if given), sorted by deglex.
std::vector<Word> enumerate_super_ls(const AlphabetPtr& alphabet, std::size_t max_len,
                                     const WordPredicate& constraint = {});

}  // namespace superlie
