#include "superlie/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "superlie/error.hpp"

namespace superlie {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto c0 = static_cast<unsigned char>(name.front());
  if (!std::isalpha(c0) && c0 != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '\'';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_same(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) {
    throw Error("words over different alphabets");
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (const auto& s : symbols_) {
    for (char c : s.name) mix(static_cast<unsigned char>(c));
    mix(is_odd(s.parity) ? '1' : '0');
    mix(',');
    compact_ = compact_ && s.name.size() == 1;
  }
  hash_ = h;
}

AlphabetPtr Alphabet::make(std::vector<Entry> entries) {
  if (entries.empty()) throw Error("alphabet must be non-empty");
  std::set<std::string, std::less<>> seen;
  std::vector<Symbol> symbols;
  symbols.reserve(entries.size());
  for (auto& e : entries) {
    if (!valid_name(e.name)) throw Error("invalid symbol name '" + e.name + "'");
    if (!seen.insert(e.name).second) throw Error("duplicate symbol name '" + e.name + "'");
    symbols.push_back({static_cast<Letter>(symbols.size()), std::move(e.name), e.parity});
  }
  return AlphabetPtr(new Alphabet(std::move(symbols)));
}

AlphabetPtr Alphabet::parse(std::string_view text) {
  std::vector<Entry> entries;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    Parity parity = Parity::Even;
    if (const auto colon = token.find(':'); colon != std::string_view::npos) {
      std::string_view tag = trim(token.substr(colon + 1));
      if (tag == "odd" || tag == "1") {
        parity = Parity::Odd;
      } else if (tag != "even" && tag != "0") {
        throw Error("unknown parity tag '" + std::string(tag) + "'");
      }
      token = trim(token.substr(0, colon));
    }
    entries.push_back({std::string(token), parity});
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return make(std::move(entries));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (const auto& s : symbols_) {
    if (s.name == name) return s.rank;
  }
  return std::nullopt;
}

Letter Alphabet::rank_of(std::string_view name) const {
  if (auto r = find(name)) return *r;
  throw Error("unknown symbol '" + std::string(name) + "'");
}

std::string Alphabet::to_string() const {
  std::string out;
  for (const auto& s : symbols_) {
    if (!out.empty()) out += ',';
    out += s.name;
    if (is_odd(s.parity)) out += ":odd";
  }
  return out;
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.hash_ != b.hash_ || a.symbols_.size() != b.symbols_.size()) return false;
  for (std::size_t i = 0; i < a.symbols_.size(); ++i) {
    if (a.symbols_[i].name != b.symbols_[i].name || a.symbols_[i].parity != b.symbols_[i].parity) {
      return false;
    }
  }
  return true;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw Error("word without alphabet");
  for (Letter l : letters_) {
    if (l >= alphabet_->size()) throw Error("letter rank out of range");
  }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error("empty word text (use \"1\" for the empty word)");
  if (text == "1") return empty(std::move(alphabet));
  std::vector<Letter> letters;
  if (text.find('.') != std::string_view::npos) {
    while (true) {
      const auto dot = text.find('.');
      letters.push_back(alphabet->rank_of(text.substr(0, dot)));
      if (dot == std::string_view::npos) break;
      text.remove_prefix(dot + 1);
    }
  } else if (alphabet->compact_names()) {
    for (char c : text) letters.push_back(alphabet->rank_of(std::string_view(&c, 1)));
  } else {
    letters.push_back(alphabet->rank_of(text));
  }
  return Word(std::move(alphabet), std::move(letters));
}

Parity Word::parity() const {
  Parity p = Parity::Even;
  for (Letter l : letters_) p = p + (*alphabet_)[l].parity;
  return p;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size() || len > letters_.size() - pos) throw Error("subword out of range");
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word Word::concat(const Word& other) const {
  require_same(*this, other);
  std::vector<Letter> out;
  out.reserve(letters_.size() + other.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(alphabet_, std::move(out));
}

std::optional<std::size_t> Word::find(const Word& sub, std::size_t from) const {
  if (sub.size() > letters_.size()) return std::nullopt;
  auto it = std::search(letters_.begin() + static_cast<std::ptrdiff_t>(std::min(from, letters_.size())),
                        letters_.end(), sub.letters_.begin(), sub.letters_.end());
  if (it == letters_.end() && !sub.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  const bool compact = alphabet_->compact_names();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0 && !compact) out += '.';
    out += (*alphabet_)[letters_[i]].name;
  }
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return a.letters_ == b.letters_ && same_alphabet(a.alphabet_, b.alphabet_);
}

std::strong_ordering lex_cmp(std::span<const Letter> u, std::span<const Letter> v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  // A proper prefix is the greater word.
  return v.size() <=> u.size();
}

std::strong_ordering deglex_cmp(std::span<const Letter> u, std::span<const Letter> v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  return lex_cmp(u, v);
}

std::strong_ordering lex_cmp(const Word& u, const Word& v) {
  require_same(u, v);
  return lex_cmp(u.letters(), v.letters());
}

std::strong_ordering deglex_cmp(const Word& u, const Word& v) {
  require_same(u, v);
  return deglex_cmp(u.letters(), v.letters());
}

bool is_lyndon_shirshov(const Word& w) {
  if (w.empty()) throw Error("Lyndon-Shirshov test on the empty word");
  const auto letters = w.letters();
  const std::size_t n = letters.size();
  std::vector<Letter> rotation(n);
  for (std::size_t k = 1; k < n; ++k) {
    std::rotate_copy(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end(),
                     rotation.begin());
    if (lex_cmp(letters, rotation) != std::strong_ordering::greater) return false;
  }
  return true;
}

bool is_super_ls(const Word& w) {
  if (is_lyndon_shirshov(w)) return true;
  const std::size_t n = w.size();
  if (n % 2 != 0) return false;
  const auto letters = w.letters();
  if (!std::equal(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(n / 2),
                  letters.begin() + static_cast<std::ptrdiff_t>(n / 2))) {
    return false;
  }
  Word half = w.subword(0, n / 2);
  return is_odd(half.parity()) && is_lyndon_shirshov(half);
}

std::vector<Word> words_of_length(const AlphabetPtr& alphabet, std::size_t n) {
  std::vector<Word> out;
  const Letter k = static_cast<Letter>(alphabet->size());
  std::vector<Letter> digits(n, 0);
  while (true) {
    out.emplace_back(alphabet, digits);
    std::size_t i = n;
    while (i > 0 && digits[i - 1] + 1 == k) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

std::vector<Word> enumerate_super_ls(const AlphabetPtr& alphabet, std::size_t max_len,
                                     const WordPredicate& constraint) {
  if (max_len == 0) throw Error("max_len must be at least 1");
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    for (auto& w : words_of_length(alphabet, n)) {
      if (is_super_ls(w) && (!constraint || constraint(w))) out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace superlie
