#include "superlie/poly.hpp"

#include <cctype>

#include "superlie/error.hpp"

namespace superlie {

namespace {

void require_same(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw Error("polynomials over different alphabets");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_numeric(std::string_view s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s.front())) != 0);
}

}  // namespace

Poly::Poly(const Word& w, const Rational& c) : alphabet_(w.alphabet()) {
  if (c != 0) terms_.emplace(w, c);
}

Poly Poly::parse(AlphabetPtr alphabet, std::string_view text) {
  Poly out(alphabet);
  text = trim(text);
  if (text.empty()) throw Error("empty polynomial text");
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw Error("expected '+' or '-' at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
    std::string_view term = trim(text.substr(pos, end - pos));
    if (term.empty()) throw Error("empty term at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
    Rational coeff = 1;
    std::string_view word_text = term;
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      coeff = parse_rational(trim(term.substr(0, star)));
      word_text = trim(term.substr(star + 1));
    } else if (looks_numeric(term) && term != "1") {
      coeff = parse_rational(term);
      word_text = "1";
    }
    out.add_term(Word::parse(alphabet, word_text), sign * coeff);
    first = false;
    pos = end;
  }
  return out;
}

Rational Poly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Word& w, const Rational& c) {
  require_same(alphabet_, w.alphabet());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& q) {
  require_same(alphabet_, q.alphabet_);
  for (const auto& [w, c] : q.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& q) {
  require_same(alphabet_, q.alphabet_);
  for (const auto& [w, c] : q.terms_) add_term(w, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [w, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  out *= Rational(-1);
  return out;
}

std::pair<Word, Rational> Poly::leading() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  const auto& [w, c] = *terms_.rbegin();
  return {w, c};
}

PolyParity Poly::parity() const {
  bool even = false;
  bool odd = false;
  for (const auto& [w, c] : terms_) {
    (is_odd(w.parity()) ? odd : even) = true;
  }
  if (even && odd) return PolyParity::Mixed;
  return odd ? PolyParity::Odd : PolyParity::Even;
}

Poly Poly::homogeneous_part(Parity p) const {
  Poly out(alphabet_);
  for (const auto& [w, c] : terms_) {
    if (w.parity() == p) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(c);
    if (w.empty()) {
      out += superlie::to_string(mag);
    } else if (mag == 1) {
      out += w.to_string();
    } else {
      out += superlie::to_string(mag) + "*" + w.to_string();
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_alphabet(a.alphabet_, b.alphabet_)) return false;
  auto it = b.terms_.begin();
  for (const auto& [w, c] : a.terms_) {
    if (it->first.letters().size() != w.letters().size() ||
        lex_cmp(it->first.letters(), w.letters()) != std::strong_ordering::equal || it->second != c) {
      return false;
    }
    ++it;
  }
  return true;
}

Poly operator+(Poly p, const Poly& q) { return p += q; }
Poly operator-(Poly p, const Poly& q) { return p -= q; }
Poly operator*(const Rational& c, Poly p) { return p *= c; }

Poly operator*(const Poly& p, const Poly& q) {
  require_same(p.alphabet(), q.alphabet());
  Poly out(p.alphabet());
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) out.add_term(u.concat(v), a * b);
  }
  return out;
}

Poly sandwich(const Word& a, const Poly& p, const Word& b) {
  Poly out(p.alphabet());
  for (const auto& [w, c] : p.terms()) out.add_term(a.concat(w).concat(b), c);
  return out;
}

Poly superbracket(const Poly& p, const Poly& q) {
  require_same(p.alphabet(), q.alphabet());
  Poly out(p.alphabet());
  for (Parity pp : {Parity::Even, Parity::Odd}) {
    Poly ph = p.homogeneous_part(pp);
    if (ph.is_zero()) continue;
    for (Parity qp : {Parity::Even, Parity::Odd}) {
      Poly qh = q.homogeneous_part(qp);
      if (qh.is_zero()) continue;
      out += ph * qh;
      out -= Rational(koszul_sign(pp, qp)) * (qh * ph);
    }
  }
  return out;
}

Poly make_monic(const Poly& p) {
  const Rational lc = p.leading().second;
  return Rational(1 / lc) * p;
}

}  // namespace superlie
