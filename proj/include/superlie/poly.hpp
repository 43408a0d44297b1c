#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "superlie/rational.hpp"
#include "superlie/words.hpp"

namespace superlie {

enum class PolyParity { Even, Odd, Mixed };

/// Element of the free associative superalgebra over the rationals.
///
/// Terms are kept in a deglex-sorted map without zero coefficients, so the
/// leading word is the last entry.
class Poly {
 public:
  using Terms = std::map<Word, Rational, DeglexLess>;

  explicit Poly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  explicit Poly(const Word& w, const Rational& c = 1);

  /// Signed sum of "c*word" terms, e.g. "xx - 1/2*v", "2*t.x1 + 3". "0" is zero.
  static Poly parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  /// Adds c*w in place.
  void add_term(const Word& w, const Rational& c);

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  std::pair<Word, Rational> leading() const;
  PolyParity parity() const;
  Poly homogeneous_part(Parity p) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  AlphabetPtr alphabet_;
  Terms terms_;
};

Poly operator+(Poly p, const Poly& q);
Poly operator-(Poly p, const Poly& q);
Poly operator*(const Rational& c, Poly p);
Poly operator*(const Poly& p, const Poly& q);

inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly scale(const Rational& c, const Poly& p) { return c * p; }
inline Poly multiply(const Poly& p, const Poly& q) { return p * q; }

/// a * p * b for words a, b.
Poly sandwich(const Word& a, const Poly& p, const Word& b);

/// [p,q] = pq - (-1)^{|p||q|} qp on homogeneous parts, extended bilinearly.
Poly superbracket(const Poly& p, const Poly& q);

/// Deglex-maximal word and its coefficient. Throws on zero.
inline std::pair<Word, Rational> leading(const Poly& p) { return p.leading(); }
inline PolyParity parity(const Poly& p) { return p.parity(); }
Poly make_monic(const Poly& p);

}  // namespace superlie
