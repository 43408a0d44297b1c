#include "superlie/linalg.hpp"

#include <map>
#include <set>

#include "superlie/bracketing.hpp"

namespace superlie {

RankResult rank(std::span<const WordVector> vectors) {
  RankResult result;
  // pivot word -> monic row whose leading word is the pivot
  std::map<Word, Poly, DeglexLess> pivots;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Poly v = vectors[i];
    while (!v.is_zero()) {
      const auto [lw, lc] = v.leading();
      auto it = pivots.find(lw);
      if (it == pivots.end()) break;
      v -= lc * it->second;
    }
    if (v.is_zero()) continue;
    const Word lw = v.leading().first;
    pivots.emplace(lw, make_monic(v));
    result.independent.push_back(i);
  }
  result.rank = result.independent.size();
  return result;
}

bool is_unitriangular(std::span<const std::pair<Word, WordVector>> vectors) {
  std::set<Word, DeglexLess> claims;
  for (const auto& [claim, v] : vectors) {
    if (!claims.insert(claim).second) return false;
    if (v.is_zero() || claim.empty() || !is_super_ls(claim)) return false;
    const auto [lw, lc] = v.leading();
    if (!(lw == claim) || lc != standard_leading_coefficient(claim)) return false;
  }
  return true;
}

}  // namespace superlie
