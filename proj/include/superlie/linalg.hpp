#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "superlie/poly.hpp"

namespace superlie {

/// Sparse rational vector indexed by words.
using WordVector = Poly;

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> independent;  ///< indices of an independent subset of size `rank`
};

/// Exact rank by incremental elimination on deglex-leading words.
RankResult rank(std::span<const WordVector> vectors);

/// Each vector's deglex-leading word equals its claimed word with the standard
/// leading coefficient (1, or 2 for uu-type words); claims are pairwise distinct.
bool is_unitriangular(std::span<const std::pair<Word, WordVector>> vectors);

}  // namespace superlie
