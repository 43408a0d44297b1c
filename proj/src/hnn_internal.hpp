#pragma once

#include <vector>

#include "superlie/hnn.hpp"

namespace superlie {

std::vector<PbwPattern> hnn_pbw_patterns(const HnnPresentation& p, std::size_t max_len);

std::vector<std::vector<Letter>> hnn_monotone_sequences(const AlphabetPtr& alphabet, const std::vector<Letter>& letters,
                                                        std::size_t max_len);

}  // namespace superlie
