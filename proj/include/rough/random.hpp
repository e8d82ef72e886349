#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rough/approx.hpp"

namespace rough {

/// Deterministic generator for randomized suites.
using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

/// An equivalence space on atoms a, b, c, ... with each atom placed in a
/// uniformly chosen block label.
inline ApproximationSpace random_space(Rng& rng, std::size_t atoms) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  std::vector<Mask> by_label(atoms, 0);
  for (std::size_t i = 0; i < atoms; ++i) by_label[uniform_index(rng, atoms)] |= Mask{1} << i;
  std::vector<Subset> blocks;
  for (Mask m : by_label) {
    if (m) blocks.emplace_back(m, atoms);
  }
  return ApproximationSpace::from_blocks(Universe(std::move(names)), std::move(blocks));
}

}  // namespace rough
