#pragma once

#include <string>

#include "rough/rough.hpp"

namespace fixture {

/// S = abcefq with blocks abc, ef, q.
inline rough::ApproximationSpace space() {
  const rough::Universe u = rough::Universe::of_chars("abcefq");
  return rough::ApproximationSpace::from_blocks(u, {u.parse("abc"), u.parse("ef"), u.parse("q")});
}

inline rough::Subset set(const rough::ApproximationSpace& s, const std::string& text) { return s.parse(text); }

inline const char* model_path() { return ROUGH_FIXTURE; }

}  // namespace fixture
