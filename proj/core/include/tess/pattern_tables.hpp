#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tess/curvature.hpp"
#include "tess/rational.hpp"

namespace tess {

// A row of the positive/zero pattern tables: fixed degrees plus an
// optional trailing parametric slot k with an exact range. Curvature of a
// parametric family is the affine form c + 1/k.
struct PatternFamily {
  std::vector<int> fixed;
  bool parametric = false;
  int lo = 0;                  // k range (parametric only)
  std::optional<int> hi;       // nullopt = unbounded
  Q constant_term;             // c above; the full value when !parametric

  int length() const {
    return static_cast<int>(fixed.size()) + (parametric ? 1 : 0);
  }
  bool contains(const Pattern& p) const;
  std::string format() const;  // e.g. "(3,7,k) 7<=k<=41 1/k-1/42"
};

enum class TableSign { positive, zero };

// Derives the full table by constrained enumeration of nondecreasing
// face-degree prefixes (entries >= 3, lengths 3..6), sorted by length then
// lexicographically.
std::vector<PatternFamily> enumerate_families(TableSign sign);

/// Curvature of the family instantiated at k; errc::invalid_argument when
/// k is out of range (pass any k for constant families).
Q family_curvature(const PatternFamily& f, int k);

/// The unique family containing p, or nullopt (then Phi(p) < 0).
std::optional<PatternFamily> match_pattern(const Pattern& p);

}  // namespace tess
