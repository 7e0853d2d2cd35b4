#pragma once

#include <string>

#include "tdm/errors.hpp"

namespace tdm {

/// Dyson index. Only the orthogonal (1) and unitary (2) classes are implemented.
class SymmetryClass {
 public:
  static SymmetryClass from_int(int beta) {
    if (beta == 1 || beta == 2) return SymmetryClass(beta);
    if (beta == 4) throw UnsupportedError("unsupported symmetry class beta = 4");
    throw UnsupportedError("unsupported symmetry class beta = " + std::to_string(beta));
  }
  static SymmetryClass orthogonal() { return SymmetryClass(1); }
  static SymmetryClass unitary() { return SymmetryClass(2); }

  int beta() const { return beta_; }
  friend bool operator==(SymmetryClass, SymmetryClass) = default;

 private:
  explicit SymmetryClass(int beta) : beta_(beta) {}
  int beta_;
};

}  // namespace tdm
