#ifndef FACTO_PERM_HPP
#define FACTO_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "facto/error.hpp"

namespace facto {

// Permutation of {0..degree-1}, stored as the image vector.
// The product a*b means "apply a first, then b": (a*b)(x) = b(a(x)).
// This convention is used uniformly across the library.
class Perm {
public:
  Perm() = default;
  explicit Perm(uint32_t degree);                    // identity
  explicit Perm(std::vector<uint8_t> images);        // validated

  uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
  uint8_t operator[](uint32_t x) const { return img_[x]; }
  const std::vector<uint8_t>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& rhs) const;             // apply *this, then rhs
  // rhs^{-1} * (*this) * rhs under the left-first convention.
  Perm conjugated_by(const Perm& rhs) const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  // Extends the permutation with fixed points up to `degree`.
  Perm extended(uint32_t degree) const;

  int order() const;
  // Sorted list of cycle lengths >= 2.
  std::vector<int> cycle_type() const;

  // Cycle notation, 1-based points, e.g. "(1 2)(3 4 5)"; identity is "()".
  std::string to_cycles() const;
  // Parses cycle notation. Accepts "identity", "id" and "()" for the
  // identity; `min_degree` pads with fixed points.
  static Perm parse_cycles(const std::string& text, uint32_t min_degree = 0);

private:
  std::vector<uint8_t> img_;
};

}  // namespace facto

#endif
