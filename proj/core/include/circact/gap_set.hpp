#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "circact/rational.hpp"

namespace circact {

// Finite union of disjoint closed blocks [a_i, b_i] inside [0,1] containing
// both endpoints: a_1 = 0 and b_n = 1. Blocks may be points (a_i = b_i).
// The complementary open intervals are the gaps.
class GapSet {
 public:
  using Block = std::pair<Rational, Rational>;

  static GapSet from_blocks(std::vector<Block> blocks);
  // The whole interval [0,1]: one block, no gaps.
  static GapSet full_interval();
  // {0} u {1}: a single gap (0,1).
  static GapSet boundary_pair();

  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<Block>& gaps() const { return gaps_; }
  size_t gap_count() const { return gaps_.size(); }

  struct Location {
    bool in_block;
    size_t index;  // block index or gap index
  };
  // Classifies r in [0,1]; throws OutOfRange otherwise.
  Location locate(const Rational& r) const;

  // Normalized coordinate of r inside gap i: (r - lo) / (hi - lo).
  Rational zeta(size_t gap, const Rational& r) const;

  bool operator==(const GapSet& o) const { return blocks_ == o.blocks_; }

 private:
  GapSet() = default;

  std::vector<Block> blocks_;
  std::vector<Block> gaps_;
};

// Gap signs, one of {-1, +1} per gap of the associated GapSet.
class SignAssignment {
 public:
  SignAssignment() = default;
  explicit SignAssignment(std::vector<int> signs);

  size_t size() const { return signs_.size(); }
  int operator[](size_t i) const { return signs_[i]; }
  const std::vector<int>& signs() const { return signs_; }

  bool operator==(const SignAssignment&) const = default;

 private:
  std::vector<int> signs_;
};

}  // namespace circact
