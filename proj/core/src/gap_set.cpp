#include "circact/gap_set.hpp"

#include <algorithm>

#include "circact/errors.hpp"

namespace circact {

GapSet GapSet::from_blocks(std::vector<Block> blocks) {
  if (blocks.empty()) throw ValidationError("GapSet: no blocks");
  for (const Block& b : blocks) {
    if (b.first > b.second) {
      throw ValidationError("GapSet: block with reversed endpoints");
    }
  }
  for (size_t i = 1; i < blocks.size(); ++i) {
    if (!(blocks[i - 1].second < blocks[i].first)) {
      throw ValidationError("GapSet: blocks must be disjoint and sorted");
    }
  }
  if (!blocks.front().first.is_zero()) {
    throw ValidationError("GapSet: first block must start at 0");
  }
  if (blocks.back().second != Rational(1)) {
    throw ValidationError("GapSet: last block must end at 1");
  }
  GapSet k;
  k.blocks_ = std::move(blocks);
  for (size_t i = 0; i + 1 < k.blocks_.size(); ++i) {
    k.gaps_.emplace_back(k.blocks_[i].second, k.blocks_[i + 1].first);
  }
  return k;
}

GapSet GapSet::full_interval() {
  return from_blocks({{Rational(0), Rational(1)}});
}

GapSet GapSet::boundary_pair() {
  return from_blocks({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

GapSet::Location GapSet::locate(const Rational& r) const {
  if (r.sign() < 0 || r > Rational(1)) {
    throw OutOfRange("GapSet: coordinate outside [0,1]");
  }
  // Last block whose lower end is <= r.
  auto it = std::upper_bound(
      blocks_.begin(), blocks_.end(), r,
      [](const Rational& v, const Block& b) { return v < b.first; });
  const size_t i = static_cast<size_t>(it - blocks_.begin()) - 1;
  if (r <= blocks_[i].second) return {true, i};
  return {false, i};
}

Rational GapSet::zeta(size_t gap, const Rational& r) const {
  const Block& g = gaps_[gap];
  return (r - g.first) / (g.second - g.first);
}

SignAssignment::SignAssignment(std::vector<int> signs)
    : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) {
      throw ValidationError("SignAssignment: entries must be -1 or +1");
    }
  }
}

}  // namespace circact
