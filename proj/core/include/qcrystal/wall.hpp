#pragma once

#include "qcrystal/graph.hpp"

namespace qcrystal {

// One column: `full` complete cells counting the ground cell, plus the colors
// present in the partial cell above them (bit c for color c).
struct ColumnState {
  int full = 0;
  unsigned frontier = 0;
  bool operator==(const ColumnState&) const = default;
};

// Columns y_0, y_1, ... with y_0 rightmost; trailing ground columns trimmed.
struct Wall {
  std::vector<ColumnState> columns;
  bool operator==(const Wall&) const = default;
};

struct WallBlock {
  int cell = 0;
  int color = 0;
};

class WallModel {
 public:
  using Element = Wall;
  WallModel(CartanSpec spec, int k);

  const CartanSpec& spec() const { return spec_; }
  const std::vector<int>& lambda() const { return lambda_; }
  std::string name() const { return "wall"; }
  int k() const { return k_; }
  int period() const { return static_cast<int>(pattern_.size()); }

  // Colors of cell m (1 or 2 of them); cell 0 is the ground cell.
  const std::vector<int>& cell(int m) const { return pattern_[m % period()]; }
  int prefill(int j) const { return prefill_[j % 2]; }
  ColumnState ground(int j) const { return {0, 1u << prefill(j)}; }
  ColumnState column(const Wall& y, int j) const;

  bool column_supported(const Wall& y, int j) const;
  bool is_proper(const Wall& y) const;
  bool is_valid(const Wall& y) const;
  bool delta_removable(const Wall& y, int j) const;
  bool is_reduced(const Wall& y) const;

  std::optional<ColumnState> add_block(const ColumnState& s, int i) const;
  std::optional<ColumnState> remove_block(const ColumnState& s, int j, int i) const;

  // One factor per column, leftmost column first; factor index = column number.
  SignedWord signed_word(const Wall& y, int i) const;
  Wall root() const { return Wall{}; }
  std::string key(const Wall& y) const;
  std::optional<Wall> apply(const Wall& y, int i, Dir dir) const;
  std::pair<int, int> string_lengths(const Wall& y, int i) const;
  std::vector<int> drop(const Wall& y) const;
  json payload(const Wall& y) const;
  Wall from_payload(const json& j) const;
  std::string label(const Wall& y) const;

  std::vector<WallBlock> column_blocks(const Wall& y, int j) const;
  std::vector<WallBlock> column_blocks(const ColumnState& s, int j) const;
  Wall normalize(Wall y) const;
  // All reduced proper walls with at most max_blocks added blocks.
  std::vector<Wall> enumerate(int max_blocks) const;

 private:
  bool state_well_formed(const ColumnState& s, int j) const;
  std::vector<int> colors_of(const ColumnState& s, int m) const;
  CartanSpec spec_;
  int k_;
  std::vector<int> lambda_;
  std::vector<std::vector<int>> pattern_;
  int prefill_[2];
};

}  // namespace qcrystal
