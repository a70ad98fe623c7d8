#pragma once

#include "qcrystal/graph.hpp"

namespace qcrystal {

// Rows are stored north to south; heights[r][c] with c = 0 at the western edge.
struct Pyramid {
  std::vector<std::vector<int>> heights;
  bool operator==(const Pyramid&) const = default;
};

enum class PyramidOrder {
  Content,  // charged content descending, ties north first
  Height,   // height descending, removable first, west to east, north to south
};

struct StackSign {
  int row = 0;
  int col = 0;
  int height = 0;   // current stack height
  bool removable = false;
  int content = 0;  // charged content of the block removed or added
};

struct StringDescriptor {
  int kp = 0;  // k'
  int k = 0;
  std::string class_key(int n) const;  // invariant under translation by n+1
};

class PyramidModel {
 public:
  using Element = Pyramid;
  PyramidModel(CartanSpec spec, std::vector<int> lambda, PyramidOrder order = PyramidOrder::Content);

  const CartanSpec& spec() const { return spec_; }
  const std::vector<int>& lambda() const { return lambda_; }
  std::string name() const { return "pyramid"; }
  const std::vector<int>& charges() const { return charges_; }
  int level() const { return static_cast<int>(charges_.size()); }
  int colors() const { return spec_.rank() + 1; }
  PyramidOrder order() const { return order_; }

  int height(const Pyramid& p, int r, int c) const;
  int block_color(int r, int c, int level) const;  // level is 1-based
  int offset(int r) const { return offsets_[r]; }
  bool is_valid(const Pyramid& p) const;  // rule 4 within rows and across rows
  bool is_proper(const Pyramid& p) const;
  bool is_n_reduced(const Pyramid& p) const;

  std::vector<StackSign> signature(const Pyramid& p, int i) const;
  Pyramid root() const;
  std::string key(const Pyramid& p) const;
  std::optional<Pyramid> apply(const Pyramid& p, int i, Dir dir) const;
  std::pair<int, int> string_lengths(const Pyramid& p, int i) const;
  std::vector<int> drop(const Pyramid& p) const;
  json payload(const Pyramid& p) const;
  Pyramid from_payload(const json& j) const;
  std::string label(const Pyramid& p) const;

  StringDescriptor stack_to_string(const Pyramid& p, int r, int c) const;
  // All pyramids in P(lambda) with at most depth blocks.
  std::vector<Pyramid> enumerate(int depth) const;

 private:
  Pyramid adjust(const Pyramid& p, int r, int c, int dh) const;
  CartanSpec spec_;
  std::vector<int> lambda_;
  PyramidOrder order_;
  std::vector<int> charges_;
  std::vector<int> offsets_;
};

}  // namespace qcrystal
