#pragma once

#include "qcrystal/pyramid.hpp"
#include "qcrystal/quiver.hpp"
#include "qcrystal/strings.hpp"
#include "qcrystal/tableau_d.hpp"
#include "qcrystal/wall.hpp"

namespace qcrystal {

// Entry reps of a type A tableau, one per box, in Far-Eastern order.
std::vector<QuiverRep> tableau_reps(const CartanSpec& spec, const Tableau& t);

// Variant of the entry rep used for a body box of a D tableau of this shape.
EntryVariant d_body_variant(const DShape& shape, int row);
struct DFactor {
  Box box;        // row -1 for a spin slot, col = slot index
  DLetter letter;
  int row = 0;    // 1-based row or spin slot
  EntryVariant variant;
};
std::vector<DFactor> d_factors(const TableauDModel& model, const DTableau& t);
std::vector<QuiverRep> d_tableau_reps(const TableauDModel& model, const DTableau& t);

// One string per nonempty stack.
std::vector<QuiverRep> pyramid_reps(const PyramidModel& model, const Pyramid& p);

// Column j as a branched string: each block maps to the block(s) of the cell below.
QuiverRep column_rep(const WallModel& model, const ColumnState& s, int j);
QuiverRep column_to_rep(const WallModel& model, const Wall& y, int j);

// Summed dimension vectors of the reps attached to an element; equals its drop.
std::vector<int> geometric_drop(const CartanSpec& spec, const std::vector<QuiverRep>& reps);

// Number of i-removable strings that are not i-matched.
int geometric_epsilon(const TableauAModel& model, const Tableau& t, int i);
int geometric_epsilon(const StringModelA& model, const StringElement& s, int i);
int geometric_epsilon(const TableauDModel& model, const DTableau& t, int i);
int geometric_epsilon(const PyramidModel& model, const Pyramid& p, int i);

}  // namespace qcrystal
