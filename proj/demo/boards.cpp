// Walks a 2x3 board: enumerates every height behavior, reports the largest
// island system, and shows the canonical height construction for one family.

#include <cstdio>

#include "islands/islands.hpp"

using namespace islands;

int main() {
  GridSpec spec;
  spec.rows = 2;
  spec.cols = 3;
  IslandDomain board = grid_domain(spec);

  std::printf("2x3 board: %d cells, %zu rectangles\n", board.ground.size(),
              board.C.size());
  std::printf("connective: %s  proximity: %s  unit covers: %s\n",
              is_connective(board) ? "yes" : "no",
              is_proximity_domain(board) ? "yes" : "no",
              has_unit_covers(board) ? "yes" : "no");

  auto [best, witness] = max_system(board, /*strict=*/false);
  std::printf("largest island system: %d rectangles, witness heights:", best);
  for (int v : witness.values()) std::printf(" %d", v);
  std::printf("\n");

  SetFamily system = island_system(board, witness);
  for (const Subset& s : system.sorted_members()) {
    std::printf("  island:");
    for (int i : s.members()) std::printf(" %s", board.ground.name(i).c_str());
    std::printf("\n");
  }

  // build a family of two far-apart cells and let the layer peeling height it
  SetFamily family(board.ground.size());
  family.add(Subset::single(board.ground.size(), 0));
  family.add(Subset::single(board.ground.size(), 5));
  family.add(Subset::universe(board.ground.size()));
  auto [layers, heights] = canonical_height(board, family);
  std::printf("canonical height of {c1},{c6},U:");
  for (int v : heights.values()) std::printf(" %d", v);
  std::printf("  (%zu layers)\n", layers.layers.size());
  return 0;
}
