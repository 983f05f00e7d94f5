// Shows the two box-domain views: a formal context whose pre-islands are its
// concepts, and a Boolean function whose pre-islands are its prime implicants.

#include <cstdio>

#include "islands/islands.hpp"

using namespace islands;

static void show(const IslandDomain& d, const SetFamily& fam, const char* label) {
  std::printf("%s:\n", label);
  for (const Subset& s : fam.sorted_members()) {
    std::printf("  {");
    bool first = true;
    for (int i : s.members()) {
      std::printf("%s%s", first ? "" : ", ", d.ground.name(i).c_str());
      first = false;
    }
    std::printf("}\n");
  }
}

int main() {
  ContextSpec ctx;
  ctx.factors = {{"g1", "g2"}, {"m1", "m2"}};
  ctx.relation = {{0, 0}, {0, 1}, {1, 0}};
  auto [dom, h] = box_domain(ctx);
  show(dom, pre_island_system(dom, h), "pre-islands of the 2x2 context");

  auto concepts = formal_concepts_bruteforce(ctx);
  std::printf("concepts found by the closure oracle: %zu\n", concepts.size());

  // majority of three variables: table row k is true iff at least two bits set
  std::vector<bool> majority;
  for (int k = 0; k < 8; ++k) {
    int bits = ((k >> 2) & 1) + ((k >> 1) & 1) + (k & 1);
    majority.push_back(bits >= 2);
  }
  auto [bdom, bh] = box_domain(boolean_context(3, majority));
  show(bdom, pre_island_system(bdom, bh), "pre-islands of majority(x1,x2,x3)");
  show(bdom, prime_implicants_bruteforce(majority), "prime implicants");
  return 0;
}
