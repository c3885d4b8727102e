#include "lsgq/perm.hpp"

namespace lsgq {

std::vector<int> orbit_ints(int start, const std::vector<Perm>& gens) {
  std::vector<char> seen(gens.empty() ? size_t(start) + 1 : gens[0].img.size(),
                         0);
  std::vector<int> out{start};
  seen[start] = 1;
  for (size_t k = 0; k < out.size(); ++k)
    for (const Perm& g : gens) {
      int y = g(out[k]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  return out;
}

}  // namespace lsgq
