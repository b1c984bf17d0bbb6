#include "bnorder/bipartition.hpp"

#include <stdexcept>

namespace bnorder {

Bipartition Bipartition::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("bad bipartition syntax: '" + std::string(text) +
                                "' (expected \"lambda|mu\")");
  return {Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1))};
}

std::string Bipartition::to_string() const { return first.to_string() + "|" + second.to_string(); }

std::vector<Bipartition> bipartitions_of(int n) {
  if (n < 0) throw std::invalid_argument("bipartitions_of: negative n");
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const Partition& lam : partitions_of(k))
      for (const Partition& mu : partitions_of(n - k)) out.push_back({lam, mu});
  return out;
}

}  // namespace bnorder
