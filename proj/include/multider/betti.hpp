#ifndef MULTIDER_BETTI_HPP
#define MULTIDER_BETTI_HPP

#include <map>
#include <string>
#include <utility>

namespace multider {

// Graded Betti numbers of a minimal free resolution: entry (i, j) counts
// minimal generators of the i-th syzygy module in internal degree j.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;
  int pdim = 0;
  bool is_zero_module = false;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  long long total(int i) const {
    long long s = 0;
    for (const auto& [k, v] : entries)
      if (k.first == i) s += v;
    return s;
  }

  bool operator==(const BettiTable& o) const {
    return entries == o.entries && pdim == o.pdim && is_zero_module == o.is_zero_module;
  }

  std::string to_string() const;
};

}  // namespace multider

#endif
