#include "trivdiag/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace trivdiag::symcore {

// Beta-set form: a rim hook of size k is removed by sliding one bead from b to
// b - k onto a free position; the sign is (-1)^(beads jumped over).
Integer character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) {
    throw std::invalid_argument("character_value: weight mismatch");
  }
  const int len = lambda.length();
  std::set<int> beads;
  for (int i = 0; i < len; ++i) beads.insert(lambda[static_cast<std::size_t>(i)] + (len - 1 - i));

  std::map<std::pair<std::set<int>, int>, Integer> memo;
  std::function<Integer(const std::set<int>&, int)> rec = [&](const std::set<int>& state,
                                                              int step) -> Integer {
    if (step == mu.length()) return 1;
    auto key = std::make_pair(state, step);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = mu[static_cast<std::size_t>(step)];
    Integer total = 0;
    for (int b : state) {
      const int target = b - k;
      if (target < 0 || state.count(target)) continue;
      const auto jumped = std::distance(state.upper_bound(target), state.lower_bound(b));
      std::set<int> next = state;
      next.erase(b);
      next.insert(target);
      const Integer value = rec(next, step + 1);
      total += (jumped % 2 == 0) ? value : Integer(-value);
    }
    memo.emplace(key, total);
    return total;
  };
  return rec(beads, 0);
}

}  // namespace trivdiag::symcore
