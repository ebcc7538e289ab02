#include "trivdiag/parking.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace trivdiag::parking {

Rearrangement rearrange(const std::vector<int>& f) {
  std::vector<int> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return f[static_cast<std::size_t>(i)] < f[static_cast<std::size_t>(j)]; });
  Rearrangement out;
  for (int i : order) {
    out.alpha.push_back(i + 1);
    out.beta.push_back(f[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool is_parking(const std::vector<int>& f, int r) {
  if (f.empty() || r < 1) return false;
  auto sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 0 || sorted[k] > r * static_cast<int>(k)) return false;
  }
  return true;
}

ParkingFunction::ParkingFunction(int r, std::vector<int> f) : r_(r), f_(std::move(f)) {
  if (!is_parking(f_, r_)) throw std::invalid_argument("not a parking function");
  auto [alpha, beta] = rearrange(f_);
  alpha_ = std::move(alpha);
  beta_ = std::move(beta);
  for (int i = 0; i < n(); ++i) c_.push_back(r_ * (i + 1) - beta_[static_cast<std::size_t>(i)]);
}

int ParkingFunction::dinv() const {
  int count = 0;
  for (int i = 0; i < n(); ++i) {
    for (int j = i + 1; j < n(); ++j) {
      const int ai = alpha_[static_cast<std::size_t>(i)];
      const int aj = alpha_[static_cast<std::size_t>(j)];
      for (int d = 0; d < r_; ++d) {
        const int s = c_[static_cast<std::size_t>(i)] - c_[static_cast<std::size_t>(j)] + d;
        if ((s == 0 && ai < aj) || (1 <= s && s <= r_ - 1) || (s == r_ && ai > aj)) ++count;
      }
    }
  }
  return count;
}

std::vector<int> ParkingFunction::reading_word(ReadingOrder order) const {
  if (order == ReadingOrder::rows) return alpha_;
  std::vector<int> rows(static_cast<std::size_t>(n()));
  std::iota(rows.begin(), rows.end(), 0);
  std::sort(rows.begin(), rows.end(), [&](int i, int j) {
    const int ci = c_[static_cast<std::size_t>(i)];
    const int cj = c_[static_cast<std::size_t>(j)];
    return ci != cj ? ci > cj : i > j;
  });
  std::vector<int> word;
  for (int i : rows) word.push_back(alpha_[static_cast<std::size_t>(i)]);
  return word;
}

symcore::Composition ParkingFunction::reading_composition(ReadingOrder order) const {
  const auto word = reading_word(order);
  std::vector<int> position(static_cast<std::size_t>(n()) + 1);
  for (std::size_t k = 0; k < word.size(); ++k) position[static_cast<std::size_t>(word[k])] = static_cast<int>(k);
  std::vector<int> descents;
  for (int car = 1; car < n(); ++car) {
    if (position[static_cast<std::size_t>(car + 1)] < position[static_cast<std::size_t>(car)]) descents.push_back(car);
  }
  return symcore::Composition::from_descent_set(n(), descents);
}

tamari::DyckPath shape(const std::vector<int>& f, int r) { return ParkingFunction(r, f).shape(); }

symcore::Composition descent_composition(const std::vector<int>& f, int r) {
  return ParkingFunction(r, f).descent_composition();
}

int dinv(const std::vector<int>& f, int r) { return ParkingFunction(r, f).dinv(); }

std::vector<ParkingFunction> pf_of_shape(const tamari::DyckPath& beta) {
  // Each run of equal values in beta receives a set of positions.
  const auto runs = tamari::co_path(beta).parts();
  std::vector<int> run_value;
  for (std::size_t i = 0, start = 0; i < runs.size(); start += static_cast<std::size_t>(runs[i]), ++i) {
    run_value.push_back(beta[start]);
  }
  const int n = beta.n();
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::vector<ParkingFunction> out;
  std::function<void(std::size_t, int, int)> place = [&](std::size_t run, int left, int from) {
    if (run == runs.size()) {
      out.emplace_back(beta.r(), f);
      return;
    }
    if (left == 0) {
      const auto next = run + 1;
      place(next, next < runs.size() ? runs[next] : 0, 0);
      return;
    }
    for (int p = from; p < n; ++p) {
      if (f[static_cast<std::size_t>(p)] != -1) continue;
      f[static_cast<std::size_t>(p)] = run_value[run];
      place(run, left - 1, p + 1);
      f[static_cast<std::size_t>(p)] = -1;
    }
  };
  place(0, runs[0], 0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.values() < y.values(); });
  return out;
}

std::vector<ParkingFunction> all_parking(int n, int r) {
  std::vector<ParkingFunction> out;
  for (const auto& beta : tamari::enumerate_paths(n, r)) {
    auto block = pf_of_shape(beta);
    out.insert(out.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.values() < y.values(); });
  return out;
}

}  // namespace trivdiag::parking
