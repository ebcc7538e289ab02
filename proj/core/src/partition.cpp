#include "trivdiag/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace trivdiag::symcore {

namespace {

void check_parts(const std::vector<int>& parts) {
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("parts must be positive");
  }
}

std::string join(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_parts(parts_);
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
    throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    out.push_back(static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const { return join(parts_); }

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_parts(parts_);
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_descent_set(int n, const std::vector<int>& positions) {
  std::vector<int> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> parts;
  int previous = 0;
  for (int s : sorted) {
    if (s <= previous || s >= n) throw std::invalid_argument("bad descent position");
    parts.push_back(s - previous);
    previous = s;
  }
  parts.push_back(n - previous);
  return Composition(std::move(parts));
}

std::vector<int> Composition::descent_set() const {
  std::vector<int> out;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    out.push_back(sum);
  }
  return out;
}

std::string Composition::to_string() const { return join(parts_); }

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest first part first gives reverse-lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Integer z_of(const Partition& lambda) {
  Integer z = 1;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const auto mult = static_cast<unsigned long>(j - i);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
    z *= power * factorial(mult);
    i = j;
  }
  return z;
}

Integer standard_tableaux_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  }
  return factorial(static_cast<unsigned long>(lambda.weight())) / hooks;
}

Integer multinomial(const Composition& c) {
  Integer out = factorial(static_cast<unsigned long>(c.weight()));
  for (int p : c.parts()) out /= factorial(static_cast<unsigned long>(p));
  return out;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  int a = 0, b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    a += i < lambda.length() ? lambda[i] : 0;
    b += i < mu.length() ? mu[i] : 0;
    if (a < b) return false;
  }
  return true;
}

}  // namespace trivdiag::symcore
