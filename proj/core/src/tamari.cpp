#include "trivdiag/tamari.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "trivdiag/parallel.hpp"

namespace trivdiag::tamari {

namespace {

using Bitset = std::vector<std::uint64_t>;

bool test_bit(const Bitset& bits, std::size_t i) { return (bits[i / 64] >> (i % 64)) & 1u; }
void set_bit(Bitset& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

DyckPath::DyckPath(int r, std::vector<int> a) : r_(r), a_(std::move(a)) {
  if (r_ < 1) throw std::invalid_argument("slope parameter r must be >= 1");
  if (a_.empty()) throw std::invalid_argument("path height must be >= 1");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] < 0 || a_[i] > r_ * static_cast<int>(i)) {
      throw std::invalid_argument("entry a_" + std::to_string(i + 1) + " violates 0 <= a_i <= r(i-1)");
    }
    if (i > 0 && a_[i] < a_[i - 1]) throw std::invalid_argument("path entries must be weakly increasing");
  }
}

DyckPath DyckPath::parse(int r, const std::string& text) {
  std::vector<int> a;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto token = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      a.push_back(std::stoi(token));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad path string: " + text);
      a.push_back(ch - '0');
    }
  }
  return DyckPath(r, std::move(a));
}

DyckPath DyckPath::top(int n, int r) { return DyckPath(r, std::vector<int>(static_cast<std::size_t>(n), 0)); }

DyckPath DyckPath::bottom(int n, int r) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = r * i;
  return DyckPath(r, std::move(a));
}

long DyckPath::sum() const { return std::accumulate(a_.begin(), a_.end(), 0L); }

std::string DyckPath::to_string() const {
  const bool digits = std::all_of(a_.begin(), a_.end(), [](int v) { return v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!digits && i) out += ",";
    out += std::to_string(a_[i]);
  }
  return out;
}

std::vector<DyckPath> enumerate_paths(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("enumerate_paths needs n >= 1, r >= 1");
  std::vector<DyckPath> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.emplace_back(r, a);
      return;
    }
    for (int v = a[static_cast<std::size_t>(i - 1)]; v <= r * i; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

Integer fuss_catalan(int n, int r) { return binomial((r + 1) * n, n) / (r * n + 1); }

symcore::Composition co_path(const DyckPath& path) {
  std::vector<int> runs;
  const auto& a = path.a();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0 && a[i] == a[i - 1]) {
      ++runs.back();
    } else {
      runs.push_back(1);
    }
  }
  return symcore::Composition(std::move(runs));
}

long area(const DyckPath& path) {
  const long n = path.n();
  return path.r() * n * (n - 1) / 2 - path.sum();
}

int primitive_end(const DyckPath& path, int i) {
  const int n = path.n();
  if (i < 0 || i >= n) throw std::out_of_range("primitive_end index");
  const int r = path.r();
  int k = i;
  while (k + 1 < n && path[static_cast<std::size_t>(k + 1)] - path[static_cast<std::size_t>(i)] < r * (k + 1 - i)) ++k;
  return k;
}

std::vector<DyckPath> up_covers(const DyckPath& path) {
  std::vector<DyckPath> out;
  const auto& a = path.a();
  for (int i = 1; i < path.n(); ++i) {
    if (a[static_cast<std::size_t>(i - 1)] >= a[static_cast<std::size_t>(i)]) continue;
    const int k = primitive_end(path, i);
    std::vector<int> b = a;
    for (int j = i; j <= k; ++j) --b[static_cast<std::size_t>(j)];
    out.emplace_back(path.r(), std::move(b));
  }
  return out;
}

std::int64_t IntervalPoly::at(std::int64_t q) const {
  std::int64_t out = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * q + *it;
  return out;
}

QPoly3 IntervalPoly::in_variable(int index) const {
  QPoly3 out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    Exponent3 e{0, 0, 0};
    e[static_cast<std::size_t>(index)] = static_cast<int>(d);
    out += QPoly3::monomial(e, Rational(static_cast<long>(coeffs[d])));
  }
  return out;
}

std::string IntervalPoly::to_string() const {
  std::string out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string c = std::to_string(coeffs[d]);
    if (d == 0) {
      out += c;
    } else {
      out += (coeffs[d] == 1 ? "" : c + "*") + std::string("q") + (d > 1 ? "^" + std::to_string(d) : "");
    }
  }
  return out.empty() ? "0" : out;
}

TamariPoset TamariPoset::build(int n, int r) {
  TamariPoset poset;
  poset.n_ = n;
  poset.r_ = r;
  poset.elements_ = enumerate_paths(n, r);
  poset.up_.resize(poset.elements_.size());
  for (std::size_t i = 0; i < poset.elements_.size(); ++i) {
    for (const auto& cover : tamari::up_covers(poset.elements_[i])) {
      poset.up_[i].push_back(*poset.index_of(cover));
    }
  }
  poset.finish();
  return poset;
}

TamariPoset TamariPoset::from_covers(int n, int r,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  TamariPoset poset;
  poset.n_ = n;
  poset.r_ = r;
  poset.elements_ = enumerate_paths(n, r);
  poset.up_.resize(poset.elements_.size());
  for (const auto& [lower, upper] : covers) {
    if (lower >= poset.size() || upper >= poset.size()) throw std::out_of_range("cover index");
    if (poset.elements_[upper].sum() >= poset.elements_[lower].sum()) {
      throw std::invalid_argument("cover does not decrease the entry sum");
    }
    poset.up_[lower].push_back(upper);
  }
  poset.finish();
  return poset;
}

void TamariPoset::finish() {
  const std::size_t count = elements_.size();
  down_.assign(count, {});
  for (auto& ups : up_) std::sort(ups.begin(), ups.end());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j : up_[i]) down_[j].push_back(i);
  }
  by_sum_.resize(count);
  std::iota(by_sum_.begin(), by_sum_.end(), std::size_t{0});
  std::stable_sort(by_sum_.begin(), by_sum_.end(),
                   [&](std::size_t a, std::size_t b) { return elements_[a].sum() < elements_[b].sum(); });
  // Lower covers have strictly larger sums, so descending-sum order is topological.
  const std::size_t words = (count + 63) / 64;
  downsets_.assign(count, Bitset(words, 0));
  for (auto it = by_sum_.rbegin(); it != by_sum_.rend(); ++it) {
    const std::size_t b = *it;
    set_bit(downsets_[b], b);
    for (std::size_t lower : down_[b]) {
      for (std::size_t w = 0; w < words; ++w) downsets_[b][w] |= downsets_[lower][w];
    }
  }
  top_ = *index_of(DyckPath::top(n_, r_));
  bottom_ = *index_of(DyckPath::bottom(n_, r_));
}

std::optional<std::size_t> TamariPoset::index_of(const DyckPath& path) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), path);
  if (it == elements_.end() || !(*it == path)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> TamariPoset::cover_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < up_.size(); ++i) {
    for (std::size_t j : up_[i]) out.emplace_back(i, j);
  }
  return out;
}

bool TamariPoset::leq(std::size_t lower, std::size_t upper) const {
  return test_bit(downsets_.at(upper), lower);
}

std::vector<std::size_t> TamariPoset::downset(std::size_t upper) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (test_bit(downsets_[upper], i)) out.push_back(i);
  }
  return out;
}

std::size_t TamariPoset::interval_count(std::size_t beta) const {
  std::size_t count = 0;
  for (auto word : downsets_.at(beta)) count += static_cast<std::size_t>(__builtin_popcountll(word));
  return count;
}

namespace {

// dist[alpha] = d(alpha, beta) for alpha <= beta, -1 elsewhere.
std::vector<int> chain_lengths_to(const TamariPoset& poset, const std::vector<std::size_t>& by_sum,
                                  std::size_t beta) {
  std::vector<int> dist(poset.size(), -1);
  dist[beta] = 0;
  for (std::size_t alpha : by_sum) {
    if (alpha == beta || !poset.leq(alpha, beta)) continue;
    int best = -1;
    for (std::size_t up : poset.up_covers(alpha)) {
      if (dist[up] >= 0) best = std::max(best, dist[up] + 1);
    }
    dist[alpha] = best;
  }
  return dist;
}

}  // namespace

int TamariPoset::longest_chain_length(std::size_t lower, std::size_t upper) const {
  if (!leq(lower, upper)) {
    throw NotComparable("not comparable: " + elements_[lower].to_string() + " is not below " +
                        elements_[upper].to_string());
  }
  return chain_lengths_to(*this, by_sum_, upper)[lower];
}

IntervalPoly TamariPoset::interval_poly(std::size_t beta) const {
  IntervalPoly out;
  for (int d : chain_lengths_to(*this, by_sum_, beta)) {
    if (d < 0) continue;
    if (out.coeffs.size() <= static_cast<std::size_t>(d)) out.coeffs.resize(static_cast<std::size_t>(d) + 1, 0);
    ++out.coeffs[static_cast<std::size_t>(d)];
  }
  return out;
}

std::vector<IntervalPoly> TamariPoset::all_interval_polys(unsigned jobs) const {
  std::vector<IntervalPoly> out(size());
  parallel_for(size(), jobs, [&](std::size_t i) { out[i] = interval_poly(i); });
  return out;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n, int r) {
  return dir / ("tamari_n" + std::to_string(n) + "_r" + std::to_string(r) + ".json");
}

void save_cache(const TamariPoset& poset, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["n"] = poset.n();
  doc["r"] = poset.r();
  doc["covers"] = nlohmann::json::array();
  for (const auto& [lower, upper] : poset.cover_pairs()) doc["covers"].push_back({lower, upper});
  const auto path = cache_file(dir, poset.n(), poset.r());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<TamariPoset> load_cache(const std::filesystem::path& dir, int n, int r) {
  const auto path = cache_file(dir, n, r);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("schema_version").get<int>() != 1 || doc.at("n").get<int>() != n || doc.at("r").get<int>() != r) {
      return std::nullopt;
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (const auto& pair : doc.at("covers")) {
      covers.emplace_back(pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>());
    }
    return TamariPoset::from_covers(n, r, covers);
  } catch (const std::exception&) {
    return std::nullopt;  // stale or corrupt cache: rebuild
  }
}

TamariPoset build_or_load(int n, int r, const std::optional<std::filesystem::path>& dir) {
  if (dir) {
    if (auto cached = load_cache(*dir, n, r)) return std::move(*cached);
  }
  auto poset = TamariPoset::build(n, r);
  if (dir) save_cache(poset, *dir);
  return poset;
}

}  // namespace trivdiag::tamari
