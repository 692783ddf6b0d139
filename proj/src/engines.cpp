#include "lozenge/engines.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <unordered_map>

#include "lozenge/errors.hpp"

namespace lozenge {

namespace {

long env_or(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  long parsed = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || parsed <= 0) return fallback;
  return parsed;
}

struct Partner {
  std::size_t index;
  Rational weight;
};

// Cells in row-major order with, for each cell, its adjacent cells in the
// region in increasing index order.
struct IndexedRegion {
  std::vector<TriCell> cells;
  std::vector<std::vector<Partner>> partners;

  explicit IndexedRegion(const Region& r) : cells(r.cells()), partners(cells.size()) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      for (const auto& n : neighbors(cells[k])) {
        auto it = std::lower_bound(cells.begin(), cells.end(), n);
        if (it == cells.end() || !(*it == n)) continue;
        partners[k].push_back({static_cast<std::size_t>(it - cells.begin()), r.weight(Lozenge::of(cells[k], n))});
      }
      std::sort(partners[k].begin(), partners[k].end(), [](const Partner& x, const Partner& y) { return x.index < y.index; });
    }
  }
};

class BruteForce {
 public:
  explicit BruteForce(const IndexedRegion& g) : g_(g), covered_(g.cells.size(), 0) {}

  Rational run() { return search(0); }

 private:
  Rational search(std::size_t from) {
    while (from < covered_.size() && covered_[from]) ++from;
    if (from == covered_.size()) return Rational(1);
    Rational total;
    covered_[from] = 1;
    for (const auto& p : g_.partners[from]) {
      if (covered_[p.index]) continue;
      covered_[p.index] = 1;
      total += p.weight * search(from + 1);
      covered_[p.index] = 0;
    }
    covered_[from] = 0;
    return total;
  }

  const IndexedRegion& g_;
  std::vector<char> covered_;
};

class Enumerator {
 public:
  Enumerator(const IndexedRegion& g, std::size_t limit) : g_(g), limit_(limit), covered_(g.cells.size(), 0) {}

  std::vector<Tiling> run() {
    search(0);
    return std::move(out_);
  }

 private:
  void search(std::size_t from) {
    while (from < covered_.size() && covered_[from]) ++from;
    if (from == covered_.size()) {
      if (out_.size() == limit_)
        throw LimitExceeded("tiling enumeration limit " + std::to_string(limit_) + " exceeded");
      Tiling t{current_};
      std::sort(t.lozenges.begin(), t.lozenges.end());
      out_.push_back(std::move(t));
      return;
    }
    covered_[from] = 1;
    for (const auto& p : g_.partners[from]) {
      if (covered_[p.index]) continue;
      covered_[p.index] = 1;
      current_.push_back(Lozenge::of(g_.cells[from], g_.cells[p.index]));
      search(from + 1);
      current_.pop_back();
      covered_[p.index] = 0;
    }
    covered_[from] = 0;
  }

  const IndexedRegion& g_;
  std::size_t limit_;
  std::vector<char> covered_;
  std::vector<Lozenge> current_;
  std::vector<Tiling> out_;
};

}  // namespace

EngineLimits limits_from_env() {
  EngineLimits l;
  l.brute_cells = static_cast<std::size_t>(env_or("TILINGS_BRUTE_LIMIT", static_cast<long>(l.brute_cells)));
  l.dp_width = static_cast<int>(env_or("TILINGS_DP_WIDTH", l.dp_width));
  return l;
}

int sweep_width(const Region& r) {
  std::map<int, std::pair<int, int>> extent;  // row -> doubled x range of cell corners
  for (const auto& c : r.cells()) {
    int x = centroid_x2(c);
    auto [it, fresh] = extent.try_emplace(c.row, x - 1, x + 1);
    if (!fresh) {
      it->second.first = std::min(it->second.first, x - 1);
      it->second.second = std::max(it->second.second, x + 1);
    }
  }
  int width = 0;
  for (const auto& [row, range] : extent) width = std::max(width, (range.second - range.first) / 2);
  return width;
}

Rational count_bruteforce(const Region& r, const EngineLimits& limits) {
  if (r.size() > limits.brute_cells)
    throw LimitExceeded("brute-force limit of " + std::to_string(limits.brute_cells) + " cells exceeded (region has " +
                        std::to_string(r.size()) + "); raise TILINGS_BRUTE_LIMIT");
  if (!is_balanced(r)) return Rational(0);
  IndexedRegion g(r);
  return BruteForce(g).run();
}

Rational count_dp(const Region& r, const EngineLimits& limits) {
  if (int w = sweep_width(r); w > limits.dp_width)
    throw LimitExceeded("DP sweep width limit of " + std::to_string(limits.dp_width) + " exceeded (region width " +
                        std::to_string(w) + "); raise TILINGS_DP_WIDTH");
  if (!is_balanced(r)) return Rational(0);
  if (r.empty()) return Rational(1);

  IndexedRegion g(r);
  const std::size_t n = g.cells.size();

  // Scale all weights by the lcm of their denominators so the sweep runs in
  // integers; every tiling uses exactly n/2 lozenges.
  BigInt scale = 1;
  for (const auto& [loz, w] : r.weights()) scale = lcm(scale, w.denominator());
  struct Step {
    unsigned offset;
    BigInt factor;
  };
  std::vector<std::vector<Step>> forward(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& p : g.partners[k]) {
      if (p.index <= k) continue;
      if (p.index - k >= 64)
        throw LimitExceeded("DP frontier does not fit a 64-bit profile; region too wide for the sweep");
      forward[k].push_back({static_cast<unsigned>(p.index - k), (p.weight * Rational(scale)).to_integer()});
    }
  }

  // Bit d of a profile: cell k+d is already covered.
  std::unordered_map<std::uint64_t, BigInt> cur{{0, BigInt(1)}}, next;
  for (std::size_t k = 0; k < n; ++k) {
    next.clear();
    next.reserve(cur.size() * 2);
    for (auto& [mask, value] : cur) {
      if (mask & 1u) {
        next[mask >> 1] += value;
        continue;
      }
      for (const auto& step : forward[k]) {
        const std::uint64_t bit = std::uint64_t{1} << step.offset;
        if (mask & bit) continue;
        BigInt& slot = next[(mask | bit) >> 1];
        if (step.factor == 1)
          slot += value;
        else
          slot += value * step.factor;
      }
    }
    std::swap(cur, next);
    if (cur.empty()) return Rational(0);
  }
  auto it = cur.find(0);
  if (it == cur.end()) return Rational(0);
  BigInt denom;
  mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), n / 2);
  return Rational(it->second, denom);
}

Rational tiling_weight(const Region& r, const Tiling& t) {
  Rational w(1);
  for (const auto& l : t.lozenges) w *= r.weight(l);
  return w;
}

std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit) {
  if (!is_balanced(r)) return {};
  IndexedRegion g(r);
  auto out = Enumerator(g, limit).run();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lozenge
