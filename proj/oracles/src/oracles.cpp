#include "hopfkit/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hopfkit::oracle {

namespace {

constexpr int kMaxHeight = 200;

std::vector<int> symmetrizer(const CartanMatrix& a) {
  const std::size_t n = a.size();
  // d_i as num_i / den_i, fixed along a spanning forest of the diagram
  std::vector<long> num(n, 0), den(n, 1);
  for (std::size_t root = 0; root < n; ++root) {
    if (num[root] != 0) continue;
    num[root] = 1;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || a[i][j] == 0) continue;
        if (a[j][i] == 0) throw std::invalid_argument("Cartan matrix is not symmetrizable");
        // d_j = d_i a_ij / a_ji
        long nj = num[i] * a[i][j];
        long dj = den[i] * a[j][i];
        if (dj < 0) {
          nj = -nj;
          dj = -dj;
        }
        long g = std::gcd(nj, dj);
        nj /= g;
        dj /= g;
        if (num[j] == 0) {
          num[j] = nj;
          den[j] = dj;
          stack.push_back(j);
        } else if (num[j] * dj != nj * den[j]) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  long lcm = 1;
  for (long x : den) lcm = std::lcm(lcm, x);
  std::vector<int> d(n);
  long g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = static_cast<int>(num[i] * (lcm / den[i]));
    if (d[i] <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
    g = std::gcd(g, static_cast<long>(d[i]));
  }
  for (auto& x : d) x = static_cast<int>(x / g);
  return d;
}

}  // namespace

long RootSystem::form(const IntVector& x, const IntVector& y) const {
  long s = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += static_cast<long>(x[i]) * y[j] * d[i] * cartan[i][j];
  return s;
}

RootSystem root_system(const CartanMatrix& cartan) {
  RootSystem rs;
  rs.cartan = cartan;
  const std::size_t n = cartan.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i].size() != n || cartan[i][i] != 2) throw std::invalid_argument("not a generalized Cartan matrix");
  }
  rs.d = symmetrizer(cartan);
  std::set<IntVector> roots;
  std::vector<IntVector> level;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    level.push_back(e);
  }
  // α_i-strings through β: β + α_i is a root iff p − <β, α_i^∨> > 0
  for (int h = 1; !level.empty(); ++h) {
    if (h > kMaxHeight) throw std::invalid_argument("Cartan matrix is not of finite type");
    for (const auto& b : level) {
      roots.insert(b);
      rs.positive.push_back(b);
    }
    std::set<IntVector> next;
    for (const auto& b : level) {
      for (std::size_t i = 0; i < n; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += b[j] * cartan[i][j];
        int p = 0;
        IntVector down = b;
        while (down[i] > 0) {
          --down[i];
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          IntVector up = b;
          ++up[i];
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
  }
  return rs;
}

std::uint64_t kostant_partition(const RootSystem& rs, const IntVector& alpha) {
  std::map<std::pair<IntVector, std::size_t>, std::uint64_t> memo;
  std::function<std::uint64_t(const IntVector&, std::size_t)> count = [&](const IntVector& rest, std::size_t k) -> std::uint64_t {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) return 1;
    if (k == rs.positive.size()) return 0;
    auto key = std::make_pair(rest, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    IntVector cur = rest;
    const IntVector& beta = rs.positive[k];
    while (true) {
      total += count(cur, k + 1);
      bool ok = true;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        cur[i] -= beta[i];
        ok = ok && cur[i] >= 0;
      }
      if (!ok) break;
    }
    memo[key] = total;
    return total;
  };
  for (int x : alpha) {
    if (x < 0) return 0;
  }
  return count(alpha, 0);
}

std::uint64_t weyl_dim(const RootSystem& rs, const IntVector& m) {
  // Π_β (λ+ρ, β) / (ρ, β), with (ω_i, α_j) = δ_ij d_i
  __extension__ using u128 = unsigned __int128;
  u128 num = 1, den = 1;
  for (const auto& beta : rs.positive) {
    long top = 0, bottom = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      top += static_cast<long>(beta[i]) * (m[i] + 1) * rs.d[i];
      bottom += static_cast<long>(beta[i]) * rs.d[i];
    }
    num *= static_cast<unsigned long>(top);
    den *= static_cast<unsigned long>(bottom);
    u128 a = num, b = den;
    while (b != 0) {
      u128 t = a % b;
      a = b;
      b = t;
    }
    num /= a;
    den /= a;
  }
  if (den != 1) throw std::logic_error("Weyl dimension is not an integer");
  return static_cast<std::uint64_t>(num);
}

std::map<IntVector, std::uint64_t> freudenthal(const RootSystem& rs, const IntVector& m) {
  const std::size_t n = rs.rank();
  // (λ+ρ, α_i) = (m_i + 1) d_i and (λ, α_i) = m_i d_i
  auto lambda_rho_dot = [&](const IntVector& g) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long>(g[i]) * (m[i] + 1) * rs.d[i];
    return s;
  };
  auto weight_dot = [&](const IntVector& g, const IntVector& beta) {
    // (λ − Σ γ_i α_i, β)
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long>(beta[i]) * m[i] * rs.d[i];
    return s - rs.form(g, beta);
  };
  std::map<IntVector, std::uint64_t> mult;
  mult[IntVector(n, 0)] = 1;
  std::function<void(std::size_t, int, IntVector&, std::vector<IntVector>&)> compositions =
      [&](std::size_t k, int left, IntVector& cur, std::vector<IntVector>& out) {
        if (k + 1 == n) {
          cur[k] = left;
          out.push_back(cur);
          return;
        }
        for (int x = 0; x <= left; ++x) {
          cur[k] = x;
          compositions(k + 1, left - x, cur, out);
        }
      };
  for (int h = 1; h <= kMaxHeight; ++h) {
    std::vector<IntVector> level;
    IntVector cur(n, 0);
    compositions(0, h, cur, level);
    bool any = false;
    for (const auto& g : level) {
      const long denominator = 2 * lambda_rho_dot(g) - rs.form(g, g);
      if (denominator == 0) continue;
      long numerator = 0;
      for (const auto& beta : rs.positive) {
        IntVector up = g;
        while (true) {
          bool inside = true;
          for (std::size_t i = 0; i < n; ++i) {
            up[i] -= beta[i];
            inside = inside && up[i] >= 0;
          }
          if (!inside) break;
          auto it = mult.find(up);
          if (it == mult.end()) continue;
          numerator += 2 * static_cast<long>(it->second) * weight_dot(up, beta);
        }
      }
      if (numerator == 0) continue;
      if (numerator % denominator != 0 || numerator / denominator < 0)
        throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
      mult[g] = static_cast<std::uint64_t>(numerator / denominator);
      any = true;
    }
    if (!any) break;
  }
  return mult;
}

std::map<IntVector, std::uint64_t> tensor_decomposition(const RootSystem& rs, const IntVector& m1, const IntVector& m2) {
  const std::size_t n = rs.rank();
  // weights as γ below the top weight λ1 + λ2
  std::map<IntVector, long> character;
  const auto a = freudenthal(rs, m1);
  const auto b = freudenthal(rs, m2);
  for (const auto& [ga, ka] : a)
    for (const auto& [gb, kb] : b) {
      IntVector g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = ga[i] + gb[i];
      character[g] += static_cast<long>(ka * kb);
    }
  IntVector top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = m1[i] + m2[i];
  std::map<IntVector, std::uint64_t> out;
  while (true) {
    std::erase_if(character, [](const auto& kv) { return kv.second == 0; });
    if (character.empty()) break;
    // a remaining weight of least height is a highest weight of some summand
    auto best = character.begin();
    int best_height = -1;
    for (auto it = character.begin(); it != character.end(); ++it) {
      int height = 0;
      for (int x : it->first) height += x;
      if (best_height < 0 || height < best_height) {
        best = it;
        best_height = height;
      }
    }
    if (best->second < 0) throw std::logic_error("tensor character has a negative multiplicity");
    const IntVector gamma = best->first;
    const long count = best->second;
    IntVector mu(n);
    for (std::size_t i = 0; i < n; ++i) {
      long v = top[i];
      for (std::size_t j = 0; j < n; ++j) v -= static_cast<long>(gamma[j]) * rs.cartan[i][j];
      if (v < 0) throw std::logic_error("highest remaining weight is not dominant");
      mu[i] = static_cast<int>(v);
    }
    out[mu] += static_cast<std::uint64_t>(count);
    for (const auto& [g, k] : freudenthal(rs, mu)) {
      IntVector shifted(n);
      for (std::size_t i = 0; i < n; ++i) shifted[i] = gamma[i] + g[i];
      character[shifted] -= count * static_cast<long>(k);
    }
  }
  return out;
}

std::vector<int> clebsch_gordan_a1(int m, int n) {
  std::vector<int> out;
  for (int k = m + n; k >= std::abs(m - n); k -= 2) out.push_back(k);
  return out;
}

}  // namespace hopfkit::oracle
