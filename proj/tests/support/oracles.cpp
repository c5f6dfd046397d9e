#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace oracle {

Table random_perm(int n, std::mt19937_64& rng) {
  Table t(std::size_t{1} << n);
  std::iota(t.begin(), t.end(), 0u);
  for (std::size_t i = t.size() - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(t[i], t[pick(rng)]);
  }
  return t;
}

Table invert(const Table& p) {
  Table inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[p[x]] = static_cast<std::uint32_t>(x);
  return inv;
}

Table compose(const Table& a, const Table& b) {
  Table out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

int popcount_dot(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) & 1; }

std::set<std::uint64_t> brute_span(const std::vector<std::uint64_t>& vectors) {
  std::set<std::uint64_t> out;
  const std::size_t m = vectors.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) v ^= vectors[i];
    }
    out.insert(v);
  }
  return out;
}

int brute_rank(const std::vector<std::uint64_t>& vectors) {
  return std::bit_width(brute_span(vectors).size()) - 1;
}

std::set<std::uint64_t> brute_orthogonal(const std::vector<std::uint64_t>& vectors, int n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    if (std::all_of(vectors.begin(), vectors.end(), [&](std::uint64_t v) { return popcount_dot(v, y) == 0; })) {
      out.insert(y);
    }
  }
  return out;
}

std::vector<std::uint32_t> periods_of(const Table& f, int n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool ok = true;
    for (std::uint32_t x = 0; x < (1u << n) && ok; ++x) ok = f[x] == f[x ^ s];
    if (ok) out.push_back(s);
  }
  return out;
}

Table random_periodic(int n, std::uint32_t s, std::mt19937_64& rng) {
  const Table labels = random_perm(n, rng);
  Table f(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < f.size(); ++x) f[x] = labels[s ? std::min(x, x ^ s) : x];
  return f;
}

std::vector<double> dense_simon_distribution(const Table& f, int n) {
  using C = std::complex<double>;
  const std::size_t dim = std::size_t{1} << (2 * n);
  std::vector<C> psi(dim, 0.0);
  psi[0] = 1.0;
  const double h = 1.0 / std::sqrt(2.0);
  auto hadamard_qubit = [&](int q) {
    std::vector<C> next(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t bit = i >> q & 1;
      const std::size_t i0 = i & ~(std::size_t{1} << q);
      const std::size_t i1 = i0 | (std::size_t{1} << q);
      next[i0] += h * psi[i];
      next[i1] += (bit ? -h : h) * psi[i];
    }
    psi = next;
  };
  // input register in the low n qubits, output in the high n
  for (int q = 0; q < n; ++q) hadamard_qubit(q);
  std::vector<C> queried(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t x = i & ((std::size_t{1} << n) - 1);
    const std::size_t y = i >> n;
    queried[x | ((y ^ f[x]) << n)] += psi[i];
  }
  psi = queried;
  for (int q = 0; q < n; ++q) hadamard_qubit(q);
  std::vector<double> dist(std::size_t{1} << n, 0.0);
  for (std::size_t i = 0; i < dim; ++i) dist[i & ((std::size_t{1} << n) - 1)] += std::norm(psi[i]);
  return dist;
}

double dense_grover_success(int m, const std::vector<bool>& marked, int t) {
  const std::size_t N = std::size_t{1} << m;
  std::vector<double> a(N, 1.0 / std::sqrt(static_cast<double>(N)));
  for (int i = 0; i < t; ++i) {
    for (std::size_t x = 0; x < N; ++x) {
      if (marked[x]) a[x] = -a[x];
    }
    const double mean = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(N);
    for (auto& v : a) v = 2 * mean - v;
  }
  double p = 0;
  for (std::size_t x = 0; x < N; ++x) {
    if (marked[x]) p += a[x] * a[x];
  }
  return p;
}

double enumerate_rank_deficiency(const std::vector<std::vector<double>>& dists, int u) {
  const std::size_t c = dists.size();
  const std::size_t size = dists.empty() ? 1 : dists[0].size();
  std::vector<std::size_t> idx(c, 0);
  double total = 0;
  while (true) {
    double p = 1;
    std::vector<std::uint64_t> rows;
    for (std::size_t i = 0; i < c; ++i) {
      p *= dists[i][idx[i]];
      rows.push_back(idx[i]);
    }
    if (p > 0 && brute_rank(rows) < u) total += p;
    std::size_t pos = 0;
    while (pos < c && ++idx[pos] == size) idx[pos++] = 0;
    if (pos == c) break;
  }
  return total;
}

double chi_square(const std::vector<double>& observed, const std::vector<double>& expected) {
  double stat = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] > 0) stat += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
  }
  return stat;
}

double chi_square_critical(int dof) {
  const double z = 3.72;
  const double k = dof;
  const double a = 2.0 / (9.0 * k);
  return k * std::pow(1 - a + z * std::sqrt(a), 3);
}

std::uint32_t em(const Table& pi, std::uint32_t k1, std::uint32_t k2, std::uint32_t x) { return pi[x ^ k1] ^ k2; }

std::uint32_t efx(const Table& e1, const Table& e2, std::uint32_t k1, std::uint32_t k2, std::uint32_t x) {
  return e2[k2 ^ e1[k1 ^ x]];
}

}  // namespace oracle
