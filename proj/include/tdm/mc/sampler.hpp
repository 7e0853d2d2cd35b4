#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "tdm/mc/jacobi.hpp"
#include "tdm/symmetry.hpp"

namespace tdm::mc {

inline constexpr int kBlockSize = 256;

/// Recorded in every MC output so runs can be reproduced.
inline std::string rng_spec() {
  return "std::mt19937_64 seeded per block by std::seed_seq{seed_lo32, seed_hi32, block}; "
         "std::normal_distribution<double> (libstdc++); block size " +
         std::to_string(kBlockSize);
}

struct MCEstimate {
  SymmetryClass beta;
  int n;
  int k;
  long samples;
  double mean;
  double stderr_;
  std::uint64_t seed;
  int shards;
};

/// Running count, mean and sum of squared deviations; merged with the pairwise update.
struct Moments {
  long count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }
  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    long total = count + o.count;
    double d = o.mean - mean;
    mean += d * static_cast<double>(o.count) / static_cast<double>(total);
    m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) / static_cast<double>(total);
    count = total;
  }
  double stderr_of_mean() const {
    if (count < 2) return 0;
    return std::sqrt(m2 / static_cast<double>(count - 1) / static_cast<double>(count));
  }
};

/// Eigenvalues of W = X X^dagger, X of size n x m with i.i.d. entries,
/// real N(0,1) for beta = 1 or complex with real and imaginary parts N(0,1/2) for beta = 2.
inline std::vector<double> sample_wishart_eigenvalues(int beta, int n, int m, std::mt19937_64& rng,
                                                      std::normal_distribution<double>& normal) {
  if (beta == 1) {
    std::vector<double> x(static_cast<std::size_t>(n) * m);
    for (double& v : x) v = normal(rng);
    DenseMatrix<double> w(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0;
        for (int l = 0; l < m; ++l) s += x[i * m + l] * x[j * m + l];
        w(i, j) = s;
        w(j, i) = s;
      }
    return eigvals_symmetric(w);
  }
  const double h = std::sqrt(0.5);
  std::vector<std::complex<double>> x(static_cast<std::size_t>(n) * m);
  for (auto& v : x) {
    double re = normal(rng);
    double im = normal(rng);
    v = {h * re, h * im};
  }
  DenseMatrix<std::complex<double>> w(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::complex<double> s = 0;
      for (int l = 0; l < m; ++l) s += x[i * m + l] * std::conj(x[j * m + l]);
      w(i, j) = s;
      w(j, i) = std::conj(s);
    }
  for (int i = 0; i < n; ++i) w(i, i) = std::real(w(i, i));
  return eigvals_symmetric(w);
}

/// Estimates scale * E[Tr W^p] for every p in `powers`. Samples are split into fixed
/// blocks with their own seeded streams and merged in block order, so the result does
/// not depend on the shard count.
inline std::vector<Moments> sample_trace_powers(int beta, int n, int m, const std::vector<int>& powers,
                                                const std::vector<double>& scale, long samples,
                                                std::uint64_t seed, int shards) {
  if (samples < 1) throw Error("samples must be positive");
  if (shards < 1) throw Error("shards must be positive");
  const long blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<std::vector<Moments>> per_block(static_cast<std::size_t>(blocks),
                                              std::vector<Moments>(powers.size()));
  auto run_block = [&](long b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(b)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    const long count = std::min<long>(kBlockSize, samples - b * kBlockSize);
    for (long s = 0; s < count; ++s) {
      std::vector<double> ev = sample_wishart_eigenvalues(beta, n, m, rng, normal);
      for (std::size_t i = 0; i < powers.size(); ++i) {
        double tr = 0;
        for (double l : ev) tr += std::pow(l, powers[i]);
        per_block[b][i].add(scale[i] * tr);
      }
    }
  };
  const int workers = static_cast<int>(std::min<long>(shards, blocks));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (long b = w; b < blocks; b += workers) run_block(b);
    });
  }
  for (long b = 0; b < blocks; b += workers) run_block(b);
  for (auto& t : pool) t.join();
  std::vector<Moments> total(powers.size());
  for (const auto& blk : per_block)
    for (std::size_t i = 0; i < powers.size(); ++i) total[i].merge(blk[i]);
  return total;
}

/// tau_k = N^(k-1) E[Tr W^-k] with W of size N x 2N (beta = 2) or N x (2N+1) (beta = 1).
inline std::vector<MCEstimate> sample_delay_moments(SymmetryClass beta, int n, const std::vector<int>& ks,
                                                    long samples, std::uint64_t seed, int shards = 1) {
  if (n < 1) throw Error("N must be positive");
  std::vector<int> powers;
  std::vector<double> scale;
  for (int k : ks) {
    if (k < 1) throw Error("moment index must be positive");
    bool finite = beta.beta() == 2 ? n > k : n > 2 * k;
    if (!finite) throw Error("divergent moment: N = " + std::to_string(n) + ", k = " + std::to_string(k));
    powers.push_back(-k);
    scale.push_back(std::pow(static_cast<double>(n), k - 1));
  }
  const int m = beta.beta() == 2 ? 2 * n : 2 * n + 1;
  auto mom = sample_trace_powers(beta.beta(), n, m, powers, scale, samples, seed, shards);
  std::vector<MCEstimate> out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    out.push_back({beta, n, ks[i], samples, mom[i].mean, mom[i].stderr_of_mean(), seed, shards});
  }
  return out;
}

inline MCEstimate sample_delay_moment(SymmetryClass beta, int n, int k, long samples, std::uint64_t seed,
                                      int shards = 1) {
  return sample_delay_moments(beta, n, {k}, samples, seed, shards).front();
}

/// E[Tr W^k] for W = X X^dagger with X of size N x (N + alpha), alpha a nonnegative integer.
inline Moments sample_wishart_trace(SymmetryClass beta, int n, int alpha, int k, long samples, std::uint64_t seed,
                                    int shards = 1) {
  if (n < 1 || alpha < 0) throw Error("need N >= 1 and integer alpha >= 0");
  return sample_trace_powers(beta.beta(), n, n + alpha, {k}, {1.0}, samples, seed, shards).front();
}

}  // namespace tdm::mc
