#pragma once

#include "mgsn/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mgsn {

struct KMeansOptions {
  int restarts = 10;
  int max_iters = 100;
};

struct KMeansResult {
  Partition partition;
  Matrix centroids;  // k x d
  double inertia = 0.0;
  int best_restart = 0;
};

// k-means++ seeding and Lloyd iterations, best inertia over restarts (ties go
// to the lowest restart). Restarts run concurrently; restart r draws from
// Rng::derive(seed, r), so the result does not depend on the thread count.
KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, const KMeansOptions& options = {});

// Nearest centroid per row, ties to the lowest index. Rows are split across
// threads.
std::vector<int> assign_to_centroids(const Matrix& points, const Matrix& centroids);

namespace serial {
std::vector<int> assign_to_centroids(const Matrix& points, const Matrix& centroids);
KMeansResult kmeans(const Matrix& points, int k, std::uint64_t seed, const KMeansOptions& options = {});
}  // namespace serial

// rows: predicted clusters, cols: true classes.
Matrix contingency_table(std::span<const int> pred, std::span<const int> truth);

// Maximum-weight perfect matching on a square matrix (rectangular input is
// zero-padded). Returns the column matched to each row.
std::vector<int> hungarian_max(const Matrix& weights);

double accuracy(std::span<const int> pred, std::span<const int> truth);
double nmi(std::span<const int> pred, std::span<const int> truth);
double ari(std::span<const int> pred, std::span<const int> truth);
double macro_f1(std::span<const int> pred, std::span<const int> truth);

inline double accuracy(const Partition& p, std::span<const int> truth) { return accuracy(p.assignments, truth); }

struct MetricReport {
  double acc = 0.0;
  double nmi = 0.0;
  double ari = 0.0;  // can be slightly negative for worse-than-chance partitions
  double f1 = 0.0;
  int k = 1;
  std::uint64_t seed = 0;
};

MetricReport evaluate(const Partition& pred, std::span<const int> truth, std::uint64_t seed = 0);

}  // namespace mgsn
