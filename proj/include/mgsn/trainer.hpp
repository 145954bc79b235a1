#pragma once

#include "mgsn/gin.hpp"
#include "mgsn/kernels.hpp"
#include "mgsn/metrics.hpp"
#include "mgsn/objectives.hpp"
#include "mgsn/pooling.hpp"
#include "mgsn/tudataset.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mgsn {

inline constexpr int kReportSchemaVersion = 1;

// Which view streams feed the model.
//   all: original, per-relation and fused streams (full model)
//   phi / r / f: a single stream in isolation
enum class Streams { kAll, kOriginal, kRelation, kFused };
Streams parse_streams(const std::string& s);
std::string to_string(Streams s);

struct RunConfig {
  // dataset
  std::string dataset_dir;
  std::string dataset_name;
  std::optional<DatasetSpec> synthetic;  // takes precedence over dir/name
  int max_degree = 64;

  int k = 0;  // 0: number of classes in the dataset
  int batch_size = 128;
  int epochs = 50;
  double learning_rate = 1e-3;
  std::uint64_t seed = 0;
  int runs = 10;
  int early_stop_patience = 10;
  double early_stop_min_delta = 1e-5;

  int encoder_depth = 3;
  int hidden_dim = 32;
  // Parameter initialization seed; unset means `seed`.
  std::optional<std::uint64_t> encoder_seed;

  double pooling_temperature = 1.0;
  bool learnable_coefficients = false;
  bool aware_pooling = true;  // false: mean pooling (module ablation)

  KernelKind kernel_kind = KernelKind::kDynamic;
  int wl_iterations = 3;
  FeatureMap kernel_map = FeatureMap::kIdentity;
  double rbf_gamma = 0.0;  // 0: 1 / hidden_dim
  int kernel_top_k = 10;
  double kernel_mix_weight = 0.0;  // share of the WL kernel mixed into a dynamic target

  LossWeights weights;
  int refresh_period = 5;
  bool view_align = true;

  std::vector<RelationKind> relations{RelationKind::kAttribute, RelationKind::kEdge};
  int relation_top_k = 5;
  Streams streams = Streams::kAll;

  KMeansOptions kmeans;

  void validate() const;
};

// Flat dotted-key JSON. Nested objects are flattened ("a": {"b": 1} is
// "a.b": 1). Unknown keys raise ConfigError naming the key.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);
// Applies one "key=value" override; value is parsed as JSON when possible and
// taken as a string otherwise.
void apply_override(nlohmann::json& flat, const std::string& assignment);
nlohmann::json flatten(const nlohmann::json& j);
// FNV-1a over the canonical JSON of the config, as 16 hex digits.
std::string config_hash(const RunConfig& c);

GraphDataset load_dataset(const RunConfig& c);

struct EpochLoss {
  double cluster = 0.0;
  double contrastive = 0.0;
  double similarity = 0.0;
  double total = 0.0;
};

struct TrainResult {
  Matrix embeddings;  // n_graphs x hidden_dim, full dataset
  Partition partition;
  MetricReport metrics;
  std::vector<EpochLoss> loss_trace;
  bool stopped_early = false;
  double wall_seconds = 0.0;
};

TrainResult train(const RunConfig& c, const GraphDataset& dataset);
TrainResult train(const RunConfig& c);

struct AggregateReport {
  std::vector<TrainResult> runs;
  std::vector<std::uint64_t> seeds;
  MetricReport mean;
  MetricReport std;
  bool std_defined = false;
  std::string config_hash;
};

// Runs seeds seed, seed + 1, ..., seed + runs - 1.
AggregateReport run_experiment(const RunConfig& c, const GraphDataset& dataset);

struct AblationCell {
  std::string name;
  nlohmann::json overrides;
  AggregateReport report;
};

// mode: sub-relation | module | kernel | loss-grid
std::vector<nlohmann::json> ablation_overrides(const std::string& mode);
std::vector<AblationCell> ablation(const RunConfig& c, const GraphDataset& dataset, const std::string& mode);

nlohmann::json run_report_json(const RunConfig& c, const TrainResult& r, std::uint64_t seed);
nlohmann::json aggregate_report_json(const RunConfig& c, const AggregateReport& a);
std::string ablation_csv(const std::vector<AblationCell>& cells);

}  // namespace mgsn
