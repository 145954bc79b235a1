#pragma once

#include "mgsn/graph.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mgsn {

struct ParseOptions {
  // Width cap for the degree one-hot used when a dataset has neither node
  // attributes nor node labels.
  int max_degree = 64;
};

// Reads the TUDataset text layout `<dir>/<name>_*.txt`.
//
// Node attributes become the leading columns of Graph::node_attributes; node
// labels are one-hot encoded after them (or alone when there are no
// attributes); with neither, degrees are one-hot encoded. Edge attributes and
// edge labels are combined the same way into Graph::edge_features.
GraphDataset parse_tudataset(const std::filesystem::path& dir, const std::string& name,
                             const ParseOptions& options = {});

// Writes the dataset so that parse_tudataset reproduces it. Only the raw
// attribute columns are written; derived encodings are rebuilt on parse.
void write_tudataset(const GraphDataset& dataset, const std::filesystem::path& dir);

struct FamilySpec {
  std::string kind;  // cycle | complete | path | star
  int count = 0;
  int min_size = 1;
  int max_size = 1;
};

struct DatasetSpec {
  std::string name = "synthetic";
  std::vector<FamilySpec> families;
  int attribute_dim = 1;
  std::vector<std::vector<double>> class_means;  // one per family
  double noise_std = 0.0;
  std::uint64_t seed = 0;
};

void validate_spec(const DatasetSpec& spec);
DatasetSpec dataset_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DatasetSpec& spec);

// Family f becomes class f. Attributes are the class mean plus N(0, noise^2)
// noise drawn from xoshiro256** (see rng.hpp), so output is identical across
// platforms for a given seed.
GraphDataset generate_synthetic(const DatasetSpec& spec);

}  // namespace mgsn
