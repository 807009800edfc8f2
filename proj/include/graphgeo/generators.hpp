#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphgeo/graph.hpp"

namespace graphgeo {

struct GeneratorSpec {
  std::string name;
  std::vector<std::int64_t> params;
  /// Used by the random families only; defaults to 0 when absent.
  std::optional<std::uint64_t> seed;
};

struct GeneratorInfo {
  std::string name;
  std::vector<std::string> param_names;
  bool random = false;
  std::string description;
  /// A valid parameter sample, used for smoke tests and examples.
  std::vector<std::int64_t> example_params;
};

/// All registered families in a fixed order.
const std::vector<GeneratorInfo>& generator_registry();

/// Builds the graph described by spec. Unknown names, wrong arity and
/// out-of-bounds parameters raise InputError.
Graph generate(const GeneratorSpec& spec);

}  // namespace graphgeo
