#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bjorling/problem_io.hpp"

namespace bjorling {

/// A built-in example: a problem file whose "reference" (or "relation") key
/// holds the known closed form.
struct CorpusEntry {
  std::string id;
  std::string description;
  Json problem;
};

const std::vector<CorpusEntry>& corpus();

/// nullptr for unknown ids.
const CorpusEntry* find_example(std::string_view id);

}  // namespace bjorling
