#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/exec.hpp"
#include "cayley/slgen.hpp"

namespace cayley::sl {

// Closure of the identity under right multiplication by the connection set.
// Vertices are indexed level by level; inside a level new elements are
// sorted by their canonical serialization, so the index is identical across
// runs, thread counts and schedules.
struct BfsResult {
  bool complete = false;   // false when the cap stopped the walk
  std::uint64_t count = 0;  // group order when complete, else elements seen
  int dim = 0;
  std::shared_ptr<const gf::Field> field;
  std::vector<std::string> elements;                 // by vertex index
  std::unordered_map<std::string, std::uint32_t> index;

  Mat element_at(std::uint32_t v) const {
    return Mat::deserialize(field, dim, elements[v].data());
  }
};

BfsResult bfs_enumerate(const GenSet& gens, std::uint64_t cap,
                        Exec exec = Exec::parallel);

// Same walk over an arbitrary inverse-closed generator list (used to build
// the rank-l subgroup before embedding).
BfsResult bfs_enumerate_mats(const std::vector<Mat>& connection,
                             const Mat& start, std::uint64_t cap, Exec exec);

}  // namespace cayley::sl
