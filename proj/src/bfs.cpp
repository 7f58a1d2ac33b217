// Level-synchronous breadth-first enumeration with deterministic indexing.
// Frontier expansion is the parallel kernel and works on flat code matrices;
// deduplication goes through a single membership map between levels, and new
// vertices are sorted by serialization, so the index never depends on
// scheduling or worker count.

#include "cayley/bfs.hpp"

#include <algorithm>
#include <stdexcept>

#include "codemat.hpp"

namespace cayley::sl {

using detail::CodeMat;

BfsResult bfs_enumerate_mats(const std::vector<Mat>& connection,
                             const Mat& start, std::uint64_t cap, Exec exec) {
  BfsResult res;
  if (connection.empty()) throw std::invalid_argument("empty connection set");
  res.dim = start.dim();
  res.field = start.field_ptr();
  const gf::Field& F = *res.field;
  const int dim = res.dim;

  std::vector<CodeMat> gens(connection.size());
  for (std::size_t t = 0; t < connection.size(); ++t) {
    const std::string bytes = connection[t].serialized();
    detail::decode_into(F, dim, bytes.data(), gens[t]);
  }

  std::string key = start.serialized();
  res.index.emplace(key, 0);
  res.elements.push_back(key);

  std::vector<std::uint32_t> frontier{0};
  [[maybe_unused]] const bool par = exec == Exec::parallel;
  const std::size_t g = gens.size();

  while (!frontier.empty()) {
    const std::size_t fn = frontier.size();
    std::vector<std::string> products(fn * g);
#pragma omp parallel if (par)
    {
      CodeMat m, prod;
#pragma omp for schedule(static)
      for (std::int64_t fi = 0; fi < static_cast<std::int64_t>(fn); ++fi) {
        const std::size_t f = static_cast<std::size_t>(fi);
        detail::decode_into(F, dim, res.elements[frontier[f]].data(), m);
        for (std::size_t t = 0; t < g; ++t) {
          detail::mul_into(F, m, gens[t], prod);
          detail::serialize_into(F, prod, products[f * g + t]);
        }
      }
    }
    // serialized membership structure: one thread owns the map
    std::vector<std::string> fresh;
    for (auto& s : products) {
      if (res.index.find(s) == res.index.end()) {
        res.index.emplace(s, 0);  // placeholder; real id assigned below
        fresh.push_back(std::move(s));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    frontier.clear();
    for (auto& s : fresh) {
      const auto id = static_cast<std::uint32_t>(res.elements.size());
      res.index[s] = id;
      res.elements.push_back(std::move(s));
      frontier.push_back(id);
    }
    if (res.elements.size() > cap) {
      res.complete = false;
      res.count = res.elements.size();
      return res;
    }
  }
  res.complete = true;
  res.count = res.elements.size();
  return res;
}

BfsResult bfs_enumerate(const GenSet& gens, std::uint64_t cap, Exec exec) {
  const Mat id = Mat::identity(gens.field, gens.l + 1);
  return bfs_enumerate_mats(gens.connection, id, cap, exec);
}

}  // namespace cayley::sl
