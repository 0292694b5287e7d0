#include "tspan/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace tspan {

namespace {

struct Sweep {
  std::size_t n = 0;
  std::vector<std::uint32_t> bit;  // edge bit position, in label order
  std::vector<Edge> edge;          // edge, in label order

  // Labels at a vertex are distinct, so two contacts sharing a vertex never
  // share a time and a plain reached-set sweep is exact.
  bool connected(std::uint32_t mask) const {
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    for (std::size_t s = 0; s < n; ++s) {
      std::uint32_t reached = std::uint32_t{1} << s;
      for (std::size_t i = 0; i < edge.size() && reached != all; ++i) {
        if (!(mask >> bit[i] & 1U)) continue;
        const std::uint32_t a = std::uint32_t{1} << edge[i].u;
        const std::uint32_t b = std::uint32_t{1} << edge[i].v;
        if (reached & a) {
          reached |= b;
        } else if (reached & b) {
          reached |= a;
        }
      }
      if (reached != all) return false;
    }
    return true;
  }
};

}  // namespace

MinSpannerResult min_spanner(const SimpleClique& c, std::size_t max_n) {
  const std::size_t n = c.n();
  if (n > max_n || n > 7) {
    throw Error(Errc::kInstanceTooLarge, "exhaustive search limited to n <= " +
                                             std::to_string(std::min<std::size_t>(max_n, 7)));
  }
  const std::vector<Edge> edges = c.edges();
  const std::size_t m = edges.size();

  Sweep sweep;
  sweep.n = n;
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return c.label(edges[a]) < c.label(edges[b]); });
  for (std::uint32_t i : order) {
    sweep.bit.push_back(i);
    sweep.edge.push_back(edges[i]);
  }

  MinSpannerResult res;
  res.witness.instance_hash = c.content_hash();
  for (std::size_t size = 0; size <= m; ++size) {
    if (size == 0) {
      ++res.explored;
      if (sweep.connected(0)) return res;
      continue;
    }
    // Gosper's hack walks all masks with `size` bits in increasing order.
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t end = std::uint64_t{1} << m;
    while (mask < end) {
      ++res.explored;
      if (sweep.connected(static_cast<std::uint32_t>(mask))) {
        std::set<Edge> chosen;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask >> i & 1U) chosen.insert(edges[i]);
        }
        res.size = size;
        res.witness = make_spanner(c.content_hash(), chosen);
        return res;
      }
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  throw Error(Errc::kInvalidArgument, "instance is not temporally connected");
}

}  // namespace tspan
