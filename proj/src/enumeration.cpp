#include "nurikabe/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace nurikabe {

constexpr int kHardSquareLimit = 63;

std::string to_string(const Constraint& c) {
  std::ostringstream out;
  auto list = [&out](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  };
  out << "water=";
  list(c.forced_water);
  out << " land=";
  list(c.forced_land);
  return out.str();
}

std::uint64_t squares_to_mask(const std::vector<int>& squares, int n_squares) {
  std::uint64_t m = 0;
  for (int sq : squares) {
    if (sq < 1 || sq > n_squares || sq > 64) throw RuleError("square " + std::to_string(sq) + " out of range");
    m |= std::uint64_t{1} << (sq - 1);
  }
  return m;
}

std::vector<int> mask_to_squares(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(__builtin_ctzll(mask) + 1);
  return out;
}

ValidityKernel::ValidityKernel(const SquareTiledSurface& surface, Rule rule) : n_(surface.size()) {
  if (n_ > 64) throw CapExceeded("surface has more than 64 squares");
  all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  neighbors_.assign(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : surface.adjacency().edges) {
    neighbors_[static_cast<std::size_t>(u - 1)] |= std::uint64_t{1} << (v - 1);
    neighbors_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (u - 1);
  }
  std::vector<std::uint64_t> masks;
  for (const VertexOrbit& o : surface.orbits()) {
    if (!o.interior) continue;
    if (rule == Rule::square && o.square_degree() != 4) continue;
    masks.push_back(o.square_mask());
  }
  // Keep only minimal masks: a superset can never fire unless its subset does.
  std::sort(masks.begin(), masks.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
              return pa != pb ? pa < pb : a < b;
            });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (std::uint64_t m : masks) {
    bool redundant = std::any_of(whirlpools_.begin(), whirlpools_.end(),
                                 [m](std::uint64_t kept) { return (kept & m) == kept; });
    if (!redundant) whirlpools_.push_back(m);
  }
}

std::uint64_t ValidityKernel::component(std::uint64_t mask, std::uint64_t seed) const noexcept {
  seed &= mask;
  if (seed == 0) return 0;
  std::uint64_t reached = seed & (~seed + 1);
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    do {
      next |= neighbors_[static_cast<std::size_t>(__builtin_ctzll(frontier))];
      frontier &= frontier - 1;
    } while (frontier != 0);
    frontier = next & mask & ~reached;
    reached |= frontier;
  }
  return reached;
}

namespace {

// Maps the low bits of `index` onto the set bits of `mask`, lowest first.
std::uint64_t deposit(std::uint64_t index, std::uint64_t mask) {
  std::uint64_t r = 0;
  for (std::uint64_t m = mask; m != 0 && index != 0; m &= m - 1, index >>= 1)
    if (index & 1U) r |= m & (~m + 1);
  return r;
}

struct Plan {
  std::uint64_t free_mask = 0;
  std::uint64_t forced_water = 0;
  std::uint64_t total = 0;  // number of candidate colorings
  bool empty = false;       // contradictory constraint
};

Plan make_plan(const SquareTiledSurface& surface, const Constraint& constraint, const EnumerationOptions& options) {
  const int n = surface.size();
  if (n > kHardSquareLimit)
    throw CapExceeded("surface has " + std::to_string(n) + " squares; enumeration supports at most " +
                      std::to_string(kHardSquareLimit));
  if (n > options.size_cap && !options.cap_override)
    throw CapExceeded("surface has " + std::to_string(n) + " squares, above the cap of " +
                      std::to_string(options.size_cap) + " (override required)");
  Plan p;
  p.forced_water = squares_to_mask(constraint.forced_water, n);
  std::uint64_t forced_land = squares_to_mask(constraint.forced_land, n);
  if ((p.forced_water & forced_land) != 0) throw RuleError("constraint forces a square to be both water and land");
  std::uint64_t all = (std::uint64_t{1} << n) - 1;
  p.free_mask = all & ~p.forced_water & ~forced_land;
  p.total = std::uint64_t{1} << __builtin_popcountll(p.free_mask);
  return p;
}

struct ChunkResult {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> colorings;
};

template <bool Listing>
std::vector<ChunkResult> run_chunks(const ValidityKernel& kernel, const Plan& plan, const EnumerationOptions& options) {
  const unsigned workers = std::max(1U, options.workers);
  std::uint64_t n_chunks = workers == 1 ? 1 : std::uint64_t{workers} * std::max(1U, options.chunks_per_worker);
  n_chunks = std::min<std::uint64_t>(n_chunks, plan.total);
  std::vector<ChunkResult> results(n_chunks);

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> listed{0};
  std::atomic<bool> overflowed{false};

  const std::uint64_t base = plan.total / n_chunks, extra = plan.total % n_chunks;
  auto chunk_start = [&](std::uint64_t c) { return base * c + std::min(c, extra); };

  auto work = [&] {
    for (;;) {
      std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= n_chunks || overflowed.load(std::memory_order_relaxed)) return;
      const std::uint64_t lo = chunk_start(c), hi = chunk_start(c + 1);
      ChunkResult& out = results[c];
      std::uint64_t sub = deposit(lo, plan.free_mask);
      for (std::uint64_t i = lo; i < hi; ++i) {
        const std::uint64_t water = sub | plan.forced_water;
        if (kernel.valid(water)) {
          ++out.count;
          if constexpr (Listing) {
            if (listed.fetch_add(1, std::memory_order_relaxed) >= options.listing_cap) {
              overflowed = true;
              return;
            }
            out.colorings.push_back(water);
          }
        }
        sub = ((sub | ~plan.free_mask) + 1) & plan.free_mask;
      }
    }
  };

  if (workers == 1 || n_chunks <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::uint64_t>(workers, n_chunks); ++w) pool.emplace_back(work);
  }
  if (overflowed) throw CapExceeded("more than " + std::to_string(options.listing_cap) + " valid colorings to list");
  return results;
}

EnumerationResult run(const SquareTiledSurface& surface, Rule rule, const Constraint& constraint,
                      const EnumerationOptions& options, bool listing) {
  Plan plan = make_plan(surface, constraint, options);
  ValidityKernel kernel(surface, rule);
  EnumerationResult result;
  result.surface = surface.name();
  result.rule = rule;
  result.constraint = constraint;

  auto chunks = listing ? run_chunks<true>(kernel, plan, options) : run_chunks<false>(kernel, plan, options);
  std::vector<std::uint64_t> all;
  for (auto& c : chunks) {
    if (__builtin_add_overflow(result.count, c.count, &result.count)) throw std::overflow_error("count overflow");
    if (listing) all.insert(all.end(), c.colorings.begin(), c.colorings.end());
  }
  if (listing) result.colorings = std::move(all);
  return result;
}

}  // namespace

EnumerationResult count_valid(const SquareTiledSurface& surface, Rule rule, const Constraint& constraint,
                              const EnumerationOptions& options) {
  return run(surface, rule, constraint, options, false);
}

EnumerationResult enumerate_valid(const SquareTiledSurface& surface, Rule rule, const Constraint& constraint,
                                  const EnumerationOptions& options) {
  return run(surface, rule, constraint, options, true);
}

RefinedCounts refined_rectangle_counts(int k, const EnumerationOptions& options) {
  if (k < 1) throw SurfaceError("k must be at least 1");
  const SquareTiledSurface rect = build_rectangle(2, k);
  // Rectangles are rule-independent; the square rule is used throughout.
  auto count = [&](std::vector<int> water, std::vector<int> land) {
    return count_valid(rect, Rule::square, {std::move(water), std::move(land)}, options).count;
  };
  const int top = k;       // column k, row 1
  const int bottom = 2 * k;  // column k, row 2
  RefinedCounts r;
  r.k = k;
  r.total = count({}, {});
  r.last0 = count({}, {top, bottom});
  r.last1 = count({top}, {bottom}) + count({bottom}, {top});
  r.last2 = count({top, bottom}, {});
  if (k >= 2) {
    const int first_top = 1;
    const int first_bottom = k + 1;
    r.first2_last1 = count({first_top, first_bottom, top}, {bottom}) + count({first_top, first_bottom, bottom}, {top});
    r.first2_last2 = count({first_top, first_bottom, top, bottom}, {});
  }
  return r;
}

boost::rational<std::int64_t> validity_density(const SquareTiledSurface& surface, Rule rule,
                                               const EnumerationOptions& options) {
  auto result = count_valid(surface, rule, {}, options);
  if (surface.size() > 62) throw CapExceeded("density denominator exceeds 64-bit range");
  return {static_cast<std::int64_t>(result.count), std::int64_t{1} << surface.size()};
}

}  // namespace nurikabe
