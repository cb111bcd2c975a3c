#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hforge/degeneration.hpp"
#include "hforge/perm_group.hpp"
#include "hforge/random.hpp"
#include "hforge/search.hpp"

namespace hforge
{

Certificate certify_simple_odd_witness(CoverShape const &shape,
                                       HurwitzTuple const &t)
{
  Certificate cert;
  cert.rule = "simple_odd_witness";

  std::size_t d = shape.degree();
  unsigned b3 = three_cycle_branch_count(shape);

  bool degree_ok = t.degree() == d;
  cert.add("degree", degree_ok,
           "d=" + std::to_string(t.degree()) + " expected " + std::to_string(d));

  auto valid = validate(t);
  cert.add("valid", valid.positive());

  bool count_ok = t.size() == b3 + 1u;
  cert.add("entry_count", count_ok,
           std::to_string(t.size()) + " entries, expected b3+1=" +
             std::to_string(b3 + 1u));

  bool infinity_ok = degree_ok && t.infinity_index() == t.size() - 1u &&
                     t.infinity_entry() == canonical_infinity_permutation(shape);
  cert.add("canonical_infinity", infinity_ok);

  bool simple = t.size() > 0u;
  for (std::size_t i = 0u; i + 1u < t.size(); ++i)
    simple = simple && is_three_cycle(t[i]);
  cert.add("three_cycles", simple);

  bool even = is_even_tuple(t);
  cert.add("even", even);

  bool all_ok = degree_ok && valid.positive() && count_ok && infinity_ok &&
                simple && even;

  if (all_ok) {
    std::size_t g = genus(t);
    bool genus_ok = g == shape.genus();
    cert.add("genus", genus_ok, "g=" + std::to_string(g));

    auto group = monodromy_group(t);
    auto lemma = lemma1_certify(group);
    cert.add("lemma1", lemma.positive());

    bool order_ok = group.order() == alternating_order(d);
    cert.add("order", order_ok, group.order().str());

    Certificate obstruction;
    try {
      obstruction = decomposability_obstruction(t);
      cert.add("indecomposable", obstruction.positive(), obstruction.rule);
    } catch (std::invalid_argument const &e) {
      cert.add("indecomposable", false, e.what());
    }

    cert.evidence["genus"] = g;
    cert.evidence["order"] = group.order().str();
    cert.evidence["alternating_order"] = alternating_order(d).str();
    cert.evidence["three_cycle"] = lemma.evidence["three_cycle"];
    if (obstruction.evidence.contains("gcd"))
      cert.evidence["gcd"] = obstruction.evidence["gcd"];

    all_ok = genus_ok && lemma.positive() && order_ok && obstruction.positive();
  }

  cert.evidence["shape"] = to_json(shape);
  cert.evidence["b3"] = b3;

  cert.verdict = all_ok ? Verdict::monodromy_is_Ad : Verdict::inconclusive;
  return cert;
}

namespace
{

struct ChunkResult
{
  std::optional<HurwitzTuple> tuple;
  std::uint64_t trials = 0u;
};

class RejectionSampler
{
public:
  explicit RejectionSampler(CoverShape const &shape)
  : _shape(shape),
    _d(shape.degree()),
    _b3(three_cycle_branch_count(shape)),
    _infinity(canonical_infinity_permutation(shape)),
    _target(_infinity.inverse())
  {}

  ChunkResult run(std::uint64_t seed, std::uint64_t trials) const
  {
    Rng rng(seed);
    ChunkResult res;

    // inverse of the running product of the sampled 3-cycles
    std::vector<std::uint8_t> inv(_d);
    std::vector<std::array<std::uint8_t, 3>> sampled(_b3 - 1u);
    auto target = _target.table();

    for (std::uint64_t trial = 0u; trial < trials; ++trial) {
      res.trials = trial + 1u;

      std::iota(inv.begin(), inv.end(), std::uint8_t{0});

      for (auto &tc : sampled) {
        auto a = static_cast<std::uint8_t>(rng.below(_d));
        std::uint8_t b, c;
        do {
          b = static_cast<std::uint8_t>(rng.below(_d));
        } while (b == a);
        do {
          c = static_cast<std::uint8_t>(rng.below(_d));
        } while (c == a || c == b);
        tc = {a, b, c};

        // prod := prod * (a b c)
        std::uint8_t xa = inv[a], xb = inv[b], xc = inv[c];
        inv[b] = xa;
        inv[c] = xb;
        inv[a] = xc;
      }

      // forced entry: prod^{-1} * infinity^{-1}
      unsigned moved = 0u;
      for (std::size_t x = 0u; x < _d && moved <= 3u; ++x) {
        if (target[inv[x]] != x)
          ++moved;
      }
      if (moved != 3u)
        continue;

      std::vector<Permutation> entries;
      for (auto const &tc : sampled)
        entries.push_back(Permutation::from_cycles(
          _d, {{tc[0] + 1u, tc[1] + 1u, tc[2] + 1u}}));

      std::vector<Point> forced(_d);
      for (std::size_t x = 0u; x < _d; ++x)
        forced[x] = target[inv[x]] + 1u;
      entries.push_back(Permutation::from_images(forced));
      entries.push_back(_infinity);

      HurwitzTuple t(_d, std::move(entries), _b3);
      if (!validate(t).positive())
        continue;
      if (!lemma1_certify(monodromy_group(t)).positive())
        continue;

      res.tuple = std::move(t);
      return res;
    }

    return res;
  }

private:
  CoverShape _shape;
  std::size_t _d;
  std::size_t _b3;
  Permutation _infinity;
  Permutation _target;
};

std::optional<std::pair<std::uint64_t, ChunkResult>>
run_chunks(RejectionSampler const &sampler, SearchOptions const &options,
           std::uint64_t &chunks_total)
{
  std::uint64_t chunks =
    (options.budget + search_chunk_size - 1u) / search_chunk_size;
  chunks_total = chunks;

  auto trials_in = [&](std::uint64_t chunk) {
    return std::min(search_chunk_size, options.budget - chunk * search_chunk_size);
  };

  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> next{0u};
  std::atomic<std::uint64_t> best{none};
  std::optional<ChunkResult> best_result;
  std::mutex mutex;

  auto worker = [&] {
    for (;;) {
      std::uint64_t chunk = next.fetch_add(1u);
      if (chunk >= chunks || chunk > best.load())
        return;

      auto res = sampler.run(derive_seed(options.seed, chunk), trials_in(chunk));
      if (!res.tuple)
        continue;

      std::lock_guard<std::mutex> lock(mutex);
      if (chunk < best.load()) {
        best.store(chunk);
        best_result = std::move(res);
      }
    }
  };

  unsigned threads = std::max(1u, options.threads);
  if (threads == 1u) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0u; i < threads; ++i)
      pool.emplace_back(worker);
    for (auto &th : pool)
      th.join();
  }

  if (best.load() == none)
    return std::nullopt;
  return std::make_pair(best.load(), std::move(*best_result));
}

// Connected components of the supports of a list of permutations.
std::vector<std::size_t> component_labels(std::size_t d,
                                          std::vector<Permutation> const &gens)
{
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  for (auto const &g : gens) {
    auto table = g.table();
    for (std::size_t x = 0u; x < d; ++x)
      parent[find(x)] = find(table[x]);
  }

  std::vector<std::size_t> res(d);
  for (std::size_t x = 0u; x < d; ++x)
    res[x] = find(x);
  return res;
}

std::vector<Permutation> all_three_cycles(std::size_t d)
{
  std::vector<Permutation> res;
  for (Point a = 1u; a <= d; ++a) {
    for (Point b = a + 1u; b <= d; ++b) {
      for (Point c = b + 1u; c <= d; ++c) {
        res.push_back(Permutation::from_cycles(d, {{a, b, c}}));
        res.push_back(Permutation::from_cycles(d, {{a, c, b}}));
      }
    }
  }
  return res;
}

std::optional<HurwitzTuple> skeleton_attempt(CoverShape const &shape,
                                             std::vector<Permutation> const &odd_candidates,
                                             Rng &rng)
{
  std::size_t d = shape.degree();
  auto infinity = canonical_infinity_permutation(shape);
  Permutation cur = infinity.inverse();

  unsigned extra = shape.k() + shape.genus() - 1u;

  std::vector<Permutation> suffix;
  if (extra % 2u == 1u) {
    if (odd_candidates.empty())
      return std::nullopt;
    auto const &tau = odd_candidates[rng.below(odd_candidates.size())];
    cur *= tau.inverse();
    suffix.push_back(tau);
    --extra;
  }

  std::vector<Permutation> chain;
  for (auto const &cycle : cur.cycles()) {
    if (cycle.size() < 3u)
      continue;
    auto factors = odd_cycle_factorization(d, cycle);
    chain.insert(chain.end(), factors.begin(), factors.end());
  }

  std::vector<Permutation> pairs;
  for (unsigned p = 0u; p < extra / 2u; ++p) {
    std::vector<Permutation> gens = chain;
    gens.insert(gens.end(), suffix.begin(), suffix.end());
    gens.insert(gens.end(), pairs.begin(), pairs.end());
    auto labels = component_labels(d, gens);

    std::vector<std::size_t> roots(labels);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    // pick up to three distinct components, then fill with random points
    for (std::size_t i = roots.size(); i > 1u; --i)
      std::swap(roots[i - 1u], roots[rng.below(i)]);

    std::vector<Point> points;
    for (std::size_t i = 0u; i < std::min<std::size_t>(3u, roots.size()); ++i) {
      std::vector<Point> members;
      for (std::size_t x = 0u; x < d; ++x) {
        if (labels[x] == roots[i])
          members.push_back(static_cast<Point>(x + 1u));
      }
      points.push_back(members[rng.below(members.size())]);
    }
    while (points.size() < 3u) {
      auto x = static_cast<Point>(rng.below(d) + 1u);
      if (std::find(points.begin(), points.end(), x) == points.end())
        points.push_back(x);
    }

    auto tau = Permutation::from_cycles(d, {{points[0], points[1], points[2]}});
    pairs.push_back(tau);
    pairs.push_back(tau.inverse());
  }

  std::vector<Permutation> entries = pairs;
  entries.insert(entries.end(), chain.begin(), chain.end());
  entries.insert(entries.end(), suffix.begin(), suffix.end());
  std::size_t inf = entries.size();
  entries.push_back(infinity);

  HurwitzTuple t(d, std::move(entries), inf);
  if (!certify_simple_odd_witness(shape, t).positive())
    return std::nullopt;
  return t;
}

} // namespace

std::optional<HurwitzTuple> build_skeleton_witness(CoverShape const &shape,
                                                   std::uint64_t seed,
                                                   std::uint64_t attempts,
                                                   std::uint64_t scramble)
{
  std::size_t d = shape.degree();
  if (d < 3u)
    return std::nullopt;

  auto pi = canonical_infinity_permutation(shape).inverse();
  auto pi_cycles = cycle_type(pi).cycle_count();

  // Candidates for the single linking 3-cycle tau: pi * tau^{-1} keeps the
  // cycle count and all cycles odd, so its chain has the same length and
  // tau adds exactly one branch point. Prefer tau meeting two blocks.
  std::vector<Permutation> odd_candidates, linking;
  if ((shape.k() + shape.genus() - 1u) % 2u == 1u) {
    std::vector<std::size_t> block(d);
    std::size_t start = 0u, b = 0u;
    for (unsigned len : shape.pole_orders()) {
      for (std::size_t x = start; x < start + len; ++x)
        block[x] = b;
      start += len;
      ++b;
    }

    for (auto const &tau : all_three_cycles(d)) {
      auto rest = pi * tau.inverse();
      if (cycle_type(rest).cycle_count() != pi_cycles || !is_all_odd_cycles(rest))
        continue;
      odd_candidates.push_back(tau);

      auto cs = tau.cycles().front();
      if (block[cs[0] - 1u] != block[cs[1] - 1u] ||
          block[cs[0] - 1u] != block[cs[2] - 1u])
        linking.push_back(tau);
    }
    if (!linking.empty())
      odd_candidates = std::move(linking);
  }

  Rng rng(seed);
  for (std::uint64_t attempt = 0u; attempt < attempts; ++attempt) {
    auto t = skeleton_attempt(shape, odd_candidates, rng);
    if (!t)
      continue;

    // Braid moves among the 3-cycles keep the entry over infinity last.
    std::size_t b3 = t->size() - 1u;
    if (b3 >= 2u) {
      for (std::uint64_t s = 0u; s < scramble; ++s)
        t = braid_move(*t, rng.below(b3 - 1u));
    }
    return t;
  }
  return std::nullopt;
}

SearchResult search_simple_odd_tuple(CoverShape const &shape,
                                     SearchOptions const &options)
{
  auto feasibility = check_prop4_hypotheses(shape, options.allow_genus_zero);
  if (!feasibility.positive())
    throw std::invalid_argument("infeasible shape " + shape.str() +
                                "; refusing to search");
  if (shape.degree() > PermGroup::max_degree)
    throw std::invalid_argument("shape degree exceeds the group engine limit");

  SearchResult res;
  unsigned b3 = three_cycle_branch_count(shape);

  if (b3 >= 1u && shape.degree() >= 3u && options.budget > 0u) {
    RejectionSampler sampler(shape);
    std::uint64_t chunks = 0u;
    auto found = run_chunks(sampler, options, chunks);
    if (found) {
      auto &[chunk, chunk_res] = *found;
      res.tuple = std::move(chunk_res.tuple);
      res.stats.method = "rejection";
      res.stats.winning_chunk = chunk;
      res.stats.chunks = chunk + 1u;
      res.stats.trials = chunk * search_chunk_size + chunk_res.trials;
    } else {
      res.stats.chunks = chunks;
      res.stats.trials = options.budget;
    }
  }

  if (!res.tuple) {
    std::uint64_t skeleton_seed =
      derive_seed(options.seed, std::numeric_limits<std::uint64_t>::max());
    res.tuple = build_skeleton_witness(shape, skeleton_seed,
                                       options.skeleton_attempts,
                                       options.braid_scramble);
    res.stats.skeleton_attempts = options.skeleton_attempts;
    if (res.tuple)
      res.stats.method = "skeleton";
  }

  if (res.tuple) {
    res.certificate = certify_simple_odd_witness(shape, *res.tuple);
  } else {
    res.certificate.rule = "simple_odd_witness";
    res.certificate.verdict = Verdict::inconclusive;
    res.certificate.add("witness_found", false,
                        "budget exhausted; absence is not a proof");
  }

  auto &ev = res.certificate.evidence;
  ev["seed"] = options.seed;
  ev["budget"] = options.budget;
  ev["method"] = res.stats.method;
  ev["trials"] = res.stats.trials;
  ev["chunk_size"] = search_chunk_size;
  if (res.stats.winning_chunk)
    ev["winning_chunk"] = *res.stats.winning_chunk;
  ev["allow_genus_zero"] = options.allow_genus_zero;

  return res;
}

} // namespace hforge
