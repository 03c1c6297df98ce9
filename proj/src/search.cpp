#include "ulrich/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ulrich::search {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void finish_report(SearchReport& rep, std::set<BlockedPartition>&& found) {
  rep.partitions.assign(found.begin(), found.end());
  rep.symmetric_partner.clear();
  if (rep.type.reversed() != rep.type) return;
  for (const auto& p : rep.partitions) {
    const auto s = canonicalize(symmetric(p));
    const auto it = std::lower_bound(rep.partitions.begin(), rep.partitions.end(), s);
    if (it == rep.partitions.end() || *it != s) {
      // The class list is closed under symmetry whenever the search was exhaustive.
      rep.symmetric_partner.push_back(rep.partitions.size());
    } else {
      rep.symmetric_partner.push_back(static_cast<std::size_t>(it - rep.partitions.begin()));
    }
  }
}

struct Budget {
  Clock::time_point deadline = Clock::time_point::max();
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
};

// Snapshot of a partial partition.
struct State {
  std::vector<std::vector<Entry>> placed;
  std::vector<std::uint8_t> covered;
  int remaining = 0;
  std::int64_t frontier = 1;
};

class Engine {
 public:
  Engine(const FlagType& type, Budget& budget)
      : type_(type), blocks_(type.blocks()), n_dim_(type.dimension()), budget_(budget) {
    for (int i = 0; i < blocks_; ++i) {
      vel_.push_back(type.steps() - i);
      cap_.push_back(type.length(i));
    }
  }

  void load(const State& s) {
    placed_ = s.placed;
    covered_ = s.covered;
    remaining_ = s.remaining;
  }

  State empty_state() const {
    State s;
    s.placed.assign(static_cast<std::size_t>(blocks_), {});
    s.covered.assign(static_cast<std::size_t>(n_dim_) + 2, 0);
    s.covered[0] = 1;
    s.remaining = type_.total();
    return s;
  }

  // Children of the empty state: the pair meeting at t = 1 sits at position 0 then.
  std::vector<State> roots() {
    std::vector<State> out;
    for (int i = 0; i + 1 < blocks_; ++i) {
      load(empty_state());
      const std::array<std::pair<int, Entry>, 2> news{{{i, vel_[static_cast<std::size_t>(i)]},
                                                       {i + 1, vel_[static_cast<std::size_t>(i + 1)]}}};
      if (!place(news, 1)) continue;
      State s;
      s.placed = placed_;
      s.covered = covered_;
      s.remaining = remaining_;
      s.frontier = next_uncovered(1);
      out.push_back(std::move(s));
    }
    return out;
  }

  // Expands `s` by one branching level. Completed partitions go to results().
  std::vector<State> children(const State& s) {
    std::vector<State> out;
    load(s);
    collect_ = &out;
    collect_depth_ = 1;
    explore(s.frontier, 0);
    collect_ = nullptr;
    return out;
  }

  void run(const State& s) {
    load(s);
    collect_ = nullptr;
    if (remaining_ == 0) {
      if (s.frontier == n_dim_ + 1) emit();
      return;
    }
    explore(s.frontier, 0);
  }

  void set_observer(const NodeObserver* obs) { observer_ = obs; }
  std::vector<BlockedPartition>& results() { return results_; }
  std::uint64_t local_nodes() const { return local_nodes_; }

 private:
  std::int64_t next_uncovered(std::int64_t t) const {
    while (t <= n_dim_ && covered_[static_cast<std::size_t>(t)]) ++t;
    return t;
  }

  bool out_of_budget() {
    ++local_nodes_;
    if (++pending_ >= 4096) flush_budget();
    return budget_.stop.load(std::memory_order_relaxed);
  }

  void flush_budget() {
    const auto total = budget_.nodes.fetch_add(pending_) + pending_;
    pending_ = 0;
    if (total >= budget_.max_nodes || Clock::now() >= budget_.deadline) budget_.stop = true;
  }

 public:
  void flush() { flush_budget(); }

 private:
  // Validates and commits new entries; `t0` is the time that must be newly covered.
  template <std::size_t K>
  bool place(const std::array<std::pair<int, Entry>, K>& news, std::int64_t t0) {
    scratch_.clear();
    for (std::size_t a = 0; a < K; ++a) {
      const auto [i, x] = news[a];
      const auto& own = placed_[static_cast<std::size_t>(i)];
      if (static_cast<int>(own.size()) >= cap_[static_cast<std::size_t>(i)]) return false;
      if (std::find(own.begin(), own.end(), x) != own.end()) return false;
      for (int k = 0; k < blocks_; ++k) {
        if (k == i) continue;
        const Entry g = k > i ? k - i : i - k;
        for (Entry w : placed_[static_cast<std::size_t>(k)]) {
          const Entry d = k > i ? x - w : w - x;
          if (d <= 0 || d % g != 0) return false;
          const Entry t = d / g;
          if (t > n_dim_ || covered_[static_cast<std::size_t>(t)]) return false;
          scratch_.push_back(t);
        }
      }
      for (std::size_t b = 0; b < a; ++b) {
        const auto [k, w] = news[b];
        if (k == i) return false;
        const Entry g = k > i ? k - i : i - k;
        const Entry d = k > i ? x - w : w - x;
        if (d <= 0 || d % g != 0) return false;
        const Entry t = d / g;
        if (t > n_dim_ || covered_[static_cast<std::size_t>(t)]) return false;
        scratch_.push_back(t);
      }
    }
    std::sort(scratch_.begin(), scratch_.end());
    if (std::adjacent_find(scratch_.begin(), scratch_.end()) != scratch_.end()) return false;
    if (!std::binary_search(scratch_.begin(), scratch_.end(), t0)) return false;
    for (Entry t : scratch_) covered_[static_cast<std::size_t>(t)] = 1;
    for (const auto& [i, x] : news) placed_[static_cast<std::size_t>(i)].push_back(x);
    remaining_ -= static_cast<int>(K);
    return true;
  }

  template <std::size_t K>
  void unplace(const std::array<std::pair<int, Entry>, K>& news) {
    for (std::size_t a = K; a-- > 0;) {
      const auto [i, x] = news[a];
      placed_[static_cast<std::size_t>(i)].pop_back();
      for (int k = 0; k < blocks_; ++k) {
        if (k == i) continue;
        const Entry g = k > i ? k - i : i - k;
        for (Entry w : placed_[static_cast<std::size_t>(k)]) {
          const Entry d = k > i ? x - w : w - x;
          covered_[static_cast<std::size_t>(d / g)] = 0;
        }
      }
    }
    remaining_ += static_cast<int>(K);
  }

  // Every unplaced entry of block i sits, at time t, between the nearest placed entries of
  // the neighbouring blocks, meets each placed entry no later than N, and respects the
  // congruences forced by the placed entries. Returns false when some block cannot host
  // its unplaced entries.
  bool corridors_ok(std::int64_t t) const {
    for (int i = 0; i < blocks_; ++i) {
      const auto& own = placed_[static_cast<std::size_t>(i)];
      const int missing = cap_[static_cast<std::size_t>(i)] - static_cast<int>(own.size());
      if (missing == 0) continue;
      Entry lo = std::numeric_limits<Entry>::min();
      Entry hi = std::numeric_limits<Entry>::max();
      std::optional<Entry> wall_lo;
      std::optional<Entry> wall_hi;
      Entry modulus = 1;
      bool any = false;
      for (int k = 0; k < blocks_; ++k) {
        if (k == i || placed_[static_cast<std::size_t>(k)].empty()) continue;
        any = true;
        const Entry g = k > i ? k - i : i - k;
        modulus = std::lcm(modulus, g);
        for (Entry w : placed_[static_cast<std::size_t>(k)]) {
          const Entry wt = w - vel_[static_cast<std::size_t>(k)] * t;
          if (k > i) {
            wall_lo = wall_lo ? std::max(*wall_lo, wt) : wt;
            hi = std::min(hi, wt + g * (n_dim_ - t));
          } else {
            wall_hi = wall_hi ? std::min(*wall_hi, wt) : wt;
            lo = std::max(lo, wt - g * (n_dim_ - t));
          }
        }
      }
      if (!any) continue;
      if (wall_lo && wall_hi && *wall_lo >= *wall_hi) return false;
      if (wall_lo) lo = std::max(lo, *wall_lo);
      if (wall_hi) hi = std::min(hi, *wall_hi);
      if (lo > hi) return false;
      const Entry span = hi - lo + 1;
      if (span / modulus - static_cast<Entry>(own.size()) >= missing) continue;
      int room = 0;
      for (Entry p = lo; p <= hi && room < missing; ++p) {
        if (admissible(i, p, t)) ++room;
      }
      if (room < missing) return false;
    }
    return true;
  }

  bool admissible(int i, Entry p, std::int64_t t) const {
    for (int k = 0; k < blocks_; ++k) {
      const auto& ws = placed_[static_cast<std::size_t>(k)];
      if (ws.empty()) continue;
      if (k == i) {
        for (Entry w : ws) {
          if (w - vel_[static_cast<std::size_t>(k)] * t == p) return false;
        }
        continue;
      }
      const Entry g = k > i ? k - i : i - k;
      const Entry wt = ws.front() - vel_[static_cast<std::size_t>(k)] * t;
      if ((p - wt) % g != 0) return false;
    }
    return true;
  }

  void emit() {
    std::vector<std::vector<Entry>> blocks = placed_;
    for (auto& b : blocks) std::sort(b.begin(), b.end(), std::greater<>());
    results_.push_back(canonicalize(BlockedPartition::from_blocks(blocks)));
  }

  template <std::size_t K>
  void descend(const std::array<std::pair<int, Entry>, K>& news, std::int64_t t0, int depth) {
    if (!place(news, t0)) return;
    const auto next = next_uncovered(t0 + 1);
    if (remaining_ == 0) {
      if (next == n_dim_ + 1) emit();
    } else if (next <= n_dim_ && corridors_ok(next)) {
      if (collect_ && depth + 1 == collect_depth_) {
        collect_->push_back(State{placed_, covered_, remaining_, next});
      } else {
        explore(next, depth + 1);
      }
    }
    unplace(news);
  }

  void explore(std::int64_t t0, int depth) {
    if (out_of_budget()) return;
    if (observer_ && *observer_) (*observer_)(t0, covered_);

    for (int i = 0; i < blocks_; ++i) {
      if (static_cast<int>(placed_[static_cast<std::size_t>(i)].size()) >= cap_[static_cast<std::size_t>(i)]) continue;
      std::optional<Entry> wall_lo;
      std::optional<Entry> wall_hi;
      for (int k = 0; k < blocks_; ++k) {
        if (k == i) continue;
        for (Entry w : placed_[static_cast<std::size_t>(k)]) {
          const Entry wt = w - vel_[static_cast<std::size_t>(k)] * t0;
          if (k > i) wall_lo = wall_lo ? std::max(*wall_lo, wt) : wt;
          else wall_hi = wall_hi ? std::min(*wall_hi, wt) : wt;
        }
      }
      const Entry v = vel_[static_cast<std::size_t>(i)] * t0;
      if (wall_lo) descend(std::array<std::pair<int, Entry>, 1>{{{i, *wall_lo + v}}}, t0, depth);
      if (wall_hi && (!wall_lo || *wall_hi != *wall_lo)) {
        descend(std::array<std::pair<int, Entry>, 1>{{{i, *wall_hi + v}}}, t0, depth);
      }
    }

    for (int i = 0; i + 1 < blocks_; ++i) {
      if (static_cast<int>(placed_[static_cast<std::size_t>(i)].size()) >= cap_[static_cast<std::size_t>(i)]) continue;
      if (static_cast<int>(placed_[static_cast<std::size_t>(i + 1)].size()) >= cap_[static_cast<std::size_t>(i + 1)]) continue;
      // z is the meeting point at t0; every later collision of the two new entries with a
      // placed entry happens in (t0, N].
      Entry lo = std::numeric_limits<Entry>::min();
      Entry hi = std::numeric_limits<Entry>::max();
      for (int j : {i, i + 1}) {
        for (int k = 0; k < blocks_; ++k) {
          if (k == j) continue;
          const Entry g = k > j ? k - j : j - k;
          for (Entry w : placed_[static_cast<std::size_t>(k)]) {
            const Entry wt = w - vel_[static_cast<std::size_t>(k)] * t0;
            if (k > j) {
              lo = std::max(lo, wt + g);
              hi = std::min(hi, wt + g * (n_dim_ - t0));
            } else {
              hi = std::min(hi, wt - g);
              lo = std::max(lo, wt - g * (n_dim_ - t0));
            }
          }
        }
      }
      if (lo == std::numeric_limits<Entry>::min() || hi == std::numeric_limits<Entry>::max()) {
        throw std::logic_error("unbounded branching interval");
      }
      const Entry vx = vel_[static_cast<std::size_t>(i)] * t0;
      const Entry vy = vel_[static_cast<std::size_t>(i + 1)] * t0;
      for (Entry z = lo; z <= hi; ++z) {
        descend(std::array<std::pair<int, Entry>, 2>{{{i, z + vx}, {i + 1, z + vy}}}, t0, depth);
      }
    }
  }

  const FlagType& type_;
  int blocks_;
  std::int64_t n_dim_;
  std::vector<Entry> vel_;
  std::vector<int> cap_;
  Budget& budget_;

  std::vector<std::vector<Entry>> placed_;
  std::vector<std::uint8_t> covered_;
  int remaining_ = 0;
  std::vector<Entry> scratch_;

  std::vector<State>* collect_ = nullptr;
  int collect_depth_ = 0;
  const NodeObserver* observer_ = nullptr;
  std::vector<BlockedPartition> results_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t pending_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------

void for_each_in_window(const FlagType& type, const std::function<void(std::span<const Entry>)>& visit) {
  const int n = type.total();
  const Entry n_dim = type.dimension();
  std::vector<Entry> bound(static_cast<std::size_t>(n));
  for (int i = 0; i < type.blocks(); ++i) {
    const Entry vel = type.steps() - i;
    for (int k = 0; k < type.length(i); ++k) bound[static_cast<std::size_t>(type.offset(i) + k)] = n_dim * std::max<Entry>(vel, 1);
  }
  std::vector<Entry> e(static_cast<std::size_t>(n), 0);
  // Fill from the right: e[idx] ranges over (e[idx+1], bound[idx]].
  std::function<void(int)> rec = [&](int idx) {
    if (idx < 0) {
      visit(e);
      return;
    }
    const auto u = static_cast<std::size_t>(idx);
    for (Entry x = e[u + 1] + 1; x <= bound[u]; ++x) {
      e[u] = x;
      rec(idx - 1);
    }
  };
  rec(n - 2);
}

SearchReport baseline_oracle(const FlagType& type) {
  if (type.dimension() > kBaselineMaxDimension) {
    throw std::invalid_argument("baseline oracle supports N <= " + std::to_string(kBaselineMaxDimension) +
                                ", type " + type.to_string() + " has N = " + std::to_string(type.dimension()));
  }
  const auto start = Clock::now();
  SearchReport rep{type, {}, 0, 0, true, {}};
  std::set<BlockedPartition> found;
  for_each_in_window(type, [&](std::span<const Entry> e) {
    ++rep.nodes;
    if (passes_ulrich_test(type, e)) found.insert(BlockedPartition(type, std::vector<Entry>(e.begin(), e.end())));
  });
  finish_report(rep, std::move(found));
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

SearchReport time_branching_search(const FlagType& type, const SearchLimits& limits, const NodeObserver& observer) {
  const auto start = Clock::now();
  Budget budget;
  if (limits.seconds) {
    budget.deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*limits.seconds));
  }
  if (limits.max_nodes) budget.max_nodes = *limits.max_nodes;

  std::set<BlockedPartition> found;
  SearchReport rep{type, {}, 0, 0, true, {}};
  const int threads = std::max(1, limits.threads);

  if (threads == 1 || observer) {
    Engine eng(type, budget);
    eng.set_observer(&observer);
    for (const auto& root : eng.roots()) {
      eng.run(root);
      if (budget.stop) break;
    }
    eng.flush();
    found.insert(eng.results().begin(), eng.results().end());
  } else {
    // Split the tree a few levels deep, then let workers pull subtrees.
    Engine splitter(type, budget);
    auto frontier = splitter.roots();
    for (int level = 0; level < 4 && !frontier.empty() && frontier.size() < static_cast<std::size_t>(threads) * 16;
         ++level) {
      std::vector<State> next;
      for (const auto& s : frontier) {
        auto kids = splitter.children(s);
        next.insert(next.end(), std::make_move_iterator(kids.begin()), std::make_move_iterator(kids.end()));
      }
      frontier = std::move(next);
    }
    splitter.flush();
    found.insert(splitter.results().begin(), splitter.results().end());

    std::atomic<std::size_t> cursor{0};
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        Engine eng(type, budget);
        for (;;) {
          const auto idx = cursor.fetch_add(1);
          if (idx >= frontier.size() || budget.stop) break;
          eng.run(frontier[idx]);
        }
        eng.flush();
        std::lock_guard<std::mutex> lock(mu);
        found.insert(eng.results().begin(), eng.results().end());
      });
    }
    for (auto& t : pool) t.join();
  }

  rep.nodes = budget.nodes.load();
  rep.exhausted = !budget.stop.load();
  for (const auto& p : found) {
    if (!is_ulrich(p).is_ulrich) throw std::logic_error("search emitted a non-Ulrich partition " + to_string(p));
  }
  finish_report(rep, std::move(found));
  rep.elapsed_seconds = seconds_since(start);
  return rep;
}

SearchReport enumerate_ulrich(const SearchSpec& spec) {
  if (spec.mode == SearchMode::BaselineOracle) return baseline_oracle(spec.type);
  return time_branching_search(spec.type, spec.limits);
}

std::vector<FlagType> multistep_types(int max_total_length) {
  std::vector<FlagType> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (cur.size() >= 4) out.emplace_back(cur);
    for (int l = 1; l <= left; ++l) {
      cur.push_back(l);
      rec(left - l);
      cur.pop_back();
    }
  };
  rec(max_total_length);
  std::sort(out.begin(), out.end(), [](const FlagType& a, const FlagType& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
  });
  return out;
}

std::vector<FlagType> conjecture_types(int max_sum) {
  std::vector<FlagType> out;
  for (int s = 7; s <= max_sum; ++s) {
    for (int a = 1; a <= s - 6; ++a) {
      for (int b = 3; b <= s - a - 3; ++b) out.emplace_back(std::vector<int>{a, b, s - a - b});
    }
  }
  return out;
}

std::vector<SearchReport> sweep(const std::vector<FlagType>& types, const SearchLimits& limits,
                                const std::set<FlagType>& skip, const ReportCallback& on_report) {
  const auto start = Clock::now();
  std::vector<SearchReport> out;
  for (const auto& t : types) {
    if (skip.count(t)) continue;
    SearchLimits per = limits;
    if (limits.seconds) {
      per.seconds = *limits.seconds - seconds_since(start);
      if (*per.seconds <= 0) {
        out.push_back(SearchReport{t, {}, 0, 0, false, {}});
        if (on_report) on_report(out.back());
        continue;
      }
    }
    out.push_back(time_branching_search(t, per));
    if (on_report) on_report(out.back());
  }
  return out;
}

std::vector<SearchReport> verify_no_multistep(int max_total_length, const SearchLimits& limits) {
  if (max_total_length < 4) throw std::invalid_argument("max total length must be at least 4");
  return sweep(multistep_types(max_total_length), limits);
}

std::vector<SearchReport> verify_conjecture_sweep(int max_sum, const SearchLimits& limits) {
  if (max_sum < 9) throw std::invalid_argument("max sum must be at least 9");
  return sweep(conjecture_types(max_sum), limits);
}

}  // namespace ulrich::search
