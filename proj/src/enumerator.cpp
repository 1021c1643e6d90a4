#include "diamonds/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

#include "diamonds/error.hpp"

namespace diamonds {

namespace {

enum class Role : std::uint8_t { bottom, middle, top };

struct Slot {
  Role role;
  int diamond;    // index into the per-diamond state
  int remaining;  // slots of this diamond still to fill after this one
  bool full;      // false for the trailing partial diamond
};

std::vector<Slot> layout(const SystemShape& shape) {
  std::vector<Slot> slots;
  for (int d = 0; d < shape.full_diamonds; ++d) {
    const int v = shape.v;
    for (int k = 0; k < v; ++k) {
      const Role role = k == 0 ? Role::bottom : (k == v - 1 ? Role::top : Role::middle);
      slots.push_back({role, d, v - 1 - k, true});
    }
  }
  if (shape.partial) {
    const int j = *shape.partial;
    for (int k = 0; k < j; ++k) {
      slots.push_back({k == 0 ? Role::bottom : Role::middle, shape.full_diamonds,
                       j - 1 - k, false});
    }
  }
  return slots;
}

// Depth-first label assignment in reading order. Labels are tried in
// increasing order, so completions arrive lexicographically.
class Search {
 public:
  Search(const SystemShape& shape, const PatternSet& avoid)
      : slots_(layout(shape)),
        n_(shape.label_count()),
        patterns_(avoid.patterns()),
        bottom_(shape.diamond_count() + 1, 0),
        high_(shape.diamond_count() + 1, 0) {
    if (n_ > 63) throw BoundExceeded("shapes above 63 labels are not searchable");
    unused_ = (n_ == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n_ + 1)) - 1)) &
              ~std::uint64_t{1};
    seq_.reserve(n_);
  }

  int size() const { return n_; }
  std::span<const int> sequence() const { return seq_; }
  int descents() const { return descents_; }

  // True if `label` may go into the next slot and the prefix stays clean.
  bool push(int label) {
    const Slot& s = slots_[seq_.size()];
    const std::uint64_t bit = std::uint64_t{1} << label;
    if (!(unused_ & bit)) return false;
    const std::uint64_t after = unused_ & ~bit;
    switch (s.role) {
      case Role::bottom:
        if (std::popcount(after >> label) < s.remaining) return false;
        break;
      case Role::middle: {
        const int b = bottom_[s.diamond];
        if (label < b) return false;
        if (s.full) {
          const int hi = std::max(high_[s.diamond], label);
          if (std::popcount(after >> b) < s.remaining) return false;
          if ((after >> hi) == 0) return false;
        }
        break;
      }
      case Role::top:
        if (label < high_[s.diamond]) return false;
        break;
    }
    saved_.push_back(high_[s.diamond]);
    if (s.role == Role::bottom) bottom_[s.diamond] = label;
    high_[s.diamond] = std::max(high_[s.diamond], label);
    if (!seq_.empty() && seq_.back() > label) ++descents_;
    seq_.push_back(label);
    unused_ = after;
    for (const auto& p : patterns_) {
      if (occurs_ending_at_last(seq_, p)) {
        pop();
        return false;
      }
    }
    return true;
  }

  void pop() {
    const int label = seq_.back();
    seq_.pop_back();
    const Slot& s = slots_[seq_.size()];
    high_[s.diamond] = saved_.back();
    saved_.pop_back();
    unused_ |= std::uint64_t{1} << label;
    if (!seq_.empty() && seq_.back() > label) --descents_;
  }

  // Visits every completion of the current prefix. `on_leaf` returns false
  // to stop the walk.
  template <typename Leaf>
  bool walk(Leaf&& on_leaf) {
    if (static_cast<int>(seq_.size()) == n_) return on_leaf(*this);
    std::uint64_t candidates = unused_;
    while (candidates) {
      const int label = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (!push(label)) continue;
      const bool go_on = walk(on_leaf);
      pop();
      if (!go_on) return false;
    }
    return true;
  }

  // Every clean prefix of length `depth`, lexicographically.
  std::vector<std::vector<int>> prefixes(int depth) {
    std::vector<std::vector<int>> out;
    collect(depth, out);
    return out;
  }

 private:
  void collect(int depth, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(seq_.size()) == depth) {
      out.push_back(seq_);
      return;
    }
    std::uint64_t candidates = unused_;
    while (candidates) {
      const int label = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (!push(label)) continue;
      collect(depth, out);
      pop();
    }
  }

  std::vector<Slot> slots_;
  int n_;
  const std::vector<Pattern>& patterns_;
  std::vector<int> bottom_;
  std::vector<int> high_;
  std::vector<int> saved_;
  std::vector<int> seq_;
  std::uint64_t unused_ = 0;
  int descents_ = 0;
};

void check_label_bound(const SystemShape& shape, const SearchLimits& limits) {
  if (shape.label_count() > limits.max_labels) {
    throw BoundExceeded("shape " + shape.to_string() + " has " +
                        std::to_string(shape.label_count()) +
                        " labels, above the bound of " + std::to_string(limits.max_labels));
  }
}

[[noreturn]] void avoider_bound_hit(const SearchLimits& limits) {
  throw BoundExceeded("more than " + std::to_string(limits.max_avoiders) +
                      " avoiders; raise the bound to continue");
}

void stream(const SystemShape& shape, const PatternSet& avoid,
            const PermutationVisitor& visit, const SearchLimits& limits, bool bounded) {
  shape.validate();
  Search search(shape, avoid);
  std::uint64_t found = 0;
  search.walk([&](const Search& s) {
    if (bounded && ++found > limits.max_avoiders) avoider_bound_hit(limits);
    visit(s.sequence());
    return true;
  });
}

// Descent histogram of all avoiders, split over workers by the labels of
// the first diamond. Each worker owns whole subtrees and the merge is a
// plain sum, so the result does not depend on the split.
std::vector<std::uint64_t> descent_histogram(const SystemShape& shape,
                                             const PatternSet& avoid,
                                             const SearchLimits& limits) {
  shape.validate();
  const int n = shape.label_count();
  std::vector<std::uint64_t> total(n, 0);
  unsigned workers = limits.workers ? limits.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);

  Search root(shape, avoid);
  const int split_depth = std::min(n, shape.full_diamonds ? shape.v : *shape.partial);
  const auto prefixes = root.prefixes(split_depth);

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> found{0};
  std::atomic<bool> overflow{false};
  std::mutex merge;

  auto work = [&] {
    Search search(shape, avoid);
    std::vector<std::uint64_t> local(n, 0);
    std::uint64_t pending = 0;
    for (std::size_t i = next++; i < prefixes.size() && !overflow; i = next++) {
      for (int label : prefixes[i]) search.push(label);
      search.walk([&](const Search& s) {
        ++local[s.descents()];
        if (++pending == 4096) {
          if (found.fetch_add(pending) + pending > limits.max_avoiders) overflow = true;
          pending = 0;
        }
        return !overflow.load(std::memory_order_relaxed);
      });
      for (std::size_t k = 0; k < prefixes[i].size(); ++k) search.pop();
    }
    if (found.fetch_add(pending) + pending > limits.max_avoiders) overflow = true;
    std::lock_guard lock(merge);
    for (int k = 0; k < n; ++k) total[k] += local[k];
  };

  if (workers == 1 || prefixes.size() < 2) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, prefixes.size()); ++w) {
      pool.emplace_back(work);
    }
  }
  if (overflow) avoider_bound_hit(limits);
  return total;
}

}  // namespace

void generate_systems(const SystemShape& shape, const SystemVisitor& visit,
                      const SearchLimits& limits) {
  shape.validate();
  check_label_bound(shape, limits);
  stream(
      shape, PatternSet{},
      [&](std::span<const int> p) {
        visit(system_from_permutation(shape, Permutation(std::vector<int>(p.begin(), p.end()))));
      },
      limits, false);
}

void generate_avoiders(const SystemShape& shape, const PatternSet& avoid,
                       const SystemVisitor& visit, const SearchLimits& limits) {
  for_each_avoider(
      shape, avoid,
      [&](std::span<const int> p) {
        visit(system_from_permutation(shape, Permutation(std::vector<int>(p.begin(), p.end()))));
      },
      limits);
}

void for_each_avoider(const SystemShape& shape, const PatternSet& avoid,
                      const PermutationVisitor& visit, const SearchLimits& limits) {
  stream(shape, avoid, visit, limits, true);
}

std::vector<LabelledSystem> collect_avoiders(const SystemShape& shape,
                                             const PatternSet& avoid,
                                             const SearchLimits& limits) {
  std::vector<LabelledSystem> out;
  generate_avoiders(shape, avoid, [&](const LabelledSystem& s) { out.push_back(s); }, limits);
  return out;
}

BigInt count_avoiders_brute(const SystemShape& shape, const PatternSet& avoid,
                            const SearchLimits& limits) {
  BigInt sum = 0;
  for (auto c : descent_histogram(shape, avoid, limits)) sum += c;
  return sum;
}

DescentPoly descent_poly_brute(const SystemShape& shape, const PatternSet& avoid,
                               const SearchLimits& limits) {
  return DescentPoly::from_counts(descent_histogram(shape, avoid, limits));
}

}  // namespace diamonds
