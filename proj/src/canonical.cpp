#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "flagspec/errors.hpp"
#include "flagspec/isomorphism.hpp"

namespace flagspec {

namespace {

/// Ordered partition of the vertex set. Cells are contiguous ranges of
/// `lab` and are named by their start position, which is invariant under
/// relabelling of the input.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<int> cell_of;   // vertex -> start of its cell
  std::vector<int> cell_end;  // start -> one past the end (valid at starts)
  int cells = 0;

  int size_of(int start) const { return cell_end[start] - start; }
  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

using Trace = std::vector<long>;

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g), count_(static_cast<std::size_t>(g.order()), 0), queued_(static_cast<std::size_t>(g.order()), 0) {}

  /// Refines to the coarsest equitable partition finer than `p`, splitting
  /// with the cells in `splitters` first. Appends an invariant record of
  /// every split to `trace`.
  void refine(Partition& p, const std::vector<int>& splitters, Trace& trace) {
    std::deque<int> queue;
    for (int s : splitters) {
      queue.push_back(s);
      queued_[s] = 1;
    }
    std::vector<Vertex> touched;
    std::vector<int> starts;
    std::vector<Vertex> members;
    while (!queue.empty() && !p.discrete()) {
      const int w = queue.front();
      queue.pop_front();
      queued_[w] = 0;

      members.assign(p.lab.begin() + w, p.lab.begin() + p.cell_end[w]);
      touched.clear();
      for (Vertex x : members) {
        for (Vertex y : g_.neighbors(x)) {
          if (count_[y]++ == 0) touched.push_back(y);
        }
      }
      starts.clear();
      for (Vertex y : touched) starts.push_back(p.cell_of[y]);
      std::sort(starts.begin(), starts.end());
      starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

      for (int s : starts) {
        const int e = p.cell_end[s];
        if (e - s == 1) continue;
        auto first = p.lab.begin() + s;
        auto last = p.lab.begin() + e;
        std::sort(first, last, [&](Vertex a, Vertex b) {
          return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
        });
        if (count_[*first] == count_[*(last - 1)]) continue;

        trace.push_back(s);
        trace.push_back(w);
        // split into runs of equal count
        std::vector<int> run_starts;
        for (int pos = s; pos < e; ++pos) {
          if (pos == s || count_[p.lab[pos]] != count_[p.lab[pos - 1]]) run_starts.push_back(pos);
        }
        trace.push_back(static_cast<long>(run_starts.size()));
        int largest = run_starts.front();
        int largest_size = 0;
        for (std::size_t i = 0; i < run_starts.size(); ++i) {
          const int rs = run_starts[i];
          const int re = i + 1 < run_starts.size() ? run_starts[i + 1] : e;
          p.cell_end[rs] = re;
          for (int pos = rs; pos < re; ++pos) p.cell_of[p.lab[pos]] = rs;
          trace.push_back(count_[p.lab[rs]]);
          trace.push_back(re - rs);
          if (re - rs > largest_size) {
            largest_size = re - rs;
            largest = rs;
          }
        }
        p.cells += static_cast<int>(run_starts.size()) - 1;
        const bool parent_queued = queued_[s] != 0;
        for (int rs : run_starts) {
          if (queued_[rs]) continue;
          if (!parent_queued && rs == largest) continue;
          queued_[rs] = 1;
          queue.push_back(rs);
        }
      }
      for (Vertex y : touched) count_[y] = 0;
    }
    for (int s : queue) queued_[s] = 0;
    trace.push_back(-1);
    trace.push_back(p.cells);
  }

 private:
  const Graph& g_;
  std::vector<int> count_;
  std::vector<char> queued_;
};

struct Leaf {
  std::vector<Vertex> lab;
  std::vector<Vertex> path;
  std::vector<Trace> traces;
  std::string graph6;
};

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, CanonicalStats* stats) : g_(g), refiner_(g), stats_(stats) {}

  std::vector<Vertex> run(Partition root, std::vector<int> splitters) {
    Trace trace;
    refiner_.refine(root, splitters, trace);
    path_.clear();
    traces_.assign(1, std::move(trace));
    search(root, 0);
    return best_->lab;
  }

 private:
  enum class Standing { Equal, Better, Worse };

  /// Level-by-level comparison of the current path's traces with the best
  /// leaf's. Worse branches cannot contain the canonical leaf.
  Standing standing() const {
    if (!best_) return Standing::Better;
    for (std::size_t level = 0; level < traces_.size(); ++level) {
      const Trace& mine = traces_[level];
      const Trace& theirs = best_->traces[level];
      if (mine == theirs) continue;
      return mine < theirs ? Standing::Better : Standing::Worse;
    }
    return Standing::Equal;
  }

  static int divergence(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    int i = 0;
    while (i < static_cast<int>(a.size()) && i < static_cast<int>(b.size()) && a[i] == b[i]) ++i;
    return i;
  }

  /// Returns the depth of the node that should resume exploring children.
  int search(const Partition& p, int depth) {
    if (stats_) ++stats_->nodes;
    if (p.discrete()) return leaf(p, depth);

    int target = -1;
    for (int s = 0; s < static_cast<int>(p.lab.size()); s = p.cell_end[s]) {
      if (p.size_of(s) > 1 && (target < 0 || p.size_of(s) > p.size_of(target))) target = s;
    }
    const std::vector<Vertex> candidates(p.lab.begin() + target, p.lab.begin() + p.cell_end[target]);
    std::vector<Vertex> explored;

    for (Vertex w : candidates) {
      if (!explored.empty() && equivalent_to_explored(w, explored)) continue;
      explored.push_back(w);

      Partition child = p;
      individualise(child, w);
      Trace trace;
      refiner_.refine(child, {child.cell_of[w]}, trace);

      path_.push_back(w);
      traces_.push_back(std::move(trace));
      int resume = depth;
      if (standing() != Standing::Worse) resume = search(child, depth + 1);
      path_.pop_back();
      traces_.pop_back();
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  int leaf(const Partition& p, int depth) {
    if (stats_) ++stats_->leaves;
    std::string cert = to_graph6(g_, p.lab);
    if (!first_) {
      first_ = Leaf{p.lab, path_, traces_, cert};
      best_ = first_;
      return depth - 1;
    }
    if (cert == first_->graph6) {
      record_automorphism(first_->lab, p.lab);
      return divergence(path_, first_->path);
    }
    if (standing() == Standing::Equal) {
      if (cert == best_->graph6) {
        record_automorphism(best_->lab, p.lab);
        return divergence(path_, best_->path);
      }
      if (cert > best_->graph6) return depth - 1;
    }
    best_ = Leaf{p.lab, path_, traces_, std::move(cert)};
    return depth - 1;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) gamma[from[i]] = to[i];
    generators_.push_back(std::move(gamma));
    if (stats_) ++stats_->automorphisms;
  }

  /// Is w in the orbit of an explored sibling under the automorphisms found
  /// so far that fix the current path pointwise?
  bool equivalent_to_explored(Vertex w, const std::vector<Vertex>& explored) const {
    if (generators_.empty()) return false;
    const int n = g_.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const int root = find(w);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex x) { return find(x) == root; });
  }

  static void individualise(Partition& p, Vertex v) {
    const int s = p.cell_of[v];
    const int e = p.cell_end[s];
    auto pos = std::find(p.lab.begin() + s, p.lab.begin() + e, v);
    std::rotate(p.lab.begin() + s, pos, pos + 1);
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    for (int i = s + 1; i < e; ++i) p.cell_of[p.lab[i]] = s + 1;
    ++p.cells;
  }

  const Graph& g_;
  Refiner refiner_;
  CanonicalStats* stats_;
  std::vector<Vertex> path_;
  std::vector<Trace> traces_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<std::vector<Vertex>> generators_;
};

std::string colour_signature(const std::map<int, int>& class_sizes) {
  std::string sig = "c";
  for (const auto& [colour, size] : class_sizes) {
    sig += std::to_string(colour) + "x" + std::to_string(size) + ";";
  }
  return sig + "|";
}

CanonicalForm canonical_impl(const Graph& g, std::span<const int> colours, bool coloured,
                             CanonicalStats* stats) {
  const int n = g.order();
  CanonicalForm form;
  if (n == 0) {
    form.certificate = to_graph6(g);
    return form;
  }
  std::map<int, int> class_sizes;
  for (int c : colours) ++class_sizes[c];

  Partition root;
  root.lab.resize(static_cast<std::size_t>(n));
  std::iota(root.lab.begin(), root.lab.end(), 0);
  std::stable_sort(root.lab.begin(), root.lab.end(),
                   [&](Vertex a, Vertex b) { return colours[a] < colours[b]; });
  root.cell_of.assign(static_cast<std::size_t>(n), 0);
  root.cell_end.assign(static_cast<std::size_t>(n) + 1, n);
  std::vector<int> splitters;
  for (int pos = 0; pos < n; ++pos) {
    if (pos == 0 || colours[root.lab[pos]] != colours[root.lab[pos - 1]]) {
      if (!splitters.empty()) root.cell_end[splitters.back()] = pos;
      splitters.push_back(pos);
    }
    root.cell_of[root.lab[pos]] = splitters.back();
  }
  root.cell_end[splitters.back()] = n;
  root.cells = static_cast<int>(splitters.size());

  CanonicalSearch search(g, stats);
  std::vector<Vertex> lab = search.run(std::move(root), splitters);
  form.permutation.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) form.permutation[lab[i]] = i;
  form.certificate = (coloured ? colour_signature(class_sizes) : std::string()) + to_graph6(g, lab);
  return form;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, CanonicalStats* stats) {
  std::vector<int> colours(static_cast<std::size_t>(g.order()), 0);
  return canonical_impl(g, colours, false, stats);
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colours, CanonicalStats* stats) {
  if (static_cast<int>(colours.size()) != g.order()) {
    throw InvalidGraph("colour vector length does not match graph order");
  }
  return canonical_impl(g, colours, true, stats);
}

Graph canonical_graph(const Graph& g, const CanonicalForm& form) {
  return permute(g, form.permutation);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_profile(g) != degree_profile(h)) return false;
  return canonical_form(g).certificate == canonical_form(h).certificate;
}

CanonicalForm design_canonical_form(const Design& d) {
  Graph inc = incidence_graph(d);
  std::vector<int> colours(static_cast<std::size_t>(inc.order()), 1);
  std::fill(colours.begin(), colours.begin() + d.points(), 0);
  return canonical_form(inc, colours);
}

bool design_isomorphic(const Design& d, const Design& e) {
  if (validate_design(d) != validate_design(e)) return false;
  return design_canonical_form(d).certificate == design_canonical_form(e).certificate;
}

}  // namespace flagspec
