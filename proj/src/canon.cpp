#include "bcay/canon.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "bcay/error.hpp"

namespace bcay {

namespace {

using TraceEntry = std::pair<int, std::uint64_t>;  // cell count, refinement hash
using Trace = std::vector<TraceEntry>;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

class Searcher {
 public:
  Searcher(const SimpleGraph& x, const std::vector<int>& colors) : x_(x), n_(x.order()) {
    init_.assign(n_, 0);
    if (!colors.empty()) {
      if (static_cast<int>(colors.size()) != n_) throw InvalidArgument("colour vector size does not match graph");
      std::vector<int> vals(colors);
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (int v = 0; v < n_; ++v) init_[v] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), colors[v]) - vals.begin());
    }
  }

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) {
      out.certificate = {0, 0};
      return out;
    }
    std::vector<int> col = init_;
    Trace trace;
    std::vector<int> path;
    dfs(col, trace, path);

    out.certificate = best_cert_;
    out.labeling = best_lab_;
    out.nodes = nodes_;
    out.aut.generators = gens_;
    // |Aut| as a product of first-path orbit lengths
    std::uint64_t order = 1;
    for (std::size_t d = 0; d < first_path_.size(); ++d) {
      std::vector<Permutation> stab;
      for (const auto& g : gens_) {
        bool fix = true;
        for (std::size_t i = 0; i < d && fix; ++i) fix = g[first_path_[i]] == first_path_[i];
        if (fix) stab.push_back(g);
      }
      const auto id = orbit_ids(n_, stab);
      const int target = id[first_path_[d]];
      const auto len = static_cast<std::uint64_t>(std::count(id.begin(), id.end(), target));
      if (order > UINT64_MAX / len) throw Error("automorphism group order overflows 64 bits");
      order *= len;
    }
    out.aut.order = order;
    out.aut.vertex_orbits = orbits(n_, gens_);
    return out;
  }

 private:
  // Iterated neighbour-colour refinement. Colours are ranks of
  // (own colour, sorted neighbour colours), so cells split in place and the
  // result does not depend on vertex names.
  TraceEntry refine(std::vector<int>& col) const {
    int cells = 1 + *std::max_element(col.begin(), col.end());
    std::uint64_t h = 0;
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(col[v]);
        for (int w : x_.neighbors(v)) s.push_back(col[w]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      std::vector<int> next(n_);
      int rank = 0;
      std::uint64_t run = 1;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) {
          h = mix(h, run);
          ++rank;
          run = 0;
        }
        if (i == 0 || sig[order[i]] != sig[order[i - 1]])
          for (int c : sig[order[i]]) h = mix(h, static_cast<std::uint64_t>(c) + 1);
        ++run;
        next[order[i]] = rank;
      }
      h = mix(h, run);
      col.swap(next);
      if (rank + 1 == cells) break;
      cells = rank + 1;
    }
    return {cells, h};
  }

  static std::vector<int> individualize(const std::vector<int>& col, int w) {
    std::vector<int> out(col.size());
    const int c = col[w];
    for (std::size_t v = 0; v < col.size(); ++v) {
      if (col[v] > c || (col[v] == c && static_cast<int>(v) != w))
        out[v] = col[v] + 1;
      else
        out[v] = col[v];
    }
    return out;
  }

  CanonicalCertificate leaf_certificate(const std::vector<int>& col) const {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[col[v]] = v;
    CanonicalCertificate c;
    c.push_back(static_cast<std::uint8_t>(n_ & 0xff));
    c.push_back(static_cast<std::uint8_t>(n_ >> 8));
    for (int i = 0; i < n_; ++i) {
      c.push_back(static_cast<std::uint8_t>(init_[at[i]] & 0xff));
      c.push_back(static_cast<std::uint8_t>(init_[at[i]] >> 8));
    }
    std::uint8_t byte = 0;
    int bits = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        byte = static_cast<std::uint8_t>((byte << 1) | (x_.adjacent(at[i], at[j]) ? 1 : 0));
        if (++bits == 8) {
          c.push_back(byte);
          byte = 0;
          bits = 0;
        }
      }
    if (bits) c.push_back(static_cast<std::uint8_t>(byte << (8 - bits)));
    return c;
  }

  static int compare_prefix(const Trace& t, const Trace& ref) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i >= ref.size()) return 1;
      if (t[i] != ref[i]) return t[i] < ref[i] ? -1 : 1;
    }
    return 0;
  }

  // Automorphism mapping the leaf with labeling `from` onto the leaf `to`.
  Permutation leaf_map(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[to[v]] = v;
    Permutation p(n_);
    for (int v = 0; v < n_; ++v) p[v] = at[from[v]];
    return p;
  }

  void add_generator(Permutation p) {
    if (is_identity(p)) return;
    if (std::find(gens_.begin(), gens_.end(), p) != gens_.end()) return;
    gens_.push_back(std::move(p));
  }

  void dfs(std::vector<int>& col, Trace& trace, std::vector<int>& path) {
    ++nodes_;
    trace.push_back(refine(col));
    const int depth = static_cast<int>(path.size());
    const bool leaf = trace.back().first == n_;

    if (have_first_) {
      const bool on_first = compare_prefix(trace, first_trace_) == 0;
      const int vs_best = compare_prefix(trace, best_trace_);
      if (!on_first && vs_best < 0) {
        trace.pop_back();
        return;
      }
    }

    if (leaf) {
      handle_leaf(col, trace, path);
      trace.pop_back();
      return;
    }

    // target cell: first smallest non-singleton cell
    std::vector<int> size(trace.back().first, 0);
    for (int v = 0; v < n_; ++v) ++size[col[v]];
    int target = -1;
    for (int c = 0; c < static_cast<int>(size.size()); ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (col[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int w : cell) {
      if (!explored.empty()) {
        std::vector<Permutation> stab;
        for (const auto& g : gens_) {
          bool fix = true;
          for (int v : path) fix = fix && g[v] == v;
          if (fix) stab.push_back(g);
        }
        if (!stab.empty()) {
          const auto id = orbit_ids(n_, stab);
          bool seen = false;
          for (int u : explored) seen = seen || id[u] == id[w];
          if (seen) continue;
        }
      }
      explored.push_back(w);
      std::vector<int> child = individualize(col, w);
      path.push_back(w);
      dfs(child, trace, path);
      path.pop_back();
      if (jump_to_ < depth) break;
      if (jump_to_ == depth) jump_to_ = INT_MAX;
    }
    trace.pop_back();
  }

  void handle_leaf(const std::vector<int>& col, const Trace& trace, const std::vector<int>& path) {
    CanonicalCertificate cert = leaf_certificate(col);
    if (!have_first_) {
      have_first_ = true;
      first_trace_ = best_trace_ = trace;
      first_cert_ = best_cert_ = cert;
      first_lab_ = best_lab_ = col;
      first_path_ = path;
      return;
    }
    if (trace == first_trace_ && cert == first_cert_) {
      add_generator(leaf_map(first_lab_, col));
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() && path[common] == first_path_[common]) ++common;
      jump_to_ = static_cast<int>(common);
      return;
    }
    const int vs = compare_prefix(trace, best_trace_);
    if (vs > 0 || (vs == 0 && cert > best_cert_)) {
      best_trace_ = trace;
      best_cert_ = std::move(cert);
      best_lab_ = col;
    } else if (vs == 0 && cert == best_cert_) {
      add_generator(leaf_map(best_lab_, col));
    }
  }

  const SimpleGraph& x_;
  int n_;
  std::vector<int> init_;
  bool have_first_ = false;
  Trace first_trace_, best_trace_;
  CanonicalCertificate first_cert_, best_cert_;
  std::vector<int> first_lab_, best_lab_, first_path_;
  std::vector<Permutation> gens_;
  int jump_to_ = INT_MAX;
  std::size_t nodes_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& x, const std::vector<int>& colors) {
  return Searcher(x, colors).run();
}

CanonicalCertificate canonical_certificate(const SimpleGraph& x, const std::vector<int>& colors) {
  return canonical_form(x, colors).certificate;
}

AutReport automorphism_group(const SimpleGraph& x, const std::vector<int>& colors) {
  return canonical_form(x, colors).aut;
}

AutReport automorphism_group(const BipartiteIncidenceGraph& x) {
  AutReport full = automorphism_group(x.graph);
  const AutReport sides = automorphism_group(x.graph, x.sides());
  full.side_preserving_index = static_cast<int>(full.order / sides.order);
  return full;
}

std::string to_hex(const CanonicalCertificate& c) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(2 * c.size());
  for (auto b : c) {
    s += digits[b >> 4];
    s += digits[b & 15];
  }
  return s;
}

}  // namespace bcay
