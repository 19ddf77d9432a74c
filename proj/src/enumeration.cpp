#include "bcay/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "bcay/cayley.hpp"
#include "bcay/error.hpp"

namespace bcay {

namespace {

using Clock = std::chrono::steady_clock;

ClassificationRecord classify_with(const CellFamily& f, const BipartiteIncidenceGraph& x, CanonicalForm form) {
  ClassificationRecord r;
  r.group = f.g().name();
  r.ell = f.ell;
  r.k = f.k;
  r.girth = girth(x.graph).value_or(0);
  const BetaReport beta = translate_classes(f);
  r.beta_transitive = beta.beta_transitive;
  r.beta_regular = beta.beta_regular;
  r.aut_order = form.aut.order;
  r.orbit_count = static_cast<int>(form.aut.vertex_orbits.size());
  try {
    const CayleyResult c = is_cayley_graph(x.graph, form.aut, constructive_generators(x, f));
    r.is_cayley = c.is_cayley;
    r.cayley_method = c.method;
  } catch (const InvalidArgument&) {
    r.cayley_method = "undetermined";
  }
  r.spectrum = spectrum_direct(x.graph);
  r.family = f;
  r.certificate = std::move(form.certificate);
  return r;
}

void require_nontrivial(const CellFamily& f) {
  if (!f.valid()) throw InvalidArgument("family is not bcay-valid: " + f.violation.describe());
  if (f.ell < 2 || f.k < 3) throw InvalidArgument("family is trivial (needs ell >= 2 and k >= 3)");
  if (!is_connected(f)) throw InvalidArgument("family is not connected");
}

struct TranslateClassCandidate {
  int k = 0;
  ElementSet rep;
  std::vector<ElementSet> members;
  std::uint64_t mask = 0;  // union of the members without the identity
};

// Valid translate classes with cells of size 3..(n+1)/2, by k then representative.
std::vector<TranslateClassCandidate> candidate_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<TranslateClassCandidate> out;
  for (int k = 3; 2 * (k - 1) <= n - 1; ++k) {
    // subsets of {1..n-1} of size k-1 in lexicographic order
    std::vector<int> idx(k - 1);
    for (int i = 0; i < k - 1; ++i) idx[i] = i + 1;
    while (true) {
      ElementSet c{0};
      for (int v : idx) c.insert(v);
      auto members = translate_class_of(g, c);
      if (members.front() == c) {
        std::uint64_t mask = 0;
        int total = 0;
        for (ElementSet m : members) {
          mask |= m.bits();
          total += m.size() - 1;
        }
        mask &= ~std::uint64_t{1};
        if (std::popcount(mask) == total) out.push_back({k, c, std::move(members), mask});
      }
      int i = k - 2;
      while (i >= 0 && idx[i] == n - 1 - (k - 2 - i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

using FamilyKey = std::vector<std::uint64_t>;

FamilyKey key_of(std::vector<ElementSet> cells) {
  std::sort(cells.begin(), cells.end());
  FamilyKey k;
  k.reserve(cells.size());
  for (ElementSet c : cells) k.push_back(c.bits());
  return k;
}

class Budget {
 public:
  explicit Budget(double seconds) : start_(Clock::now()), seconds_(seconds) {}
  [[nodiscard]] double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  bool exceeded() {
    if (!hit_.load() && seconds_ > 0 && elapsed() > seconds_) hit_.store(true);
    return hit_.load();
  }
  [[nodiscard]] bool hit() const { return hit_.load(); }

 private:
  Clock::time_point start_;
  double seconds_;
  std::atomic<bool> hit_{false};
};

// Runs fn(i) for i in [0, count) on `workers` threads; stops handing out
// work once the budget is exceeded. done[i] marks finished items.
void parallel_for(std::size_t count, int workers, Budget& budget, std::vector<char>& done,
                  const std::function<void(std::size_t)>& fn) {
  done.assign(count, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || budget.exceeded()) return;
      fn(i);
      done[i] = 1;
    }
  };
  const int t = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (t == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < t; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

// Search over unions of pairwise disjoint classes; calls emit(cells) for each
// non-trivial union whose connection set generates G. Returns false when the
// budget ran out.
bool search_families(const FiniteGroup& g, const std::vector<TranslateClassCandidate>& classes, Budget* budget,
                     const std::function<void(std::vector<ElementSet>)>& emit) {
  const ElementSet all = g.all();
  std::size_t nodes = 0;
  bool stopped = false;
  std::vector<int> chosen;
  std::function<void(std::size_t, std::uint64_t, int)> dfs = [&](std::size_t start, std::uint64_t mask, int ell) {
    for (std::size_t i = start; i < classes.size() && !stopped; ++i) {
      const auto& c = classes[i];
      if (!chosen.empty() && c.k != classes[chosen.front()].k) break;
      if (mask & c.mask) continue;
      if (budget && (++nodes & 1023U) == 0 && budget->exceeded()) {
        stopped = true;
        return;
      }
      chosen.push_back(static_cast<int>(i));
      const std::uint64_t m2 = mask | c.mask;
      const int l2 = ell + static_cast<int>(c.members.size());
      if (l2 >= 2 && generated_subgroup(g, ElementSet(m2)) == all) {
        std::vector<ElementSet> cells;
        for (int j : chosen) cells.insert(cells.end(), classes[j].members.begin(), classes[j].members.end());
        emit(std::move(cells));
      }
      dfs(i + 1, m2, l2);
      chosen.pop_back();
    }
  };
  for (std::size_t i = 0; i < classes.size() && !stopped; ++i) {
    chosen.assign(1, static_cast<int>(i));
    const auto& c = classes[i];
    const int l = static_cast<int>(c.members.size());
    if (l >= 2 && generated_subgroup(g, ElementSet(c.mask)) == all) emit(c.members);
    dfs(i + 1, c.mask, l);
  }
  return !stopped;
}

}  // namespace

ClassificationRecord classify(const CellFamily& f) {
  require_nontrivial(f);
  const auto x = build_bcay(f);
  return classify_with(f, x, canonical_form(x.graph));
}

bool record_less(const ClassificationRecord& a, const ClassificationRecord& b) {
  return std::tie(a.k, a.ell, a.girth, a.aut_order, a.orbit_count, a.certificate) <
         std::tie(b.k, b.ell, b.girth, b.aut_order, b.orbit_count, b.certificate);
}

std::vector<CellFamily> enumerate_families(const GroupPtr& group) {
  std::vector<CellFamily> out;
  search_families(*group, candidate_classes(*group), nullptr,
                  [&](std::vector<ElementSet> cells) { out.push_back(validate_family(group, std::move(cells))); });
  return out;
}

EnumerationReport enumerate_group(const GroupPtr& group, const EnumerationOptions& options) {
  const FiniteGroup& g = *group;
  Budget budget(options.budget_seconds);
  EnumerationReport rep;
  rep.group = g.name();

  std::vector<GroupMap> auts;
  try {
    auts = group_automorphisms(g, 200'000);
  } catch (const InvalidArgument&) {
    // no pre-screen; certificates alone deduplicate
  }

  std::set<FamilyKey> seen;
  std::vector<CellFamily> reps;
  const bool finished = search_families(g, candidate_classes(g), &budget, [&](std::vector<ElementSet> cells) {
    ++rep.families;
    FamilyKey key = key_of(cells);
    if (seen.count(key)) return;
    for (const auto& phi : auts) {
      std::vector<ElementSet> img;
      img.reserve(cells.size());
      for (ElementSet c : cells) img.push_back(map_set(phi, c));
      seen.insert(key_of(std::move(img)));
    }
    seen.insert(std::move(key));
    reps.push_back(validate_family(group, std::move(cells)));
  });
  rep.orbit_reps = reps.size();

  std::vector<BipartiteIncidenceGraph> graphs(reps.size());
  std::vector<CanonicalForm> forms(reps.size());
  std::vector<char> done;
  parallel_for(reps.size(), options.workers, budget, done, [&](std::size_t i) {
    graphs[i] = build_bcay(reps[i]);
    forms[i] = canonical_form(graphs[i].graph);
  });

  std::map<CanonicalCertificate, std::size_t> first;
  std::vector<std::size_t> unique;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (done[i] && first.emplace(forms[i].certificate, i).second) unique.push_back(i);

  std::vector<ClassificationRecord> records(unique.size());
  std::vector<char> classified;
  parallel_for(unique.size(), options.workers, budget, classified, [&](std::size_t j) {
    const std::size_t i = unique[j];
    records[j] = classify_with(reps[i], graphs[i], forms[i]);
  });
  for (std::size_t j = 0; j < unique.size(); ++j)
    if (classified[j]) rep.records.push_back(std::move(records[j]));
  std::sort(rep.records.begin(), rep.records.end(), record_less);

  rep.count = static_cast<int>(rep.records.size());
  rep.complete = finished && !budget.hit();
  rep.seconds = budget.elapsed();
  return rep;
}

bool record_matches(const ClassificationRecord& r, const GoldenRow& row) {
  return r.ell == row.ell && r.k == row.k && (!row.girth || *row.girth == r.girth) && r.is_cayley == row.cayley &&
         r.aut_order == row.aut_order && r.orbit_count == row.orbits;
}

std::string format_row(const GoldenRow& row) {
  std::string s = "(" + std::to_string(row.ell) + "," + std::to_string(row.k) + ",";
  if (row.girth) s += std::to_string(*row.girth) + ",";
  return s + (row.cayley ? "Yes" : "No") + "," + std::to_string(row.aut_order) + "," + std::to_string(row.orbits) + ")";
}

std::string format_record(const ClassificationRecord& r, bool with_girth) {
  std::string s = "(" + std::to_string(r.ell) + "," + std::to_string(r.k) + ",";
  if (with_girth) s += std::to_string(r.girth) + ",";
  s += r.is_cayley ? (*r.is_cayley ? "Yes" : "No") : "?";
  return s + "," + std::to_string(r.aut_order) + "," + std::to_string(r.orbit_count) + ")";
}

GroupComparison compare_report(const EnumerationReport& report, std::optional<int> expected_count,
                               const std::vector<GoldenRow>& rows) {
  GroupComparison c;
  c.group = report.group;
  c.count = report.count;
  c.expected_count = expected_count;
  if (rows.empty()) return c;
  c.rows_checked = true;
  std::vector<char> used(report.records.size(), 0);
  for (const auto& row : rows) {
    bool found = false;
    for (std::size_t i = 0; i < report.records.size() && !found; ++i)
      if (!used[i] && record_matches(report.records[i], row)) used[i] = found = true;
    if (!found) c.missing.push_back(row);
  }
  for (std::size_t i = 0; i < report.records.size(); ++i)
    if (!used[i]) c.extra.push_back(&report.records[i]);
  return c;
}

}  // namespace bcay
