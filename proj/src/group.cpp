#include "bcay/group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "bcay/error.hpp"

namespace bcay {

ElementSet::ElementSet(std::initializer_list<Element> members) {
  for (Element e : members) insert(e);
}

ElementSet ElementSet::from(std::span<const Element> members) {
  ElementSet s;
  for (Element e : members) s.insert(e);
  return s;
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for_each([&](Element e) { out.push_back(e); });
  return out;
}

std::strong_ordering operator<=>(ElementSet a, ElementSet b) {
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  const int p = std::countr_zero(diff);
  const std::uint64_t above = p == 63 ? 0 : (~std::uint64_t{0} << (p + 1));
  if (a.contains(p)) {
    // a continues with p; b continues with something larger, or stops.
    return (b.bits_ & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return (a.bits_ & above) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Element e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  return out + "}";
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<Element>> table,
                         std::vector<std::string> labels)
    : n_(static_cast<int>(table.size())), name_(std::move(name)) {
  if (n_ == 0) throw InvalidArgument("group table is empty");
  if (n_ > kMaxOrder) throw InvalidArgument("group order " + std::to_string(n_) + " exceeds 64");
  table_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(table[i].size()) != n_) throw InvalidArgument("group table is not square");
    std::uint64_t seen = 0;
    for (int j = 0; j < n_; ++j) {
      const Element v = table[i][j];
      if (v < 0 || v >= n_) throw InvalidArgument("group table entry out of range");
      seen |= std::uint64_t{1} << v;
      table_[i * n_ + j] = v;
    }
    if (seen != ElementSet::full(n_).bits()) throw InvalidArgument("group table row " + std::to_string(i) + " is not a permutation");
  }
  for (int j = 0; j < n_; ++j) {
    std::uint64_t seen = 0;
    for (int i = 0; i < n_; ++i) seen |= std::uint64_t{1} << mul(i, j);
    if (seen != ElementSet::full(n_).bits()) throw InvalidArgument("group table column " + std::to_string(j) + " is not a permutation");
  }
  for (int i = 0; i < n_; ++i) {
    if (mul(0, i) != i || mul(i, 0) != i) throw InvalidArgument("element 0 is not the identity");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      const Element ab = mul(a, b);
      for (int c = 0; c < n_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) throw InvalidArgument("group table is not associative");
    }

  inverse_.assign(n_, 0);
  orders_.assign(n_, 1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;
    Element x = a;
    while (x != 0) {
      x = mul(x, a);
      ++orders_[a];
    }
  }
  abelian_ = true;
  for (int a = 0; a < n_ && abelian_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
  dedekind_ = true;
  for (int a = 0; a < n_ && dedekind_; ++a)
    dedekind_ = is_normal_subgroup(*this, generated_subgroup(*this, ElementSet::singleton(a)));

  if (labels.empty()) {
    for (int i = 0; i < n_; ++i) labels.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n_) throw InvalidArgument("label count does not match group order");
  labels_ = std::move(labels);
}

std::optional<Element> FiniteGroup::find(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(n_, std::vector<Element>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = mul(i, j);
  return out;
}

Element multiply(const FiniteGroup& g, Element a, Element b) { return g.mul(a, b); }

ElementSet translate_set(const FiniteGroup& g, Element x, ElementSet c, Side side) {
  ElementSet out;
  c.for_each([&](Element s) { out.insert(side == Side::left ? g.mul(x, s) : g.mul(s, x)); });
  return out;
}

ElementSet inverse_set(const FiniteGroup& g, ElementSet c) {
  ElementSet out;
  c.for_each([&](Element s) { out.insert(g.inv(s)); });
  return out;
}

ElementSet map_set(const GroupMap& phi, ElementSet c) {
  ElementSet out;
  c.for_each([&](Element s) { out.insert(phi(s)); });
  return out;
}

ElementSet generated_subgroup(const FiniteGroup& g, ElementSet s) {
  ElementSet h = ElementSet::singleton(0);
  std::vector<Element> frontier{0};
  const auto gens = s.members();
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element t : gens) {
      const Element y = g.mul(x, t);
      if (!h.contains(y)) {
        h.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return h;
}

bool is_subgroup(const FiniteGroup& g, ElementSet h) {
  if (!h.contains(0)) return false;
  bool ok = true;
  h.for_each([&](Element a) {
    if (!h.contains(g.inv(a))) ok = false;
    h.for_each([&](Element b) {
      if (!h.contains(g.mul(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_normal_subgroup(const FiniteGroup& g, ElementSet h) {
  if (!is_subgroup(g, h)) return false;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    h.for_each([&](Element a) {
      if (!h.contains(g.mul(g.mul(x, a), g.inv(x)))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

ElementSet center(const FiniteGroup& g) {
  ElementSet z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.insert(a);
  }
  return z;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  ElementSet h = ElementSet::singleton(0);
  for (int a = 1; a < g.order() && h != g.all(); ++a) {
    if (h.contains(a)) continue;
    gens.push_back(a);
    h = generated_subgroup(g, ElementSet::from(gens));
  }
  return gens;
}

namespace {

// Extends a partial homomorphism defined on gens[0..count) to the subgroup
// they generate. Returns false on an inconsistency or a collision.
bool extend_map(const FiniteGroup& g, const std::vector<Element>& gens, const std::vector<Element>& imgs,
                std::size_t count, std::vector<Element>& f, std::vector<char>& used) {
  std::fill(f.begin(), f.end(), -1);
  std::fill(used.begin(), used.end(), 0);
  f[0] = 0;
  used[0] = 1;
  std::vector<Element> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element x = queue[q];
    for (std::size_t j = 0; j < count; ++j) {
      const Element y = g.mul(x, gens[j]);
      const Element fy = g.mul(f[x], imgs[j]);
      if (f[y] >= 0) {
        if (f[y] != fy) return false;
        continue;
      }
      if (used[fy]) return false;
      f[y] = fy;
      used[fy] = 1;
      queue.push_back(y);
    }
  }
  return true;
}

}  // namespace

std::vector<GroupMap> group_automorphisms(const FiniteGroup& g, std::size_t limit) {
  const int n = g.order();
  const auto gens = generating_set(g);
  std::vector<GroupMap> out;
  std::vector<Element> imgs(gens.size(), 0);
  std::vector<Element> f(n);
  std::vector<char> used(n);

  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == gens.size()) {
      extend_map(g, gens, imgs, depth, f, used);
      out.push_back(GroupMap{f, GroupMap::Kind::automorphism});
      if (out.size() > limit)
        throw InvalidArgument("group " + g.name() + " has more than " + std::to_string(limit) + " automorphisms");
      return;
    }
    for (int y = 1; y < n; ++y) {
      if (g.element_order(y) != g.element_order(gens[depth])) continue;
      imgs[depth] = y;
      if (extend_map(g, gens, imgs, depth + 1, f, used)) rec(depth + 1);
    }
  };
  if (gens.empty()) return {identity_map(g)};
  rec(0);
  // identity first, the rest in lexicographic image order
  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) { return a.images < b.images; });
  return out;
}

bool is_automorphism(const FiniteGroup& g, const GroupMap& phi) {
  const int n = g.order();
  if (static_cast<int>(phi.images.size()) != n || phi.images[0] != 0) return false;
  std::uint64_t seen = 0;
  for (int i = 0; i < n; ++i) {
    if (phi.images[i] < 0 || phi.images[i] >= n) return false;
    seen |= std::uint64_t{1} << phi.images[i];
  }
  if (seen != g.all().bits()) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi(g.mul(a, b)) != g.mul(phi(a), phi(b))) return false;
  return true;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  GroupMap r{inner.images, outer.kind};
  for (auto& x : r.images) x = outer.images[x];
  return r;
}

GroupMap identity_map(const FiniteGroup& g) {
  GroupMap r;
  r.images.resize(g.order());
  std::iota(r.images.begin(), r.images.end(), 0);
  return r;
}

int map_order(const GroupMap& phi) {
  GroupMap p = phi;
  int k = 1;
  auto is_id = [](const GroupMap& m) {
    for (std::size_t i = 0; i < m.images.size(); ++i)
      if (m.images[i] != static_cast<Element>(i)) return false;
    return true;
  };
  while (!is_id(p)) {
    p = compose(phi, p);
    ++k;
  }
  return k;
}

std::optional<GroupMap> bipartition_homomorphism(const FiniteGroup& g, ElementSet s) {
  if (s.contains(0)) throw InvalidArgument("connection set contains the identity");
  if (inverse_set(g, s) != s) throw InvalidArgument("connection set is not inverse-closed");
  const auto gens = generating_set(g);
  const int n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    std::vector<Element> f(n, -1);
    f[0] = 0;
    std::vector<Element> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      const Element x = queue[q];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Element y = g.mul(x, gens[j]);
        const Element fy = f[x] ^ static_cast<Element>((mask >> j) & 1U);
        if (f[y] < 0) {
          f[y] = fy;
          queue.push_back(y);
        } else if (f[y] != fy) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    bool hom = true;
    for (int a = 0; a < n && hom; ++a)
      for (int b = 0; b < n && hom; ++b) hom = f[g.mul(a, b)] == (f[a] ^ f[b]);
    if (!hom) continue;
    bool fiber = true;
    s.for_each([&](Element x) {
      if (f[x] != 1) fiber = false;
    });
    if (fiber) return GroupMap{f, GroupMap::Kind::homomorphism_to_z2};
  }
  return std::nullopt;
}

// ---- constructors ---------------------------------------------------------

namespace {

using Table = std::vector<std::vector<Element>>;

std::string power_label(const std::string& base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

int mod(long long a, int n) { return static_cast<int>(((a % n) + n) % n); }

}  // namespace

GroupPtr from_table(Table table, std::string name, std::vector<std::string> labels) {
  return std::make_shared<const FiniteGroup>(std::move(name), std::move(table), std::move(labels));
}

GroupPtr cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  Table t(n, std::vector<Element>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return from_table(std::move(t), "Z" + std::to_string(n));
}

namespace {

std::string product_name(std::span<const GroupPtr> factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j]->name() == factors[i]->name()) ++j;
    std::string nm = factors[i]->name();
    const bool compound = nm.find_first_of("x:") != std::string::npos && nm.rfind("Dih(", 0) != 0;
    if (compound) nm = "(" + nm + ")";
    if (!out.empty()) out += "x";
    out += nm;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

GroupPtr direct_product(std::span<const GroupPtr> factors) {
  if (factors.empty()) throw InvalidArgument("direct product of no factors");
  long long n = 1;
  for (const auto& f : factors) n *= f->order();
  if (n > FiniteGroup::kMaxOrder) throw InvalidArgument("direct product exceeds order 64");
  const int total = static_cast<int>(n);
  const std::size_t m = factors.size();
  std::vector<std::vector<int>> digits(total, std::vector<int>(m));
  for (int idx = 0; idx < total; ++idx) {
    int r = idx;
    for (std::size_t f = m; f-- > 0;) {
      digits[idx][f] = r % factors[f]->order();
      r /= factors[f]->order();
    }
  }
  auto encode = [&](const std::vector<int>& d) {
    int idx = 0;
    for (std::size_t f = 0; f < m; ++f) idx = idx * factors[f]->order() + d[f];
    return idx;
  };
  Table t(total, std::vector<Element>(total));
  std::vector<int> d(m);
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      for (std::size_t f = 0; f < m; ++f) d[f] = factors[f]->mul(digits[a][f], digits[b][f]);
      t[a][b] = encode(d);
    }
  std::vector<std::string> labels(total);
  for (int a = 0; a < total; ++a) {
    std::string l = "(";
    for (std::size_t f = 0; f < m; ++f) {
      if (f) l += ",";
      l += factors[f]->label(digits[a][f]);
    }
    labels[a] = l + ")";
  }
  return from_table(std::move(t), product_name(factors), std::move(labels));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::vector<GroupPtr> f{a, b};
  return direct_product(f);
}

GroupPtr semidirect_cyclic(int n, int m, int r) {
  if (n < 1 || m < 1 || n * m > FiniteGroup::kMaxOrder) throw InvalidArgument("semidirect product parameters out of range");
  long long rm = 1;
  for (int i = 0; i < m; ++i) rm = rm * r % n;
  if (std::gcd(r, n) != 1 || rm % n != 1 % n) throw InvalidArgument("a -> a^" + std::to_string(r) + " does not define an action of Z" + std::to_string(m));
  std::vector<int> rpow(m, 1);
  for (int j = 1; j < m; ++j) rpow[j] = rpow[j - 1] * r % n;
  const int total = n * m;
  Table t(total, std::vector<Element>(total));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < m; ++l) t[i * m + j][k * m + l] = mod(i + static_cast<long long>(rpow[j]) * k, n) * m + (j + l) % m;
  std::vector<std::string> labels(total);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      std::string l = power_label("a", i) + power_label("b", j);
      labels[i * m + j] = l.empty() ? "e" : l;
    }
  return from_table(std::move(t), "Z" + std::to_string(n) + ":Z" + std::to_string(m), std::move(labels));
}

GroupPtr semidirect(const GroupPtr& normal, const GroupPtr& acting, const std::vector<GroupMap>& action,
                    std::string name) {
  const int nn = normal->order();
  const int nh = acting->order();
  if (static_cast<int>(action.size()) != nh) throw InvalidArgument("semidirect action needs one map per acting element");
  if (nn * nh > FiniteGroup::kMaxOrder) throw InvalidArgument("semidirect product exceeds order 64");
  for (int h = 0; h < nh; ++h)
    if (!is_automorphism(*normal, action[h])) throw InvalidArgument("semidirect action is not by automorphisms");
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2)
      if (action[acting->mul(h1, h2)].images != compose(action[h1], action[h2]).images)
        throw InvalidArgument("semidirect action is not a homomorphism");
  const int total = nn * nh;
  Table t(total, std::vector<Element>(total));
  for (int x1 = 0; x1 < nn; ++x1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int x2 = 0; x2 < nn; ++x2)
        for (int h2 = 0; h2 < nh; ++h2)
          t[x1 * nh + h1][x2 * nh + h2] = normal->mul(x1, action[h1](x2)) * nh + acting->mul(h1, h2);
  std::vector<std::string> labels(total);
  for (int x = 0; x < nn; ++x)
    for (int h = 0; h < nh; ++h) labels[x * nh + h] = "(" + normal->label(x) + "," + acting->label(h) + ")";
  if (name.empty()) name = "(" + normal->name() + "):" + acting->name();
  return from_table(std::move(t), std::move(name), std::move(labels));
}

GroupPtr dihedral(int n) {
  if (n < 2) throw InvalidArgument("dihedral group needs n >= 2");
  auto g = semidirect_cyclic(n, 2, n - 1);
  return from_table(g->table(), "D" + std::to_string(n), g->labels());
}

GroupPtr generalized_dihedral(const GroupPtr& a) {
  if (!a->abelian()) throw InvalidArgument("generalized dihedral group needs an abelian group");
  GroupMap inversion;
  inversion.images.resize(a->order());
  for (int i = 0; i < a->order(); ++i) inversion.images[i] = a->inv(i);
  return semidirect(a, cyclic(2), {identity_map(*a), inversion}, "Dih(" + a->name() + ")");
}

GroupPtr dicyclic(int n) {
  if (n < 1 || 4 * n > FiniteGroup::kMaxOrder) throw InvalidArgument("dicyclic parameter out of range");
  const int m = 2 * n;
  const int total = 2 * m;
  Table t(total, std::vector<Element>(total));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          int e = i + (j ? -k : k);
          if (j && l) e += n;
          t[i * 2 + j][k * 2 + l] = mod(e, m) * 2 + (j ^ l);
        }
  std::vector<std::string> labels(total);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string l = power_label("a", i) + power_label("x", j);
      labels[i * 2 + j] = l.empty() ? "e" : l;
    }
  return from_table(std::move(t), "Dic" + std::to_string(n), std::move(labels));
}

GroupPtr quaternion() {
  // units 1,i,j,k as 0..3; u*v = sign * unit
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Table t(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      int s = sign[ua][ub] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      t[a][b] = unit[ua][ub] * 2 + (s < 0 ? 1 : 0);
    }
  return from_table(std::move(t), "Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

namespace {

std::string cycle_label(const std::vector<int>& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) continue;
    out += "(";
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = 1;
      out += std::to_string(x + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

}  // namespace

GroupPtr symmetric(int n) {
  if (n < 1 || n > 5) throw InvalidArgument("symmetric groups are supported for n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int total = static_cast<int>(perms.size());
  if (total > FiniteGroup::kMaxOrder) throw InvalidArgument("symmetric group exceeds order 64");
  Table t(total, std::vector<Element>(total));
  std::vector<int> c(n);
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index[c];
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_label(q));
  return from_table(std::move(t), "S" + std::to_string(n), std::move(labels));
}

GroupPtr subgroup_as_group(const FiniteGroup& g, ElementSet h, std::string name, std::vector<Element>* embedding) {
  if (!is_subgroup(g, h)) throw InvalidArgument("set is not a subgroup");
  const auto elems = h.members();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
  Table t(elems.size(), std::vector<Element>(elems.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    labels.push_back(g.label(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = local[g.mul(elems[i], elems[j])];
  }
  if (embedding) *embedding = elems;
  return from_table(std::move(t), std::move(name), std::move(labels));
}

GroupPtr alternating4() {
  auto s4 = symmetric(4);
  // even permutations: those with an even number of inversions
  ElementSet even;
  std::vector<int> p{0, 1, 2, 3};
  int idx = 0;
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inv += p[i] > p[j];
    if (inv % 2 == 0) even.insert(idx);
    ++idx;
  } while (std::next_permutation(p.begin(), p.end()));
  return subgroup_as_group(*s4, even, "A4");
}

GroupPtr nonabelian21() {
  auto g = semidirect_cyclic(7, 3, 2);
  return from_table(g->table(), "Z7:Z3", g->labels());
}

namespace {

GroupPtr pauli_group() {
  auto n = direct_product(cyclic(4), cyclic(2));
  GroupMap phi;
  phi.images.resize(8);
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 2; ++c) phi.images[a * 2 + c] = ((a + 2 * c) % 4) * 2 + c;
  return semidirect(n, cyclic(2), {identity_map(*n), phi}, "(Z4xZ2):Z2");
}

GroupPtr z2sq_by_z4() {
  auto n = direct_product(cyclic(2), cyclic(2));
  GroupMap swap{{0, 2, 1, 3}, GroupMap::Kind::automorphism};
  std::vector<GroupMap> action{identity_map(*n), swap, identity_map(*n), swap};
  return semidirect(n, cyclic(4), action, "Z2^2:Z4");
}

GroupPtr renamed(const GroupPtr& g, const std::string& name) {
  return from_table(g->table(), name, g->labels());
}

GroupPtr power(int base, int k) {
  std::vector<GroupPtr> f(k, cyclic(base));
  return direct_product(f);
}

const std::vector<std::pair<std::string, std::function<GroupPtr()>>>& catalog_builders() {
  static const std::vector<std::pair<std::string, std::function<GroupPtr()>>> builders = {
      {"Z7", [] { return cyclic(7); }},
      {"Z8", [] { return cyclic(8); }},
      {"Z4xZ2", [] { return direct_product(cyclic(4), cyclic(2)); }},
      {"Z2^3", [] { return power(2, 3); }},
      {"D4", [] { return dihedral(4); }},
      {"Q8", [] { return quaternion(); }},
      {"Z9", [] { return cyclic(9); }},
      {"Z3^2", [] { return power(3, 2); }},
      {"Z10", [] { return cyclic(10); }},
      {"D5", [] { return dihedral(5); }},
      {"Z11", [] { return cyclic(11); }},
      {"Z12", [] { return cyclic(12); }},
      {"Z6xZ2", [] { return direct_product(cyclic(6), cyclic(2)); }},
      {"D6", [] { return dihedral(6); }},
      {"Dic3", [] { return dicyclic(3); }},
      {"A4", [] { return alternating4(); }},
      {"Z13", [] { return cyclic(13); }},
      {"Z14", [] { return cyclic(14); }},
      {"D7", [] { return dihedral(7); }},
      {"Z15", [] { return cyclic(15); }},
      {"Z16", [] { return cyclic(16); }},
      {"Z4^2", [] { return power(4, 2); }},
      {"Z8xZ2", [] { return direct_product(cyclic(8), cyclic(2)); }},
      {"Z4xZ2^2", [] {
         const std::vector<GroupPtr> f{cyclic(4), cyclic(2), cyclic(2)};
         return direct_product(f);
       }},
      {"Z2^4", [] { return power(2, 4); }},
      {"D8", [] { return dihedral(8); }},
      {"Dic4", [] { return dicyclic(4); }},
      {"Z4:Z4", [] { return semidirect_cyclic(4, 4, 3); }},
      {"Z2^2:Z4", [] { return z2sq_by_z4(); }},
      {"Z8:Z2", [] { return semidirect_cyclic(8, 2, 5); }},
      {"QD8", [] { return renamed(semidirect_cyclic(8, 2, 3), "QD8"); }},
      {"D4xZ2", [] { return direct_product(dihedral(4), cyclic(2)); }},
      {"Q8xZ2", [] { return direct_product(quaternion(), cyclic(2)); }},
      {"(Z4xZ2):Z2", [] { return pauli_group(); }},
  };
  return builders;
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a = {
      {"SD16", "QD8"},        {"M16", "Z8:Z2"},       {"Pauli", "(Z4xZ2):Z2"}, {"Z2xZ2xZ2", "Z2^3"},
      {"Z3xZ3", "Z3^2"},      {"Z4xZ4", "Z4^2"},      {"Z2xZ2xZ2xZ2", "Z2^4"}, {"Z4xZ2xZ2", "Z4xZ2^2"},
      {"(Z2xZ2):Z4", "Z2^2:Z4"}, {"Z2^2xZ4", "Z4xZ2^2"}, {"Dic2", "Q8"},      {"F21", "Z7:Z3"},
      {"Z7:Z3", "Z7:Z3"},
  };
  return a;
}

std::string normalize_descriptor(const std::string& in) {
  std::string s;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const char c = in[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    // "C7" -> "Z7"; leave "Dic" alone
    if (c == 'C' && i + 1 < in.size() && std::isdigit(static_cast<unsigned char>(in[i + 1]))) {
      s += 'Z';
      continue;
    }
    s += c;
  }
  return s;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 3) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  out = std::stoi(s);
  return true;
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

GroupPtr lookup_catalog(const std::string& s) {
  for (const auto& [name, build] : catalog_builders())
    if (name == s) return build();
  auto it = aliases().find(s);
  if (it != aliases().end()) {
    if (it->second == "Z7:Z3") return nonabelian21();
    return lookup_catalog(it->second);
  }
  return nullptr;
}

GroupPtr parse_normalized(const std::string& s);

GroupPtr parse_atom(const std::string& s) {
  if (auto g = lookup_catalog(s)) return g;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return parse_normalized(s.substr(1, s.size() - 2));
  if (s.rfind("Dih(", 0) == 0 && s.back() == ')') return generalized_dihedral(parse_normalized(s.substr(4, s.size() - 5)));
  int a = 0, b = 0;
  if (s.rfind("Dic", 0) == 0 && parse_int(s.substr(3), a)) return dicyclic(a);
  if (s.rfind("QD", 0) == 0 && parse_int(s.substr(2), a) && a >= 4 && (a & (a - 1)) == 0)
    return renamed(semidirect_cyclic(a, 2, a / 2 - 1), s);
  if (s[0] == 'D' && parse_int(s.substr(1), a)) return dihedral(a);
  if (s[0] == 'S' && parse_int(s.substr(1), a)) return symmetric(a);
  if (s == "Q8") return quaternion();
  if (s[0] == 'Z') {
    const auto caret = s.find('^');
    if (caret == std::string::npos) {
      if (parse_int(s.substr(1), a)) return cyclic(a);
    } else if (parse_int(s.substr(1, caret - 1), a) && parse_int(s.substr(caret + 1), b)) {
      if (a < 1 || b < 1) return nullptr;
      return power(a, b);
    }
  }
  // Zn:Zm or Zn:Zm@r
  const auto colon = s.find(':');
  if (colon != std::string::npos && s[0] == 'Z' && s[colon + 1] == 'Z') {
    const auto at = s.find('@');
    std::string ms = s.substr(colon + 2, at == std::string::npos ? std::string::npos : at - colon - 2);
    if (parse_int(s.substr(1, colon - 1), a) && parse_int(ms, b) && a >= 1 && b >= 1 && a * b <= FiniteGroup::kMaxOrder) {
      int r = 0;
      if (at != std::string::npos) {
        if (!parse_int(s.substr(at + 1), r)) return nullptr;
      } else {
        for (int cand = 2; cand < a && r == 0; ++cand) {
          long long x = 1;
          for (int i = 0; i < b; ++i) x = x * cand % a;
          if (x == 1 && std::gcd(cand, a) == 1) r = cand;
        }
        if (r == 0) return nullptr;
      }
      return semidirect_cyclic(a, b, r);
    }
  }
  return nullptr;
}

GroupPtr parse_normalized(const std::string& s) {
  if (s.empty()) return nullptr;
  if (auto g = lookup_catalog(s)) return g;
  const auto parts = split_top(s, 'x');
  if (parts.size() > 1) {
    std::vector<GroupPtr> factors;
    for (const auto& p : parts) {
      auto f = parse_atom(p);
      if (!f) return nullptr;
      factors.push_back(f);
    }
    auto g = direct_product(factors);
    // prefer the catalog name when the product spells one
    if (auto it = aliases().find(g->name()); it != aliases().end() && it->second != "Z7:Z3")
      return renamed(g, it->second);
    return g;
  }
  return parse_atom(s);
}

}  // namespace

GroupPtr parse_group(const std::string& descriptor) {
  GroupPtr g;
  try {
    g = parse_normalized(normalize_descriptor(descriptor));
  } catch (const InvalidArgument& e) {
    throw UnknownGroup("cannot build group '" + descriptor + "': " + e.what());
  }
  if (!g) throw UnknownGroup("unknown group descriptor '" + descriptor + "'");
  return g;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, build] : catalog_builders()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<GroupPtr> catalog(int min_order, int max_order) {
  std::vector<GroupPtr> out;
  for (const auto& [name, build] : catalog_builders()) {
    auto g = build();
    if (g->order() >= min_order && g->order() <= max_order) out.push_back(g);
  }
  return out;
}

}  // namespace bcay
