#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bcay {

/// Index of a group element. The identity is always element 0.
using Element = int;

/// A set of group elements, stored as a 64-bit mask (groups have order <= 64).
///
/// Ordering is lexicographic on the ascending member lists, which is the
/// order used for canonical cell families and golden files.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> members);
  static ElementSet from(std::span<const Element> members);
  static ElementSet singleton(Element e) { return ElementSet(std::uint64_t{1} << e); }
  /// {0, 1, ..., n-1}
  static ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  [[nodiscard]] bool contains(Element e) const { return (bits_ >> e) & 1U; }
  void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  [[nodiscard]] int size() const { return std::popcount(bits_); }
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] std::uint64_t bits() const { return bits_; }
  [[nodiscard]] Element min() const { return std::countr_zero(bits_); }
  [[nodiscard]] std::vector<Element> members() const;
  [[nodiscard]] bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<Element>(std::countr_zero(b)));
  }

  friend ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(ElementSet a, ElementSet b);

 private:
  std::uint64_t bits_ = 0;
};

std::string to_string(ElementSet s);

/// A finite group given by its multiplication table.
///
/// Construction validates the Latin-square property, the two-sided identity
/// at index 0 and associativity; tables of order above 64 are rejected.
/// Instances are immutable and shared read-only through GroupPtr.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 64;

  FiniteGroup(std::string name, std::vector<std::vector<Element>> table,
              std::vector<std::string> labels = {});

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  [[nodiscard]] Element inv(Element a) const { return inverse_[a]; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] bool abelian() const { return abelian_; }
  [[nodiscard]] bool dedekind() const { return dedekind_; }
  [[nodiscard]] int element_order(Element a) const { return orders_[a]; }
  [[nodiscard]] const std::string& label(Element a) const { return labels_[a]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  /// Element with the given label, if any.
  [[nodiscard]] std::optional<Element> find(const std::string& label) const;
  [[nodiscard]] ElementSet all() const { return ElementSet::full(n_); }
  /// Row-major copy of the table as nested vectors.
  [[nodiscard]] std::vector<std::vector<Element>> table() const;

 private:
  int n_;
  std::string name_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<int> orders_;
  std::vector<std::string> labels_;
  bool abelian_ = false;
  bool dedekind_ = false;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A map G -> G (or G -> Z2 for bipartition homomorphisms).
struct GroupMap {
  enum class Kind { automorphism, homomorphism_to_z2, left_translation };
  std::vector<Element> images;
  Kind kind = Kind::automorphism;

  [[nodiscard]] Element operator()(Element e) const { return images[e]; }
  friend bool operator==(const GroupMap&, const GroupMap&) = default;
};

enum class Side { left, right };

Element multiply(const FiniteGroup& g, Element a, Element b);
ElementSet translate_set(const FiniteGroup& g, Element x, ElementSet c, Side side = Side::left);
ElementSet inverse_set(const FiniteGroup& g, ElementSet c);
/// Image of a set under a map.
ElementSet map_set(const GroupMap& phi, ElementSet c);
/// Closure of S u {e} under multiplication (finite, so inverses come free).
ElementSet generated_subgroup(const FiniteGroup& g, ElementSet s);
bool is_subgroup(const FiniteGroup& g, ElementSet h);
bool is_normal_subgroup(const FiniteGroup& g, ElementSet h);
ElementSet center(const FiniteGroup& g);

/// Greedy generating set: ascending scan, keeping every element not already
/// generated by the earlier picks.
std::vector<Element> generating_set(const FiniteGroup& g);

/// All automorphisms of G, identity first, found by backtracking over the
/// images of a generating set. Throws InvalidArgument when the group has
/// more than `limit` automorphisms.
std::vector<GroupMap> group_automorphisms(const FiniteGroup& g, std::size_t limit = 2'000'000);

bool is_automorphism(const FiniteGroup& g, const GroupMap& phi);
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
GroupMap identity_map(const FiniteGroup& g);
/// Multiplicative order of an automorphism.
int map_order(const GroupMap& phi);

/// A surjective homomorphism G -> Z2 mapping all of S to 1, or nullopt when
/// Cay(G, S) is not bipartite. S must be inverse-closed and avoid the identity.
std::optional<GroupMap> bipartition_homomorphism(const FiniteGroup& g, ElementSet s);

// ---- constructors ---------------------------------------------------------

GroupPtr cyclic(int n);
/// Product of factors; elements are lexicographic tuples, first factor most
/// significant. Equal adjacent factor names collapse to powers ("Z2^4").
GroupPtr direct_product(std::span<const GroupPtr> factors);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
/// Z_n x| Z_m with the generator b acting as a -> a^r. Element a^i b^j has
/// index i*m + j.
GroupPtr semidirect_cyclic(int n, int m, int r);
/// N x| H with action[h] the automorphism of N induced by h.
/// Element (x, h) has index x*|H| + h.
GroupPtr semidirect(const GroupPtr& normal, const GroupPtr& acting,
                    const std::vector<GroupMap>& action, std::string name = {});
/// Dihedral group of order 2n (D4 has order 8).
GroupPtr dihedral(int n);
/// dih(A) = A x| Z2 with the involution inverting A; A must be abelian.
GroupPtr generalized_dihedral(const GroupPtr& a);
/// Dicyclic group of order 4n: <a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>.
GroupPtr dicyclic(int n);
/// Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion();
/// S_n (n <= 5), permutations in lexicographic one-line order, composed as
/// functions: (st)(x) = s(t(x)). Labels use 1-based cycle notation.
GroupPtr symmetric(int n);
GroupPtr alternating4();
/// The non-abelian group of order 21, Z7 x| Z3 with b a b^-1 = a^2.
GroupPtr nonabelian21();
GroupPtr from_table(std::vector<std::vector<Element>> table, std::string name = "raw",
                    std::vector<std::string> labels = {});

/// The subgroup H as a group in its own right; elements keep the ascending
/// order of their indices in G. `embedding[i]` is the G-index of element i.
GroupPtr subgroup_as_group(const FiniteGroup& g, ElementSet h, std::string name,
                           std::vector<Element>* embedding = nullptr);

/// Resolve a descriptor such as "C7", "C3xC3", "D4", "Dic4", "Q8", "SD16",
/// "A4", "S4", "C7:C3", "Z8:Z2", "(Z4xZ2):Z2". Throws UnknownGroup.
GroupPtr parse_group(const std::string& descriptor);

/// The groups of the classification tables (orders 7..16), in table order.
const std::vector<std::string>& catalog_names();
std::vector<GroupPtr> catalog(int min_order = 1, int max_order = 64);

}  // namespace bcay
