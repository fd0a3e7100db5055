#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace covariant {

/// Index of a group element inside its Cayley table (0-based).
using Element = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

enum class AssociativityCheck {
  /// Exhaustive up to order 64, 10*n^2 sampled triples above.
  automatic,
  /// Exhaustive at every order.
  strict,
};

/// A finite group given by a validated Cayley table, where
/// `product(i, j)` is the index of g_i * g_j. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates `table` (square, in range, Latin square, identity, inverses,
  /// associativity). Throws MalformedTable or NotAGroup naming the
  /// witnessing cells. Missing labels default to "g<i>".
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table,
                                std::vector<std::string> labels = {},
                                std::string name = {},
                                AssociativityCheck check = AssociativityCheck::automatic);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }

  Element product(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inverse(Element a) const noexcept { return inverse_[a]; }

  /// x^-1 * s * x. Throws IndexOutOfRange.
  Element conjugate(Element x, Element s) const;

  bool contains(Element x) const noexcept { return x < order_; }
  void require_element(Element x, const char* what = "element") const;

  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool has_explicit_labels() const noexcept { return explicit_labels_; }

  std::vector<std::vector<Element>> table() const;

  bool is_abelian() const noexcept;
  std::size_t element_order(Element x) const;
  /// Conjugacy classes, each sorted, ordered by their minimal element.
  std::vector<std::vector<Element>> conjugacy_classes() const;
  std::vector<Element> center() const;

  /// Exhaustive associativity check; throws NotAGroup with the triple.
  void check_associativity_exhaustive() const;

  /// Same table, with a new display name.
  FiniteGroup renamed(std::string name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_ && a.labels_ == b.labels_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  bool explicit_labels_ = false;
  std::string name_;
};

/// Free-function form of FiniteGroup::conjugate.
inline Element conjugate(const FiniteGroup& g, Element x, Element s) { return g.conjugate(x, s); }

/// A subgroup of a shared parent group. Members are kept sorted.
class Subgroup {
 public:
  /// Throws NotASubgroup when `members` is not closed under product and
  /// inverse or misses the identity; IndexOutOfRange on bad indices.
  static Subgroup from_members(GroupPtr parent, std::vector<Element> members);
  static Subgroup generated_by(GroupPtr parent, std::span<const Element> generators);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const FiniteGroup& group() const noexcept { return *parent_; }
  std::span<const Element> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool is_normal() const noexcept { return normal_; }

  bool contains(Element x) const noexcept {
    return x < position_.size() && position_[x] >= 0;
  }
  /// Position of `s` within members(). Throws NotInDomain.
  std::size_t position(Element s) const;

  /// The subgroup as a standalone group; element i is members()[i].
  FiniteGroup as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_ && (a.parent_ == b.parent_ || *a.parent_ == *b.parent_);
  }

 private:
  Subgroup() = default;

  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<std::int32_t> position_;
  bool normal_ = false;
};

/// Left cosets of a normal subgroup N, with the factor group G/N built on
/// coset indices. Coset i has representatives[i], its minimal element, and
/// cosets are ordered by representative.
struct CosetDecomposition {
  Subgroup subgroup;
  std::vector<Element> representatives;
  std::vector<Element> coset_of;
  GroupPtr quotient;

  std::size_t coset_count() const noexcept { return representatives.size(); }
  /// The canonical map q: G -> G/N.
  Element projection(Element x) const { return coset_of.at(x); }
};

/// Throws NotNormal.
CosetDecomposition coset_decomposition(const Subgroup& n);

/// All normal subgroups sorted by size, then members. Throws TooLarge above
/// order 128.
std::vector<Subgroup> enumerate_normal_subgroups(const GroupPtr& g);

inline constexpr std::size_t kNormalEnumerationLimit = 128;

/// The derived subgroup [H, H] of a subgroup H.
Subgroup commutator_subgroup(const Subgroup& h);

}  // namespace covariant
