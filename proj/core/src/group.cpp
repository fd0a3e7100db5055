#include "covariant/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "covariant/errors.hpp"
#include "covariant/random.hpp"

namespace covariant {
namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 64;

std::string cell(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table,
                                    std::vector<std::string> labels, std::string name,
                                    AssociativityCheck check) {
  const std::size_t n = table.size();
  if (n == 0) throw MalformedTable("table is empty");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw MalformedTable("table is not square: row " + std::to_string(r) + " has " +
                           std::to_string(table[r].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) {
        throw MalformedTable("cell " + cell(r, c) + " = " + std::to_string(table[r][c]) +
                             " is out of range [0," + std::to_string(n) + ")");
      }
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw MalformedTable("labels has " + std::to_string(labels.size()) + " entries, expected " +
                         std::to_string(n));
  }

  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t r = 0; r < n; ++r) std::copy(table[r].begin(), table[r].end(), g.table_.begin() + r * n);

  // Latin square: rows, then columns.
  std::vector<std::int64_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t c = 0; c < n; ++c) {
      const Element v = g.table_[r * n + c];
      if (seen[v] >= 0) {
        throw NotAGroup("row " + std::to_string(r) + " is not a permutation: element " +
                        std::to_string(v) + " appears at cells " +
                        cell(r, static_cast<std::size_t>(seen[v])) + " and " + cell(r, c));
      }
      seen[v] = static_cast<std::int64_t>(c);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::size_t r = 0; r < n; ++r) {
      const Element v = g.table_[r * n + c];
      if (seen[v] >= 0) {
        throw NotAGroup("column " + std::to_string(c) + " is not a permutation: element " +
                        std::to_string(v) + " appears at cells " +
                        cell(static_cast<std::size_t>(seen[v]), c) + " and " + cell(r, c));
      }
      seen[v] = static_cast<std::int64_t>(r);
    }
  }

  // Two-sided identity.
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = g.table_[e * n + x] == x && g.table_[x * n + e] == x;
    }
    if (ok) {
      g.identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw NotAGroup("no element acts as a two-sided identity");

  g.inverse_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = 0;
    while (g.table_[x * n + y] != g.identity_) ++y;  // exists by the Latin property
    if (g.table_[y * n + x] != g.identity_) {
      throw NotAGroup("element " + std::to_string(x) + " has no two-sided inverse: cell " +
                      cell(x, y) + " is the identity but cell " + cell(y, x) + " = " +
                      std::to_string(g.table_[y * n + x]));
    }
    g.inverse_[x] = static_cast<Element>(y);
  }

  if (check == AssociativityCheck::strict || n <= kExhaustiveAssociativityLimit) {
    g.check_associativity_exhaustive();
  } else {
    SplitMix64 rng(0x5eedfa550c1a7ULL ^ n);
    const std::size_t samples = 10 * n * n;
    for (std::size_t i = 0; i < samples; ++i) {
      const auto a = static_cast<Element>(rng.below(n));
      const auto b = static_cast<Element>(rng.below(n));
      const auto c = static_cast<Element>(rng.below(n));
      if (g.product(g.product(a, b), c) != g.product(a, g.product(b, c))) {
        throw NotAGroup("associativity fails for (" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")");
      }
    }
  }

  g.explicit_labels_ = !labels.empty();
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  g.labels_ = std::move(labels);
  g.name_ = name.empty() ? "G" + std::to_string(n) : std::move(name);
  return g;
}

void FiniteGroup::check_associativity_exhaustive() const {
  const auto n = static_cast<Element>(order_);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = product(a, b);
      for (Element c = 0; c < n; ++c) {
        if (product(ab, c) != product(a, product(b, c))) {
          throw NotAGroup("associativity fails for (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

void FiniteGroup::require_element(Element x, const char* what) const {
  if (!contains(x)) {
    throw IndexOutOfRange(std::string(what) + " " + std::to_string(x) + " is out of range [0," +
                          std::to_string(order_) + ")");
  }
}

Element FiniteGroup::conjugate(Element x, Element s) const {
  require_element(x, "conjugator");
  require_element(s, "element");
  return product(product(inverse(x), s), x);
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> rows(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    rows[r].assign(table_.begin() + r * order_, table_.begin() + (r + 1) * order_);
  }
  return rows;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Element x) const {
  require_element(x);
  std::size_t k = 1;
  for (Element p = x; p != identity_; p = product(p, x)) ++k;
  return k;
}

std::vector<std::vector<Element>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<Element>> classes;
  std::vector<bool> assigned(order_, false);
  for (Element x = 0; x < order_; ++x) {
    if (assigned[x]) continue;
    std::vector<Element> cls;
    for (Element g = 0; g < order_; ++g) {
      const Element c = product(product(inverse(g), x), g);
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Element> FiniteGroup::center() const {
  std::vector<Element> z;
  for (Element a = 0; a < order_; ++a) {
    bool central = true;
    for (Element b = 0; b < order_ && central; ++b) central = product(a, b) == product(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------------------

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<Element> members) {
  const FiniteGroup& g = *parent;
  for (Element m : members) g.require_element(m, "subgroup member");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  Subgroup h;
  h.position_.assign(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) h.position_[members[i]] = static_cast<std::int32_t>(i);
  if (h.position_[g.identity()] < 0) throw NotASubgroup("subgroup does not contain the identity");
  for (Element a : members) {
    if (h.position_[g.inverse(a)] < 0) {
      throw NotASubgroup("subgroup is not closed under inverse: " + std::to_string(a));
    }
    for (Element b : members) {
      if (h.position_[g.product(a, b)] < 0) {
        throw NotASubgroup("subgroup is not closed under product: " + std::to_string(a) + "*" +
                           std::to_string(b) + " = " + std::to_string(g.product(a, b)));
      }
    }
  }
  h.normal_ = true;
  for (Element x = 0; x < g.order() && h.normal_; ++x) {
    for (Element s : members) {
      if (h.position_[g.product(g.product(g.inverse(x), s), x)] < 0) {
        h.normal_ = false;
        break;
      }
    }
  }
  h.members_ = std::move(members);
  h.parent_ = std::move(parent);
  return h;
}

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const Element> generators) {
  const FiniteGroup& g = *parent;
  std::vector<bool> in(g.order(), false);
  std::vector<Element> gens;
  for (Element x : generators) {
    g.require_element(x, "generator");
    if (x != g.identity()) gens.push_back(x);
  }
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  std::deque<Element> todo{g.identity()};
  while (!todo.empty()) {
    const Element a = todo.front();
    todo.pop_front();
    for (Element s : gens) {
      const Element b = g.product(a, s);
      if (!in[b]) {
        in[b] = true;
        members.push_back(b);
        todo.push_back(b);
      }
    }
  }
  return from_members(std::move(parent), std::move(members));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Element> all(parent->order());
  std::iota(all.begin(), all.end(), Element{0});
  return from_members(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  const Element e = parent->identity();
  return from_members(std::move(parent), {e});
}

std::size_t Subgroup::position(Element s) const {
  if (!contains(s)) {
    throw NotInDomain("element " + std::to_string(s) + " is not in the subgroup");
  }
  return static_cast<std::size_t>(position_[s]);
}

FiniteGroup Subgroup::as_group() const {
  const FiniteGroup& g = *parent_;
  const std::size_t k = members_.size();
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(g.label(members_[i]));
    for (std::size_t j = 0; j < k; ++j) {
      table[i][j] = static_cast<Element>(position_[g.product(members_[i], members_[j])]);
    }
  }
  return FiniteGroup::from_table(table, std::move(labels), g.name() + "|sub" + std::to_string(k));
}

// ---------------------------------------------------------------------------

CosetDecomposition coset_decomposition(const Subgroup& n) {
  if (!n.is_normal()) throw NotNormal("subgroup of order " + std::to_string(n.size()) + " is not normal in " + n.group().name());
  const FiniteGroup& g = n.group();
  constexpr Element kUnassigned = ~Element{0};

  CosetDecomposition d{n, {}, std::vector<Element>(g.order(), kUnassigned), nullptr};
  for (Element x = 0; x < g.order(); ++x) {
    if (d.coset_of[x] != kUnassigned) continue;
    const auto c = static_cast<Element>(d.representatives.size());
    d.representatives.push_back(x);
    for (Element s : n.members()) d.coset_of[g.product(x, s)] = c;
  }

  const std::size_t m = d.representatives.size();
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.label(d.representatives[i]) + "N");
    for (std::size_t j = 0; j < m; ++j) {
      table[i][j] = d.coset_of[g.product(d.representatives[i], d.representatives[j])];
    }
  }
  d.quotient = std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(table, std::move(labels), g.name() + "/N" + std::to_string(n.size())));
  return d;
}

std::vector<Subgroup> enumerate_normal_subgroups(const GroupPtr& g) {
  if (g->order() > kNormalEnumerationLimit) {
    throw TooLarge("normal subgroup enumeration is limited to order " +
                   std::to_string(kNormalEnumerationLimit) + "; got " + std::to_string(g->order()));
  }
  const auto classes = g->conjugacy_classes();

  // Every normal subgroup is a union of classes; grow from {e} by adjoining
  // one class at a time and closing.
  std::set<std::vector<Element>> found;
  std::deque<Subgroup> todo{Subgroup::trivial(g)};
  found.insert(std::vector<Element>(todo.front().members().begin(), todo.front().members().end()));
  std::vector<Subgroup> result;
  while (!todo.empty()) {
    Subgroup h = std::move(todo.front());
    todo.pop_front();
    for (const auto& cls : classes) {
      if (h.contains(cls.front())) continue;
      std::vector<Element> gens(h.members().begin(), h.members().end());
      gens.insert(gens.end(), cls.begin(), cls.end());
      Subgroup k = Subgroup::generated_by(g, gens);
      std::vector<Element> key(k.members().begin(), k.members().end());
      if (found.insert(std::move(key)).second) todo.push_back(std::move(k));
    }
    result.push_back(std::move(h));
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
  return result;
}

Subgroup commutator_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  std::set<Element> commutators;
  for (Element a : h.members()) {
    for (Element b : h.members()) {
      commutators.insert(g.product(g.product(g.inverse(a), g.inverse(b)), g.product(a, b)));
    }
  }
  std::vector<Element> gens(commutators.begin(), commutators.end());
  return Subgroup::generated_by(h.parent(), gens);
}

}  // namespace covariant
