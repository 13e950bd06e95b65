#ifndef TOWERS_PERM_GROUP_HPP
#define TOWERS_PERM_GROUP_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "towers/perm.hpp"

namespace towers {

/// One level of a stabiliser chain: the orbit of the base point under the
/// generators fixing all earlier base points, with a transversal element
/// per orbit point.
struct BsgsLevel {
  unsigned base_point = 0;
  std::vector<Perm> gens;
  std::vector<unsigned> orbit;       // discovery order, orbit[0] == base_point
  std::vector<Perm> transversal;     // transversal[i] maps base_point to orbit[i]
  std::vector<int> orbit_index;      // point -> position in orbit, -1 if absent

  bool in_orbit(unsigned x) const { return orbit_index[x] >= 0; }
};

/// Base and strong generating set. Base points are chosen as the
/// lexicographically least moved point at each level, so the structure is
/// deterministic in the input generators.
struct Bsgs {
  unsigned degree = 0;
  std::vector<BsgsLevel> levels;

  std::uint64_t order() const;

  /// Strips p through the chain. Returns the residual and the number of
  /// levels passed; p is a member iff the residual is the identity and all
  /// levels were passed.
  std::pair<Perm, std::size_t> strip(const Perm &p) const;
};

/// A finite permutation group on {0, ..., degree-1}, defined by generators,
/// with a cached base/strong-generating structure for order, membership and
/// element enumeration. Immutable after construction.
class PermGroup {
public:
  PermGroup();
  explicit PermGroup(unsigned degree);                    // trivial group
  PermGroup(unsigned degree, std::vector<Perm> generators);

  static PermGroup symmetric(unsigned degree);
  static PermGroup alternating(unsigned degree);
  static PermGroup cyclic(unsigned degree);
  /// Dihedral group of order 2n acting on n points (n >= 3).
  static PermGroup dihedral(unsigned n);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  const std::vector<Perm> &generators() const { return gens_; }
  const Bsgs &bsgs() const { return bsgs_; }

  bool contains(const Perm &p) const;
  /// True iff every generator of g is a member.
  bool contains_group(const PermGroup &g) const;
  /// Group equality: equal degree, equal order, mutual membership of
  /// generators (one direction suffices once orders agree).
  bool operator==(const PermGroup &rhs) const;
  bool operator!=(const PermGroup &rhs) const { return !(*this == rhs); }

  bool is_transitive() const;

  /// All group elements via transversal products; deterministic order.
  /// Throws budget_error if the order exceeds max_count.
  std::vector<Perm> elements(std::uint64_t max_count = 5'000'000) const;
  void for_each_element(const std::function<void(const Perm &)> &fn) const;

  /// The group re-embedded to act on [offset, offset+degree) inside a
  /// larger domain.
  PermGroup shifted(unsigned offset, unsigned new_degree) const;

  /// Conjugate embedding: point x of this group becomes placement[x].
  /// placement must be injective into [0, new_degree).
  PermGroup relocated(const std::vector<unsigned> &placement,
                      unsigned new_degree) const;

private:
  unsigned degree_;
  std::vector<Perm> gens_;
  Bsgs bsgs_;
  std::uint64_t order_;
};

/// Direct product on the concatenated domain, left factor first.
PermGroup direct_product(const PermGroup &a, const PermGroup &b);

std::ostream &operator<<(std::ostream &os, const PermGroup &g);

} // namespace towers

#endif
