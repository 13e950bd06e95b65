#ifndef TOWERS_PROJLINE_HPP
#define TOWERS_PROJLINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "towers/normalizer.hpp"
#include "towers/perm_group.hpp"
#include "towers/tower.hpp"

namespace towers {

/// Explicit arithmetic of the finite field GF(p^n), table-based over a
/// fixed irreducible polynomial per supported size. Element ids are
/// 0..q-1 with 0 the zero and 1 the one.
class GaloisField {
public:
  explicit GaloisField(unsigned q);

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return n_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a][b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a][b]; }
  unsigned neg(unsigned a) const;
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, unsigned long long e) const;
  /// The Frobenius x -> x^p.
  unsigned frobenius(unsigned a) const { return pow(a, p_); }
  /// A fixed generator of the (cyclic) multiplicative group.
  unsigned primitive() const { return primitive_; }

  static bool is_prime_power(unsigned q);

private:
  unsigned q_ = 0, p_ = 0, n_ = 0, primitive_ = 0;
  std::vector<std::vector<unsigned>> add_, mul_;
};

/// The projective line over GF(q): points 0..q-1 are [x : 1], point q is
/// the point at infinity [1 : 0].
struct ProjectiveLine {
  unsigned q = 0;
  unsigned point_count() const { return q + 1; }
  unsigned infinity() const { return q; }
};

/// PGL(2, q) acting on the q+1 points of the projective line, generated by
/// x -> x+1, x -> cx (c primitive) and x -> 1/x. Requires a prime power
/// q > 3.
PermGroup pgl2(unsigned q);

/// PGL(2, q) extended by the Frobenius action on the line.
PermGroup pgammal2(unsigned q);

/// The Galois group of GF(q) as a permutation group of the line (cyclic,
/// generated by the Frobenius).
PermGroup galois_group(unsigned q);

/// The subgroup of the Galois group with the given order (a divisor of the
/// extension degree).
PermGroup galois_subgroup(unsigned q, unsigned order);

/// All divisors of the extension degree: the available subgroup orders.
std::vector<unsigned> galois_subgroup_orders(unsigned q);

/// Verifies that the normaliser tower of PGL(2,q) x| H inside PGammaL(2,q)
/// is, level by level, PGL(2,q) x| N_alpha(H) with N_alpha(H) the
/// normaliser tower of H inside the Galois group, and that the two towers
/// have equal heights. Also certifies that the semidirect product is
/// centreless.
struct SemidirectTowerReport {
  unsigned q = 0;
  unsigned h_order = 0;
  std::uint64_t pgl_order = 0;
  std::uint64_t pgammal_order = 0;
  std::vector<std::uint64_t> group_tower_orders;
  std::vector<std::uint64_t> galois_tower_orders;
  std::vector<bool> level_matches;
  bool heights_match = false;
  bool centreless = false;

  bool pass() const;
};

SemidirectTowerReport semidirect_tower_report(unsigned q, unsigned h_order,
                                              const SearchBudget &budget = {});

} // namespace towers

#endif
