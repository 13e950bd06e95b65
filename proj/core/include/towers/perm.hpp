#ifndef TOWERS_PERM_HPP
#define TOWERS_PERM_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace towers {

/// A permutation of the points {0, ..., degree-1}, stored as its image
/// vector. Immutable after construction.
class Perm {
public:
  /// Identity permutation of the given degree.
  explicit Perm(unsigned degree = 0);

  /// Permutation from an explicit image vector; must be a bijection.
  explicit Perm(std::vector<unsigned> images);

  /// Identity on n points with the listed cycle applied (convenience for
  /// tests and generators), e.g. Perm::cycle(4, {0, 1, 2}).
  static Perm cycle(unsigned degree, std::initializer_list<unsigned> pts);
  static Perm transposition(unsigned degree, unsigned a, unsigned b);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned x) const { return images_[x]; }
  const std::vector<unsigned> &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Pad with fixed points up to new_degree.
  Perm extended(unsigned new_degree) const;
  /// Embed into a larger domain, acting on [offset, offset+degree).
  Perm shifted(unsigned offset, unsigned new_degree) const;

  bool operator==(const Perm &rhs) const { return images_ == rhs.images_; }
  bool operator<(const Perm &rhs) const { return images_ < rhs.images_; }

private:
  std::vector<unsigned> images_;
};

/// Left-action composition: compose(p, q) maps x to p(q(x)).
Perm compose(const Perm &p, const Perm &q);

inline Perm operator*(const Perm &p, const Perm &q) { return compose(p, q); }

std::ostream &operator<<(std::ostream &os, const Perm &p);

} // namespace towers

template <> struct std::hash<towers::Perm> {
  std::size_t operator()(const towers::Perm &p) const {
    std::size_t h = p.degree();
    for (unsigned x : p.images())
      h = h * 1000003u + x;
    return h;
  }
};

#endif
