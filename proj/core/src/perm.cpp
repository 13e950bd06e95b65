#include "towers/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace towers {

Perm::Perm(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("Perm: image vector is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::cycle(unsigned degree, std::initializer_list<unsigned> pts) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  if (pts.size() > 1) {
    auto it = pts.begin();
    unsigned first = *it, prev = *it;
    for (++it; it != pts.end(); ++it) {
      img[prev] = *it;
      prev = *it;
    }
    img[prev] = first;
  }
  return Perm(std::move(img));
}

Perm Perm::transposition(unsigned degree, unsigned a, unsigned b) {
  return cycle(degree, {a, b});
}

bool Perm::is_identity() const {
  for (unsigned x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned x = 0; x < degree(); ++x)
    inv[images_[x]] = x;
  return Perm(std::move(inv));
}

Perm Perm::extended(unsigned new_degree) const {
  if (new_degree < degree())
    throw std::invalid_argument("Perm::extended: smaller degree");
  std::vector<unsigned> img(new_degree);
  std::iota(img.begin(), img.end(), 0u);
  std::copy(images_.begin(), images_.end(), img.begin());
  return Perm(std::move(img));
}

Perm Perm::shifted(unsigned offset, unsigned new_degree) const {
  if (offset + degree() > new_degree)
    throw std::invalid_argument("Perm::shifted: block does not fit");
  std::vector<unsigned> img(new_degree);
  std::iota(img.begin(), img.end(), 0u);
  for (unsigned x = 0; x < degree(); ++x)
    img[offset + x] = offset + images_[x];
  return Perm(std::move(img));
}

Perm compose(const Perm &p, const Perm &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<unsigned> img(p.degree());
  for (unsigned x = 0; x < p.degree(); ++x)
    img[x] = p[q[x]];
  return Perm(std::move(img));
}

std::ostream &operator<<(std::ostream &os, const Perm &p) {
  os << '[';
  for (unsigned x = 0; x < p.degree(); ++x) {
    if (x)
      os << ' ';
    os << p[x];
  }
  return os << ']';
}

} // namespace towers
