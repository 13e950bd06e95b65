#include "towers/projline.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace towers {

namespace {

// irreducible polynomials over GF(p), as coefficient vectors of x^n +
// c_{n-1} x^{n-1} + ... + c_0 (the leading 1 omitted)
const std::map<unsigned, std::vector<unsigned>> &irreducibles() {
  static const std::map<unsigned, std::vector<unsigned>> table = {
      {4, {1, 1}},        // x^2 + x + 1 over GF(2)
      {8, {1, 1, 0}},     // x^3 + x + 1
      {16, {1, 1, 0, 0}}, // x^4 + x + 1
      {32, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
      {64, {1, 1, 0, 0, 0, 0}},  // x^6 + x + 1
      {9, {1, 0}},        // x^2 + 1 over GF(3)
      {27, {1, 2, 0}},    // x^3 + 2x + 1
      {81, {2, 1, 0, 0}}, // x^4 + x + 2
      {25, {2, 0}},       // x^2 + 2 over GF(5)
      {49, {1, 0}},       // x^2 + 1 over GF(7)
  };
  return table;
}

unsigned smallest_prime_factor(unsigned q) {
  for (unsigned p = 2; p * p <= q; ++p)
    if (q % p == 0)
      return p;
  return q;
}

} // namespace

bool GaloisField::is_prime_power(unsigned q) {
  if (q < 2)
    return false;
  unsigned p = smallest_prime_factor(q);
  while (q % p == 0)
    q /= p;
  return q == 1;
}

GaloisField::GaloisField(unsigned q) : q_(q) {
  if (!is_prime_power(q))
    throw std::invalid_argument("GaloisField: q must be a prime power");
  p_ = smallest_prime_factor(q);
  n_ = 0;
  for (unsigned t = q; t > 1; t /= p_)
    ++n_;

  // element id = sum of digit_i * p^i, digits = polynomial coefficients
  auto digits = [&](unsigned a) {
    std::vector<unsigned> d(n_);
    for (unsigned i = 0; i < n_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto undigits = [&](const std::vector<unsigned> &d) {
    unsigned a = 0;
    for (unsigned i = n_; i-- > 0;)
      a = a * p_ + d[i];
    return a;
  };

  std::vector<unsigned> modulus; // c_0..c_{n-1} of the irreducible
  if (n_ > 1) {
    auto it = irreducibles().find(q);
    if (it == irreducibles().end())
      throw std::invalid_argument(
          "GaloisField: no irreducible polynomial on file for q=" +
          std::to_string(q));
    modulus.assign(it->second.rbegin(), it->second.rend()); // to c_0 first
  }

  add_.assign(q, std::vector<unsigned>(q));
  mul_.assign(q, std::vector<unsigned>(q));
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b) {
      auto da = digits(a), db = digits(b);
      std::vector<unsigned> sum(n_);
      for (unsigned i = 0; i < n_; ++i)
        sum[i] = (da[i] + db[i]) % p_;
      add_[a][b] = undigits(sum);

      std::vector<unsigned> prod(2 * n_, 0);
      for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
          prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      // reduce modulo the irreducible: x^n = -modulus
      for (unsigned k = 2 * n_; k-- > n_;) {
        unsigned c = prod[k];
        if (c == 0)
          continue;
        prod[k] = 0;
        for (unsigned i = 0; i < n_; ++i)
          prod[k - n_ + i] =
              (prod[k - n_ + i] + c * (p_ - modulus[i] % p_)) % p_;
      }
      prod.resize(n_);
      mul_[a][b] = undigits(prod);
    }

  // the multiplicative group is cyclic; find and pin a generator
  primitive_ = 0;
  for (unsigned c = 1; c < q && primitive_ == 0; ++c) {
    unsigned x = c, order = 1;
    while (x != 1) {
      x = mul_[x][c];
      ++order;
    }
    if (order == q - 1)
      primitive_ = c;
  }
  if (q > 2 && primitive_ == 0)
    throw std::logic_error("GaloisField: multiplicative group not cyclic");
  if (q == 2)
    primitive_ = 1;
}

unsigned GaloisField::neg(unsigned a) const {
  for (unsigned b = 0; b < q_; ++b)
    if (add_[a][b] == 0)
      return b;
  throw std::logic_error("GaloisField::neg");
}

unsigned GaloisField::inv(unsigned a) const {
  if (a == 0)
    throw std::invalid_argument("GaloisField::inv: zero");
  for (unsigned b = 1; b < q_; ++b)
    if (mul_[a][b] == 1)
      return b;
  throw std::logic_error("GaloisField::inv");
}

unsigned GaloisField::pow(unsigned a, unsigned long long e) const {
  unsigned r = 1, base = a;
  while (e) {
    if (e & 1)
      r = mul_[r][base];
    base = mul_[base][base];
    e >>= 1;
  }
  return r;
}

namespace {

const GaloisField &field(unsigned q) {
  static std::map<unsigned, GaloisField> cache;
  auto it = cache.find(q);
  if (it == cache.end())
    it = cache.emplace(q, GaloisField(q)).first;
  return it->second;
}

void require_q(unsigned q) {
  if (!GaloisField::is_prime_power(q))
    throw std::invalid_argument("q must be a prime power");
  if (q <= 3)
    throw std::invalid_argument("q must exceed 3");
}

Perm translation(const GaloisField &f) {
  // x -> x + 1, infinity fixed
  std::vector<unsigned> img(f.q() + 1);
  for (unsigned x = 0; x < f.q(); ++x)
    img[x] = f.add(x, 1);
  img[f.q()] = f.q();
  return Perm(std::move(img));
}

Perm scaling(const GaloisField &f) {
  // x -> cx with c the pinned primitive element
  std::vector<unsigned> img(f.q() + 1);
  for (unsigned x = 0; x < f.q(); ++x)
    img[x] = f.mul(f.primitive(), x);
  img[f.q()] = f.q();
  return Perm(std::move(img));
}

Perm inversion(const GaloisField &f) {
  // x -> 1/x, exchanging 0 and infinity
  std::vector<unsigned> img(f.q() + 1);
  img[0] = f.q();
  img[f.q()] = 0;
  for (unsigned x = 1; x < f.q(); ++x)
    img[x] = f.inv(x);
  return Perm(std::move(img));
}

Perm frobenius_on_line(const GaloisField &f) {
  std::vector<unsigned> img(f.q() + 1);
  for (unsigned x = 0; x < f.q(); ++x)
    img[x] = f.frobenius(x);
  img[f.q()] = f.q();
  return Perm(std::move(img));
}

} // namespace

PermGroup pgl2(unsigned q) {
  require_q(q);
  const GaloisField &f = field(q);
  return PermGroup(q + 1, {translation(f), scaling(f), inversion(f)});
}

PermGroup pgammal2(unsigned q) {
  require_q(q);
  const GaloisField &f = field(q);
  return PermGroup(q + 1, {translation(f), scaling(f), inversion(f),
                           frobenius_on_line(f)});
}

PermGroup galois_group(unsigned q) {
  require_q(q);
  return PermGroup(q + 1, {frobenius_on_line(field(q))});
}

std::vector<unsigned> galois_subgroup_orders(unsigned q) {
  require_q(q);
  unsigned n = field(q).extension_degree();
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0)
      divisors.push_back(d);
  return divisors;
}

PermGroup galois_subgroup(unsigned q, unsigned order) {
  require_q(q);
  const GaloisField &f = field(q);
  unsigned n = f.extension_degree();
  if (order == 0 || n % order != 0)
    throw std::invalid_argument(
        "galois_subgroup: order must divide the extension degree");
  Perm frob = frobenius_on_line(f);
  Perm gen(f.q() + 1);
  for (unsigned i = 0; i < n / order; ++i)
    gen = gen * frob;
  return PermGroup(f.q() + 1, {gen});
}

bool SemidirectTowerReport::pass() const {
  if (!heights_match || !centreless)
    return false;
  for (bool b : level_matches)
    if (!b)
      return false;
  return true;
}

SemidirectTowerReport semidirect_tower_report(unsigned q, unsigned h_order,
                                              const SearchBudget &budget) {
  SemidirectTowerReport r;
  r.q = q;
  r.h_order = h_order;

  PermGroup pgl = pgl2(q);
  PermGroup pgammal = pgammal2(q);
  PermGroup gal = galois_group(q);
  PermGroup h = galois_subgroup(q, h_order);
  r.pgl_order = pgl.order();
  r.pgammal_order = pgammal.order();

  std::vector<Perm> ggens = pgl.generators();
  for (const Perm &p : h.generators())
    ggens.push_back(p);
  PermGroup g(q + 1, ggens);

  Tower group_tower = normaliser_tower(pgammal, g, budget);
  Tower galois_tower = normaliser_tower(gal, h, budget);
  for (const auto &lvl : group_tower.levels)
    r.group_tower_orders.push_back(lvl.order());
  for (const auto &lvl : galois_tower.levels)
    r.galois_tower_orders.push_back(lvl.order());

  r.heights_match = group_tower.height == galois_tower.height;
  std::size_t common =
      std::min(group_tower.levels.size(), galois_tower.levels.size());
  for (std::size_t i = 0; i < common; ++i) {
    std::vector<Perm> gens = pgl.generators();
    for (const Perm &p : galois_tower.levels[i].generators())
      gens.push_back(p);
    PermGroup expected(q + 1, gens);
    r.level_matches.push_back(group_tower.levels[i] == expected);
  }

  // centrelessness of the semidirect product, by scanning its elements
  r.centreless = true;
  const auto &gens = g.generators();
  std::size_t central = 0;
  g.for_each_element([&](const Perm &a) {
    for (const Perm &x : gens)
      if (!(a * x == x * a))
        return;
    ++central;
  });
  r.centreless = central == 1;
  return r;
}

} // namespace towers
