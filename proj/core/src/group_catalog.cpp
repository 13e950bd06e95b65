#include "towers/group_catalog.hpp"

#include <stdexcept>

namespace towers {

namespace {

// x -> a*x + b on Z_n, for Frobenius groups of prime modulus
Perm affine(unsigned n, unsigned a, unsigned b) {
  std::vector<unsigned> img(n);
  for (unsigned x = 0; x < n; ++x)
    img[x] = (a * x + b) % n;
  return Perm(std::move(img));
}

// generalized dihedral group of Z_3 x Z_3 on 9 points: translations
// extended by negation
PermGroup gen_dihedral_3x3() {
  auto enc = [](unsigned x, unsigned y) { return 3 * x + y; };
  std::vector<unsigned> t1(9), t2(9), neg(9);
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y) {
      t1[enc(x, y)] = enc((x + 1) % 3, y);
      t2[enc(x, y)] = enc(x, (y + 1) % 3);
      neg[enc(x, y)] = enc((3 - x) % 3, (3 - y) % 3);
    }
  return PermGroup(9, {Perm(t1), Perm(t2), Perm(neg)});
}

PermGroup named_perm_group(const std::string &name) {
  if (name == "1" || name == "trivial")
    return PermGroup(1);
  if (name == "sym3")
    return PermGroup::symmetric(3);
  if (name == "sym4")
    return PermGroup::symmetric(4);
  if (name == "alt4")
    return PermGroup::alternating(4);
  if (name == "klein4")
    return PermGroup(4, {Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
  if (name.rfind("dihedral", 0) == 0) {
    // dihedralN is the dihedral group OF ORDER N (so on N/2 points)
    unsigned order = static_cast<unsigned>(std::stoul(name.substr(8)));
    if (order % 2 != 0 || order < 6)
      throw std::invalid_argument(
          "catalog_group: dihedral order must be even and at least 6");
    return PermGroup::dihedral(order / 2);
  }
  if (name.rfind("cyclic", 0) == 0) {
    unsigned n = static_cast<unsigned>(std::stoul(name.substr(6)));
    return PermGroup::cyclic(n);
  }
  if (name == "frob20") // Z_5 : Z_4, the holomorph of Z_5
    return PermGroup(5, {affine(5, 1, 1), affine(5, 2, 0)});
  if (name == "frob21") // Z_7 : Z_3
    return PermGroup(7, {affine(7, 1, 1), affine(7, 2, 0)});
  if (name == "frob42") // Z_7 : Z_6, the holomorph of Z_7
    return PermGroup(7, {affine(7, 1, 1), affine(7, 3, 0)});
  if (name == "gendihedral3x3")
    return gen_dihedral_3x3();
  throw std::invalid_argument("catalog_group: unknown group '" + name + "'");
}

} // namespace

FiniteGroup catalog_group(const std::string &name) {
  return FiniteGroup::from_perm_group(named_perm_group(name));
}

std::vector<CatalogEntry> centreless_catalog() {
  std::vector<CatalogEntry> out;
  for (const char *name :
       {"trivial", "sym3", "dihedral10", "alt4", "dihedral14", "dihedral18",
        "gendihedral3x3", "frob20", "frob21", "dihedral22", "sym4"})
    out.push_back({name, catalog_group(name)});
  return out;
}

std::vector<std::string> catalog_names() {
  return {"trivial",    "sym3",       "sym4",           "alt4",
          "klein4",     "dihedral6",  "dihedral8",      "dihedral10",
          "dihedral12", "dihedral14", "dihedral18",     "dihedral22",
          "frob20",     "frob21",     "frob42",         "gendihedral3x3",
          "cyclic2",    "cyclic3",    "cyclic6"};
}

} // namespace towers
