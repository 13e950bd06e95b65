#include "towers/stage.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "towers/block_system.hpp"
#include "towers/errors.hpp"
#include "towers/perm_iso.hpp"

namespace towers {

namespace {

void require_rigid_seed(const Graph &gamma) {
  if (gamma.vertex_count() == 0)
    throw std::invalid_argument("stage: empty seed graph");
  if (!is_connected(gamma))
    throw std::invalid_argument("stage: seed graph is not connected");
  if (aut_group(gamma).order() != 1)
    throw std::invalid_argument("stage: seed graph is not rigid");
}

std::vector<Cell> stage_cells(unsigned n) {
  std::vector<Cell> cells;
  cells.push_back({"Delta_0", "Delta_0", {0}});
  for (unsigned g = 0; g < n; ++g) {
    Cell c;
    c.name = "Delta1_" + std::to_string(g);
    c.tag = c.name;
    for (unsigned x = 1u << g; x < (2u << g); ++x)
      c.points.push_back(x);
    cells.push_back(std::move(c));
  }
  return cells;
}

// H_k = F_0 x prod_{gamma < k} F_gamma on 2^k points, factors in cell order
PermGroup product_H(const std::vector<PermGroup> &f_chain, unsigned k) {
  PermGroup h = f_chain[0]; // F_0 on Delta_0
  for (unsigned g = 0; g < k; ++g)
    h = direct_product(h, f_chain[g]);
  return h;
}

} // namespace

StageComplex build_stage(const Graph &gamma, unsigned n,
                         const StageBudget &budget) {
  require_rigid_seed(gamma);
  if (n > budget.max_stage)
    throw budget_error("build_stage: stage " + std::to_string(n) +
                       " exceeds the configured max of " +
                       std::to_string(budget.max_stage));

  StageComplex s;
  s.gamma = gamma;
  s.n = n;

  // the doubling recursion: each step adjoins a disjoint copy
  s.graph = gamma;
  for (unsigned k = 0; k < n; ++k)
    s.graph = direct_sum({s.graph, s.graph}).graph;
  s.component_vertices = connected_components(s.graph);

  s.f_chain.push_back(PermGroup(1)); // F_0 = Aut(gamma) on one component
  Tower last;
  last.levels.push_back(s.f_chain[0]);
  last.certificate = {1, 1, true};
  for (unsigned k = 1; k <= n; ++k) {
    PermGroup h = product_H(s.f_chain, k);
    last = normaliser_tower(PermGroup::symmetric(h.degree()), h,
                            budget.search);
    s.f_chain.push_back(last.terminal());
  }
  s.H = product_H(s.f_chain, n);
  s.F = s.f_chain[n];
  if (n == 0) {
    // the tower of H_0 in Sym(1) is already terminal
    last = normaliser_tower(PermGroup::symmetric(1), s.H, budget.search);
  }
  s.tower = std::move(last);
  s.components = LabeledAction(s.H, stage_cells(n));
  return s;
}

std::size_t stage_tower_height(const StageComplex &s) {
  return s.tower.height;
}

StageConditionReport check_conditions(const StageComplex &s,
                                      const StageBudget &budget) {
  StageConditionReport r;
  unsigned n = s.n;
  unsigned deg = 1u << n;

  // (1) transitivity
  {
    bool t = s.F.is_transitive();
    r.conditions[0] = {t, t ? "F acts transitively on the components"
                           : "F is not transitive"};
  }

  // (2) blocks through the Delta_0 component are the prefix sets of sizes
  // 2^beta
  {
    auto blocks = blocks_through_point(s.F, 0);
    std::vector<std::vector<unsigned>> expected;
    for (unsigned b = 0; b <= n; ++b) {
      std::vector<unsigned> blk(1u << b);
      std::iota(blk.begin(), blk.end(), 0u);
      expected.push_back(std::move(blk));
    }
    bool ok = blocks == expected;
    std::string detail = "blocks through v0 have sizes";
    for (const auto &b : blocks)
      detail += " " + std::to_string(b.size());
    r.conditions[1] = {ok, detail};
  }

  // (3) each Delta1_gamma is a union of E_beta classes
  {
    bool ok = true;
    std::string detail = "all Delta1 cells are unions of E_beta classes";
    for (unsigned beta = 0; beta <= n && ok; ++beta) {
      std::vector<unsigned> delta_beta(1u << beta);
      std::iota(delta_beta.begin(), delta_beta.end(), 0u);
      auto classes = block_orbit(s.F, delta_beta);
      for (unsigned g = beta; g < n && ok; ++g) {
        std::vector<bool> in_cell(deg, false);
        for (unsigned x = 1u << g; x < (2u << g); ++x)
          in_cell[x] = true;
        std::size_t covered = 0;
        for (const auto &cls : classes) {
          std::size_t inside = 0;
          for (unsigned x : cls)
            if (in_cell[x])
              ++inside;
          if (inside != 0 && inside != cls.size()) {
            ok = false;
            detail = "E_" + std::to_string(beta) + " splits Delta1_" +
                     std::to_string(g);
          }
          if (inside == cls.size())
            covered += inside;
        }
        if (ok && covered != (1u << g)) {
          ok = false;
          detail = "E_" + std::to_string(beta) + " does not cover Delta1_" +
                   std::to_string(g);
        }
      }
    }
    r.conditions[2] = {ok, detail};
  }

  // (4) level beta = F_beta x prod_{beta <= gamma < n} F_gamma
  {
    bool ok = true;
    std::string detail = "tower levels match the product decomposition";
    for (unsigned beta = 0; beta < n && ok; ++beta) {
      PermGroup expected = s.f_chain[beta];
      for (unsigned g = beta; g < n; ++g)
        expected = direct_product(expected, s.f_chain[g]);
      if (beta >= s.tower.levels.size() ||
          !(s.tower.levels[beta] == expected)) {
        ok = false;
        detail = "level " + std::to_string(beta) +
                 " differs from the expected product";
      }
    }
    r.conditions[3] = {ok, detail};
  }

  // (5) level beta is the stabiliser of the partition
  // {Delta_beta} u {Delta1_gamma : beta <= gamma < n} in F
  {
    bool ok = true;
    std::string detail = "tower levels are the partition stabilisers";
    for (unsigned beta = 0; beta < n && ok; ++beta) {
      std::vector<int> cell_of(deg, -1);
      for (unsigned x = 0; x < (1u << beta); ++x)
        cell_of[x] = 0;
      for (unsigned g = beta; g < n; ++g)
        for (unsigned x = 1u << g; x < (2u << g); ++x)
          cell_of[x] = static_cast<int>(g) + 1;
      std::vector<Perm> stab_gens;
      PermGroup stab(deg);
      s.F.for_each_element([&](const Perm &p) {
        for (unsigned x = 0; x < deg; ++x)
          if (cell_of[p[x]] != cell_of[x])
            return;
        if (!stab.contains(p)) {
          stab_gens.push_back(p);
          stab = PermGroup(deg, stab_gens);
        }
      });
      if (!(stab == s.tower.levels[beta])) {
        ok = false;
        detail = "stabiliser at beta=" + std::to_string(beta) +
                 " differs from tower level";
      }
    }
    r.conditions[4] = {ok, detail};
  }

  // (6) terminal level self-normalising
  {
    bool ok = s.tower.certificate.terminal_self_normalizing &&
              s.tower.terminal() == s.F;
    r.conditions[5] = {ok, "terminal order " +
                               std::to_string(s.tower.terminal().order())};
  }

  // (7) pairwise non-isomorphic (F_beta, Delta_beta)
  {
    bool ok = true;
    std::string detail = "all pairs non-isomorphic";
    for (unsigned b = 0; b <= n && ok; ++b)
      for (unsigned g = b + 1; g <= n && ok; ++g)
        if (perm_iso(s.f_chain[b], s.f_chain[g], budget.search)) {
          ok = false;
          detail = "F_" + std::to_string(b) + " and F_" + std::to_string(g) +
                   " are isomorphic";
        }
    r.conditions[6] = {ok, detail};
  }

  return r;
}

DComplex build_D(const Graph &gamma, unsigned n, unsigned m,
                 const StageBudget &budget) {
  if (!(1 <= m && m < n))
    throw std::invalid_argument("build_D: need 1 <= m < n");
  StageComplex top = build_stage(gamma, n, budget);
  StageComplex mid = build_stage(gamma, m, budget);

  DComplex d;
  d.gamma = gamma;
  d.n = n;
  d.m = m;
  d.graph = direct_sum({top.graph, mid.graph, mid.graph}).graph;

  auto prod = direct_product({top.components,
                              LabeledAction::plain(mid.H, "Copy1"),
                              LabeledAction::plain(mid.H, "Copy2")});
  // the two copies carry F_m rather than H_m
  unsigned total = prod.action.degree();
  std::vector<Perm> gens;
  for (const Perm &g : top.H.generators())
    gens.push_back(g.extended(total));
  for (const Perm &g : mid.F.generators()) {
    gens.push_back(g.shifted(prod.spans[1].offset, total));
    gens.push_back(g.shifted(prod.spans[2].offset, total));
  }
  d.D = PermGroup(total, gens);
  d.action = prod.action.with_group(d.D);

  d.tower = normaliser_tower(PermGroup::symmetric(total), d.D, budget.search);

  // expected terminal: F_m on Delta_m, F_m wr Sym(3) on the three F_m
  // blocks, and F_gamma on each Delta1_gamma with m < gamma < n
  unsigned block = 1u << m;
  std::vector<unsigned> b1(block), b2(block), b3(block);
  for (unsigned x = 0; x < block; ++x) {
    b1[x] = block + x;                  // Delta1_m inside the top stage
    b2[x] = prod.spans[1].offset + x;   // first copy
    b3[x] = prod.spans[2].offset + x;   // second copy
  }
  std::vector<Perm> egens;
  for (const Perm &g : mid.F.generators())
    egens.push_back(g.extended(total)); // F_m on Delta_m = [0, 2^m)
  for (const auto &blk : {b1, b2, b3})
    for (const Perm &g : mid.F.relocated(blk, total).generators())
      egens.push_back(g);
  auto swap_blocks = [&](const std::vector<unsigned> &x,
                         const std::vector<unsigned> &y) {
    std::vector<unsigned> img(total);
    std::iota(img.begin(), img.end(), 0u);
    for (unsigned i = 0; i < block; ++i) {
      img[x[i]] = y[i];
      img[y[i]] = x[i];
    }
    return Perm(std::move(img));
  };
  egens.push_back(swap_blocks(b1, b2));
  egens.push_back(swap_blocks(b2, b3));
  for (unsigned g = m + 1; g < n; ++g) {
    std::vector<unsigned> pts(1u << g);
    std::iota(pts.begin(), pts.end(), 1u << g);
    for (const Perm &p : top.f_chain[g].relocated(pts, total).generators())
      egens.push_back(p);
  }
  d.expected_terminal = PermGroup(total, std::move(egens));
  return d;
}

} // namespace towers
