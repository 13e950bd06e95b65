#include "towers/assembly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "towers/errors.hpp"

namespace towers {

std::string to_string(FactorKind k) {
  switch (k) {
  case FactorKind::BPair:
    return "B-pair";
  case FactorKind::HBlock:
    return "H-block";
  case FactorKind::FBlock:
    return "F-block";
  }
  return "?";
}

namespace {

// factor templates before offsets are assigned
struct FactorPlan {
  FactorKind kind;
  unsigned seed_slot; // family index named by the construction
  unsigned stage;
};

std::vector<FactorPlan> plan_factors(unsigned L, unsigned alpha) {
  std::vector<FactorPlan> plan;
  if (alpha >= 1) {
    for (unsigned beta = 1; beta < alpha; ++beta) {
      plan.push_back({FactorKind::BPair, beta, beta});
      plan.push_back({FactorKind::BPair, beta, beta});
    }
    plan.push_back({FactorKind::HBlock, alpha, alpha});
    for (unsigned g = alpha; g < L; ++g)
      plan.push_back({FactorKind::FBlock, g + 1, g});
  } else {
    plan.push_back({FactorKind::FBlock, 0, 0});
    for (unsigned g = 0; g < L; ++g)
      plan.push_back({FactorKind::FBlock, g + 1, g});
  }
  return plan;
}

Assembly build_assembly(const RigidFamily &family, unsigned L, unsigned alpha,
                        const std::vector<unsigned> &seed_map,
                        const AssemblyBudget &budget) {
  if (alpha >= L)
    throw std::invalid_argument("assemble_main: need alpha < L");
  if (family.members.size() < L + 1)
    throw std::invalid_argument(
        "assemble_main: the family needs at least L+1 members");

  Assembly a;
  a.L = L;
  a.alpha = alpha;
  a.seed_used = seed_map;
  a.family_graphs.resize(L + 1);
  for (unsigned i = 0; i <= L; ++i)
    a.family_graphs[i] = family.members[seed_map[i]];

  unsigned max_stage = std::max(alpha, L - 1);
  // the F chain on the component level is seed-independent
  StageComplex chain_stage = build_stage(family.members[0],
                                         std::min(max_stage,
                                                  budget.stage.max_stage),
                                         budget.stage);
  if (max_stage > budget.stage.max_stage)
    throw budget_error("assemble_main: stage budget exceeded");
  a.f_chain = chain_stage.f_chain;

  auto plan = plan_factors(L, alpha);
  unsigned total = 0;
  for (const auto &p : plan)
    total += 1u << p.stage;
  if (total > budget.max_components)
    throw budget_error("assemble_main: component budget exceeded");

  std::vector<LabeledAction> factors;
  unsigned offset = 0;
  for (const auto &p : plan) {
    unsigned comps = 1u << p.stage;
    FactorEntry e;
    e.kind = p.kind;
    e.seed_index = seed_map[p.seed_slot];
    e.stage = p.stage;
    e.offset = offset;
    e.components = comps;
    a.manifest.push_back(e);
    for (unsigned c = 0; c < comps; ++c)
      a.component_seed.push_back(e.seed_index);

    std::string label = to_string(p.kind) + "-s" + std::to_string(p.stage) +
                        "-G" + std::to_string(e.seed_index);
    if (p.kind == FactorKind::HBlock) {
      PermGroup h = a.f_chain[0];
      for (unsigned g = 0; g < p.stage; ++g)
        h = direct_product(h, a.f_chain[g]);
      factors.push_back(LabeledAction::plain(h, label));
    } else {
      factors.push_back(LabeledAction::plain(a.f_chain[p.stage], label));
    }
    offset += comps;
  }
  auto prod = direct_product(factors);
  a.H = prod.action.group();
  a.domain = prod.action;
  return a;
}

std::map<unsigned, std::vector<unsigned>>
seed_classes(const Assembly &a) {
  std::map<unsigned, std::vector<unsigned>> classes;
  for (unsigned c = 0; c < a.component_seed.size(); ++c)
    classes[a.component_seed[c]].push_back(c);
  return classes;
}

} // namespace

Assembly assemble_main(const RigidFamily &family, unsigned L, unsigned alpha,
                       const AssemblyBudget &budget) {
  std::vector<unsigned> identity(L + 1);
  std::iota(identity.begin(), identity.end(), 0u);
  return build_assembly(family, L, alpha, identity, budget);
}

PermGroup assembly_ambient(const Assembly &a) {
  unsigned degree = a.H.degree();
  std::vector<Perm> gens;
  for (const auto &[seed, comps] : seed_classes(a)) {
    PermGroup sym = PermGroup::symmetric(static_cast<unsigned>(comps.size()));
    for (const Perm &g : sym.relocated(comps, degree).generators())
      gens.push_back(g);
  }
  return PermGroup(degree, std::move(gens));
}

Tower assembly_tower(const Assembly &a, const SearchBudget &budget) {
  return normaliser_tower(assembly_ambient(a), a.H, budget);
}

Graph assembly_vertex_graph(const Assembly &a) {
  std::vector<Graph> parts;
  for (const auto &e : a.manifest) {
    // seed_index values are representatives, hence valid family slots
    const Graph &seed = a.family_graphs[e.seed_index];
    for (unsigned c = 0; c < e.components; ++c)
      parts.push_back(seed);
  }
  return direct_sum(parts).graph;
}

AssemblyPart assembly_part(const Assembly &a, FactorKind kind) {
  std::vector<unsigned> comps;
  for (const auto &e : a.manifest)
    if (e.kind == kind)
      for (unsigned c = 0; c < e.components; ++c)
        comps.push_back(e.offset + c);

  unsigned degree = static_cast<unsigned>(comps.size());
  std::vector<int> local(a.H.degree(), -1);
  for (unsigned i = 0; i < degree; ++i)
    local[comps[i]] = static_cast<int>(i);

  std::vector<Perm> gens;
  for (const auto &e : a.manifest) {
    if (e.kind != kind)
      continue;
    PermGroup g = [&] {
      if (e.kind == FactorKind::HBlock) {
        PermGroup h = a.f_chain[0];
        for (unsigned s = 0; s < e.stage; ++s)
          h = direct_product(h, a.f_chain[s]);
        return h;
      }
      return a.f_chain[e.stage];
    }();
    std::vector<unsigned> placement(e.components);
    for (unsigned c = 0; c < e.components; ++c)
      placement[c] = static_cast<unsigned>(local[e.offset + c]);
    for (const Perm &p : g.relocated(placement, degree).generators())
      gens.push_back(p);
  }

  AssemblyPart part;
  part.group = PermGroup(degree, std::move(gens));

  std::map<unsigned, std::vector<unsigned>> classes;
  for (unsigned i = 0; i < degree; ++i)
    classes[a.component_seed[comps[i]]].push_back(i);
  std::vector<Perm> agens;
  for (const auto &[seed, pts] : classes) {
    PermGroup sym = PermGroup::symmetric(static_cast<unsigned>(pts.size()));
    for (const Perm &g : sym.relocated(pts, degree).generators())
      agens.push_back(g);
  }
  part.ambient = PermGroup(degree, std::move(agens));
  return part;
}

IndexPartition identity_partition(unsigned L) {
  IndexPartition p(L + 1);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

IndexPartition paper_partition(unsigned L, unsigned alpha, unsigned beta) {
  if (beta < 1 || beta >= L)
    throw std::invalid_argument("paper_partition: need 1 <= beta < L");
  IndexPartition p = identity_partition(L);
  if (beta < alpha) {
    p[alpha] = p[beta]; // merge {beta, alpha}
  } else if (beta > alpha) {
    for (unsigned g = alpha; g <= beta; ++g)
      p[g] = p[alpha]; // merge the interval [alpha, beta]
  }
  return p;
}

namespace {

// recognise the partition shape relative to alpha; anything else gets no
// prediction
std::pair<std::string, std::optional<unsigned>>
classify_partition(const IndexPartition &E, unsigned L, unsigned alpha) {
  std::map<unsigned, std::vector<unsigned>> classes;
  for (unsigned i = 0; i <= L; ++i)
    classes[E[i]].push_back(i);
  std::vector<std::vector<unsigned>> nontrivial;
  for (auto &[id, members] : classes)
    if (members.size() > 1)
      nontrivial.push_back(members);
  if (nontrivial.empty())
    return {"identity", alpha};
  if (nontrivial.size() == 1) {
    const auto &c = nontrivial[0];
    if (c.size() == 2 && c[1] == alpha && c[0] < alpha && c[0] >= 1)
      return {"pair-low", c[0]};
    bool contiguous = true;
    for (std::size_t i = 1; i < c.size(); ++i)
      contiguous = contiguous && c[i] == c[i - 1] + 1;
    if (contiguous && c.front() == alpha && c.back() > alpha &&
        c.back() < L)
      return {"interval-high", c.back()};
  }
  return {"general", std::nullopt};
}

} // namespace

RelabelOutcome relabel_by_E(const RigidFamily &family, const Assembly &a,
                            const IndexPartition &E,
                            const AssemblyBudget &budget) {
  if (E.size() != a.L + 1)
    throw std::invalid_argument("relabel_by_E: partition must cover {0..L}");

  // representative of each class: its least member
  std::vector<unsigned> representative(a.L + 1);
  std::map<unsigned, unsigned> least;
  for (unsigned i = 0; i <= a.L; ++i)
    if (!least.count(E[i]))
      least[E[i]] = i;
  for (unsigned i = 0; i <= a.L; ++i)
    representative[i] = least[E[i]];

  RelabelOutcome out;
  out.rebuilt = build_assembly(family, a.L, a.alpha, representative, budget);
  auto [shape, predicted] = classify_partition(E, a.L, a.alpha);
  out.shape = shape;
  out.predicted = predicted;
  out.tower = assembly_tower(out.rebuilt, budget.stage.search);
  out.measured = static_cast<unsigned>(out.tower.height);
  return out;
}

} // namespace towers
