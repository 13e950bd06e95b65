#ifndef TOWERS_STAGE_HPP
#define TOWERS_STAGE_HPP

#include <array>
#include <string>
#include <vector>

#include "towers/graph.hpp"
#include "towers/labeled_action.hpp"
#include "towers/tower.hpp"

namespace towers {

struct StageBudget {
  /// Stages through 3 keep the ambient group exhaustively scannable;
  /// stage 4 switches the tower to backtracking and sits behind this knob.
  unsigned max_stage = 3;
  SearchBudget search;
};

/// The doubling construction over a rigid connected seed graph: the graph
/// of 2^n seed copies, the component cells Delta_0, Delta1_0, ...,
/// Delta1_{n-1}, the product group H_n on the components, and the terminal
/// group F_n of its normaliser tower in the full symmetric group of the
/// components.
struct StageComplex {
  Graph gamma;
  unsigned n = 0;
  Graph graph;
  std::vector<std::vector<unsigned>> component_vertices;
  LabeledAction components; // carries H as the group
  PermGroup H;
  PermGroup F;
  std::vector<PermGroup> f_chain; // F_0 .. F_n, degree 2^k each
  Tower tower;                    // tower of H in Sym(2^n components)
};

/// Builds the stage; requires a certified connected rigid seed and
/// n <= budget.max_stage.
StageComplex build_stage(const Graph &gamma, unsigned n,
                         const StageBudget &budget = {});

/// Height of the stage tower (the construction pins it to n; callers
/// assert that).
std::size_t stage_tower_height(const StageComplex &s);

struct ConditionResult {
  bool pass = false;
  std::string detail;
};

/// Verdicts for the seven structural conditions of a stage, each with a
/// witness string.
struct StageConditionReport {
  std::array<ConditionResult, 7> conditions;

  bool all_pass() const {
    for (const auto &c : conditions)
      if (!c.pass)
        return false;
    return true;
  }
};

/// Checks, on the component action:
///  1. transitivity of F
///  2. the blocks through the Delta_0 component are exactly the Delta_beta
///  3. each Delta1_gamma is a union of E_beta classes
///  4. tower level beta equals F_beta x prod_{beta<=gamma<n} F_gamma
///  5. tower level beta is the stabiliser of the stated partition in F
///  6. the terminal level is self-normalising
///  7. the (F_beta, Delta_beta) are pairwise non-isomorphic
StageConditionReport check_conditions(const StageComplex &s,
                                      const StageBudget &budget = {});

/// The triple product H_n x F_m x F_m on the components of the three
/// graphs, with its tower (height m) and the explicitly constructed
/// expected terminal level carrying the wreath factor on the three F_m
/// blocks.
struct DComplex {
  Graph gamma;
  unsigned n = 0, m = 0;
  Graph graph;
  LabeledAction action;
  PermGroup D;
  Tower tower;
  PermGroup expected_terminal; // F_m x (F_m wr Sym(3)) x prod F_gamma
};

/// Requires 1 <= m < n <= budget.max_stage.
DComplex build_D(const Graph &gamma, unsigned n, unsigned m,
                 const StageBudget &budget = {});

} // namespace towers

#endif
