#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hallforge/braid.hpp"
#include "hallforge/qalg.hpp"
#include "hallforge/reflect.hpp"
#include "hallforge/relations.hpp"

namespace hallforge {

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

struct CheckResult {
  std::string id;
  std::string anchor;
  std::string params;
  Status status = Status::pass;
  std::string message;
  double seconds = 0;
  nlohmann::json witness;  // difference element on failure
};

struct Report {
  std::string suite;
  nlohmann::json config;
  std::vector<CheckResult> rows;

  int count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
  nlohmann::json to_json() const;
};

/// A check body returns the two sides to compare, or throws.
struct CheckJob {
  std::string id;
  std::string anchor;
  std::string params;
  std::function<std::pair<SDHElem, SDHElem>()> sides;
};

/// Runs jobs on up to `threads` workers (0 = OpenMP default).  Results keep
/// the job order.  Resource errors become skips, other errors failures.
std::vector<CheckResult> run_checks(const HallAlgebra& h, const std::vector<CheckJob>& jobs, int threads);

/// Evaluates both sides of each relation through the realisation.
Report verify_relations(const Realization& r, const std::vector<RelationCheck>& rels, int threads);

/// e_{jl}, f_{jl} for j != l and l up to max_level, e_l, f_l, and K_{alpha_i},
/// K'_{alpha_i} for every vertex i.
std::vector<GenSymbol> square_generators(const CartanData& c, int l, int max_level);

/// Gamma_l Psi_Q(g) = Psi_{s_l Q} T'_{l,1}(g) for each g, followed by the
/// source-side square Gamma^-_l Psi_{s_l Q}(g) = Psi_Q T''_{l,-1}(g).
/// psi_q and psi_sq realise over g.source() and g.target().
Report verify_square(const Reflection& g, const Realization& psi_q, const Realization& psi_sq,
                     const std::vector<GenSymbol>& gens, int threads);

/// Gamma^-_l Gamma_l(x) = x on every basis element [C_A + C*_B] with
/// dim A + dim B <= max_dim and on K_{+-alpha_i}, K*_{+-alpha_i}; then
/// Psi_Q(T''_{l,-1} T'_{l,1}(g)) = Psi_Q(g) on the generators.
Report verify_inverse(const Reflection& g, const Realization& psi_q, const std::vector<GenSymbol>& gens,
                      int max_dim, int threads);

/// For a rank-two quiver with real vertices and a_12 in {0, -1}: the braid
/// relation T_1 T_2 = T_2 T_1 or T_1 T_2 T_1 = T_2 T_1 T_2 evaluated on
/// E_i, F_i, K_{alpha_i}, K'_{alpha_i} through the realisation.
Report verify_braid_rank2(const Realization& r, int threads);

}  // namespace hallforge
