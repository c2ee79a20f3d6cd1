#pragma once

#include "minmin/bool_fn.hpp"
#include "minmin/poset.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace minmin {

/*! \brief A named clone given by a generator list, with the class predicate
 * its members must satisfy. */
struct clone_preset
{
  std::string name;
  std::vector<bool_fn> generators;
  std::string predicate; /* class registry name */
};

const std::vector<clone_preset>& preset_registry();
const clone_preset& find_preset( const std::string& name );

/* upper covers of a preset's clone in the lattice of clones */
std::vector<std::string> preset_upper_covers( const std::string& name );

/* generators satisfy the predicate, the bounded closure stays inside it,
   and the arity <= max_arity part of the predicate is reproduced exactly */
struct preset_validation
{
  bool ok;
  std::string detail;
};
preset_validation validate_preset( const clone_preset& preset, int max_arity = 3 );

enum class verdict_kind
{
  pass,
  fail,
  inconclusive
};

struct stability_verdict
{
  verdict_kind kind = verdict_kind::pass;
  std::string detail;
  std::optional<bool_fn> counterexample;
};

enum class side_kind
{
  left,
  right
};

using membership = std::function<bool( const bool_fn& )>;

/*! \brief Bounded stability verifier.
 *
 * right: checks minor-closedness of K up to the arity cap and f * g in K
 * for every member f and generator g.  left: checks g(f_1, ..., f_m) in K
 * over generator g and equal-arity member tuples; runs exhaustively within
 * the budget, otherwise samples seeded tuples and can only report fail or
 * inconclusive.  "pass" means no counterexample below the cap, not a proof.
 */
stability_verdict stability_check( const membership& k_member, side_kind side,
                                   const clone_preset& preset, int arity_cap,
                                   uint64_t budget = uint64_t( 1 ) << 22, uint64_t seed = 1 );

/*! \brief Right-stability test for K_k(Theta): compose the representatives
 * of Theta with clone members up to the arity cap and test that every
 * <= k-true-point class below a composite stays inside Theta. */
stability_verdict theta_right_stability( const poset& p, uint64_t theta,
                                         const clone_preset& preset, int arity_cap,
                                         uint64_t budget = uint64_t( 1 ) << 22 );

} // namespace minmin
