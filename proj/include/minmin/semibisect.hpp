#pragma once

#include "minmin/bool_fn.hpp"

#include <optional>
#include <vector>

namespace minmin {

/* all n-ary minors of the given functions, deduplicated and sorted */
std::vector<bool_fn> minors_of( const std::vector<bool_fn>& gs, int arity );

/*! \brief Semibisectability of f with respect to G and rank k:
 * (A) every k true points of f are mapped to 1 by a common n-ary minor of G;
 * (B) every true/false point pair is separated by some n-ary minor of G.
 * f must not be constant.
 */
bool semibisectable( const bool_fn& f, const std::vector<bool_fn>& gs, int k );

struct decomposition
{
  bool_fn outer;               /* monotone, 0/1-preserving, 1-separating of rank k */
  std::vector<bool_fn> inner;  /* the enumerated n-ary minors of G */
};

/*! \brief Constructive decomposition behind semibisectability: enumerate the
 * n-ary minors phi_1, ..., phi_N of G, map the true and false points of f
 * through them, and take the up-closure of the image of the true points as
 * the outer function.  Returns nothing when f is not (G,k)-semibisectable;
 * on success compose(outer, inner) reproduces f exactly.
 */
std::optional<decomposition> decompose_via_mcuk( const bool_fn& f, const std::vector<bool_fn>& gs,
                                                 int k );

/*! \brief Bounded fragment of the clone generated by `gens`: for every arity
 * n <= max_arity, the least set of n-ary functions containing the
 * projections and closed under composing a generator with n-ary members.
 * This is exactly the n-ary part of the generated clone (every term keeps
 * its inner functions at arity n), so the result is also minor-closed.
 */
std::vector<bool_fn> clone_closure_bounded( const std::vector<bool_fn>& gens, int max_arity );

} // namespace minmin
