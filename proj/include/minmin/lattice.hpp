#pragma once

#include "minmin/poset.hpp"

#include <vector>

namespace minmin {

/*! \brief Downset of a poset, stored as a member bitmask. */
struct ideal
{
  const poset* p = nullptr;
  uint64_t members = 0;

  bool contains( int e ) const { return ( members >> e ) & 1u; }
  int count() const;
  std::vector<int> element_ids() const;
  std::vector<int> maxima() const;
  bool is_downward_closed() const;
};

ideal make_ideal( const poset& p, uint64_t members ); /* validates closure */

/* downset generated by a set of elements */
ideal downset( const poset& p, const std::vector<int>& xs );
ideal downset_of_fns( const poset& p, const std::vector<bool_fn>& fns );

/*! \brief All ideals (downsets), enumerated by DFS along a linear extension.
 * Guarded to posets with at most 40 elements. */
std::vector<ideal> all_ideals( const poset& p );

/* independent cross-check counts */
uint64_t count_antichains( const poset& p );
uint64_t count_filters( const poset& p ); /* order filters, via the dual poset */

/* mask per element e of the classes lying C-below e (downset of e in the
   C-closed order); the (k,C)-closed ideals are exactly the ideals that
   contain these masks for all their members */
std::vector<uint64_t> closed_down_masks( const poset& p, closure_kind c );

bool is_kc_closed( const ideal& theta, closure_kind c );
bool is_kc_closed( const ideal& theta, const std::vector<uint64_t>& masks );

/*! \brief All (k,C)-closed ideals of the rank-k poset.
 *
 * Cross-checked against the ideal lattice of the C-closed quotient poset
 * mapped back to sets of plain classes; a mismatch raises
 * std::logic_error.
 */
std::vector<ideal> closed_ideals( const poset& p, closure_kind c, bool cross_check = true );

/* greatest (k,C)-closed ideal contained in theta */
ideal largest_closed_subset( const ideal& theta, closure_kind c );

} // namespace minmin
