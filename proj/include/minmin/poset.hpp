#pragma once

#include "minmin/bool_fn.hpp"
#include "minmin/order.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace minmin {

/*! \brief Finite poset of equivalence classes of functions with at most k
 * true points, under the minorant-minor order (or its C-closed extension).
 *
 * Elements are canonical representatives sorted by (true-point count,
 * arity, table); `below[j]` has bit i set iff element i <= element j.
 */
struct poset
{
  int rank = 0;
  std::optional<closure_kind> closure;
  std::vector<bool_fn> elements;
  std::vector<std::string> labels; /* paper names where known, else "" */
  std::vector<uint64_t> below;     /* includes the element itself */
  std::vector<uint64_t> above;
  std::vector<std::pair<int, int>> covers; /* (lower, upper) */

  /* chi_class[n][table bits] = element index of the class of the n-ary
     characteristic function with that table, for n <= 4 and <= rank true
     points; -1 elsewhere.  Plain posets only. */
  std::array<std::vector<int16_t>, 5> chi_class;

  int size() const { return static_cast<int>( elements.size() ); }
  bool leq( int i, int j ) const { return ( below[j] >> i ) & 1u; }
  uint64_t full_mask() const { return size() == 64 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << size() ) - 1 ); }

  /* index of the class of f (f must have <= rank true points), -1 if absent */
  int index_of( const bool_fn& f ) const;
  int index_of_canonical( const bool_fn& canonical_rep ) const;

  std::string label_or_key( int i ) const;

  std::unordered_map<std::string, int> key_index;
};

/*! \brief Enumerate the classes of functions with at most k true points and
 * build their poset.
 *
 * Candidates are generated from column sets: for every p <= k and every
 * nonempty set of distinct columns in {0,1}^p, the corresponding
 * characteristic function is one candidate; candidates are deduplicated by
 * canonical form, with a pairwise-order verification pass.  With a closure
 * kind, classes are the coarser C-closed classes ordered by the C-closed
 * relation.
 */
poset enumerate_classes( int k, std::optional<closure_kind> closure = std::nullopt, int jobs = 1 );

/* the covering relation (transitive reduction); identical to p.covers */
std::vector<std::pair<int, int>> covers( const poset& p );

/* names from the paper's small-function table; total for rank <= 3 (throws
   on ambiguity, reports unlabeled elements in the result) */
struct labeling
{
  std::map<int, std::string> names;
  std::vector<int> unlabeled;
};
labeling label_paper_names( const poset& p );

/* natural map from the plain poset onto a C-closed quotient of the same rank */
std::vector<int> quotient_map( const poset& plain, const poset& quotient );

} // namespace minmin
