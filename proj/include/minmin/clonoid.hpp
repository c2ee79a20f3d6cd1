#pragma once

#include "minmin/lattice.hpp"
#include "minmin/named.hpp"
#include "minmin/poset.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace minmin {

/* the meet classes of the enumeration theorem's items (b)-(f) */
enum class meet_kind
{
  oico, /* OI or constant 0   (XI-closed ideals)   */
  oi,   /* OI                 (XI-closed ideals)   */
  ioco, /* IO or constant 0   (IX-closed ideals)   */
  io,   /* IO                 (IX-closed ideals)   */
  mo,   /* monotone, f(0)=0   (M-closed ideals)    */
  mc,   /* monotone, OI       (M-closed ideals)    */
  mineg,/* antitone, f(1)=0   (Mneg-closed ideals) */
  mcneg,/* antitone, IO       (Mneg-closed ideals) */
  refloo/* reflexive, OO      (Refl-closed ideals) */
};

inline constexpr meet_kind all_meets[] = { meet_kind::oico, meet_kind::oi,   meet_kind::ioco,
                                           meet_kind::io,   meet_kind::mo,   meet_kind::mc,
                                           meet_kind::mineg, meet_kind::mcneg, meet_kind::refloo };

const char* meet_name( meet_kind m );
meet_kind parse_meet( const std::string& name );
closure_kind meet_closure( meet_kind m );
meet_kind meet_inner_pair( meet_kind m );
bool meet_member( meet_kind m, const bool_fn& f );

/*! \brief Symbolic description of a clonoid: K_k(Theta), K_k(Theta) meet a
 * fixed class, or one of the named classes of the enumeration theorem. */
struct clonoid_descriptor
{
  enum class variant
  {
    klik,
    klik_meet,
    named
  };

  variant var = variant::klik;
  int rank = 0;
  uint64_t theta = 0;
  meet_kind meet = meet_kind::oico;
  std::string named_class;

  static clonoid_descriptor make_klik( int rank, uint64_t theta );
  static clonoid_descriptor make_meet( int rank, uint64_t theta, meet_kind m );
  static clonoid_descriptor make_named( int rank, std::string name );

  bool operator==( const clonoid_descriptor& o ) const;
  std::string to_string( const poset* p = nullptr ) const;
};

/*! \brief Shared context for clonoid computations at one rank: the poset,
 * its ideal lattice, the closed ideals, and the fingerprint probe family
 * (all functions of arity <= 3, the poset representatives and their five
 * closures, the unary constants, closed under inner negation). */
struct clonoid_universe
{
  int rank = 0;
  poset p;
  std::vector<uint64_t> ideal_masks;
  std::array<std::vector<uint64_t>, 5> closed;       /* closed ideal masks per closure */
  std::array<std::vector<uint64_t>, 5> closed_down;  /* per-element C-downset masks */
  std::vector<bool_fn> probes;
  std::vector<uint64_t> probe_down; /* per probe: classes minmin-below it */
  std::vector<int> probe_inner;     /* probe index of the inner negation */
  std::vector<int> element_inner;   /* poset automorphism induced by inner negation */

  bool theta_closed( closure_kind c, uint64_t theta ) const;
  int zero_ideal_element() const; /* index of the constant-0 class */

  static clonoid_universe build( int k, int jobs = 1 );
};

/*! \brief Membership in K_k(Theta): every set of at most k true points of f
 * must be a characteristic function lying in the downset Theta.
 *
 * Only subsets of size exactly min(k, |true points|) are tested (smaller
 * ones are minorants of these and Theta is an ideal).  For functions of
 * arity above the cached range the equivalent test "every poset class below
 * f lies in Theta" is used instead.
 */
bool member_klik( const poset& p, uint64_t theta, const bool_fn& f );

bool descriptor_member( const clonoid_universe& u, const clonoid_descriptor& d, const bool_fn& f );

/* all n-ary functions whose restrictions to <= ell points agree with some
   member of xs (only the n-ary members of xs participate); n <= 4 */
std::vector<bool_fn> local_closure( const std::vector<bool_fn>& xs, int ell, int arity );

/* n-ary part of the minorant-minor downset of theta */
std::vector<bool_fn> down_set_functions( const poset& p, uint64_t theta, int arity );

/* canonical representatives of the <= ell-true-point minorants of members */
std::vector<bool_fn> normalize_theta( const std::vector<bool_fn>& theta, int ell );

/* the rank-k ideal Psi with K_ell(Theta) = K_k(Psi) */
ideal lift_rank( const poset& p_low, uint64_t theta, const poset& p_high );

using fingerprint = std::vector<uint64_t>;
uint64_t fingerprint_hash( const fingerprint& fp );
bool fingerprint_subset( const fingerprint& a, const fingerprint& b );

fingerprint eval_fingerprint( const clonoid_universe& u, const clonoid_descriptor& d );
fingerprint class_fingerprint( const clonoid_universe& u, const std::string& class_name );

struct clonoid_info
{
  clonoid_descriptor canonical;
  std::vector<clonoid_descriptor> aliases;
  fingerprint fp;
  std::vector<std::string> names; /* matching k = 2 table names, usually one */

  std::string display_name( const poset* p ) const;
};

/*! \brief Instantiate the enumeration theorem: K_k(Theta) over all ideals,
 * the meet forms over the nonempty closed ideals, and the fixed named
 * classes; deduplicate by fingerprint and verify alias groups agree on all
 * functions of arity <= 4. */
std::vector<clonoid_info> enumerate_clonoids( const clonoid_universe& u, int jobs = 1 );

/* lower covers of clonoid `idx` within the enumeration, as indices */
std::vector<int> lower_covers( const clonoid_universe& u, const std::vector<clonoid_info>& all,
                               int idx );

clonoid_descriptor inner_negate_descriptor( const clonoid_universe& u,
                                            const clonoid_descriptor& d );

/* resolve a descriptor to its enumeration index (-1 if absent) */
int find_clonoid( const clonoid_universe& u, const std::vector<clonoid_info>& all,
                  const clonoid_descriptor& d );

} // namespace minmin
