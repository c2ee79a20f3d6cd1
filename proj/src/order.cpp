#include "minmin/order.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace minmin {

const char* closure_name( closure_kind c )
{
  switch ( c )
  {
  case closure_kind::xi:
    return "XI";
  case closure_kind::ix:
    return "IX";
  case closure_kind::m:
    return "M";
  case closure_kind::mneg:
    return "Mneg";
  default:
    return "R";
  }
}

closure_kind parse_closure( const std::string& name )
{
  for ( auto c : all_closures )
    if ( name == closure_name( c ) )
      return c;
  if ( name == "Refl" || name == "refl" || name == "r" )
    return closure_kind::refl;
  if ( name == "xi" )
    return closure_kind::xi;
  if ( name == "ix" )
    return closure_kind::ix;
  if ( name == "m" )
    return closure_kind::m;
  if ( name == "mneg" || name == "Mn" )
    return closure_kind::mneg;
  throw std::invalid_argument( "unknown closure \"" + name + "\" (expected XI, IX, M, Mneg or R)" );
}

bool minorant_le( const bool_fn& f, const bool_fn& g )
{
  if ( f.arity() != g.arity() )
    throw std::invalid_argument( "minorant comparison needs equal arities" );
  for ( size_t i = 0; i < f.word_count(); ++i )
    if ( f.word( i ) & ~g.word( i ) )
      return false;
  return true;
}

namespace {

struct sigma_search
{
  int n; /* arity of f = target of sigma */
  int m; /* arity of g = source of sigma */
  const std::vector<uint32_t>& ft;
  std::vector<std::vector<uint32_t>> prefixes; /* sorted d-bit prefixes of g's true rows */
  std::set<std::pair<int, std::vector<uint32_t>>> failed;

  bool has_prefix( int d, uint32_t p ) const
  {
    const auto& v = prefixes[d];
    return std::binary_search( v.begin(), v.end(), p );
  }

  bool run( int d, std::vector<uint32_t>& partial )
  {
    if ( d == m )
      return true;
    auto key = std::make_pair( d, partial );
    if ( failed.count( key ) )
      return false;
    std::vector<uint32_t> next( partial.size() );
    for ( int j = 1; j <= n; ++j )
    {
      bool ok = true;
      for ( size_t i = 0; i < ft.size(); ++i )
      {
        uint32_t bit = ( ft[i] >> ( n - j ) ) & 1u;
        next[i] = ( partial[i] << 1 ) | bit;
        if ( !has_prefix( d + 1, next[i] ) )
        {
          ok = false;
          break;
        }
      }
      if ( ok && run( d + 1, next ) )
        return true;
    }
    failed.insert( std::move( key ) );
    return false;
  }
};

} // namespace

bool minmin_le( const bool_fn& f, const bool_fn& g )
{
  const auto ft = f.true_rows();
  if ( ft.empty() )
    return true;
  /* images of the all-0 and all-1 tuples are themselves */
  if ( f.value_at_one() && !g.value_at_one() )
    return false;
  if ( f.value_at_zero() && !g.value_at_zero() )
    return false;
  const auto gt = g.true_rows();
  if ( gt.empty() )
    return false;

  sigma_search s{ f.arity(), g.arity(), ft, {}, {} };
  s.prefixes.resize( s.m + 1 );
  for ( int d = 0; d <= s.m; ++d )
  {
    auto& v = s.prefixes[d];
    v.reserve( gt.size() );
    for ( uint32_t r : gt )
      v.push_back( r >> ( s.m - d ) );
    std::sort( v.begin(), v.end() );
    v.erase( std::unique( v.begin(), v.end() ), v.end() );
  }
  std::vector<uint32_t> partial( ft.size(), 0u );
  return s.run( 0, partial );
}

bool_fn closure_of( const bool_fn& f, closure_kind c )
{
  bool_fn g = f;
  const uint32_t mask = f.rows() - 1u;
  switch ( c )
  {
  case closure_kind::xi:
    g.set_bit( mask, true );
    break;
  case closure_kind::ix:
    g.set_bit( 0, true );
    break;
  case closure_kind::m:
    for ( int j = 0; j < f.arity(); ++j )
      for ( uint32_t r = 0; r < g.rows(); ++r )
        if ( ( r >> j ) & 1u )
        {
          if ( g.bit( r ^ ( 1u << j ) ) )
            g.set_bit( r, true );
        }
    break;
  case closure_kind::mneg:
    for ( int j = 0; j < f.arity(); ++j )
      for ( uint32_t r = 0; r < g.rows(); ++r )
        if ( !( ( r >> j ) & 1u ) )
        {
          if ( g.bit( r | ( 1u << j ) ) )
            g.set_bit( r, true );
        }
    break;
  case closure_kind::refl:
    for ( uint32_t r = 0; r < g.rows(); ++r )
      if ( f.bit( r ^ mask ) )
        g.set_bit( r, true );
    break;
  }
  return g;
}

bool minmin_le_closed( const bool_fn& f, const bool_fn& g, closure_kind c )
{
  if ( g.is_zero() )
    return minmin_le( f, g );
  return minmin_le( f, closure_of( g, c ) );
}

namespace {

/* point set as row indices of an n-ary characteristic function */
struct tp_matrix
{
  int arity;
  std::vector<uint32_t> pts; /* sorted, distinct */

  bool_fn to_fn() const { return from_true_rows( arity, pts ); }
};

/* distinct columns, each as a bitmask over point positions, sorted */
std::vector<uint32_t> distinct_columns( const tp_matrix& m )
{
  std::vector<uint32_t> cols;
  for ( int j = 1; j <= m.arity; ++j )
  {
    uint32_t c = 0;
    for ( size_t i = 0; i < m.pts.size(); ++i )
      if ( ( m.pts[i] >> ( m.arity - j ) ) & 1u )
        c |= 1u << i;
    cols.push_back( c );
  }
  std::sort( cols.begin(), cols.end() );
  cols.erase( std::unique( cols.begin(), cols.end() ), cols.end() );
  return cols;
}

tp_matrix from_columns( const std::vector<uint32_t>& cols, int points )
{
  tp_matrix m;
  m.arity = static_cast<int>( cols.size() );
  for ( int i = 0; i < points; ++i )
  {
    uint32_t row = 0;
    for ( size_t j = 0; j < cols.size(); ++j )
      row |= ( ( cols[j] >> i ) & 1u ) << ( cols.size() - 1 - j );
    m.pts.push_back( row );
  }
  std::sort( m.pts.begin(), m.pts.end() );
  m.pts.erase( std::unique( m.pts.begin(), m.pts.end() ), m.pts.end() );
  return m;
}

/* try to merge points by projecting onto a column subset; returns true and
   replaces m when a projection stays minorant-minor-equivalent */
bool collapse_once( tp_matrix& m )
{
  const size_t p = m.pts.size();
  if ( p < 2 )
    return false;
  const auto cols = distinct_columns( m );
  const bool_fn cur = m.to_fn();
  std::unordered_set<uint32_t> tried;

  auto attempt = [&]( uint32_t col_subset ) -> bool {
    if ( col_subset == 0 || !tried.insert( col_subset ).second )
      return false;
    std::vector<uint32_t> sel;
    for ( size_t j = 0; j < cols.size(); ++j )
      if ( ( col_subset >> j ) & 1u )
        sel.push_back( cols[j] );
    tp_matrix proj = from_columns( sel, static_cast<int>( p ) );
    if ( proj.pts.size() >= p )
      return false;
    if ( !minmin_le( proj.to_fn(), cur ) )
      return false;
    m = proj;
    return true;
  };

  for ( size_t i = 0; i < p; ++i )
    for ( size_t j = i + 1; j < p; ++j )
    {
      uint32_t agree = 0;
      for ( size_t t = 0; t < cols.size(); ++t )
        if ( ( ( cols[t] >> i ) & 1u ) == ( ( cols[t] >> j ) & 1u ) )
          agree |= 1u << t;
      if ( agree == 0 )
        continue;
      if ( attempt( agree ) )
        return true;
      /* remaining nonempty subsets of the agreement columns */
      for ( uint32_t d = ( agree - 1 ) & agree; d; d = ( d - 1 ) & agree )
        if ( attempt( d ) )
          return true;
    }
  return false;
}

} // namespace

bool_fn canonical_class( const bool_fn& f, int max_true_points )
{
  const auto rows = f.true_rows();
  if ( static_cast<int>( rows.size() ) > max_true_points )
    throw std::runtime_error( "canonical_class: function has " + std::to_string( rows.size() ) +
                              " true points, limit is " + std::to_string( max_true_points ) );
  if ( rows.empty() )
    return bool_fn( 1 ); /* the constant 0 class */

  tp_matrix m{ f.arity(), rows };
  for ( ;; )
  {
    m = from_columns( distinct_columns( m ), static_cast<int>( m.pts.size() ) );
    if ( !collapse_once( m ) )
      break;
  }

  /* lexicographically least sorted column list over all row orders */
  const auto base_cols = distinct_columns( m );
  const int p = static_cast<int>( m.pts.size() );
  std::vector<int> perm( p );
  std::iota( perm.begin(), perm.end(), 0 );
  std::vector<uint32_t> best;
  do
  {
    std::vector<uint32_t> cand;
    cand.reserve( base_cols.size() );
    for ( uint32_t c : base_cols )
    {
      uint32_t pc = 0;
      for ( int i = 0; i < p; ++i )
        if ( ( c >> i ) & 1u )
          pc |= 1u << perm[i];
      cand.push_back( pc );
    }
    std::sort( cand.begin(), cand.end() );
    if ( best.empty() || cand < best )
      best = cand;
  } while ( std::next_permutation( perm.begin(), perm.end() ) );

  return from_columns( best, p ).to_fn();
}

std::string canonical_key( const bool_fn& f, int max_true_points )
{
  return canonical_class( f, max_true_points ).to_string();
}

} // namespace minmin
