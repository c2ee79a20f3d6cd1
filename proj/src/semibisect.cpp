#include "minmin/semibisect.hpp"

#include "minmin/named.hpp"
#include "minmin/order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace minmin {

std::vector<bool_fn> minors_of( const std::vector<bool_fn>& gs, int arity )
{
  std::set<bool_fn> out;
  for ( const auto& g : gs )
  {
    const int m = g.arity();
    uint64_t total = 1;
    for ( int j = 0; j < m; ++j )
    {
      total *= static_cast<uint64_t>( arity );
      if ( total > ( uint64_t( 1 ) << 22 ) )
        throw std::runtime_error( "capacity: too many minor formation maps" );
    }
    std::vector<int> sigma( m, 1 );
    for ( ;; )
    {
      out.insert( minor_apply( g, minor_map( m, arity, sigma ) ) );
      int j = m - 1;
      while ( j >= 0 && sigma[j] == arity )
      {
        sigma[j] = 1;
        --j;
      }
      if ( j < 0 )
        break;
      ++sigma[j];
    }
  }
  return { out.begin(), out.end() };
}

namespace {

/* true: every size-m tuple of true rows has a common witness in taus */
bool condition_a( const std::vector<uint32_t>& true_rows, const std::vector<bool_fn>& taus, int m )
{
  const int t = static_cast<int>( true_rows.size() );
  if ( t == 0 || m == 0 )
    return true;
  /* subsets suffice: a witness for a set serves all sub-multisets */
  std::vector<int> comb( m );
  for ( int i = 0; i < m; ++i )
    comb[i] = i;
  for ( ;; )
  {
    bool found = false;
    for ( const auto& tau : taus )
    {
      bool all = true;
      for ( int i = 0; all && i < m; ++i )
        all = tau.bit( true_rows[comb[i]] );
      if ( all )
      {
        found = true;
        break;
      }
    }
    if ( !found )
      return false;
    int i = m - 1;
    while ( i >= 0 && comb[i] == t - m + i )
      --i;
    if ( i < 0 )
      return true;
    ++comb[i];
    for ( int j = i + 1; j < m; ++j )
      comb[j] = comb[j - 1] + 1;
  }
}

} // namespace

bool semibisectable( const bool_fn& f, const std::vector<bool_fn>& gs, int k )
{
  if ( is_constant( f ) )
    throw std::invalid_argument( "semibisectability is defined for nonconstant functions" );
  if ( k < 1 )
    throw std::invalid_argument( "rank must be positive" );
  const auto taus = minors_of( gs, f.arity() );
  const auto ones = f.true_rows();
  const auto zeros = f.false_rows();

  const int m = std::min<int>( k, static_cast<int>( ones.size() ) );
  if ( !condition_a( ones, taus, m ) )
    return false;

  for ( uint32_t a : ones )
    for ( uint32_t b : zeros )
    {
      bool found = false;
      for ( const auto& tau : taus )
        if ( tau.bit( a ) && !tau.bit( b ) )
        {
          found = true;
          break;
        }
      if ( !found )
        return false;
    }
  return true;
}

std::optional<decomposition> decompose_via_mcuk( const bool_fn& f, const std::vector<bool_fn>& gs,
                                                 int k )
{
  if ( !semibisectable( f, gs, k ) )
    return std::nullopt;
  const auto taus = minors_of( gs, f.arity() );
  const int big_n = static_cast<int>( taus.size() );
  if ( big_n > max_arity )
    throw std::runtime_error( "capacity: " + std::to_string( big_n ) +
                              " minors exceed the outer arity limit" );

  bool_fn upset( big_n );
  for ( uint32_t a : f.true_rows() )
  {
    uint32_t img = 0;
    for ( int i = 0; i < big_n; ++i )
      img |= uint32_t( taus[i].bit( a ) ) << ( big_n - 1 - i );
    upset.set_bit( img, true );
  }
  bool_fn outer = closure_of( upset, closure_kind::m );

  decomposition dec{ outer, taus };
  if ( compose( dec.outer, dec.inner ) != f )
    throw std::logic_error( "decomposition does not recompose the input" );
  if ( !is_monotone( outer ) || outer.value_at_zero() || !outer.value_at_one() ||
       !is_one_separating( outer, k ) )
    throw std::logic_error( "decomposition outer function leaves the target clone" );
  return dec;
}

std::vector<bool_fn> clone_closure_bounded( const std::vector<bool_fn>& gens, int max_arity_cap )
{
  if ( max_arity_cap < 1 || max_arity_cap > 4 )
    throw std::invalid_argument( "bounded clone closure supports arities 1..4" );
  std::vector<bool_fn> out;
  for ( int n = 1; n <= max_arity_cap; ++n )
  {
    std::set<bool_fn> set_n;
    std::vector<bool_fn> members;
    for ( int i = 1; i <= n; ++i )
    {
      members.push_back( projection( n, i ) );
      set_n.insert( members.back() );
    }
    size_t settled = 0; /* members below this index have been combined already */
    while ( settled < members.size() )
    {
      const size_t frontier = members.size();
      for ( const auto& g : gens )
      {
        const int m = g.arity();
        std::vector<size_t> idx( m, 0 );
        for ( ;; )
        {
          bool fresh = false;
          for ( int j = 0; j < m; ++j )
            if ( idx[j] >= settled )
            {
              fresh = true;
              break;
            }
          if ( fresh || settled == 0 )
          {
            std::vector<bool_fn> args;
            args.reserve( m );
            for ( int j = 0; j < m; ++j )
              args.push_back( members[idx[j]] );
            bool_fn h = compose( g, args );
            if ( set_n.insert( h ).second )
              members.push_back( h );
          }
          int j = m - 1;
          while ( j >= 0 && idx[j] + 1 >= frontier )
          {
            idx[j] = 0;
            --j;
          }
          if ( j < 0 )
            break;
          ++idx[j];
        }
      }
      settled = frontier;
    }
    out.insert( out.end(), set_n.begin(), set_n.end() );
  }
  return out;
}

} // namespace minmin
