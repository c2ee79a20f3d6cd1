#include "minmin/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace minmin {

int ideal::count() const
{
  return std::popcount( members );
}

std::vector<int> ideal::element_ids() const
{
  std::vector<int> out;
  for ( int e = 0; e < p->size(); ++e )
    if ( contains( e ) )
      out.push_back( e );
  return out;
}

std::vector<int> ideal::maxima() const
{
  std::vector<int> out;
  for ( int e = 0; e < p->size(); ++e )
    if ( contains( e ) && ( p->above[e] & members & ~( uint64_t( 1 ) << e ) ) == 0 )
      out.push_back( e );
  return out;
}

bool ideal::is_downward_closed() const
{
  for ( int e = 0; e < p->size(); ++e )
    if ( contains( e ) && ( p->below[e] & ~members ) != 0 )
      return false;
  return true;
}

ideal make_ideal( const poset& p, uint64_t members )
{
  ideal i{ &p, members & p.full_mask() };
  if ( !i.is_downward_closed() )
    throw std::invalid_argument( "member set is not downward closed" );
  return i;
}

ideal downset( const poset& p, const std::vector<int>& xs )
{
  uint64_t m = 0;
  for ( int x : xs )
  {
    if ( x < 0 || x >= p.size() )
      throw std::invalid_argument( "downset: element id out of range" );
    m |= p.below[x];
  }
  return { &p, m };
}

ideal downset_of_fns( const poset& p, const std::vector<bool_fn>& fns )
{
  std::vector<int> ids;
  for ( const auto& f : fns )
  {
    int idx = p.index_of( f );
    if ( idx < 0 )
      throw std::invalid_argument( "downset: function " + f.to_string() + " has more than " +
                                   std::to_string( p.rank ) + " true points" );
    ids.push_back( idx );
  }
  return downset( p, ids );
}

namespace {

std::vector<int> linear_extension( const poset& p )
{
  std::vector<int> order;
  std::vector<bool> done( p.size(), false );
  while ( static_cast<int>( order.size() ) < p.size() )
  {
    for ( int e = 0; e < p.size(); ++e )
    {
      if ( done[e] )
        continue;
      bool ready = true;
      for ( int x = 0; x < p.size(); ++x )
        if ( x != e && p.leq( x, e ) && !done[x] )
        {
          ready = false;
          break;
        }
      if ( ready )
      {
        done[e] = true;
        order.push_back( e );
      }
    }
  }
  return order;
}

void ideal_dfs( const poset& p, const std::vector<int>& order, size_t pos, uint64_t cur,
                std::vector<uint64_t>& out )
{
  if ( pos == order.size() )
  {
    out.push_back( cur );
    return;
  }
  const int e = order[pos];
  ideal_dfs( p, order, pos + 1, cur, out );
  if ( ( p.below[e] & ~( uint64_t( 1 ) << e ) & ~cur ) == 0 )
    ideal_dfs( p, order, pos + 1, cur | ( uint64_t( 1 ) << e ), out );
}

} // namespace

std::vector<ideal> all_ideals( const poset& p )
{
  if ( p.size() > 40 )
    throw std::runtime_error( "capacity: ideal enumeration is limited to 40 poset elements, got " +
                              std::to_string( p.size() ) );
  const auto order = linear_extension( p );
  std::vector<uint64_t> masks;
  ideal_dfs( p, order, 0, 0, masks );
  std::sort( masks.begin(), masks.end(), []( uint64_t a, uint64_t b ) {
    int pa = std::popcount( a ), pb = std::popcount( b );
    if ( pa != pb )
      return pa < pb;
    return a < b;
  } );
  std::vector<ideal> out;
  out.reserve( masks.size() );
  for ( auto m : masks )
    out.push_back( { &p, m } );
  return out;
}

uint64_t count_antichains( const poset& p )
{
  /* DFS over elements, keeping the set of still-eligible (incomparable) ones */
  uint64_t count = 0;
  const int n = p.size();
  std::vector<uint64_t> comparable( n );
  for ( int e = 0; e < n; ++e )
    comparable[e] = ( p.below[e] | p.above[e] ) & ~( uint64_t( 1 ) << e );
  auto rec = [&]( auto&& self, int from, uint64_t banned ) -> void {
    ++count;
    for ( int e = from; e < n; ++e )
      if ( !( ( banned >> e ) & 1u ) )
        self( self, e + 1, banned | comparable[e] | ( uint64_t( 1 ) << e ) );
  };
  rec( rec, 0, 0 );
  return count;
}

uint64_t count_filters( const poset& p )
{
  poset dual = p;
  std::swap( dual.below, dual.above );
  if ( dual.size() > 40 )
    throw std::runtime_error( "capacity: filter enumeration is limited to 40 poset elements" );
  const auto order = linear_extension( dual );
  std::vector<uint64_t> masks;
  ideal_dfs( dual, order, 0, 0, masks );
  return masks.size();
}

std::vector<uint64_t> closed_down_masks( const poset& p, closure_kind c )
{
  std::vector<uint64_t> masks( p.size(), 0 );
  for ( int e = 0; e < p.size(); ++e )
    for ( int i = 0; i < p.size(); ++i )
      if ( minmin_le_closed( p.elements[i], p.elements[e], c ) )
        masks[e] |= uint64_t( 1 ) << i;
  return masks;
}

bool is_kc_closed( const ideal& theta, const std::vector<uint64_t>& masks )
{
  for ( int e = 0; e < theta.p->size(); ++e )
    if ( theta.contains( e ) && ( masks[e] & ~theta.members ) != 0 )
      return false;
  return true;
}

bool is_kc_closed( const ideal& theta, closure_kind c )
{
  return is_kc_closed( theta, closed_down_masks( *theta.p, c ) );
}

std::vector<ideal> closed_ideals( const poset& p, closure_kind c, bool cross_check )
{
  const auto masks = closed_down_masks( p, c );
  std::vector<ideal> out;
  for ( const auto& th : all_ideals( p ) )
    if ( is_kc_closed( th, masks ) )
      out.push_back( th );

  if ( cross_check )
  {
    const poset q = enumerate_classes( p.rank, c );
    std::set<uint64_t> expected;
    for ( const auto& qi : all_ideals( q ) )
    {
      uint64_t plain_mask = 0;
      for ( int e = 0; e < p.size(); ++e )
      {
        int b = q.index_of_canonical( p.elements[e] );
        if ( b < 0 )
          throw std::logic_error( "closed_ideals: class missing from quotient" );
        if ( qi.contains( b ) )
          plain_mask |= uint64_t( 1 ) << e;
      }
      expected.insert( plain_mask );
    }
    std::set<uint64_t> got;
    for ( const auto& th : out )
      got.insert( th.members );
    if ( expected != got )
      throw std::logic_error( "closed_ideals: direct test and quotient lattice disagree for closure " +
                              std::string( closure_name( c ) ) );
  }
  return out;
}

ideal largest_closed_subset( const ideal& theta, closure_kind c )
{
  const auto masks = closed_down_masks( *theta.p, c );
  uint64_t cur = theta.members;
  for ( ;; )
  {
    uint64_t next = 0;
    for ( int e = 0; e < theta.p->size(); ++e )
      if ( ( ( cur >> e ) & 1u ) && ( masks[e] & ~cur ) == 0 )
        next |= uint64_t( 1 ) << e;
    if ( next == cur )
      return { theta.p, cur };
    cur = next;
  }
}

} // namespace minmin
