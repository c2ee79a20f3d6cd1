#include "minmin/clonoid.hpp"

#include "minmin/parallel.hpp"
#include "minmin/tables.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace minmin {

const char* meet_name( meet_kind m )
{
  switch ( m )
  {
  case meet_kind::oico:
    return "OICO";
  case meet_kind::oi:
    return "OI";
  case meet_kind::ioco:
    return "IOCO";
  case meet_kind::io:
    return "IO";
  case meet_kind::mo:
    return "Mo";
  case meet_kind::mc:
    return "Mc";
  case meet_kind::mineg:
    return "Mineg";
  case meet_kind::mcneg:
    return "Mcneg";
  default:
    return "ReflOO";
  }
}

meet_kind parse_meet( const std::string& name )
{
  for ( auto m : all_meets )
    if ( name == meet_name( m ) )
      return m;
  throw std::invalid_argument( "unknown meet class \"" + name + "\"" );
}

closure_kind meet_closure( meet_kind m )
{
  switch ( m )
  {
  case meet_kind::oico:
  case meet_kind::oi:
    return closure_kind::xi;
  case meet_kind::ioco:
  case meet_kind::io:
    return closure_kind::ix;
  case meet_kind::mo:
  case meet_kind::mc:
    return closure_kind::m;
  case meet_kind::mineg:
  case meet_kind::mcneg:
    return closure_kind::mneg;
  default:
    return closure_kind::refl;
  }
}

meet_kind meet_inner_pair( meet_kind m )
{
  switch ( m )
  {
  case meet_kind::oico:
    return meet_kind::ioco;
  case meet_kind::oi:
    return meet_kind::io;
  case meet_kind::ioco:
    return meet_kind::oico;
  case meet_kind::io:
    return meet_kind::oi;
  case meet_kind::mo:
    return meet_kind::mineg;
  case meet_kind::mc:
    return meet_kind::mcneg;
  case meet_kind::mineg:
    return meet_kind::mo;
  case meet_kind::mcneg:
    return meet_kind::mc;
  default:
    return meet_kind::refloo;
  }
}

bool meet_member( meet_kind m, const bool_fn& f )
{
  const bool f0 = f.value_at_zero(), f1 = f.value_at_one();
  switch ( m )
  {
  case meet_kind::oico:
    return ( !f0 && f1 ) || f.is_zero();
  case meet_kind::oi:
    return !f0 && f1;
  case meet_kind::ioco:
    return ( f0 && !f1 ) || f.is_zero();
  case meet_kind::io:
    return f0 && !f1;
  case meet_kind::mo:
    return !f0 && is_monotone( f );
  case meet_kind::mc:
    return !f0 && f1 && is_monotone( f );
  case meet_kind::mineg:
    return !f1 && is_antitone( f );
  case meet_kind::mcneg:
    return f0 && !f1 && is_antitone( f );
  default:
    return !f0 && !f1 && is_reflexive( f );
  }
}

clonoid_descriptor clonoid_descriptor::make_klik( int rank, uint64_t theta )
{
  clonoid_descriptor d;
  d.var = variant::klik;
  d.rank = rank;
  d.theta = theta;
  return d;
}

clonoid_descriptor clonoid_descriptor::make_meet( int rank, uint64_t theta, meet_kind m )
{
  clonoid_descriptor d;
  d.var = variant::klik_meet;
  d.rank = rank;
  d.theta = theta;
  d.meet = m;
  return d;
}

clonoid_descriptor clonoid_descriptor::make_named( int rank, std::string name )
{
  clonoid_descriptor d;
  d.var = variant::named;
  d.rank = rank;
  d.named_class = std::move( name );
  return d;
}

bool clonoid_descriptor::operator==( const clonoid_descriptor& o ) const
{
  if ( var != o.var || rank != o.rank )
    return false;
  switch ( var )
  {
  case variant::klik:
    return theta == o.theta;
  case variant::klik_meet:
    return theta == o.theta && meet == o.meet;
  default:
    return named_class == o.named_class;
  }
}

namespace {

std::string theta_string( uint64_t theta, const poset* p )
{
  if ( !p )
    return "0x" + std::to_string( theta );
  if ( theta == 0 )
    return "{}";
  ideal th{ p, theta };
  std::string s = "{";
  bool first = true;
  for ( int e : th.maxima() )
  {
    if ( !first )
      s += ",";
    first = false;
    s += p->label_or_key( e );
  }
  return s + "}";
}

} // namespace

std::string clonoid_descriptor::to_string( const poset* p ) const
{
  switch ( var )
  {
  case variant::klik:
    return "K" + std::to_string( rank ) + theta_string( theta, p );
  case variant::klik_meet:
    return "K" + std::to_string( rank ) + theta_string( theta, p ) + "&" + meet_name( meet );
  default:
    return named_class;
  }
}

bool clonoid_universe::theta_closed( closure_kind c, uint64_t theta ) const
{
  const auto& list = closed[static_cast<int>( c )];
  return std::find( list.begin(), list.end(), theta ) != list.end();
}

int clonoid_universe::zero_ideal_element() const
{
  for ( int e = 0; e < p.size(); ++e )
    if ( p.elements[e].true_count() == 0 )
      return e;
  throw std::logic_error( "poset lacks the constant-0 class" );
}

clonoid_universe clonoid_universe::build( int k, int jobs )
{
  clonoid_universe u;
  u.rank = k;
  u.p = enumerate_classes( k, std::nullopt, jobs );

  for ( const auto& th : all_ideals( u.p ) )
    u.ideal_masks.push_back( th.members );
  for ( auto c : all_closures )
  {
    auto& slot = u.closed[static_cast<int>( c )];
    for ( const auto& th : closed_ideals( u.p, c, /*cross_check=*/false ) )
      slot.push_back( th.members );
    u.closed_down[static_cast<int>( c )] = closed_down_masks( u.p, c );
  }

  /* probe family */
  std::vector<bool_fn> raw;
  for ( int n = 1; n <= 3; ++n )
  {
    const uint32_t rows = 1u << n;
    for ( uint32_t tab = 0; tab < ( 1u << rows ); ++tab )
    {
      bool_fn f( n );
      for ( uint32_t r = 0; r < rows; ++r )
        if ( ( tab >> r ) & 1u )
          f.set_bit( r, true );
      raw.push_back( f );
    }
  }
  for ( const auto& rep : u.p.elements )
  {
    raw.push_back( rep );
    raw.push_back( inner_negation( rep ) );
    for ( auto c : all_closures )
    {
      raw.push_back( closure_of( rep, c ) );
      raw.push_back( inner_negation( closure_of( rep, c ) ) );
    }
  }
  raw.push_back( constant_fn( 1, false ) );
  raw.push_back( constant_fn( 1, true ) );
  std::sort( raw.begin(), raw.end() );
  raw.erase( std::unique( raw.begin(), raw.end() ), raw.end() );
  u.probes = std::move( raw );

  std::unordered_map<std::string, int> probe_index;
  for ( size_t i = 0; i < u.probes.size(); ++i )
    probe_index.emplace( u.probes[i].to_string(), static_cast<int>( i ) );
  u.probe_inner.resize( u.probes.size() );
  for ( size_t i = 0; i < u.probes.size(); ++i )
  {
    auto it = probe_index.find( inner_negation( u.probes[i] ).to_string() );
    if ( it == probe_index.end() )
      throw std::logic_error( "probe family is not closed under inner negation" );
    u.probe_inner[i] = it->second;
  }

  u.probe_down.assign( u.probes.size(), 0 );
  parallel_for( jobs, u.probes.size(), [&]( size_t i ) {
    uint64_t m = 0;
    for ( int e = 0; e < u.p.size(); ++e )
      if ( minmin_le( u.p.elements[e], u.probes[i] ) )
        m |= uint64_t( 1 ) << e;
    u.probe_down[i] = m;
  } );

  u.element_inner.resize( u.p.size() );
  for ( int e = 0; e < u.p.size(); ++e )
  {
    int img = u.p.index_of( inner_negation( u.p.elements[e] ) );
    if ( img < 0 )
      throw std::logic_error( "inner negation leaves the poset" );
    u.element_inner[e] = img;
  }
  return u;
}

namespace {

/* iterate all size-m subsets of rows, calling fn with the row mask */
template <typename Fn>
bool for_subsets( const std::vector<uint32_t>& rows, int m, Fn fn )
{
  std::vector<int> idx( m );
  for ( int i = 0; i < m; ++i )
    idx[i] = i;
  const int t = static_cast<int>( rows.size() );
  for ( ;; )
  {
    uint32_t mask = 0;
    for ( int i = 0; i < m; ++i )
      mask |= 1u << rows[idx[i]];
    if ( !fn( mask ) )
      return false;
    int i = m - 1;
    while ( i >= 0 && idx[i] == t - m + i )
      --i;
    if ( i < 0 )
      return true;
    ++idx[i];
    for ( int j = i + 1; j < m; ++j )
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

bool member_klik( const poset& p, uint64_t theta, const bool_fn& f )
{
  if ( theta == 0 )
    return false;
  const auto rows = f.true_rows();
  const int m = std::min<int>( p.rank, static_cast<int>( rows.size() ) );
  if ( m == 0 )
    return true; /* chi_empty lies below every nonempty ideal */
  if ( f.arity() <= 4 && !p.chi_class[f.arity()].empty() )
  {
    const auto& tab = p.chi_class[f.arity()];
    return for_subsets( rows, m, [&]( uint32_t mask ) {
      int idx = tab[mask];
      assert( idx >= 0 );
      return ( theta >> idx ) & 1u;
    } );
  }
  /* equivalent downset test for wide functions */
  for ( int e = 0; e < p.size(); ++e )
    if ( !( ( theta >> e ) & 1u ) && minmin_le( p.elements[e], f ) )
      return false;
  return true;
}

bool descriptor_member( const clonoid_universe& u, const clonoid_descriptor& d, const bool_fn& f )
{
  switch ( d.var )
  {
  case clonoid_descriptor::variant::klik:
    return member_klik( u.p, d.theta, f );
  case clonoid_descriptor::variant::klik_meet:
    if ( !u.theta_closed( meet_closure( d.meet ), d.theta ) )
      throw std::invalid_argument( "descriptor ideal is not closed for its meet class" );
    return meet_member( d.meet, f ) && member_klik( u.p, d.theta, f );
  default:
    return class_member( d.named_class, f );
  }
}

std::vector<bool_fn> local_closure( const std::vector<bool_fn>& xs, int ell, int arity )
{
  if ( arity > 4 )
    throw std::runtime_error( "capacity: local closure is exhaustive only up to arity 4" );
  std::vector<uint32_t> members;
  for ( const auto& g : xs )
    if ( g.arity() == arity )
      members.push_back( static_cast<uint32_t>( g.word( 0 ) ) );
  std::sort( members.begin(), members.end() );
  members.erase( std::unique( members.begin(), members.end() ), members.end() );

  const uint32_t rows = 1u << arity;
  const int m = std::min<int>( ell, rows );
  std::vector<uint32_t> point_sets;
  std::vector<uint32_t> all_rows( rows );
  for ( uint32_t r = 0; r < rows; ++r )
    all_rows[r] = r;
  for_subsets( all_rows, m, [&]( uint32_t mask ) {
    point_sets.push_back( mask );
    return true;
  } );

  /* per point set, the agreeing patterns of the members */
  std::vector<std::unordered_set<uint32_t>> patterns( point_sets.size() );
  for ( size_t s = 0; s < point_sets.size(); ++s )
    for ( uint32_t g : members )
      patterns[s].insert( g & point_sets[s] );

  std::vector<bool_fn> out;
  const uint64_t tables = uint64_t( 1 ) << rows;
  for ( uint64_t tab = 0; tab < tables; ++tab )
  {
    bool ok = true;
    for ( size_t s = 0; ok && s < point_sets.size(); ++s )
      ok = patterns[s].count( static_cast<uint32_t>( tab ) & point_sets[s] ) > 0;
    if ( !ok )
      continue;
    bool_fn f( arity );
    for ( uint32_t r = 0; r < rows; ++r )
      if ( ( tab >> r ) & 1u )
        f.set_bit( r, true );
    out.push_back( f );
  }
  return out;
}

std::vector<bool_fn> down_set_functions( const poset& p, uint64_t theta, int arity )
{
  if ( arity > 4 )
    throw std::runtime_error( "capacity: downset expansion is exhaustive only up to arity 4" );
  std::vector<int> maxima;
  ideal th{ &p, theta };
  for ( int e : th.maxima() )
    maxima.push_back( e );
  std::vector<bool_fn> out;
  const uint32_t rows = 1u << arity;
  for ( uint64_t tab = 0; tab < ( uint64_t( 1 ) << rows ); ++tab )
  {
    bool_fn f( arity );
    for ( uint32_t r = 0; r < rows; ++r )
      if ( ( tab >> r ) & 1u )
        f.set_bit( r, true );
    bool in = false;
    for ( int e : maxima )
      if ( minmin_le( f, p.elements[e] ) )
      {
        in = true;
        break;
      }
    if ( in )
      out.push_back( f );
  }
  return out;
}

std::vector<bool_fn> normalize_theta( const std::vector<bool_fn>& theta, int ell )
{
  std::set<bool_fn> reps;
  for ( const auto& t : theta )
  {
    const auto rows = t.true_rows();
    const int top = std::min<int>( ell, static_cast<int>( rows.size() ) );
    for ( int m = 0; m <= top; ++m )
    {
      if ( m == 0 )
      {
        reps.insert( bool_fn( 1 ) );
        continue;
      }
      std::vector<int> idx( m );
      for ( int i = 0; i < m; ++i )
        idx[i] = i;
      const int n = static_cast<int>( rows.size() );
      for ( ;; )
      {
        std::vector<uint32_t> pts;
        for ( int i = 0; i < m; ++i )
          pts.push_back( rows[idx[i]] );
        reps.insert( canonical_class( from_true_rows( t.arity(), pts ), std::max( ell, 4 ) ) );
        int i = m - 1;
        while ( i >= 0 && idx[i] == n - m + i )
          --i;
        if ( i < 0 )
          break;
        ++idx[i];
        for ( int j = i + 1; j < m; ++j )
          idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return { reps.begin(), reps.end() };
}

ideal lift_rank( const poset& p_low, uint64_t theta, const poset& p_high )
{
  if ( p_low.rank > p_high.rank )
    throw std::invalid_argument( "lift_rank: source rank exceeds target rank" );
  uint64_t psi = 0;
  for ( int e = 0; e < p_high.size(); ++e )
    if ( member_klik( p_low, theta, p_high.elements[e] ) )
      psi |= uint64_t( 1 ) << e;
  return make_ideal( p_high, psi ); /* validates downward closure */
}

uint64_t fingerprint_hash( const fingerprint& fp )
{
  uint64_t h = 14695981039346656037ull;
  for ( auto w : fp )
  {
    h ^= w;
    h *= 1099511628211ull;
  }
  return h;
}

bool fingerprint_subset( const fingerprint& a, const fingerprint& b )
{
  for ( size_t i = 0; i < a.size(); ++i )
    if ( a[i] & ~b[i] )
      return false;
  return true;
}

fingerprint eval_fingerprint( const clonoid_universe& u, const clonoid_descriptor& d )
{
  fingerprint fp( ( u.probes.size() + 63 ) / 64, 0 );
  const bool klik_part = d.var != clonoid_descriptor::variant::named;
  for ( size_t i = 0; i < u.probes.size(); ++i )
  {
    bool in;
    if ( klik_part )
    {
      in = d.theta != 0 && ( u.probe_down[i] & ~d.theta ) == 0;
      if ( in && d.var == clonoid_descriptor::variant::klik_meet )
        in = meet_member( d.meet, u.probes[i] );
    }
    else
    {
      in = class_member( d.named_class, u.probes[i] );
    }
    if ( in )
      fp[i >> 6] |= uint64_t( 1 ) << ( i & 63u );
  }
  return fp;
}

fingerprint class_fingerprint( const clonoid_universe& u, const std::string& class_name )
{
  const auto& cls = find_class( class_name );
  fingerprint fp( ( u.probes.size() + 63 ) / 64, 0 );
  for ( size_t i = 0; i < u.probes.size(); ++i )
    if ( cls.member( u.probes[i] ) )
      fp[i >> 6] |= uint64_t( 1 ) << ( i & 63u );
  return fp;
}

std::string clonoid_info::display_name( const poset* p ) const
{
  if ( !names.empty() )
    return names.front();
  return canonical.to_string( p );
}

namespace {

/* membership of every arity <= 4 function, used by the alias verification
   pass and by the acceptance suite */
std::vector<char> wide_membership( const clonoid_universe& u, const clonoid_descriptor& d )
{
  std::vector<char> out;
  for ( int n = 1; n <= 4; ++n )
  {
    const uint32_t rows = 1u << n;
    for ( uint64_t tab = 0; tab < ( uint64_t( 1 ) << rows ); ++tab )
    {
      bool_fn f( n );
      for ( uint32_t r = 0; r < rows; ++r )
        if ( ( tab >> r ) & 1u )
          f.set_bit( r, true );
      out.push_back( descriptor_member( u, d, f ) ? 1 : 0 );
    }
  }
  return out;
}

} // namespace

std::vector<clonoid_info> enumerate_clonoids( const clonoid_universe& u, int jobs )
{
  std::vector<clonoid_descriptor> descs;
  for ( uint64_t theta : u.ideal_masks )
    descs.push_back( clonoid_descriptor::make_klik( u.rank, theta ) );
  const std::pair<closure_kind, std::vector<meet_kind>> meet_plan[] = {
      { closure_kind::xi, { meet_kind::oico, meet_kind::oi } },
      { closure_kind::ix, { meet_kind::ioco, meet_kind::io } },
      { closure_kind::m, { meet_kind::mo, meet_kind::mc } },
      { closure_kind::mneg, { meet_kind::mineg, meet_kind::mcneg } },
      { closure_kind::refl, { meet_kind::refloo } } };
  for ( const auto& [c, meets] : meet_plan )
    for ( uint64_t theta : u.closed[static_cast<int>( c )] )
    {
      if ( theta == 0 )
        continue;
      for ( auto m : meets )
        descs.push_back( clonoid_descriptor::make_meet( u.rank, theta, m ) );
    }
  for ( const auto& name : fixed_class_names() )
    descs.push_back( clonoid_descriptor::make_named( u.rank, name ) );

  std::vector<fingerprint> fps( descs.size() );
  parallel_for( jobs, descs.size(), [&]( size_t i ) { fps[i] = eval_fingerprint( u, descs[i] ); } );

  /* distinct ideals must already be separated by the probes */
  {
    std::set<fingerprint> klik_fps;
    for ( size_t i = 0; i < u.ideal_masks.size(); ++i )
      if ( !klik_fps.insert( fps[i] ).second )
        throw std::logic_error( "probe family fails to separate two ideals" );
  }

  std::map<fingerprint, std::vector<size_t>> groups;
  for ( size_t i = 0; i < descs.size(); ++i )
    groups[fps[i]].push_back( i );

  std::vector<clonoid_info> out;
  for ( const auto& [fp, members] : groups )
  {
    clonoid_info info;
    info.fp = fp;
    for ( size_t i : members )
      info.aliases.push_back( descs[i] );

    /* alias groups must agree beyond the probe family */
    if ( members.size() > 1 )
    {
      const auto base = wide_membership( u, descs[members[0]] );
      for ( size_t j = 1; j < members.size(); ++j )
        if ( wide_membership( u, descs[members[j]] ) != base )
          throw std::logic_error( "fingerprint collision: descriptors " +
                                  descs[members[0]].to_string( &u.p ) + " and " +
                                  descs[members[j]].to_string( &u.p ) +
                                  " differ on an arity-4 function" );
    }

    /* canonical alias: the K_k form when present, then a named class, then
       the meet form with the smallest ideal */
    const clonoid_descriptor* pick = nullptr;
    for ( const auto& a : info.aliases )
      if ( a.var == clonoid_descriptor::variant::klik )
        pick = &a;
    if ( !pick )
      for ( const auto& a : info.aliases )
        if ( a.var == clonoid_descriptor::variant::named )
          pick = &a;
    if ( !pick )
    {
      for ( const auto& a : info.aliases )
        if ( !pick || std::popcount( a.theta ) < std::popcount( pick->theta ) ||
             ( std::popcount( a.theta ) == std::popcount( pick->theta ) && a.theta < pick->theta ) )
          pick = &a;
    }
    info.canonical = *pick;
    out.push_back( std::move( info ) );
  }

  /* attach the k = 2 table names that match */
  for ( const auto& row : table3() )
  {
    const auto fp = class_fingerprint( u, row.name );
    for ( auto& info : out )
      if ( info.fp == fp )
        info.names.push_back( row.name );
  }

  std::sort( out.begin(), out.end(), []( const clonoid_info& a, const clonoid_info& b ) {
    int pa = 0, pb = 0;
    for ( auto w : a.fp )
      pa += std::popcount( w );
    for ( auto w : b.fp )
      pb += std::popcount( w );
    if ( pa != pb )
      return pa < pb;
    return a.fp < b.fp;
  } );
  return out;
}

int find_clonoid( const clonoid_universe& u, const std::vector<clonoid_info>& all,
                  const clonoid_descriptor& d )
{
  const auto fp = eval_fingerprint( u, d );
  for ( size_t i = 0; i < all.size(); ++i )
    if ( all[i].fp == fp )
      return static_cast<int>( i );
  return -1;
}

namespace {

/* inclusion-maximal closed ideals strictly below theta */
std::vector<uint64_t> closed_lower_covers( const clonoid_universe& u, closure_kind c,
                                           uint64_t theta )
{
  std::vector<uint64_t> below;
  for ( uint64_t psi : u.closed[static_cast<int>( c )] )
    if ( psi != theta && ( psi & ~theta ) == 0 )
      below.push_back( psi );
  std::vector<uint64_t> maximal;
  for ( uint64_t psi : below )
  {
    bool top = true;
    for ( uint64_t other : below )
      if ( other != psi && ( psi & ~other ) == 0 )
      {
        top = false;
        break;
      }
    if ( top )
      maximal.push_back( psi );
  }
  return maximal;
}

} // namespace

std::vector<int> lower_covers( const clonoid_universe& u, const std::vector<clonoid_info>& all,
                               int idx )
{
  const clonoid_info& info = all[idx];
  const clonoid_descriptor& d = info.canonical;
  const uint64_t full = u.p.full_mask();
  const uint64_t zero_ideal = uint64_t( 1 ) << u.zero_ideal_element();

  std::vector<clonoid_descriptor> cands;
  auto add_named = [&]( const std::string& n ) {
    cands.push_back( clonoid_descriptor::make_named( u.rank, n ) );
  };

  if ( d.var == clonoid_descriptor::variant::named ||
       ( d.var == clonoid_descriptor::variant::klik &&
         ( d.theta == full || d.theta == zero_ideal || d.theta == 0 ) ) )
  {
    /* fixed classes and the three degenerate downset classes */
    std::string name;
    if ( d.var == clonoid_descriptor::variant::named )
      name = d.named_class;
    else
      name = d.theta == full ? "clAll" : ( d.theta == zero_ideal ? "clVako" : "clEmpty" );
    for ( const auto& [cls, covers] : fixed_class_covers() )
      if ( cls == name )
      {
        for ( const auto& c : covers )
          add_named( c );
        break;
      }
  }
  else if ( d.var == clonoid_descriptor::variant::klik )
  {
    ideal th{ &u.p, d.theta };
    for ( int e : th.maxima() )
      cands.push_back( clonoid_descriptor::make_klik( u.rank, d.theta & ~( uint64_t( 1 ) << e ) ) );
    if ( u.theta_closed( closure_kind::xi, d.theta ) )
      cands.push_back( clonoid_descriptor::make_meet( u.rank, d.theta, meet_kind::oico ) );
    if ( u.theta_closed( closure_kind::ix, d.theta ) )
      cands.push_back( clonoid_descriptor::make_meet( u.rank, d.theta, meet_kind::ioco ) );
    if ( u.theta_closed( closure_kind::refl, d.theta ) )
      cands.push_back( clonoid_descriptor::make_meet( u.rank, d.theta, meet_kind::refloo ) );
  }
  else
  {
    /* meet form: shrink to the least closed ideal giving the same clonoid */
    uint64_t theta = d.theta;
    for ( const auto& a : info.aliases )
      if ( a.var == clonoid_descriptor::variant::klik_meet && a.meet == d.meet &&
           std::popcount( a.theta ) < std::popcount( theta ) )
        theta = a.theta;
    const closure_kind c = meet_closure( d.meet );
    const auto lc = closed_lower_covers( u, c, theta );
    auto add_meets = [&]( meet_kind m ) {
      for ( uint64_t psi : lc )
        cands.push_back( clonoid_descriptor::make_meet( u.rank, psi, m ) );
    };
    switch ( d.meet )
    {
    case meet_kind::oico:
      add_meets( meet_kind::oico );
      cands.push_back( clonoid_descriptor::make_meet( u.rank, theta, meet_kind::oi ) );
      if ( u.theta_closed( closure_kind::m, theta ) )
        cands.push_back( clonoid_descriptor::make_meet( u.rank, theta, meet_kind::mo ) );
      break;
    case meet_kind::oi:
      add_meets( meet_kind::oi );
      if ( u.theta_closed( closure_kind::m, theta ) )
        cands.push_back( clonoid_descriptor::make_meet( u.rank, theta, meet_kind::mc ) );
      break;
    case meet_kind::ioco:
      add_meets( meet_kind::ioco );
      cands.push_back( clonoid_descriptor::make_meet( u.rank, theta, meet_kind::io ) );
      if ( u.theta_closed( closure_kind::mneg, theta ) )
        cands.push_back( clonoid_descriptor::make_meet( u.rank, theta, meet_kind::mineg ) );
      break;
    case meet_kind::io:
      add_meets( meet_kind::io );
      if ( u.theta_closed( closure_kind::mneg, theta ) )
        cands.push_back( clonoid_descriptor::make_meet( u.rank, theta, meet_kind::mcneg ) );
      break;
    case meet_kind::mo:
      add_meets( meet_kind::mo );
      cands.push_back( clonoid_descriptor::make_meet( u.rank, theta, meet_kind::mc ) );
      break;
    case meet_kind::mc:
      add_meets( meet_kind::mc );
      break;
    case meet_kind::mineg:
      add_meets( meet_kind::mineg );
      cands.push_back( clonoid_descriptor::make_meet( u.rank, theta, meet_kind::mcneg ) );
      break;
    case meet_kind::mcneg:
      add_meets( meet_kind::mcneg );
      break;
    default:
      add_meets( meet_kind::refloo );
      break;
    }
  }

  /* meet descriptors over the empty ideal denote the empty clonoid; keep
     them resolvable by rewriting to the K_k form */
  for ( auto& cd : cands )
    if ( cd.var == clonoid_descriptor::variant::klik_meet && cd.theta == 0 )
      cd = clonoid_descriptor::make_klik( u.rank, 0 );

  std::vector<int> resolved;
  for ( const auto& cd : cands )
  {
    int j = find_clonoid( u, all, cd );
    if ( j < 0 )
      throw std::logic_error( "lower cover candidate " + cd.to_string( &u.p ) +
                              " is not an enumerated clonoid" );
    if ( j != idx )
      resolved.push_back( j );
  }
  std::sort( resolved.begin(), resolved.end() );
  resolved.erase( std::unique( resolved.begin(), resolved.end() ), resolved.end() );

  /* the theorem's list may contain non-maximal entries; keep the maxima */
  std::vector<int> covers;
  for ( int a : resolved )
  {
    bool top = true;
    for ( int b : resolved )
      if ( a != b && fingerprint_subset( all[a].fp, all[b].fp ) )
      {
        top = false;
        break;
      }
    if ( top )
      covers.push_back( a );
  }
  return covers;
}

clonoid_descriptor inner_negate_descriptor( const clonoid_universe& u,
                                            const clonoid_descriptor& d )
{
  switch ( d.var )
  {
  case clonoid_descriptor::variant::klik:
  case clonoid_descriptor::variant::klik_meet:
  {
    uint64_t img = 0;
    for ( int e = 0; e < u.p.size(); ++e )
      if ( ( d.theta >> e ) & 1u )
        img |= uint64_t( 1 ) << u.element_inner[e];
    if ( d.var == clonoid_descriptor::variant::klik )
      return clonoid_descriptor::make_klik( d.rank, img );
    return clonoid_descriptor::make_meet( d.rank, img, meet_inner_pair( d.meet ) );
  }
  default:
  {
    const auto& pair = find_class( d.named_class ).inner_pair;
    if ( pair.empty() )
      throw std::invalid_argument( "class " + d.named_class + " has no registered inner negation" );
    return clonoid_descriptor::make_named( d.rank, pair );
  }
  }
}

} // namespace minmin
