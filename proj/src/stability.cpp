#include "minmin/stability.hpp"

#include "minmin/named.hpp"
#include "minmin/semibisect.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>

namespace minmin {

namespace {

std::vector<clone_preset> build_presets()
{
  auto fn = []( const char* s ) { return parse_fn( s ); };
  std::vector<clone_preset> r;
  r.push_back( { "clIc", {}, "clIc" } );
  r.push_back( { "clAll", { fn( "or" ), fn( "neg" ) }, "clAll" } );
  r.push_back( { "clOI", { fn( "and" ), fn( "oplus3" ) }, "clOI" } );
  r.push_back( { "clOX", { fn( "and" ), fn( "plus" ) }, "clOX" } );
  r.push_back( { "clXI", { fn( "or" ), fn( "iff" ) }, "clXI" } );
  r.push_back( { "clM", { fn( "and" ), fn( "or" ), fn( "0" ), fn( "1" ) }, "clM" } );
  r.push_back( { "clMo", { fn( "and" ), fn( "or" ), fn( "0" ) }, "clMo" } );
  r.push_back( { "clMi", { fn( "and" ), fn( "or" ), fn( "1" ) }, "clMi" } );
  r.push_back( { "clMc", { fn( "and" ), fn( "or" ) }, "clMc" } );
  r.push_back( { "clS", { fn( "mu" ), fn( "neg" ) }, "clS" } );
  r.push_back( { "clSc", { fn( "mu" ), fn( "oplus3" ) }, "clSc" } );
  r.push_back( { "clSM", { fn( "mu" ) }, "clSM" } );
  /* the generator lists of the separating clones; mu = th^3_2 */
  r.push_back( { "clU", { fn( "mu" ), fn( "nimp" ) }, "clU" } );
  r.push_back( { "clW", { fn( "mu" ), fn( "imp" ) }, "clW" } );
  r.push_back( { "clTcU", { fn( "mu" ), fn( "3:b0" ) }, "clTcU" } );   /* x & (y -> z) */
  r.push_back( { "clTcW", { fn( "mu" ), fn( "3:f4" ) }, "clTcW" } );   /* x | (y -/-> z) */
  r.push_back( { "clMU", { fn( "mu" ), fn( "0" ) }, "clMU" } );
  r.push_back( { "clMW", { fn( "mu" ), fn( "1" ) }, "clMW" } );
  r.push_back( { "clMcU", { fn( "mu" ), fn( "3:e0" ) }, "clMcU" } );   /* x & (y | z) */
  r.push_back( { "clMcW", { fn( "mu" ), fn( "3:f8" ) }, "clMcW" } );   /* x | (y & z) */
  return r;
}

const std::map<std::string, std::vector<std::string>>& upper_cover_table()
{
  static const std::map<std::string, std::vector<std::string>> t = {
      { "clAll", {} },
      { "clOI", { "clOX", "clXI" } },
      { "clOX", { "clAll" } },
      { "clXI", { "clAll" } },
      { "clM", { "clAll" } },
      { "clMo", { "clM", "clOX" } },
      { "clMi", { "clM", "clXI" } },
      { "clMc", { "clMo", "clMi", "clOI" } },
      { "clU", { "clOX" } },
      { "clW", { "clXI" } },
      { "clTcU", { "clU", "clOI" } },
      { "clTcW", { "clW", "clOI" } },
      { "clMU", { "clU", "clMo" } },
      { "clMW", { "clW", "clMi" } },
      { "clMcU", { "clTcU", "clMU", "clMc" } },
      { "clMcW", { "clTcW", "clMW", "clMc" } },
      { "clS", { "clAll" } },
      { "clSc", { "clS", "clOI" } },
      { "clSM", { "clSc", "clMcU", "clMcW" } },
  };
  return t;
}

std::vector<bool_fn> members_up_to( const membership& k_member, int arity_cap )
{
  std::vector<bool_fn> out;
  for ( int n = 1; n <= arity_cap; ++n )
  {
    const uint32_t rows = 1u << n;
    for ( uint64_t tab = 0; tab < ( uint64_t( 1 ) << rows ); ++tab )
    {
      bool_fn f( n );
      for ( uint32_t r = 0; r < rows; ++r )
        if ( ( tab >> r ) & 1u )
          f.set_bit( r, true );
      if ( k_member( f ) )
        out.push_back( f );
    }
  }
  return out;
}

} // namespace

const std::vector<clone_preset>& preset_registry()
{
  static const std::vector<clone_preset> reg = build_presets();
  return reg;
}

const clone_preset& find_preset( const std::string& name )
{
  for ( const auto& p : preset_registry() )
    if ( p.name == name )
      return p;
  throw std::invalid_argument( "unknown clone preset \"" + name + "\"" );
}

std::vector<std::string> preset_upper_covers( const std::string& name )
{
  auto it = upper_cover_table().find( name );
  if ( it == upper_cover_table().end() )
    throw std::invalid_argument( "no upper cover data for preset \"" + name + "\"" );
  return it->second;
}

preset_validation validate_preset( const clone_preset& preset, int max_arity )
{
  const auto& cls = find_class( preset.predicate );
  for ( const auto& g : preset.generators )
    if ( !cls.member( g ) )
      return { false, "generator " + g.to_string() + " violates " + preset.predicate };

  const auto closure = clone_closure_bounded( preset.generators, max_arity );
  for ( const auto& f : closure )
    if ( !cls.member( f ) )
      return { false, "closure member " + f.to_string() + " violates " + preset.predicate };

  std::vector<bool_fn> expected = members_up_to( cls.member, max_arity );
  if ( closure.size() != expected.size() )
    return { false, "closure has " + std::to_string( closure.size() ) + " members, predicate has " +
                        std::to_string( expected.size() ) };
  std::vector<bool_fn> got = closure;
  std::sort( got.begin(), got.end() );
  std::sort( expected.begin(), expected.end() );
  if ( got != expected )
    return { false, "closure and predicate disagree" };
  return { true, "" };
}

stability_verdict stability_check( const membership& k_member, side_kind side,
                                   const clone_preset& preset, int arity_cap, uint64_t budget,
                                   uint64_t seed )
{
  if ( arity_cap < 1 || arity_cap > 4 )
    throw std::invalid_argument( "stability checks support arity caps 1..4" );
  const auto members = members_up_to( k_member, arity_cap );

  if ( side == side_kind::right )
  {
    /* minor closure */
    for ( const auto& f : members )
    {
      const int m = f.arity();
      for ( int n = 1; n <= arity_cap; ++n )
      {
        std::vector<int> sigma( m, 1 );
        for ( ;; )
        {
          bool_fn g = minor_apply( f, minor_map( m, n, sigma ) );
          if ( !k_member( g ) )
            return { verdict_kind::fail,
                     "minor of " + f.to_string() + " leaves the class: " + g.to_string(), g };
          int j = m - 1;
          while ( j >= 0 && sigma[j] == n )
          {
            sigma[j] = 1;
            --j;
          }
          if ( j < 0 )
            break;
          ++sigma[j];
        }
      }
    }
    /* f * g over the generators */
    for ( const auto& f : members )
      for ( const auto& g : preset.generators )
      {
        bool_fn h = star( f, g );
        if ( !k_member( h ) )
          return { verdict_kind::fail,
                   f.to_string() + " * " + g.to_string() + " leaves the class: " + h.to_string(),
                   h };
      }
    return { verdict_kind::pass, "no counterexample up to arity " + std::to_string( arity_cap ), std::nullopt };
  }

  /* left composition: g(f_1, ..., f_m) */
  std::array<std::vector<bool_fn>, 5> by_arity;
  for ( const auto& f : members )
    by_arity[f.arity()].push_back( f );

  bool truncated = false;
  std::mt19937_64 rng( seed );
  for ( const auto& g : preset.generators )
  {
    const int m = g.arity();
    for ( int n = 1; n <= arity_cap; ++n )
    {
      const auto& pool = by_arity[n];
      if ( pool.empty() )
        continue;
      uint64_t total = 1;
      bool overflow = false;
      for ( int j = 0; j < m; ++j )
      {
        total *= pool.size();
        if ( total > budget )
        {
          overflow = true;
          break;
        }
      }
      std::vector<bool_fn> args( m );
      if ( !overflow )
      {
        std::vector<size_t> idx( m, 0 );
        for ( ;; )
        {
          for ( int j = 0; j < m; ++j )
            args[j] = pool[idx[j]];
          bool_fn h = compose( g, args );
          if ( !k_member( h ) )
            return { verdict_kind::fail,
                     "left composition with " + g.to_string() + " leaves the class: " +
                         h.to_string(),
                     h };
          int j = m - 1;
          while ( j >= 0 && idx[j] + 1 == pool.size() )
          {
            idx[j] = 0;
            --j;
          }
          if ( j < 0 )
            break;
          ++idx[j];
        }
      }
      else
      {
        truncated = true;
        std::uniform_int_distribution<size_t> pick( 0, pool.size() - 1 );
        for ( uint64_t s = 0; s < budget; ++s )
        {
          for ( int j = 0; j < m; ++j )
            args[j] = pool[pick( rng )];
          bool_fn h = compose( g, args );
          if ( !k_member( h ) )
            return { verdict_kind::fail,
                     "left composition with " + g.to_string() + " leaves the class: " +
                         h.to_string(),
                     h };
        }
      }
    }
  }
  if ( truncated )
    return { verdict_kind::inconclusive,
             "budget exceeded; sampled tuples found no counterexample", std::nullopt };
  return { verdict_kind::pass, "no counterexample up to arity " + std::to_string( arity_cap ), std::nullopt };
}

stability_verdict theta_right_stability( const poset& p, uint64_t theta,
                                         const clone_preset& preset, int arity_cap,
                                         uint64_t budget )
{
  if ( arity_cap < 1 || arity_cap > 4 )
    throw std::invalid_argument( "theta stability supports arity caps 1..4" );
  const auto clone = clone_closure_bounded( preset.generators, arity_cap );
  std::array<std::vector<bool_fn>, 5> by_arity;
  for ( const auto& f : clone )
    by_arity[f.arity()].push_back( f );

  for ( int e = 0; e < p.size(); ++e )
  {
    if ( !( ( theta >> e ) & 1u ) )
      continue;
    const bool_fn& rep = p.elements[e];
    const int m = rep.arity();
    for ( int n = 1; n <= arity_cap; ++n )
    {
      const auto& pool = by_arity[n];
      if ( pool.empty() )
        continue;
      uint64_t total = 1;
      for ( int j = 0; j < m; ++j )
      {
        total *= pool.size();
        if ( total > budget )
          throw std::runtime_error( "capacity: theta-right stability tuple budget exceeded" );
      }
      std::vector<size_t> idx( m, 0 );
      std::vector<bool_fn> args( m );
      for ( ;; )
      {
        for ( int j = 0; j < m; ++j )
          args[j] = pool[idx[j]];
        bool_fn h = compose( rep, args );
        /* every <= k-true-point class below h must stay in theta */
        for ( int c = 0; c < p.size(); ++c )
          if ( !( ( theta >> c ) & 1u ) && minmin_le( p.elements[c], h ) )
            return { verdict_kind::fail,
                     "composite " + h.to_string() + " of " + rep.to_string() +
                         " reaches class " + p.label_or_key( c ) + " outside theta",
                     h };
        int j = m - 1;
        while ( j >= 0 && idx[j] + 1 == pool.size() )
        {
          idx[j] = 0;
          --j;
        }
        if ( j < 0 )
          break;
        ++idx[j];
      }
    }
  }
  return { verdict_kind::pass, "no counterexample up to arity " + std::to_string( arity_cap ), std::nullopt };
}

} // namespace minmin
