#include "minmin/clonoid.hpp"
#include "minmin/exports.hpp"
#include "minmin/lattice.hpp"
#include "minmin/named.hpp"
#include "minmin/poset.hpp"
#include "minmin/semibisect.hpp"
#include "minmin/stability.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace minmin;
using nlohmann::json;

struct run_config
{
  int k = 2;
  std::string closure;
  std::string format = "text";
  std::string out;
  int jobs = 1;
  int cap = 3;
  uint64_t seed = 1;
  uint64_t budget = uint64_t( 1 ) << 22;
  bool experimental = false;
};

void add_common( CLI::App* cmd, run_config& cfg, bool with_k = true )
{
  if ( with_k )
    cmd->add_option( "--k", cfg.k, "rank (number of true points), 1..4" )
        ->check( CLI::Range( 1, 4 ) );
  cmd->add_option( "--format", cfg.format, "output format: json, dot or text" )
      ->check( CLI::IsMember( { "json", "dot", "text" } ) );
  cmd->add_option( "--out", cfg.out, "output file (relative paths use $MINMIN_OUTPUT_DIR)" );
  cmd->add_option( "--jobs", cfg.jobs, "worker threads" )->check( CLI::Range( 1, 256 ) );
  cmd->add_flag( "--experimental", cfg.experimental, "allow the experimental k = 4 paths" );
}

void check_rank( const run_config& cfg )
{
  if ( cfg.k == 4 && !cfg.experimental )
    throw std::invalid_argument( "k = 4 is experimental; pass --experimental to enable it" );
}

void emit( const run_config& cfg, const std::string& text )
{
  if ( cfg.out.empty() )
  {
    std::cout << text;
    return;
  }
  std::filesystem::path path( cfg.out );
  if ( path.is_relative() )
    if ( const char* dir = std::getenv( "MINMIN_OUTPUT_DIR" ) )
      path = std::filesystem::path( dir ) / path;
  std::ofstream os( path );
  if ( !os )
    throw std::runtime_error( "cannot open output file " + path.string() );
  os << text;
  std::cerr << "wrote " << path.string() << "\n";
}

void emit_json( const run_config& cfg, const json& j )
{
  emit( cfg, j.dump( 2 ) + "\n" );
}

std::vector<bool_fn> parse_fn_list( const std::string& spec )
{
  std::vector<bool_fn> out;
  std::stringstream ss( spec );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
    if ( !item.empty() )
      out.push_back( parse_fn( item ) );
  if ( out.empty() )
    throw std::invalid_argument( "empty function list" );
  return out;
}

std::optional<closure_kind> parse_closure_opt( const std::string& s )
{
  if ( s.empty() )
    return std::nullopt;
  return parse_closure( s );
}

/* ---------------------------------------------------------------- fn --- */

void cmd_fn_eval( const run_config& cfg, const std::string& fn_spec, const std::string& at )
{
  bool_fn f = parse_fn( fn_spec );
  if ( at.empty() )
  {
    emit( cfg, f.to_string() + "\n" );
    return;
  }
  emit( cfg, std::string( eval( f, tuple_point::parse( at ) ) ? "1" : "0" ) + "\n" );
}

void cmd_fn_minor( const run_config& cfg, const std::string& fn_spec, const std::string& map_spec,
                   int target )
{
  bool_fn g = parse_fn( fn_spec );
  std::vector<int> sigma;
  std::stringstream ss( map_spec );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
    sigma.push_back( std::stoi( item ) );
  emit( cfg, minor_apply( g, minor_map( g.arity(), target, sigma ) ).to_string() + "\n" );
}

void cmd_fn_compose( const run_config& cfg, const std::string& outer, const std::string& inner )
{
  emit( cfg, compose( parse_fn( outer ), parse_fn_list( inner ) ).to_string() + "\n" );
}

void cmd_fn_closure( const run_config& cfg, const std::string& fn_spec, const std::string& cl )
{
  emit( cfg, closure_of( parse_fn( fn_spec ), parse_closure( cl ) ).to_string() + "\n" );
}

/* ------------------------------------------------------------- poset --- */

void cmd_poset_build( const run_config& cfg )
{
  check_rank( cfg );
  poset p = enumerate_classes( cfg.k, parse_closure_opt( cfg.closure ), cfg.jobs );
  if ( cfg.format == "dot" )
    emit( cfg, poset_to_dot( p ) );
  else if ( cfg.format == "json" )
    emit_json( cfg, poset_to_json( p ) );
  else
  {
    std::ostringstream os;
    os << p.size() << " classes at k = " << p.rank;
    if ( p.closure )
      os << " (closure " << closure_name( *p.closure ) << ")";
    os << "\n";
    for ( int i = 0; i < p.size(); ++i )
      os << "  " << i << ": " << p.elements[i].to_string() << "  " << p.label_or_key( i ) << "\n";
    os << "covers:";
    for ( auto [a, b] : p.covers )
      os << " " << p.label_or_key( a ) << "<" << p.label_or_key( b );
    os << "\n";
    emit( cfg, os.str() );
  }
}

/* ------------------------------------------------------------ ideals --- */

void cmd_ideals( const run_config& cfg, const std::string& mode )
{
  check_rank( cfg );
  poset p = enumerate_classes( cfg.k, std::nullopt, cfg.jobs );
  std::vector<ideal> ideals;
  if ( mode == "closed" )
    ideals = closed_ideals( p, parse_closure( cfg.closure ) );
  else
    ideals = all_ideals( p );

  if ( mode == "count" )
  {
    emit( cfg, std::to_string( ideals.size() ) + "\n" );
    return;
  }
  if ( cfg.format == "dot" )
    emit( cfg, ideal_lattice_to_dot( p, ideals ) );
  else if ( cfg.format == "json" )
  {
    json j = ideals_to_json( p, ideals );
    if ( mode == "closed" )
      j["closure"] = cfg.closure;
    emit_json( cfg, j );
  }
  else
  {
    std::ostringstream os;
    os << ideals.size() << ( mode == "closed" ? " closed ideals" : " ideals" ) << " at k = "
       << cfg.k << "\n";
    for ( const auto& th : ideals )
    {
      os << "  {";
      bool first = true;
      for ( int e : th.maxima() )
      {
        if ( !first )
          os << ",";
        first = false;
        os << p.label_or_key( e );
      }
      os << "}\n";
    }
    emit( cfg, os.str() );
  }
}

/* ---------------------------------------------------------- clonoids --- */

clonoid_descriptor descriptor_from_flags( const clonoid_universe& u, const std::string& theta,
                                          const std::string& meet, const std::string& named )
{
  if ( !named.empty() )
    return clonoid_descriptor::make_named( u.rank, named );
  if ( theta.empty() )
    throw std::invalid_argument( "specify --theta (or --named)" );
  ideal th = downset_of_fns( u.p, parse_fn_list( theta ) );
  if ( meet.empty() )
    return clonoid_descriptor::make_klik( u.rank, th.members );
  return clonoid_descriptor::make_meet( u.rank, th.members, parse_meet( meet ) );
}

void cmd_clonoids( const run_config& cfg, const std::string& mode, const std::string& theta,
                   const std::string& meet, const std::string& named, const std::string& fn_spec )
{
  check_rank( cfg );
  if ( cfg.k != 2 && cfg.k != 3 && mode != "member" )
    throw std::invalid_argument( "clonoid enumeration supports k = 2 and k = 3" );
  std::cerr << "building rank-" << cfg.k << " universe...\n";
  auto u = clonoid_universe::build( cfg.k, cfg.jobs );

  if ( mode == "member" )
  {
    auto d = descriptor_from_flags( u, theta, meet, named );
    bool in = descriptor_member( u, d, parse_fn( fn_spec ) );
    emit( cfg, std::string( in ? "true" : "false" ) + "\n" );
    return;
  }

  std::cerr << "enumerating clonoids...\n";
  auto all = enumerate_clonoids( u, cfg.jobs );
  std::vector<std::vector<int>> covers;
  if ( mode == "covers" )
  {
    covers.resize( all.size() );
    for ( size_t i = 0; i < all.size(); ++i )
      covers[i] = lower_covers( u, all, static_cast<int>( i ) );
  }

  if ( cfg.format == "dot" )
  {
    if ( mode != "covers" )
      throw std::invalid_argument( "dot output applies to clonoids covers" );
    emit( cfg, clonoids_to_dot( u, all, covers ) );
  }
  else if ( cfg.format == "json" )
    emit_json( cfg, clonoids_to_json( u, all, covers ) );
  else
  {
    std::ostringstream os;
    os << all.size() << " clonoids at k = " << cfg.k << "\n";
    for ( size_t i = 0; i < all.size(); ++i )
    {
      os << "  " << i << ": " << all[i].display_name( &u.p );
      if ( all[i].aliases.size() > 1 )
      {
        os << "  aliases:";
        for ( const auto& a : all[i].aliases )
          os << " " << a.to_string( &u.p );
      }
      if ( mode == "covers" )
      {
        os << "  covers:";
        for ( int j : covers[i] )
          os << " " << all[j].display_name( &u.p );
      }
      os << "\n";
    }
    emit( cfg, os.str() );
  }
}

/* -------------------------------------------------------- semibisect --- */

void cmd_semibisect( const run_config& cfg, const std::string& mode, const std::string& fn_spec,
                     const std::string& g_spec )
{
  bool_fn f = parse_fn( fn_spec );
  auto gs = parse_fn_list( g_spec );
  if ( mode == "check" )
  {
    emit( cfg, std::string( semibisectable( f, gs, cfg.k ) ? "true" : "false" ) + "\n" );
    return;
  }
  auto dec = decompose_via_mcuk( f, gs, cfg.k );
  json j;
  j["ok"] = dec.has_value();
  if ( dec )
  {
    j["outer"] = dec->outer.to_string();
    json inner = json::array();
    for ( const auto& g : dec->inner )
      inner.push_back( g.to_string() );
    j["inner"] = inner;
    j["recomposes"] = ( compose( dec->outer, dec->inner ) == f );
  }
  emit_json( cfg, j );
}

/* --------------------------------------------------------- stability --- */

json verdict_to_json( const stability_verdict& v )
{
  json j;
  switch ( v.kind )
  {
  case verdict_kind::pass:
    j["verdict"] = "pass";
    break;
  case verdict_kind::fail:
    j["verdict"] = "fail";
    break;
  default:
    j["verdict"] = "inconclusive";
    break;
  }
  j["detail"] = v.detail;
  if ( v.counterexample )
    j["counterexample"] = v.counterexample->to_string();
  return j;
}

void cmd_stability( const run_config& cfg, const std::string& mode, const std::string& class_name,
                    const std::string& theta, const std::string& preset_name )
{
  if ( cfg.cap > 4 )
    throw std::invalid_argument( "stability commands support --cap up to 4" );
  const auto& preset = find_preset( preset_name );
  stability_verdict v;
  if ( mode == "theta-right" )
  {
    check_rank( cfg );
    poset p = enumerate_classes( cfg.k, std::nullopt, cfg.jobs );
    ideal th = downset_of_fns( p, parse_fn_list( theta ) );
    v = theta_right_stability( p, th.members, preset, cfg.cap, cfg.budget );
  }
  else
  {
    const auto& cls = find_class( class_name );
    v = stability_check( cls.member, mode == "left" ? side_kind::left : side_kind::right, preset,
                         cfg.cap, cfg.budget, cfg.seed );
  }
  if ( cfg.format == "json" )
    emit_json( cfg, verdict_to_json( v ) );
  else
    emit( cfg, verdict_to_json( v )["verdict"].get<std::string>() + ": " + v.detail + "\n" );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "minorant-minor posets, ideal lattices and clonoid enumeration for Boolean "
                "functions" };
  app.require_subcommand( 1 );
  run_config cfg;

  /* fn */
  auto* fn = app.add_subcommand( "fn", "truth table operations" )->require_subcommand( 1 );
  std::string fn_spec, at, map_spec, outer, inner, cl;
  int target = 1;
  auto* fn_eval = fn->add_subcommand( "eval", "print a truth table or evaluate it at a point" );
  fn_eval->add_option( "--fn", fn_spec, "function (name or n:hex)" )->required();
  fn_eval->add_option( "--at", at, "input tuple, e.g. 011" );
  add_common( fn_eval, cfg, false );
  auto* fn_minor = fn->add_subcommand( "minor", "apply a minor formation map" );
  fn_minor->add_option( "--fn", fn_spec )->required();
  fn_minor->add_option( "--map", map_spec, "sigma as comma list, e.g. 1,1,2" )->required();
  fn_minor->add_option( "--n", target, "target arity" )->required();
  add_common( fn_minor, cfg, false );
  auto* fn_compose = fn->add_subcommand( "compose", "compose an outer function with inners" );
  fn_compose->add_option( "--outer", outer )->required();
  fn_compose->add_option( "--inner", inner, "comma list of inner functions" )->required();
  add_common( fn_compose, cfg, false );
  auto* fn_closure = fn->add_subcommand( "closure", "apply a C-closure" );
  fn_closure->add_option( "--fn", fn_spec )->required();
  fn_closure->add_option( "--closure", cl, "XI, IX, M, Mneg or R" )->required();
  add_common( fn_closure, cfg, false );
  auto* fn_list = fn->add_subcommand( "list", "named-function registry as JSON" );
  add_common( fn_list, cfg, false );
  auto* fn_classes = fn->add_subcommand( "classes", "named-class registry as JSON" );
  add_common( fn_classes, cfg, false );

  /* poset */
  auto* po = app.add_subcommand( "poset", "the poset of <= k-true-point classes" )
                 ->require_subcommand( 1 );
  auto* po_build = po->add_subcommand( "build", "enumerate classes and their order" );
  po_build->add_option( "--closure", cfg.closure, "build the C-closed quotient" );
  add_common( po_build, cfg );

  /* ideals */
  auto* id = app.add_subcommand( "ideals", "ideals of the class poset" )->require_subcommand( 1 );
  auto* id_count = id->add_subcommand( "count", "number of ideals" );
  add_common( id_count, cfg );
  auto* id_list = id->add_subcommand( "list", "all ideals" );
  add_common( id_list, cfg );
  auto* id_closed = id->add_subcommand( "closed", "the (k,C)-closed ideals" );
  id_closed->add_option( "--closure", cfg.closure, "XI, IX, M, Mneg or R" )->required();
  add_common( id_closed, cfg );

  /* clonoids */
  std::string theta, meet, named;
  auto* clon = app.add_subcommand( "clonoids", "clonoid enumeration" )->require_subcommand( 1 );
  auto* cl_enum = clon->add_subcommand( "enumerate", "all clonoids at rank k" );
  add_common( cl_enum, cfg );
  auto* cl_cov = clon->add_subcommand( "covers", "clonoids with their lower covers" );
  add_common( cl_cov, cfg );
  auto* cl_mem = clon->add_subcommand( "member", "membership of a function in a clonoid" );
  cl_mem->add_option( "--theta", theta, "ideal generators (comma list of functions)" );
  cl_mem->add_option( "--meet", meet,
                      "meet class (OICO, OI, IOCO, IO, Mo, Mc, Mineg, Mcneg, ReflOO)" );
  cl_mem->add_option( "--named", named, "named class instead of an ideal" );
  cl_mem->add_option( "--fn", fn_spec, "function to test" )->required();
  add_common( cl_mem, cfg );

  /* semibisect */
  std::string g_spec;
  auto* sb = app.add_subcommand( "semibisect", "semibisectability checks" )->require_subcommand( 1 );
  auto* sb_check = sb->add_subcommand( "check", "is f (G,k)-semibisectable?" );
  sb_check->add_option( "--fn", fn_spec )->required();
  sb_check->add_option( "--g", g_spec, "comma list of functions" )->required();
  add_common( sb_check, cfg );
  auto* sb_dec = sb->add_subcommand( "decompose", "outer/inner decomposition" );
  sb_dec->add_option( "--fn", fn_spec )->required();
  sb_dec->add_option( "--g", g_spec )->required();
  add_common( sb_dec, cfg );

  /* stability */
  std::string class_name, preset_name;
  auto* st = app.add_subcommand( "stability", "bounded stability verifiers" )
                 ->require_subcommand( 1 );
  for ( const char* side : { "left", "right" } )
  {
    auto* c = st->add_subcommand( side, std::string( "class stability under " ) + side +
                                            " composition" );
    c->add_option( "--class", class_name, "class registry name" )->required();
    c->add_option( "--preset", preset_name, "clone preset name" )->required();
    c->add_option( "--cap", cfg.cap, "arity cap (<= 4)" );
    c->add_option( "--seed", cfg.seed, "seed for sampled tuples" );
    c->add_option( "--budget", cfg.budget, "tuple budget before sampling" );
    add_common( c, cfg, false );
  }
  auto* st_theta = st->add_subcommand( "theta-right", "right stability of K_k(theta)" );
  st_theta->add_option( "--theta", theta )->required();
  st_theta->add_option( "--preset", preset_name )->required();
  st_theta->add_option( "--cap", cfg.cap );
  st_theta->add_option( "--budget", cfg.budget );
  add_common( st_theta, cfg );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( fn_eval->parsed() )
      cmd_fn_eval( cfg, fn_spec, at );
    else if ( fn_minor->parsed() )
      cmd_fn_minor( cfg, fn_spec, map_spec, target );
    else if ( fn_compose->parsed() )
      cmd_fn_compose( cfg, outer, inner );
    else if ( fn_closure->parsed() )
      cmd_fn_closure( cfg, fn_spec, cl );
    else if ( fn_list->parsed() )
      emit_json( cfg, functions_to_json() );
    else if ( fn_classes->parsed() )
      emit_json( cfg, classes_to_json() );
    else if ( po_build->parsed() )
      cmd_poset_build( cfg );
    else if ( id_count->parsed() )
      cmd_ideals( cfg, "count" );
    else if ( id_list->parsed() )
      cmd_ideals( cfg, "list" );
    else if ( id_closed->parsed() )
      cmd_ideals( cfg, "closed" );
    else if ( cl_enum->parsed() )
      cmd_clonoids( cfg, "enumerate", theta, meet, named, fn_spec );
    else if ( cl_cov->parsed() )
      cmd_clonoids( cfg, "covers", theta, meet, named, fn_spec );
    else if ( cl_mem->parsed() )
      cmd_clonoids( cfg, "member", theta, meet, named, fn_spec );
    else if ( sb_check->parsed() )
      cmd_semibisect( cfg, "check", fn_spec, g_spec );
    else if ( sb_dec->parsed() )
      cmd_semibisect( cfg, "decompose", fn_spec, g_spec );
    else if ( st->get_subcommand( "left" )->parsed() )
      cmd_stability( cfg, "left", class_name, theta, preset_name );
    else if ( st->get_subcommand( "right" )->parsed() )
      cmd_stability( cfg, "right", class_name, theta, preset_name );
    else if ( st_theta->parsed() )
      cmd_stability( cfg, "theta-right", class_name, theta, preset_name );
  }
  catch ( const std::invalid_argument& e )
  {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
