#include "minmin/bool_fn.hpp"
#include "minmin/named.hpp"
#include "minmin/order.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <bit>
#include <random>
#include <stdexcept>

using namespace minmin;

TEST_CASE( "truth table text round trip" )
{
  for ( const char* s : { "1:0", "1:2", "2:8", "2:e", "2:6", "2:4", "3:e8", "4:e880", "3:0" } )
    CHECK( bool_fn::parse( s ).to_string() == s );
  CHECK( bool_fn::parse( "2:0E" ).to_string() == "2:e" ); /* case and leading zeros */
  CHECK( bool_fn::parse( "2:008" ).to_string() == "2:8" );
  CHECK_THROWS_AS( bool_fn::parse( "2:x" ), std::invalid_argument );
  CHECK_THROWS_AS( bool_fn::parse( "17:0" ), std::invalid_argument );
  CHECK_THROWS_AS( bool_fn::parse( "1:4" ), std::invalid_argument ); /* bit above 2^2^n */
  CHECK_THROWS_AS( bool_fn::parse( "nohex" ), std::invalid_argument );

  std::mt19937_64 rng( 7 );
  for ( int i = 0; i < 500; ++i )
  {
    auto f = test_util::random_fn( rng, 1 + int( rng() % 6 ) );
    CHECK( bool_fn::parse( f.to_string() ) == f );
  }
}

TEST_CASE( "from_true_points" )
{
  CHECK( from_true_points( 2, { tuple_point::parse( "10" ) } ).to_string() == "2:4" );
  CHECK( from_true_points( 2, {} ).to_string() == "2:0" );
  CHECK( from_true_points( 3, { tuple_point::parse( "011" ), tuple_point::parse( "101" ),
                                tuple_point::parse( "110" ), tuple_point::parse( "111" ) } )
             .to_string() == "3:e8" );
  CHECK_THROWS_AS( from_true_points( 2, { tuple_point::parse( "011" ) } ), std::invalid_argument );
}

TEST_CASE( "named function tables" )
{
  CHECK( named_fn( "lambda30" ).to_string() == "3:6" );
  CHECK( named_fn( "plus" ).to_string() == "2:6" );
  CHECK( named_fn( "delta1" ) == from_true_points( 3, { tuple_point::parse( "001" ),
                                                        tuple_point::parse( "010" ),
                                                        tuple_point::parse( "100" ) } ) );
  CHECK( named_fn( "id" ).to_string() == "1:2" );
  CHECK( named_fn( "neg" ).to_string() == "1:1" );
  CHECK( named_fn( "and" ).to_string() == "2:8" );
  CHECK( named_fn( "or" ).to_string() == "2:e" );
  CHECK( named_fn( "iff" ).to_string() == "2:9" );
  CHECK( named_fn( "nimp" ).to_string() == "2:4" );
  CHECK( named_fn( "mu" ).to_string() == "3:e8" );
  CHECK( named_fn( "oplus3" ).to_string() == "3:96" );
  CHECK_THROWS_AS( named_fn( "nosuch" ), std::invalid_argument );
  CHECK( classification_names().size() == 34 );
}

TEST_CASE( "minor_apply" )
{
  /* x | x = x */
  CHECK( minor_apply( named_fn( "or" ), minor_map( 2, 1, { 1, 1 } ) ) == named_fn( "id" ) );
  /* mu(x, x, y) = x, checked against direct evaluation of all four rows */
  bool_fn m = minor_apply( named_fn( "mu" ), minor_map( 3, 2, { 1, 1, 2 } ) );
  bool_fn expect( 2 );
  for ( uint32_t a = 0; a < 4; ++a )
  {
    uint32_t x = ( a >> 1 ) & 1u, y = a & 1u;
    uint32_t row = ( x << 2 ) | ( x << 1 ) | y;
    if ( named_fn( "mu" ).bit( row ) )
      expect.set_bit( a, true );
  }
  CHECK( m == expect );
  CHECK( m == projection( 2, 1 ) );
  /* fictitious argument introduction */
  CHECK( minor_apply( named_fn( "id" ), minor_map( 1, 2, { 2 } ) ).to_string() == "2:a" );
  CHECK_THROWS_AS( minor_apply( named_fn( "or" ), minor_map( 3, 2, { 1, 1, 2 } ) ),
                   std::invalid_argument );
  CHECK_THROWS_AS( minor_map( 2, 2, { 1, 3 } ), std::invalid_argument );
}

TEST_CASE( "minor maps compose" )
{
  std::mt19937_64 rng( 21 );
  for ( int i = 0; i < 400; ++i )
  {
    const int m = 1 + int( rng() % 4 ), n = 1 + int( rng() % 4 ), r = 1 + int( rng() % 4 );
    auto g = test_util::random_fn( rng, m );
    std::vector<int> sigma( m ), tau( n ), both( m );
    for ( int j = 0; j < m; ++j )
      sigma[j] = 1 + int( rng() % n );
    for ( int j = 0; j < n; ++j )
      tau[j] = 1 + int( rng() % r );
    for ( int j = 0; j < m; ++j )
      both[j] = tau[sigma[j] - 1];
    auto lhs = minor_apply( minor_apply( g, minor_map( m, n, sigma ) ), minor_map( n, r, tau ) );
    auto rhs = minor_apply( g, minor_map( m, r, both ) );
    CHECK( lhs == rhs );
  }
}

TEST_CASE( "compose" )
{
  CHECK( compose( named_fn( "and" ), { named_fn( "id" ), named_fn( "neg" ) } ).to_string() ==
         "1:0" );
  CHECK( compose( threshold_fn( 3, 2 ),
                  { projection( 3, 1 ), projection( 3, 2 ), projection( 3, 3 ) } ) ==
         named_fn( "mu" ) );
  CHECK( compose( named_fn( "neg" ), { named_fn( "neg" ) } ) == named_fn( "id" ) );
  CHECK_THROWS_AS( compose( named_fn( "and" ), { named_fn( "id" ) } ), std::invalid_argument );
  CHECK_THROWS_AS( compose( named_fn( "and" ), { named_fn( "id" ), named_fn( "and" ) } ),
                   std::invalid_argument );
}

TEST_CASE( "star" )
{
  CHECK( star( named_fn( "id" ), named_fn( "and" ) ) == named_fn( "and" ) );
  CHECK( star( named_fn( "neg" ), named_fn( "id" ) ) == named_fn( "neg" ) );
  /* (x1 | x2) & x3, all eight rows */
  bool_fn s = star( named_fn( "and" ), named_fn( "or" ) );
  CHECK( s.arity() == 3 );
  for ( uint32_t a = 0; a < 8; ++a )
  {
    bool x1 = a & 4, x2 = a & 2, x3 = a & 1;
    CHECK( s.bit( a ) == ( ( x1 || x2 ) && x3 ) );
  }
  CHECK( s.to_string() == "3:a8" );
  CHECK_THROWS_AS( star( bool_fn( 9 ), bool_fn( 9 ) ), std::runtime_error );
}

TEST_CASE( "transforms" )
{
  CHECK( transform( named_fn( "nimp" ), transform_mode::inner_negation ).to_string() == "2:2" );
  CHECK( transform( named_fn( "and" ), transform_mode::dual ) == named_fn( "or" ) );
  CHECK( transform( named_fn( "0" ), transform_mode::negation ).to_string() == "1:3" );

  std::mt19937_64 rng( 3 );
  for ( int i = 0; i < 300; ++i )
  {
    auto f = test_util::random_fn( rng, 1 + int( rng() % 5 ) );
    CHECK( inner_negation( inner_negation( f ) ) == f );
    CHECK( dual( dual( f ) ) == f );
    CHECK( dual( f ) == negation( inner_negation( f ) ) );
  }
}

TEST_CASE( "threshold functions" )
{
  CHECK( threshold_fn( 3, 2 ).to_string() == "3:e8" );
  CHECK( threshold_fn( 2, 1 ) == named_fn( "or" ) );
  CHECK( threshold_fn( 3, 4 ).is_zero() );
  CHECK( threshold_fn( 3, 0 ).is_one() );
  CHECK_THROWS_AS( threshold_fn( 3, 5 ), std::invalid_argument );

  for ( int n = 2; n <= 5; ++n )
    for ( int t = 0; t <= n + 1; ++t )
    {
      auto f = threshold_fn( n, t );
      CHECK( is_monotone( f ) );
      if ( t > 1 && t <= n - 1 )
      {
        /* near-unanimity: f(x, ..., y, ..., x) = x for y at any place */
        for ( int pos = 0; pos < n; ++pos )
          for ( int x = 0; x <= 1; ++x )
            for ( int y = 0; y <= 1; ++y )
            {
              uint32_t row = 0;
              for ( int j = 0; j < n; ++j )
                row |= uint32_t( j == pos ? y : x ) << j;
              CHECK( f.bit( row ) == bool( x ) );
            }
      }
    }
}

TEST_CASE( "class membership" )
{
  CHECK( class_member( "clU", named_fn( "mu" ) ) );
  CHECK_FALSE( class_member( "clU3", named_fn( "mu" ) ) ); /* 011 & 101 & 110 = 000 */
  CHECK_FALSE( class_member( "clM", named_fn( "nimp" ) ) );
  CHECK( class_member( "clRefl", named_fn( "plus" ) ) );
  CHECK( class_member( "clS", named_fn( "mu" ) ) );
  CHECK_FALSE( class_member( "clS", named_fn( "and" ) ) );
  CHECK( class_member( "clSmin", named_fn( "and" ) ) );
  CHECK( class_member( "clIc", projection( 3, 2 ) ) );
  CHECK_FALSE( class_member( "clIc", named_fn( "and" ) ) );
  CHECK_THROWS_AS( class_member( "clNoSuch", named_fn( "id" ) ), std::invalid_argument );
}

TEST_CASE( "separating predicates against the subset definition" )
{
  auto oracle_u = []( const bool_fn& f, int k ) {
    auto rows = f.true_rows();
    const uint32_t full = f.rows() - 1u;
    const int t = static_cast<int>( rows.size() );
    /* all subsets of size <= k, by bitmask when feasible */
    for ( uint32_t sub = 0; sub < ( 1u << t ); ++sub )
    {
      if ( std::popcount( sub ) > k )
        continue;
      uint32_t acc = full;
      for ( int i = 0; i < t; ++i )
        if ( ( sub >> i ) & 1u )
          acc &= rows[i];
      if ( acc == 0 && sub != 0 )
        return false;
    }
    return true;
  };
  for ( int k = 2; k <= 3; ++k )
    for ( const auto& f : test_util::all_functions_up_to( 3 ) )
      CHECK( is_one_separating( f, k ) == oracle_u( f, k ) );
  std::mt19937_64 rng( 11 );
  for ( int i = 0; i < 10000; ++i )
  {
    auto f = test_util::random_fn( rng, 4 );
    int k = 2 + int( rng() % 2 );
    CHECK( is_one_separating( f, k ) == oracle_u( f, k ) );
    CHECK( is_zero_sharing( f, k ) == oracle_u( inner_negation( f ), k ) );
    CHECK( is_zero_separating( f, k ) == is_one_separating( dual( f ), k ) );
  }
}
