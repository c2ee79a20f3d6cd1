#pragma once

#include "minmin/bool_fn.hpp"

#include <random>
#include <vector>

namespace test_util {

inline minmin::bool_fn random_fn( std::mt19937_64& rng, int arity )
{
  minmin::bool_fn f( arity );
  for ( uint32_t r = 0; r < f.rows(); ++r )
    if ( rng() & 1u )
      f.set_bit( r, true );
  return f;
}

/* every function of the given arity */
inline std::vector<minmin::bool_fn> all_functions( int arity )
{
  std::vector<minmin::bool_fn> out;
  const uint32_t rows = 1u << arity;
  for ( uint64_t tab = 0; tab < ( uint64_t( 1 ) << rows ); ++tab )
  {
    minmin::bool_fn f( arity );
    for ( uint32_t r = 0; r < rows; ++r )
      if ( ( tab >> r ) & 1u )
        f.set_bit( r, true );
    out.push_back( f );
  }
  return out;
}

inline std::vector<minmin::bool_fn> all_functions_up_to( int arity )
{
  std::vector<minmin::bool_fn> out;
  for ( int n = 1; n <= arity; ++n )
    for ( auto& f : all_functions( n ) )
      out.push_back( f );
  return out;
}

} // namespace test_util
