#include "minmin/bool_fn.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace minmin {

namespace {

void check_arity( int n )
{
  if ( n < 1 || n > max_arity )
    throw std::invalid_argument( "arity must be between 1 and " + std::to_string( max_arity ) +
                                 ", got " + std::to_string( n ) );
}

} // namespace

bool_fn::bool_fn( int arity ) : arity_( arity )
{
  check_arity( arity );
  words_.assign( ( rows() + 63u ) / 64u, 0u );
}

void bool_fn::set_bit( uint32_t row, bool v )
{
  assert( row < rows() );
  if ( v )
    words_[row >> 6] |= uint64_t( 1 ) << ( row & 63u );
  else
    words_[row >> 6] &= ~( uint64_t( 1 ) << ( row & 63u ) );
}

int bool_fn::true_count() const
{
  int c = 0;
  for ( auto w : words_ )
    c += std::popcount( w );
  return c;
}

std::vector<uint32_t> bool_fn::true_rows() const
{
  std::vector<uint32_t> out;
  for ( uint32_t r = 0; r < rows(); ++r )
    if ( bit( r ) )
      out.push_back( r );
  return out;
}

std::vector<uint32_t> bool_fn::false_rows() const
{
  std::vector<uint32_t> out;
  for ( uint32_t r = 0; r < rows(); ++r )
    if ( !bit( r ) )
      out.push_back( r );
  return out;
}

bool bool_fn::is_zero() const
{
  for ( auto w : words_ )
    if ( w )
      return false;
  return true;
}

bool bool_fn::is_one() const
{
  return true_count() == static_cast<int>( rows() );
}

void bool_fn::clear_padding()
{
  if ( rows() < 64u )
    words_[0] &= ( uint64_t( 1 ) << rows() ) - 1u;
}

bool bool_fn::operator<( const bool_fn& o ) const
{
  if ( arity_ != o.arity_ )
    return arity_ < o.arity_;
  for ( size_t i = words_.size(); i-- > 0; )
    if ( words_[i] != o.words_[i] )
      return words_[i] < o.words_[i];
  return false;
}

size_t bool_fn_hash::operator()( const bool_fn& f ) const
{
  uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>( f.arity() );
  for ( auto w : f.words() )
  {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>( h );
}

bool_fn bool_fn::parse( const std::string& text )
{
  auto colon = text.find( ':' );
  if ( colon == std::string::npos )
    throw std::invalid_argument( "malformed truth table \"" + text + "\": expected \"<arity>:<hex>\"" );
  int n = 0;
  try
  {
    size_t used = 0;
    n = std::stoi( text.substr( 0, colon ), &used );
    if ( used != colon )
      throw std::invalid_argument( "" );
  }
  catch ( const std::exception& )
  {
    throw std::invalid_argument( "malformed truth table \"" + text + "\": bad arity field" );
  }
  check_arity( n );

  bool_fn f( n );
  const std::string hex = text.substr( colon + 1 );
  if ( hex.empty() )
    throw std::invalid_argument( "malformed truth table \"" + text + "\": empty hex field" );
  uint32_t pos = 0; /* bit position of the next (least significant) digit */
  for ( size_t i = hex.size(); i-- > 0; )
  {
    char c = hex[i];
    int digit;
    if ( c >= '0' && c <= '9' )
      digit = c - '0';
    else if ( c >= 'a' && c <= 'f' )
      digit = 10 + ( c - 'a' );
    else if ( c >= 'A' && c <= 'F' )
      digit = 10 + ( c - 'A' );
    else
      throw std::invalid_argument( "malformed truth table \"" + text + "\": bad hex digit" );
    if ( digit != 0 )
    {
      if ( pos + 4 > f.rows() )
      {
        /* allow digits that only use bits below 2^n */
        for ( int b = 0; b < 4; ++b )
          if ( ( digit >> b ) & 1 )
          {
            if ( pos + b >= f.rows() )
              throw std::invalid_argument( "malformed truth table \"" + text + "\": value exceeds 2^2^n" );
            f.set_bit( pos + b, true );
          }
      }
      else
      {
        for ( int b = 0; b < 4; ++b )
          if ( ( digit >> b ) & 1 )
            f.set_bit( pos + b, true );
      }
    }
    pos += 4;
  }
  return f;
}

std::string bool_fn::to_string() const
{
  std::string hex;
  const uint32_t digits = ( rows() + 3u ) / 4u;
  for ( uint32_t d = 0; d < digits; ++d )
  {
    int v = 0;
    for ( int b = 0; b < 4; ++b )
    {
      uint32_t row = 4u * d + b;
      if ( row < rows() && bit( row ) )
        v |= 1 << b;
    }
    hex.push_back( "0123456789abcdef"[v] );
  }
  while ( hex.size() > 1 && hex.back() == '0' )
    hex.pop_back();
  std::reverse( hex.begin(), hex.end() );
  return std::to_string( arity_ ) + ":" + hex;
}

tuple_point tuple_point::parse( const std::string& bits )
{
  if ( bits.empty() || bits.size() > static_cast<size_t>( max_arity ) )
    throw std::invalid_argument( "bad tuple \"" + bits + "\"" );
  tuple_point p( static_cast<int>( bits.size() ), 0 );
  for ( char c : bits )
  {
    if ( c != '0' && c != '1' )
      throw std::invalid_argument( "bad tuple \"" + bits + "\"" );
    p.index = ( p.index << 1 ) | uint32_t( c - '0' );
  }
  return p;
}

std::string tuple_point::to_string() const
{
  std::string s( arity, '0' );
  for ( int j = 1; j <= arity; ++j )
    if ( coord( j ) )
      s[j - 1] = '1';
  return s;
}

int tuple_point::weight() const
{
  return std::popcount( index );
}

int weight_of_row( uint32_t row )
{
  return std::popcount( row );
}

minor_map::minor_map( int m, int n, std::vector<int> sigma )
    : source_arity( m ), target_arity( n ), map( std::move( sigma ) )
{
  check_arity( m );
  check_arity( n );
  if ( static_cast<int>( map.size() ) != m )
    throw std::invalid_argument( "minor map must assign every source argument" );
  for ( int v : map )
    if ( v < 1 || v > n )
      throw std::invalid_argument( "minor map value out of range [1, n]" );
}

minor_map minor_map::identity( int n )
{
  std::vector<int> sigma( n );
  for ( int j = 0; j < n; ++j )
    sigma[j] = j + 1;
  return { n, n, std::move( sigma ) };
}

bool_fn from_true_points( int arity, const std::vector<tuple_point>& pts )
{
  bool_fn f( arity );
  for ( const auto& p : pts )
  {
    if ( p.arity != arity )
      throw std::invalid_argument( "true point arity mismatch: expected " + std::to_string( arity ) +
                                   ", got " + std::to_string( p.arity ) );
    f.set_bit( p.index, true );
  }
  return f;
}

bool_fn from_true_rows( int arity, const std::vector<uint32_t>& rows )
{
  bool_fn f( arity );
  for ( uint32_t r : rows )
  {
    assert( r < f.rows() );
    f.set_bit( r, true );
  }
  return f;
}

bool eval( const bool_fn& f, const tuple_point& a )
{
  if ( a.arity != f.arity() )
    throw std::invalid_argument( "evaluation point arity mismatch" );
  return f.bit( a.index );
}

bool_fn minor_apply( const bool_fn& g, const minor_map& sigma )
{
  if ( sigma.source_arity != g.arity() )
    throw std::invalid_argument( "minor map source arity does not match function arity" );
  const int m = sigma.source_arity, n = sigma.target_arity;
  bool_fn f( n );
  for ( uint32_t a = 0; a < f.rows(); ++a )
  {
    uint32_t b = 0;
    for ( int j = 1; j <= m; ++j )
    {
      uint32_t bitv = ( a >> ( n - sigma.map[j - 1] ) ) & 1u;
      b |= bitv << ( m - j );
    }
    if ( g.bit( b ) )
      f.set_bit( a, true );
  }
  return f;
}

bool_fn compose( const bool_fn& f, const std::vector<bool_fn>& gs )
{
  const int n = f.arity();
  if ( static_cast<int>( gs.size() ) != n )
    throw std::invalid_argument( "compose: outer arity " + std::to_string( n ) + " but " +
                                 std::to_string( gs.size() ) + " inner functions" );
  const int m = gs.front().arity();
  for ( const auto& g : gs )
    if ( g.arity() != m )
      throw std::invalid_argument( "compose: inner functions must share one arity" );
  bool_fn h( m );
  for ( uint32_t a = 0; a < h.rows(); ++a )
  {
    uint32_t x = 0;
    for ( int i = 1; i <= n; ++i )
      x |= uint32_t( gs[i - 1].bit( a ) ) << ( n - i );
    if ( f.bit( x ) )
      h.set_bit( a, true );
  }
  return h;
}

bool_fn star( const bool_fn& f, const bool_fn& g )
{
  const int n = f.arity(), m = g.arity();
  const int r = m + n - 1;
  if ( r > max_arity )
    throw std::runtime_error( "capacity: star result arity " + std::to_string( r ) + " exceeds " +
                              std::to_string( max_arity ) );
  bool_fn h( r );
  const uint32_t tail_mask = ( n > 1 ) ? ( ( 1u << ( n - 1 ) ) - 1u ) : 0u;
  for ( uint32_t a = 0; a < h.rows(); ++a )
  {
    uint32_t gv = g.bit( a >> ( n - 1 ) ) ? 1u : 0u;
    uint32_t fi = ( gv << ( n - 1 ) ) | ( a & tail_mask );
    if ( f.bit( fi ) )
      h.set_bit( a, true );
  }
  return h;
}

bool_fn negation( const bool_fn& f )
{
  bool_fn g = f;
  for ( size_t i = 0; i < g.word_count(); ++i )
    g.word( i ) = ~g.word( i );
  g.clear_padding();
  return g;
}

bool_fn inner_negation( const bool_fn& f )
{
  bool_fn g( f.arity() );
  const uint32_t mask = f.rows() - 1u;
  for ( uint32_t r = 0; r < f.rows(); ++r )
    if ( f.bit( r ^ mask ) )
      g.set_bit( r, true );
  return g;
}

bool_fn dual( const bool_fn& f )
{
  return negation( inner_negation( f ) );
}

bool_fn transform( const bool_fn& f, transform_mode mode )
{
  switch ( mode )
  {
  case transform_mode::negation:
    return negation( f );
  case transform_mode::inner_negation:
    return inner_negation( f );
  default:
    return dual( f );
  }
}

bool_fn threshold_fn( int arity, int t )
{
  check_arity( arity );
  if ( t < 0 || t > arity + 1 )
    throw std::invalid_argument( "threshold must lie in [0, n+1]" );
  bool_fn f( arity );
  for ( uint32_t r = 0; r < f.rows(); ++r )
    if ( std::popcount( r ) >= t )
      f.set_bit( r, true );
  return f;
}

bool_fn constant_fn( int arity, bool value )
{
  bool_fn f( arity );
  if ( value )
  {
    for ( size_t i = 0; i < f.word_count(); ++i )
      f.word( i ) = ~uint64_t( 0 );
    f.clear_padding();
  }
  return f;
}

bool_fn projection( int arity, int i )
{
  check_arity( arity );
  if ( i < 1 || i > arity )
    throw std::invalid_argument( "projection index out of range" );
  bool_fn f( arity );
  for ( uint32_t r = 0; r < f.rows(); ++r )
    if ( ( r >> ( arity - i ) ) & 1u )
      f.set_bit( r, true );
  return f;
}

} // namespace minmin
