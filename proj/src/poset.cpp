#include "minmin/poset.hpp"

#include "minmin/named.hpp"
#include "minmin/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace minmin {

namespace {

/* characteristic function of the point set spanned by a set of columns in
   {0,1}^p; column j holds the j-th coordinate of every point */
bool_fn fn_from_column_set( int p, const std::vector<uint32_t>& cols )
{
  const int m = static_cast<int>( cols.size() );
  std::vector<uint32_t> pts;
  for ( int i = 0; i < p; ++i )
  {
    uint32_t row = 0;
    for ( int j = 0; j < m; ++j )
      row |= ( ( cols[j] >> i ) & 1u ) << ( m - 1 - j );
    pts.push_back( row );
  }
  std::sort( pts.begin(), pts.end() );
  pts.erase( std::unique( pts.begin(), pts.end() ), pts.end() );
  return from_true_rows( m, pts );
}

std::vector<bool_fn> candidate_functions( int k )
{
  std::vector<bool_fn> cands;
  cands.push_back( bool_fn( 1 ) ); /* constant 0 */
  for ( int p = 1; p <= k; ++p )
  {
    const uint32_t ncols = 1u << p;
    for ( uint32_t set = 1; set < ( 1u << ncols ); ++set )
    {
      std::vector<uint32_t> cols;
      for ( uint32_t c = 0; c < ncols; ++c )
        if ( ( set >> c ) & 1u )
          cols.push_back( c );
      cands.push_back( fn_from_column_set( p, cols ) );
    }
  }
  return cands;
}

void finish_order( poset& p, int jobs,
                   const std::function<bool( const bool_fn&, const bool_fn& )>& le )
{
  const int n = p.size();
  if ( n > 64 )
    throw std::runtime_error( "capacity: poset has " + std::to_string( n ) + " classes, limit 64" );
  p.below.assign( n, 0 );
  p.above.assign( n, 0 );
  std::vector<uint64_t> rows( n, 0 );
  parallel_for( jobs, n, [&]( size_t i ) {
    uint64_t r = 0;
    for ( int j = 0; j < n; ++j )
      if ( le( p.elements[i], p.elements[j] ) )
        r |= uint64_t( 1 ) << j;
    rows[i] = r;
  } );
  for ( int i = 0; i < n; ++i )
    for ( int j = 0; j < n; ++j )
      if ( ( rows[i] >> j ) & 1u )
      {
        p.below[j] |= uint64_t( 1 ) << i;
        p.above[i] |= uint64_t( 1 ) << j;
      }
  for ( int i = 0; i < n; ++i )
    for ( int j = 0; j < n; ++j )
      if ( i != j && p.leq( i, j ) && p.leq( j, i ) )
        throw std::logic_error( "class deduplication discrepancy: elements " + std::to_string( i ) +
                                " and " + std::to_string( j ) + " are mutually comparable" );
  p.covers.clear();
  for ( int i = 0; i < n; ++i )
    for ( int j = 0; j < n; ++j )
    {
      if ( i == j || !p.leq( i, j ) )
        continue;
      uint64_t between = p.above[i] & p.below[j] & ~( uint64_t( 1 ) << i ) & ~( uint64_t( 1 ) << j );
      if ( between == 0 )
        p.covers.emplace_back( i, j );
    }
  std::sort( p.covers.begin(), p.covers.end() );
}

void attach_labels( poset& p )
{
  p.labels.assign( p.size(), "" );
  for ( const auto& name : classification_names() )
  {
    const bool_fn f = named_fn( name );
    if ( f.true_count() > p.rank )
      continue;
    int idx = p.index_of( f );
    if ( idx < 0 )
      continue;
    if ( !p.labels[idx].empty() )
      throw std::logic_error( "ambiguous label: \"" + name + "\" and \"" + p.labels[idx] +
                              "\" map to one class" );
    p.labels[idx] = name;
  }
}

void build_chi_tables( poset& p )
{
  for ( int n = 1; n <= 4; ++n )
  {
    auto& tab = p.chi_class[n];
    tab.assign( size_t( 1 ) << ( 1 << n ), -1 );
    const uint32_t rows = 1u << n;
    for ( uint32_t mask = 0; mask < ( 1u << rows ); ++mask )
    {
      if ( std::popcount( mask ) > p.rank )
        continue;
      bool_fn f( n );
      for ( uint32_t r = 0; r < rows; ++r )
        if ( ( mask >> r ) & 1u )
          f.set_bit( r, true );
      int idx = p.index_of_canonical( canonical_class( f, p.rank ) );
      if ( idx < 0 )
        throw std::logic_error( "characteristic function missing from the class table" );
      tab[mask] = static_cast<int16_t>( idx );
    }
  }
}

} // namespace

int poset::index_of( const bool_fn& f ) const
{
  if ( f.true_count() > rank )
    return -1;
  if ( !closure && f.arity() <= 4 && !chi_class[f.arity()].empty() )
  {
    /* arity <= 4 tables fit in one word */
    return chi_class[f.arity()][f.word( 0 )];
  }
  return index_of_canonical( canonical_class( f, rank ) );
}

int poset::index_of_canonical( const bool_fn& rep ) const
{
  auto it = key_index.find( rep.to_string() );
  return it == key_index.end() ? -1 : it->second;
}

std::string poset::label_or_key( int i ) const
{
  return labels[i].empty() ? elements[i].to_string() : labels[i];
}

poset enumerate_classes( int k, std::optional<closure_kind> closure, int jobs )
{
  if ( k < 1 || k > 4 )
    throw std::invalid_argument( "rank must lie in 1..4" );

  /* plain classes first */
  poset plain;
  plain.rank = k;
  {
    std::vector<bool_fn> reps;
    std::unordered_map<std::string, int> seen;
    for ( const auto& cand : candidate_functions( k ) )
    {
      bool_fn rep = canonical_class( cand, k );
      auto key = rep.to_string();
      if ( seen.emplace( key, 0 ).second )
        reps.push_back( rep );
    }
    std::sort( reps.begin(), reps.end(), []( const bool_fn& a, const bool_fn& b ) {
      if ( a.true_count() != b.true_count() )
        return a.true_count() < b.true_count();
      return a < b;
    } );
    plain.elements = std::move( reps );
    for ( int i = 0; i < plain.size(); ++i )
      plain.key_index.emplace( plain.elements[i].to_string(), i );
  }
  finish_order( plain, jobs, []( const bool_fn& a, const bool_fn& b ) { return minmin_le( a, b ); } );
  if ( k <= 3 )
    attach_labels( plain );
  else
    plain.labels.assign( plain.size(), "" );
  build_chi_tables( plain );

  if ( !closure )
    return plain;

  /* group plain classes into C-closed blocks */
  const closure_kind c = *closure;
  const int n = plain.size();
  std::vector<std::vector<bool>> cle( n, std::vector<bool>( n ) );
  for ( int i = 0; i < n; ++i )
    for ( int j = 0; j < n; ++j )
      cle[i][j] = minmin_le_closed( plain.elements[i], plain.elements[j], c );

  std::vector<int> block( n, -1 );
  std::vector<std::vector<int>> blocks;
  for ( int i = 0; i < n; ++i )
  {
    if ( block[i] >= 0 )
      continue;
    int b = static_cast<int>( blocks.size() );
    blocks.push_back( { i } );
    block[i] = b;
    for ( int j = i + 1; j < n; ++j )
      if ( block[j] < 0 && cle[i][j] && cle[j][i] )
      {
        block[j] = b;
        blocks.back().push_back( j );
      }
  }

  poset q;
  q.rank = k;
  q.closure = c;
  std::vector<int> rep_of( blocks.size() );
  for ( size_t b = 0; b < blocks.size(); ++b )
    rep_of[b] = *std::min_element( blocks[b].begin(), blocks[b].end(), [&]( int a, int bb ) {
      return plain.elements[a] < plain.elements[bb];
    } );
  /* order blocks like the plain elements: by least representative */
  std::vector<size_t> order( blocks.size() );
  for ( size_t b = 0; b < blocks.size(); ++b )
    order[b] = b;
  std::sort( order.begin(), order.end(), [&]( size_t a, size_t b ) {
    const auto &fa = plain.elements[rep_of[a]], &fb = plain.elements[rep_of[b]];
    if ( fa.true_count() != fb.true_count() )
      return fa.true_count() < fb.true_count();
    return fa < fb;
  } );
  std::vector<int> new_block( blocks.size() );
  for ( size_t pos = 0; pos < order.size(); ++pos )
  {
    q.elements.push_back( plain.elements[rep_of[order[pos]]] );
    new_block[order[pos]] = static_cast<int>( pos );
  }
  for ( int i = 0; i < n; ++i )
    q.key_index.emplace( plain.elements[i].to_string(), new_block[block[i]] );
  q.labels.assign( q.size(), "" );
  for ( int i = 0; i < n; ++i )
    if ( !plain.labels[i].empty() )
    {
      auto& l = q.labels[new_block[block[i]]];
      if ( !l.empty() )
        l += " ";
      l += plain.labels[i];
    }

  finish_order( q, jobs, [c]( const bool_fn& a, const bool_fn& b ) {
    return minmin_le_closed( a, b, c );
  } );
  return q;
}

std::vector<std::pair<int, int>> covers( const poset& p )
{
  return p.covers;
}

labeling label_paper_names( const poset& p )
{
  if ( p.closure )
    throw std::invalid_argument( "paper labels apply to the plain poset" );
  if ( p.rank > 3 )
    throw std::invalid_argument( "paper labels cover ranks 1..3 only" );
  labeling out;
  std::vector<bool> hit( p.size(), false );
  for ( const auto& name : classification_names() )
  {
    const bool_fn f = named_fn( name );
    if ( f.true_count() > p.rank )
      continue;
    int idx = p.index_of( f );
    if ( idx < 0 )
      continue;
    if ( hit[idx] )
      throw std::logic_error( "ambiguous label \"" + name + "\"" );
    hit[idx] = true;
    out.names[idx] = name;
  }
  for ( int i = 0; i < p.size(); ++i )
    if ( !hit[i] )
      out.unlabeled.push_back( i );
  return out;
}

std::vector<int> quotient_map( const poset& plain, const poset& quotient )
{
  if ( plain.rank != quotient.rank || !quotient.closure || plain.closure )
    throw std::invalid_argument( "quotient_map expects a plain poset and a quotient of equal rank" );
  std::vector<int> m( plain.size() );
  for ( int i = 0; i < plain.size(); ++i )
  {
    int q = quotient.index_of_canonical( plain.elements[i] );
    if ( q < 0 )
      throw std::logic_error( "plain class missing from quotient" );
    m[i] = q;
  }
  return m;
}

} // namespace minmin
