#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace minmin {

/* run fn(i) for i in [0, n); results must be written to preassigned slots so
   the outcome does not depend on scheduling */
inline void parallel_for( int jobs, size_t n, const std::function<void( size_t )>& fn )
{
  jobs = std::max( 1, jobs );
  if ( jobs == 1 || n < 2 )
  {
    for ( size_t i = 0; i < n; ++i )
      fn( i );
    return;
  }
  const size_t workers = std::min<size_t>( jobs, n );
  std::vector<std::thread> pool;
  pool.reserve( workers );
  for ( size_t w = 0; w < workers; ++w )
    pool.emplace_back( [&, w] {
      for ( size_t i = w; i < n; i += workers )
        fn( i );
    } );
  for ( auto& t : pool )
    t.join();
}

} // namespace minmin
