#include "minmin/named.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace minmin {

namespace {

named_function make_named( const std::string& name, int arity, const std::vector<std::string>& pts )
{
  std::vector<tuple_point> tp;
  std::string def;
  for ( const auto& s : pts )
  {
    tp.push_back( tuple_point::parse( s ) );
    if ( !def.empty() )
      def += " ";
    def += s;
  }
  if ( def.empty() )
    def = "-";
  return { name, from_true_points( arity, tp ), "true points: " + def };
}

std::vector<named_function> build_functions()
{
  std::vector<named_function> r;
  r.push_back( make_named( "0", 1, {} ) );
  r.push_back( make_named( "id", 1, { "1" } ) );
  r.push_back( make_named( "neg", 1, { "0" } ) );
  r.push_back( make_named( "nimp", 2, { "10" } ) );
  r.push_back( make_named( "1", 1, { "1", "0" } ) );
  r.push_back( make_named( "plus", 2, { "01", "10" } ) );
  r.push_back( make_named( "lambda30", 3, { "001", "010" } ) );
  r.push_back( make_named( "lambda31", 3, { "110", "101" } ) );
  r.push_back( make_named( "or", 2, { "11", "01", "10" } ) );
  r.push_back( make_named( "nand", 2, { "00", "01", "10" } ) );
  r.push_back( make_named( "Gamma0", 3, { "000", "110", "101" } ) );
  r.push_back( make_named( "Gamma1", 3, { "111", "001", "010" } ) );
  r.push_back( make_named( "Gamma01", 4, { "1001", "0111", "0010" } ) );
  r.push_back( make_named( "delta0", 3, { "110", "101", "011" } ) );
  r.push_back( make_named( "delta00", 4, { "1100", "1010", "0110" } ) );
  r.push_back( make_named( "delta01", 4, { "1101", "1011", "0111" } ) );
  r.push_back( make_named( "delta0p", 4, { "1101", "1010", "0110" } ) );
  r.push_back( make_named( "delta00p", 5, { "11010", "10100", "01100" } ) );
  r.push_back( make_named( "lambda10", 5, { "10011", "01101", "00110" } ) );
  r.push_back( make_named( "lambda100", 6, { "100110", "011010", "001100" } ) );
  r.push_back( make_named( "delta1", 3, { "001", "010", "100" } ) );
  r.push_back( make_named( "delta10", 4, { "0010", "0100", "1000" } ) );
  r.push_back( make_named( "delta11", 4, { "0011", "0101", "1001" } ) );
  r.push_back( make_named( "delta1p", 4, { "0010", "0101", "1001" } ) );
  r.push_back( make_named( "delta11p", 5, { "00101", "01011", "10011" } ) );
  r.push_back( make_named( "lambda11", 5, { "10001", "01010", "00111" } ) );
  r.push_back( make_named( "lambda111", 6, { "100011", "010101", "001111" } ) );
  r.push_back( make_named( "lambda2", 6, { "100011", "010101", "001110" } ) );
  r.push_back( make_named( "lambda20", 7, { "1000110", "0101010", "0011100" } ) );
  r.push_back( make_named( "lambda21", 7, { "1000111", "0101011", "0011101" } ) );
  r.push_back( make_named( "A0", 3, { "110", "100", "010" } ) );
  r.push_back( make_named( "A0p", 4, { "1110", "0100", "0010" } ) );
  r.push_back( make_named( "A1", 3, { "001", "011", "101" } ) );
  r.push_back( make_named( "A1p", 4, { "0001", "1011", "1101" } ) );
  /* common connectives beyond the classification table */
  r.push_back( make_named( "and", 2, { "11" } ) );
  r.push_back( make_named( "iff", 2, { "00", "11" } ) );
  r.push_back( make_named( "imp", 2, { "00", "01", "11" } ) );
  r.push_back( make_named( "mu", 3, { "011", "101", "110", "111" } ) );
  r.push_back( make_named( "oplus3", 3, { "001", "010", "100", "111" } ) );
  return r;
}

} // namespace

const std::vector<named_function>& function_registry()
{
  static const std::vector<named_function> reg = build_functions();
  return reg;
}

const named_function& find_function( const std::string& name )
{
  static const std::unordered_map<std::string, size_t> index = [] {
    std::unordered_map<std::string, size_t> m;
    for ( size_t i = 0; i < function_registry().size(); ++i )
      m.emplace( function_registry()[i].name, i );
    return m;
  }();
  auto it = index.find( name );
  if ( it == index.end() )
    throw std::invalid_argument( "unknown function name \"" + name + "\"" );
  return function_registry()[it->second];
}

bool_fn named_fn( const std::string& name )
{
  return find_function( name ).fn;
}

bool_fn parse_fn( const std::string& spec )
{
  if ( spec.find( ':' ) != std::string::npos )
    return bool_fn::parse( spec );
  return named_fn( spec );
}

const std::vector<std::string>& classification_names()
{
  static const std::vector<std::string> names = {
      "0",        "id",       "neg",      "nimp",     "1",        "plus",    "lambda30",
      "lambda31", "or",       "nand",     "Gamma0",   "Gamma1",   "Gamma01", "delta0",
      "delta00",  "delta01",  "delta0p",  "delta00p", "lambda10", "lambda100",
      "delta1",   "delta10",  "delta11",  "delta1p",  "delta11p", "lambda11",
      "lambda111", "lambda2", "lambda20", "lambda21", "A0",       "A0p",     "A1", "A1p" };
  return names;
}

bool is_constant( const bool_fn& f )
{
  return f.is_zero() || f.is_one();
}

bool is_monotone( const bool_fn& f )
{
  for ( uint32_t r = 0; r < f.rows(); ++r )
  {
    if ( !f.bit( r ) )
      continue;
    for ( int j = 0; j < f.arity(); ++j )
    {
      uint32_t b = 1u << j;
      if ( !( r & b ) && !f.bit( r | b ) )
        return false;
    }
  }
  return true;
}

bool is_antitone( const bool_fn& f )
{
  return is_monotone( inner_negation( f ) );
}

bool is_reflexive( const bool_fn& f )
{
  return f == inner_negation( f );
}

bool is_self_dual( const bool_fn& f )
{
  return f == dual( f );
}

bool is_smin( const bool_fn& f )
{
  const uint32_t mask = f.rows() - 1u;
  for ( uint32_t r = 0; r < f.rows(); ++r )
    if ( f.bit( r ) && f.bit( r ^ mask ) )
      return false;
  return true;
}

bool is_smaj( const bool_fn& f )
{
  const uint32_t mask = f.rows() - 1u;
  for ( uint32_t r = 0; r < f.rows(); ++r )
    if ( !f.bit( r ) && !f.bit( r ^ mask ) )
      return false;
  return true;
}

bool is_projection_fn( const bool_fn& f )
{
  for ( int i = 1; i <= f.arity(); ++i )
    if ( f == projection( f.arity(), i ) )
      return true;
  return false;
}

namespace {

/* all size-m subsets of `rows` combine (with op) to something != bad? */
template <typename Op>
bool subsets_avoid( const std::vector<uint32_t>& rows, int m, uint32_t init, uint32_t bad, Op op )
{
  /* DFS with early exit: once the running combination hits `bad`, any
     extension stays bad, so a violating size-m subset exists. */
  struct walker
  {
    const std::vector<uint32_t>& rows;
    int m;
    uint32_t bad;
    Op op;
    bool ok = true;

    void go( size_t next, int chosen, uint32_t acc )
    {
      if ( !ok )
        return;
      if ( acc == bad )
      {
        if ( static_cast<int>( rows.size() - next ) >= m - chosen )
          ok = false;
        return;
      }
      if ( chosen == m )
        return;
      for ( size_t i = next; ok && i + ( m - chosen ) <= rows.size() + 1 && i < rows.size(); ++i )
        go( i + 1, chosen + 1, op( acc, rows[i] ) );
    }
  } w{ rows, m, bad, op };
  w.go( 0, 0, init );
  return w.ok;
}

} // namespace

bool is_one_separating( const bool_fn& f, int k )
{
  auto rows = f.true_rows();
  const int m = std::min<int>( k, static_cast<int>( rows.size() ) );
  if ( m == 0 )
    return true;
  const uint32_t init = f.rows() - 1u;
  return subsets_avoid( rows, m, init, 0u, []( uint32_t a, uint32_t b ) { return a & b; } );
}

bool is_zero_sharing( const bool_fn& f, int k )
{
  auto rows = f.true_rows();
  const int m = std::min<int>( k, static_cast<int>( rows.size() ) );
  if ( m == 0 )
    return true;
  const uint32_t full = f.rows() - 1u;
  return subsets_avoid( rows, m, 0u, full, []( uint32_t a, uint32_t b ) { return a | b; } );
}

bool is_zero_separating( const bool_fn& f, int k )
{
  auto rows = f.false_rows();
  const int m = std::min<int>( k, static_cast<int>( rows.size() ) );
  if ( m == 0 )
    return true;
  const uint32_t full = f.rows() - 1u;
  return subsets_avoid( rows, m, 0u, full, []( uint32_t a, uint32_t b ) { return a | b; } );
}

namespace {

using pred = std::function<bool( const bool_fn& )>;

bool v0( const bool_fn& f ) { return f.value_at_zero(); }
bool v1( const bool_fn& f ) { return f.value_at_one(); }
bool in_oi( const bool_fn& f ) { return !v0( f ) && v1( f ); }
bool in_io( const bool_fn& f ) { return v0( f ) && !v1( f ); }
bool in_oo( const bool_fn& f ) { return !v0( f ) && !v1( f ); }
bool in_ii( const bool_fn& f ) { return v0( f ) && v1( f ); }

std::vector<named_class> build_classes()
{
  std::vector<named_class> r;
  auto add = [&]( const std::string& name, const std::string& def, pred p, const std::string& pair ) {
    r.push_back( { name, def, std::move( p ), pair } );
  };

  add( "clAll", "all functions", []( const bool_fn& ) { return true; }, "clAll" );
  add( "clEiio", "f(0) <= f(1)", []( const bool_fn& f ) { return !v0( f ) || v1( f ); }, "clEioi" );
  add( "clEioi", "f(0) >= f(1)", []( const bool_fn& f ) { return v0( f ) || !v1( f ); }, "clEiio" );
  add( "clEiii", "not (f(0) = f(1) = 1)", []( const bool_fn& f ) { return !in_ii( f ); }, "clEiii" );
  add( "clEq", "f(0) = f(1)", []( const bool_fn& f ) { return v0( f ) == v1( f ); }, "clEq" );

  add( "clOX", "f(0) = 0", []( const bool_fn& f ) { return !v0( f ); }, "clXO" );
  add( "clXO", "f(1) = 0", []( const bool_fn& f ) { return !v1( f ); }, "clOX" );
  add( "clIX", "f(0) = 1", v0, "clXI" );
  add( "clXI", "f(1) = 1", v1, "clIX" );
  add( "clOO", "f(0) = f(1) = 0", in_oo, "clOO" );
  add( "clII", "f(0) = f(1) = 1", in_ii, "clII" );
  add( "clOI", "f(0) = 0, f(1) = 1", in_oi, "clIO" );
  add( "clIO", "f(0) = 1, f(1) = 0", in_io, "clOI" );

  add( "clOXC", "OX or constant", []( const bool_fn& f ) { return !v0( f ) || is_constant( f ); },
       "clXOC" );
  add( "clXOC", "XO or constant", []( const bool_fn& f ) { return !v1( f ) || is_constant( f ); },
       "clOXC" );
  add( "clIXC", "IX or constant", []( const bool_fn& f ) { return v0( f ) || is_constant( f ); },
       "clXIC" );
  add( "clXIC", "XI or constant", []( const bool_fn& f ) { return v1( f ) || is_constant( f ); },
       "clIXC" );
  add( "clOOC", "OO or constant", []( const bool_fn& f ) { return in_oo( f ) || is_constant( f ); },
       "clOOC" );
  add( "clIIC", "II or constant", []( const bool_fn& f ) { return in_ii( f ) || is_constant( f ); },
       "clIIC" );
  add( "clOIC", "OI or constant", []( const bool_fn& f ) { return in_oi( f ) || is_constant( f ); },
       "clIOC" );
  add( "clIOC", "IO or constant", []( const bool_fn& f ) { return in_io( f ) || is_constant( f ); },
       "clOIC" );
  add( "clOICO", "OI or constant 0", []( const bool_fn& f ) { return in_oi( f ) || f.is_zero(); },
       "clIOCO" );
  add( "clOICI", "OI or constant 1", []( const bool_fn& f ) { return in_oi( f ) || f.is_one(); },
       "clIOCI" );
  add( "clIOCO", "IO or constant 0", []( const bool_fn& f ) { return in_io( f ) || f.is_zero(); },
       "clOICO" );
  add( "clIOCI", "IO or constant 1", []( const bool_fn& f ) { return in_io( f ) || f.is_one(); },
       "clOICI" );

  add( "clSmin", "minorants of self-dual functions", is_smin, "clSmin" );
  add( "clSmaj", "majorants of self-dual functions", is_smaj, "clSmaj" );
  add( "clSminOX", "Smin and f(0) = 0",
       []( const bool_fn& f ) { return is_smin( f ) && !v0( f ); }, "clSminXO" );
  add( "clSminXO", "Smin and f(1) = 0",
       []( const bool_fn& f ) { return is_smin( f ) && !v1( f ); }, "clSminOX" );
  add( "clSminOO", "Smin and OO", []( const bool_fn& f ) { return is_smin( f ) && in_oo( f ); },
       "clSminOO" );
  add( "clSminOI", "Smin and OI", []( const bool_fn& f ) { return is_smin( f ) && in_oi( f ); },
       "clSminIO" );
  add( "clSminIO", "Smin and IO", []( const bool_fn& f ) { return is_smin( f ) && in_io( f ); },
       "clSminOI" );
  add( "clSminOICO", "Smin and (OI or constant 0)",
       []( const bool_fn& f ) { return is_smin( f ) && ( in_oi( f ) || f.is_zero() ); },
       "clSminIOCO" );
  add( "clSminIOCO", "Smin and (IO or constant 0)",
       []( const bool_fn& f ) { return is_smin( f ) && ( in_io( f ) || f.is_zero() ); },
       "clSminOICO" );

  add( "clM", "monotone", is_monotone, "clMneg" );
  add( "clMneg", "antitone", is_antitone, "clM" );
  add( "clMo", "monotone and f(0) = 0",
       []( const bool_fn& f ) { return is_monotone( f ) && !v0( f ); }, "clMineg" );
  add( "clMineg", "antitone and f(1) = 0",
       []( const bool_fn& f ) { return is_antitone( f ) && !v1( f ); }, "clMo" );
  add( "clMi", "monotone and f(1) = 1",
       []( const bool_fn& f ) { return is_monotone( f ) && v1( f ); }, "clMoneg" );
  add( "clMoneg", "antitone and f(0) = 1",
       []( const bool_fn& f ) { return is_antitone( f ) && v0( f ); }, "clMi" );
  add( "clMc", "monotone and OI",
       []( const bool_fn& f ) { return is_monotone( f ) && in_oi( f ); }, "clMcneg" );
  add( "clMcneg", "antitone and IO",
       []( const bool_fn& f ) { return is_antitone( f ) && in_io( f ); }, "clMc" );

  add( "clU", "1-separating of rank 2",
       []( const bool_fn& f ) { return is_one_separating( f, 2 ); }, "clWneg" );
  add( "clWneg", "every pair of true points shares a 0",
       []( const bool_fn& f ) { return is_zero_sharing( f, 2 ); }, "clU" );
  add( "clW", "0-separating of rank 2",
       []( const bool_fn& f ) { return is_zero_separating( f, 2 ); }, "" );
  add( "clTcU", "U and OI",
       []( const bool_fn& f ) { return is_one_separating( f, 2 ) && in_oi( f ); }, "clTcWneg" );
  add( "clTcWneg", "Wneg and IO",
       []( const bool_fn& f ) { return is_zero_sharing( f, 2 ) && in_io( f ); }, "clTcU" );
  add( "clTcUCO", "TcU or constant 0",
       []( const bool_fn& f ) { return ( is_one_separating( f, 2 ) && in_oi( f ) ) || f.is_zero(); },
       "clTcWnegCO" );
  add( "clTcWnegCO", "TcWneg or constant 0",
       []( const bool_fn& f ) { return ( is_zero_sharing( f, 2 ) && in_io( f ) ) || f.is_zero(); },
       "clTcUCO" );
  add( "clMU", "monotone and U",
       []( const bool_fn& f ) { return is_monotone( f ) && is_one_separating( f, 2 ); }, "clMWneg" );
  add( "clMWneg", "antitone and Wneg",
       []( const bool_fn& f ) { return is_antitone( f ) && is_zero_sharing( f, 2 ); }, "clMU" );
  add( "clMcU", "monotone, OI and U",
       []( const bool_fn& f )
       { return is_monotone( f ) && in_oi( f ) && is_one_separating( f, 2 ); },
       "clMcWneg" );
  add( "clMcWneg", "antitone, IO and Wneg",
       []( const bool_fn& f )
       { return is_antitone( f ) && in_io( f ) && is_zero_sharing( f, 2 ); },
       "clMcU" );
  add( "clUOO", "U and OO",
       []( const bool_fn& f ) { return is_one_separating( f, 2 ) && in_oo( f ); }, "clWnegOO" );
  add( "clWnegOO", "Wneg and OO",
       []( const bool_fn& f ) { return is_zero_sharing( f, 2 ) && in_oo( f ); }, "clUOO" );
  add( "clUWneg", "U and Wneg",
       []( const bool_fn& f ) { return is_one_separating( f, 2 ) && is_zero_sharing( f, 2 ); },
       "clUWneg" );
  add( "clTcW", "W and OI",
       []( const bool_fn& f ) { return is_zero_separating( f, 2 ) && in_oi( f ); }, "" );
  add( "clMW", "monotone and W",
       []( const bool_fn& f ) { return is_monotone( f ) && is_zero_separating( f, 2 ); }, "" );
  add( "clMcW", "monotone, OI and W",
       []( const bool_fn& f )
       { return is_monotone( f ) && in_oi( f ) && is_zero_separating( f, 2 ); },
       "" );

  /* rank-3 variants of the separating families */
  add( "clU3", "1-separating of rank 3",
       []( const bool_fn& f ) { return is_one_separating( f, 3 ); }, "clWneg3" );
  add( "clWneg3", "every <= 3 true points share a 0",
       []( const bool_fn& f ) { return is_zero_sharing( f, 3 ); }, "clU3" );
  add( "clW3", "0-separating of rank 3",
       []( const bool_fn& f ) { return is_zero_separating( f, 3 ); }, "" );
  add( "clTcU3", "U3 and OI",
       []( const bool_fn& f ) { return is_one_separating( f, 3 ) && in_oi( f ); }, "clTcWneg3" );
  add( "clTcWneg3", "Wneg3 and IO",
       []( const bool_fn& f ) { return is_zero_sharing( f, 3 ) && in_io( f ); }, "clTcU3" );
  add( "clMU3", "monotone and U3",
       []( const bool_fn& f ) { return is_monotone( f ) && is_one_separating( f, 3 ); }, "clMWneg3" );
  add( "clMWneg3", "antitone and Wneg3",
       []( const bool_fn& f ) { return is_antitone( f ) && is_zero_sharing( f, 3 ); }, "clMU3" );
  add( "clMcU3", "monotone, OI and U3",
       []( const bool_fn& f )
       { return is_monotone( f ) && in_oi( f ) && is_one_separating( f, 3 ); },
       "clMcWneg3" );
  add( "clMcWneg3", "antitone, IO and Wneg3",
       []( const bool_fn& f )
       { return is_antitone( f ) && in_io( f ) && is_zero_sharing( f, 3 ); },
       "clMcU3" );

  add( "clS", "self-dual", is_self_dual, "clS" );
  add( "clSc", "self-dual and OI",
       []( const bool_fn& f ) { return is_self_dual( f ) && in_oi( f ); }, "" );
  add( "clSM", "self-dual and monotone",
       []( const bool_fn& f ) { return is_self_dual( f ) && is_monotone( f ); }, "clSM" );

  add( "clRefl", "reflexive (f(a) = f(~a))", is_reflexive, "clRefl" );
  add( "clReflOO", "reflexive and OO",
       []( const bool_fn& f ) { return is_reflexive( f ) && in_oo( f ); }, "clReflOO" );
  add( "clReflII", "reflexive and II",
       []( const bool_fn& f ) { return is_reflexive( f ) && in_ii( f ); }, "clReflII" );
  add( "clReflOOC", "ReflOO or constant",
       []( const bool_fn& f ) { return ( is_reflexive( f ) && in_oo( f ) ) || is_constant( f ); },
       "clReflOOC" );
  add( "clReflIIC", "ReflII or constant",
       []( const bool_fn& f ) { return ( is_reflexive( f ) && in_ii( f ) ) || is_constant( f ); },
       "clReflIIC" );

  add( "clVak", "constant functions", is_constant, "clVak" );
  add( "clVako", "constant 0 functions", []( const bool_fn& f ) { return f.is_zero(); }, "clVako" );
  add( "clVaki", "constant 1 functions", []( const bool_fn& f ) { return f.is_one(); }, "clVaki" );
  add( "clEmpty", "the empty class", []( const bool_fn& ) { return false; }, "clEmpty" );
  add( "clIc", "projections", is_projection_fn, "clIc" );

  return r;
}

} // namespace

const std::vector<named_class>& class_registry()
{
  static const std::vector<named_class> reg = build_classes();
  return reg;
}

const named_class& find_class( const std::string& name )
{
  static const std::unordered_map<std::string, size_t> index = [] {
    std::unordered_map<std::string, size_t> m;
    for ( size_t i = 0; i < class_registry().size(); ++i )
      m.emplace( class_registry()[i].name, i );
    return m;
  }();
  auto it = index.find( name );
  if ( it == index.end() )
    throw std::invalid_argument( "unknown class name \"" + name + "\"" );
  return class_registry()[it->second];
}

bool class_member( const std::string& name, const bool_fn& f )
{
  return find_class( name ).member( f );
}

} // namespace minmin
