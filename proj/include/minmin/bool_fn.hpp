#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minmin {

inline constexpr int max_arity = 16;

/*! \brief Boolean function of several arguments as an explicit truth table.
 *
 * Row i holds f(a_1, ..., a_n) where i is the tuple (a_1, ..., a_n) read as
 * a big-endian binary number (a_1 is the most significant bit), matching the
 * usual 000, 001, ..., 111 ordering of operation tables.  The text form is
 * "<arity>:<hex>", where the hex number has bit i (value 2^i) set iff row i
 * is true; e.g. id = "1:2", and = "2:8", or = "2:e", majority = "3:e8".
 */
class bool_fn
{
public:
  bool_fn() : bool_fn( 1 ) {}
  explicit bool_fn( int arity );

  /* throws std::invalid_argument on malformed input */
  static bool_fn parse( const std::string& text );
  std::string to_string() const;

  int arity() const { return arity_; }
  uint32_t rows() const { return 1u << arity_; }

  bool bit( uint32_t row ) const { return ( words_[row >> 6] >> ( row & 63u ) ) & 1u; }
  void set_bit( uint32_t row, bool v );

  int true_count() const;
  std::vector<uint32_t> true_rows() const;
  std::vector<uint32_t> false_rows() const;
  bool is_zero() const;
  bool is_one() const;
  bool value_at_zero() const { return bit( 0 ); }
  bool value_at_one() const { return bit( rows() - 1 ); }

  const std::vector<uint64_t>& words() const { return words_; }
  uint64_t& word( size_t i ) { return words_[i]; }
  uint64_t word( size_t i ) const { return words_[i]; }
  size_t word_count() const { return words_.size(); }
  void clear_padding();

  bool operator==( const bool_fn& o ) const { return arity_ == o.arity_ && words_ == o.words_; }
  bool operator!=( const bool_fn& o ) const { return !( *this == o ); }
  /* total order: arity first, then the table as a big integer */
  bool operator<( const bool_fn& o ) const;

private:
  int arity_;
  std::vector<uint64_t> words_;
};

struct bool_fn_hash
{
  size_t operator()( const bool_fn& f ) const;
};

/*! \brief A point of {0,1}^n; `index` is its big-endian row index. */
struct tuple_point
{
  int arity = 1;
  uint32_t index = 0;

  tuple_point() = default;
  tuple_point( int n, uint32_t i ) : arity( n ), index( i ) {}

  /* parse a bit string such as "011" (a_1 first) */
  static tuple_point parse( const std::string& bits );
  std::string to_string() const;

  bool coord( int j ) const { return ( index >> ( arity - j ) ) & 1u; } /* j in 1..n */
  tuple_point complement() const { return { arity, ~index & ( ( 1u << arity ) - 1u ) }; }
  int weight() const;

  bool operator==( const tuple_point& o ) const { return arity == o.arity && index == o.index; }
};

/*! \brief Minor formation map sigma : [source_arity] -> [target_arity] (1-based). */
struct minor_map
{
  int source_arity;
  int target_arity;
  std::vector<int> map; /* map[j-1] = sigma(j) */

  minor_map( int m, int n, std::vector<int> sigma );
  static minor_map identity( int n );
};

/* chi_T: the n-ary function whose true points are exactly the given set */
bool_fn from_true_points( int arity, const std::vector<tuple_point>& pts );
bool_fn from_true_rows( int arity, const std::vector<uint32_t>& rows );

bool eval( const bool_fn& f, const tuple_point& a );

/* g_sigma with g_sigma(a) = g(a sigma), (a sigma)_j = a_sigma(j) */
bool_fn minor_apply( const bool_fn& g, const minor_map& sigma );

/* f(g_1, ..., g_n); all g_i share one arity, |gs| = arity(f) */
bool_fn compose( const bool_fn& f, const std::vector<bool_fn>& gs );

/* (f * g)(a_1..a_{m+n-1}) = f(g(a_1..a_m), a_{m+1}, ..., a_{m+n-1}) */
bool_fn star( const bool_fn& f, const bool_fn& g );

enum class transform_mode
{
  negation,
  inner_negation,
  dual
};

bool_fn transform( const bool_fn& f, transform_mode mode );
bool_fn negation( const bool_fn& f );
bool_fn inner_negation( const bool_fn& f );
bool_fn dual( const bool_fn& f );

/* th^n_t: true iff at least t arguments are 1 (0 <= t <= n+1) */
bool_fn threshold_fn( int arity, int t );

bool_fn constant_fn( int arity, bool value );
bool_fn projection( int arity, int i ); /* pr^n_i, 1-based */

int weight_of_row( uint32_t row );

} // namespace minmin
