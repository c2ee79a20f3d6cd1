#pragma once

#include "minmin/bool_fn.hpp"

#include <functional>
#include <string>
#include <vector>

namespace minmin {

/*! \brief Registry entry for a named Boolean function (the functions of the
 * paper's small-function table plus the usual binary/ternary connectives). */
struct named_function
{
  std::string name;
  bool_fn fn;
  std::string definition; /* listed true points */
};

const std::vector<named_function>& function_registry();

/* throws std::invalid_argument for unknown names */
const named_function& find_function( const std::string& name );
bool_fn named_fn( const std::string& name );

/* accepts a registry name or a "n:hex" truth table */
bool_fn parse_fn( const std::string& spec );

/* the 34 names of the <= 3-true-point classification table, in table order */
const std::vector<std::string>& classification_names();

/*! \brief Registry entry for a named class of Boolean functions.
 *
 * Classes are built from a base property (monotone, reflexive, 1-separating
 * of a rank, ...), a constraint on the value pair (f(0...0), f(1...1)), and
 * optional unions with the constant classes.
 */
struct named_class
{
  std::string name;
  std::string definition;
  std::function<bool( const bool_fn& )> member;
  std::string inner_pair; /* name of the image under inner negation */
};

const std::vector<named_class>& class_registry();
const named_class& find_class( const std::string& name );
bool class_member( const std::string& name, const bool_fn& f );

/* elementary properties used by the class registry */
bool is_constant( const bool_fn& f );
bool is_monotone( const bool_fn& f );
bool is_antitone( const bool_fn& f );
bool is_reflexive( const bool_fn& f );
bool is_self_dual( const bool_fn& f );
bool is_smin( const bool_fn& f ); /* f(a) & f(~a) = 0 everywhere */
bool is_smaj( const bool_fn& f ); /* f(a) | f(~a) = 1 everywhere */
bool is_projection_fn( const bool_fn& f );

/* 1-separating of rank k: every <= k true points share a coordinate equal to 1 */
bool is_one_separating( const bool_fn& f, int k );
/* (U^k)^n: every <= k true points share a coordinate equal to 0 */
bool is_zero_sharing( const bool_fn& f, int k );
/* 0-separating of rank k: every <= k false points leave some coordinate 0 */
bool is_zero_separating( const bool_fn& f, int k );

} // namespace minmin
