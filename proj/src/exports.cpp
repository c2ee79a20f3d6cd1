#include "minmin/exports.hpp"

#include "minmin/named.hpp"



#include <algorithm>
#include <bit>
#include <sstream>

namespace minmin {

using nlohmann::json;

json poset_to_json( const poset& p )
{
  json elements = json::array();
  for ( int i = 0; i < p.size(); ++i )
  {
    json e;
    e["id"] = i;
    e["table"] = p.elements[i].to_string();
    e["truePoints"] = p.elements[i].true_count();
    if ( !p.labels[i].empty() )
      e["label"] = p.labels[i];
    elements.push_back( e );
  }
  json covers = json::array();
  for ( auto [a, b] : p.covers )
    covers.push_back( json::array( { a, b } ) );
  json out;
  out["k"] = p.rank;
  out["closure"] = p.closure ? json( closure_name( *p.closure ) ) : json( nullptr );
  out["elements"] = elements;
  out["covers"] = covers;
  return out;
}

json ideal_to_json( const ideal& th )
{
  json out;
  out["elements"] = th.element_ids();
  out["maxima"] = th.maxima();
  json labels = json::array();
  for ( int e : th.maxima() )
    labels.push_back( th.p->label_or_key( e ) );
  out["maximaLabels"] = labels;
  return out;
}

json ideals_to_json( const poset& p, const std::vector<ideal>& ideals )
{
  json list = json::array();
  for ( size_t i = 0; i < ideals.size(); ++i )
  {
    json e = ideal_to_json( ideals[i] );
    e["id"] = i;
    list.push_back( e );
  }
  json out;
  out["k"] = p.rank;
  out["closure"] = p.closure ? json( closure_name( *p.closure ) ) : json( nullptr );
  out["count"] = ideals.size();
  out["ideals"] = list;
  return out;
}

json descriptor_to_json( const clonoid_universe& u, const clonoid_descriptor& d )
{
  json out;
  out["k"] = d.rank;
  switch ( d.var )
  {
  case clonoid_descriptor::variant::klik:
    out["variant"] = "klik";
    break;
  case clonoid_descriptor::variant::klik_meet:
    out["variant"] = "klikMeet";
    out["meet"] = meet_name( d.meet );
    break;
  default:
    out["variant"] = "named";
    out["named"] = d.named_class;
    return out;
  }
  json theta = json::array();
  ideal th{ &u.p, d.theta };
  for ( int e : th.maxima() )
    theta.push_back( u.p.elements[e].to_string() );
  out["theta"] = theta;
  out["thetaElements"] = th.element_ids();
  return out;
}

json clonoids_to_json( const clonoid_universe& u, const std::vector<clonoid_info>& all,
                       const std::vector<std::vector<int>>& covers )
{
  json list = json::array();
  for ( size_t i = 0; i < all.size(); ++i )
  {
    json e;
    e["id"] = i;
    e["descriptor"] = descriptor_to_json( u, all[i].canonical );
    json aliases = json::array();
    for ( const auto& a : all[i].aliases )
      aliases.push_back( descriptor_to_json( u, a ) );
    e["aliases"] = aliases;
    char buf[19];
    std::snprintf( buf, sizeof buf, "%016llx",
                   static_cast<unsigned long long>( fingerprint_hash( all[i].fp ) ) );
    e["fingerprintHash"] = buf;
    if ( !all[i].names.empty() )
      e["name"] = all[i].names.front();
    if ( !covers.empty() )
      e["lowerCovers"] = covers[i];
    list.push_back( e );
  }
  json out;
  out["k"] = u.rank;
  out["count"] = all.size();
  out["clonoids"] = list;
  return out;
}

json functions_to_json()
{
  json list = json::array();
  for ( const auto& f : function_registry() )
  {
    json e;
    e["name"] = f.name;
    e["arity"] = f.fn.arity();
    e["table"] = f.fn.to_string();
    e["definition"] = f.definition;
    list.push_back( e );
  }
  return json{ { "functions", list } };
}

json classes_to_json()
{
  json list = json::array();
  for ( const auto& c : class_registry() )
  {
    json e;
    e["name"] = c.name;
    e["definition"] = c.definition;
    if ( !c.inner_pair.empty() )
      e["innerNegation"] = c.inner_pair;
    list.push_back( e );
  }
  return json{ { "classes", list } };
}

namespace {

std::string quote( const std::string& s )
{
  std::string out = "\"";
  for ( char c : s )
  {
    if ( c == '"' || c == '\\' )
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string poset_to_dot( const poset& p )
{
  std::ostringstream os;
  os << "digraph poset_k" << p.rank;
  os << " {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for ( int i = 0; i < p.size(); ++i )
    os << "  n" << i << " [label=" << quote( p.label_or_key( i ) ) << "];\n";
  /* one rank per true-point count */
  int max_tp = 0;
  for ( int i = 0; i < p.size(); ++i )
    max_tp = std::max( max_tp, p.elements[i].true_count() );
  for ( int tp = 0; tp <= max_tp; ++tp )
  {
    std::string line;
    for ( int i = 0; i < p.size(); ++i )
      if ( p.elements[i].true_count() == tp )
        line += " n" + std::to_string( i ) + ";";
    if ( !line.empty() )
      os << "  { rank=same;" << line << " }\n";
  }
  for ( auto [a, b] : p.covers )
    os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string ideal_lattice_to_dot( const poset& p, const std::vector<ideal>& ideals )
{
  std::ostringstream os;
  os << "digraph ideals_k" << p.rank << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for ( size_t i = 0; i < ideals.size(); ++i )
  {
    std::string label;
    for ( int e : ideals[i].maxima() )
    {
      if ( !label.empty() )
        label += " ";
      label += p.label_or_key( e );
    }
    if ( label.empty() )
      label = "{}";
    os << "  i" << i << " [label=" << quote( label ) << "];\n";
  }
  /* covering inclusions: one element added */
  for ( size_t i = 0; i < ideals.size(); ++i )
    for ( size_t j = 0; j < ideals.size(); ++j )
    {
      uint64_t a = ideals[i].members, b = ideals[j].members;
      if ( a != b && ( a & ~b ) == 0 && std::popcount( b & ~a ) == 1 )
        os << "  i" << i << " -> i" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string clonoids_to_dot( const clonoid_universe& u, const std::vector<clonoid_info>& all,
                             const std::vector<std::vector<int>>& covers )
{
  std::ostringstream os;
  os << "digraph clonoids_k" << u.rank << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for ( size_t i = 0; i < all.size(); ++i )
    os << "  c" << i << " [label=" << quote( all[i].display_name( &u.p ) ) << "];\n";
  for ( size_t i = 0; i < covers.size(); ++i )
    for ( int j : covers[i] )
      os << "  c" << j << " -> c" << i << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace minmin
