#pragma once

#include "minmin/clonoid.hpp"
#include "minmin/lattice.hpp"
#include "minmin/poset.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace minmin {

/* JSON artifacts (schemas documented in the README) */
nlohmann::json poset_to_json( const poset& p );
nlohmann::json ideals_to_json( const poset& p, const std::vector<ideal>& ideals );
nlohmann::json ideal_to_json( const ideal& th );
nlohmann::json descriptor_to_json( const clonoid_universe& u, const clonoid_descriptor& d );
nlohmann::json clonoids_to_json( const clonoid_universe& u, const std::vector<clonoid_info>& all,
                                 const std::vector<std::vector<int>>& covers );
nlohmann::json functions_to_json();
nlohmann::json classes_to_json();

/* deterministic DOT graphs */
std::string poset_to_dot( const poset& p );
std::string ideal_lattice_to_dot( const poset& p, const std::vector<ideal>& ideals );
std::string clonoids_to_dot( const clonoid_universe& u, const std::vector<clonoid_info>& all,
                             const std::vector<std::vector<int>>& covers );

} // namespace minmin
