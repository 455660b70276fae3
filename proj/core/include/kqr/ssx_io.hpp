#pragma once

#include <string>

#include "kqr/sset.hpp"

namespace kqr {

/// SSX v1 interchange: canonical ids are "s<dim>_<index>"; cells lists ids
/// per dimension; faces maps each id to its face refs {dim, id, epi}.
/// Round-trips are byte-exact on canonically ordered documents.
std::string to_ssx(const SimplicialSet& k);
SimplicialSet from_ssx(const std::string& json_text);

std::string map_to_ssx(const SimplicialMap& f);
SimplicialMap map_from_ssx(const std::string& json_text);

}  // namespace kqr
