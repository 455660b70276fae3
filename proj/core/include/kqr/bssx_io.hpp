#pragma once

#include <string>

#include "kqr/bisset.hpp"

namespace kqr {

/// BSSX v1: the bigraded mirror of SSX. Canonical ids are "b<j>_<k>_<x>";
/// cells is a grid of id arrays; faces_h/faces_v map ids to arrays of refs
/// {jdim, kdim, id, epi_h, epi_v}.
std::string to_bssx(const BiSimplicialSet& x);
BiSimplicialSet from_bssx(const std::string& json_text);

}  // namespace kqr
