#pragma once

#include <string>

#include "cambrian/heap.hpp"
#include "cambrian/two_cover.hpp"

namespace cambrian {

// Hasse diagram with planar coordinates as pin positions
std::string heap_to_dot(const Heap& heap);
std::string heap_to_json(const Heap& heap);

// flattened cylinder; wrap edges dashed, the distinguished cut paths colored
std::string two_cover_to_dot(const TwoCover& tc);
std::string two_cover_to_json(const TwoCover& tc);

}  // namespace cambrian
