#pragma once

#include <optional>
#include <string_view>

#include "sepbox/digraph.hpp"

namespace sepbox::named {

Digraph complete(std::size_t n);
Digraph complete_bipartite(std::size_t a, std::size_t b);
/// The 3-cube Q3.
Digraph cube();
/// Kneser graph K(5,2).
Digraph petersen();
/// Tutte-Coxeter graph: duads versus synthemes of a 6-set (30 vertices,
/// girth 8).
Digraph tutte_8_cage();

/// "K4", "K33", "cube", "petersen", "tutte8", "DCyc<n>", "C<n>" (directed
/// cycle).
std::optional<Digraph> by_name(std::string_view name);

}  // namespace sepbox::named
