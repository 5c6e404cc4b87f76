#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strongpow/group.hpp"

namespace strongpow {

// Everything the library knows how to compute about one strong power graph.
// Values outside a computation's size guard are left empty and reported as
// "skipped".
struct InvariantBundle {
  std::string spec;
  std::size_t n = 0;
  bool cyclic = false;
  std::uint64_t phi = 0;
  std::size_t edge_count = 0;
  std::vector<std::size_t> degrees;  // vertex order
  bool connected = false;

  std::optional<std::string> spectrum;
  std::optional<std::string> algebraic_connectivity;
  std::optional<std::string> tau;  // from the spectrum
  std::string tau_formula;
  std::optional<std::string> le;  // definition, exact
  std::string le_formula;         // reference closed form

  std::string kappa_formula;
  std::optional<std::string> kappa;
  std::string chi_formula;
  std::optional<std::string> chi;

  std::optional<bool> line_graph;
  bool cayley = false;

  std::optional<std::string> per_adjacency;  // Ryser
  std::optional<std::string> per_adjacency_formula;
  std::optional<std::string> per_laplacian;  // Ryser
  std::optional<std::string> per_laplacian_formula;
};

InvariantBundle compute_invariants(const std::string& spec, const FiniteGroup& g,
                                   bool permanents = true);

std::string bundle_to_table(const InvariantBundle& b);
std::string bundle_to_json(const InvariantBundle& b);

// Sweep columns in their fixed output order.
const std::vector<std::string>& sweep_columns();

// CSV with one row per cyclic order in [n_min, n_max]. `columns` selects a
// subset of sweep_columns(); output keeps the canonical order. Empty means
// all columns.
std::string sweep_csv(std::size_t n_min, std::size_t n_max,
                      const std::vector<std::string>& columns, std::size_t threads);

}  // namespace strongpow
