#include "strongpow/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "strongpow/graph.hpp"
#include "strongpow/permanent.hpp"
#include "strongpow/spectral.hpp"
#include "strongpow/structure.hpp"
#include "strongpow/verify.hpp"

namespace strongpow {

InvariantBundle compute_invariants(const std::string& spec, const FiniteGroup& g,
                                   bool permanents) {
  InvariantBundle b;
  b.spec = spec;
  b.n = g.order();
  b.cyclic = is_cyclic(g);
  b.phi = euler_phi(b.n);

  const Graph graph = strong_power_graph(g);
  b.edge_count = graph.edge_count();
  b.degrees = degree_sequence(graph);
  b.connected = is_connected(graph);

  b.tau_formula = spanning_tree_count_formula(b.n, b.cyclic).str();
  b.le_formula = to_string(laplacian_energy_closed_form(b.n, b.cyclic));
  b.kappa_formula = std::to_string(kappa_formula(b.n, b.cyclic));
  b.chi_formula = std::to_string(chi_formula(b.n, b.cyclic));
  b.cayley = cayley_classification(g);

  const IntMatrix lap = laplacian(graph);
  if (b.n <= kCharPolyLimit) {
    if (auto s = exact_spectrum(lap)) {
      b.spectrum = to_string(*s);
      b.algebraic_connectivity = std::to_string(algebraic_connectivity(*s));
      b.tau = spanning_tree_count_from_spectrum(*s).str();
      b.le = to_string(laplacian_energy_from_spectrum(*s, b.edge_count, b.n));
    }
  }
  if (b.n <= kConnectivityLimit) b.kappa = std::to_string(vertex_connectivity_bruteforce(graph));
  // The shape shortcut in chromatic_number_exact covers every strong power
  // graph, so this stays cheap at any order.
  b.chi = std::to_string(chromatic_number_exact(graph));
  if (b.n <= kLineGraphHostLimit) b.line_graph = is_line_graph(graph);

  if (permanents && b.n <= kRyserLimit) {
    b.per_adjacency = permanent_ryser(adjacency(graph)).str();
    b.per_laplacian = permanent_ryser(lap).str();
  }
  if (b.cyclic && b.n >= 2) {
    b.per_adjacency_formula = adjacency_permanent_formula(b.n).str();
    b.per_laplacian_formula = laplacian_permanent_formula(b.n).str();
  } else if (is_complete(graph)) {
    b.per_laplacian_formula = complete_graph_laplacian_permanent(b.n).str();
  }
  return b;
}

namespace {

std::string or_skipped(const std::optional<std::string>& v) { return v ? *v : "skipped"; }

std::string or_skipped(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "skipped";
}

std::string join_degrees(const std::vector<std::size_t>& d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? " " : "") << d[i];
  return out.str();
}

nlohmann::ordered_json nullable(const std::optional<std::string>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string bundle_to_table(const InvariantBundle& b) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"group", b.spec},
      {"n", std::to_string(b.n)},
      {"cyclic", b.cyclic ? "true" : "false"},
      {"phi", std::to_string(b.phi)},
      {"edges", std::to_string(b.edge_count)},
      {"degrees", join_degrees(b.degrees)},
      {"connected", b.connected ? "true" : "false"},
      {"spectrum", or_skipped(b.spectrum)},
      {"a", or_skipped(b.algebraic_connectivity)},
      {"tau", or_skipped(b.tau)},
      {"tau_formula", b.tau_formula},
      {"le", or_skipped(b.le)},
      {"le_formula", b.le_formula},
      {"kappa", or_skipped(b.kappa)},
      {"kappa_formula", b.kappa_formula},
      {"chi", or_skipped(b.chi)},
      {"chi_formula", b.chi_formula},
      {"line_graph", or_skipped(b.line_graph)},
      {"cayley", b.cayley ? "true" : "false"},
      {"per_a", or_skipped(b.per_adjacency)},
      {"per_a_formula", b.per_adjacency_formula.value_or("n/a")},
      {"per_l", or_skipped(b.per_laplacian)},
      {"per_l_formula", b.per_laplacian_formula.value_or("n/a")},
  };
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) {
    out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return out.str();
}

std::string bundle_to_json(const InvariantBundle& b) {
  nlohmann::ordered_json j;
  j["group"] = b.spec;
  j["n"] = b.n;
  j["cyclic"] = b.cyclic;
  j["phi"] = b.phi;
  j["edges"] = b.edge_count;
  j["degrees"] = b.degrees;
  j["connected"] = b.connected;
  j["spectrum"] = nullable(b.spectrum);
  j["a"] = nullable(b.algebraic_connectivity);
  j["tau"] = nullable(b.tau);
  j["tau_formula"] = b.tau_formula;
  j["le"] = nullable(b.le);
  j["le_formula"] = b.le_formula;
  j["kappa"] = nullable(b.kappa);
  j["kappa_formula"] = b.kappa_formula;
  j["chi"] = nullable(b.chi);
  j["chi_formula"] = b.chi_formula;
  j["line_graph"] = b.line_graph ? nlohmann::ordered_json(*b.line_graph)
                                 : nlohmann::ordered_json(nullptr);
  j["cayley"] = b.cayley;
  j["per_a"] = nullable(b.per_adjacency);
  j["per_a_formula"] = nullable(b.per_adjacency_formula);
  j["per_l"] = nullable(b.per_laplacian);
  j["per_l_formula"] = nullable(b.per_laplacian_formula);
  return j.dump(2) + "\n";
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns = {
      "n", "phi", "spectrum", "a", "tau", "le", "le_formula", "kappa", "chi", "linegraph"};
  return columns;
}

std::string sweep_csv(std::size_t n_min, std::size_t n_max,
                      const std::vector<std::string>& columns, std::size_t threads) {
  if (n_min < 1 || n_min > n_max) throw std::invalid_argument("invalid range");
  const auto& all = sweep_columns();
  for (const auto& c : columns) {
    if (std::find(all.begin(), all.end(), c) == all.end()) {
      throw std::invalid_argument("unknown column: " + c);
    }
  }
  std::vector<std::string> selected;
  for (const auto& c : all) {
    if (columns.empty() || std::find(columns.begin(), columns.end(), c) != columns.end()) {
      selected.push_back(c);
    }
  }

  std::vector<InvariantBundle> rows(n_max - n_min + 1);
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    const std::size_t n = n_min + i;
    rows[i] = compute_invariants("zn:" + std::to_string(n), make_cyclic(n), false);
  });

  std::ostringstream out;
  for (std::size_t i = 0; i < selected.size(); ++i) out << (i ? "," : "") << selected[i];
  out << '\n';
  for (const auto& b : rows) {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      const auto& c = selected[i];
      std::string v;
      if (c == "n") v = std::to_string(b.n);
      else if (c == "phi") v = std::to_string(b.phi);
      else if (c == "spectrum") v = or_skipped(b.spectrum);
      else if (c == "a") v = or_skipped(b.algebraic_connectivity);
      else if (c == "tau") v = or_skipped(b.tau);
      else if (c == "le") v = or_skipped(b.le);
      else if (c == "le_formula") v = b.le_formula;
      else if (c == "kappa") v = or_skipped(b.kappa);
      else if (c == "chi") v = or_skipped(b.chi);
      else if (c == "linegraph") v = or_skipped(b.line_graph);
      out << (i ? "," : "") << v;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace strongpow
