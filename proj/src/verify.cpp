#include "strongpow/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "strongpow/graph.hpp"
#include "strongpow/permanent.hpp"
#include "strongpow/spectral.hpp"
#include "strongpow/structure.hpp"

namespace strongpow {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::agree: return "agree";
    case CheckStatus::disagree: return "disagree";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

std::size_t VerifyReport::count(CheckStatus s) const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.status == s;
  return c;
}

std::size_t VerifyReport::unexplained() const {
  std::size_t c = 0;
  for (const auto& r : records) c += r.status == CheckStatus::disagree && !r.known;
  return c;
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "spectrum", "charpoly", "tau",      "le",           "kappa",
      "chi",      "linegraph", "cayley",  "perm_adj",     "perm_lap",
      "perm_lap_derived", "perm_lap_headline", "perm_complete"};
  return names;
}

const std::vector<CorpusGroup>& corpus_groups() {
  static const std::vector<CorpusGroup> corpus = [] {
    std::vector<std::string> specs;
    for (int n = 1; n <= 24; ++n) specs.push_back("zn:" + std::to_string(n));
    for (const char* s : {"product:zn:2+zn:3", "product:zn:2+zn:5", "product:zn:3+zn:4",
                          "klein", "sym:3", "sym:4", "product:zn:2+zn:4",
                          "product:zn:2+product:zn:2+zn:2", "product:zn:3+zn:3",
                          "product:zn:2+zn:6", "product:zn:2+dihedral:3",
                          "product:zn:4+zn:4", "product:zn:2+zn:8",
                          "product:zn:2+dihedral:4", "product:zn:2+zn:10",
                          "product:zn:3+sym:3", "product:zn:4+zn:6"}) {
      specs.emplace_back(s);
    }
    for (int k = 3; k <= 12; ++k) specs.push_back("dihedral:" + std::to_string(k));

    std::vector<CorpusGroup> out;
    for (const auto& s : specs) out.push_back({s, parse_group_spec(s)});
    std::stable_sort(out.begin(), out.end(), [](const CorpusGroup& a, const CorpusGroup& b) {
      if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
      return a.spec < b.spec;
    });
    return out;
  }();
  return corpus;
}

namespace {

// Per-group values shared between checks, computed on first use.
class CheckContext {
 public:
  CheckContext(const std::string& spec, const FiniteGroup& g)
      : spec_(spec), group_(g), n_(g.order()), cyclic_(is_cyclic(g)),
        graph_(strong_power_graph(g)) {}

  std::size_t n() const { return n_; }
  bool cyclic() const { return cyclic_; }
  const FiniteGroup& group() const { return group_; }
  const Graph& graph() const { return graph_; }

  const IntMatrix& lap() {
    if (!lap_) lap_ = laplacian(graph_);
    return *lap_;
  }
  const CharPoly& char_poly() {
    if (!char_poly_) char_poly_ = char_poly_exact(lap());
    return *char_poly_;
  }
  // Exact Laplacian spectrum; nullopt when the characteristic polynomial has
  // a non-integer root.
  const std::optional<ExactSpectrum>& spectrum() {
    if (!spectrum_done_) {
      spectrum_ = integer_spectrum(char_poly(), static_cast<std::int64_t>(2 * n_));
      spectrum_done_ = true;
    }
    return spectrum_;
  }
  const BigInt& ryser_lap() {
    if (!ryser_lap_) ryser_lap_ = permanent_ryser(lap());
    return *ryser_lap_;
  }
  const BigInt& ryser_adj() {
    if (!ryser_adj_) ryser_adj_ = permanent_ryser(adjacency(graph_));
    return *ryser_adj_;
  }

  CheckRecord record(const std::string& check) const {
    CheckRecord r;
    r.check = check;
    r.group = spec_;
    r.n = n_;
    r.cyclic = cyclic_;
    return r;
  }

 private:
  std::string spec_;
  const FiniteGroup& group_;
  std::size_t n_;
  bool cyclic_;
  Graph graph_;
  std::optional<IntMatrix> lap_;
  std::optional<CharPoly> char_poly_;
  std::optional<ExactSpectrum> spectrum_;
  bool spectrum_done_ = false;
  std::optional<BigInt> ryser_lap_;
  std::optional<BigInt> ryser_adj_;
};

CheckRecord skip(CheckRecord r, std::string note) {
  r.status = CheckStatus::skipped;
  r.note = std::move(note);
  return r;
}

CheckRecord compare(CheckRecord r, std::string formula, std::string oracle) {
  r.status = formula == oracle ? CheckStatus::agree : CheckStatus::disagree;
  r.formula_value = std::move(formula);
  r.oracle_value = std::move(oracle);
  return r;
}

std::string beyond(const char* what, std::size_t limit) {
  return std::string(what) + " limited to n <= " + std::to_string(limit);
}

const char* flag(bool b) { return b ? "true" : "false"; }

CheckRecord check_spectrum(CheckContext& c) {
  auto r = c.record("spectrum");
  if (c.n() > kCharPolyLimit) return skip(r, beyond("exact spectrum", kCharPolyLimit));
  const ExactSpectrum formula = closed_form_spectrum(c.n(), c.cyclic());
  const auto& exact = c.spectrum();
  r = compare(r, to_string(formula), exact ? to_string(*exact) : "non-integer");

  const auto numeric = eigenvalues_numeric(c.lap());
  const auto expected = formula.ascending();
  double worst = 0.0;
  bool sizes_match = numeric.size() == expected.size();
  for (std::size_t i = 0; sizes_match && i < numeric.size(); ++i) {
    worst = std::max(worst, std::abs(numeric[i] - static_cast<double>(expected[i])));
  }
  std::ostringstream note;
  note << "numeric max deviation " << (sizes_match ? worst : INFINITY);
  r.note = note.str();
  if (!sizes_match || worst > 1e-8) r.status = CheckStatus::disagree;
  return r;
}

CheckRecord check_charpoly(CheckContext& c) {
  auto r = c.record("charpoly");
  if (c.n() > kCharPolyLimit) return skip(r, beyond("characteristic polynomial", kCharPolyLimit));
  const CharPoly formula = (c.cyclic() && c.n() >= 2)
                               ? closed_form_char_poly(c.n())
                               : char_poly_from_spectrum(closed_form_spectrum(c.n(), c.cyclic()));
  return compare(r, to_string(formula), to_string(c.char_poly()));
}

CheckRecord check_tau(CheckContext& c) {
  auto r = c.record("tau");
  if (c.n() > kKirchhoffLimit) return skip(r, beyond("Kirchhoff determinant", kKirchhoffLimit));
  return compare(r, spanning_tree_count_formula(c.n(), c.cyclic()).str(),
                 spanning_tree_count_kirchhoff(c.graph()).str());
}

CheckRecord check_le(CheckContext& c) {
  auto r = c.record("le");
  if (c.n() > kCharPolyLimit) return skip(r, beyond("exact spectrum", kCharPolyLimit));
  const auto& s = c.spectrum();
  if (!s) return skip(r, "Laplacian spectrum is not integral");
  return compare(r, to_string(laplacian_energy_closed_form(c.n(), c.cyclic())),
                 to_string(laplacian_energy_from_spectrum(*s, c.graph().edge_count(), c.n())));
}

CheckRecord check_kappa(CheckContext& c) {
  auto r = c.record("kappa");
  if (c.n() > kConnectivityLimit) return skip(r, beyond("brute-force connectivity", kConnectivityLimit));
  return compare(r, std::to_string(kappa_formula(c.n(), c.cyclic())),
                 std::to_string(vertex_connectivity_bruteforce(c.graph())));
}

CheckRecord check_chi(CheckContext& c) {
  auto r = c.record("chi");
  if (c.n() > kChromaticLimit) return skip(r, beyond("colouring search", kChromaticLimit));
  return compare(r, std::to_string(chi_formula(c.n(), c.cyclic())),
                 std::to_string(chromatic_number_search(c.graph())));
}

CheckRecord check_linegraph(CheckContext& c) {
  auto r = c.record("linegraph");
  if (c.n() > kLineGraphHostLimit) return skip(r, beyond("forbidden-subgraph search", kLineGraphHostLimit));
  // Noncyclic groups give complete graphs, and K_n is the line graph of a star.
  const bool formula = c.cyclic() ? cyclic_line_graph_classification(c.n()) : true;
  return compare(r, flag(formula), flag(is_line_graph(c.graph())));
}

CheckRecord check_cayley(CheckContext& c) {
  auto r = c.record("cayley");
  const bool formula = cayley_classification(c.group());
  if (!c.cyclic()) {
    if (c.n() > kIsomorphismLimit) return skip(r, beyond("isomorphism search", kIsomorphismLimit));
    const Graph witness = cayley_graph(c.group(), all_but_identity(c.group()));
    r = compare(r, flag(formula), flag(graph_isomorphic(c.graph(), witness)));
    r.note = "oracle: isomorphic to C(G, G-{e})";
    return r;
  }
  if (c.n() < 3) return skip(r, "edgeless graph is regular; boundary case");
  r = compare(r, flag(formula), is_regular(c.graph()) ? "undetermined" : "false");
  r.note = "oracle: non-regular graphs are not Cayley graphs";
  return r;
}

CheckRecord check_perm_cyclic(CheckContext& c, const std::string& name,
                              const std::function<BigInt()>& formula) {
  auto r = c.record(name);
  if (!c.cyclic()) return skip(r, "formula covers cyclic groups only");
  if (c.n() < 2) return skip(r, "formula needs n >= 2");
  if (c.n() > kRyserLimit) return skip(r, beyond("Ryser", kRyserLimit));
  const bool adjacency_check = name == "perm_adj";
  return compare(r, formula().str(), (adjacency_check ? c.ryser_adj() : c.ryser_lap()).str());
}

CheckRecord check_perm_complete(CheckContext& c) {
  auto r = c.record("perm_complete");
  if (!is_complete(c.graph())) return skip(r, "graph is not complete");
  if (c.n() > kRyserLimit) return skip(r, beyond("Ryser", kRyserLimit));
  return compare(r, complete_graph_laplacian_permanent(c.n()).str(), c.ryser_lap().str());
}

CheckRecord run_one(CheckContext& c, const std::string& check) {
  const std::size_t n = c.n();
  if (check == "spectrum") return check_spectrum(c);
  if (check == "charpoly") return check_charpoly(c);
  if (check == "tau") return check_tau(c);
  if (check == "le") return check_le(c);
  if (check == "kappa") return check_kappa(c);
  if (check == "chi") return check_chi(c);
  if (check == "linegraph") return check_linegraph(c);
  if (check == "cayley") return check_cayley(c);
  if (check == "perm_adj") {
    return check_perm_cyclic(c, check, [n] { return adjacency_permanent_formula(n); });
  }
  if (check == "perm_lap") {
    return check_perm_cyclic(c, check, [n] { return laplacian_permanent_formula(n); });
  }
  if (check == "perm_lap_derived") {
    return check_perm_cyclic(c, check, [n] {
      return clique_plus_vertex_laplacian_permanent(clique_params_for_cyclic(n));
    });
  }
  if (check == "perm_lap_headline") {
    return check_perm_cyclic(c, check, [n] {
      return clique_plus_vertex_laplacian_permanent_headline(clique_params_for_cyclic(n));
    });
  }
  if (check == "perm_complete") return check_perm_complete(c);
  throw std::invalid_argument("unknown check: " + check);
}

}  // namespace

std::vector<CheckRecord> run_checks(const std::string& spec, const FiniteGroup& g,
                                    const std::vector<std::string>& checks) {
  CheckContext ctx(spec, g);
  std::vector<CheckRecord> out;
  out.reserve(checks.size());
  for (const auto& check : checks) out.push_back(run_one(ctx, check));
  return out;
}

bool KnownDiscrepancy::matches(const CheckRecord& r) const {
  if (r.check != check) return false;
  if (cyclic && *cyclic != r.cyclic) return false;
  if (r.n < n_min) return false;
  if (n_max && r.n > *n_max) return false;
  return true;
}

std::vector<KnownDiscrepancy> parse_known_discrepancies(const std::string& json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_array()) throw std::invalid_argument("known-discrepancy file must hold a JSON array");
  std::vector<KnownDiscrepancy> out;
  for (const auto& e : doc) {
    KnownDiscrepancy k;
    k.check = e.at("check").get<std::string>();
    if (e.contains("cyclic")) k.cyclic = e.at("cyclic").get<bool>();
    if (e.contains("n_min")) k.n_min = e.at("n_min").get<std::size_t>();
    if (e.contains("n_max")) k.n_max = e.at("n_max").get<std::size_t>();
    k.explanation = e.value("explanation", "");
    out.push_back(std::move(k));
  }
  return out;
}

std::vector<KnownDiscrepancy> load_known_discrepancies(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_known_discrepancies(text.str());
}

void apply_known(VerifyReport& report, const std::vector<KnownDiscrepancy>& known) {
  for (auto& r : report.records) {
    if (r.status != CheckStatus::disagree) continue;
    for (const auto& k : known) {
      if (!k.matches(r)) continue;
      r.known = true;
      if (!r.note.empty()) r.note += "; ";
      r.note += "known: " + k.explanation;
      break;
    }
  }
}

VerifyReport run_verify(const VerifyRequest& req) {
  for (const auto& c : req.checks) {
    const auto& names = all_check_names();
    if (std::find(names.begin(), names.end(), c) == names.end()) {
      throw std::invalid_argument("unknown check: " + c);
    }
  }
  if (req.n_min < 1 || req.n_min > req.n_max) throw std::invalid_argument("invalid range");

  std::vector<CorpusGroup> groups;
  if (req.family == Family::cyclic) {
    for (std::size_t n = req.n_min; n <= req.n_max; ++n) {
      groups.push_back({"zn:" + std::to_string(n), make_cyclic(n)});
    }
  } else {
    for (const auto& g : corpus_groups()) {
      if (g.group.order() >= req.n_min && g.group.order() <= req.n_max) groups.push_back(g);
    }
  }

  std::vector<std::vector<CheckRecord>> per_group(groups.size());
  parallel_for(groups.size(), req.threads, [&](std::size_t i) {
    per_group[i] = run_checks(groups[i].spec, groups[i].group, req.checks);
  });

  VerifyReport report;
  for (auto& rs : per_group)
    for (auto& r : rs) report.records.push_back(std::move(r));
  return report;
}

std::string report_to_tsv(const VerifyReport& r) {
  std::ostringstream out;
  out << "check\tgroup\tn\tcyclic\tformula\toracle\tstatus\tknown\tnote\n";
  for (const auto& x : r.records) {
    out << x.check << '\t' << x.group << '\t' << x.n << '\t' << flag(x.cyclic) << '\t'
        << x.formula_value << '\t' << x.oracle_value << '\t' << to_string(x.status) << '\t'
        << flag(x.known) << '\t' << x.note << '\n';
  }
  return out.str();
}

std::string report_to_json(const VerifyReport& r) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& x : r.records) {
    nlohmann::ordered_json j;
    j["check"] = x.check;
    j["group"] = x.group;
    j["n"] = x.n;
    j["cyclic"] = x.cyclic;
    j["formula"] = x.formula_value;
    j["oracle"] = x.oracle_value;
    j["status"] = to_string(x.status);
    j["known"] = x.known;
    j["note"] = x.note;
    records.push_back(std::move(j));
  }
  nlohmann::ordered_json doc;
  doc["records"] = std::move(records);
  doc["agree"] = r.count(CheckStatus::agree);
  doc["disagree"] = r.count(CheckStatus::disagree);
  doc["skipped"] = r.count(CheckStatus::skipped);
  doc["unexplained"] = r.unexplained();
  return doc.dump(2) + "\n";
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("STRONGPOW_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace strongpow
