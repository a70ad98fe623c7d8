#include "qcrystal/characters.hpp"
#include "qcrystal/geometric.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace qcrystal;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string kind;
  int rank = 0;
  std::string weight;
  std::string model;
  std::optional<int> depth;
  std::string format = "json";
  std::string output;
  unsigned seed = 1;
  int threads = 0;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool need_spec) {
  auto k = cmd->add_option("--kind", cfg.kind, "FinA, FinD, AffA or AffD");
  auto r = cmd->add_option("--rank", cfg.rank, "rank n (FinA n means A_{n-1})");
  if (need_spec) {
    k->required();
    r->required();
  }
  cmd->add_option("--weight", cfg.weight, "dominant coefficients in vertex order, comma separated");
  cmd->add_option("--model", cfg.model, "tableaux, dtableaux, pyramid, wall or strings");
  cmd->add_option("--depth", cfg.depth, "maximal drop height");
  cmd->add_option("--format", cfg.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  cmd->add_option("--output,-o", cfg.output, "output file (default stdout)");
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
  cmd->add_option("--threads", cfg.threads, "worker threads (default CRYSTAL_THREADS or all cores)");
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  return out;
}

CartanSpec spec_of(const RunConfig& cfg) {
  try {
    return CartanSpec::make(parse_kind(cfg.kind), cfg.rank);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> weight_of(const RunConfig& cfg, const CartanSpec& spec) {
  if (cfg.weight.empty()) throw UsageError("--weight is required");
  auto w = parse_ints(cfg.weight);
  if (static_cast<int>(w.size()) != spec.size())
    throw UsageError("--weight needs " + std::to_string(spec.size()) + " coefficients");
  return w;
}

std::string default_model(const CartanSpec& spec) {
  switch (spec.kind()) {
    case Kind::FinA: return "tableaux";
    case Kind::FinD: return "dtableaux";
    case Kind::AffA: return "pyramid";
    case Kind::AffD: return "wall";
  }
  return "";
}

int wall_ground(const CartanSpec& spec, const std::vector<int>& w) {
  int level = 0, k = -1;
  for (int p = 0; p < spec.size(); ++p) {
    level += w[p];
    if (w[p]) k = spec.label(p);
  }
  if (level != 1) throw UsageError("wall model needs a level-one fundamental weight");
  return k;
}

// Builds the model named by the config and hands it to fn.
template <class F>
int with_model(const CartanSpec& spec, const std::vector<int>& w, std::string name, F&& fn) {
  if (name.empty()) name = default_model(spec);
  try {
    if (name == "tableaux" && spec.kind() == Kind::FinA) return fn(TableauAModel(spec, w));
    if (name == "strings" && spec.kind() == Kind::FinA) return fn(StringModelA(spec, w));
    if (name == "dtableaux" && spec.kind() == Kind::FinD) return fn(TableauDModel(spec, w));
    if (name == "pyramid" && spec.kind() == Kind::AffA) return fn(PyramidModel(spec, w));
    if (name == "wall" && spec.kind() == Kind::AffD) return fn(WallModel(spec, wall_ground(spec, w)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("model " + name + " is not available for " + kind_name(spec.kind()));
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string drop_str(const std::vector<int>& k) {
  std::string s;
  for (size_t j = 0; j < k.size(); ++j) s += (j ? "," : "") + std::to_string(k[j]);
  return s;
}

std::optional<int> depth_of(const RunConfig& cfg, const CartanSpec& spec) {
  if (spec.affine() && !cfg.depth) throw UsageError("affine types need --depth");
  if (cfg.depth && *cfg.depth < 0) throw UsageError("--depth must be nonnegative");
  return cfg.depth;
}

std::string graph_text(const CrystalGraph& g) {
  std::ostringstream os;
  os << "nodes " << g.nodes.size() << ", edges " << g.edges.size() << "\n";
  for (const auto& [key, d] : g.nodes) {
    os << "[" << drop_str(d.drop) << "] " << key << "\n";
    std::istringstream label(d.label);
    for (std::string line; std::getline(label, line);) os << "    " << line << "\n";
  }
  return os.str();
}

int cmd_generate(const RunConfig& cfg) {
  auto spec = spec_of(cfg);
  auto w = weight_of(cfg, spec);
  auto depth = depth_of(cfg, spec);
  return with_model(spec, w, cfg.model, [&](const auto& m) {
    auto g = generate(m, depth, cfg.threads);
    emit(cfg, cfg.format == "dot" ? to_dot(g) : cfg.format == "text" ? graph_text(g) : serialize(g));
    return 0;
  });
}

CrystalGraph load_graph(const std::string& path, std::string* model_out = nullptr) {
  json j = read_json(path);
  CrystalGraph head;
  try {
    head = parse_graph_header(j);
  } catch (const std::exception& e) {
    throw UsageError(path + ": malformed graph: " + e.what());
  }
  if (model_out) *model_out = head.model;
  CrystalGraph out;
  with_model(head.spec, head.lambda, head.model, [&](const auto& m) {
    try {
      out = rehydrate(m, j);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ": invalid node: " + e.what());
    }
    return 0;
  });
  return out;
}

std::string violations(const Report& r) {
  return "violations at " + std::to_string(r.size()) + (r.size() == 1 ? " node" : " nodes");
}

int cmd_validate(const RunConfig& cfg, const std::string& path) {
  CrystalGraph g = load_graph(path);
  Report axioms = validate(g);
  Report local = stembridge(g);
  std::ostringstream os;
  os << "nodes " << g.nodes.size() << ", edges " << g.edges.size() << "\n";
  os << "axioms: " << (axioms.ok() ? "ok" : violations(axioms)) << "\n";
  if (!axioms.ok()) os << axioms.summary();
  os << "stembridge: " << (local.ok() ? "ok" : violations(local)) << "\n";
  if (!local.ok()) os << local.summary();
  emit(cfg, os.str());
  return axioms.ok() && local.ok() ? 0 : 1;
}

std::string table_text(const MultiplicityTable& t) {
  std::ostringstream os;
  for (const auto& e : table_to_json(t).at("entries"))
    os << "[" << drop_str(e.at("drop").get<std::vector<int>>()) << "] " << e.at("mult").get<long long>() << "\n";
  return os.str();
}

int cmd_character(const RunConfig& cfg) {
  auto spec = spec_of(cfg);
  auto w = weight_of(cfg, spec);
  auto depth = depth_of(cfg, spec);
  MultiplicityTable t;
  try {
    t = freudenthal(spec, w, depth);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j = table_to_json(t);
  if (!spec.affine()) j["weyl_dim"] = weyl_dim(spec, w);
  std::string text = table_text(t);
  if (!spec.affine()) text += "weyl_dim " + std::to_string(weyl_dim(spec, w)) + "\n";
  emit(cfg, cfg.format == "text" ? text : j.dump(1) + "\n");
  return 0;
}

int cmd_compare(const RunConfig& cfg, const std::vector<std::string>& graphs) {
  if (graphs.size() == 2) {
    bool iso = graphs_isomorphic(load_graph(graphs[0]), load_graph(graphs[1]));
    emit(cfg, std::string(iso ? "isomorphic" : "not isomorphic") + "\n");
    return iso ? 0 : 1;
  }
  CrystalGraph g;
  if (graphs.size() == 1) {
    g = load_graph(graphs[0]);
  } else {
    auto spec = spec_of(cfg);
    auto w = weight_of(cfg, spec);
    auto depth = depth_of(cfg, spec);
    with_model(spec, w, cfg.model, [&](const auto& m) {
      g = generate(m, depth, cfg.threads);
      return 0;
    });
  }
  auto t = freudenthal(g.spec, g.lambda, g.depth);
  auto diff = compare(g, t);
  std::ostringstream os;
  os << "nodes " << g.nodes.size() << ", oracle total " << t.total() << ", discrepancies " << diff.size() << "\n";
  for (const auto& line : diff) os << line << "\n";
  emit(cfg, os.str());
  return diff.empty() ? 0 : 1;
}

int cmd_enumerate(const RunConfig& cfg) {
  auto spec = spec_of(cfg);
  auto w = weight_of(cfg, spec);
  auto depth = depth_of(cfg, spec);
  if (!depth) throw UsageError("enumerate needs --depth");
  std::map<std::vector<int>, int> counts;
  int total = with_model(spec, w, cfg.model, [&](const auto& m) -> int {
    using M = std::decay_t<decltype(m)>;
    if constexpr (std::is_same_v<M, PyramidModel> || std::is_same_v<M, WallModel>) {
      auto all = m.enumerate(*depth);
      int kept = 0;
      for (const auto& x : all) {
        auto d = m.drop(x);
        int h = 0;
        for (int v : d) h += v;
        if (h > *depth) continue;
        counts[d] += 1;
        ++kept;
      }
      return kept;
    } else {
      throw UsageError("enumerate supports the pyramid and wall models");
    }
  });
  json rows = json::array();
  std::ostringstream text;
  std::vector<std::pair<std::vector<int>, int>> sorted(counts.begin(), counts.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int v : a.first) ha += v;
    for (int v : b.first) hb += v;
    return ha != hb ? ha < hb : a.first < b.first;
  });
  for (const auto& [d, c] : sorted) {
    rows.push_back({{"drop", d}, {"count", c}});
    text << "[" << drop_str(d) << "] " << c << "\n";
  }
  text << "total " << total << "\n";
  emit(cfg, cfg.format == "text" ? text.str() : json{{"total", total}, {"counts", rows}}.dump(1) + "\n");
  return 0;
}

struct RepArgs {
  std::optional<int> entry, row, kp, k, col;
  std::string letter, variant = "body", column;
  int framing = 0;
};

DLetter parse_letter(const std::string& s) {
  if (s.empty()) throw UsageError("--letter is required");
  bool bar = s.back() == '\'';
  auto v = parse_ints(bar ? s.substr(0, s.size() - 1) : s);
  if (v.size() != 1 || v[0] == 0) throw UsageError("bad letter " + s);
  return bar ? -std::abs(v[0]) : v[0];
}

EntryVariant parse_variant(const std::string& s) {
  for (auto v : {EntryVariant::Body, EntryVariant::RowNPlus, EntryVariant::RowNMinus, EntryVariant::SpinPlus,
                 EntryVariant::SpinMinus})
    if (variant_name(v) == s) return v;
  throw UsageError("unknown variant " + s);
}

ColumnState parse_column(const std::string& s) {
  auto colon = s.find(':');
  auto full = parse_ints(s.substr(0, colon));
  if (full.size() != 1) throw UsageError("column is cells[:frontier colors]");
  ColumnState c{full[0], 0};
  if (colon != std::string::npos && colon + 1 < s.size())
    for (int x : parse_ints(s.substr(colon + 1))) c.frontier |= 1u << x;
  return c;
}

template <class T>
T need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  return *v;
}

int cmd_rep(const RunConfig& cfg, const RepArgs& a) {
  auto spec = spec_of(cfg);
  QuiverRep rep;
  try {
    switch (spec.kind()) {
      case Kind::FinA: rep = entry_rep_a(spec, need(a.entry, "--entry"), need(a.row, "--row")); break;
      case Kind::FinD: rep = entry_rep_d(spec, parse_letter(a.letter), need(a.row, "--row"), parse_variant(a.variant)); break;
      case Kind::AffA: rep = build_string(spec, need(a.kp, "--kp"), need(a.k, "--k")); break;
      case Kind::AffD: {
        auto w = weight_of(cfg, spec);
        WallModel m(spec, wall_ground(spec, w));
        rep = column_rep(m, parse_column(a.column), need(a.col, "--col"));
        break;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j = rep_to_json(rep);
  j["dimension_vector"] = rep.dimension_vector();
  j["psi_zero"] = moment_map_zero(rep);
  j["nilpotent"] = is_nilpotent(rep);
  if (a.framing > 0) {
    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<int> dist(-2, 2);
    Framing<Rational> t;
    for (int lab : spec.labels()) {
      int dim = static_cast<int>(rep.basis_of(lab).size());
      QMatrix m(a.framing, dim);
      for (int r = 0; r < a.framing; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = dist(rng);
      t[lab] = m;
    }
    j["stable"] = is_stable(rep, t);
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "dimension vector [" << drop_str(rep.dimension_vector()) << "]\n";
    os << "psi " << (j["psi_zero"].get<bool>() ? "zero" : "nonzero") << ", "
       << (j["nilpotent"].get<bool>() ? "nilpotent" : "not nilpotent") << "\n";
    if (j.contains("stable")) os << (j["stable"].get<bool>() ? "stable" : "unstable") << " for the sampled framing\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, j.dump(1) + "\n");
  }
  return j["psi_zero"].get<bool>() && j["nilpotent"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal graphs of highest weight modules and their quiver-variety models"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto gen = app.add_subcommand("generate", "emit a crystal graph");
  add_common(gen, cfg, true);

  std::string graph_file;
  auto val = app.add_subcommand("validate", "check crystal axioms and Stembridge relations of a graph file");
  add_common(val, cfg, false);
  val->add_option("graph", graph_file, "graph JSON")->required();

  auto chr = app.add_subcommand("character", "weight multiplicities from the Freudenthal formula");
  add_common(chr, cfg, true);

  std::vector<std::string> graphs;
  auto cmp = app.add_subcommand("compare", "graph against the oracle, or two graphs for isomorphism");
  add_common(cmp, cfg, false);
  cmp->add_option("graphs", graphs, "zero, one or two graph files")->expected(0, 2);

  auto en = app.add_subcommand("enumerate", "count reduced pyramids or walls per weight");
  add_common(en, cfg, true);

  RepArgs ra;
  auto rep = app.add_subcommand("rep", "quiver representation of an entry, string or column");
  add_common(rep, cfg, true);
  rep->add_option("--entry", ra.entry, "type A entry");
  rep->add_option("--row", ra.row, "row of the entry, or spin slot");
  rep->add_option("--letter", ra.letter, "type D letter, barred as 3'");
  rep->add_option("--variant", ra.variant, "body, row-n+, row-n-, spin+ or spin-");
  rep->add_option("--kp", ra.kp, "first degree of an affine A string");
  rep->add_option("--k", ra.k, "last degree of an affine A string");
  rep->add_option("--column", ra.column, "wall column as cells[:frontier colors]");
  rep->add_option("--col", ra.col, "wall column index");
  rep->add_option("--framing", ra.framing, "sample a random framing of this dimension and test stability");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_generate(cfg);
    if (*val) return cmd_validate(cfg, graph_file);
    if (*chr) return cmd_character(cfg);
    if (*cmp) {
      if (graphs.empty() && (cfg.kind.empty() || cfg.rank == 0)) throw UsageError("compare needs graph files or --kind/--rank");
      return cmd_compare(cfg, graphs);
    }
    if (*en) return cmd_enumerate(cfg);
    if (*rep) return cmd_rep(cfg, ra);
  } catch (const UsageError& e) {
    std::cerr << "qcrystal: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qcrystal: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
