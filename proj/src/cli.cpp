#include <esb/cli.hpp>

#include <esb/betti.hpp>
#include <esb/binomial.hpp>
#include <esb/complex.hpp>
#include <esb/empty_simplices.hpp>
#include <esb/errors.hpp>
#include <esb/homology.hpp>
#include <esb/json_io.hpp>
#include <esb/monomial_ideal.hpp>
#include <esb/vectors.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace esb::cli {

int default_vertex_limit() {
  if (const char* env = std::getenv("EMPTY_SIMPLEX_VERTEX_LIMIT")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("EMPTY_SIMPLEX_VERTEX_LIMIT must be a positive integer, got \"") + env + "\"");
  }
  return kDefaultVertexLimit;
}

namespace {

IntVector parse_list(const std::string& text) {
  IntVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) throw ValidationError("empty entry in list \"" + text + "\"");
    try {
      out.emplace_back(item);
    } catch (const std::exception&) {
      throw ValidationError("not an integer: \"" + item + "\"");
    }
  }
  if (out.empty()) throw ValidationError("empty list");
  return out;
}

std::string entries_text(const IntVector& v, std::size_t skip = 0) {
  return join(IntVector(v.begin() + static_cast<long>(std::min(skip, v.size())), v.end()));
}

std::string vertices_text(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i] + 1);
  return out + "}";
}

// Macaulay2-style grid: column i, row j - i, '.' for zero.
std::string render_betti(const BettiTable& table) {
  if (table.entries().empty()) return "(zero table)\n";
  long max_i = 0, min_row = 0, max_row = 0;
  bool first = true;
  for (const auto& [key, value] : table.entries()) {
    const long row = key.second - key.first;
    max_i = std::max(max_i, key.first);
    min_row = first ? row : std::min(min_row, row);
    max_row = first ? row : std::max(max_row, row);
    first = false;
  }
  std::size_t width = 1;
  for (long i = 0; i <= max_i; ++i) width = std::max(width, table.total(i).str().size());
  std::ostringstream out;
  const int label = 7;
  out << std::setw(label) << "";
  for (long i = 0; i <= max_i; ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
  out << '\n' << std::setw(label) << "total:";
  for (long i = 0; i <= max_i; ++i) out << ' ' << std::setw(static_cast<int>(width)) << table.total(i).str();
  out << '\n';
  for (long row = min_row; row <= max_row; ++row) {
    out << std::setw(label - 1) << row << ':';
    for (long i = 0; i <= max_i; ++i) {
      const Integer v = table.at(i, i + row);
      out << ' ' << std::setw(static_cast<int>(width)) << (v == 0 ? std::string(".") : v.str());
    }
    out << '\n';
  }
  return out.str();
}

void emit(const CliConfig& config, std::ostream& out, const json& doc, const std::string& text) {
  if (config.output_format == OutputFormat::json)
    out << doc.dump(2) << '\n';
  else
    out << text;
}

// ---------------------------------------------------------------- sources

struct ComplexSource {
  std::vector<int> cyclic;
  int polygon = 0;
  int cross = 0;
  bool octahedron = false;
  int simplex = 0;
  std::string file;
};

void add_source_options(CLI::App* cmd, ComplexSource& src) {
  auto* group = cmd->add_option_group("complex", "where the simplicial complex comes from");
  group->add_option("--cyclic", src.cyclic, "boundary of the cyclic polytope C(N, D)")->expected(2);
  group->add_option("--polygon", src.polygon, "boundary of a convex N-gon");
  group->add_option("--cross", src.cross, "boundary of the D-dimensional cross-polytope");
  group->add_flag("--octahedron", src.octahedron, "boundary of the octahedron");
  group->add_option("--simplex", src.simplex, "boundary of the D-simplex");
  group->add_option("--file", src.file, "complex JSON {\"n\": int, \"facets\": [[1-based vertices]]}");
  group->require_option(1);
}

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

NamedComplex build_complex(const ComplexSource& src, const CliConfig& config) {
  auto limited = [&](int vertices) {
    if (vertices > config.vertex_limit)
      throw SizeLimitError("complex would have " + std::to_string(vertices) + " vertices, over the limit of " +
                           std::to_string(config.vertex_limit));
  };
  if (!src.cyclic.empty()) {
    limited(src.cyclic[0]);
    return {"C(" + std::to_string(src.cyclic[0]) + "," + std::to_string(src.cyclic[1]) + ")",
            cyclic_polytope_boundary(src.cyclic[0], src.cyclic[1])};
  }
  if (src.polygon) {
    limited(src.polygon);
    return {std::to_string(src.polygon) + "-gon", polygon_boundary(src.polygon)};
  }
  if (src.octahedron) {
    limited(6);
    return {"octahedron", cross_polytope_boundary(3)};
  }
  if (src.cross) {
    limited(2 * src.cross);
    return {"cross-polytope(" + std::to_string(src.cross) + ")", cross_polytope_boundary(src.cross)};
  }
  if (src.simplex) {
    limited(src.simplex + 1);
    return {"simplex(" + std::to_string(src.simplex) + ")", simplex_boundary(src.simplex)};
  }
  std::ifstream in(src.file);
  if (!in) throw ValidationError("cannot read " + src.file);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError(src.file + ": " + e.what());
  }
  auto complex = complex_from_json(doc);
  limited(complex.n_vertices());
  return {src.file, std::move(complex)};
}

// --------------------------------------------------------------- convert

struct ConvertArgs {
  std::string f, h, g;
  std::optional<long> d;
};

int cmd_convert(const ConvertArgs& args, const CliConfig& config, std::ostream& out, std::ostream& err) {
  json doc = json::object();
  std::string text;
  auto record = [&](const char* name, const json& value, const std::string& line) {
    doc[name] = value;
    text += line + "\n";
  };
  try {
    std::optional<HVector> h;
    if (!args.f.empty()) {
      if (!args.d) throw ValidationError("--f needs --d");
      IntVector entries = parse_list(args.f);
      // f_{-1} = 1 is implicit on the command line
      if (entries.size() == static_cast<std::size_t>(*args.d)) entries.insert(entries.begin(), Integer(1));
      FVector f(*args.d, entries);
      record("f", to_json(f), "f = " + entries_text(f.entries(), 1));
      h = f_to_h(f);
      record("h", to_json(*h), "h = " + entries_text(h->entries()));
    } else if (!args.h.empty()) {
      h = HVector(parse_list(args.h));
      if (args.d && *args.d != h->d())
        throw ValidationError("h-vector has " + std::to_string(h->d() + 1) + " entries but --d is " +
                              std::to_string(*args.d));
      record("h", to_json(*h), "h = " + entries_text(h->entries()));
      const FVector f = h_to_f(*h, h->d());
      record("f", to_json(f), "f = " + entries_text(f.entries(), 1));
    } else {
      if (!args.d) throw ValidationError("--g needs --d");
      const GVector g(parse_list(args.g));
      h = g_to_h(g, *args.d);
      const FVector f = h_to_f(*h, *args.d);
      record("g", to_json(g), "g = " + entries_text(g.entries()));
      record("h", to_json(*h), "h = " + entries_text(h->entries()));
      record("f", to_json(f), "f = " + entries_text(f.entries(), 1));
    }
    if (!doc.contains("g")) {
      const GVector g = h_to_g(*h);
      record("g", to_json(g), "g = " + entries_text(g.entries()));
    }
    doc["valid"] = true;
    emit(config, out, doc, text + "valid: simplicial polytope vectors\n");
    return 0;
  } catch (const ValidationError& e) {
    doc["valid"] = false;
    doc["error"] = e.what();
    emit(config, out, doc, text + "invalid: " + e.what() + "\n");
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
}

// ----------------------------------------------------------------- bound

struct BoundArgs {
  std::string g, h, lex;
  std::optional<long> d, k, j, n, cumulative;
  std::optional<std::string> g1, gk, gk_free;
  bool total = false, per_degree = false, vertex_count = false, dimension_free = false;
  bool betti_table = false, max_growth = false;
};

template <typename T>
T need(const std::optional<T>& value, const char* what) {
  if (!value) throw ValidationError(std::string("this query needs ") + what);
  return *value;
}

int cmd_bound(const BoundArgs& a, const CliConfig& config, std::ostream& out) {
  std::optional<GVector> g;
  std::optional<long> d = a.d;
  if (!a.g.empty()) g = GVector(parse_list(a.g));
  if (!a.h.empty()) {
    const HVector h(parse_list(a.h));
    if (d && *d != h.d()) throw ValidationError("h-vector length does not match --d");
    d = h.d();
    g = h_to_g(h);
  }
  auto need_g = [&] {
    if (!g) throw ValidationError("this query needs --g or --h");
    return *g;
  };
  auto g1_value = [&] { return a.g1 ? parse_list(*a.g1).at(0) : need_g().g1(); };

  auto single = [&](const char* query, const Integer& value) {
    emit(config, out, {{"query", query}, {"value", integer_to_json(value)}}, value.str() + "\n");
    return 0;
  };

  if (a.total) return single("total", total_bound(need_g()));
  if (a.cumulative) return single("cumulative", cumulative_bound(need_g(), need(d, "--d"), *a.cumulative));
  if (a.vertex_count) return single("vertex-count", vertex_count_bound(g1_value(), need(d, "--d"), need(a.k, "--k")));
  if (a.dimension_free) return single("dimension-free", dimension_free_bound(g1_value(), need(a.k, "--k")));
  if (a.gk)
    return single("gk", gk_bound(parse_list(*a.gk).at(0), need(a.k, "--k"), need(a.j, "--j"), need(d, "--d")));
  if (a.gk_free)
    return single("gk-dimension-free", gk_dimension_free_bound(parse_list(*a.gk_free).at(0), need(a.k, "--k"),
                                                               need(a.j, "--j")));
  if (!a.lex.empty()) {
    const OSequence h(parse_list(a.lex), a.max_growth);
    const BettiTable table = betti_table_bound(h, need(a.n, "--n"));
    emit(config, out, to_json(table), render_betti(table));
    return 0;
  }
  if (a.betti_table) {
    const long dim = need(d, "--d");
    const GVector gv = need_g();
    const HVector h = g_to_h(gv, dim);
    const long n = dim + gv.g1().convert_to<long>() + 1;
    const BettiTable table = gorenstein_wlp_table(h, n, dim);
    emit(config, out, to_json(table), render_betti(table));
    return 0;
  }

  const auto report = bound_report(need_g(), need(d, "--d"));
  if (a.per_degree) {
    std::string text;
    for (const auto& [deg, value] : report.per_degree)
      text += "degree " + std::to_string(deg) + " (dim " + std::to_string(deg - 1) + "): " + value.str() + "\n";
    json doc = to_json(report);
    emit(config, out, {{"per_degree", doc["per_degree"]}, {"per_dimension", doc["per_dimension"]}}, text);
    return 0;
  }
  std::ostringstream text;
  text << "d = " << report.d << ", g = " << join(report.g.entries()) << "\n";
  text << "empty simplices by dimension:\n";
  for (const auto& [deg, value] : report.per_degree)
    text << "  dim " << deg - 1 << " (degree " << deg << "): " << value.str() << "\n";
  if (report.vanishing_range)
    text << "no empty simplices of dimension " << report.vanishing_range->first << ".."
         << report.vanishing_range->second << "\n";
  text << "N(k):";
  for (const auto& [k, value] : report.cumulative) text << " " << k << ":" << value.str();
  text << "\ntotal: " << report.total.str() << "\n";
  emit(config, out, to_json(report), text.str());
  return 0;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  ComplexSource source;
  bool betti = false, nonfaces = false, fvector = false, hvector = false, homology = false;
};

HomologyOptions homology_options(const CliConfig& config) {
  return {config.characteristic, config.vertex_limit, config.threads};
}

int cmd_oracle(const OracleArgs& a, const CliConfig& config, std::ostream& out) {
  const auto [name, c] = build_complex(a.source, config);
  json doc = {{"complex", name}};
  std::ostringstream text;
  const bool any = a.betti || a.nonfaces || a.fvector || a.hvector || a.homology;
  if (a.fvector || !any) {
    const FVector f = f_vector(c);
    doc["f"] = to_json(f);
    text << "f = " << entries_text(f.entries(), 1) << "\n";
  }
  if (a.hvector) {
    const FVector f = f_vector(c);
    const IntVector h = f_to_h_coefficients(f.entries(), f.d());
    doc["h"] = to_json(HVector(h));
    text << "h = " << join(h) << "\n";
  }
  if (a.nonfaces) {
    const auto missing = minimal_nonfaces(c);
    json list = json::array();
    text << missing.size() << " minimal non-faces:\n";
    for (const auto& s : missing) {
      std::vector<int> one_based;
      for (int v : s) one_based.push_back(v + 1);
      list.push_back(one_based);
      text << "  " << vertices_text(s) << "  (dim " << s.size() - 1 << ")\n";
    }
    doc["nonfaces"] = list;
  }
  if (a.homology) {
    json ranks = json::object();
    text << "reduced homology ranks (char " << config.characteristic << "):";
    for (const auto& [k, rank] : reduced_homology_ranks(c, homology_options(config))) {
      ranks[std::to_string(k)] = rank;
      text << " H~" << k << "=" << rank;
    }
    text << "\n";
    doc["homology"] = ranks;
  }
  if (a.betti) {
    const BettiTable table = hochster_betti(c, homology_options(config));
    doc["betti"] = to_json(table);
    text << "Betti table of K[" << name << "], char " << config.characteristic << ":\n" << render_betti(table);
  }
  emit(config, out, doc, text.str());
  return 0;
}

// --------------------------------------------------------------- compare

struct CompareArgs {
  ComplexSource source;
  bool betti = false;
};

int cmd_compare(const CompareArgs& a, const CliConfig& config, std::ostream& out) {
  const auto [name, c] = build_complex(a.source, config);
  const FVector f = f_vector(c);
  const long d = f.d();
  const HVector h = f_to_h(f);
  const GVector g = h_to_g(h);  // rejects complexes whose h-vector is not an SI-sequence
  const auto report = bound_report(g, d);

  std::map<long, Integer> actual;  // generator degree -> count
  for (const auto& s : minimal_nonfaces(c)) actual[static_cast<long>(s.size())] += 1;

  long violations = 0;
  std::ostringstream text;
  json doc = {{"complex", name}, {"d", d}, {"f", to_json(f)}, {"h", to_json(h)}, {"g", to_json(g)}};
  text << name << ": d = " << d << ", f = " << entries_text(f.entries(), 1) << ", h = " << join(h.entries())
       << ", g = " << join(g.entries()) << "\n";

  auto verdict = [&](const Integer& have, const Integer& bound) {
    if (have > bound) {
      ++violations;
      return std::string("VIOLATION");
    }
    return std::string(have == bound && bound > 0 ? "attained" : "ok");
  };

  json rows = json::array();
  text << "empty simplices per dimension (actual / bound):\n";
  for (const auto& [deg, bound] : report.per_degree) {
    const Integer have = actual.count(deg) ? actual[deg] : Integer(0);
    const std::string status = verdict(have, bound);
    rows.push_back({{"degree", deg},
                    {"dimension", deg - 1},
                    {"actual", integer_to_json(have)},
                    {"bound", integer_to_json(bound)},
                    {"status", status}});
    text << "  dim " << deg - 1 << ": " << have.str() << " / " << bound.str() << "  " << status << "\n";
  }
  doc["per_degree"] = rows;

  json cumulative = json::array();
  Integer running = 0;
  text << "N(k) (actual / bound):\n";
  for (long k = 1; k < d; ++k) {
    running += actual.count(k + 1) ? actual[k + 1] : Integer(0);
    const Integer bound = report.cumulative.at(k);
    std::string status = verdict(running, bound);
    json row = {{"k", k}, {"actual", integer_to_json(running)}, {"bound", integer_to_json(bound)}, {"status", status}};
    text << "  k = " << k << ": " << running.str() << " / " << bound.str() << "  " << status;
    if (g.u() >= 1) {
      const Integer vc = vertex_count_bound(g.g1(), d, k);
      row["vertex_count_bound"] = integer_to_json(vc);
      row["vertex_count_status"] = verdict(running, vc);
      text << "; vertex-count bound " << vc.str() << " " << row["vertex_count_status"].get<std::string>();
    }
    text << "\n";
    cumulative.push_back(row);
  }
  doc["cumulative"] = cumulative;

  Integer all = 0;
  for (const auto& [deg, count] : actual) all += count;
  const std::string total_status = verdict(all, report.total);
  doc["total"] = {{"actual", integer_to_json(all)}, {"bound", integer_to_json(report.total)}, {"status", total_status}};
  text << "total: " << all.str() << " / " << report.total.str() << "  " << total_status << "\n";

  // bounds from a single g_k, for every admissible (k, j)
  json gk_rows = json::array();
  for (long k = 1; k <= g.u(); ++k)
    for (long j = k; j + k <= d; ++j) {
      const Integer have = actual.count(j + 1) ? actual[j + 1] : Integer(0);
      const Integer bound = gk_bound(g.at(k), k, j, d);
      const Integer loose = gk_dimension_free_bound(g.at(k), k, j);
      const std::string status = verdict(have, bound);
      if (bound > loose) ++violations;
      gk_rows.push_back({{"k", k},
                         {"j", j},
                         {"actual", integer_to_json(have)},
                         {"bound", integer_to_json(bound)},
                         {"dimension_free_bound", integer_to_json(loose)},
                         {"status", status}});
    }
  doc["gk"] = gk_rows;
  if (!gk_rows.empty()) text << "g_k bounds checked: " << gk_rows.size() << "\n";

  if (a.betti) {
    if (config.characteristic != 0) throw PreconditionError("Gorenstein Betti bounds hold in characteristic 0");
    const BettiTable have = hochster_betti(c, homology_options(config));
    const BettiTable bound = gorenstein_wlp_table(h, c.n_vertices(), d);
    long bad = 0, attained = 0;
    for (const auto& [key, value] : have.entries()) {
      const Integer limit = bound.at(key.first, key.second);
      if (value > limit) ++bad;
      if (value == limit) ++attained;
    }
    violations += bad;
    doc["betti"] = {{"actual", to_json(have)}, {"bound", to_json(bound)}, {"violations", bad}, {"attained", attained}};
    text << "Betti table:\n" << render_betti(have) << "Betti bound:\n" << render_betti(bound);
    text << "Betti entries attaining the bound: " << attained << ", violations: " << bad << "\n";
  }

  doc["violations"] = violations;
  text << (violations ? "BOUND VIOLATED\n" : "all bounds satisfied\n");
  emit(config, out, doc, text.str());
  if (violations) throw BoundViolation(std::to_string(violations) + " bound violation(s) on " + name);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bounds on empty simplices of simplicial polytopes and on graded Betti numbers"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  CliConfig config;
  std::string format = "table";
  std::optional<int> vertex_limit;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--char", config.characteristic, "field characteristic for homology: 0 or a prime");
  app.add_option("--vertex-limit", vertex_limit,
                 "largest complex the oracle accepts (default: $EMPTY_SIMPLEX_VERTEX_LIMIT or 12)");
  app.add_option("--threads", config.threads, "worker threads for Hochster's formula");
  app.add_flag("-v,--verbose", config.verbosity, "more output");

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand(
      "convert", "convert between f-, h- and g-vectors; f is given without f_{-1}, h and g with h_0 = g_0 = 1");
  auto* fopt = convert_cmd->add_option("--f", convert.f, "f_0,...,f_{d-1}");
  auto* hopt = convert_cmd->add_option("--h", convert.h, "h_0,...,h_d");
  auto* gopt = convert_cmd->add_option("--g", convert.g, "g_0,...,g_u");
  convert_cmd->add_option("--d", convert.d, "polytope dimension");
  fopt->excludes(hopt)->excludes(gopt);
  hopt->excludes(gopt);

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "bounds on empty simplices and Betti numbers");
  bound_cmd->add_option("--g", bound.g, "g-vector g_0,...,g_u");
  bound_cmd->add_option("--h", bound.h, "h-vector h_0,...,h_d (converted to g)");
  bound_cmd->add_option("--d", bound.d, "polytope dimension");
  bound_cmd->add_option("--g1", bound.g1, "g_1 = f_0 - d - 1");
  bound_cmd->add_option("--k", bound.k, "dimension cut-off k, or index of g_k");
  bound_cmd->add_option("--j", bound.j, "simplex dimension j");
  bound_cmd->add_option("--n", bound.n, "number of variables for --lex");
  auto* queries = bound_cmd->add_option_group("query");
  queries->add_flag("--total", bound.total, "total number of empty simplices");
  queries->add_flag("--per-degree", bound.per_degree, "bound per generator degree / simplex dimension");
  queries->add_option("--cumulative", bound.cumulative, "N(k) for the given k");
  queries->add_flag("--vertex-count", bound.vertex_count, "N(k) from g_1, d, k only");
  queries->add_flag("--dimension-free", bound.dimension_free, "N(k) from g_1, k only");
  queries->add_option("--gk", bound.gk, "empty j-simplices given g_k <= B (needs --k --j --d)");
  queries->add_option("--gk-dimension-free", bound.gk_free, "empty j-simplices given g_k <= B, any d >= j+k");
  queries->add_flag("--betti-table", bound.betti_table, "Betti number bounds of the polytope");
  queries->add_option("--lex", bound.lex, "Betti table of the lex ideal with this Hilbert function (needs --n)");
  queries->require_option(0, 1);
  bound_cmd->add_flag("--max-growth", bound.max_growth, "--lex sequence continues by maximal growth");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force computations on a simplicial complex");
  add_source_options(oracle_cmd, oracle.source);
  oracle_cmd->add_flag("--betti", oracle.betti, "graded Betti numbers via Hochster's formula");
  oracle_cmd->add_flag("--nonfaces", oracle.nonfaces, "minimal non-faces (empty simplices)");
  oracle_cmd->add_flag("--fvector", oracle.fvector, "f-vector");
  oracle_cmd->add_flag("--hvector", oracle.hvector, "h-vector");
  oracle_cmd->add_flag("--homology", oracle.homology, "reduced homology ranks");

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "check a polytope boundary against every bound");
  add_source_options(compare_cmd, compare.source);
  compare_cmd->add_flag("--betti", compare.betti, "also compare the full Betti table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    config.output_format = format == "json" ? OutputFormat::json : OutputFormat::table;
    validate_characteristic(config.characteristic);
    config.vertex_limit = vertex_limit ? *vertex_limit : default_vertex_limit();
    if (config.vertex_limit < 1) throw ValidationError("--vertex-limit must be >= 1");
    if (config.threads < 1) config.threads = 1;

    if (convert_cmd->parsed()) {
      if (convert.f.empty() && convert.h.empty() && convert.g.empty())
        throw ValidationError("convert needs one of --f, --h, --g");
      return cmd_convert(convert, config, out, err);
    }
    if (bound_cmd->parsed()) return cmd_bound(bound, config, out);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle, config, out);
    if (compare_cmd->parsed()) return cmd_compare(compare, config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace esb::cli
