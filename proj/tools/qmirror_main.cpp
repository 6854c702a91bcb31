// Command-line front end: compute a named q-series of the mirror engine for a
// chosen model and truncation order, or run verification suites, emitting
// JSON, CSV, or text.  Exit codes: 0 success, 1 verification failure,
// 2 usage or validation error.
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmirror/hypergeom.hpp"
#include "qmirror/mirror.hpp"
#include "qmirror/model.hpp"
#include "qmirror/report.hpp"
#include "qmirror/verify.hpp"

namespace {

using namespace qmirror;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<long> parse_degrees(const std::string& s) {
  std::vector<long> out;
  for (const std::string& p : split_commas(s)) {
    std::size_t pos = 0;
    long v = std::stol(p, &pos);
    if (pos != p.size())
      throw std::invalid_argument("bad entry '" + p + "' in degree list");
    out.push_back(v);
  }
  return out;
}

std::vector<Rat> parse_direction(const std::string& s) {
  std::vector<Rat> out;
  for (const std::string& p : split_commas(s)) out.push_back(Rat(p));
  return out;
}

struct CommonOpts {
  int n = 0;
  std::string a_csv;
  int order = 4;
  std::uint64_t seed = 0;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--n", o.n, "dimension parameter of the model")->required();
  cmd->add_option("--a", o.a_csv, "comma-separated degrees, e.g. 5 or 3,3")
      ->required();
  cmd->add_option("--order", o.order,
                  "truncation order (coefficients of q^0..q^order)");
  cmd->add_option("--seed", o.seed,
                  "seed for generated directions and randomized checks");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

Model make_model(const CommonOpts& o) {
  Model m;
  m.n = o.n;
  m.a = parse_degrees(o.a_csv);
  m.validate();
  if (o.order < 0) throw std::invalid_argument("order must be >= 0");
  return m;
}

QSeries<Rat> compute_series(const Model& m, int order, const std::string& name) {
  if (name == "L") return series_L(m, order);
  if (name == "mu") return series_mu(m, order);
  if (name == "A") return series_A(m, order);
  if (name == "G10") return series_G10(m, order);
  if (name == "B_sum") return b_block_closed(m, order);
  if (name == "main2_rhs") return series_rhs_total(m, order);
  std::size_t colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    std::string tail = name.substr(colon + 1);
    if (head == "Idot" || head == "Iddot") {
      std::size_t pos = 0;
      int p = std::stoi(tail, &pos);
      if (pos != tail.size() || p < 0)
        throw std::invalid_argument("series index must be a non-negative integer");
      HyperStack st = build_stack(m, order, p);
      return head == "Idot" ? st.idot.at(p) : st.iddot.at(p);
    }
  }
  throw std::invalid_argument(
      "unknown series '" + name +
      "'; known: L, mu, Idot:p, Iddot:p, A, G10, B_sum, main2_rhs");
}

int run_series(const CommonOpts& o, const std::string& name) {
  SeriesReport r;
  r.model = make_model(o);
  r.order = o.order;
  r.seed = o.seed;
  r.name = name;
  r.series = compute_series(r.model, o.order, name);
  if (o.format == "json") std::cout << render_series_json(r);
  else if (o.format == "csv") std::cout << render_series_csv(r);
  else std::cout << render_series_text(r);
  return 0;
}

int run_verify(const CommonOpts& o, const std::vector<std::string>& dirs,
               const std::string& suite) {
  VerifyConfig cfg;
  cfg.model = make_model(o);
  cfg.order = o.order;
  cfg.seed = o.seed;
  if (dirs.empty()) {
    cfg.directions = default_directions(cfg.model.n, o.seed);
  } else {
    for (const std::string& d : dirs) {
      std::vector<Rat> v = parse_direction(d);
      if (static_cast<int>(v.size()) != cfg.model.n)
        throw std::invalid_argument("direction needs " +
                                    std::to_string(cfg.model.n) +
                                    " components, got " +
                                    std::to_string(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
          throw std::invalid_argument("direction entries must be nonzero");
        for (std::size_t k = i + 1; k < v.size(); ++k)
          if (v[i] == v[k])
            throw std::invalid_argument("direction entries must be distinct");
      }
      cfg.directions.push_back(v);
    }
  }
  VerifyReport rep;
  rep.model = cfg.model;
  rep.order = o.order;
  rep.seed = o.seed;
  rep.suite = suite;
  rep.checks = run_suite(suite, cfg);
  if (o.format == "json") std::cout << render_verify_json(rep);
  else if (o.format == "csv") std::cout << render_verify_csv(rep);
  else std::cout << render_verify_text(rep);
  return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic engine for hypergeometric q-series, equivariant "
      "residues, and the genus-one series of one-parameter complete "
      "intersections."};
  app.require_subcommand(1);

  CommonOpts so;
  std::string series_name;
  CLI::App* series_cmd = app.add_subcommand("series", "compute a named q-series");
  series_cmd
      ->add_option("name", series_name,
                   "one of L, mu, Idot:p, Iddot:p, A, G10, B_sum, main2_rhs")
      ->required();
  add_common(series_cmd, so);

  CommonOpts go;
  CLI::App* g1_cmd =
      app.add_subcommand("g1", "compute the genus-one series (series G10)");
  add_common(g1_cmd, go);

  CommonOpts vo;
  std::vector<std::string> dir_opts;
  std::string suite = "all";
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  add_common(verify_cmd, vo);
  verify_cmd->add_option("--direction", dir_opts,
                         "comma-separated ray direction, repeatable");
  verify_cmd->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"all", "hyper", "equivariant", "residue", "mirror"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (series_cmd->parsed()) return run_series(so, series_name);
    if (g1_cmd->parsed()) return run_series(go, "G10");
    return run_verify(vo, dir_opts, suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
