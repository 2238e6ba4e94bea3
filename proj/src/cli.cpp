#include "turan/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/blocks.hpp"
#include "turan/cliques.hpp"
#include "turan/constructors.hpp"
#include "turan/cycles.hpp"
#include "turan/errors.hpp"
#include "turan/family.hpp"
#include "turan/formulas.hpp"
#include "turan/graph_io.hpp"
#include "turan/matching.hpp"
#include "turan/optimizer.hpp"
#include "turan/oracle.hpp"

namespace turan::cli {
namespace {

using Json = nlohmann::ordered_json;

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int oracle_limit() {
  const char* env = std::getenv("TURAN_ORACLE_MAX_N");
  if (env == nullptr || *env == '\0') return 7;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("TURAN_ORACLE_MAX_N is not an integer: '") + env + "'");
  }
}

Json value_json(const ExtremalValue& v) {
  Json j;
  j["value"] = big_json(v.value);
  j["case"] = regime_name(v.regime);
  j["witness"] = v.witness.describe();
  j["witness_order"] = v.witness_order;
  j["asymptotic_warning"] = v.asymptotic_warning;
  return j;
}

ExtremalValue compute_value(Parity parity, std::int64_t n, std::int64_t k, std::int64_t s, std::int64_t r,
                            bool edges_only) {
  if (parity == Parity::odd) return ex_odd(n, k, s, r);
  if (edges_only || k == 2) {
    detail::require(r == 2, "the edge formula counts K_2; use r = 2");
    return ex_even_edges(n, k, s);
  }
  return ex_even(n, k, s, r);
}

struct Params {
  std::int64_t n = 0, k = 0, s = 0, r = 2, q = 0, a = 0;
};

void need(const CLI::App& app, std::initializer_list<const char*> names, const std::string& what) {
  for (const char* name : names)
    if (app.count(name) == 0) throw ParseError(what + " needs " + name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Turan numbers for long cycles and bounded matchings", "turan"};
  app.require_subcommand(1);

  Params p;
  std::string parity_text;
  bool edges_only = false;
  bool stable = false;

  auto* compute = app.add_subcommand("compute", "Evaluate a closed-form extremal value");
  compute->add_option("--parity", parity_text, "odd (no cycle of length >= 2k+1) or even (>= 2k)")->required();
  compute->add_option("--n", p.n, "order")->required();
  compute->add_option("--k", p.k, "half cycle parameter")->required();
  compute->add_option("--s", p.s, "matching bound")->required();
  compute->add_option("--r", p.r, "clique order counted")->capture_default_str();
  compute->add_flag("--edges-only", edges_only, "even parity: use the edge formula with its St1/St2 witness");
  compute->add_flag("--stable", stable, "accepted for symmetry; compute output has no volatile fields");

  std::string witness;
  std::string format_text = "graph6";
  std::string output_path;
  std::string spec_path;
  auto* construct = app.add_subcommand("construct", "Build a witness graph");
  construct
      ->add_option("--witness", witness,
                   "H | extremal-odd | extremal-even | st1 | st2 | g0 | multipartite | block-star-spec-file")
      ->required();
  construct->add_option("--n", p.n);
  construct->add_option("--k", p.k);
  construct->add_option("--s", p.s);
  construct->add_option("--r", p.r)->capture_default_str();
  construct->add_option("--q", p.q);
  construct->add_option("--a", p.a);
  construct->add_option("--spec", spec_path, "block-star spec file");
  construct->add_option("--format", format_text, "graph6 or edgelist")->capture_default_str();
  construct->add_option("--output", output_path, "write here instead of stdout");

  std::string graph_path;
  int min_order = 0;
  bool want_certificate = false;
  auto* verify = app.add_subcommand("verify", "Check a graph against a forbidden family");
  verify->add_option("--graph", graph_path, "graph6 or edge-list file ('-' for stdin)")->required();
  verify->add_option("--k", p.k, "forbid cycles of length >= k");
  verify->add_option("--s", p.s, "matching bound");
  verify->add_option("--r", p.r, "clique order counted")->capture_default_str();
  verify->add_option("--order", min_order, "order for edge lists with trailing isolated vertices");
  verify->add_flag("--certificate", want_certificate, "include a Berge-Tutte certificate when nu <= s");

  unsigned jobs = 1;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximum over all graphs of order n");
  oracle->add_option("--n", p.n)->required();
  oracle->add_option("--k", p.k, "forbid cycles of length >= k");
  oracle->add_option("--s", p.s, "matching bound");
  oracle->add_option("--r", p.r)->capture_default_str();
  oracle->add_option("--jobs", jobs, "worker threads, 0 for all cores")->capture_default_str();
  oracle->add_flag("--stable", stable, "omit elapsed_ms");

  std::int64_t n_from = 0, n_to = 0;
  bool with_oracle = false;
  auto* table = app.add_subcommand("table", "Formula values over a range of n");
  table->add_option("--parity", parity_text)->required();
  table->add_option("--k", p.k, "half cycle parameter")->required();
  table->add_option("--s", p.s)->required();
  table->add_option("--r", p.r)->capture_default_str();
  table->add_option("--n-from", n_from)->required();
  table->add_option("--n-to", n_to)->required();
  table->add_flag("--edges-only", edges_only);
  table->add_flag("--oracle", with_oracle, "add exhaustive values (small n only)");
  table->add_option("--jobs", jobs)->capture_default_str();

  auto* self = app.add_subcommand("selfcheck", "Run the built-in invariant suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseOrIo;
  }

  try {
    if (*compute) {
      const auto parity = parse_parity(parity_text);
      const auto v = compute_value(parity, p.n, p.k, p.s, p.r, edges_only);
      Json j;
      j["parity"] = parity_name(parity);
      j["n"] = p.n;
      j["k"] = p.k;
      j["s"] = p.s;
      j["r"] = p.r;
      const Json body = value_json(v);
      for (const auto& [key, val] : body.items()) j[key] = val;
      out << j.dump(2) << '\n';
      return kOk;
    }

    if (*construct) {
      const auto format = io::parse_format(format_text);
      Graph g;
      if (witness == "H") {
        need(*construct, {"--n", "--k", "--a"}, "witness H");
        g = build_H({p.n, p.k, p.a});
      } else if (witness == "extremal-odd") {
        need(*construct, {"--n", "--k", "--s"}, "witness extremal-odd");
        g = build_extremal_odd(p.n, p.k, p.s, p.r);
      } else if (witness == "extremal-even") {
        need(*construct, {"--n", "--k", "--s"}, "witness extremal-even");
        g = build_block_star(compute_value(Parity::even, p.n, p.k, p.s, p.r, false).witness);
      } else if (witness == "st1" || witness == "st2") {
        need(*construct, {"--n", "--k", "--q"}, "witness " + witness);
        g = witness == "st1" ? build_St1(p.n, p.k, p.q) : build_St2(p.n, p.k, p.q);
      } else if (witness == "g0") {
        need(*construct, {"--n", "--k"}, "witness g0");
        g = build_woodall_G0(p.n, p.k);
      } else if (witness == "multipartite") {
        need(*construct, {"--n", "--k", "--s"}, "witness multipartite");
        g = build_multipartite_G(p.n, p.k, p.s);
      } else if (witness == "block-star-spec-file") {
        need(*construct, {"--spec"}, "witness block-star-spec-file");
        g = build_block_star(BlockStarSpec::parse(read_text(spec_path)));
      } else {
        throw PreconditionError("unknown witness '" + witness + "'");
      }
      const std::string text = io::write_graph(g, format);
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) throw ParseError("cannot write '" + output_path + "'");
        file << text;
        if (!file) throw ParseError("write to '" + output_path + "' failed");
      }
      return kOk;
    }

    if (*verify) {
      const Graph g = io::read_graph(read_text(graph_path), min_order);
      ForbiddenFamily fam;
      if (verify->count("--k")) fam.cycle_min_len = static_cast<int>(p.k);
      if (verify->count("--s")) fam.matching_bound = static_cast<int>(p.s);
      fam.clique_order = static_cast<int>(p.r);
      fam.validate();
      const auto report = is_family_free(g, fam);
      Json j;
      j["order"] = g.order();
      j["edges"] = g.size();
      j["family"] = fam.describe();
      j["family_free"] = report.family_free;
      j["report"] = report.describe(fam);
      j["matching_number"] = report.matching_number;
      j["N_r"] = count_cliques(g, fam.clique_order);
      if (report.cycle_witness) j["cycle_witness"] = *report.cycle_witness;
      if (report.matching_witness) {
        Json edges = Json::array();
        for (const auto& e : *report.matching_witness) edges.push_back({e.u, e.v});
        j["matching_witness"] = edges;
      }
      if (want_certificate) {
        detail::require(fam.matching_bound.has_value(), "--certificate needs --s");
        const int s = *fam.matching_bound;
        auto cert = g.order() <= kCertificateSubsetLimit ? berge_tutte_certificate(g, s)
                                                         : gallai_edmonds_certificate(g, s);
        if (cert) {
          Json c;
          c["X"] = cert->x;
          c["component_sizes"] = cert->component_sizes();
          c["slack"] = cert->slack;
          c["valid"] = validate_certificate(g, *cert);
          j["certificate"] = c;
        } else {
          j["certificate"] = nullptr;
        }
      }
      out << j.dump(2) << '\n';
      return kOk;
    }

    if (*oracle) {
      const int limit = oracle_limit();
      if (p.n > limit)
        throw SizeLimitError("oracle order " + std::to_string(p.n) + " exceeds TURAN_ORACLE_MAX_N=" +
                             std::to_string(limit));
      ForbiddenFamily fam;
      if (oracle->count("--k")) fam.cycle_min_len = static_cast<int>(p.k);
      if (oracle->count("--s")) fam.matching_bound = static_cast<int>(p.s);
      fam.clique_order = static_cast<int>(p.r);
      const auto res = brute_force_ex(static_cast<int>(p.n), fam, jobs);
      out << oracle_json(res, stable) << '\n';
      return kOk;
    }

    if (*table) {
      const auto parity = parse_parity(parity_text);
      detail::require(n_from >= 1 && n_from <= n_to, "table needs 1 <= n-from <= n-to");
      if (with_oracle) {
        const int limit = oracle_limit();
        if (n_to > limit)
          throw SizeLimitError("oracle order " + std::to_string(n_to) + " exceeds TURAN_ORACLE_MAX_N=" +
                               std::to_string(limit));
      }
      std::vector<std::vector<std::string>> cells;
      cells.push_back({"n", "value", "case", "warning"});
      if (with_oracle) cells.front().push_back("oracle");
      std::optional<RegionReport> region;
      if (with_oracle)
        region = verify_formula_region(static_cast<int>(p.k), static_cast<int>(p.s), static_cast<int>(p.r), parity,
                                       static_cast<int>(n_from), static_cast<int>(n_to), jobs);
      for (std::int64_t n = n_from; n <= n_to; ++n) {
        std::vector<std::string> row{std::to_string(n)};
        try {
          const auto v = compute_value(parity, n, p.k, p.s, p.r, edges_only);
          row.insert(row.end(), {v.value.str(), regime_name(v.regime), v.asymptotic_warning ? "n<6s" : ""});
        } catch (const PreconditionError&) {
          if (n == n_from && n_from == n_to) throw;
          row.insert(row.end(), {"-", "-", "below witness order"});
        }
        if (region) row.push_back(std::to_string(region->rows[static_cast<std::size_t>(n - n_from)].oracle));
        cells.push_back(std::move(row));
      }
      std::vector<std::size_t> width(cells.front().size(), 0);
      for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
          std::ostringstream cell;
          if (c < 2 || c == 4)
            cell << std::setw(static_cast<int>(width[c])) << row[c];
          else
            cell << std::left << std::setw(static_cast<int>(width[c])) << row[c];
          line += (c ? "  " : "") + cell.str();
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
      }
      if (region) {
        if (region->agreement_from)
          out << "formula matches oracle from n=" << *region->agreement_from << '\n';
        else
          out << "formula does not match oracle at n=" << n_to << '\n';
      }
      return kOk;
    }

    if (*self) return selfcheck(out) ? kOk : kPrecondition;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseOrIo;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

bool selfcheck(std::ostream& out) {
  bool all = true;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const std::exception& e) {
      why = e.what();
    }
    out << (ok ? "PASS " : "FAIL ") << name << (why.empty() ? "" : ": " + why) << '\n';
    all = all && ok;
  };

  check("tau(k,2) = 2k for k <= 12", [] {
    for (int k = 2; k <= 12; ++k)
      if (tau(k, 2) != 2 * k) return false;
    return true;
  });
  check("e(H_{n,k,a}) = f_2(n,k,a) and nu = floor(k/2)", [] {
    for (int k = 4; k <= 9; ++k)
      for (int a = 2; 2 * a <= k; ++a)
        for (int n = k; n <= 16; ++n) {
          const Graph h = build_H({n, k, a});
          if (BigInt(h.size()) != f_value(n, k, a, 2) || max_matching(h) != k / 2) return false;
        }
    return true;
  });
  check("odd witnesses attain the formula", [] {
    for (int k = 2; k <= 4; ++k)
      for (int r = 2; r <= k + 1; ++r)
        for (int s = 2 * k + 1; s <= 3 * k; ++s) {
          const auto v = ex_odd(odd_witness_order(k, s, r) + 3, k, s, r);
          const Graph g = build_block_star(v.witness);
          ForbiddenFamily fam{2 * k + 1, s, r};
          if (BigInt(count_cliques(g, r)) != v.value || !is_family_free(g, fam).family_free) return false;
        }
    return true;
  });
  check("even offsets agree between the general and the edge formula", [] {
    for (int k = 3; k <= 6; ++k)
      for (int s = k - 1; s <= 3 * k; ++s) {
        const auto a = ex_even(200, k, s, 2);
        const auto b = ex_even_edges(200, k, s);
        if (a.value != b.value) return false;
      }
    return true;
  });
  check("St1/St2 edge counts", [] {
    for (int k = 2; k <= 5; ++k)
      for (int q = 1; q <= 4; ++q) {
        const std::int64_t n = 2 * k + (q - 1) * (2 * k - 2) + 2;
        const BigInt base = BigInt(k - 1) * n - binom(k, 2) + BigInt(k - 1) * (q - 1);
        if (BigInt(build_St1(n, k, q).size()) != base || BigInt(build_St2(n, k, q).size()) != base + 1)
          return false;
      }
    return true;
  });
  check("Woodall G0 attains the bound and has no long cycle", [] {
    for (int k = 3; k <= 8; ++k)
      for (int n = 1; n <= 20; ++n) {
        const Graph g = build_woodall_G0(n, k);
        if (BigInt(g.size()) != woodall_bound(n, k) || has_cycle_geq(g, k)) return false;
      }
    return true;
  });
  check("graph6 round trip", [] {
    const Graph g = build_extremal_odd(23, 3, 9, 3);
    return io::from_graph6(io::to_graph6(g)) == g && io::from_edgelist(io::to_edgelist(g), g.order()) == g;
  });
  check("star transform preserves clique counts", [] {
    const Graph g = build_woodall_G0(13, 5);
    const auto d = block_decomposition(g);
    for (std::size_t b = 0; b < d.blocks.size(); ++b)
      for (Vertex u : d.blocks[b]) {
        const Graph st = star_transform(g, b, u);
        for (int r = 2; r <= 4; ++r)
          if (count_cliques(st, r) != count_cliques(g, r)) return false;
      }
    return true;
  });
  check("oracle ex(6, {M_3}) = 10 and ex(7, {C_>=4, M_3}) = 7", [] {
    return brute_force_ex(6, ForbiddenFamily{std::nullopt, 2, 2}).max == 10 &&
           brute_force_ex(7, ForbiddenFamily{4, 2, 2}).max == 7;
  });
  return all;
}

}  // namespace turan::cli
