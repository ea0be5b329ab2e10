// furst: scheme-theoretic incidence experiments over finite fields.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "furst/borel.hpp"
#include "furst/degen.hpp"
#include "furst/fverify.hpp"
#include "furst/ideal_io.hpp"
#include "furst/incidence.hpp"
#include "furst/xscheme.hpp"

using json = nlohmann::json;
using namespace furst;

namespace {

Field field_from_spec(const std::string& spec) {
  auto [p, e] = parse_field_spec(spec);
  return Field::create(p, e);
}

Scheme load_scheme(const std::string& path) { return Scheme(read_ideal_file(path)); }

std::vector<int> parse_chart_list(const std::string& text) {
  std::vector<int> vars;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) vars.push_back(std::stoi(tok) - 1);  // CLI is 1-based
  }
  return vars;
}

json ideal_to_json(const Ideal& I) {
  json j;
  const Field& F = I.ring.field();
  j["field"] = F.e() > 1 ? std::to_string(F.p()) + "^" + std::to_string(F.e())
                         : std::to_string(F.p());
  j["vars"] = I.ring.names();
  json gens = json::array();
  for (const auto& g : I.gens) gens.push_back(poly_print(g));
  j["generators"] = gens;
  return j;
}

json direction_to_json(const Direction& dir, const Field& F) {
  json rows = json::array();
  for (int i = 0; i < dir.k(); ++i) {
    json row = json::array();
    for (int jcol = 0; jcol < dir.n(); ++jcol) row.push_back(F.to_string(dir.basis.at(i, jcol)));
    rows.push_back(row);
  }
  return rows;
}

json radon_to_json(const RadonTable& t, const Field& F, int n, int k) {
  json j;
  j["k"] = k;
  json dirs = json::array();
  for (std::size_t i = 0; i < t.directions.size(); ++i) {
    json d;
    d["id"] = i;
    d["plucker"] = plucker_to_string(plucker(t.directions[i], F), n, k, F);
    d["richness"] = t.richness[i];
    json off = json::array();
    for (auto c : t.best_plane[i].offset) off.push_back(F.to_string(c));
    d["best_plane_offset"] = off;
    dirs.push_back(d);
  }
  j["directions"] = dirs;
  j["min_richness"] = t.min_richness();
  j["max_richness"] = t.max_richness();
  return j;
}

void print_radon_csv(const RadonTable& t, const Field& F, int n, int k) {
  std::cout << "direction_id,plucker,richness\n";
  for (std::size_t i = 0; i < t.directions.size(); ++i) {
    std::cout << i << ",\"" << plucker_to_string(plucker(t.directions[i], F), n, k, F) << "\","
              << t.richness[i] << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field Furstenberg set and incidence-scheme toolkit"};
  app.require_subcommand(1);

  std::string ideal_path, field_spec = "5", chart_spec, mode_name = "exhaustive";
  std::string order_name = "lex", format = "json";
  int n = 2, k = 1, d = 1, vars = 2, max_size = 10, trials = 16;
  long m = 1, bigN = 2;
  long long q = 3;
  std::uint64_t seed = 0;
  double constant = 1.0;
  long long budget = 10'000'000;

  // planes
  auto* planes = app.add_subcommand("planes", "list k-plane directions with Plucker coordinates");
  planes->add_option("--n", n, "ambient dimension")->required();
  planes->add_option("--k", k, "plane dimension")->required();
  planes->add_option("--field", field_spec, "field, e.g. 5 or 5^2")->required();
  planes->add_option("--format", format, "csv or json");
  planes->callback([&] {
    Field F = field_from_spec(field_spec);
    auto dirs = enumerate_directions(n, k, F);
    if (format == "csv") {
      std::cout << "direction_id,plucker\n";
      for (std::size_t i = 0; i < dirs.size(); ++i)
        std::cout << i << ",\"" << plucker_to_string(plucker(dirs[i], F), n, k, F) << "\"\n";
    } else {
      json j;
      j["count"] = dirs.size();
      json arr = json::array();
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        json dj;
        dj["id"] = i;
        dj["basis"] = direction_to_json(dirs[i], F);
        dj["plucker"] = plucker_to_string(plucker(dirs[i], F), n, k, F);
        arr.push_back(dj);
      }
      j["directions"] = arr;
      std::cout << j.dump(2) << "\n";
    }
  });

  // dilate
  auto* dil = app.add_subcommand("dilate", "dilation degeneration to the top-form ideal");
  dil->add_option("ideal", ideal_path, "ideal file")->required();
  dil->callback([&] {
    Scheme S = load_scheme(ideal_path);
    DilationResult r = dilate(S);
    json j;
    j["input"] = ideal_to_json(S.ideal());
    j["degenerate"] = ideal_to_json(Ideal(S.ring(), r.degenerate.basis().elems));
    j["degree"] = S.degree();
    j["degenerate_degree"] = r.degenerate.degree();
    json cert = json::array();
    for (auto [a, b] : r.degree_certificate) cert.push_back({a, b});
    j["degree_certificate"] = cert;
    std::cout << j.dump(2) << "\n";
  });

  // gin
  auto* ging = app.add_subcommand("gin", "generic initial ideal via extension-field sampling");
  ging->add_option("ideal", ideal_path, "ideal file")->required();
  ging->add_option("--trials", trials, "sampling budget");
  ging->add_option("--seed", seed, "PRNG seed");
  ging->add_option("--order", order_name, "lex (default) or grevlex");
  ging->callback([&] {
    Scheme S = load_scheme(ideal_path);
    int nv = S.ring().nvars();
    MonomialOrder ord = order_name == "grevlex" ? MonomialOrder::grevlex(nv) : MonomialOrder::lex(nv);
    try {
      GinResult r = gin(S, ord, trials, seed);
      json j;
      j["gin"] = ideal_to_json(r.gin.ideal());
      j["degree"] = r.gin.degree();
      j["trials_used"] = r.trials_used;
      j["field_extension_degree"] = r.field_extension_degree;
      j["borel_fixed"] = true;
      std::cout << j.dump(2) << "\n";
    } catch (const GinFailure& e) {
      json j;
      j["error"] = e.what();
      j["distinct_initial_ideals"] = e.distinct_initial_ideals;
      std::cout << j.dump(2) << "\n";
      std::exit(1);
    }
  });

  // borel verify
  auto* borel_cmd = app.add_subcommand("borel", "Borel-fixed monomial combinatorics");
  auto* bverify = borel_cmd->add_subcommand("verify", "frontier lemma over all Borel-fixed sets");
  bverify->add_option("--vars", vars, "number of variables")->required();
  bverify->add_option("--max-size", max_size, "largest set size")->required();
  bverify->callback([&] {
    long long checked = 0, violations = 0;
    enumerate_borel_sets(vars, max_size, [&](const BorelSet& L) {
      FrontierVerdict v = verify_frontier_lemma(L);
      ++checked;
      if (!v.holds) ++violations;
    });
    json j;
    j["checked"] = checked;
    j["violations"] = violations;
    std::cout << j.dump(2) << "\n";
  });

  // incidence / radon / rich / restriction
  auto add_ideal_k = [&](CLI::App* cmd) {
    cmd->add_option("--ideal", ideal_path, "ideal file")->required();
    cmd->add_option("--k", k, "plane dimension")->required();
  };

  auto* inc = app.add_subcommand("incidence", "per-direction richness table (CSV)");
  add_ideal_k(inc);
  long direction_id = -1;
  inc->add_option("--direction", direction_id, "restrict to one direction id");
  inc->callback([&] {
    Scheme S = load_scheme(ideal_path);
    const Field& F = S.ring().field();
    RadonTable t = radon_transform(S, k);
    if (direction_id >= 0) {
      std::cout << "direction_id,plucker,richness\n";
      std::cout << direction_id << ",\""
                << plucker_to_string(plucker(t.directions[direction_id], F), S.ring().nvars(), k, F)
                << "\"," << t.richness[direction_id] << "\n";
    } else {
      print_radon_csv(t, F, S.ring().nvars(), k);
    }
  });

  auto* radon_cmd = app.add_subcommand("radon", "full Radon/maximal transform (JSON)");
  add_ideal_k(radon_cmd);
  radon_cmd->callback([&] {
    Scheme S = load_scheme(ideal_path);
    RadonTable t = radon_transform(S, k);
    std::cout << radon_to_json(t, S.ring().field(), S.ring().nvars(), k).dump(2) << "\n";
  });

  auto* rich = app.add_subcommand("rich", "directions with an m-rich parallel plane");
  add_ideal_k(rich);
  rich->add_option("--m", m, "richness threshold")->required();
  rich->callback([&] {
    Scheme S = load_scheme(ideal_path);
    const Field& F = S.ring().field();
    RadonTable t = radon_transform(S, k);
    std::cout << "direction_id,plucker,richness\n";
    for (std::size_t i = 0; i < t.directions.size(); ++i)
      if (t.richness[i] >= m)
        std::cout << i << ",\"" << plucker_to_string(plucker(t.directions[i], F), S.ring().nvars(), k, F)
                  << "\"," << t.richness[i] << "\n";
  });

  auto* restr = app.add_subcommand("restriction", "both sides of the maximal-operator inequality");
  add_ideal_k(restr);
  restr->callback([&] {
    Scheme S = load_scheme(ideal_path);
    RestrictionSides s = restriction_sides(S, k);
    json j;
    j["lhs_norm"] = s.lhs;
    j["rhs_bound"] = s.rhs;
    j["holds"] = s.lhs <= s.rhs;
    std::cout << j.dump(2) << "\n";
  });

  // xmatrix / minors / xgr-test
  auto* xm = app.add_subcommand("xmatrix", "the chart matrix of the incidence map");
  add_ideal_k(xm);
  xm->add_option("--chart", chart_spec, "cutting variables, e.g. 1,2")->required();
  xm->callback([&] {
    Scheme S = load_scheme(ideal_path);
    int nv = S.ring().nvars();
    ChartMatrix M = build_chart_matrix(S, k, Chart::make(nv, k, parse_chart_list(chart_spec)));
    json j;
    j["N"] = M.N;
    json rows = json::array();
    Ring R = S.ring();
    for (const auto& mo : M.rows)
      rows.push_back(poly_print(Polynomial::from_terms(R, {{mo, R.field().one()}})));
    j["rows"] = rows;
    json cols = json::array();
    for (const auto& [a, mo] : M.cols) {
      json cj;
      cj["form_var"] = R.names()[a];
      cj["monomial"] = poly_print(Polynomial::from_terms(R, {{mo, R.field().one()}}));
      cols.push_back(cj);
    }
    j["cols"] = cols;
    json entries = json::array();
    for (int r = 0; r < M.N; ++r) {
      json row = json::array();
      for (std::size_t col = 0; col < M.cols.size(); ++col)
        row.push_back(poly_print(M.entry(r, static_cast<int>(col))));
      entries.push_back(row);
    }
    j["entries"] = entries;
    std::cout << j.dump(2) << "\n";
  });

  auto* minors_cmd = app.add_subcommand("minors", "generators of the minor ideal J_{X_m}");
  add_ideal_k(minors_cmd);
  minors_cmd->add_option("--chart", chart_spec, "cutting variables, e.g. 1,2")->required();
  minors_cmd->add_option("--m", m, "richness level")->required();
  minors_cmd->callback([&] {
    Scheme S = load_scheme(ideal_path);
    int nv = S.ring().nvars();
    ChartMatrix M = build_chart_matrix(S, k, Chart::make(nv, k, parse_chart_list(chart_spec)));
    MinorIdeal J = minor_ideal(M, m);
    MinorDegreeStats stats = minor_degree_stats(J);
    json j;
    j["m"] = J.m;
    j["minor_size"] = J.size;
    json gens = json::array();
    for (const auto& g : J.gens) gens.push_back(poly_print(g));
    j["generators"] = gens;
    j["max_chart_degree"] = stats.max_chart_degree;
    j["plucker_degree"] = stats.plucker_degree;
    j["degree_per_size"] = stats.degree_per_size;
    std::cout << j.dump(2) << "\n";
  });

  auto* xgr = app.add_subcommand("xgr-test", "does X_{m,k} equal the whole Grassmannian?");
  add_ideal_k(xgr);
  xgr->add_option("--m", m, "richness level")->required();
  xgr->callback([&] {
    Scheme S = load_scheme(ideal_path);
    int nv = S.ring().nvars();
    bool eq = x_equals_grassmannian(S, m, k);
    json j;
    j["x_equals_grassmannian"] = eq;
    json ranks = json::array();
    for (const auto& cut : k_subsets(nv, nv - k)) {
      ChartMatrix M = build_chart_matrix(S, k, Chart::make(nv, k, cut));
      json cj;
      json cvars = json::array();
      for (int a : cut) cvars.push_back(a + 1);
      cj["chart"] = cvars;
      cj["generic_rank"] = generic_rank_on_chart(M);
      ranks.push_back(cj);
    }
    j["chart_generic_ranks"] = ranks;
    if (eq) {
      EqualityBound eb = bound_from_equality(m, k, nv);
      j["size_lower_bound"] = eb.bound;
      j["bound_b"] = eb.b;
    }
    std::cout << j.dump(2) << "\n";
  });

  // verify group
  auto* verify = app.add_subcommand("verify", "desk-scale checks of the main bounds");

  auto* vfat = verify->add_subcommand("fatpoint", "fat-point sharpness");
  vfat->add_option("--n", n, "ambient dimension")->required();
  vfat->add_option("--d", d, "thickening order")->required();
  vfat->add_option("--k", k, "plane dimension")->required();
  vfat->add_option("--field", field_spec, "field (default 5)");
  vfat->callback([&] {
    Field F = field_from_spec(field_spec);
    Scheme S = make_fat_point(F, n, d);
    RadonTable t = radon_transform(S, k);
    json j;
    j["size"] = S.degree();
    j["expected_size"] = binomial(d + n, n);
    j["richness_min"] = t.min_richness();
    j["richness_max"] = t.max_richness();
    j["expected_richness"] = binomial(d + k, k);
    long long mm = binomial(d + k, k);
    j["x_equals_gr_at_m"] = x_equals_grassmannian(S, mm, k);
    j["x_equals_gr_at_m_plus_1"] = x_equals_grassmannian(S, mm + 1, k);
    std::cout << j.dump(2) << "\n";
  });

  auto* vrot = verify->add_subcommand("rotations", "union of q+1 rotated thick lines");
  vrot->add_option("--q", q, "field size (prime or prime power)")->required();
  vrot->add_option("--N", bigN, "line thickness")->required();
  vrot->callback([&] {
    auto [p, e] = parse_field_spec(std::to_string(q));
    Field F = Field::create(p, e);
    Scheme S = make_rotations_union(F, bigN);
    RadonTable t = radon_transform(S, 1);
    json j;
    j["size"] = S.degree();
    j["min_richness"] = t.min_richness();
    j["order_Nq"] = bigN * static_cast<long long>(F.q());
    j["ideal"] = ideal_to_json(S.ideal());
    std::cout << j.dump(2) << "\n";
  });

  auto* vbound = verify->add_subcommand("bound", "size vs richness report");
  vbound->add_option("--ideal", ideal_path, "ideal file")->required();
  vbound->add_option("--k", k, "plane dimension")->required();
  vbound->add_option("--C", constant, "constant to test against");
  vbound->callback([&] {
    Scheme S = load_scheme(ideal_path);
    BoundReport r = bound_report(S, k, constant);
    json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["k"] = r.k;
    j["m_star"] = r.m_star;
    j["size"] = r.size;
    j["ratio"] = r.ratio;
    j["refined_ratio"] = r.refined_ratio;
    j["constant"] = r.constant;
    j["pass"] = r.pass;
    j["reduced_lower_reference"] = r.reduced_lower_reference;
    std::cout << j.dump(2) << "\n";
  });

  auto* vind = verify->add_subcommand("induction", "the k -> k+1 induction step");
  vind->add_option("--ideal", ideal_path, "ideal file")->required();
  vind->add_option("--k", k, "plane dimension")->required();
  vind->callback([&] {
    Scheme S = load_scheme(ideal_path);
    InductionReport r = induction_step_check(S, k);
    json j;
    j["hypothesis_ok"] = r.hypothesis_ok;
    j["m"] = r.m;
    j["b"] = r.b;
    j["required"] = r.required;
    j["ok"] = r.ok();
    json rows = json::array();
    for (const auto& row : r.rows) {
      json rj;
      rj["direction"] = row.direction_index;
      rj["degree"] = row.degree;
      rj["inner_hypothesis_ok"] = row.inner_hypothesis_ok;
      rj["ok"] = row.ok;
      rows.push_back(rj);
    }
    j["planes"] = rows;
    std::cout << j.dump(2) << "\n";
  });

  // search
  auto* search = app.add_subcommand("search", "smallest reduced Furstenberg set");
  search->add_option("--q", q, "field size")->required();
  search->add_option("--n", n, "ambient dimension")->required();
  search->add_option("--k", k, "plane dimension")->required();
  search->add_option("--m", m, "richness requirement")->required();
  search->add_option("--mode", mode_name, "exhaustive, greedy or random");
  search->add_option("--budget", budget, "work budget");
  search->add_option("--seed", seed, "PRNG seed");
  search->callback([&] {
    auto [p, e] = parse_field_spec(std::to_string(q));
    Field F = Field::create(p, e);
    SearchMode mode = mode_name == "greedy"   ? SearchMode::Greedy
                      : mode_name == "random" ? SearchMode::Random
                                              : SearchMode::Exhaustive;
    SearchBudget sb;
    sb.max_examined = budget;
    SearchResult r = search_furstenberg_sets(F, n, k, m, mode, sb, seed);
    json j;
    j["feasible"] = r.feasible;
    j["size"] = r.size;
    j["is_true_minimum"] = r.is_true_minimum;
    j["examined"] = r.examined;
    json set = json::array();
    for (const auto& pt : r.set) {
      json pj = json::array();
      for (auto c : pt) pj.push_back(F.to_string(c));
      set.push_back(pj);
    }
    j["set"] = set;
    if (r.feasible) {
      Ring R = Ring::standard(F, n);
      BoundReport br = bound_report(scheme_from_points(r.set, R), k, 1.0);
      j["bound_ratio"] = br.ratio;
    }
    std::cout << j.dump(2) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const furst::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
