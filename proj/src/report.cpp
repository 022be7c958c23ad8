#include "witting/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "witting/contextuality.hpp"
#include "witting/entanglement.hpp"
#include "witting/gf4.hpp"
#include "witting/golden.hpp"
#include "witting/group.hpp"
#include "witting/measurement.hpp"
#include "witting/rays.hpp"
#include "witting/verify.hpp"

namespace witting {

using ojson = nlohmann::ordered_json;

namespace {

std::string label(int flat) { return Configuration::get().ray(flat).index()->label(); }

std::string fraction(const Rational& r) { return std::to_string(r.num()) + "/" + std::to_string(r.den()); }

ojson coords_json(const Vec4& v) {
  ojson a = ojson::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

ojson ln_json(int flat) {
  auto idx = *Configuration::get().ray(flat).index();
  return ojson::array({idx.l, idx.n});
}

std::string csv_kv(const ojson& obj) {
  std::string out = "key,value\n";
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it->is_structured()) continue;
    out += it.key() + "," + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
  }
  return out;
}

std::string text_kv(const ojson& obj) {
  std::string out;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it->is_structured()) continue;
    out += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
  }
  return out;
}

void fail_on(Report& r, const std::vector<std::string>& diffs) {
  if (diffs.empty()) return;
  r.ok = false;
  r.diffs.insert(r.diffs.end(), diffs.begin(), diffs.end());
}

Matrix4 named_matrix(JName n) {
  for (char c : {'a', '1', '2'})
    if (named_j(c).name == n) return named_j(c).matrix;
  throw std::logic_error("not a named J");
}

char checked_j(char j) {
  if (j != 'a' && j != '1' && j != '2') throw InputError(std::string("unknown J '") + j + "', expected a, 1 or 2");
  return j;
}

}  // namespace

std::string Report::render(Format f) const {
  switch (f) {
    case Format::json: return data.dump(2) + "\n";
    case Format::csv: return csv;
    case Format::text: return text;
  }
  return text;
}

ojson matrix_json(const Matrix4& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < 4; ++r) rows.push_back(coords_json(m.row(r)));
  return rows;
}

Report rays_report(bool check, std::optional<std::string> reference) {
  Report r;
  const auto rays = generate_rays();
  r.data = ojson::array();
  r.csv = "l,n,c0,c1,c2,c3,norm_sq\n";
  for (const auto& ray : rays) {
    auto idx = *ray.index();
    r.data.push_back({{"l", idx.l}, {"n", idx.n}, {"coords", coords_json(ray.coords())}, {"norm_sq", ray.norm_sq().num()}});
    r.csv += std::to_string(idx.l) + "," + std::to_string(idx.n);
    for (const auto& x : ray.coords()) r.csv += "," + x.str();
    r.csv += "," + ray.norm_sq().str() + "\n";
  }
  r.text = render_ray_table(rays);
  if (check) {
    fail_on(r, diff_text(reference ? *reference : std::string(golden::ray_table_text()), r.text));
    if (r.ok) r.text += "ray table matches the published table\n";
  }
  return r;
}

Report polytope_report() {
  Report r;
  auto verts = generate_polytope_vertices();
  std::vector<int> per_ray(40, 0);
  ojson list = ojson::array();
  r.csv = "ray,c0,c1,c2,c3\n";
  std::ostringstream text;
  for (const auto& v : verts) {
    std::string ray = v.ray >= 0 ? label(v.ray) : "";
    if (v.ray >= 0) ++per_ray[v.ray];
    list.push_back({{"ray", ray}, {"coords", coords_json(v.coords)}});
    r.csv += ray;
    text << "phi" << ray << " |";
    for (const auto& x : v.coords) {
      r.csv += "," + x.str();
      text << " " << x.str();
    }
    r.csv += "\n";
    text << "\n";
  }
  auto [lo, hi] = std::minmax_element(per_ray.begin(), per_ray.end());
  r.data = {{"vertices", verts.size()}, {"rays", 40}, {"vertices_per_ray_min", *lo}, {"vertices_per_ray_max", *hi},
            {"list", list}};
  r.text = "vertices: " + std::to_string(verts.size()) + "\nvertices per ray: " + std::to_string(*lo) +
           (*lo == *hi ? "" : ".." + std::to_string(*hi)) + "\n" + text.str();
  return r;
}

Report groups_report(bool all) {
  Report r;
  struct Row {
    std::string name;
    std::size_t order, expected;
    std::vector<GroupElement> gens;
  };
  std::vector<Row> rows;
  const auto& w = witting_group();
  if (all) {
    auto full = full_symmetry_group();
    rows.push_back({"<R1,R2,R3,R4>", full.order(), 155520, full.generators()});
  }
  rows.push_back({"W", w.order(), 51840, w.generators()});
  auto z = center(w);
  rows.push_back({"W/{+1,-1}", w.order() / z.size(), 25920, w.generators()});
  if (all) {
    rows.push_back({"center", z.size(), 2, z});
    auto wb = subgroup_WB(), w2h = subgroup_W2H(), wh = subgroup_WH();
    auto sp = signed_permutation_subgroup(), diag = diagonal_subgroup();
    rows.push_back({"W_B", wb.order(), 1920, wb.generators()});
    rows.push_back({"W_2H", w2h.order(), 1440, w2h.generators()});
    rows.push_back({"W_H", wh.order(), 720, wh.generators()});
    rows.push_back({"signed_permutations", sp.order(), 48, sp.generators()});
    rows.push_back({"diagonal", diag.order(), 27, diag.generators()});
  }
  r.data = ojson::array();
  r.csv = "name,order\n";
  for (const auto& row : rows) {
    ojson gens = ojson::array();
    for (const auto& g : row.gens) gens.push_back(matrix_json(g));
    r.data.push_back({{"name", row.name}, {"order", row.order}, {"generators", gens}});
    r.csv += row.name + "," + std::to_string(row.order) + "\n";
    r.text += row.name + " " + std::to_string(row.order) + "\n";
    if (row.order != row.expected) {
      fail_on(r, {"-" + row.name + " " + std::to_string(row.expected), "+" + row.name + " " + std::to_string(row.order)});
    }
  }
  return r;
}

Report gf4_report() {
  Report r;
  auto pts = gf4::reduced_points();
  auto edges = gf4::orthogonality_edges(pts);
  auto order = gf4::projective_closure(gf4::gf4_generators(), 30000).size();
  std::set<std::string> distinct;
  ojson points = ojson::array();
  r.csv = "ray,x0,x1,x2,x3\n";
  std::string text;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    distinct.insert(pts[i].str());
    ojson c = ojson::array();
    r.csv += label(i);
    for (const auto& x : pts[i].coords) {
      c.push_back(x.str());
      r.csv += "," + x.str();
    }
    r.csv += "\n";
    points.push_back({{"ray", label(i)}, {"coords", c}});
    text += "phi" + label(i) + " -> " + pts[i].str() + "\n";
  }
  bool iso = true;
  std::size_t complex_edges = 0;
  for (int i = 0; i < 40; ++i)
    for (int j = i + 1; j < 40; ++j) complex_edges += Configuration::get().orthogonal(i, j);
  ojson edge_list = ojson::array();
  for (auto [i, j] : edges) {
    edge_list.push_back({label(i), label(j)});
    iso = iso && Configuration::get().orthogonal(i, j);
  }
  iso = iso && edges.size() == complex_edges;
  r.data = {{"group_order", order},     {"distinct_points", distinct.size()}, {"edges", edges.size()},
            {"isomorphic", iso},        {"points", points},                   {"edge_list", edge_list}};
  r.text = "projective group order: " + std::to_string(order) + "\ndistinct points: " +
           std::to_string(distinct.size()) + "\northogonal pairs: " + std::to_string(edges.size()) +
           "\nisomorphic to complex orthogonality graph: " + (iso ? "yes" : "no") + "\n" + text;
  if (order != 25920) fail_on(r, {"-group order 25920", "+group order " + std::to_string(order)});
  if (distinct.size() != 40) fail_on(r, {"-distinct points 40", "+distinct points " + std::to_string(distinct.size())});
  if (!iso) fail_on(r, {"-isomorphic yes", "+isomorphic no"});
  return r;
}

Report bases_report() {
  Report r;
  const auto& bases = enumerate_bases();
  const auto& pub = golden::bases();
  r.data = ojson::array();
  r.csv = "id,r0,r1,r2,r3,underlined\n";
  for (const auto& b : bases) {
    ojson rays = ojson::array();
    std::string line = std::to_string(b.id) + " |";
    r.csv += std::to_string(b.id);
    for (int m : b.members) {
      rays.push_back(label(m));
      line += " phi" + label(m);
      r.csv += "," + label(m);
    }
    r.csv += std::string(",") + (b.underlined ? "1" : "0") + "\n";
    r.text += line + (b.underlined ? " *" : "") + "\n";
    r.data.push_back({{"id", b.id}, {"rays", rays}, {"underlined", b.underlined}});
    const auto& p = pub.at(static_cast<std::size_t>(b.id - 1));
    if (p.members != b.members || p.underlined != b.underlined) {
      std::string want = std::to_string(p.id) + " |";
      for (int m : p.members) want += " phi" + label(m);
      fail_on(r, {"-" + want + (p.underlined ? " *" : ""), "+" + line + (b.underlined ? " *" : "")});
    }
  }
  return r;
}

Report cliques_report() {
  Report r;
  auto rep = max_nonorthogonal_cliques();
  std::vector<std::vector<int>> perms;
  for (const auto& g : witting_group().generators()) perms.push_back(ray_permutation(g));
  auto tr = verify_clique_transitivity(perms);
  int lines = 0;
  if (rep.by_size.count(4))
    for (const auto& c : rep.by_size.at(4)) lines += spans_projective_line(c);
  r.data = {{"max_clique", rep.max_size},
            {"n7", rep.count(7)},
            {"n4", rep.count(4)},
            {"seven_transitive", tr.seven_transitive},
            {"four_transitive", tr.four_transitive},
            {"projective_lines", lines}};
  r.csv = csv_kv(r.data);
  r.text = text_kv(r.data);
  return r;
}

Report ks_report(bool prove) {
  Report r;
  if (!prove) {
    r.text = dimacs_export();
    r.data = {{"dimacs", r.text}};
    r.csv = "basis,r0,r1,r2,r3\n";
    for (const auto& b : enumerate_bases()) {
      r.csv += std::to_string(b.id);
      for (int m : b.members) r.csv += "," + label(m);
      r.csv += "\n";
    }
    return r;
  }
  auto rep = max_nonorthogonal_cliques();
  auto ks = ks_colorability();
  auto under = underlined_with_orthogonality();
  r.data = {{"max_clique", rep.max_size},
            {"n7", rep.count(7)},
            {"n4", rep.count(4)},
            {"ks_satisfiable", ks.satisfiable},
            {"nodes_explored", ks.nodes},
            {"underlined_satisfiable", under.satisfiable},
            {"underlined_nodes_explored", under.nodes}};
  r.csv = csv_kv(r.data);
  r.text = std::string(ks.satisfiable ? "SAT" : "UNSAT") + " (nodes explored: " + std::to_string(ks.nodes) + ")\n";
  if (ks.satisfiable) fail_on(r, {"-UNSAT", "+SAT"});
  return r;
}

Report opposites_report(char j) {
  Report r;
  const JMatrix jm = named_j(checked_j(j));
  const auto opp = opposite_table(jm);
  const auto pub = golden::opposite_table(j);
  ojson pairs = ojson::array();
  r.csv = "l,n,opposite_l,opposite_n\n";
  for (int i = 0; i < 40; ++i) {
    pairs.push_back({ln_json(i), ln_json(opp[i])});
    const auto a = *Configuration::get().ray(i).index();
    const auto b = *Configuration::get().ray(opp[i]).index();
    r.csv += std::to_string(a.l) + "," + std::to_string(a.n) + "," + std::to_string(b.l) + "," + std::to_string(b.n) + "\n";
    r.text += "phi" + label(i) + " -> phi" + label(opp[i]) + "\n";
    if (opp[i] != pub[i])
      fail_on(r, {"-phi" + label(i) + " -> phi" + label(pub[i]), "+phi" + label(i) + " -> phi" + label(opp[i])});
  }
  r.data = {{"kind", "opposites"}, {"J", jm.label()}, {"pairs", pairs}};
  return r;
}

Report pairings_report(char j) {
  Report r;
  const JMatrix jm = named_j(checked_j(j));
  const auto pairing = opposite_basis_pairing(jm);
  const auto pub = golden::basis_pairing(j);
  ojson pairs = ojson::array();
  r.csv = "basis,paired_basis\n";
  for (int i = 0; i < 40; ++i) {
    pairs.push_back({i + 1, pairing.partner[i]});
    r.csv += std::to_string(i + 1) + "," + std::to_string(pairing.partner[i]) + "\n";
    r.text += "(" + std::to_string(i + 1) + " : " + std::to_string(pairing.partner[i]) + ")\n";
    if (pairing.partner[i] != pub[i]) {
      fail_on(r, {"-(" + std::to_string(i + 1) + " : " + std::to_string(pub[i]) + ")",
                  "+(" + std::to_string(i + 1) + " : " + std::to_string(pairing.partner[i]) + ")"});
    }
  }
  r.text += "fixed: " + std::to_string(pairing.fixed.size()) + "\n";
  r.data = {{"kind", "pairings"}, {"J", jm.label()}, {"basis_pairs", pairs}, {"fixed", pairing.fixed}};
  return r;
}

Report scan_js_report() {
  Report r;
  auto reps = coset_representatives(witting_group(), subgroup_W2H());
  auto scan = scan_conjugate_j(reps, j_a());
  ojson found = ojson::array();
  r.csv = "representative,matches,sign\n";
  std::set<JName> names;
  for (std::size_t i = 0; i < scan.size(); ++i) {
    const auto& c = scan[i];
    if (!c.unit_entries) continue;
    std::string name = c.matches ? JMatrix{Matrix4{}, *c.matches}.label() : "none";
    std::string sign = "";
    if (c.matches) {
      names.insert(*c.matches);
      sign = c.j_s == -named_matrix(*c.matches) ? "-" : "+";
    }
    found.push_back({{"representative", i}, {"matches", name}, {"sign", sign}, {"j_s", matrix_json(c.j_s)}});
    r.csv += std::to_string(i) + "," + name + "," + sign + "\n";
    r.text += "representative " + std::to_string(i) + ": " + sign + name + "\n";
  }
  r.data = {{"representatives", reps.size()}, {"unit_entry_count", found.size()}, {"unit_entry", found}};
  r.text = "coset representatives: " + std::to_string(reps.size()) + "\nconjugates with entries in {0,+-1}: " +
           std::to_string(found.size()) + "\n" + r.text;
  if (found.size() != 3 || names.size() != 3 || names.count(JName::generic))
    fail_on(r, {"-3 conjugates equal to +-Ja, +-J1, +-J2", "+" + std::to_string(found.size()) + " conjugates"});
  return r;
}

namespace {

std::optional<char> named_state(const std::string& s) {
  if (s == "Ja") return 'a';
  if (s == "J1") return '1';
  if (s == "J2") return '2';
  return std::nullopt;
}

Eisenstein amplitude_of(const nlohmann::json& v) {
  if (v.is_number_integer()) return Eisenstein(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Eisenstein::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError("bad amplitude '" + v.get<std::string>() + "': " + e.what());
    }
  }
  throw InputError("amplitudes must be integers or strings in the a+b*w grammar");
}

BipartiteState state_from_json(const nlohmann::json& s) {
  if (!s.is_array()) throw InputError("state must be \"Ja\", \"J1\", \"J2\" or an amplitude array");
  std::array<Eisenstein, 16> a{};
  if (s.size() == 16) {
    for (std::size_t i = 0; i < 16; ++i) a[i] = amplitude_of(s[i]);
  } else if (s.size() == 4 && std::all_of(s.begin(), s.end(), [](const auto& row) { return row.is_array() && row.size() == 4; })) {
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) a[4 * j + k] = amplitude_of(s[j][k]);
  } else {
    throw InputError("explicit state needs 16 amplitudes or a 4x4 array");
  }
  try {
    return BipartiteState(a);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace

Report measure_report(const nlohmann::json& d, std::optional<std::uint64_t> seed_override) {
  if (!d.is_object()) throw InputError("descriptor must be a JSON object");
  if (!d.contains("state")) throw InputError("descriptor needs a \"state\"");
  if (!d.contains("bases")) throw InputError("descriptor needs \"bases\"");
  std::optional<char> named;
  std::string state_name = "explicit";
  std::optional<BipartiteState> state;
  if (d["state"].is_string()) {
    state_name = d["state"].get<std::string>();
    named = named_state(state_name);
    if (!named) throw InputError("unknown state '" + state_name + "', expected Ja, J1, J2 or an amplitude array");
    state = entangled_state(named_j(*named)).state;
  } else {
    state = state_from_json(d["state"]);
  }
  std::uint64_t samples = 0, seed = 0;
  try {
    if (d.contains("samples")) samples = d["samples"].get<std::uint64_t>();
    if (d.contains("seed")) seed = d["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception&) {
    throw InputError("samples and seed must be nonnegative integers");
  }
  if (seed_override) seed = *seed_override;

  std::vector<std::pair<int, int>> pairs;
  const auto& b = d["bases"];
  if (b.is_string() && b.get<std::string>() == "paired") {
    if (!named) throw InputError("\"paired\" needs a named state");
    auto p = opposite_basis_pairing(named_j(*named)).partner;
    for (int i = 0; i < 40; ++i) pairs.emplace_back(i + 1, p[i]);
  } else if (b.is_array() && b.size() == 2 && b[0].is_number_integer() && b[1].is_number_integer()) {
    int b1 = b[0].get<int>(), b2 = b[1].get<int>();
    if (b1 < 1 || b1 > 40 || b2 < 1 || b2 > 40) throw InputError("basis ids must be in 1..40");
    pairs.emplace_back(b1, b2);
  } else {
    throw InputError("bases must be [i, j] or \"paired\"");
  }

  Report r;
  ojson ms = ojson::array();
  r.csv = "basis1,basis2,ray1,ray2,probability,tally\n";
  std::string algorithm;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    auto [b1, b2] = pairs[idx];
    auto m = measure_pair(*state, b1, b2);
    auto dist = m.distribution();
    std::vector<std::uint64_t> tally(16, 0);
    if (samples > 0) {
      auto s = sample_outcomes(dist, seed + idx, samples);
      algorithm = s.algorithm;
      tally = s.counts;
    }
    ojson outcomes = ojson::array();
    r.text += "bases " + std::to_string(b1) + " " + std::to_string(b2) + "\n";
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const auto& p = m.prob[i][k];
        ojson o = {{"rays", {label(m.rays1[i]), label(m.rays2[k])}}, {"probability", fraction(p)}};
        if (samples > 0) o["tally"] = tally[4 * i + k];
        outcomes.push_back(o);
        r.csv += std::to_string(b1) + "," + std::to_string(b2) + "," + label(m.rays1[i]) + "," + label(m.rays2[k]) +
                 "," + fraction(p) + "," + std::to_string(tally[4 * i + k]) + "\n";
        if (!p.is_zero()) {
          r.text += "  phi" + label(m.rays1[i]) + " phi" + label(m.rays2[k]) + "  " + fraction(p);
          if (samples > 0) r.text += "  " + std::to_string(tally[4 * i + k]);
          r.text += "\n";
        }
      }
    if (!dist.normalized()) fail_on(r, {"bases " + std::to_string(b1) + " " + std::to_string(b2) + ": total " + fraction(dist.total())});
    ms.push_back({{"bases", {b1, b2}}, {"outcomes", outcomes}});
  }
  r.data = {{"state", state_name}, {"norm_sq", state->norm_sq().str()}, {"samples", samples}, {"seed", seed}};
  if (samples > 0) r.data["algorithm"] = algorithm;
  r.data["measurements"] = ms;
  return r;
}

Report verify_report() {
  Report r;
  r.data = ojson::array();
  r.csv = "check,ok\n";
  for (const auto& c : all_checks()) {
    auto res = c.run();
    r.data.push_back({{"name", res.name}, {"ok", res.ok}, {"details", res.details}, {"diffs", res.diffs}});
    r.csv += res.name + "," + (res.ok ? "1" : "0") + "\n";
    r.text += std::string(res.ok ? "PASS " : "FAIL ") + res.name + "\n";
    for (const auto& line : res.details) r.text += "  " + line + "\n";
    for (const auto& line : res.diffs) r.diffs.push_back(res.name + ": " + line);
    r.ok = r.ok && res.ok;
  }
  return r;
}

}  // namespace witting
