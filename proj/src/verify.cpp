#include "witting/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "witting/contextuality.hpp"
#include "witting/entanglement.hpp"
#include "witting/gf4.hpp"
#include "witting/golden.hpp"
#include "witting/group.hpp"
#include "witting/measurement.hpp"
#include "witting/rays.hpp"

namespace witting {

namespace {

double now() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::string ray_label(int flat) { return Configuration::get().ray(flat).index()->label(); }

void diff_tables(CheckBuilder& b, const std::string& what, const std::vector<int>& expected,
                 const std::vector<int>& actual, bool ray_labels) {
  auto name = [&](int i) { return ray_labels ? "phi" + ray_label(i) : std::to_string(i + 1); };
  auto value = [&](int v) { return ray_labels ? "phi" + ray_label(v) : std::to_string(v); };
  bool same = expected == actual;
  b.expect(what + " matches published table", same);
  if (same) return;
  for (std::size_t i = 0; i < std::max(expected.size(), actual.size()); ++i) {
    std::string e = i < expected.size() ? value(expected[i]) : "?";
    std::string a = i < actual.size() ? value(actual[i]) : "?";
    if (e != a) {
      b.diff("-" + what + " " + name(static_cast<int>(i)) + " -> " + e);
      b.diff("+" + what + " " + name(static_cast<int>(i)) + " -> " + a);
    }
  }
}

}  // namespace

CheckBuilder::CheckBuilder(std::string name) : start_(now()) { r_.name = std::move(name); }

bool CheckBuilder::expect(const std::string& what, bool cond) {
  r_.details.push_back(what + ": " + (cond ? "yes" : "NO"));
  if (!cond) {
    r_.ok = false;
    r_.diffs.push_back("-" + what + ": yes");
    r_.diffs.push_back("+" + what + ": no");
  }
  return cond;
}

void CheckBuilder::diff(const std::string& line) {
  r_.ok = false;
  r_.diffs.push_back(line);
}

void CheckBuilder::note(const std::string& line) { r_.details.push_back(line); }

CheckResult CheckBuilder::finish() {
  r_.seconds = now() - start_;
  return std::move(r_);
}

std::vector<std::string> diff_text(const std::string& expected, const std::string& actual) {
  auto split = [](const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) lines.push_back(l);
    return lines;
  };
  auto e = split(expected), a = split(actual);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::max(e.size(), a.size()); ++i) {
    const std::string* el = i < e.size() ? &e[i] : nullptr;
    const std::string* al = i < a.size() ? &a[i] : nullptr;
    if (el && al && *el == *al) continue;
    if (el) out.push_back(std::to_string(i + 1) + ": -" + *el);
    if (al) out.push_back(std::to_string(i + 1) + ": +" + *al);
  }
  return out;
}

CheckResult check_configuration() {
  CheckBuilder b("configuration");
  auto verts = generate_polytope_vertices();
  b.expect_eq("polytope vertices", verts.size(), 240u);
  std::vector<int> per_ray(40, 0);
  bool all_found = true;
  for (const auto& v : verts) {
    if (v.ray < 0) {
      all_found = false;
      continue;
    }
    ++per_ray[v.ray];
  }
  b.expect("every vertex lies on a configuration ray", all_found);
  b.expect("6 vertices per ray", std::all_of(per_ray.begin(), per_ray.end(), [](int c) { return c == 6; }));

  auto rays = generate_rays();
  b.expect_eq("rays", rays.size(), 40u);
  std::set<int> closed;
  for (const auto& v : closed_form_rays()) {
    auto idx = Configuration::get().find(v);
    if (idx) closed.insert(*idx);
  }
  b.expect_eq("closed-form families hit distinct rays", closed.size(), 40u);

  auto diffs = diff_text(std::string(golden::ray_table_text()), render_ray_table(rays));
  b.expect("ray table matches published table byte-for-byte",
           render_ray_table(rays) == golden::ray_table_text());
  for (const auto& d : diffs) b.diff(d);
  return b.finish();
}

CheckResult check_overlaps() {
  CheckBuilder b("overlaps");
  const auto& cfg = Configuration::get();
  int pairs = 0, zero = 0, third = 0, other = 0;
  std::vector<int> orth(40, 0), unbiased(40, 0);
  for (int i = 0; i < 40; ++i)
    for (int j = i + 1; j < 40; ++j) {
      ++pairs;
      Rational o = overlap_sq(cfg.ray(i), cfg.ray(j));
      if (o.is_zero()) {
        ++zero;
        ++orth[i];
        ++orth[j];
      } else if (o == Rational(1, 3)) {
        ++third;
        ++unbiased[i];
        ++unbiased[j];
      } else {
        ++other;
      }
    }
  b.expect_eq("distinct ray pairs", pairs, 780);
  b.expect_eq("overlaps outside {0, 1/3}", other, 0);
  b.note("orthogonal pairs: " + std::to_string(zero) + ", unbiased pairs: " + std::to_string(third));
  b.expect("each ray orthogonal to 12", std::all_of(orth.begin(), orth.end(), [](int c) { return c == 12; }));
  b.expect("each ray unbiased with 27",
           std::all_of(unbiased.begin(), unbiased.end(), [](int c) { return c == 27; }));
  return b.finish();
}

CheckResult check_group_orders() {
  CheckBuilder b("group orders");
  bool gens_ok = true;
  for (int k = 1; k <= 4; ++k) {
    auto r = generator_R(k);
    gens_ok = gens_ok && r.is_unitary() && r.det() == Eisenstein::omega() && (r * r * r).is_identity();
  }
  b.expect("R_k unitary with det w and order 3", gens_ok);
  b.expect_eq("|<R_1..R_4>|", full_symmetry_group().order(), 155520u);
  const auto& w = witting_group();
  b.expect_eq("|<r_1..r_4>|", w.order(), 51840u);
  auto z = center(w);
  bool pm_one = z.size() == 2 && std::any_of(z.begin(), z.end(), [](const auto& g) { return g.is_identity(); }) &&
                std::any_of(z.begin(), z.end(), [](const auto& g) { return (-g).is_identity(); });
  b.expect("center is {+1, -1}", pm_one);
  b.expect_eq("projective order", w.order() / z.size(), 25920u);
  auto diag = diagonal_subgroup();
  auto sp = signed_permutation_subgroup();
  b.expect_eq("diagonal subgroup", diag.order(), 27u);
  b.expect_eq("signed permutation subgroup", sp.order(), 48u);
  std::vector<std::vector<int>> perms;
  for (const auto& g : w.generators()) perms.push_back(ray_permutation(g));
  auto orbit = set_orbit(perms, {0});
  b.expect_eq("orbit of a ray", orbit.size(), 40u);
  b.expect_eq("40 * 27 * 48", 40u * diag.order() * sp.order(), w.order());
  return b.finish();
}

CheckResult check_subgroups() {
  CheckBuilder b("subgroups");
  const auto& w = witting_group();
  auto wb = subgroup_WB();
  auto wh = subgroup_WH();
  auto w2h = subgroup_W2H();
  b.expect_eq("|W_B|", wb.order(), 1920u);
  b.expect_eq("|W_H|", wh.order(), 720u);
  b.expect_eq("|W_2H|", w2h.order(), 1440u);
  auto reps = coset_representatives(w, w2h);
  b.expect_eq("[W : W_2H]", reps.size(), 36u);
  std::vector<MatrixGroup> conj;
  for (const auto& s : reps) conj.push_back(conjugate_subgroup(s, w2h));
  // Equal subgroups of equal order contain each other's generators.
  int equal_pairs = 0;
  for (std::size_t i = 0; i < conj.size(); ++i)
    for (std::size_t j = i + 1; j < conj.size(); ++j) {
      const auto& gi = conj[i].generators();
      if (std::all_of(gi.begin(), gi.end(), [&](const auto& g) { return conj[j].contains(g); })) ++equal_pairs;
    }
  b.expect_eq("coinciding conjugate pairs", equal_pairs, 0);
  return b.finish();
}

CheckResult check_gf4_model() {
  CheckBuilder b("GF(4) model");
  b.expect_eq("projective group order", gf4::projective_closure(gf4::gf4_generators(), 30000).size(), 25920u);
  auto pts = gf4::reduced_points();
  std::set<std::string> distinct;
  for (const auto& p : pts) distinct.insert(p.str());
  b.expect_eq("distinct reduced points", distinct.size(), 40u);
  auto edges = gf4::orthogonality_edges(pts);
  std::vector<std::pair<int, int>> complex_edges;
  for (int i = 0; i < 40; ++i)
    for (int j = i + 1; j < 40; ++j)
      if (Configuration::get().orthogonal(i, j)) complex_edges.emplace_back(i, j);
  b.expect_eq("F4 orthogonality edges", edges.size(), complex_edges.size());
  b.expect("identity labelling is a graph isomorphism", edges == complex_edges);
  return b.finish();
}

CheckResult check_bases() {
  CheckBuilder b("bases");
  const auto& bases = enumerate_bases();
  b.expect_eq("maximal cliques of the orthogonality graph", bases.size(), 40u);
  const auto& pub = golden::bases();
  for (std::size_t i = 0; i < std::min(bases.size(), pub.size()); ++i) {
    auto lbl = [](const std::array<int, 4>& m) {
      std::string s;
      for (int r : m) s += " " + ray_label(r);
      return s;
    };
    if (bases[i].members != pub[i].members)
      b.diff("basis " + std::to_string(i + 1) + ": -" + lbl(pub[i].members) + " +" + lbl(bases[i].members));
    if (bases[i].underlined != pub[i].underlined) b.diff("basis " + std::to_string(i + 1) + ": underline flag");
  }
  b.note("bases compared with published table: " + std::to_string(pub.size()));
  std::vector<int> per_ray(40, 0);
  for (const auto& basis : bases)
    for (int r : basis.members) ++per_ray[r];
  b.expect("each ray in exactly 4 bases", std::all_of(per_ray.begin(), per_ray.end(), [](int c) { return c == 4; }));
  b.expect("10 underlined bases partition the rays", underlined_partition_check(underlined_ids()));
  return b.finish();
}

CheckResult check_contextuality() {
  CheckBuilder b("contextuality");
  auto rep = max_nonorthogonal_cliques();
  b.expect_eq("maximum clique of the complement", rep.max_size, 7);
  b.expect_eq("7-cliques", rep.count(7), 2880u);
  b.expect_eq("maximal 4-cliques", rep.count(4), 90u);
  b.expect_eq("maximal cliques of other sizes", rep.by_size.size(), 2u);
  std::vector<std::vector<int>> perms;
  for (const auto& g : witting_group().generators()) perms.push_back(ray_permutation(g));
  auto tr = verify_clique_transitivity(perms);
  b.expect("W transitive on 7-cliques", tr.seven_transitive);
  b.expect("W transitive on 4-cliques", tr.four_transitive);
  int lines = 0;
  if (rep.by_size.count(4))
    for (const auto& c : rep.by_size.at(4)) lines += spans_projective_line(c);
  b.expect_eq("4-cliques spanning a projective line", lines, 90);
  auto ks = ks_colorability();
  b.expect("exactly-one instance unsatisfiable", !ks.satisfiable);
  b.note("search nodes: " + std::to_string(ks.nodes));
  return b.finish();
}

CheckResult check_entanglement() {
  CheckBuilder b("entanglement");
  const JMatrix ja = j_a();
  auto wh = subgroup_WH();
  std::size_t inv = 0;
  for (const auto& a : wh.elements()) inv += check_invariance(a, ja, InvarianceMode::strict) == Invariance::invariant;
  b.expect_eq("W_H elements fixing J_a", inv, wh.order());
  auto w2h = subgroup_W2H();
  std::size_t plus = 0, minus = 0;
  for (const auto& a : w2h.elements()) {
    auto r = check_invariance(a, ja, InvarianceMode::signed_);
    plus += r == Invariance::invariant;
    minus += r == Invariance::anti_invariant;
  }
  b.expect_eq("W_2H elements mapping J_a to +-J_a", plus + minus, w2h.order());
  b.expect("both signs occur", plus > 0 && minus > 0);
  for (char c : {'a', '1', '2'}) {
    const JMatrix j = named_j(c);
    diff_tables(b, j.label() + " opposites", golden::opposite_table(c), opposite_table(j), true);
    auto pairing = opposite_basis_pairing(j);
    diff_tables(b, j.label() + " basis pairing", golden::basis_pairing(c), pairing.partner, false);
    if (c == 'a') {
      b.expect_eq("bases fixed by J_a", pairing.fixed.size(), 10u);
      b.expect("fixed bases are the underlined ones", pairing.fixed == underlined_ids());
    }
  }
  return b.finish();
}

CheckResult check_conjugate_js() {
  CheckBuilder b("conjugated J scan");
  auto reps = coset_representatives(witting_group(), subgroup_W2H());
  b.expect_eq("coset representatives", reps.size(), 36u);
  auto scan = scan_conjugate_j(reps, j_a());
  std::vector<JName> found;
  for (const auto& c : scan)
    if (c.unit_entries) found.push_back(c.matches.value_or(JName::generic));
  b.expect_eq("conjugates with entries in {0, +-1}", found.size(), 3u);
  std::sort(found.begin(), found.end());
  b.expect("they are +-J_a, +-J_1, +-J_2", found == std::vector<JName>{JName::a, JName::one, JName::two});
  return b.finish();
}

CheckResult check_measurement() {
  CheckBuilder b("measurement");
  int sum_fail = 0;
  for (char c : {'a', '1', '2'}) {
    const JMatrix j = named_j(c);
    const auto st = entangled_state(j).state;
    const auto opp = golden::opposite_table(c);
    const auto pairs = golden::basis_pairing(c);
    int good = 0;
    for (int b1 = 1; b1 <= 40; ++b1) {
      auto m = measure_pair(st, b1, pairs[b1 - 1]);
      int nonzero = 0;
      bool shape = true;
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
          if (m.prob[i][k].is_zero()) continue;
          ++nonzero;
          shape = shape && m.prob[i][k] == Rational(1, 4) && opp[m.rays1[i]] == m.rays2[k];
        }
      good += nonzero == 4 && shape;
      sum_fail += !m.distribution().normalized();
    }
    b.expect_eq("paired bases anti-correlated under " + j.label(), good, 40);
  }
  const auto st = entangled_state(j_a()).state;
  for (int b1 = 1; b1 <= 40; ++b1)
    for (int b2 = 1; b2 <= 40; ++b2) sum_fail += !measure_pair(st, b1, b2).distribution().normalized();
  b.expect_eq("distributions not summing to 1", sum_fail, 0);
  const auto& cfg = Configuration::get();
  b.expect("CM for phi30 is the Toffoli gate", cm_operator(cfg.ray(3, 0).coords()) == toffoli());
  int unitary = 0;
  for (const auto& r : cfg.rays()) unitary += is_unitary(cm_operator(r.coords()));
  b.expect_eq("unitary CM operators", unitary, 40);
  return b.finish();
}

namespace {

Eisenstein random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

CheckResult check_field_properties() {
  CheckBuilder b("field properties");
  std::mt19937_64 rng(20240601);
  int bad_ring = 0, bad_inv = 0, bad_conj = 0, bad_mod = 0;
  for (int t = 0; t < 500; ++t) {
    auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
    bad_ring += (x + y) + z != x + (y + z) || (x * y) * z != x * (y * z) || x * (y + z) != x * y + x * z ||
                x * y != y * x;
    if (!x.is_zero()) bad_inv += x * x.inverse() != Eisenstein(1);
    bad_conj += (x * y).conj() != x.conj() * y.conj() || (x + y).conj() != x.conj() + y.conj() ||
                x.conj().conj() != x;
    bad_mod += (x * y).modulus_sq() != x.modulus_sq() * y.modulus_sq() || x.modulus_sq().is_zero() != x.is_zero();
  }
  b.expect_eq("ring axiom failures on random triples", bad_ring, 0);
  b.expect_eq("inverse failures", bad_inv, 0);
  b.expect_eq("conjugation failures", bad_conj, 0);
  b.expect_eq("modulus failures", bad_mod, 0);
  int bad_f4 = 0;
  for (auto x : gf4::GF4::all())
    for (auto y : gf4::GF4::all()) {
      if (!x.is_zero()) bad_f4 += x * x.inverse() != gf4::GF4::one();
      bad_f4 += x + y != y + x || x * y != y * x || (x * y).conj() != x.conj() * y.conj();
      for (auto z : gf4::GF4::all()) bad_f4 += (x + y) + z != x + (y + z) || (x * y) * z != x * (y * z) || x * (y + z) != x * y + x * z;
    }
  b.expect_eq("F4 field axiom failures (exhaustive)", bad_f4, 0);
  return b.finish();
}

CheckResult check_ray_properties() {
  CheckBuilder b("ray properties");
  const auto& cfg = Configuration::get();
  std::set<std::string> distinct;
  for (const auto& r : cfg.rays()) {
    std::string key;
    for (const auto& x : r.coords()) key += x.str() + ";";
    distinct.insert(key);
  }
  b.expect_eq("projectively distinct rays", distinct.size(), 40u);
  const std::vector<std::vector<int>> triples = {{0, 10, 20}, {31, 32, 33}, {34, 35, 36}, {37, 38, 39}};
  bool mub = true;
  for (std::size_t p = 0; p < triples.size(); ++p)
    for (std::size_t q = 0; q < triples.size(); ++q)
      for (int i : triples[p])
        for (int j : triples[q]) {
          if (i == j) continue;
          mub = mub && cfg.ray(i).coords()[3].is_zero() &&
                overlap_sq(cfg.ray(i), cfg.ray(j)) == (p == q ? Rational(0) : Rational(1, 3));
        }
  b.expect("four triples are mutually unbiased bases of the 3D subspace", mub);
  bool canon = true;
  for (const auto& r : cfg.rays()) {
    canon = canon && canonical_coords(r.coords()) == r.coords();
    for (int sign : {1, -1})
      for (int k = 0; k < 3; ++k) {
        canon = canon && canonical_coords(scale(Eisenstein::unit(sign, k), r.coords())) == r.coords();
        canon = canon && canonical_coords(scale(Eisenstein::i_sqrt3() * Eisenstein(Rational(5, 7)), r.coords())) == r.coords();
      }
  }
  b.expect("canonicalization idempotent and constant on projective classes", canon);
  return b.finish();
}

CheckResult check_group_properties() {
  CheckBuilder b("group properties");
  const auto& w = witting_group();
  std::size_t unitary = 0, det_one = 0, stabilizer = 0;
  bool preserves = true;
  std::vector<std::size_t> per_basis(40, 0);
  for (const auto& g : w.elements()) {
    unitary += g.is_unitary();
    det_one += g.det() == Eisenstein(1);
    try {
      auto perm = ray_permutation(g);
      stabilizer += perm[0] == 0;
      if (auto id = find_basis({perm[0], perm[10], perm[20], perm[30]})) ++per_basis[*id - 1];
    } catch (const std::logic_error&) {
      preserves = false;
    }
  }
  b.expect_eq("unitary elements of W", unitary, w.order());
  b.expect_eq("det 1 elements of W", det_one, w.order());
  b.expect("every element of W permutes the 40 rays", preserves);
  b.expect_eq("|orbit(phi00)| * |stabilizer(phi00)|", 40 * stabilizer, w.order());
  b.expect("1296 elements of W per basis",
           std::all_of(per_basis.begin(), per_basis.end(), [](std::size_t c) { return c == 1296; }));
  auto full = full_symmetry_group();
  std::size_t full_unitary = 0;
  for (const auto& g : full.elements()) full_unitary += g.is_unitary();
  b.expect_eq("unitary elements of <R_1..R_4>", full_unitary, full.order());

  auto wb = subgroup_WB();
  std::vector<std::size_t> wb_basis(40, 0);
  for (const auto& g : wb.elements())
    if (auto id = find_basis(column_rays(g))) ++wb_basis[*id - 1];
  b.expect("48 elements of W_B per basis",
           std::all_of(wb_basis.begin(), wb_basis.end(), [](std::size_t c) { return c == 48; }));

  auto wh = subgroup_WH();
  auto z = center(wh);
  b.expect_eq("center of W_H", z.size(), 2u);
  auto classes = conjugacy_classes(wh);
  int num_classes = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  b.note("conjugacy classes of W_H: " + std::to_string(num_classes));
  std::vector<bool> seen(static_cast<std::size_t>(num_classes), false);
  bool simple = true;
  for (std::size_t i = 0; i < wh.order(); ++i) {
    int c = classes[i];
    if (seen[c]) continue;
    seen[c] = true;
    const auto& x = wh[i];
    if (x.is_identity() || (-x).is_identity()) continue;
    simple = simple && normal_closure(wh.generators(), x).order() == wh.order();
  }
  b.expect("W_H/{+1,-1} is simple of order 360", simple && wh.order() / z.size() == 360);
  return b.finish();
}

CheckResult check_gf4_properties() {
  CheckBuilder b("GF(4) properties");
  auto gens = gf4::gf4_generators();
  bool det_one = std::all_of(gens.begin(), gens.end(), [](const auto& m) { return gf4::det(m) == gf4::GF4::one(); });
  b.expect("generators have determinant 1", det_one);
  auto pts = gf4::reduced_points();
  bool permutes = true;
  for (const auto& m : gens)
    for (const auto& p : pts) {
      auto img = gf4::canonical_point(gf4::mat_apply(m, p.coords));
      permutes = permutes && std::find(pts.begin(), pts.end(), img) != pts.end();
    }
  b.expect("generators permute the 40 reduced points", permutes);
  return b.finish();
}

CheckResult check_contextuality_properties() {
  CheckBuilder b("contextuality properties");
  auto g = orthogonality_graph();
  bool regular = true;
  for (int v = 0; v < g.size(); ++v) regular = regular && g.degree(v) == 12;
  b.expect("orthogonality graph 12-regular", regular);
  b.expect_eq("orthogonality edges", g.edge_count(), 240);
  b.expect_eq("single-basis solutions", solve_exactly_one(40, ks_constraints({1}), true).solutions, 4u);
  b.expect("underlined bases with orthogonality exclusions unsatisfiable", !underlined_with_orthogonality().satisfiable);
  int sat = 0;
  for (int drop = 1; drop <= 40; ++drop) {
    std::vector<int> ids;
    for (int id = 1; id <= 40; ++id)
      if (id != drop) ids.push_back(id);
    sat += solve_exactly_one(40, ks_constraints(ids), false).satisfiable;
  }
  b.note("instances with one basis removed that are satisfiable: " + std::to_string(sat) + " of 40");
  return b.finish();
}

CheckResult check_entanglement_properties() {
  CheckBuilder b("entanglement properties");
  const auto& cfg = Configuration::get();
  const JMatrix ja = j_a();
  auto w2h = subgroup_W2H();
  bool equivariant = true;
  for (const auto& a : w2h.elements())
    for (const auto& r : cfg.rays()) equivariant = equivariant && j_opposite(act_on_ray(a, r), ja) == act_on_ray(a, j_opposite(r, ja));
  b.expect("J_a-opposite map commutes with W_2H", equivariant);

  const JMatrix sym{Matrix4::identity(), JName::generic};
  bool orth = true;
  const auto sp = signed_permutation_subgroup();
  for (const auto& a : sp.elements())
    orth = orth && ((check_invariance(a, sym, InvarianceMode::strict) == Invariance::invariant) ==
                    (a * a.transpose()).is_identity());
  b.expect("symmetric state invariant exactly under real-orthogonal signed permutations", orth);

  for (char c : {'a', '1', '2'}) {
    const JMatrix j = named_j(c);
    auto opp = opposite_table(j);
    bool fpf = true;
    for (int i = 0; i < 40; ++i) fpf = fpf && opp[i] != i && opp[opp[i]] == i;
    b.expect(j.label() + "-opposite map is a fixed-point-free involution", fpf);
    const auto st = entangled_state(j).state;
    bool partner_ok = true;
    for (const auto& a : witting_group().generators())
      partner_ok = partner_ok && st.apply(a, partner_transform(a, j)) == st;
    for (const auto& a : w2h.generators())
      partner_ok = partner_ok && st.apply(a, partner_transform(a, j)) == st;
    b.expect("(A x partner(A, " + j.label() + ")) fixes Omega", partner_ok);
  }
  auto opp = opposite_table(ja);
  bool two_pairs = true;
  for (int id : opposite_basis_pairing(ja).fixed) {
    const auto& m = enumerate_bases()[id - 1].members;
    for (int r : m) two_pairs = two_pairs && std::find(m.begin(), m.end(), opp[r]) != m.end();
  }
  b.expect("each J_a-fixed basis is two opposite pairs", two_pairs);
  bool wh_partner = true;
  const auto wh = subgroup_WH();
  for (const auto& a : wh.elements()) wh_partner = wh_partner && partner_transform(a, ja) == a;
  b.expect("partner(A, J_a) = A on W_H", wh_partner);
  return b.finish();
}

CheckResult check_measurement_properties() {
  CheckBuilder b("measurement properties");
  const auto& cfg = Configuration::get();
  const auto st = entangled_state(j_a()).state;
  bool unitaries = true;
  const auto& w = witting_group();
  for (int id = 1; id <= 40; ++id) {
    const auto& u = basis_unitary(id);
    const auto& members = enumerate_bases()[id - 1].members;
    for (int k = 0; k < 4; ++k) unitaries = unitaries && cfg.find(u.column(k)) == members[k];
    unitaries = unitaries && w.contains(u);
  }
  b.expect("basis unitaries lie in W with columns on the basis rays", unitaries);
  b.expect("basis 4 unitary is the identity", basis_unitary(4).is_identity());

  const std::vector<std::pair<int, int>> pairs = {{1, 38}, {4, 4}, {2, 17}, {12, 33}};
  bool rotation = true;
  const auto wh = subgroup_WH();
  for (const auto& a : wh.elements()) {
    auto perm = ray_permutation(a);
    for (auto [b1, b2] : pairs) {
      auto m = measure_pair(st, b1, b2);
      auto image = [&](int id) {
        std::array<int, 4> img{};
        const auto& mem = enumerate_bases()[id - 1].members;
        for (int k = 0; k < 4; ++k) img[k] = perm[mem[k]];
        return *find_basis(img);
      };
      auto ma = measure_pair(st, image(b1), image(b2));
      for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
          int i2 = static_cast<int>(std::find(ma.rays1.begin(), ma.rays1.end(), perm[m.rays1[i]]) - ma.rays1.begin());
          int k2 = static_cast<int>(std::find(ma.rays2.begin(), ma.rays2.end(), perm[m.rays2[k]]) - ma.rays2.begin());
          rotation = rotation && i2 < 4 && k2 < 4 && ma.prob[i2][k2] == m.prob[i][k];
        }
    }
  }
  b.expect("distributions invariant under joint W_H rotation", rotation);

  bool one_flip = true, probs = true, collapse = true;
  const auto opp = opposite_table(j_a());
  for (const auto& basis : enumerate_bases()) {
    std::vector<Vec4> phis;
    for (int r : basis.members) phis.push_back(cfg.ray(r).coords());
    auto branches = contextual_sequence(st, 1, phis);
    auto m = measure_pair(st, basis.id, 4);
    for (const auto& br : branches) {
      int flips = static_cast<int>(std::count(br.ancilla.begin(), br.ancilla.end(), 1));
      one_flip = one_flip && flips == 1;
      if (flips != 1) continue;
      int i = static_cast<int>(std::find(br.ancilla.begin(), br.ancilla.end(), 1) - br.ancilla.begin());
      Rational marginal;
      for (int k = 0; k < 4; ++k) marginal += m.prob[i][k];
      probs = probs && br.probability == marginal;
      Vec4 partner = BipartiteState(br.amplitudes).conditional_partner(1, phis[i]);
      collapse = collapse && cfg.find(partner) == opp[basis.members[i]];
    }
  }
  b.expect("full-basis sequences flip the ancilla exactly once per branch", one_flip);
  b.expect("branch probabilities equal single-side Born probabilities", probs);
  b.expect("side-2 state collapses to the J_a-opposite ray", collapse);
  return b.finish();
}

const std::vector<NamedCheck>& acceptance_checks() {
  static const std::vector<NamedCheck> checks = {
      {"configuration", check_configuration}, {"overlaps", check_overlaps},
      {"group orders", check_group_orders},   {"subgroups", check_subgroups},
      {"GF(4) model", check_gf4_model},       {"bases", check_bases},
      {"contextuality", check_contextuality}, {"entanglement", check_entanglement},
      {"J scan", check_conjugate_js},         {"measurement", check_measurement},
  };
  return checks;
}

const std::vector<NamedCheck>& property_checks() {
  static const std::vector<NamedCheck> checks = {
      {"field", check_field_properties},
      {"rays", check_ray_properties},
      {"groups", check_group_properties},
      {"GF(4)", check_gf4_properties},
      {"contextuality", check_contextuality_properties},
      {"entanglement", check_entanglement_properties},
      {"measurement", check_measurement_properties},
  };
  return checks;
}

std::vector<NamedCheck> all_checks() {
  auto out = acceptance_checks();
  const auto& p = property_checks();
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace witting
