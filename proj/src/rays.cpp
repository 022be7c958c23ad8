#include "witting/rays.hpp"

#include <sstream>
#include <stdexcept>

namespace witting {

namespace {

// One step of the cyclic shift (x0,x1,x2,x3) -> (x3,x0,x1,x2).
Vec4 shift(const Vec4& v) { return {v[3], v[0], v[1], v[2]}; }

Vec4 apply_signs(const Vec4& v, const std::array<int, 4>& s) {
  Vec4 out = v;
  for (int k = 0; k < 4; ++k)
    if (s[k] < 0) out[k] = -out[k];
  return out;
}

std::string coord_token(const Eisenstein& x) {
  if (x.is_zero()) return "0";
  if (auto u = x.as_unit()) {
    static const char* names[3] = {"1", "w", "wb"};
    return std::string(u->first < 0 ? "-" : "") + names[u->second];
  }
  return x.str();
}

}  // namespace

Vec4 canonical_coords(const Vec4& v) {
  for (int k = 0; k < 4; ++k) {
    if (!v[k].is_zero()) {
      if (v[k] == Eisenstein(1)) return v;
      return scale(v[k].inverse(), v);
    }
  }
  throw std::invalid_argument("cannot canonicalize the zero vector");
}

Ray::Ray(const Vec4& v, std::optional<RayIndex> index)
    : coords_(canonical_coords(v)), norm_sq_(witting::norm_sq(coords_)), index_(index) {}

Ray canonicalize(const Vec4& v) { return Ray(v); }

std::size_t Vec4Hash::operator()(const Vec4& v) const noexcept {
  std::size_t h = 0;
  for (const auto& x : v) h = h * 1000003u ^ std::hash<Eisenstein>{}(x);
  return h;
}

std::vector<Ray> generate_rays() {
  std::vector<Ray> rays;
  rays.reserve(40);
  // Column 3, rows n = 1 + 3g + k: (1, w^(g+k), w^(-k), 0).
  std::array<Vec4, 10> col3{};
  col3[0] = {0, 0, 0, 1};
  for (int g = 0; g < 3; ++g) {
    for (int k = 0; k < 3; ++k) {
      col3[1 + 3 * g + k] = {1, Eisenstein::unit(1, g + k), Eisenstein::unit(1, -k), 0};
    }
  }
  // Column l is the (l+1)-fold shift of column 3, with these signs.
  const std::array<std::array<int, 4>, 4> signs = {{
      {1, 1, -1, 1},
      {1, 1, -1, -1},
      {1, -1, 1, 1},
      {1, 1, 1, 1},
  }};
  for (int l = 0; l < 4; ++l) {
    for (int n = 0; n < 10; ++n) {
      Vec4 v = col3[n];
      for (int s = 0; s < (l + 1) % 4; ++s) v = shift(v);
      if (n > 0) v = apply_signs(v, signs[l]);
      rays.emplace_back(v, RayIndex{l, n});
    }
  }
  return rays;
}

std::vector<Vec4> closed_form_rays() {
  std::vector<Vec4> out;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      Eisenstein wm = Eisenstein::unit(1, m), wn = Eisenstein::unit(1, n);
      out.push_back({0, 1, -wm, wn});
      out.push_back({1, 0, -wm, -wn});
      out.push_back({1, -wm, 0, wn});
      out.push_back({1, wm, wn, 0});
    }
  }
  for (int k = 0; k < 4; ++k) {
    Vec4 e{};
    e[k] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<PolytopeVertex> generate_polytope_vertices() {
  const auto& cfg = Configuration::get();
  std::vector<PolytopeVertex> out;
  out.reserve(240);
  // Sign patterns of the four three-term families; zero marks the empty slot.
  const std::array<std::array<int, 4>, 4> patterns = {{
      {0, 1, -1, 1},
      {-1, 0, 1, 1},
      {1, -1, 0, 1},
      {-1, -1, -1, 0},
  }};
  for (const auto& pat : patterns) {
    for (int s : {1, -1}) {
      for (int e0 = 0; e0 < 3; ++e0) {
        for (int e1 = 0; e1 < 3; ++e1) {
          for (int e2 = 0; e2 < 3; ++e2) {
            const int exps[3] = {e0, e1, e2};
            Vec4 v{};
            int slot = 0;
            for (int k = 0; k < 4; ++k) {
              if (pat[k] == 0) continue;
              v[k] = Eisenstein::unit(s * pat[k], exps[slot++]);
            }
            out.push_back({v, -1});
          }
        }
      }
    }
  }
  for (int k = 0; k < 4; ++k) {
    for (int s : {1, -1}) {
      for (int lam = 0; lam < 3; ++lam) {
        Vec4 v{};
        v[k] = Eisenstein::unit(s, lam) * Eisenstein::i_sqrt3();
        out.push_back({v, -1});
      }
    }
  }
  for (auto& pv : out) {
    auto idx = cfg.find(pv.coords);
    if (!idx) throw std::logic_error("polytope vertex outside the configuration");
    pv.ray = *idx;
  }
  return out;
}

const Configuration& Configuration::get() {
  static const Configuration cfg;
  return cfg;
}

Configuration::Configuration() : rays_(generate_rays()) {
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (!lookup_.emplace(rays_[i].coords(), static_cast<int>(i)).second) {
      throw std::logic_error("duplicate ray in generated configuration");
    }
  }
  orth_.assign(rays_.size(), std::vector<bool>(rays_.size(), false));
  for (std::size_t i = 0; i < rays_.size(); ++i)
    for (std::size_t j = 0; j < rays_.size(); ++j)
      orth_[i][j] = i != j && inner(rays_[i].coords(), rays_[j].coords()).is_zero();
}

std::optional<int> Configuration::find(const Vec4& v) const {
  auto it = lookup_.find(canonical_coords(v));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Eisenstein inner_product(const Ray& u, const Ray& v) { return inner(u.coords(), v.coords()); }

Rational overlap_sq(const Ray& u, const Ray& v) {
  return inner_product(u, v).modulus_sq() / (u.norm_sq() * v.norm_sq());
}

int orthogonality_degree(const Ray& u) {
  int count = 0;
  for (const auto& r : Configuration::get().rays()) {
    if (!(r == u) && inner_product(u, r).is_zero()) ++count;
  }
  return count;
}

std::string render_ray_table(const std::vector<Ray>& rays) {
  std::vector<const Ray*> grid(40, nullptr);
  for (const auto& r : rays) {
    if (!r.index()) throw std::invalid_argument("render_ray_table needs indexed rays");
    grid.at(r.index()->flat()) = &r;
  }
  std::ostringstream os;
  os << "n | phi0 | phi1 | phi2 | phi3\n";
  for (int n = 0; n < 10; ++n) {
    os << n;
    for (int l = 0; l < 4; ++l) {
      const Ray* r = grid[10 * l + n];
      if (r == nullptr) throw std::invalid_argument("render_ray_table: missing ray");
      os << " | (";
      for (int k = 0; k < 4; ++k) os << (k ? "," : "") << coord_token(r->coords()[k]);
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace witting
