#include "witting/gf4.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace witting::gf4 {

namespace {

// Codes: 0 -> 0, 1 -> 1, 2 -> w, 3 -> wb.
constexpr std::uint8_t kAdd[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr std::uint8_t kMul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};

Mat scaled(const Mat& m, GF4 s) {
  Mat out;
  for (int k = 0; k < 16; ++k) out[k] = m[k] * s;
  return out;
}

Mat canonical_scale(const Mat& m) {
  for (const auto& x : m) {
    if (!x.is_zero()) return scaled(m, x.inverse());
  }
  throw std::invalid_argument("zero matrix has no projective class");
}

}  // namespace

GF4 operator+(GF4 x, GF4 y) { return GF4(kAdd[x.v_][y.v_]); }
GF4 operator*(GF4 x, GF4 y) { return GF4(kMul[x.v_][y.v_]); }

GF4 GF4::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F4");
  // w * wb = 1
  static constexpr std::uint8_t inv[4] = {0, 1, 3, 2};
  return GF4(inv[v_]);
}

std::string GF4::str() const {
  static const char* names[4] = {"0", "1", "w", "wb"};
  return names[v_];
}

GF4 gf4_add(GF4 x, GF4 y) { return x + y; }
GF4 gf4_mul(GF4 x, GF4 y) { return x * y; }
GF4 gf4_conj(GF4 x) { return x.conj(); }

std::string PG34Point::str() const {
  std::string s = "(";
  for (int k = 0; k < 4; ++k) s += (k ? "," : "") + coords[k].str();
  return s + ")";
}

PG34Point canonical_point(const Vec& v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    GF4 inv = x.inverse();
    PG34Point p;
    for (int k = 0; k < 4; ++k) p.coords[k] = v[k] * inv;
    return p;
  }
  throw std::invalid_argument("zero vector is not a point of PG(3,4)");
}

PG34Point reduce_ray(const Ray& r) {
  Vec v{};
  for (int k = 0; k < 4; ++k) {
    const Eisenstein& x = r.coords()[k];
    if (x.is_zero()) continue;
    auto u = x.as_unit();
    if (!u) throw std::invalid_argument("coordinate " + x.str() + " is not 0 or a unit");
    static const GF4 powers[3] = {GF4::one(), GF4::w(), GF4::wb()};
    v[k] = powers[u->second];
  }
  return canonical_point(v);
}

std::vector<PG34Point> reduced_points() {
  std::vector<PG34Point> out;
  for (const auto& r : Configuration::get().rays()) out.push_back(reduce_ray(r));
  return out;
}

bool hermitian_orthogonal(const PG34Point& p, const PG34Point& q) {
  GF4 s;
  for (int k = 0; k < 4; ++k) s = s + p.coords[k] * q.coords[k].conj();
  return s.is_zero();
}

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat out{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      GF4 s;
      for (int k = 0; k < 4; ++k) s = s + x[r * 4 + k] * y[k * 4 + c];
      out[r * 4 + c] = s;
    }
  return out;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  Vec out{};
  for (int r = 0; r < 4; ++r) {
    GF4 s;
    for (int k = 0; k < 4; ++k) s = s + m[r * 4 + k] * v[k];
    out[r] = s;
  }
  return out;
}

GF4 det(const Mat& m) {
  // Characteristic 2: the determinant is the permanent.
  std::array<int, 4> perm = {0, 1, 2, 3};
  GF4 sum;
  do {
    GF4 prod = GF4::one();
    for (int r = 0; r < 4; ++r) prod = prod * m[r * 4 + perm[r]];
    sum = sum + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

std::string mat_str(const Mat& m) {
  std::string s;
  for (int k = 0; k < 16; ++k) s += (k ? (k % 4 ? " " : "; ") : "") + m[k].str();
  return s;
}

std::vector<Mat> gf4_generators() {
  const GF4 o = GF4::zero(), i = GF4::one(), w = GF4::w(), b = GF4::wb();
  return {
      Mat{i, o, o, o,
          o, b, o, o,
          o, o, b, o,
          o, o, o, b},
      Mat{i, w, w, o,
          w, i, w, o,
          w, w, i, o,
          o, o, o, b},
      Mat{b, o, o, o,
          o, b, o, o,
          o, o, i, o,
          o, o, o, b},
      Mat{b, o, o, o,
          o, i, w, w,
          o, w, i, w,
          o, w, w, i},
  };
}

std::uint32_t pack(const Mat& m) {
  std::uint32_t code = 0;
  for (int k = 0; k < 16; ++k) code |= static_cast<std::uint32_t>(m[k].code()) << (2 * k);
  return code;
}

Mat unpack(std::uint32_t code) {
  Mat m;
  for (int k = 0; k < 16; ++k) m[k] = GF4::from_code(static_cast<std::uint8_t>(code >> (2 * k)));
  return m;
}

std::vector<std::uint32_t> projective_closure(const std::vector<Mat>& gens, std::size_t cap) {
  Mat id{};
  for (int k = 0; k < 4; ++k) id[k * 5] = GF4::one();
  std::vector<std::uint32_t> elems{pack(id)};
  std::unordered_set<std::uint32_t> seen{elems.front()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Mat cur = unpack(elems[i]);
    for (const auto& g : gens) {
      std::uint32_t code = pack(canonical_scale(mat_mul(g, cur)));
      if (seen.insert(code).second) {
        elems.push_back(code);
        if (elems.size() > cap) throw std::runtime_error("F4 closure exceeded cap");
      }
    }
  }
  return elems;
}

std::vector<std::pair<int, int>> orthogonality_edges(const std::vector<PG34Point>& pts) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (hermitian_orthogonal(pts[i], pts[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return edges;
}

}  // namespace witting::gf4
