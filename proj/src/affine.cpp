#include "vclines/affine.hpp"

#include "vclines/shatter.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace vclines {

namespace {

int leading(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;
}

// Eliminates v against RREF rows at their pivots; v lies in the row span iff
// the result is zero.
Vec reduce_by(Vec v, const Mat& basis) {
  for (const Vec& row : basis) {
    int p = leading(row);
    if (v[p] == 0) continue;
    Rational f = v[p];
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * row[j];
  }
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

AffineSubspace AffineSubspace::make(Vec offset, Mat directions) {
  if (offset.empty()) throw std::invalid_argument("affine subspace needs an ambient dimension");
  for (const Vec& d : directions)
    if (d.size() != offset.size())
      throw std::invalid_argument("direction width does not match the ambient dimension");
  rref(directions);
  offset = reduce_by(std::move(offset), directions);
  return AffineSubspace{std::move(offset), std::move(directions)};
}

bool AffineSubspace::contains_point(const Vec& p) const {
  if (static_cast<int>(p.size()) != ambient())
    throw std::invalid_argument("point dimension mismatch");
  return is_zero(reduce_by(vec_sub(p, offset), basis));
}

bool AffineSubspace::contains(const AffineSubspace& s) const {
  if (s.ambient() != ambient()) throw std::invalid_argument("ambient dimension mismatch");
  if (s.dim() > dim()) return false;
  if (!contains_point(s.offset)) return false;
  for (const Vec& d : s.basis)
    if (!is_zero(reduce_by(d, basis))) return false;
  return true;
}

bool subspace_less(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.ambient() != b.ambient()) return a.ambient() < b.ambient();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.offset != b.offset) return a.offset < b.offset;
  return a.basis < b.basis;
}

AffineSubspace affine_span(const std::vector<Vec>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine span of an empty point list");
  Mat dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(vec_sub(pts[i], pts[0]));
  return AffineSubspace::make(pts[0], std::move(dirs));
}

std::pair<Mat, Vec> equations_of(const AffineSubspace& s) {
  Mat n = nullspace(s.basis, s.ambient());
  Vec d(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) d[i] = dot(n[i], s.offset);
  return {std::move(n), std::move(d)};
}

std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
  auto [na, da] = equations_of(a);
  auto [nb, db] = equations_of(b);
  Mat sys = std::move(na);
  Vec rhs = std::move(da);
  sys.insert(sys.end(), nb.begin(), nb.end());
  rhs.insert(rhs.end(), db.begin(), db.end());
  std::optional<Vec> point = solve(sys, rhs);
  if (!point) return std::nullopt;
  return AffineSubspace::make(std::move(*point), nullspace(std::move(sys), a.ambient()));
}

AffineConfig AffineConfig::build(int ambient, std::vector<AffineSubspace> els) {
  if (ambient < 2) throw std::invalid_argument("ambient dimension must be at least 2");
  if (els.size() > 31) throw std::invalid_argument("too many elements for a 32-bit trace mask");
  for (const AffineSubspace& e : els) {
    if (e.ambient() != ambient) throw std::invalid_argument("element ambient dimension mismatch");
    if (e.dim() != ambient - 2) throw std::invalid_argument("elements must have codimension 2");
  }
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j)
      if (els[i] == els[j]) throw std::invalid_argument("duplicate elements");
  return AffineConfig{ambient, std::move(els)};
}

Mask hyperplane_trace(const AffineConfig& cfg, const AffineSubspace& v) {
  if (v.ambient() != cfg.ambient || v.dim() != cfg.ambient - 1)
    throw std::invalid_argument("trace requires a hyperplane of the same ambient space");
  Mask t = 0;
  for (int i = 0; i < cfg.size(); ++i)
    if (v.contains(cfg.elements[i])) t |= bit(i);
  return t;
}

std::vector<AffineSubspace> candidate_hyperplanes(const AffineConfig& cfg) {
  std::vector<AffineSubspace> out;
  for (int i = 0; i < cfg.size(); ++i) {
    for (int j = i + 1; j < cfg.size(); ++j) {
      const AffineSubspace& a = cfg.elements[i];
      const AffineSubspace& b = cfg.elements[j];
      Mat dirs = a.basis;
      dirs.insert(dirs.end(), b.basis.begin(), b.basis.end());
      dirs.push_back(vec_sub(b.offset, a.offset));
      AffineSubspace span = AffineSubspace::make(a.offset, std::move(dirs));
      if (span.dim() == cfg.ambient - 1) out.push_back(std::move(span));
    }
  }
  std::sort(out.begin(), out.end(), subspace_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TraceFamily hyperplane_family(const AffineConfig& cfg) {
  std::vector<Mask> classes;
  for (const AffineSubspace& v : candidate_hyperplanes(cfg))
    classes.push_back(hyperplane_trace(cfg, v));
  return TraceFamily(cfg.size(), std::move(classes));
}

AffineSubspace find_good_translate(const AffineConfig& cfg, const AffineSubspace& u_dir) {
  const int n = cfg.ambient;
  if (u_dir.ambient() != n || u_dir.dim() != n - 1)
    throw std::invalid_argument("cut must be a hyperplane direction");
  if (!is_zero(u_dir.offset))
    throw std::invalid_argument("cut direction must pass through the origin");
  auto [normals, rhs] = equations_of(u_dir);
  const Vec& w = normals.at(0);

  for (const AffineSubspace& e : cfg.elements) {
    bool transverse = false;
    for (const Vec& b : e.basis) transverse = transverse || dot(w, b) != 0;
    if (!transverse)
      throw std::invalid_argument("an element's direction space lies inside the cut direction");
  }

  std::vector<AffineSubspace> cands = candidate_hyperplanes(cfg);
  std::vector<Mask> cand_traces;
  for (const AffineSubspace& v : cands) cand_traces.push_back(hyperplane_trace(cfg, v));

  const int m = cfg.size();
  // Each element pair rules out at most one translate (two distinct parallel
  // slices of the pair's intersection flat cannot both fill it), and likewise
  // each (hyperplane, outside element) pair, so some j below must succeed.
  const long bound = 1 + static_cast<long>(m) * (m - 1) / 2 +
                     static_cast<long>(cands.size()) * m;
  const int c = leading(w);

  for (long j = 0; j <= bound; ++j) {
    Vec q(n, Rational(0));
    q[c] = j;
    AffineSubspace u_prime = AffineSubspace::make(std::move(q), u_dir.basis);

    std::vector<AffineSubspace> cuts;
    bool ok = true;
    for (const AffineSubspace& e : cfg.elements) {
      std::optional<AffineSubspace> f = intersect(e, u_prime);
      if (!f || f->dim() != n - 3) {
        ok = false;
        break;
      }
      cuts.push_back(std::move(*f));
    }
    for (std::size_t a = 0; ok && a < cuts.size(); ++a)
      for (std::size_t b = a + 1; ok && b < cuts.size(); ++b)
        if (cuts[a] == cuts[b]) ok = false;
    for (std::size_t v = 0; ok && v < cands.size(); ++v)
      for (int i = 0; ok && i < m; ++i)
        if (!(cand_traces[v] & bit(i)) && cands[v].contains(cuts[i])) ok = false;
    if (ok) return u_prime;
  }
  throw std::logic_error("translate search exceeded its bound");
}

namespace {

// Parametric form of e intersected with the hyperplane {x : w.x = d}:
// point p0 plus independent direction rows. nullopt when the intersection is
// empty or e lies inside the hyperplane.
struct ParametricCut {
  Vec p0;
  Mat dirs;
};

std::optional<ParametricCut> parametric_cut(const AffineSubspace& e, const Vec& w,
                                            const Rational& d) {
  const std::size_t k = e.basis.size();
  Vec alpha(k);
  int nz = -1;
  for (std::size_t i = 0; i < k; ++i) {
    alpha[i] = dot(w, e.basis[i]);
    if (nz < 0 && alpha[i] != 0) nz = static_cast<int>(i);
  }
  if (nz < 0) return std::nullopt;
  Rational beta = d - dot(w, e.offset);

  Vec t0(k, Rational(0));
  t0[static_cast<std::size_t>(nz)] = beta / alpha[nz];
  Vec p0 = e.offset;
  for (std::size_t i = 0; i < k; ++i) p0 = vec_add(p0, vec_scale(t0[i], e.basis[i]));

  Mat dirs;
  for (std::size_t f = 0; f < k; ++f) {
    if (static_cast<int>(f) == nz) continue;
    // Kernel vector of alpha.t = 0 with a 1 in slot f, pushed forward along
    // the element's basis.
    Vec dir = e.basis[f];
    dir = vec_add(dir, vec_scale(-alpha[f] / alpha[nz], e.basis[nz]));
    dirs.push_back(std::move(dir));
  }
  return ParametricCut{std::move(p0), std::move(dirs)};
}

// Membership of b in the column span of the rows of m, via an exact solve.
bool in_row_span(const Mat& m, const Vec& b) {
  if (m.empty()) return is_zero(b);
  Mat cols(b.size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) cols[j][i] = m[i][j];
  return solve(cols, b).has_value();
}

bool cuts_equal(const ParametricCut& a, const ParametricCut& b) {
  if (a.dirs.size() != b.dirs.size()) return false;
  if (!in_row_span(a.dirs, vec_sub(b.p0, a.p0))) return false;
  for (const Vec& d : b.dirs)
    if (!in_row_span(a.dirs, d)) return false;
  return true;
}

Vec scale_canonical(Vec v) {
  int p = leading(v);
  if (p < 0) return v;
  Rational f = v[p];
  for (Rational& x : v) x /= f;
  return v;
}

}  // namespace

bool good_translate_conditions(const AffineConfig& cfg, const AffineSubspace& u_prime) {
  const int n = cfg.ambient;
  if (u_prime.ambient() != n || u_prime.dim() != n - 1) return false;
  auto [normals, rhs] = equations_of(u_prime);
  const Vec& w = normals.at(0);
  const Rational& d = rhs.at(0);

  std::vector<ParametricCut> cuts;
  for (const AffineSubspace& e : cfg.elements) {
    std::optional<ParametricCut> f = parametric_cut(e, w, d);
    if (!f) return false;
    cuts.push_back(std::move(*f));
  }
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = i + 1; j < cuts.size(); ++j)
      if (cuts_equal(cuts[i], cuts[j])) return false;

  // Hyperplanes through element pairs, rebuilt from normal equations rather
  // than affine spans.
  std::vector<std::pair<Vec, Rational>> planes;
  for (int i = 0; i < cfg.size(); ++i) {
    for (int j = i + 1; j < cfg.size(); ++j) {
      const AffineSubspace& a = cfg.elements[i];
      const AffineSubspace& b = cfg.elements[j];
      Mat sys = a.basis;
      sys.insert(sys.end(), b.basis.begin(), b.basis.end());
      sys.push_back(vec_sub(b.offset, a.offset));
      Mat kern = nullspace(std::move(sys), n);
      if (kern.empty()) continue;
      if (kern.size() > 1) throw std::logic_error("element pair spans fewer than n-1 dimensions");
      Vec v = scale_canonical(std::move(kern[0]));
      planes.emplace_back(std::move(v), Rational(0));
      planes.back().second = dot(planes.back().first, a.offset);
    }
  }
  std::sort(planes.begin(), planes.end());
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());

  for (const auto& [v, c] : planes) {
    Mask inside = 0;
    for (int i = 0; i < cfg.size(); ++i) {
      const AffineSubspace& e = cfg.elements[i];
      bool in = dot(v, e.offset) == c;
      for (const Vec& b : e.basis) in = in && dot(v, b) == 0;
      if (in) inside |= bit(i);
    }
    for (int i = 0; i < cfg.size(); ++i) {
      if (inside & bit(i)) continue;
      bool cut_in = dot(v, cuts[i].p0) == c;
      for (const Vec& dir : cuts[i].dirs) cut_in = cut_in && dot(v, dir) == 0;
      if (cut_in) return false;
    }
  }
  return true;
}

namespace {

// First canonical integer normal (entries in [-R, R], leading entry positive)
// whose hyperplane direction is transverse to every element's direction
// space. Exists because each element only rules out a codimension >= 1
// subspace of normals.
Vec pick_normal(const AffineConfig& cfg) {
  const int n = cfg.ambient;
  for (int radius = 1; radius <= 1000; ++radius) {
    std::vector<int> entry(n, -radius);
    while (true) {
      bool at_radius = false;
      for (int e : entry) at_radius = at_radius || e == radius || e == -radius;
      int first_nz = -1;
      for (int i = 0; i < n && first_nz < 0; ++i)
        if (entry[i] != 0) first_nz = i;
      if (at_radius && first_nz >= 0 && entry[first_nz] > 0) {
        Vec w(n);
        for (int i = 0; i < n; ++i) w[i] = entry[i];
        bool good = true;
        for (const AffineSubspace& e : cfg.elements) {
          bool transverse = false;
          for (const Vec& b : e.basis) transverse = transverse || dot(w, b) != 0;
          good = good && transverse;
        }
        if (good) return w;
      }
      int i = n - 1;
      while (i >= 0 && entry[i] == radius) entry[i--] = -radius;
      if (i < 0) break;
      ++entry[i];
    }
  }
  throw std::logic_error("no transverse hyperplane direction found");
}

}  // namespace

Reduction reduce_dimension(const AffineConfig& cfg) {
  const int n = cfg.ambient;
  if (n <= 2) throw std::invalid_argument("config is already planar");

  Vec w = pick_normal(cfg);
  AffineSubspace u_dir = AffineSubspace::make(Vec(n, Rational(0)), nullspace({w}, n));
  AffineSubspace u_prime = find_good_translate(cfg, u_dir);

  auto [normals, rhs] = equations_of(u_prime);
  const int c = leading(normals.at(0));

  auto drop = [c](const Vec& v) {
    Vec out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (static_cast<int>(i) != c) out.push_back(v[i]);
    return out;
  };

  std::vector<AffineSubspace> images;
  for (const AffineSubspace& e : cfg.elements) {
    std::optional<AffineSubspace> f = intersect(e, u_prime);
    if (!f) throw std::logic_error("good translate misses an element");
    Mat dirs;
    for (const Vec& b : f->basis) dirs.push_back(drop(b));
    images.push_back(AffineSubspace::make(drop(f->offset), std::move(dirs)));
  }
  return Reduction{AffineConfig::build(n - 1, std::move(images)), std::move(u_prime), c};
}

PointConfig planar_config(const AffineConfig& cfg) {
  AffineConfig cur = cfg;
  while (cur.ambient > 2) cur = reduce_dimension(cur).reduced;
  std::vector<Point> pts;
  for (const AffineSubspace& e : cur.elements)
    pts.push_back(Point{e.offset[0], e.offset[1]});
  return PointConfig::build(std::move(pts));
}

AffineConfig lift_planar(const PointConfig& cfg) {
  std::vector<AffineSubspace> els;
  for (const Point& p : cfg.points())
    els.push_back(AffineSubspace::make({p.x, p.y, Rational(0)},
                                       {{Rational(0), Rational(0), Rational(1)}}));
  return AffineConfig::build(3, std::move(els));
}

VcCheckReport vc_equal_check(const AffineConfig& cfg, int k, int limit) {
  if (cfg.size() > limit) throw std::invalid_argument("config exceeds the size guard");
  if (k < 1) throw std::invalid_argument("k must be positive");
  VcCheckReport r;
  r.k = k;
  r.m = cfg.size();
  r.direct_shattered = hyperplane_family(cfg).shatters(k);
  r.planar_shattered = shatters(planar_config(cfg), k, false, std::max(limit, 16)).shattered;
  return r;
}

}  // namespace vclines
