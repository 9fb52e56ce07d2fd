#include "aluffi/points.hpp"

#include <algorithm>
#include <sstream>

#include "aluffi/errors.hpp"

namespace aluffi {

namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order until fn returns false.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(std::as_const(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

QMatrix columns_of(const PointSet& points, std::span<const std::size_t> which) {
  QMatrix m(points.n() + 1, which.size());
  for (std::size_t c = 0; c < which.size(); ++c)
    for (std::size_t r = 0; r <= points.n(); ++r) m(r, c) = points[which[c]][r];
  return m;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

ProjectivePoint unit_vector(std::size_t size, std::size_t i) {
  std::vector<Coefficient> c(size);
  c[i] = 1;
  return ProjectivePoint(std::move(c));
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::vector<Coefficient> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Coefficient& c) { return sgn(c) == 0; }))
    throw PreconditionError("projective point with all coordinates zero");
}

ProjectivePoint ProjectivePoint::canonical() const {
  std::size_t i = 0;
  while (sgn(coords_[i]) == 0) ++i;
  return scaled_to_one(i);
}

ProjectivePoint ProjectivePoint::scaled_to_one(std::size_t i) const {
  if (i >= coords_.size() || sgn(coords_[i]) == 0) throw PreconditionError("cannot scale a zero coordinate to one");
  const Coefficient inv = 1 / coords_[i];
  std::vector<Coefficient> c = coords_;
  for (auto& x : c) x *= inv;
  return ProjectivePoint(std::move(c));
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a.size() == b.size() && a.canonical().coords_ == b.canonical().coords_;
}

PointSet::PointSet(std::size_t n, std::vector<ProjectivePoint> points) : n_(n), points_(std::move(points)) {
  if (n == 0) throw PreconditionError("ambient dimension must be at least 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != n + 1)
      throw PreconditionError("point " + std::to_string(i + 1) + " does not have n+1 coordinates");
    for (std::size_t j = 0; j < i; ++j)
      if (points_[i] == points_[j])
        throw PreconditionError("points " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
  }
}

QMatrix PointSet::coordinate_matrix() const {
  const auto all = iota(size());
  return columns_of(*this, all);
}

PointSet PointSet::transformed(const QMatrix& a) const {
  std::vector<ProjectivePoint> out;
  out.reserve(size());
  for (const auto& p : points_) out.emplace_back(a * std::span<const Coefficient>(p.coords()));
  return PointSet(n_, std::move(out));
}

PointSet parse_points(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::size_t> line_numbers;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty()) continue;
    lines.push_back(std::move(tokens));
    line_numbers.push_back(number);
  }
  if (lines.empty()) throw ParseError("empty point file", 0);
  if (lines[0].size() != 2) throw ParseError("header must be 'n s'", line_numbers[0]);
  auto to_size = [&](const std::string& w, std::size_t at) {
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; }) || w.size() > 4)
      throw ParseError("expected a small non-negative integer, got '" + w + "'", at);
    return static_cast<std::size_t>(std::stoul(w));
  };
  const std::size_t n = to_size(lines[0][0], line_numbers[0]);
  const std::size_t s = to_size(lines[0][1], line_numbers[0]);
  if (n == 0 || n + 1 > kMaxVars) throw ParseError("unsupported ambient dimension", line_numbers[0]);
  if (lines.size() != s + 1)
    throw ParseError("expected " + std::to_string(s) + " point rows, found " + std::to_string(lines.size() - 1),
                     line_numbers.back());
  std::vector<ProjectivePoint> pts;
  for (std::size_t k = 1; k <= s; ++k) {
    if (lines[k].size() != n + 1)
      throw ParseError("point row must have " + std::to_string(n + 1) + " coordinates", line_numbers[k]);
    std::vector<Coefficient> c;
    for (const auto& w : lines[k]) {
      try {
        c.push_back(parse_coefficient(w));
      } catch (const ParseError&) {
        throw ParseError("invalid coordinate '" + w + "'", line_numbers[k]);
      }
    }
    try {
      pts.emplace_back(std::move(c));
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), line_numbers[k]);
    }
  }
  try {
    return PointSet(n, std::move(pts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line_numbers[0]);
  }
}

std::string format_points(const PointSet& points) {
  std::string out = std::to_string(points.n()) + " " + std::to_string(points.size()) + "\n";
  for (const auto& p : points.points()) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      out += format_coefficient(p[i]);
    }
    out += '\n';
  }
  return out;
}

bool glp_check(const PointSet& points) {
  const std::size_t s = points.size();
  const std::size_t n = points.n();
  if (s <= n) return rank(points.coordinate_matrix()) == s;
  return for_each_subset(s, n + 1, [&](const std::vector<std::size_t>& idx) {
    return sgn(determinant(columns_of(points, idx))) != 0;
  });
}

bool hyperplane_position_check(const PointSet& points) {
  const std::size_t s = points.size();
  const std::size_t n = points.n();
  if (s < n + 2) throw PreconditionError("hyperplane position needs at least n+2 points");
  if (rank(points.coordinate_matrix()) != n + 1) return false;  // everything on one hyperplane
  for (std::size_t outside = 0; outside < s; ++outside) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < s; ++i)
      if (i != outside) rest.push_back(i);
    if (rank(columns_of(points, rest)) != n) continue;
    // In general position inside H: every n of them are independent.
    const bool general = for_each_subset(rest.size(), n, [&](const std::vector<std::size_t>& sub) {
      std::vector<std::size_t> chosen;
      for (auto k : sub) chosen.push_back(rest[k]);
      return rank(columns_of(points, chosen)) == n;
    });
    if (general) return true;
  }
  return false;
}

Ideal vanishing_ideal_point(const ProjectivePoint& p, const PolyRing& ring) {
  if (p.size() != ring.num_vars()) throw PreconditionError("point and ring dimensions differ");
  QMatrix row(1, p.size());
  for (std::size_t i = 0; i < p.size(); ++i) row(0, i) = p[i];
  std::vector<Polynomial> forms;
  for (const auto& v : kernel_basis(row)) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < v.size(); ++j) terms.push_back({v[j], Monomial::variable(j)});
    forms.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(forms));
}

Ideal ideal_of_points(const PointSet& points) {
  if (points.size() == 0) throw PreconditionError("ideal_of_points needs at least one point");
  const PolyRing ring = points.ring();
  Ideal acc = vanishing_ideal_point(points[0], ring);
  for (std::size_t i = 1; i < points.size(); ++i) acc = intersect(acc, vanishing_ideal_point(points[i], ring));
  return minimalize(acc);
}

bool is_standard_frame(const PointSet& points) {
  const std::size_t n = points.n();
  if (points.size() < n + 2) return false;
  for (std::size_t i = 0; i <= n; ++i)
    if (!(points[i] == unit_vector(n + 1, i))) return false;
  if (!(points[n + 1] == ProjectivePoint(std::vector<Coefficient>(n + 1, Coefficient(1))))) return false;
  for (std::size_t h = n + 2; h < points.size(); ++h)
    if (sgn(points[h][n]) == 0) return false;
  return true;
}

FrameNormalization normalize_frame(const PointSet& points) {
  const std::size_t n = points.n();
  if (points.size() < n + 2) throw PreconditionError("frame normalization needs at least n+2 points");
  if (!glp_check(points)) throw GlpViolation("points are not in general linear position");
  const auto first = iota(n + 1);
  const QMatrix basis = columns_of(points, first);
  const auto c = solve(basis, points[n + 1].coords());
  if (!c) throw GlpViolation("first n+1 points are dependent");
  QMatrix scaled = basis;
  for (std::size_t col = 0; col <= n; ++col)
    for (std::size_t r = 0; r <= n; ++r) scaled(r, col) *= (*c)[col];
  const QMatrix change = inverse(scaled);
  std::vector<ProjectivePoint> out;
  for (std::size_t h = 0; h < points.size(); ++h) {
    ProjectivePoint q(change * std::span<const Coefficient>(points[h].coords()));
    out.push_back(h < n + 2 ? q : q.scaled_to_one(n));
  }
  return {change, PointSet(n, std::move(out))};
}

IgpGenerators igp_construct(const PointSet& points) {
  const std::size_t n = points.n();
  const std::size_t s = points.size();
  if (n < 2 || s < n + 2 || s > 2 * n) throw PreconditionError("igp_construct needs n+2 <= s <= 2n");
  if (!glp_check(points)) throw GlpViolation("points are not in general linear position");
  if (!is_standard_frame(points)) throw PreconditionError("points are not in the standard frame; normalize first");

  IgpGenerators out;
  out.n = n;
  out.s = s;
  out.t_first = 2 * n - s + 1;
  const std::size_t m = s - n - 1;

  // a[h][k] for the points beyond the frame, scaled so the last coordinate is 1.
  std::vector<std::vector<Coefficient>> a;
  for (std::size_t h = n + 2; h < s; ++h) a.push_back(points[h].scaled_to_one(n).coords());

  QMatrix system(m, m);
  for (std::size_t c = 0; c < m; ++c) {
    system(0, c) = 1;
    for (std::size_t r = 1; r < m; ++r) system(r, c) = a[r - 1][out.t_first + c];
  }
  QMatrix inv;
  try {
    inv = inverse(system);
  } catch (const PreconditionError&) {
    throw GlpViolation("singular coefficient system: input is not in general linear position");
  }

  const PolyRing ring = points.ring();
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (j == n && i >= out.t_first && i <= n - 1) continue;
      std::vector<Coefficient> rhs(m);
      rhs[0] = -1;
      for (std::size_t r = 1; r < m; ++r) rhs[r] = -a[r - 1][i] * a[r - 1][j];
      std::vector<Coefficient> alpha = inv * std::span<const Coefficient>(rhs);
      std::vector<Term> terms;
      Monomial xixj = Monomial::variable(i);
      xixj.set(j, 1);
      terms.push_back({1, xixj});
      for (std::size_t k = 0; k < m; ++k) {
        Monomial xtxn = Monomial::variable(out.t_first + k);
        xtxn.set(n, 1);
        terms.push_back({alpha[k], xtxn});
      }
      out.lambda.emplace_back(i, j);
      out.alpha.emplace(std::make_pair(i, j), std::move(alpha));
      out.generators.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
  }
  return out;
}

Ideal hyperplane_standard_ideal(std::size_t n) {
  if (n < 3) throw PreconditionError("hyperplane_standard_ideal needs n >= 3");
  const PolyRing ring = PolyRing::projective(n);
  auto x = [&](std::size_t i) { return Polynomial::variable(ring, i); };
  std::vector<Polynomial> gens;
  const Polynomial pivot = x(n - 2) * x(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(i == n - 2 && j == n - 1)) gens.push_back(x(i) * x(j) - pivot);
  for (std::size_t i = 0; i < n; ++i) gens.push_back(x(i) * x(n));
  return Ideal(ring, std::move(gens));
}

PointSet hyperplane_standard_configuration(std::size_t n) {
  std::vector<ProjectivePoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit_vector(n + 1, i));
  std::vector<Coefficient> unit(n + 1, Coefficient(1));
  unit[n] = 0;
  pts.emplace_back(std::move(unit));
  pts.push_back(unit_vector(n + 1, n));
  return PointSet(n, std::move(pts));
}

PointSet standard_frame(std::size_t n) {
  std::vector<ProjectivePoint> pts;
  for (std::size_t i = 0; i <= n; ++i) pts.push_back(unit_vector(n + 1, i));
  pts.emplace_back(std::vector<Coefficient>(n + 1, Coefficient(1)));
  return PointSet(n, std::move(pts));
}

PointSet coordinate_points(std::size_t n, std::size_t s) {
  if (s > n + 1) throw PreconditionError("P^n has only n+1 coordinate points");
  std::vector<ProjectivePoint> pts;
  for (std::size_t i = 0; i < s; ++i) pts.push_back(unit_vector(n + 1, i));
  return PointSet(n, std::move(pts));
}

}  // namespace aluffi
