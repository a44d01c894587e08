#include "grasshilb/grassmannian.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "grasshilb/error.hpp"
#include "grasshilb/ideal.hpp"

namespace grasshilb {

namespace {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> pick = [&](int next) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int i = next; i <= n - (k - static_cast<int>(current.size())); ++i) {
      current.push_back(i);
      pick(i + 1);
      current.pop_back();
    }
  };
  pick(0);
  return out;
}

RationalMatrix select_columns(const RationalMatrix& m, std::span<const int> cols) {
  RationalMatrix out(m.rows(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(r, static_cast<std::size_t>(cols[c]));
  return out;
}

RationalMatrix select_rows(const RationalMatrix& m, std::span<const int> rows) {
  RationalMatrix out(rows.size(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(static_cast<std::size_t>(rows[r]), c);
  return out;
}

// Small nonzero integer vector from raw mt19937_64 output.
std::vector<Rational> random_parameters(std::size_t size, std::mt19937_64& engine) {
  std::vector<Rational> out(size);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : out) {
      x = static_cast<long>(engine() % 7) - 3;
      nonzero = nonzero || !is_zero(x);
    }
  }
  return out;
}

}  // namespace

GrassmannianContext::GrassmannianContext(int k, int n) : k_(k), n_(n) {
  if (!(1 < k && k < n - 1)) {
    throw Error(ErrorKind::InvalidParameter,
                "G(" + std::to_string(k) + "," + std::to_string(n) +
                    ") needs 1 < k < n-1 (otherwise it is a projective space)");
  }
  if (n > 16) throw Error(ErrorKind::InvalidParameter, "n > 16 is outside desk scale");
  subsets_ = k_subsets(n, k);
  for (std::size_t i = 0; i < subsets_.size(); ++i) position_.emplace(subsets_[i], i);
}

std::size_t GrassmannianContext::index_of(std::span<const int> sorted_subset) const {
  auto it = position_.find(std::vector<int>(sorted_subset.begin(), sorted_subset.end()));
  if (it == position_.end()) throw Error(ErrorKind::InvalidParameter, "not a k-subset of {1..n}");
  return it->second;
}

std::string GrassmannianContext::coordinate_name(std::size_t index) const {
  std::string out = "p_";
  const auto& s = subsets_.at(index);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i && n_ > 9) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out;
}

FlagBasis::FlagBasis(RationalMatrix vectors) : vectors_(std::move(vectors)) {
  if (vectors_.rows() != vectors_.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "flag basis must be square");
  }
  if (rank(vectors_) != vectors_.rows()) {
    throw Error(ErrorKind::RankDeficient, "flag basis vectors are not independent");
  }
}

FlagBasis FlagBasis::standard(int n) {
  return FlagBasis(RationalMatrix::identity(static_cast<std::size_t>(n)));
}

FlagBasis FlagBasis::random(int n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  const auto size = static_cast<std::size_t>(n);
  while (true) {
    RationalMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) m(r, c) = static_cast<long>(engine() % 7) - 3;
    if (rank(m) == size) return FlagBasis(std::move(m));
  }
}

std::string_view to_string(PlaneFamily family) {
  return family == PlaneFamily::Sub ? "SUB" : "QUOT";
}

PlaneFamily parse_plane_family(std::string_view text) {
  if (text == "SUB") return PlaneFamily::Sub;
  if (text == "QUOT") return PlaneFamily::Quot;
  throw Error(ErrorKind::Parse, "family must be \"SUB\" or \"QUOT\", got \"" + std::string(text) + "\"");
}

bool family_admits(PlaneFamily family, int k, int n, int m) {
  if (m < 1) return false;
  return family == PlaneFamily::Sub ? m <= n - k : m <= k;
}

Partition family_plane_class(PlaneFamily family, int m, const BoxContext& box) {
  if (!family_admits(family, box.k(), box.n(), m)) {
    throw Error(ErrorKind::InvalidParameter,
                std::string(to_string(family)) + " family has no " + std::to_string(m) +
                    "-planes in G(" + std::to_string(box.k()) + "," + std::to_string(box.n()) + ")");
  }
  const int w = box.width();
  if (family == PlaneFamily::Sub) {
    const int rest[] = {w - m};
    return full_rows_then(box.k() - 1, rest, box);
  }
  std::vector<int> rest(static_cast<std::size_t>(m), w - 1);
  return full_rows_then(box.k() - m, rest, box);
}

PlaneFamilySpec::PlaneFamilySpec(PlaneFamily family, int m, FlagBasis flag,
                                 GrassmannianContext context)
    : family_(family), m_(m), flag_(std::move(flag)), context_(std::move(context)) {
  if (m < 2) throw Error(ErrorKind::InvalidParameter, "plane dimension m must be >= 2");
  if (flag_.n() != context_.n()) throw Error(ErrorKind::DimensionMismatch, "flag size differs from n");
  if (!family_admits(family, context_.k(), context_.n(), m)) {
    throw Error(ErrorKind::InvalidParameter,
                family == PlaneFamily::Sub ? "SUB family needs m <= n-k" : "QUOT family needs m <= k");
  }
}

PluckerPoint::PluckerPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_zero(q); })) {
    throw Error(ErrorKind::InvalidParameter, "the zero vector is not a projective point");
  }
}

bool PluckerPoint::proportional_to(const PluckerPoint& other) const {
  if (coords_.size() != other.coords_.size()) return false;
  // p ~ q iff p_i q_j = p_j q_i for all i, j; compare against one pivot.
  std::size_t pivot = 0;
  while (is_zero(coords_[pivot])) ++pivot;
  if (is_zero(other.coords_[pivot])) return false;
  const Rational ratio = other.coords_[pivot] / coords_[pivot];
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] * ratio != other.coords_[i]) return false;
  }
  return true;
}

PluckerPoint plucker_embed(const RationalMatrix& m, const GrassmannianContext& ctx) {
  if (m.rows() != static_cast<std::size_t>(ctx.k()) || m.cols() != static_cast<std::size_t>(ctx.n())) {
    throw Error(ErrorKind::DimensionMismatch, "plucker_embed needs a k x n matrix");
  }
  if (rank(m) != m.rows()) throw Error(ErrorKind::RankDeficient, "matrix rows are dependent");
  std::vector<Rational> coords;
  coords.reserve(ctx.coordinate_count());
  for (const auto& subset : ctx.subsets()) coords.push_back(determinant(select_columns(m, subset)));
  return PluckerPoint(std::move(coords));
}

std::vector<HomogeneousPoly> plucker_relations(const GrassmannianContext& ctx) {
  const int k = ctx.k();
  const int n = ctx.n();
  const std::size_t vars = ctx.coordinate_count();
  std::vector<HomogeneousPoly> out;
  std::map<std::string, bool> seen;

  for (const auto& a : k_subsets(n, k - 1)) {
    for (const auto& b : k_subsets(n, k + 1)) {
      HomogeneousPoly rel(vars, 2);
      for (std::size_t t = 0; t < b.size(); ++t) {
        const int bt = b[t];
        if (std::find(a.begin(), a.end(), bt) != a.end()) continue;
        // Sorting (a_1..a_{k-1}, b_t) moves b_t past every a_i > b_t.
        std::vector<int> left = a;
        left.push_back(bt);
        const long passes = std::count_if(a.begin(), a.end(), [&](int x) { return x > bt; });
        std::sort(left.begin(), left.end());
        std::vector<int> right;
        for (std::size_t s = 0; s < b.size(); ++s)
          if (s != t) right.push_back(b[s]);
        const int sign = ((static_cast<long>(t) + passes) % 2 == 0) ? 1 : -1;
        const Monomial mono = Monomial::variable(vars, ctx.index_of(left)) *
                              Monomial::variable(vars, ctx.index_of(right));
        rel.add_term(mono, sign);
      }
      if (rel.is_zero()) continue;
      const Rational lead = rel.terms().begin()->second;
      rel = rel.scaled(1 / lead);
      if (seen.emplace(to_string(rel), true).second) out.push_back(std::move(rel));
    }
  }
  return out;
}

bool on_grassmannian(const PluckerPoint& p, std::span<const HomogeneousPoly> relations) {
  for (const auto& q : relations) {
    if (!is_zero(q.evaluate(p.coords()))) return false;
  }
  return true;
}

bool on_grassmannian(const PluckerPoint& p, const GrassmannianContext& ctx) {
  if (p.coords().size() != ctx.coordinate_count()) {
    throw Error(ErrorKind::DimensionMismatch, "point has the wrong number of coordinates");
  }
  const auto relations = plucker_relations(ctx);
  return on_grassmannian(p, relations);
}

RationalMatrix plane_from_plucker(const PluckerPoint& p, const GrassmannianContext& ctx) {
  if (p.coords().size() != ctx.coordinate_count()) {
    throw Error(ErrorKind::DimensionMismatch, "point has the wrong number of coordinates");
  }
  const int k = ctx.k();
  const int n = ctx.n();
  // (v ∧ ω)_K = sum_{pos} (-1)^pos v_{K[pos]} p_{K - K[pos]}, one row per (k+1)-subset K.
  const auto bigger = k_subsets(n, k + 1);
  RationalMatrix wedge(bigger.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < bigger.size(); ++r) {
    const auto& kset = bigger[r];
    for (std::size_t pos = 0; pos < kset.size(); ++pos) {
      std::vector<int> rest;
      for (std::size_t s = 0; s < kset.size(); ++s)
        if (s != pos) rest.push_back(kset[s]);
      const Rational& coord = p.coords()[ctx.index_of(rest)];
      if (is_zero(coord)) continue;
      wedge(r, static_cast<std::size_t>(kset[pos])) = pos % 2 == 0 ? coord : Rational(-coord);
    }
  }
  const auto kernel = nullspace(wedge);
  if (kernel.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorKind::NotOnGrassmannian,
                "point is not decomposable: annihilator has dimension " +
                    std::to_string(kernel.size()) + ", expected " + std::to_string(k));
  }
  RationalMatrix v(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < kernel.size(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) v(i, j) = kernel[i](j, 0);
  if (!plucker_embed(v, ctx).proportional_to(p)) {
    throw Error(ErrorKind::NotOnGrassmannian, "annihilator does not reproduce the point");
  }
  return v;
}

RationalMatrix parametrize_plane(const PlaneFamilySpec& spec) {
  const auto& ctx = spec.context();
  const auto& flag = spec.flag().vectors();
  const int k = ctx.k();
  const int m = spec.m();
  std::vector<std::vector<Rational>> columns;
  for (int j = 0; j <= m; ++j) {
    std::vector<int> rows;
    Rational sign = 1;
    if (spec.family() == PlaneFamily::Sub) {
      for (int i = 0; i < k - 1; ++i) rows.push_back(i);
      rows.push_back(k - 1 + j);
    } else {
      for (int i = 0; i < k - m; ++i) rows.push_back(i);
      for (int i = 0; i <= m; ++i)
        if (i != j) rows.push_back(k - m + i);
      if (j % 2 == 1) sign = -1;
    }
    auto coords = plucker_embed(select_rows(flag, rows), ctx).coords();
    for (auto& c : coords) c *= sign;
    columns.push_back(std::move(coords));
  }
  return RationalMatrix::from_columns(columns);
}

PluckerPoint point_on_plane(const RationalMatrix& plane, std::span<const Rational> params) {
  return PluckerPoint(plane * params);
}

bool plane_in_grassmannian(const RationalMatrix& plane, const GrassmannianContext& ctx) {
  if (plane.rows() != ctx.coordinate_count()) {
    throw Error(ErrorKind::DimensionMismatch, "plane rows must equal the number of Plücker coordinates");
  }
  const auto relations = plucker_relations(ctx);
  std::vector<std::vector<Rational>> columns;
  for (std::size_t j = 0; j < plane.cols(); ++j) columns.push_back(plane.column(j));
  for (const auto& q : relations) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (!is_zero(q.evaluate(columns[i]))) return false;
      for (std::size_t j = i + 1; j < columns.size(); ++j) {
        std::vector<Rational> sum(columns[i]);
        for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += columns[j][r];
        if (!is_zero(q.evaluate(sum))) return false;
      }
    }
  }
  return true;
}

bool schubert_membership(const RationalMatrix& v, const Partition& a, const FlagBasis& flag) {
  const auto k = static_cast<int>(v.rows());
  const int n = flag.n();
  if (static_cast<int>(v.cols()) != n || static_cast<int>(a.size()) != k) {
    throw Error(ErrorKind::DimensionMismatch, "membership: V, partition and flag disagree on k or n");
  }
  if (rank(v) != v.rows()) throw Error(ErrorKind::RankDeficient, "V is not a k-plane");
  for (int i = 1; i <= k; ++i) {
    const int j = n - k + i - a[static_cast<std::size_t>(i - 1)];
    const auto meet = static_cast<int>(intersection_dimension(v, flag.subspace(j)));
    if (meet < i) return false;
  }
  return true;
}

PlaneClassification classify_plane(const RationalMatrix& plane, const GrassmannianContext& ctx,
                                   std::uint64_t seed) {
  if (plane.rows() != ctx.coordinate_count()) {
    throw Error(ErrorKind::DimensionMismatch, "plane rows must equal the number of Plücker coordinates");
  }
  const int m = static_cast<int>(plane.cols()) - 1;
  if (m < 2) throw Error(ErrorKind::InvalidParameter, "classification needs m >= 2");
  if (rank(plane) != plane.cols()) {
    throw Error(ErrorKind::RankDeficient, "plane columns are dependent");
  }
  if (!plane_in_grassmannian(plane, ctx)) {
    throw Error(ErrorKind::NotOnGrassmannian, "the plane is not contained in G(k,n)");
  }

  const int k = ctx.k();
  std::vector<std::vector<Rational>> params;
  for (int j = 0; j <= m; ++j) {
    std::vector<Rational> e(static_cast<std::size_t>(m + 1));
    e[static_cast<std::size_t>(j)] = 1;
    params.push_back(std::move(e));
  }
  params.emplace_back(static_cast<std::size_t>(m + 1), Rational(1));

  std::mt19937_64 engine(seed);
  RationalMatrix common;
  RationalMatrix span;
  const std::size_t cap = 2 * static_cast<std::size_t>(m + 2);
  for (std::size_t used = 0;; ++used) {
    if (used >= params.size()) {
      if (params.size() >= cap) break;
      params.push_back(random_parameters(static_cast<std::size_t>(m + 1), engine));
    }
    const RationalMatrix v = plane_from_plucker(point_on_plane(plane, params[used]), ctx);
    if (used == 0) {
      common = v;
      span = v;
    } else {
      common = row_space_intersection(common, v);
      span = row_space_basis(vstack(span, v));
    }
    if (used + 1 < static_cast<std::size_t>(m + 2)) continue;

    const int w = static_cast<int>(rank(common));
    const int u = static_cast<int>(rank(span));
    std::optional<PlaneFamily> family;
    if (w == k - 1 && u == k + m) family = PlaneFamily::Sub;
    if (w == k - m && u == k + 1) family = PlaneFamily::Quot;
    if (family) {
      const BoxContext box = ctx.box();
      return PlaneClassification{*family,
                                 SchubertClass{family_plane_class(*family, m, box), box},
                                 row_space_basis(common), span};
    }
  }
  throw Error(ErrorKind::UnclassifiablePlane,
              "intersection/sum dimensions match neither the SUB nor the QUOT family");
}

RationalMatrix span_of_hypersurface(const RationalMatrix& plane, const HomogeneousPoly& form) {
  const std::size_t vars = plane.cols();
  if (form.nvars() != vars) {
    throw Error(ErrorKind::DimensionMismatch, "form must live on the plane's m+1 coordinates");
  }
  if (form.degree() <= 1) {
    throw Error(ErrorKind::InvalidParameter, "span of a hypersurface needs degree >= 2");
  }
  if (!is_squarefree(form)) throw Error(ErrorKind::NotSquarefree, "form is not squarefree");

  // Pullback of the coordinate form x_r is sum_j plane(r, j) a_j; reduce it
  // modulo (form) in degree 1 and take the linear forms that vanish there.
  const QuotientBasis linear(GradedIdeal(vars, {form}), 1);
  RationalMatrix pullback(linear.size(), plane.rows());
  for (std::size_t r = 0; r < plane.rows(); ++r) {
    HomogeneousPoly ell(vars, 1);
    for (std::size_t j = 0; j < vars; ++j) ell.add_term(Monomial::variable(vars, j), plane(r, j));
    const auto coords = linear.coordinates(ell);
    for (std::size_t q = 0; q < coords.size(); ++q) pullback(q, r) = coords[q];
  }
  const auto vanishing = nullspace(pullback);
  RationalMatrix equations(vanishing.size(), plane.rows());
  for (std::size_t i = 0; i < vanishing.size(); ++i)
    for (std::size_t r = 0; r < plane.rows(); ++r) equations(i, r) = vanishing[i](r, 0);
  const auto zeros = nullspace(equations);
  RationalMatrix out(plane.rows(), zeros.size());
  for (std::size_t j = 0; j < zeros.size(); ++j)
    for (std::size_t r = 0; r < plane.rows(); ++r) out(r, j) = zeros[j](r, 0);
  return out;
}

bool same_column_space(const RationalMatrix& a, const RationalMatrix& b) {
  return same_row_space(a.transpose(), b.transpose());
}

}  // namespace grasshilb
