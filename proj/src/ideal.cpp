#include "grasshilb/ideal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "grasshilb/error.hpp"

namespace grasshilb {

GradedIdeal::GradedIdeal(std::size_t nvars, std::vector<HomogeneousPoly> generators)
    : nvars_(nvars), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.nvars() != nvars_) throw Error(ErrorKind::DimensionMismatch, "generator variable count");
    if (g.is_zero()) throw Error(ErrorKind::InvalidParameter, "zero generator");
  }
}

HypersurfaceIdealSpec::HypersurfaceIdealSpec(int ambient_dim, int plane_dim, HomogeneousPoly form)
    : ambient_dim_(ambient_dim), plane_dim_(plane_dim), form_(std::move(form)) {
  if (!(2 <= plane_dim && plane_dim <= ambient_dim)) {
    throw Error(ErrorKind::InvalidParameter, "hypersurface spec needs 2 <= m <= N (m=" +
                                                 std::to_string(plane_dim) + ", N=" +
                                                 std::to_string(ambient_dim) + ")");
  }
  const auto plane_vars = static_cast<std::size_t>(plane_dim) + 1;
  const auto ambient_vars = static_cast<std::size_t>(ambient_dim) + 1;
  if (form_.nvars() != plane_vars && form_.nvars() != ambient_vars) {
    throw Error(ErrorKind::DimensionMismatch, "form must be in m+1 or N+1 variables");
  }
  if (form_.is_zero()) throw Error(ErrorKind::InvalidParameter, "form must be nonzero");
  if (form_.degree() < 1) throw Error(ErrorKind::InvalidParameter, "form degree must be >= 1");
  if (form_.highest_variable() > plane_dim) {
    throw Error(ErrorKind::InvalidParameter, "form may only use x_0..x_m");
  }
  form_ = form_.extended(ambient_vars);
}

GradedIdeal HypersurfaceIdealSpec::ideal() const {
  const auto nvars = static_cast<std::size_t>(ambient_dim_) + 1;
  std::vector<HomogeneousPoly> gens{form_};
  for (std::size_t i = static_cast<std::size_t>(plane_dim_) + 1; i < nvars; ++i) {
    gens.push_back(HomogeneousPoly::variable(nvars, i));
  }
  return GradedIdeal(nvars, std::move(gens));
}

HomogeneousPoly random_dense_form(std::size_t nvars, int degree, std::uint64_t seed,
                                  int magnitude) {
  if (magnitude < 1) throw Error(ErrorKind::InvalidParameter, "magnitude must be >= 1");
  std::mt19937_64 engine(seed);
  HomogeneousPoly f(nvars, degree);
  const auto span = static_cast<std::uint64_t>(2 * magnitude);
  for (const auto& m : monomials_of_degree(nvars, degree)) {
    const auto draw = static_cast<int>(engine() % span);  // 0 .. 2*mag-1
    const int value = draw < magnitude ? draw - magnitude : draw - magnitude + 1;
    f.add_term(m, value);
  }
  return f;
}

std::vector<MacaulayColumn> macaulay_columns(const GradedIdeal& ideal, int degree) {
  std::vector<MacaulayColumn> out;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    const int shift = degree - ideal.generator_degree(i);
    if (shift < 0) continue;
    for (auto& m : monomials_of_degree(ideal.nvars(), shift)) out.push_back({i, std::move(m)});
  }
  return out;
}

namespace {

SparseVector column_vector(const GradedIdeal& ideal, const MacaulayColumn& col,
                           const MonomialIndex& rows) {
  SparseVector v;
  v.reserve(ideal.generators()[col.generator].term_count());
  for (const auto& [m, c] : ideal.generators()[col.generator].terms()) {
    v.emplace_back(rows.index_of(m * col.multiplier), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

// Insert all Macaulay columns, sparsest first. Labels are column positions.
EchelonBasis echelon_of_columns(const GradedIdeal& ideal, int degree, const MonomialIndex& rows,
                                const std::vector<MacaulayColumn>& cols, bool track) {
  EchelonBasis basis(rows.size(), track);
  std::vector<std::size_t> order(cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ideal.generators()[cols[a].generator].term_count() <
           ideal.generators()[cols[b].generator].term_count();
  });
  (void)degree;
  for (std::size_t j : order) basis.insert(column_vector(ideal, cols[j], rows), j);
  return basis;
}

}  // namespace

RationalMatrix macaulay_matrix(const GradedIdeal& ideal, int degree) {
  const MonomialIndex rows(ideal.nvars(), degree);
  const auto cols = macaulay_columns(ideal, degree);
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [r, c] : column_vector(ideal, cols[j], rows)) out(r, j) = c;
  }
  return out;
}

QuotientBasis::QuotientBasis(const GradedIdeal& ideal, int degree)
    : index_(ideal.nvars(), degree),
      ideal_part_(echelon_of_columns(ideal, degree, index_, macaulay_columns(ideal, degree),
                                     false)) {
  coordinate_of_position_.assign(index_.size(), static_cast<std::size_t>(-1));
  for (std::size_t pos : ideal_part_.free_positions()) {
    coordinate_of_position_[pos] = basis_.size();
    basis_.push_back(index_.at(pos));
  }
}

SparseVector QuotientBasis::reduce(const HomogeneousPoly& p) const {
  if (p.is_zero()) return {};
  if (p.degree() != degree() || p.nvars() != index_.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "polynomial not in this graded piece");
  }
  SparseVector v;
  v.reserve(p.term_count());
  // Terms iterate grlex descending, which is increasing position.
  for (const auto& [m, c] : p.terms()) v.emplace_back(index_.index_of(m), c);
  return ideal_part_.reduce(std::move(v));
}

std::vector<Rational> QuotientBasis::coordinates(const HomogeneousPoly& p) const {
  std::vector<Rational> out(basis_.size());
  for (const auto& [pos, c] : reduce(p)) out[coordinate_of_position_[pos]] = c;
  return out;
}

HomogeneousPoly QuotientBasis::normal_form(const HomogeneousPoly& p) const {
  HomogeneousPoly out(index_.nvars(), degree());
  for (const auto& [pos, c] : reduce(p)) out.add_term(index_.at(pos), c);
  return out;
}

std::size_t hilbert_function(const GradedIdeal& ideal, int degree) {
  if (degree < 0) return 0;
  return QuotientBasis(ideal, degree).size();
}

std::vector<Syzygy> syzygies_in_degree(const GradedIdeal& ideal, int degree) {
  if (degree < 0) return {};
  const MonomialIndex rows(ideal.nvars(), degree);
  const auto cols = macaulay_columns(ideal, degree);
  const EchelonBasis basis = echelon_of_columns(ideal, degree, rows, cols, true);

  std::vector<Syzygy> out;
  out.reserve(basis.relations().size());
  for (const auto& relation : basis.relations()) {
    Syzygy s;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
      s.emplace_back(ideal.nvars(), degree - ideal.generator_degree(i));
    }
    for (const auto& [j, c] : relation) s[cols[j].generator].add_term(cols[j].multiplier, c);
    out.push_back(std::move(s));
  }
  return out;
}

int required_syzygy_bound(const GradedIdeal& ideal) {
  int bound = 0;
  for (std::size_t i = 0; i < ideal.size(); ++i)
    for (std::size_t j = i + 1; j < ideal.size(); ++j)
      bound = std::max(bound, ideal.generator_degree(i) + ideal.generator_degree(j));
  return bound;
}

TangentComputation hom_tangent_computation(const GradedIdeal& ideal, int bound) {
  const int needed = required_syzygy_bound(ideal);
  if (bound < needed) {
    throw Error(ErrorKind::BoundTooSmall, "syzygy bound " + std::to_string(bound) +
                                              " below the pairwise generator bound " +
                                              std::to_string(needed));
  }

  std::map<int, QuotientBasis> quotients;
  auto quotient = [&](int e) -> const QuotientBasis& {
    auto it = quotients.find(e);
    if (it == quotients.end()) it = quotients.emplace(e, QuotientBasis(ideal, e)).first;
    return it->second;
  };

  // Unknowns: coordinates of phi(g_i) in (S/I)_{deg g_i}, generator by generator.
  std::vector<std::size_t> offset(ideal.size() + 1, 0);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    offset[i + 1] = offset[i] + quotient(ideal.generator_degree(i)).size();
  }
  TangentComputation result;
  result.unknowns = offset.back();
  EchelonBasis constraints(result.unknowns);

  for (int e = 0; e <= bound; ++e) {
    const auto syzygies = syzygies_in_degree(ideal, e);
    if (syzygies.empty()) continue;
    const QuotientBasis& target = quotient(e);
    for (const auto& s : syzygies) {
      ++result.syzygies;
      // table[q][u]: coordinate q of h_i * b_u in (S/I)_e. Only h_i mod I
      // matters, so reduce it first; Koszul multipliers vanish here.
      std::vector<std::vector<Rational>> table(target.size(),
                                               std::vector<Rational>(result.unknowns));
      bool any = false;
      for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (s[i].is_zero()) continue;
        const HomogeneousPoly h = quotient(s[i].degree()).normal_form(s[i]);
        if (h.is_zero()) continue;
        const auto& unknown_basis = quotient(ideal.generator_degree(i)).monomials();
        for (std::size_t b = 0; b < unknown_basis.size(); ++b) {
          const auto coords = target.coordinates(h.times(unknown_basis[b]));
          for (std::size_t q = 0; q < coords.size(); ++q) {
            if (is_zero(coords[q])) continue;
            table[q][offset[i] + b] = coords[q];
            any = true;
          }
        }
      }
      if (!any) continue;
      for (const auto& row : table) constraints.insert(to_sparse(row));
    }
  }
  result.constraint_rank = constraints.rank();
  return result;
}

std::size_t hom_dimension(const GradedIdeal& ideal, int bound) {
  return hom_tangent_computation(ideal, bound).dimension();
}

bool coprime(const HomogeneousPoly& f, const HomogeneousPoly& g) {
  if (f.nvars() != g.nvars()) throw Error(ErrorKind::DimensionMismatch, "coprime: variable counts");
  if (f.is_zero() || g.is_zero()) return false;
  if (f.degree() == 0 || g.degree() == 0) return true;
  const GradedIdeal pair(f.nvars(), {f, g});
  return syzygies_in_degree(pair, f.degree() + g.degree() - 1).empty();
}

bool is_squarefree(const HomogeneousPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 1) return true;
  const std::size_t nvars = f.nvars();
  const int last_t = f.degree() * static_cast<int>(nvars - 1);
  for (int t = 0; t <= last_t; ++t) {
    HomogeneousPoly derivative(nvars, f.degree() - 1);
    Rational weight = 1;
    for (std::size_t i = 0; i < nvars; ++i) {
      derivative += f.derivative(i).scaled(weight);
      weight *= t;
    }
    if (coprime(f, derivative)) return true;
  }
  return false;
}

}  // namespace grasshilb
