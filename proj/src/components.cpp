#include "grasshilb/components.hpp"

#include "grasshilb/error.hpp"

namespace grasshilb {

namespace {

using Coeffs = std::vector<Rational>;

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// C(T + shift, m) as a polynomial in T: prod_{i<m} (T + shift - i) / m!.
Coeffs binomial_in_t(int shift, int m) {
  Coeffs out{Rational(1)};
  for (int i = 0; i < m; ++i) out = multiply(out, {Rational(shift - i), Rational(1)});
  Rational factorial = 1;
  for (int i = 2; i <= m; ++i) factorial *= i;
  for (auto& c : out) c /= factorial;
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, message);
}

}  // namespace

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational HilbertPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string to_string(const HilbertPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& q = c[static_cast<std::size_t>(i)];
    if (is_zero(q)) continue;
    const Rational mag = abs(q);
    if (out.empty()) {
      if (sgn(q) < 0) out += "-";
    } else {
      out += sgn(q) < 0 ? " - " : " + ";
    }
    const bool integral = mag.get_den() == 1;
    std::string num = integral ? mag.get_num().get_str() : "(" + to_string(mag) + ")";
    if (i == 0) {
      out += integral ? num : to_string(mag);
      continue;
    }
    if (mag != 1) out += num + "*";
    out += "T";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

HilbertPolynomial hilbert_poly(int d, int m) {
  require(d >= 1, "hilbert_poly needs d >= 1");
  require(m >= 2, "hilbert_poly needs m >= 2");
  Coeffs top = binomial_in_t(m, m);
  const Coeffs shifted = binomial_in_t(m - d, m);
  for (std::size_t i = 0; i < top.size(); ++i) top[i] -= shifted[i];
  return HilbertPolynomial(std::move(top));
}

HilbertPolynomial planar_curve_poly(int d) {
  require(d >= 1, "planar_curve_poly needs d >= 1");
  const Rational constant = Rational(1) - Rational(binomial(d - 1, 2));
  return HilbertPolynomial({constant, Rational(d)});
}

std::vector<PlaneClassEntry> mplane_classes(int k, int n, int m) {
  const BoxContext box(k, n);
  require(m >= 2, "plane dimension m must be >= 2");
  std::vector<PlaneClassEntry> out;
  for (PlaneFamily family : {PlaneFamily::Sub, PlaneFamily::Quot}) {
    if (family_admits(family, k, n, m)) {
      out.push_back({family, SchubertClass{family_plane_class(family, m, box), box}});
    }
  }
  return out;
}

ClassSum hypersurface_class(const SchubertClass& plane_class, int d) {
  require(d >= 1, "degree must be >= 1");
  const ClassSum product = pieri(1, plane_class.partition, plane_class.context);
  if (!product.single_term()) {
    throw Error(ErrorKind::NonMaximalClass,
                "sigma_1 * sigma" + to_string(plane_class.partition) + " = " + to_string(product) +
                    " is not a single class; the plane class is not maximal");
  }
  return product.scaled(d);
}

int flag_dimension(int a, int b, int n) {
  require(0 <= a && a < b && b <= n, "flag variety F(a,b;n) needs 0 <= a < b <= n");
  return a * (n - a) + (b - a) * (n - b);
}

FlagVarietyDescriptor flag_variety(int a, int b, int n) {
  return {a, b, n, flag_dimension(a, b, n), b - a};
}

FlagVarietyDescriptor family_base(PlaneFamily family, int k, int n, int m) {
  return family == PlaneFamily::Sub ? flag_variety(k - 1, k + m, n) : flag_variety(k - m, k + 1, n);
}

std::int64_t bundle_total_dimension(const FlagVarietyDescriptor& base, int d) {
  require(base.bundle_rank >= 3, "bundle rank m+1 must be >= 3");
  const int m = base.bundle_rank - 1;
  return base.dim + to_int64(binomial(m + d, m)) - 1;
}

FlagVarietyDescriptor plane_grassmannian_base(int ambient_dim, int m) {
  return flag_variety(0, m + 1, ambient_dim + 1);
}

std::int64_t tangent_formula(int ambient_dim, int m, int d) {
  return to_int64(binomial(m + d, m)) - 1 +
         static_cast<std::int64_t>(ambient_dim - m) * (m + 1);
}

ComponentReport component_count(int d, int k, int n, int m) {
  if (d < 3) {
    throw Error(ErrorKind::InvalidParameter,
                "d = " + std::to_string(d) +
                    ": the component classification requires d >= 3 (lower degrees are not covered)");
  }
  require(m >= 2, "plane dimension m must be >= 2");
  ComponentReport report{d, k, n, m, {}, false};
  for (const auto& entry : mplane_classes(k, n, m)) {
    const auto base = family_base(entry.family, k, n, m);
    report.components.push_back({entry.family, entry.plane_class,
                                 hypersurface_class(entry.plane_class, d), base,
                                 bundle_total_dimension(base, d)});
  }
  report.classes_coincide = report.components.size() == 2 &&
                            report.components[0].hypersurface_class ==
                                report.components[1].hypersurface_class;
  return report;
}

}  // namespace grasshilb
