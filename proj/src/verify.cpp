#include "grasshilb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "grasshilb/components.hpp"
#include "grasshilb/error.hpp"
#include "grasshilb/grassmannian.hpp"
#include "grasshilb/ideal.hpp"

namespace grasshilb {

namespace {

// Collects the first few failures of a check.
class Failures {
 public:
  void add(const std::string& what) {
    ++count_;
    if (count_ <= 3) lines_ += (lines_.empty() ? "" : "; ") + what;
  }
  bool empty() const { return count_ == 0; }
  std::string summary(const std::string& ok) const {
    if (count_ == 0) return ok;
    return std::to_string(count_) + " failure(s): " + lines_;
  }

 private:
  int count_ = 0;
  std::string lines_;
};

template <class Body>
CheckResult timed(int id, std::string name, Body body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result{id, std::move(name), false, "", 0.0};
  try {
    Failures failures;
    const std::string ok = body(failures);
    result.passed = failures.empty();
    result.detail = failures.summary(ok);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string instance_name(const TangentInstance& t) {
  return "N=" + std::to_string(t.ambient_dim) + " m=" + std::to_string(t.m) +
         " d=" + std::to_string(t.d) + (t.dense ? " dense" : " sparse");
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  std::seed_seq seq{seed, seed >> 32, a, b, c};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<Rational> sample_parameters(std::size_t size, std::mt19937_64& engine) {
  std::vector<Rational> out(size);
  bool nonzero = false;
  while (!nonzero) {
    for (auto& x : out) {
      x = static_cast<long>(engine() % 11) - 5;
      nonzero = nonzero || !is_zero(x);
    }
  }
  return out;
}

HomogeneousPoly squarefree_cubic(std::size_t nvars, std::uint64_t seed) {
  for (std::uint64_t s = seed;; ++s) {
    auto f = random_dense_form(nvars, 3, s);
    if (is_squarefree(f)) return f;
  }
}

ClassSum multiply_sums(const ClassSum& a, const ClassSum& b) {
  ClassSum out(a.context());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      const ClassSum product = lr_multiply(pa, pb, a.context());
      for (const auto& [pc, cc] : product.terms()) out.add(pc, ca * cb * cc);
    }
  return out;
}

ClassSum single(const Partition& p, const BoxContext& box) {
  ClassSum s(box);
  s.add(p, 1);
  return s;
}

}  // namespace

Scope parse_scope(std::string_view text) {
  if (text == "fast") return Scope::Fast;
  if (text == "full") return Scope::Full;
  throw Error(ErrorKind::Parse, "scope must be \"fast\" or \"full\"");
}

std::vector<TangentInstance> tangent_grid(int max_ambient) {
  std::vector<TangentInstance> out;
  for (bool dense : {false, true})
    for (int m : {2, 3})
      for (int n = m; n <= max_ambient; ++n)
        for (int d : {3, 4}) out.push_back({n, m, d, dense});
  return out;
}

HomogeneousPoly tangent_form(const TangentInstance& inst, std::uint64_t seed) {
  const auto vars = static_cast<std::size_t>(inst.m) + 1;
  if (!inst.dense) {
    std::vector<int> exps(vars, 0);
    exps[0] = inst.d;
    return HomogeneousPoly::monomial(Monomial(exps));
  }
  return random_dense_form(vars, inst.d,
                           mix(seed, static_cast<std::uint64_t>(inst.ambient_dim),
                               static_cast<std::uint64_t>(inst.m), static_cast<std::uint64_t>(inst.d)));
}

CheckResult check_polynomial_identity() {
  return timed(1, "Hilbert polynomial identity P_{d,2} = dT + 1 - C(d-1,2)", [](Failures& f) {
    for (int d = 1; d <= 10; ++d) {
      if (hilbert_poly(d, 2) != planar_curve_poly(d)) {
        f.add("d=" + std::to_string(d) + ": " + to_string(hilbert_poly(d, 2)) + " vs " +
              to_string(planar_curve_poly(d)));
      }
    }
    return std::string("d = 1..10 agree");
  });
}

CheckResult check_tangent_formula(std::uint64_t seed, int max_ambient) {
  return timed(2, "tangent dimension formula vs Hom oracle", [&](Failures& f) {
    const auto grid = tangent_grid(max_ambient);
    for (const auto& inst : grid) {
      const HypersurfaceIdealSpec spec(inst.ambient_dim, inst.m, tangent_form(inst, seed));
      const auto tc = hom_tangent_computation(spec.ideal(), inst.d + 2);
      const auto expected = tangent_formula(inst.ambient_dim, inst.m, inst.d);
      if (static_cast<std::int64_t>(tc.dimension()) != expected || tc.constraint_rank != 0) {
        f.add(instance_name(inst) + ": oracle " + std::to_string(tc.dimension()) + ", formula " +
              std::to_string(expected) + ", constraint rank " + std::to_string(tc.constraint_rank));
      }
    }
    return std::to_string(grid.size()) + " instances agree";
  });
}

CheckResult check_hilbert_function(std::uint64_t seed, int max_ambient) {
  return timed(3, "Hilbert function vs Hilbert polynomial", [&](Failures& f) {
    std::size_t values = 0;
    for (const auto& inst : tangent_grid(max_ambient)) {
      const HypersurfaceIdealSpec spec(inst.ambient_dim, inst.m, tangent_form(inst, seed));
      const auto ideal = spec.ideal();
      const auto poly = hilbert_poly(inst.d, inst.m);
      const int threshold = std::max(0, inst.d - inst.m);
      for (int t = 0; t <= inst.d + 4; ++t) {
        const Rational hf = static_cast<long>(hilbert_function(ideal, t));
        const Rational p = poly.evaluate(t);
        Rational expected_gap = 0;
        if (t < threshold) {
          expected_gap = Rational(binomial(inst.d - t - 1, inst.m));
          if (inst.m % 2 == 1) expected_gap = -expected_gap;
        }
        ++values;
        if (hf - p != expected_gap) {
          f.add(instance_name(inst) + " T=" + std::to_string(t) + ": HF " + to_string(hf) +
                ", P " + to_string(p));
        }
      }
    }
    return std::to_string(values) + " values agree (with the low-degree correction)";
  });
}

CheckResult check_trichotomy() {
  return timed(4, "component count trichotomy and duality", [](Failures& f) {
    std::size_t cases = 0;
    for (int n = 4; n <= 8; ++n)
      for (int k = 2; k < n - 1; ++k)
        for (int m = 2; m <= n - 1; ++m) {
          ++cases;
          const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                    " m=" + std::to_string(m);
          const int count = component_count(3, k, n, m).count();
          const int expected = (m <= n - k ? 1 : 0) + (m <= k ? 1 : 0);
          if (count != expected) f.add(where + ": count " + std::to_string(count));
          if (count != component_count(3, n - k, n, m).count()) f.add(where + ": duality");
          int built = 0;
          for (PlaneFamily family : {PlaneFamily::Sub, PlaneFamily::Quot}) {
            try {
              PlaneFamilySpec(family, m, FlagBasis::standard(n), GrassmannianContext(k, n));
              ++built;
            } catch (const Error&) {
            }
          }
          if (built != count) f.add(where + ": constructible families " + std::to_string(built));
        }
    return std::to_string(cases) + " (k,n,m) cases";
  });
}

CheckResult check_class_table() {
  return timed(5, "hypersurface class table", [](Failures& f) {
    std::size_t classes = 0;
    for (int n = 4; n <= 8; ++n)
      for (int k = 2; k < n - 1; ++k)
        for (int m = 2; m <= n - 1; ++m) {
          const int d = 3;
          const BoxContext box(k, n);
          const int w = n - k;
          const auto report = component_count(d, k, n, m);
          for (const auto& c : report.components) {
            ++classes;
            Partition expected = c.family == PlaneFamily::Sub
                                     ? full_rows_then(k - 1, std::vector<int>{w - m + 1}, box)
                                     : full_rows_then(k - m + 1, std::vector<int>(m - 1, w - 1), box);
            if (m == 2) {
              const Partition curve = full_rows_then(k - 1, std::vector<int>{w - 1}, box);
              if (curve != expected) f.add("m=2 table mismatch");
            }
            const auto term = c.hypersurface_class.single_term();
            if (!term || term->first != expected || term->second != d) {
              f.add("k=" + std::to_string(k) + " n=" + std::to_string(n) + " m=" +
                    std::to_string(m) + " " + std::string(to_string(c.family)) + ": " +
                    to_string(c.hypersurface_class));
            }
          }
          if (m == 2 && report.count() == 2 && !report.classes_coincide) {
            f.add("m=2 classes do not coincide in G(" + std::to_string(k) + "," +
                  std::to_string(n) + ")");
          }
        }
    return std::to_string(classes) + " classes match";
  });
}

CheckResult check_geometry_pipeline(std::uint64_t seed, int max_n, int flags) {
  return timed(6, "plane families: containment, membership, classification, span", [&](Failures& f) {
    std::size_t specs = 0;
    for (int n = 4; n <= max_n; ++n)
      for (int k = 2; k < n - 1; ++k) {
        const GrassmannianContext ctx(k, n);
        const auto relations = plucker_relations(ctx);
        for (int m = 2; m <= n; ++m)
          for (PlaneFamily family : {PlaneFamily::Sub, PlaneFamily::Quot}) {
            if (!family_admits(family, k, n, m)) continue;
            for (int flag_index = 0; flag_index < flags; ++flag_index) {
              ++specs;
              const auto s = mix(seed, static_cast<std::uint64_t>(n * 100 + k * 10 + m),
                                 family == PlaneFamily::Sub ? 0 : 1,
                                 static_cast<std::uint64_t>(flag_index));
              const std::string where = std::string(to_string(family)) + " G(" +
                                        std::to_string(k) + "," + std::to_string(n) +
                                        ") m=" + std::to_string(m) + " flag#" +
                                        std::to_string(flag_index);
              const FlagBasis flag = FlagBasis::random(n, s);
              const PlaneFamilySpec spec(family, m, flag, ctx);
              const RationalMatrix plane = parametrize_plane(spec);
              const BoxContext box = ctx.box();
              const Partition expected_class = family_plane_class(family, m, box);

              if (rank(plane) != static_cast<std::size_t>(m + 1)) f.add(where + ": dependent columns");
              std::mt19937_64 engine(s);
              for (int sample = 0; sample < 25; ++sample) {
                const auto point = point_on_plane(plane, sample_parameters(plane.cols(), engine));
                if (!on_grassmannian(point, relations)) {
                  f.add(where + ": sample point off the Grassmannian");
                  break;
                }
                if (sample < 5 &&
                    !schubert_membership(plane_from_plucker(point, ctx), expected_class, flag)) {
                  f.add(where + ": Schubert condition fails");
                }
              }
              const auto cls = classify_plane(plane, ctx);
              if (cls.family != family || cls.plane_class.partition != expected_class) {
                f.add(where + ": classified as " + std::string(to_string(cls.family)) +
                      to_string(cls.plane_class.partition));
              }
              const auto form = squarefree_cubic(plane.cols(), s);
              if (!same_column_space(span_of_hypersurface(plane, form), plane)) {
                f.add(where + ": span of the cubic differs from the plane");
              }
            }
          }
      }
    return std::to_string(specs) + " family specs (n <= " + std::to_string(max_n) + ", " +
           std::to_string(flags) + " flags each)";
  });
}

CheckResult check_pieri_lr() {
  return timed(7, "Pieri vs Littlewood-Richardson", [](Failures& f) {
    std::size_t products = 0;
    for (auto [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
      const BoxContext box(k, n);
      for (int h = 1; h <= box.width(); ++h) {
        std::vector<int> special(static_cast<std::size_t>(k), 0);
        special[0] = h;
        const Partition sh = validate_partition(special, box);
        for (const auto& a : all_partitions(box)) {
          ++products;
          if (pieri(h, a, box) != lr_multiply(sh, a, box)) {
            f.add("G(" + std::to_string(k) + "," + std::to_string(n) + ") h=" +
                  std::to_string(h) + " a=" + to_string(a));
          }
        }
      }
    }
    const BoxContext box(2, 4);
    const auto parts = all_partitions(box);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        if (lr_multiply(a, b, box) != lr_multiply(b, a, box)) {
          f.add("not commutative at " + to_string(a) + "," + to_string(b));
        }
        for (const auto& c : parts) {
          ++products;
          const auto left = multiply_sums(lr_multiply(a, b, box), single(c, box));
          const auto right = multiply_sums(single(a, box), lr_multiply(b, c, box));
          if (left != right) {
            f.add("not associative at " + to_string(a) + "," + to_string(b) + "," + to_string(c));
          }
        }
      }
    return std::to_string(products) + " products consistent";
  });
}

CheckResult check_bundle_coherence(std::uint64_t seed, int max_ambient) {
  return timed(8, "bundle dimension vs tangent dimension", [&](Failures& f) {
    const auto grid = tangent_grid(max_ambient);
    for (const auto& inst : grid) {
      const auto total = bundle_total_dimension(plane_grassmannian_base(inst.ambient_dim, inst.m), inst.d);
      const HypersurfaceIdealSpec spec(inst.ambient_dim, inst.m, tangent_form(inst, seed));
      const auto hom = static_cast<std::int64_t>(hom_dimension(spec.ideal(), inst.d + 2));
      if (total != hom) {
        f.add(instance_name(inst) + ": bundle " + std::to_string(total) + ", Hom " +
              std::to_string(hom));
      }
    }
    const auto report = component_count(3, 2, 4, 2);
    for (const auto& c : report.components) {
      if (c.dimension != 12) {
        f.add(std::string(to_string(c.family)) + " component of G(2,4) has dimension " +
              std::to_string(c.dimension));
      }
    }
    if (report.count() != 2) f.add("G(2,4), m=2 does not have two components");
    return std::to_string(grid.size()) + " grid points agree; G(2,4) components have dimension 12";
  });
}

std::vector<CheckResult> run_acceptance(Scope scope, std::uint64_t seed,
                                        const std::function<void(const CheckResult&)>& report) {
  std::vector<CheckResult> out;
  auto record = [&](CheckResult r) {
    if (report) report(r);
    out.push_back(std::move(r));
  };
  record(check_polynomial_identity());
  if (scope == Scope::Full) {
    record(check_tangent_formula(seed));
    record(check_hilbert_function(seed));
  }
  record(check_trichotomy());
  record(check_class_table());
  if (scope == Scope::Full) {
    record(check_geometry_pipeline(seed));
  } else {
    record(check_geometry_pipeline(seed, 5, 2));
  }
  record(check_pieri_lr());
  record(check_bundle_coherence(seed));
  return out;
}

}  // namespace grasshilb
