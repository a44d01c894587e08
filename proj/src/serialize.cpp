#include "grasshilb/serialize.hpp"

#include "grasshilb/error.hpp"

namespace grasshilb {

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::Parse, message); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Rational rational_value(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail("rationals are encoded as strings like \"3/2\" or integers");
}

std::vector<std::vector<Rational>> rational_lists(const Json& j) {
  if (!j.is_array()) fail("expected a list of lists of rationals");
  std::vector<std::vector<Rational>> out;
  for (const auto& list : j) {
    if (!list.is_array()) fail("expected a list of rationals");
    auto& row = out.emplace_back();
    for (const auto& v : list) row.push_back(rational_value(v));
  }
  for (const auto& row : out)
    if (row.size() != out.front().size()) fail("ragged matrix");
  return out;
}

SchubertClass class_from_text(const Json& v, const BoxContext& box) {
  if (!v.is_string()) fail("partitions are encoded as strings like \"[2,1]\"");
  return SchubertClass{parse_partition(v.get<std::string>(), box), box};
}

}  // namespace

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const ComponentReport& report) {
  Json components = Json::array();
  for (const auto& c : report.components) {
    const auto term = c.hypersurface_class.single_term();
    Json hyper = Json::object();
    if (term) hyper = {{"coeff", term->second}, {"partition", to_string(term->first)}};
    components.push_back({
        {"family", std::string(to_string(c.family))},
        {"plane_class", to_string(c.plane_class.partition)},
        {"hypersurface_class", hyper},
        {"flag", {{"a", c.flag.a}, {"b", c.flag.b}, {"n", c.flag.n}, {"dim", c.flag.dim}}},
        {"dimension", c.dimension},
    });
  }
  return {{"d", report.d},         {"k", report.k},         {"n", report.n},
          {"m", report.m},         {"count", report.count()}, {"components", components},
          {"classes_coincide", report.classes_coincide}};
}

ComponentReport report_from_json(const Json& j) {
  try {
    ComponentReport report{int_field(j, "d"), int_field(j, "k"), int_field(j, "n"),
                           int_field(j, "m"), {}, false};
    const BoxContext box(report.k, report.n);
    const Json& list = field(j, "components");
    if (!list.is_array()) fail("\"components\" must be a list");
    for (const auto& c : list) {
      const Json& hyper = field(c, "hypersurface_class");
      ClassSum sum(box);
      sum.add(class_from_text(field(hyper, "partition"), box).partition,
              field(hyper, "coeff").get<std::int64_t>());
      const Json& flag = field(c, "flag");
      auto base = flag_variety(int_field(flag, "a"), int_field(flag, "b"), int_field(flag, "n"));
      if (base.dim != int_field(flag, "dim")) fail("flag dimension does not match a, b, n");
      report.components.push_back({parse_plane_family(field(c, "family").get<std::string>()),
                                   class_from_text(field(c, "plane_class"), box), sum, base,
                                   field(c, "dimension").get<std::int64_t>()});
    }
    if (report.count() != int_field(j, "count")) fail("count disagrees with the component list");
    const Json& coincide = field(j, "classes_coincide");
    if (!coincide.is_boolean()) fail("\"classes_coincide\" must be a boolean");
    report.classes_coincide = coincide.get<bool>();
    return report;
  } catch (const Json::exception& e) {
    fail(e.what());
  }
}

Json poly_to_json(const HomogeneousPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    out.push_back({{"coeff", to_string(c)},
                   {"exps", std::vector<int>(m.exponents().begin(), m.exponents().end())}});
  }
  return out;
}

HomogeneousPoly poly_from_json(const Json& j, std::size_t nvars) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), nvars);
  if (!j.is_array() || j.empty()) fail("a form is a text string or a nonempty term list");
  try {
    std::optional<HomogeneousPoly> out;
    for (const auto& term : j) {
      const auto exps = field(term, "exps").get<std::vector<int>>();
      if (exps.size() != nvars) fail("term has the wrong number of exponents");
      for (int e : exps)
        if (e < 0) fail("negative exponent");
      Monomial mono(exps);
      if (!out) out.emplace(nvars, mono.degree());
      if (mono.degree() != out->degree()) fail("form is not homogeneous");
      out->add_term(mono, rational_value(field(term, "coeff")));
    }
    return *out;
  } catch (const Json::exception& e) {
    fail(e.what());
  }
}

Json columns_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Json col = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) col.push_back(to_string(m(r, c)));
    out.push_back(col);
  }
  return out;
}

RationalMatrix matrix_from_columns(const Json& j) {
  return RationalMatrix::from_columns(rational_lists(j));
}

Json rows_to_json(const RationalMatrix& m) { return columns_to_json(m.transpose()); }

RationalMatrix matrix_from_rows(const Json& j) { return RationalMatrix::from_rows(rational_lists(j)); }

Json to_json(const PlaneFamilySpec& spec) {
  return {{"family", std::string(to_string(spec.family()))},
          {"k", spec.context().k()},
          {"n", spec.context().n()},
          {"m", spec.m()},
          {"flag", rows_to_json(spec.flag().vectors())}};
}

PlaneFamilySpec plane_spec_from_json(const Json& j) {
  const Json& family = field(j, "family");
  if (!family.is_string()) fail("\"family\" must be a string");
  GrassmannianContext ctx(int_field(j, "k"), int_field(j, "n"));
  FlagBasis flag = j.contains("flag") ? FlagBasis(matrix_from_rows(j.at("flag")))
                                      : FlagBasis::standard(ctx.n());
  return PlaneFamilySpec(parse_plane_family(family.get<std::string>()), int_field(j, "m"),
                         std::move(flag), ctx);
}

ClassifyInput classify_input_from_json(const Json& j) {
  if (!j.is_object()) fail("classify input must be a JSON object");
  const bool has_spec = j.contains("family");
  const bool has_plane = j.contains("plane");
  if (has_spec == has_plane) fail("give exactly one of \"family\" (a spec) or \"plane\" (a matrix)");

  std::optional<PlaneFamilySpec> spec;
  RationalMatrix plane;
  if (has_spec) {
    spec.emplace(plane_spec_from_json(j));
    plane = parametrize_plane(*spec);
  } else {
    plane = matrix_from_columns(j.at("plane"));
  }
  GrassmannianContext ctx(int_field(j, "k"), int_field(j, "n"));
  if (plane.rows() != ctx.coordinate_count()) {
    fail("plane columns need " + std::to_string(ctx.coordinate_count()) + " Plücker coordinates");
  }
  std::optional<HomogeneousPoly> form;
  if (j.contains("form")) form.emplace(poly_from_json(j.at("form"), plane.cols()));
  return ClassifyInput{ctx, std::move(plane), std::move(spec), std::move(form)};
}

Json classify_report(const ClassifyInput& input, std::uint64_t seed) {
  const auto cls = classify_plane(input.plane, input.context, seed);
  Json out = {{"k", input.context.k()},
              {"n", input.context.n()},
              {"m", static_cast<int>(input.plane.cols()) - 1},
              {"family", std::string(to_string(cls.family))},
              {"plane_class", to_string(cls.plane_class.partition)},
              {"common_dim", cls.common.rows()},
              {"span_dim", cls.span.rows()}};
  if (input.form) {
    const auto term = hypersurface_class(cls.plane_class, input.form->degree()).single_term();
    out["form"] = to_string(*input.form);
    out["hypersurface_class"] = {{"coeff", term->second}, {"partition", to_string(term->first)}};
    out["span_equals_plane"] =
        same_column_space(span_of_hypersurface(input.plane, *input.form), input.plane);
  }
  return out;
}

}  // namespace grasshilb
