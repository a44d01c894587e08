#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "grasshilb/components.hpp"
#include "grasshilb/grassmannian.hpp"
#include "grasshilb/polynomial.hpp"

namespace grasshilb {

using Json = nlohmann::json;

/// Two-space indented, keys sorted, trailing newline.
std::string dump_canonical(const Json& j);

Json to_json(const ComponentReport& report);
ComponentReport report_from_json(const Json& j);

/// [{"coeff": "3/2", "exps": [1, 0, 2]}, ...] in grlex-descending order.
Json poly_to_json(const HomogeneousPoly& p);
/// Accepts the term list or the text form. `nvars` fixes the ring.
HomogeneousPoly poly_from_json(const Json& j, std::size_t nvars);

/// Column lists of rational strings.
Json columns_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_columns(const Json& j);
/// Row lists of rational strings (the flag format).
Json rows_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_rows(const Json& j);

Json to_json(const PlaneFamilySpec& spec);
/// {"family", "k", "n", "m", "flag"?}; a missing flag means the standard one.
PlaneFamilySpec plane_spec_from_json(const Json& j);

/// Input of the classify command: either a family spec or {"k", "n",
/// "plane"} with an explicit (N+1) x (m+1) plane, plus an optional "form".
struct ClassifyInput {
  GrassmannianContext context;
  RationalMatrix plane;
  std::optional<PlaneFamilySpec> spec;
  std::optional<HomogeneousPoly> form;
};

/// Throws Error(Parse) on malformed input.
ClassifyInput classify_input_from_json(const Json& j);

/// Classifies the plane and, with a form, checks that the hypersurface spans
/// it. Keys: k, n, m, family, plane_class, common_dim, span_dim, and with a
/// form also form, hypersurface_class, span_equals_plane.
Json classify_report(const ClassifyInput& input, std::uint64_t seed = 0x5eed);

}  // namespace grasshilb
