#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "grasshilb/polynomial.hpp"

namespace grasshilb {

struct CheckResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

enum class Scope { Fast, Full };

/// "fast" or "full"; throws Error(Parse) otherwise.
Scope parse_scope(std::string_view text);

struct TangentInstance {
  int ambient_dim;
  int m;
  int d;
  bool dense;
};

/// m in {2,3}, m <= N <= max_ambient, d in {3,4}, sparse and dense forms.
std::vector<TangentInstance> tangent_grid(int max_ambient = 6);

/// x0^d for sparse instances; a seeded dense form otherwise.
HomogeneousPoly tangent_form(const TangentInstance& inst, std::uint64_t seed);

CheckResult check_polynomial_identity();
CheckResult check_tangent_formula(std::uint64_t seed, int max_ambient = 6);
CheckResult check_hilbert_function(std::uint64_t seed, int max_ambient = 6);
CheckResult check_trichotomy();
CheckResult check_class_table();
CheckResult check_geometry_pipeline(std::uint64_t seed, int max_n = 6, int flags = 5);
CheckResult check_pieri_lr();
CheckResult check_bundle_coherence(std::uint64_t seed, int max_ambient = 6);

/// Fast: 1, 4, 5, 7, 8 and criterion 6 reduced to n <= 5 with two flags.
/// Full: 1 through 8. `report` sees each result as it finishes.
std::vector<CheckResult> run_acceptance(Scope scope, std::uint64_t seed,
                                        const std::function<void(const CheckResult&)>& report = {});

}  // namespace grasshilb
