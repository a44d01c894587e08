#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "grasshilb/components.hpp"
#include "grasshilb/error.hpp"
#include "grasshilb/grassmannian.hpp"
#include "grasshilb/ideal.hpp"
#include "grasshilb/serialize.hpp"
#include "grasshilb/verify.hpp"

using namespace grasshilb;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

enum class Format { Human, Json, Tsv };

struct FormatFlags {
  bool json = false;
  bool tsv = false;
  Format get() const { return json ? Format::Json : tsv ? Format::Tsv : Format::Human; }
};

void add_format(CLI::App* cmd, FormatFlags& flags) {
  auto* j = cmd->add_flag("--json", flags.json, "JSON output");
  auto* t = cmd->add_flag("--tsv", flags.tsv, "tab-separated output");
  j->excludes(t);
}

std::string family_label(PlaneFamily f) { return std::string(to_string(f)); }

int cmd_components(int d, int k, int n, int m, Format format) {
  const auto report = component_count(d, k, n, m);
  if (format == Format::Json) {
    std::cout << dump_canonical(to_json(report));
    return kOk;
  }
  if (format == Format::Tsv) {
    std::cout << "family\tplane_class\thypersurface_class\tflag_a\tflag_b\tflag_n\tflag_dim\tdimension\n";
    for (const auto& c : report.components) {
      std::cout << family_label(c.family) << '\t' << to_string(c.plane_class.partition) << '\t'
                << to_string(c.hypersurface_class) << '\t' << c.flag.a << '\t' << c.flag.b << '\t'
                << c.flag.n << '\t' << c.flag.dim << '\t' << c.dimension << '\n';
    }
    return kOk;
  }
  std::cout << "degree-" << d << " hypersurfaces in " << m << "-planes of G(" << k << "," << n
            << ")\ncomponents: " << report.count() << "\n";
  for (const auto& c : report.components) {
    std::cout << "  " << family_label(c.family) << "  plane sigma" << to_string(c.plane_class.partition)
              << "  hypersurface " << to_string(c.hypersurface_class) << "  base F(" << c.flag.a
              << "," << c.flag.b << ";" << c.flag.n << ") dim " << c.flag.dim << "  dimension "
              << c.dimension << "\n";
  }
  if (report.count() == 2) {
    std::cout << "hypersurface classes coincide: " << (report.classes_coincide ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_poly(int d, int m, Format format) {
  const auto p = hilbert_poly(d, m);
  std::vector<std::string> coeffs;
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  if (format == Format::Json) {
    std::cout << dump_canonical({{"d", d}, {"m", m}, {"coefficients", coeffs}, {"text", to_string(p)}});
  } else if (format == Format::Tsv) {
    std::cout << "power\tcoefficient\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << i << '\t' << coeffs[i] << '\n';
  } else {
    std::cout << to_string(p) << "\ncoefficients (T^0 first): [";
    for (std::size_t i = 0; i < coeffs.size(); ++i) std::cout << (i ? ", " : "") << coeffs[i];
    std::cout << "]\n";
  }
  return kOk;
}

int cmd_tangent(int ambient, int m, int d, std::uint64_t seed, Format format) {
  if (d < 1) throw Error(ErrorKind::InvalidParameter, "d must be >= 1");
  const HypersurfaceIdealSpec spec(ambient, m, random_dense_form(static_cast<std::size_t>(m) + 1, d, seed));
  const int bound = 2 * d;
  const auto tc = hom_tangent_computation(spec.ideal(), std::max(bound, required_syzygy_bound(spec.ideal())));
  const auto formula = tangent_formula(ambient, m, d);
  const auto oracle = static_cast<std::int64_t>(tc.dimension());
  const bool match = formula == oracle;
  if (format == Format::Json) {
    std::cout << dump_canonical({{"N", ambient}, {"m", m}, {"d", d}, {"seed", seed},
                                 {"form", to_string(spec.form())}, {"bound", bound},
                                 {"formula", formula}, {"oracle", oracle}, {"match", match}});
  } else if (format == Format::Tsv) {
    std::cout << "N\tm\td\tseed\tformula\toracle\tmatch\n"
              << ambient << '\t' << m << '\t' << d << '\t' << seed << '\t' << formula << '\t'
              << oracle << '\t' << (match ? "true" : "false") << '\n';
  } else {
    std::cout << "f = " << to_string(spec.form()) << "\nformula " << formula << ", oracle " << oracle
              << " (syzygy bound " << bound << "): " << (match ? "match" : "MISMATCH") << "\n";
  }
  return match ? kOk : kFailure;
}

std::string plucker_text(const HomogeneousPoly& q, const GrassmannianContext& ctx) {
  const std::string raw = to_string(q, "#");
  static const std::regex var("#([0-9]+)");
  std::string out;
  auto last = raw.cbegin();
  for (std::sregex_iterator it(raw.begin(), raw.end(), var), end; it != end; ++it) {
    out.append(last, raw.cbegin() + it->position());
    out += ctx.coordinate_name(std::stoul((*it)[1].str()));
    last = raw.cbegin() + it->position() + it->length();
  }
  out.append(last, raw.cend());
  return out;
}

int cmd_relations(int k, int n, Format format) {
  const GrassmannianContext ctx(k, n);
  const auto relations = plucker_relations(ctx);
  if (format == Format::Json) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ctx.coordinate_count(); ++i) names.push_back(ctx.coordinate_name(i));
    Json list = Json::array();
    for (const auto& q : relations) list.push_back(plucker_text(q, ctx));
    std::cout << dump_canonical({{"k", k}, {"n", n}, {"coordinates", names}, {"count", relations.size()},
                                 {"relations", list}});
  } else if (format == Format::Tsv) {
    std::cout << "index\trelation\n";
    for (std::size_t i = 0; i < relations.size(); ++i)
      std::cout << i << '\t' << plucker_text(relations[i], ctx) << '\n';
  } else {
    std::cout << relations.size() << " Plücker relations for G(" << k << "," << n << ")\n";
    for (const auto& q : relations) std::cout << plucker_text(q, ctx) << "\n";
  }
  return kOk;
}

int cmd_classify(const std::string& path, std::uint64_t seed, Format format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  const Json report = classify_report(classify_input_from_json(j), seed);
  const bool has_form = report.contains("form");
  const bool span_ok = !has_form || report["span_equals_plane"].get<bool>();
  std::string hyper;
  if (has_form) {
    const auto& h = report["hypersurface_class"];
    hyper = std::to_string(h["coeff"].get<std::int64_t>()) + "*sigma" + h["partition"].get<std::string>();
  }

  if (format == Format::Json) {
    std::cout << dump_canonical(report);
  } else if (format == Format::Tsv) {
    std::cout << "family\tplane_class\tcommon_dim\tspan_dim\thypersurface_class\tspan_equals_plane\n"
              << report["family"].get<std::string>() << '\t' << report["plane_class"].get<std::string>()
              << '\t' << report["common_dim"] << '\t' << report["span_dim"] << '\t' << hyper << '\t'
              << (has_form ? (span_ok ? "true" : "false") : "") << '\n';
  } else {
    std::cout << "family: " << report["family"].get<std::string>() << "\nplane class: sigma"
              << report["plane_class"].get<std::string>() << "\ncommon subspace dim "
              << report["common_dim"] << ", span dim " << report["span_dim"] << "\n";
    if (has_form) {
      std::cout << "hypersurface class: " << hyper << "\nspan of hypersurface equals plane: "
                << (span_ok ? "yes" : "no") << "\n";
    }
  }
  return span_ok ? kOk : kFailure;
}

int cmd_verify(const std::string& scope_text, std::uint64_t seed, Format format) {
  const Scope scope = parse_scope(scope_text);
  bool all = true;
  Json list = Json::array();
  run_acceptance(scope, seed, [&](const CheckResult& r) {
    all = all && r.passed;
    if (format == Format::Json) {
      list.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                      {"seconds", r.seconds}});
      return;
    }
    if (format == Format::Tsv) {
      std::cout << r.id << '\t' << (r.passed ? "PASS" : "FAIL") << '\t' << r.seconds << '\t'
                << r.name << '\t' << r.detail << std::endl;
      return;
    }
    std::ostringstream secs;
    secs.precision(2);
    secs << std::fixed << r.seconds;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << secs.str()
              << " s): " << r.detail << std::endl;
  });
  if (format == Format::Json) {
    std::cout << dump_canonical({{"scope", scope_text}, {"seed", seed}, {"checks", list}, {"passed", all}});
  }
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert schemes of hypersurfaces in linear subspaces of Grassmannians"};
  app.require_subcommand(1);

  FormatFlags fmt;
  int d = 0, k = 0, n = 0, m = 0, ambient = 0;
  std::uint64_t seed = 1;
  std::string path;
  std::string scope;

  auto* components = app.add_subcommand("components", "component count, classes and dimensions");
  components->add_option("--d", d, "hypersurface degree")->required();
  components->add_option("--k", k, "subspace dimension")->required();
  components->add_option("--n", n, "ambient dimension")->required();
  components->add_option("--m", m, "plane dimension")->required();
  add_format(components, fmt);

  auto* poly = app.add_subcommand("poly", "Hilbert polynomial P_{d,m}(T)");
  poly->add_option("--d", d, "degree")->required();
  poly->add_option("--m", m, "plane dimension")->required();
  add_format(poly, fmt);

  auto* tangent = app.add_subcommand("tangent", "tangent dimension: formula vs Hom oracle");
  tangent->add_option("--N", ambient, "ambient projective dimension")->required();
  tangent->add_option("--m", m, "plane dimension")->required();
  tangent->add_option("--d", d, "degree")->required();
  tangent->add_option("--seed", seed, "seed for the random form")->capture_default_str();
  add_format(tangent, fmt);

  auto* relations = app.add_subcommand("relations", "quadratic Plücker relations of G(k,n)");
  relations->add_option("--k", k, "subspace dimension")->required();
  relations->add_option("--n", n, "ambient dimension")->required();
  add_format(relations, fmt);

  auto* classify = app.add_subcommand("classify", "classify a plane given as JSON");
  classify->add_option("input", path, "JSON file with a family spec or a plane matrix")->required();
  std::uint64_t classify_seed = 0x5eed;
  classify->add_option("--seed", classify_seed, "seed for extra sample points")->capture_default_str();
  add_format(classify, fmt);

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--scope", scope, "fast or full")->default_val("fast");
  std::uint64_t verify_seed = 42;
  verify->add_option("--seed", verify_seed, "seed for generic data")->capture_default_str();
  add_format(verify, fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const Format format = fmt.get();
  try {
    if (*components) return cmd_components(d, k, n, m, format);
    if (*poly) return cmd_poly(d, m, format);
    if (*tangent) return cmd_tangent(ambient, m, d, seed, format);
    if (*relations) return cmd_relations(k, n, format);
    if (*classify) {
      try {
        return cmd_classify(path, classify_seed, format);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotOnGrassmannian || e.kind() == ErrorKind::UnclassifiablePlane) {
          std::cerr << "error: " << e.what() << "\n";
          return kFailure;
        }
        throw;
      }
    }
    if (*verify) return cmd_verify(scope, verify_seed, format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
