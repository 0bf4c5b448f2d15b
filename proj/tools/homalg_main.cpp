#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "homalg/algebra_file.hpp"
#include "homalg/harness.hpp"
#include "homalg/trees.hpp"

namespace {

using namespace homalg;

constexpr int kExitValid = 0;      // all checks pass
constexpr int kExitViolation = 1;  // a mathematical law fails
constexpr int kExitInput = 2;      // malformed or inapplicable input

std::string kind_of(const LoadedAlgebra& loaded) {
  return std::holds_alternative<AlgebraPtr>(loaded) ? "hom-associative" : "hom-dialgebra";
}

// One-based basis labels for a flat tensor index; the last axis is the output
// coordinate.
std::string entry_label(const std::vector<int>& shape, size_t flat) {
  std::vector<int> idx(shape.size());
  for (size_t k = shape.size(); k-- > 0;) {
    idx[k] = static_cast<int>(flat % static_cast<size_t>(shape[k]));
    flat /= static_cast<size_t>(shape[k]);
  }
  std::string s = "(";
  for (size_t k = 0; k + 1 < idx.size(); ++k) {
    if (k > 0) s += ",";
    s += "e" + std::to_string(idx[k] + 1);
  }
  s += " -> e" + std::to_string(idx.back() + 1) + ")";
  return s;
}

void print_entries(std::ostream& os, const DenseTensor& t, const std::string& indent) {
  bool any = false;
  const auto& entries = t.entries();
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].is_zero()) continue;
    os << indent << entry_label(t.shape(), i) << " = " << entries[i].str() << "\n";
    any = true;
  }
  if (!any) os << indent << "zero\n";
}

void print_representative(std::ostream& os, const Cochain& f) {
  print_entries(os, f.coeffs(), "    ");
}

void print_representative(std::ostream& os, const TreeCochain& f) {
  const auto trees_n = trees::enumerate_trees(f.degree());
  for (size_t t = 0; t < f.tensors().size(); ++t) {
    if (f.tensors()[t].is_zero()) continue;
    os << "    tree " << trees_n[t].label() << ":\n";
    print_entries(os, f.tensors()[t], "      ");
  }
  if (f.is_zero()) os << "    zero\n";
}

long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int report_validation(const std::string& name, const std::string& kind, int dim,
                      const std::vector<std::string>& rules,
                      const std::vector<Violation>& violations) {
  std::cout << "fixture=" << name << " kind=" << kind << " dim=" << dim << "\n";
  for (const std::string& rule : rules) {
    const Violation* first = nullptr;
    int count = 0;
    for (const Violation& v : violations) {
      if (v.rule != rule) continue;
      if (!first) first = &v;
      ++count;
    }
    if (!first) {
      std::cout << "pass  " << rule << "\n";
    } else {
      std::cout << "FAIL  " << rule << "  " << first->detail << "  [violations=" << count
                << "]\n";
    }
  }
  std::cout << "valid: " << (violations.empty() ? "yes" : "no") << "\n";
  return violations.empty() ? kExitValid : kExitViolation;
}

int cmd_validate(const std::string& path) {
  const LoadedAlgebra loaded = load_algebra_file(path);
  if (const auto* a = std::get_if<AlgebraPtr>(&loaded)) {
    return report_validation((*a)->name, "hom-associative", (*a)->dim,
                             {"multiplicativity", "twisted associativity"}, validate(**a));
  }
  const DialgebraPtr& d = std::get<DialgebraPtr>(loaded);
  return report_validation(d->name, "hom-dialgebra", d->dim,
                           {"multiplicativity (left product)",
                            "multiplicativity (right product)", "dialgebra axiom"},
                           validate(*d));
}

// ---------------------------------------------------------------------------
// cohomology
// ---------------------------------------------------------------------------

template <class Tower>
int report_cohomology(Tower& tower, const std::string& name, const std::string& kind, int dim,
                      int max_degree, bool representatives) {
  std::cout << "fixture=" << name << " kind=" << kind << " dim=" << dim << "\n";
  std::cout << "Z^1 dim=" << tower.cocycle_dimension(1)
            << "  (kernel of delta in degree 1; the graded range starts at 2)\n";
  for (int n = 2; n <= max_degree; ++n) {
    std::cout << "n=" << n << " C=" << tower.slice(n).basis.size()
              << " delta-rank=" << tower.coboundary_rank(n)
              << " H=" << tower.cohomology_dimension(n) << "\n";
    if (representatives) {
      const auto classes = tower.cohomology_basis(n);
      for (size_t k = 0; k < classes.size(); ++k) {
        std::cout << "  class " << (k + 1) << ":\n";
        print_representative(std::cout, classes[k].representative);
      }
    }
  }
  return kExitValid;
}

int cmd_cohomology(const std::string& path, int max_degree, bool representatives) {
  const LoadedAlgebra loaded = load_algebra_file(path);
  if (max_degree < 2) {
    std::cerr << "error: --max-degree must be at least 2\n";
    return kExitInput;
  }
  if (const auto* ap = std::get_if<AlgebraPtr>(&loaded)) {
    const AlgebraPtr& a = *ap;
    if (!validate(*a).empty()) {
      std::cerr << "error: " << path
                << " does not satisfy the hom-associative laws; see 'validate'\n";
      return kExitInput;
    }
    long cells = 1;  // top slice holds dim^(max_degree+2) entries
    for (int k = 0; k < max_degree + 2; ++k) cells *= a->dim;
    if (max_degree > 6 || cells > 4'000'000) {
      std::cerr << "error: degree " << max_degree << " at dimension " << a->dim
                << " exceeds the supported size\n";
      return kExitInput;
    }
    HomTower tower(HomComplex{a}, max_degree);
    return report_cohomology(tower, a->name, "hom-associative", a->dim, max_degree,
                             representatives);
  }
  const DialgebraPtr& d = std::get<DialgebraPtr>(loaded);
  if (!validate(*d).empty()) {
    std::cerr << "error: " << path << " does not satisfy the hom-dialgebra laws; see 'validate'\n";
    return kExitInput;
  }
  long cells = catalan(max_degree + 1);
  for (int k = 0; k < max_degree + 2; ++k) cells *= d->dim;
  if (max_degree > 4 || cells > 4'000'000) {
    std::cerr << "error: degree " << max_degree << " at dimension " << d->dim
              << " exceeds the supported size\n";
    return kExitInput;
  }
  DialgTower tower(DialgComplex{d}, max_degree);
  return report_cohomology(tower, d->name, "hom-dialgebra", d->dim, max_degree, representatives);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& identity, const std::string& path, const TrialConfig& cfg,
               const std::string& format) {
  FixtureRegistry reg = default_fixtures();
  if (!path.empty()) {
    const LoadedAlgebra loaded = load_algebra_file(path);
    reg.algebras.clear();
    reg.dialgebras.clear();
    if (const auto* a = std::get_if<AlgebraPtr>(&loaded)) {
      reg.algebras.push_back(*a);
    } else {
      reg.dialgebras.push_back(std::get<DialgebraPtr>(loaded));
    }
    // The shipped negative controls stay attached so the square checks keep
    // their nonvanishing half.
  }
  Session session(cfg, std::move(reg));
  const std::vector<Verdict> verdicts =
      identity == "all" ? session.run_all() : std::vector<Verdict>{session.check(identity)};
  std::cout << (format == "tsv" ? render_tsv(verdicts, cfg) : render_text(verdicts, cfg));
  if (any_failed(verdicts)) return kExitViolation;
  if (identity != "all" && verdicts.front().outcome == Outcome::skip) {
    std::cerr << "error: identity '" << identity << "' has no applicable fixture here\n";
    return kExitInput;
  }
  return kExitValid;
}

// ---------------------------------------------------------------------------
// trees
// ---------------------------------------------------------------------------

std::vector<int> parse_parts(const std::string& text, const std::string& flag) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size() || v < 1) throw std::invalid_argument(token);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": '" + token + "' is not a positive integer");
    }
  }
  if (parts.empty()) throw std::invalid_argument(flag + ": empty block list");
  return parts;
}

int cmd_trees(int n, bool faces, bool bullets, bool verbose, const std::string& r0_spec,
              const std::string& ri_spec) {
  constexpr int kCap = 8;
  if (n < 0 || n > kCap) {
    std::cerr << "error: vertex count " << n << " outside the supported range 0.." << kCap
              << "\n";
    return kExitInput;
  }
  if ((faces || bullets) && n < 1) {
    std::cerr << "error: face and bullet tables need at least one vertex\n";
    return kExitInput;
  }

  std::vector<int> r0_parts;
  if (!r0_spec.empty()) {
    r0_parts = parse_parts(r0_spec, "--r0");
    int sum = 0;
    for (const int v : r0_parts) sum += v;
    if (sum != n) {
      std::cerr << "error: --r0 blocks sum to " << sum << ", need " << n << "\n";
      return kExitInput;
    }
  }
  std::vector<int> ri_parts;
  int ri_slot = 0;
  if (!ri_spec.empty()) {
    const size_t colon = ri_spec.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--ri: expected slot:blocks, e.g. 2:1,2,1");
    try {
      ri_slot = std::stoi(ri_spec.substr(0, colon));
    } catch (const std::exception&) {
      throw std::invalid_argument("--ri: bad slot '" + ri_spec.substr(0, colon) + "'");
    }
    ri_parts = parse_parts(ri_spec.substr(colon + 1), "--ri");
    int sum = 0;
    for (const int v : ri_parts) sum += v;
    if (sum != n) {
      std::cerr << "error: --ri blocks sum to " << sum << ", need " << n << "\n";
      return kExitInput;
    }
    if (ri_slot < 1 || ri_slot > static_cast<int>(ri_parts.size())) {
      std::cerr << "error: --ri slot " << ri_slot << " outside 1.." << ri_parts.size() << "\n";
      return kExitInput;
    }
  }

  const std::vector<trees::Tree> ys = trees::enumerate_trees(n);
  std::cout << "Y_" << n << ": " << ys.size() << " trees\n";
  for (const trees::Tree& y : ys) {
    std::cout << y.label();
    if (verbose) std::cout << "  vertices=" << y.vertices() << " leaves=" << y.leaf_count();
    std::cout << "\n";
    if (faces) {
      std::cout << "  faces:";
      for (int i = 0; i <= n; ++i) std::cout << " d_" << i << "=" << trees::face(y, i).label();
      std::cout << "\n";
    }
    if (bullets) {
      std::cout << "  bullets:";
      for (int i = 0; i <= n; ++i) std::cout << " " << trees::product_name(trees::bullet(y, i));
      std::cout << "\n";
    }
    if (!r0_parts.empty())
      std::cout << "  R_0 -> " << trees::r0(r0_parts, y).label() << "\n";
    if (!ri_parts.empty())
      std::cout << "  R_" << ri_slot << " -> " << trees::ri(ri_parts, ri_slot, y).label()
                << "\n";
  }
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-rational engine for twisted operads, braces, and cohomology of "
               "hom-associative algebras and hom-dialgebras"};
  app.require_subcommand(1);
  app.fallthrough();

  TrialConfig cfg;
  std::string format = "text";
  app.add_option("--seed", cfg.seed, "Seed for the deterministic trial streams")
      ->capture_default_str();
  app.add_option("--trials", cfg.trials, "Trials per randomized identity (floors apply)")
      ->capture_default_str();
  app.add_option("--max-degree", cfg.max_degree, "Largest cochain degree to touch")
      ->capture_default_str();
  app.add_option("--format", format, "Report format for verify")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();

  auto* validate_cmd =
      app.add_subcommand("validate", "Check the algebra laws of a description file");
  std::string validate_path;
  validate_cmd->add_option("file", validate_path, "Algebra description file")->required();

  auto* cohomology_cmd = app.add_subcommand(
      "cohomology", "Cochain dimensions, coboundary ranks, and cohomology dimensions");
  std::string cohomology_path;
  bool representatives = false;
  cohomology_cmd->add_option("file", cohomology_path, "Algebra description file")->required();
  cohomology_cmd->add_flag("--representatives", representatives,
                           "Also print a representative cocycle per class");

  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks from the catalogue");
  std::string identity;
  std::string verify_path;
  verify_cmd->add_option("identity", identity, "Catalogue entry or 'all'")->required();
  verify_cmd->add_option("file", verify_path,
                         "Optional algebra description file to use as the fixture");
  verify_cmd->add_option("--fixture", cfg.fixture, "Restrict to one fixture by name");

  auto* trees_cmd = app.add_subcommand("trees", "List planar binary trees and their maps");
  int tree_n = 0;
  bool faces = false, bullets = false, verbose = false;
  std::string r0_spec, ri_spec;
  trees_cmd->add_option("n", tree_n, "Vertex count")->required();
  trees_cmd->add_flag("--faces", faces, "Print the face maps d_0..d_n of each tree");
  trees_cmd->add_flag("--bullets", bullets, "Print the orientation symbols at each position");
  trees_cmd->add_flag("--labels", verbose, "Print vertex and leaf counts next to each label");
  trees_cmd->add_option("--r0", r0_spec, "Collapse blocks, comma-separated sizes summing to n");
  trees_cmd->add_option("--ri", ri_spec, "Keep one block: slot:sizes, e.g. 2:1,2,1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitValid : kExitInput;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(validate_path);
    if (cohomology_cmd->parsed())
      return cmd_cohomology(cohomology_path, cfg.max_degree, representatives);
    if (verify_cmd->parsed()) return cmd_verify(identity, verify_path, cfg, format);
    if (trees_cmd->parsed())
      return cmd_trees(tree_n, faces, bullets, verbose, r0_spec, ri_spec);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitValid;
}
