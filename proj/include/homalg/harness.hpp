#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "homalg/cohomology.hpp"

namespace homalg {

// Deterministic splittable generator (splitmix64 steps).  Every random choice
// in the harness flows through one of these, so verdicts are a pure function
// of the configuration.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}

  uint64_t next();
  long int_in(long lo, long hi);  // inclusive on both ends

  // Numerator in [-bound, bound], denominator in [1, bound]; bound 0 gives 0.
  Rational rational(long bound);

 private:
  uint64_t s_;
};

// Sub-seed for (run seed, identity name, trial index); fixed scheme so trial
// order or concurrency cannot change any verdict.
uint64_t sub_seed(uint64_t seed, std::string_view identity, uint64_t trial);

struct TrialConfig {
  uint64_t seed = 1729;
  int trials = 25;
  int max_degree = 4;          // hom-associative degree cap; trees cap at 3
  long coefficient_bound = 3;
  std::string fixture = "all";  // fixture name, or "all" for the shipped set
};

enum class Outcome { pass, fail, skip };

// One line of the report.  A failing verdict's detail always names the
// fixture, the sub-seed inputs, and the first differing entry, so the run can
// be replayed.
struct Verdict {
  std::string identity;
  Outcome outcome = Outcome::pass;
  std::string detail;
};

struct FixtureRegistry {
  std::vector<AlgebraPtr> algebras;
  std::vector<DialgebraPtr> dialgebras;
  AlgebraPtr perturbed_algebra;
  DialgebraPtr perturbed_dialgebra;
};

// The shipped fixture set: field, dual numbers and its lambda=2 twist,
// truncated polynomials and its twist; bimodule-map dialgebras (plain and
// swap-twisted) and the diagonal dialgebras of the associative fixtures.
FixtureRegistry default_fixtures();

// Random alpha-compatible cochains: rational combinations of the constraint
// subspace basis.  (The Session below caches the bases; these recompute.)
Cochain random_cochain(const AlgebraPtr& a, int n, Rng& rng, long bound);
TreeCochain random_tree_cochain(const DialgebraPtr& d, int n, Rng& rng, long bound);

// The checkable identity families, in the order run_suite executes them.
const std::vector<std::string>& identity_catalogue();

// One verification run: fixtures plus cached bases and cohomology towers.
class Session {
 public:
  explicit Session(TrialConfig cfg);
  Session(TrialConfig cfg, FixtureRegistry reg);

  const TrialConfig& config() const { return cfg_; }

  // Verdict for one catalogue entry; throws std::invalid_argument on an
  // unknown name.  Skip means no fixture in the registry applies.
  Verdict check(const std::string& name);

  // Fixture validation first (short-circuits if one fails), then the full
  // catalogue in order.
  std::vector<Verdict> run_all();

  struct Caches;  // cached subspace bases and cohomology towers

 private:
  TrialConfig cfg_;
  FixtureRegistry reg_;
  std::shared_ptr<Caches> caches_;
};

Verdict check_identity(const std::string& name, const TrialConfig& cfg);
std::vector<Verdict> run_suite(const TrialConfig& cfg);

bool any_failed(const std::vector<Verdict>& verdicts);

// Line-oriented reports; both end with a summary line and are byte-stable
// for a fixed configuration.
std::string render_text(const std::vector<Verdict>& verdicts, const TrialConfig& cfg);
std::string render_tsv(const std::vector<Verdict>& verdicts, const TrialConfig& cfg);

}  // namespace homalg
