#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "motzcyc/ascii.hpp"
#include "motzcyc/descent_set.hpp"
#include "motzcyc/enumerate.hpp"
#include "motzcyc/errors.hpp"
#include "motzcyc/gamma.hpp"
#include "motzcyc/jdt.hpp"
#include "motzcyc/numbers.hpp"
#include "motzcyc/path.hpp"
#include "motzcyc/shape.hpp"
#include "motzcyc/shift.hpp"
#include "motzcyc/statistics.hpp"
#include "motzcyc/tableau.hpp"

namespace motzcyc {

// One broken check: the witness string reproduces the case through the CLI.
struct Failure {
  std::string witness;
  std::string check;  // "extension", "equivariance", "non-escher", ...
  std::string expected;
  std::string actual;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string suite;   // e.g. "rho-udl", "promotion-3row", "counts"
  std::string params;  // e.g. "n=6 k=2"
  long long cases_checked = 0;
  std::vector<Failure> failures;
  // True for the one documented exception: at n = 2 every cyclic extension
  // is forced to be Escher (cDes = {1,2} everywhere), so non-Escher failures
  // there are expected and do not fail a run.
  bool expected_failure = false;
  double elapsed_seconds = 0.0;

  bool passed() const { return failures.empty(); }
  bool acceptable() const { return failures.empty() || expected_failure; }
};

inline bool all_acceptable(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.acceptable()) return false;
  return true;
}

// A finite family closed under a shift map, with its descent statistics.
// shift_inverse may be empty when no inverse operation exists in the API
// (promotion); the inverse round-trip check is skipped then.
template <class E>
struct CyclicFamily {
  std::string suite;
  std::string params;
  int n = 0;
  std::vector<E> elements;
  std::function<DescentSet(const E&)> des;
  std::function<CyclicDescentSet(const E&)> cdes;
  std::function<E(const E&)> shift;
  std::function<E(const E&)> shift_inverse;
  std::function<std::string(const E&)> str;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

inline VerificationReport make_report(std::string suite, std::string params) {
  VerificationReport rep;
  rep.suite = std::move(suite);
  rep.params = std::move(params);
  return rep;
}

inline void finish_report(VerificationReport& rep, const Stopwatch& watch,
                          int n) {
  rep.elapsed_seconds = watch.seconds();
  if (n == 2 && !rep.failures.empty()) {
    bool only_escher = true;
    for (const auto& f : rep.failures) only_escher &= f.check == "non-escher";
    rep.expected_failure = only_escher;
  }
}

}  // namespace detail

// The cyclic-extension axioms over one family:
//   extension      cDes restricted to 1..n-1 equals Des,
//   equivariance   cDes(shift(F)) = cDes(F) + 1 (mod n),
//   non-escher     cDes is neither empty nor all of 1..n,
//   closure        shift lands inside the family,
//   bijectivity    shift permutes the family,
//   inverse        shift_inverse undoes shift (when an inverse exists).
template <class E>
VerificationReport check_cyclic_extension(const CyclicFamily<E>& fam) {
  if (fam.elements.empty())
    throw DomainEmptyError("family " + fam.suite + " (" + fam.params +
                           ") is empty");
  detail::Stopwatch watch;
  VerificationReport rep = detail::make_report(fam.suite, fam.params);

  std::set<std::string> domain;
  for (const E& e : fam.elements) domain.insert(fam.str(e));
  std::set<std::string> images;

  for (const E& e : fam.elements) {
    const std::string w = fam.str(e);
    const CyclicDescentSet cd = fam.cdes(e);
    const DescentSet de = fam.des(e);
    if (cd.restriction() != de)
      rep.failures.push_back({w, "extension", de.str(), cd.restriction().str()});
    if (cd.escher())
      rep.failures.push_back(
          {w, "non-escher", "proper nonempty subset of 1.." + std::to_string(fam.n),
           cd.str()});
    const E shifted = fam.shift(e);
    const std::string ws = fam.str(shifted);
    const CyclicDescentSet shifted_cd = fam.cdes(shifted);
    if (shifted_cd != cd.rotated())
      rep.failures.push_back({w, "equivariance", cd.rotated().str(), shifted_cd.str()});
    if (!domain.count(ws))
      rep.failures.push_back({w, "closure", "shift image inside the family", ws});
    images.insert(ws);
    if (fam.shift_inverse) {
      const std::string back = fam.str(fam.shift_inverse(shifted));
      if (back != w) rep.failures.push_back({w, "inverse", w, back});
    }
    ++rep.cases_checked;
  }
  if (images.size() != domain.size())
    rep.failures.push_back(
        {fam.suite, "bijectivity",
         std::to_string(domain.size()) + " distinct images",
         std::to_string(images.size()) + " distinct images"});

  detail::finish_report(rep, watch, fam.n);
  return rep;
}

// ---- Family builders -------------------------------------------------------

namespace detail {

inline std::vector<MotzkinPath> without_all_level(std::vector<MotzkinPath> v) {
  std::erase_if(v, [](const MotzkinPath& m) { return m.all_level(); });
  return v;
}

inline const char* path_suite_name(StepOrder order) {
  switch (order) {
    case StepOrder::UDL: return "rho-udl";
    case StepOrder::ULD: return "rhohat-uld";
    default: return "shift-lud";
  }
}

}  // namespace detail

// M*_n (all n-step paths except L^n) under the shift for `order`.
inline CyclicFamily<MotzkinPath> path_family(int n, StepOrder order) {
  CyclicFamily<MotzkinPath> fam;
  fam.suite = detail::path_suite_name(order);
  fam.params = "n=" + std::to_string(n);
  fam.n = n;
  fam.elements = detail::without_all_level(enumerate_paths(n));
  fam.des = [order](const MotzkinPath& m) { return descent_set(m, order); };
  fam.cdes = [order](const MotzkinPath& m) { return cyclic_descent_set(m, order); };
  fam.shift = [order](const MotzkinPath& m) { return shift(m, order); };
  fam.shift_inverse = [order](const MotzkinPath& m) { return shift_inverse(m, order); };
  fam.str = [](const MotzkinPath& m) { return m.str(); };
  return fam;
}

// M_{n,k} (exactly k level steps, k < n) under the same shift. rho preserves
// the level count, so for UDL this is a closed subfamily.
inline CyclicFamily<MotzkinPath> path_family_fixed_horizontal(int n, int k,
                                                              StepOrder order) {
  CyclicFamily<MotzkinPath> fam = path_family(n, order);
  fam.params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
  fam.elements =
      detail::without_all_level(enumerate_paths_fixed_horizontal(n, k));
  return fam;
}

// SYT(strip(n, k)) under promotion, k >= 1. Promotion has no standalone
// inverse in the API, so the inverse check is skipped.
inline CyclicFamily<SkewTableau> tableau_family(int n, int k) {
  CyclicFamily<SkewTableau> fam;
  fam.suite = "promotion-3row";
  fam.params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
  fam.n = n;
  fam.elements = enumerate_syt(three_row_strip(n, k));
  fam.des = [](const SkewTableau& t) { return descent_set_syt(t); };
  fam.cdes = [](const SkewTableau& t) { return cyclic_descent_set_3row(t); };
  fam.shift = [](const SkewTableau& t) { return promotion(t); };
  fam.str = [](const SkewTableau& t) { return t.str(); };
  return fam;
}

// ---- Individual theorem checks ---------------------------------------------

// The multiset {cDes(M)} is invariant under rotating every set by +1 (mod n).
// Runs over M_{n,k} when k is given (meaningful for UDL, whose shift
// preserves the level count) and over M*_n otherwise. Also flags Escher
// configurations — at n = 2 that is the documented expected failure.
inline VerificationReport check_rotation_multiset(int n, std::optional<int> k,
                                                  StepOrder order) {
  detail::Stopwatch watch;
  VerificationReport rep = detail::make_report(
      "rotation-multiset", "n=" + std::to_string(n) +
                               (k ? " k=" + std::to_string(*k) : "") +
                               " order=" + to_string(order));
  const auto elements = detail::without_all_level(
      k ? enumerate_paths_fixed_horizontal(n, *k) : enumerate_paths(n));
  if (elements.empty())
    throw DomainEmptyError("rotation-multiset family (" + rep.params + ") is empty");

  std::map<std::vector<int>, long long> plain, rotated;
  for (const auto& m : elements) {
    const CyclicDescentSet cd = cyclic_descent_set(m, order);
    if (cd.escher())
      rep.failures.push_back(
          {m.str(), "non-escher", "proper nonempty subset of 1.." + std::to_string(n),
           cd.str()});
    ++plain[cd.members()];
    ++rotated[cd.rotated().members()];
    ++rep.cases_checked;
  }
  if (plain != rotated)
    rep.failures.push_back({rep.params, "rotation-multiset",
                            "rotated cDes multiset equals the original",
                            "multisets differ"});
  detail::finish_report(rep, watch, n);
  return rep;
}

// Distribution of Des over all of M_n for one step order.
struct DistributionTable {
  int n = 0;
  StepOrder order = StepOrder::UDL;
  std::map<std::vector<int>, long long> counts;

  long long total() const {
    long long t = 0;
    for (const auto& [_, c] : counts) t += c;
    return t;
  }
  friend bool operator==(const DistributionTable& a, const DistributionTable& b) {
    return a.n == b.n && a.counts == b.counts;
  }
};

inline DistributionTable descent_distribution(int n, StepOrder order) {
  DistributionTable table{n, order, {}};
  for (const auto& m : enumerate_paths(n))
    ++table.counts[descent_set(m, order).members()];
  return table;
}

// The three Des statistics are equidistributed over M_n; phi and phi_prime
// realize the equality pointwise and bijectively.
inline VerificationReport check_equidistribution(int n) {
  detail::Stopwatch watch;
  VerificationReport rep =
      detail::make_report("equidistribution", "n=" + std::to_string(n));
  const auto paths = enumerate_paths(n);

  const DistributionTable udl = descent_distribution(n, StepOrder::UDL);
  const DistributionTable uld = descent_distribution(n, StepOrder::ULD);
  const DistributionTable lud = descent_distribution(n, StepOrder::LUD);
  if (!(udl == uld))
    rep.failures.push_back({rep.params, "equidistribution",
                            "Des distribution UDL = ULD", "tables differ"});
  if (!(uld == lud))
    rep.failures.push_back({rep.params, "equidistribution",
                            "Des distribution ULD = LUD", "tables differ"});
  const long long want_total = static_cast<long long>(motzkin_number(n));
  if (udl.total() != want_total)
    rep.failures.push_back({rep.params, "distribution-total",
                            std::to_string(want_total),
                            std::to_string(udl.total())});

  std::set<std::string> phi_images, phi_prime_images;
  for (const auto& m : paths) {
    const MotzkinPath f = phi(m);
    const MotzkinPath fp = phi_prime(m);
    if (descent_set(m, StepOrder::ULD) != descent_set(f, StepOrder::UDL))
      rep.failures.push_back({m.str(), "phi-transport",
                              descent_set(m, StepOrder::ULD).str(),
                              descent_set(f, StepOrder::UDL).str()});
    if (descent_set(m, StepOrder::LUD) != descent_set(fp, StepOrder::ULD))
      rep.failures.push_back({m.str(), "phi-prime-transport",
                              descent_set(m, StepOrder::LUD).str(),
                              descent_set(fp, StepOrder::ULD).str()});
    if (phi_inverse(f) != m)
      rep.failures.push_back({m.str(), "phi-inverse", m.str(), phi_inverse(f).str()});
    if (phi_prime_inverse(fp) != m)
      rep.failures.push_back(
          {m.str(), "phi-prime-inverse", m.str(), phi_prime_inverse(fp).str()});
    // phi preserves the level count; phi_prime preserves the down count.
    if (f.horizontal_count() != m.horizontal_count())
      rep.failures.push_back({m.str(), "phi-level-count",
                              std::to_string(m.horizontal_count()),
                              std::to_string(f.horizontal_count())});
    if (fp.count(Step::Down) != m.count(Step::Down))
      rep.failures.push_back({m.str(), "phi-prime-down-count",
                              std::to_string(m.count(Step::Down)),
                              std::to_string(fp.count(Step::Down))});
    phi_images.insert(f.str());
    phi_prime_images.insert(fp.str());
    ++rep.cases_checked;
  }
  if (phi_images.size() != paths.size())
    rep.failures.push_back({rep.params, "phi-bijectivity",
                            std::to_string(paths.size()) + " images",
                            std::to_string(phi_images.size()) + " images"});
  if (phi_prime_images.size() != paths.size())
    rep.failures.push_back({rep.params, "phi-prime-bijectivity",
                            std::to_string(paths.size()) + " images",
                            std::to_string(phi_prime_images.size()) + " images"});

  detail::finish_report(rep, watch, n);
  return rep;
}

// Promotion commutes with rho through gamma: pro(gamma(M)) = gamma(rho(M))
// on M*_n. gamma's descent preservation and invertibility ride along.
inline VerificationReport check_commutation(int n) {
  detail::Stopwatch watch;
  VerificationReport rep =
      detail::make_report("commutation", "n=" + std::to_string(n));
  for (const auto& m : detail::without_all_level(enumerate_paths(n))) {
    const SkewTableau t = gamma(m);
    if (descent_set_syt(t) != descent_set(m, StepOrder::UDL))
      rep.failures.push_back({m.str(), "gamma-descents",
                              descent_set(m, StepOrder::UDL).str(),
                              descent_set_syt(t).str()});
    if (gamma_inverse(t) != m)
      rep.failures.push_back({m.str(), "gamma-inverse", m.str(),
                              gamma_inverse(t).str()});
    const SkewTableau lhs = promotion(t);
    const SkewTableau rhs = gamma(rho(m));
    if (!(lhs == rhs))
      rep.failures.push_back({m.str(), "commutation", rhs.str(), lhs.str()});
    ++rep.cases_checked;
  }
  detail::finish_report(rep, watch, n);
  return rep;
}

// Five quantities that must agree at every n:
//   enumerated paths, the Motzkin number, strip SYT summed over k,
//   straight SYT with at most three rows, distinct rectified gamma images.
// The per-path pass also re-reads every serialization (text and drawing) and
// re-assembles M_n from the fixed-level-count slices.
inline VerificationReport check_counts(int n) {
  detail::Stopwatch watch;
  VerificationReport rep = detail::make_report("counts", "n=" + std::to_string(n));
  const auto paths = enumerate_paths(n);
  const long long motzkin = static_cast<long long>(motzkin_number(n));

  std::set<std::string> rectified_images;
  for (const auto& m : paths) {
    if (MotzkinPath::parse(m.str()) != m)
      rep.failures.push_back({m.str(), "text-round-trip", m.str(),
                              MotzkinPath::parse(m.str()).str()});
    if (read_ascii(render_ascii(m)) != m)
      rep.failures.push_back({m.str(), "drawing-round-trip", m.str(),
                              read_ascii(render_ascii(m)).str()});
    const SkewTableau flat = gamma_tilde(m);
    if (!flat.shape().straight() || flat.shape().rows() > 3)
      rep.failures.push_back({m.str(), "rectified-shape",
                              "straight shape with <= 3 rows",
                              flat.shape().str()});
    rectified_images.insert(flat.str());
    ++rep.cases_checked;
  }

  const long long path_count = static_cast<long long>(paths.size());
  auto expect = [&](const char* what, long long actual) {
    if (actual != motzkin)
      rep.failures.push_back({rep.params, what, std::to_string(motzkin),
                              std::to_string(actual)});
  };
  expect("path-count", path_count);

  long long strip_total = 0;
  for (int k = 0; 2 * k <= n; ++k)
    strip_total +=
        static_cast<long long>(enumerate_syt(three_row_strip(n, k)).size());
  expect("strip-syt-count", strip_total);

  long long straight_total = 0;
  for (int a = n; a >= 0; --a)
    for (int b = std::min(a, n - a); b >= 0; --b) {
      const int c = n - a - b;
      if (c < 0 || c > b) continue;
      straight_total += static_cast<long long>(
          enumerate_syt(SkewShape({a, b, c}, {})).size());
    }
  expect("straight-syt-count", straight_total);

  expect("rectified-image-count",
         static_cast<long long>(rectified_images.size()));

  long long slice_total = 0;
  for (int k = 0; k <= n; ++k)
    slice_total += static_cast<long long>(
        enumerate_paths_fixed_horizontal(n, k).size());
  expect("level-slice-partition", slice_total);

  detail::finish_report(rep, watch, n);
  return rep;
}

// ---- Orbits ------------------------------------------------------------

template <class E>
struct OrbitRecord {
  std::vector<E> elements;  // starts at the seed; the next shift closes the loop
  std::vector<CyclicDescentSet> cdes_sequence;
  int length() const { return static_cast<int>(elements.size()); }
};

// Walks e, shift(e), shift^2(e), ... until the seed reappears.
template <class E, class ShiftFn, class CdesFn>
OrbitRecord<E> orbit(const E& start, ShiftFn&& shift_fn, CdesFn&& cdes_fn,
                     long long max_steps) {
  OrbitRecord<E> rec;
  E current = start;
  for (long long steps = 1;; ++steps) {
    rec.elements.push_back(current);
    rec.cdes_sequence.push_back(cdes_fn(current));
    current = shift_fn(current);
    if (current == start) return rec;
    if (steps >= max_steps)
      throw NonClosureError("orbit did not close after " +
                            std::to_string(max_steps) + " steps");
  }
}

// ---- Suite drivers -----------------------------------------------------

// Every axiom family at one n: (cDes, rho) on each nonempty M_{n,k}; the
// rotation-multiset consequence per statistic; (cDes, rho_hat) and the
// transported LUD pair on M*_n; (cDes, promotion) on each SYT(strip(n, k));
// and an orbit-closure walk from the first path of M*_n.
inline std::vector<VerificationReport> run_axiom_suites(int n_min, int n_max) {
  std::vector<VerificationReport> reports;
  for (int n = n_min; n <= n_max; ++n) {
    if (n <= 1) {
      // M*_n is empty; nothing to check and nothing can fail.
      reports.push_back(detail::make_report(
          "axioms", "n=" + std::to_string(n) + " (vacuous: no non-level paths)"));
      continue;
    }
    for (int k = n % 2; k <= n - 2; k += 2) {
      reports.push_back(
          check_cyclic_extension(path_family_fixed_horizontal(n, k, StepOrder::UDL)));
      reports.push_back(check_rotation_multiset(n, k, StepOrder::UDL));
    }
    reports.push_back(check_cyclic_extension(path_family(n, StepOrder::ULD)));
    reports.push_back(check_rotation_multiset(n, std::nullopt, StepOrder::ULD));
    reports.push_back(check_cyclic_extension(path_family(n, StepOrder::LUD)));
    reports.push_back(check_rotation_multiset(n, std::nullopt, StepOrder::LUD));
    for (int k = 1; 2 * k <= n; ++k)
      reports.push_back(check_cyclic_extension(tableau_family(n, k)));

    {
      detail::Stopwatch watch;
      VerificationReport rep =
          detail::make_report("orbit-closure", "n=" + std::to_string(n));
      const auto fam = path_family(n, StepOrder::UDL);
      try {
        const auto rec = orbit(
            fam.elements.front(), fam.shift, fam.cdes,
            static_cast<long long>(motzkin_number(n)) + 1);
        rep.cases_checked = rec.length();
        for (int i = 0; i + 1 < rec.length(); ++i)
          if (rec.cdes_sequence[static_cast<std::size_t>(i) + 1] !=
              rec.cdes_sequence[static_cast<std::size_t>(i)].rotated())
            rep.failures.push_back(
                {rec.elements[static_cast<std::size_t>(i)].str(),
                 "orbit-equivariance",
                 rec.cdes_sequence[static_cast<std::size_t>(i)].rotated().str(),
                 rec.cdes_sequence[static_cast<std::size_t>(i) + 1].str()});
      } catch (const NonClosureError& e) {
        rep.failures.push_back(
            {fam.elements.front().str(), "orbit-closure", "closed orbit", e.what()});
      }
      detail::finish_report(rep, watch, n);
      reports.push_back(rep);
    }
  }
  return reports;
}

inline std::vector<VerificationReport> run_equidistribution(int n_min, int n_max) {
  std::vector<VerificationReport> reports;
  for (int n = n_min; n <= n_max; ++n)
    reports.push_back(check_equidistribution(n));
  return reports;
}

inline std::vector<VerificationReport> run_commutation(int n_min, int n_max) {
  std::vector<VerificationReport> reports;
  for (int n = n_min; n <= n_max; ++n) {
    if (n <= 1) {
      reports.push_back(detail::make_report(
          "commutation",
          "n=" + std::to_string(n) + " (vacuous: no non-level paths)"));
      continue;
    }
    reports.push_back(check_commutation(n));
  }
  return reports;
}

inline std::vector<VerificationReport> run_counts(int n_min, int n_max) {
  std::vector<VerificationReport> reports;
  for (int n = n_min; n <= n_max; ++n) reports.push_back(check_counts(n));
  return reports;
}

// which: axioms | equidist | commutation | counts | all.
inline std::vector<VerificationReport> run_suites(const std::string& which,
                                                  int n_min, int n_max) {
  if (which != "axioms" && which != "equidist" && which != "commutation" &&
      which != "counts" && which != "all")
    throw Error("unknown suite \"" + which + "\"");
  std::vector<VerificationReport> reports;
  auto append = [&](std::vector<VerificationReport> more) {
    for (auto& r : more) reports.push_back(std::move(r));
  };
  if (which == "axioms" || which == "all")
    append(run_axiom_suites(n_min, n_max));
  if (which == "equidist" || which == "all")
    append(run_equidistribution(n_min, n_max));
  if (which == "commutation" || which == "all")
    append(run_commutation(n_min, n_max));
  if (which == "counts" || which == "all")
    append(run_counts(n_min, n_max));
  return reports;
}

}  // namespace motzcyc
