// One pass/fail line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "crosscap/cover.hpp"
#include "crosscap/family.hpp"
#include "crosscap/partition.hpp"
#include "crosscap/penner.hpp"
#include "crosscap/spectra.hpp"
#include "fixtures.hpp"

using namespace crosscap;

namespace {

// Pinned tolerances and limits.
const mpq_class kGap(1, 1000000000);          // certificate width
const double kGoldenTolerance = 1e-12;        // criterion 6
constexpr double kGenusCellSeconds = 1.0;     // criterion 1
constexpr double kBoundCellSeconds = 30.0;    // criterion 3
constexpr int kMaxBoundDimension = 150;       // criterion 3
constexpr int kFuzzCount = 200;               // criterion 4
constexpr std::uint64_t kFuzzSeed = 20241014;  // criterion 4
constexpr double kPropertySeconds = 60.0;     // criterion 8

const int kGridN[] = {1, 2};
const int kGridK[] = {3, 4, 5};

int failed = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s (%s)\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

template <class F>
void criterion(int id, F body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

std::string cell(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

bool overlap(const PFCertificate& a, const PFCertificate& b) { return a.lower <= b.upper && b.lower <= a.upper; }

}  // namespace

int main(int argc, char** argv) {
  const std::string property_binary = argc > 1 ? argv[1] : "";

  criterion(1, [] {
    bool ok = true;
    std::string bad;
    double worst = 0;
    for (int n : kGridN)
      for (int k : kGridK) {
        auto start = std::chrono::steady_clock::now();
        auto sig = surface_signature(build_surface(default_template(), n, k).realization());
        double t = seconds_since(start);
        worst = std::max(worst, t);
        bool here = !sig.orientable && sig.genus == genus_formula(n, k) &&
                    sig.euler_characteristic == -static_cast<std::int64_t>(n) * (14 * k - 2) && t < kGenusCellSeconds;
        if (!here) bad += " " + cell(n, k);
        ok = ok && here;
      }
    std::ostringstream os;
    os << "genus and euler characteristic on 6 cells, slowest " << worst << " s" << (ok ? "" : ", failing:" + bad);
    report(1, ok, os.str());
  });

  criterion(2, [] {
    bool ok = true;
    std::string bad;
    for (int n : kGridN)
      for (int k : kGridK) {
        auto inst = make_instance(n, k);
        auto rep = validate_penner_word(inst.system, build_f_word(inst));
        if (!rep.passed()) {
          ok = false;
          bad += " " + cell(n, k) + (rep.diagnostics.empty() ? "" : " " + rep.diagnostics[0]);
        }
      }
    report(2, ok, ok ? "all four conditions on 6 cells" : "failing:" + bad);
  });

  criterion(3, [] {
    bool ok = true;
    std::string bad;
    double worst = 0;
    for (int n : kGridN)
      for (int k : kGridK) {
        auto start = std::chrono::steady_clock::now();
        auto inst = make_instance(n, k);
        auto cert = stretch_factor(inst, kGap);
        auto rep = verify_upper_bound(inst, cert);
        double t = seconds_since(start);
        worst = std::max(worst, t);
        bool here = rep.passed() && inst.system.size() <= kMaxBoundDimension && t < kBoundCellSeconds;
        if (!here)
          bad += " " + cell(n, k) + " k-bound " + verdict_name(rep.k_bound) + " g-bound " + verdict_name(rep.g_bound);
        ok = ok && here;
      }
    std::ostringstream os;
    os << "lambda^(k-1) <= 4D^4 and lambda^g <= (4D^4)^(28n) on 6 cells, slowest " << worst << " s"
       << (ok ? "" : ", failing:" + bad);
    report(3, ok, os.str());
  });

  criterion(4, [] {
    bool ok = true;
    std::string bad;
    for (int n : kGridN)
      for (int k : kGridK) {
        auto inst = make_instance(n, k);
        auto m = word_matrix(inst.system, build_f_word(inst)).entries;
        auto p = partition_family(inst);
        bool here = check_partition_conditions(m, p).all();
        if (here) {
          auto lb = lemma_bound_check(m, p, kGap);
          here = lb.holds;
        }
        if (!here) bad += " " + cell(n, k);
        ok = ok && here;
      }
    int fuzz_bad = 0;
    for (const auto& [m, p] : fuzz_partition_instances(kFuzzSeed, FuzzParams{}, kFuzzCount))
      if (!check_partition_conditions(m, p).all() || !lemma_bound_check(m, p, kGap).holds) ++fuzz_bad;
    ok = ok && fuzz_bad == 0;
    std::ostringstream os;
    os << "five conditions and the 4D^4 bound on 6 cells, " << kFuzzCount << " fuzz instances with " << fuzz_bad
       << " violations" << (bad.empty() ? "" : ", failing:" + bad);
    report(4, ok, os.str());
  });

  criterion(5, [] {
    bool ok = true;
    std::string bad;
    for (int k : kGridK) {
      auto inst = make_instance(1, k);
      auto base_sig = surface_signature(inst.system.realization());
      auto dc = double_cover(inst.system.realization());
      auto total_sig = surface_signature(dc.total);
      auto lifted = lift_system(dc, inst.system);
      auto w = lift_word(inst.system, lifted, build_f_word(inst));
      auto lift_cert = pf_eigenvalue(word_matrix(lifted, w).entries, kGap);
      auto base_cert = stretch_factor(inst, kGap);
      bool here = overlap(base_cert, lift_cert) && total_sig.orientable &&
                  total_sig.euler_characteristic == 2 * base_sig.euler_characteristic;
      if (!here) bad += " " + cell(1, k);
      ok = ok && here;
    }
    report(5, ok, ok ? "lifted intervals overlap, cover orientable with doubled euler characteristic for n = 1"
                     : "failing:" + bad);
  });

  criterion(6, [] {
    auto torus = fixtures::torus();
    PennerWord w{{Twist{"a", 1}, Twist{"b", -1}}, torus.basis()};
    auto cert = pf_eigenvalue(word_matrix(torus, w).entries, mpq_class(1, 10000000) * mpq_class(1, 100000000));
    // (3 + sqrt 5) / 2 is the larger root of x^2 - 3x + 1, bracketed exactly.
    auto poly = [](const mpq_class& x) { return mpq_class(x * x - 3 * x + 1); };
    const double golden = (3 + std::sqrt(5.0)) / 2;
    bool close = std::abs(cert.lower.get_d() - golden) <= kGoldenTolerance &&
                 std::abs(cert.upper.get_d() - golden) <= kGoldenTolerance;
    bool brackets = poly(cert.lower) <= 0 && poly(cert.upper) >= 0 && cert.lower > mpq_class(3, 2);
    long checked = 0, wrong = 0;
    for (int n : kGridN)
      for (int k : kGridK) {
        auto inst = make_instance(n, k);
        for (const auto& c : inst.system.curves()) {
          ++checked;
          if (twist_matrix(inst.system, c.id, c.twist_sign).entries.determinant() != 1) ++wrong;
        }
      }
    std::ostringstream os;
    os << "golden interval within " << kGoldenTolerance << ", " << checked << " twist determinants with " << wrong
       << " not equal to 1";
    report(6, close && brackets && wrong == 0, os.str());
  });

  criterion(7, [] {
    bool ok = true;
    long checked = 0;
    for (int n : kGridN)
      for (int k : kGridK) {
        for (int r = 0; r <= 14 * n; ++r) {
          auto sig = oriented_sum_bookkeeping(make_instance(n, k, r));
          ++checked;
          ok = ok && sig.genus == genus_formula(n, k) + r;
          if (r == 14 * n) ok = ok && sig.genus == genus_formula(n, k + 1);
        }
      }
    report(7, ok, std::to_string(checked) + " (n,k,r) triples, r = 14n reaching the next k");
  });

  criterion(8, [&] {
    if (property_binary.empty()) {
      report(8, false, "property binary path not supplied");
      return;
    }
    auto start = std::chrono::steady_clock::now();
    int status = std::system((property_binary + " > /dev/null").c_str());
    double t = seconds_since(start);
    std::ostringstream os;
    os << "property suite exit " << status << " in " << t << " s";
    report(8, status == 0 && t < kPropertySeconds, os.str());
  });

  return failed == 0 ? 0 : 1;
}
