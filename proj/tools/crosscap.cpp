// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 input or validation error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "crosscap/block_template.hpp"
#include "crosscap/cover.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/family.hpp"
#include "crosscap/partition.hpp"
#include "crosscap/penner.hpp"
#include "crosscap/spectra.hpp"
#include "crosscap/text_format.hpp"

using namespace crosscap;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.lo > r.hi) throw ParameterError("empty range " + text);
    return r;
  } catch (const std::logic_error&) {
    throw ParameterError("bad range '" + text + "', expected N or A..B");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::string interval_line(const PFCertificate& c) {
  std::ostringstream os;
  os << "lambda in [" << rational_string(c.lower) << ", " << rational_string(c.upper) << "] ~ "
     << decimal_string(c.lower, 12);
  return os.str();
}

bool overlap(const PFCertificate& a, const PFCertificate& b) { return a.lower <= b.upper && b.lower <= a.upper; }

struct CoverCheck {
  bool match = false;
  bool chi_doubles = false;
  bool orientable = false;
  PFCertificate lifted;
};

CoverCheck check_cover(const FamilyInstance& inst, const PFCertificate& base, const mpq_class& gap) {
  CoverCheck out;
  auto dc = double_cover(inst.system.realization());
  auto lifted = lift_system(dc, inst.system);
  auto word = lift_word(inst.system, lifted, build_f_word(inst));
  out.lifted = pf_eigenvalue(word_matrix(lifted, word).entries, gap);
  out.match = overlap(base, out.lifted);
  out.chi_doubles = euler_characteristic(dc.total) == 2 * euler_characteristic(inst.system.realization());
  out.orientable = orientability(dc.total);
  return out;
}

struct Options {
  int n = 1, k = 3, r = 0;
  std::string gap = "1e-9";
  std::string template_path;
  std::string output;
  std::string input;
};

BlockTemplate active_template(const Options& o) { return load_template(o.template_path); }

int cmd_gen_family(const Options& o) {
  auto inst = make_instance(o.n, o.k, o.r, active_template(o));
  emit(serialize(inst.system, build_f_word(inst)), o.output);
  auto sig = surface_signature(inst.system.realization());
  std::cerr << "P_{" << o.n << "," << o.k << "}: " << (sig.orientable ? "orientable" : "non-orientable") << " genus "
            << sig.genus << ", " << sig.marked_points << " marked points, " << inst.system.size() << " curves\n";
  return kOk;
}

int cmd_stretch(const Options& o) {
  auto inst = make_instance(o.n, o.k, o.r, active_template(o));
  auto cert = stretch_factor(inst, parse_rational(o.gap));
  std::ostringstream os;
  os << "n " << o.n << " k " << o.k << '\n' << interval_line(cert) << '\n' << write_certificate(cert);
  emit(os.str(), o.output);
  return cert.lower > 1 ? kOk : kFailed;
}

int cmd_verify_bounds(const Options& o) {
  auto inst = make_instance(o.n, o.k, o.r, active_template(o));
  auto cert = stretch_factor(inst, parse_rational(o.gap));
  auto rep = verify_upper_bound(inst, cert);
  std::cout << interval_line(cert) << '\n'
            << "D' " << rep.d_prime << " D " << rep.D << " 4D^4 " << rep.bound << " genus " << rep.genus << '\n'
            << "lambda^(k-1) <= 4D^4: " << verdict_name(rep.k_bound) << '\n'
            << "log(lambda) <= 28 log(4D^4) n/g: " << verdict_name(rep.g_bound) << '\n';
  if (rep.k_bound == Verdict::Indeterminate || rep.g_bound == Verdict::Indeterminate)
    std::cout << "undecided at this gap; rerun with a smaller --gap\n";
  return rep.passed() ? kOk : kFailed;
}

int cmd_check_penner(const Options& o) {
  CurveSystem system;
  PennerWord word;
  if (!o.input.empty()) {
    auto doc = parse_curve_document(read_file(o.input));
    if (!doc.word) throw ParseError(o.input + " has no word section");
    system = doc.system;
    word = *doc.word;
  } else {
    auto inst = make_instance(o.n, o.k, o.r, active_template(o));
    system = inst.system;
    word = build_f_word(inst);
  }
  auto rep = validate_penner_word(system, word);
  std::cout << "condition 1 (filling): " << (rep.filling ? "pass" : "fail") << '\n'
            << "condition 2 (marked inconsistently): " << (rep.inconsistent ? "pass" : "fail") << '\n'
            << "condition 3 (every curve twisted): " << (rep.all_twisted ? "pass" : "fail")
            << " (word power " << rep.unrolled_power << ")\n"
            << "condition 4 (twist signs): " << (rep.signs_consistent ? "pass" : "fail") << '\n';
  for (const auto& d : rep.diagnostics) std::cout << d << '\n';
  return rep.passed() ? kOk : kFailed;
}

int cmd_cover(const Options& o) {
  auto inst = make_instance(o.n, o.k, o.r, active_template(o));
  auto gap = parse_rational(o.gap);
  auto base = stretch_factor(inst, gap);
  auto chk = check_cover(inst, base, gap);
  auto sig = surface_signature(inst.system.realization());
  auto cs = cover_signature(sig);
  auto dc = double_cover(inst.system.realization());
  auto total = surface_signature(dc.total);
  std::cout << "base: " << (sig.orientable ? "orientable" : "non-orientable") << " genus " << sig.genus << " chi "
            << sig.euler_characteristic << " marked " << sig.marked_points << '\n'
            << "cover: " << (total.orientable ? "orientable" : "non-orientable") << " genus " << total.genus << " chi "
            << total.euler_characteristic << " marked " << total.marked_points << " (expected genus "
            << cs.signature.genus << ")\n"
            << "base " << interval_line(base) << '\n'
            << "lift " << interval_line(chk.lifted) << '\n'
            << "intervals overlap: " << (chk.match ? "yes" : "no") << '\n';
  if (!o.output.empty()) emit(serialize_cover(dc), o.output);
  bool ok = chk.match && chk.chi_doubles && chk.orientable && total.genus == cs.signature.genus;
  return ok ? kOk : kFailed;
}

int cmd_fuzz(std::uint64_t seed, int count, const FuzzParams& params, const std::string& gap) {
  auto g = parse_rational(gap);
  int violations = 0, undecided = 0;
  auto instances = fuzz_partition_instances(seed, params, count);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& [m, p] = instances[i];
    auto report = check_partition_conditions(m, p);
    if (!report.all()) {
      std::cout << "instance " << i << ": generator produced a partition failing its conditions\n";
      ++violations;
      continue;
    }
    auto lb = lemma_bound_check(m, p, g);
    if (!lb.decided) ++undecided;
    if (!lb.holds) ++violations;
    std::cout << "instance " << i << " size " << m.rows() << " parts " << p.parts.size() << " bound " << lb.bound
              << " rho_upper " << decimal_string(lb.certificate.upper, 6) << ' '
              << (lb.holds ? "holds" : (lb.decided ? "VIOLATED" : "undecided")) << '\n';
  }
  std::cout << count << " instances, " << violations << " violations, " << undecided << " undecided\n";
  return violations == 0 ? kOk : kFailed;
}

struct Cell {
  int n, k;
  std::string row;
  bool ok = false;
  std::string error;
};

int cmd_sweep(const Options& o, const std::string& nr, const std::string& kr, int threads) {
  auto N = parse_range(nr), K = parse_range(kr);
  auto t = active_template(o);
  auto gap = parse_rational(o.gap);
  std::vector<Cell> cells;
  for (int n = N.lo; n <= N.hi; ++n)
    for (int k = K.lo; k <= K.hi; ++k) cells.push_back({n, k, {}, false, {}});
  for (const auto& c : cells) make_instance(c.n, c.k, 0, t);  // surface parameter errors up front
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cells.size();) {
      auto& c = cells[i];
      try {
        auto inst = make_instance(c.n, c.k, 0, t);
        auto cert = stretch_factor(inst, gap);
        auto rep = verify_upper_bound(inst, cert);
        auto cov = check_cover(inst, cert, gap);
        const bool cover_ok = cov.match && cov.chi_doubles && cov.orientable;
        std::ostringstream os;
        os << c.n << ',' << c.k << ',' << rep.genus << ',' << rep.d_prime << ',' << rational_string(cert.lower) << ','
           << rational_string(cert.upper) << ',' << decimal_string(cert.lower, 12) << ',' << verdict_name(rep.k_bound)
           << ',' << verdict_name(rep.g_bound) << ',' << (cover_ok ? "yes" : "no") << '\n';
        c.row = os.str();
        c.ok = rep.passed() && cover_ok;
      } catch (const std::exception& e) {
        c.error = e.what();
      }
    }
  };
  int workers = std::max(1, std::min<int>(threads, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::string out = "n,k,genus,d_prime,lambda_lower,lambda_upper,lambda_decimal,k_bound_pass,g_bound_pass,cover_match\n";
  bool all = true;
  for (const auto& c : cells) {
    if (!c.error.empty()) throw Error("cell n=" + std::to_string(c.n) + " k=" + std::to_string(c.k) + ": " + c.error);
    out += c.row;
    all = all && c.ok;
  }
  emit(out, o.output);
  return all ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Penner family on non-orientable surfaces: build, certify, verify"};
  app.require_subcommand(1);
  Options o;
  auto family_flags = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of columns (n >= 1)");
    sub->add_option("--k", o.k, "number of rows (k >= 3)");
    sub->add_option("--r", o.r, "oriented sums, 0 <= r <= 14n");
    sub->add_option("--template", o.template_path, "block template file (default: $CROSSCAP_TEMPLATE or built in)");
  };
  auto gap_flag = [&](CLI::App* sub) { sub->add_option("--gap", o.gap, "certificate width, e.g. 1e-9 or 1/1000"); };

  auto* gen = app.add_subcommand("gen-family", "write the curve system and word of one family member");
  family_flags(gen);
  gen->add_option("--output,-o", o.output, "output file (default stdout)");

  auto* stretch = app.add_subcommand("stretch", "certified stretch factor of f_{n,k}");
  family_flags(stretch);
  gap_flag(stretch);
  stretch->add_option("--output,-o", o.output, "output file (default stdout)");

  auto* bounds = app.add_subcommand("verify-bounds", "check lambda^(k-1) <= 4D^4 and log lambda <= C' n / g");
  family_flags(bounds);
  gap_flag(bounds);

  auto* penner = app.add_subcommand("check-penner", "validate the four Penner conditions");
  family_flags(penner);
  penner->add_option("--input,-i", o.input, "curve document with a word section (default: the family word)");

  auto* cover = app.add_subcommand("cover", "orientation double cover and stretch invariance");
  family_flags(cover);
  gap_flag(cover);
  cover->add_option("--output,-o", o.output, "write the serialized cover here");

  auto* fuzz = app.add_subcommand("lemma23-fuzz", "random partitioned matrices against the spectral bound");
  std::uint64_t seed = 1;
  int count = 200;
  FuzzParams fp;
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--count", count, "number of instances");
  fuzz->add_option("--parts", fp.parts, "number of parts (>= 4)");
  fuzz->add_option("--D", fp.D, "out-degree bound");
  fuzz->add_option("--max-part", fp.max_part, "largest part size");
  gap_flag(fuzz);

  auto* sweep = app.add_subcommand("sweep", "CSV table over a grid of (n, k)");
  std::string nr = "1..2", kr = "3..5";
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  sweep->add_option("--n", nr, "column range, N or A..B");
  sweep->add_option("--k", kr, "row range, N or A..B");
  sweep->add_option("--template", o.template_path, "block template file");
  sweep->add_option("--threads", threads, "worker threads");
  sweep->add_option("--output,-o", o.output, "output file (default stdout)");
  gap_flag(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*gen) return cmd_gen_family(o);
    if (*stretch) return cmd_stretch(o);
    if (*bounds) return cmd_verify_bounds(o);
    if (*penner) return cmd_check_penner(o);
    if (*cover) return cmd_cover(o);
    if (*fuzz) return cmd_fuzz(seed, count, fp, o.gap);
    if (*sweep) return cmd_sweep(o, nr, kr, threads);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const ConditionsUnverified& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
