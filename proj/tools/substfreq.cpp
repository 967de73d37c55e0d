#include <exception>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "substfreq/closed_form.hpp"
#include "substfreq/frid.hpp"
#include "substfreq/oracle.hpp"
#include "substfreq/rauzy.hpp"
#include "substfreq/symmetry.hpp"

namespace {

using namespace substfreq;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

ordered_json base_json() {
  ordered_json j;
  j["schema"] = "substfreq/1";
  return j;
}

ordered_json values_json(const std::set<Rational>& values) {
  // largest first, the order the table rows list them in
  ordered_json arr = ordered_json::array();
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    arr.push_back(fraction_string(*it));
  return arr;
}

int cmd_freq_set(int b, int m, long long N, bool have_n, long long from, long long to,
                 bool have_range) {
  const ClosedFormContext ctx = closed_form_context(b, m);
  ordered_json j = base_json();
  j["b"] = b;
  j["m"] = m;
  if (ctx.periodic && !have_n && !have_range) {
    j["periodic"] = true;
    j["value"] = fraction_string(Rational(1, m));
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  if (!have_n && !have_range) {
    std::cerr << "freq-set: aperiodic pair needs -N or --from/--to\n";
    return kExitUsage;
  }
  auto one = [&ctx](long long n) {
    const FrequencyRow row = frequency_set(ctx, n);
    ordered_json r;
    r["N"] = n;
    r["row"] = row.row;
    r["values"] = values_json(row.values);
    return r;
  };
  if (have_n) {
    const ordered_json r = one(N);
    for (const auto& [key, val] : r.items()) j[key] = val;
  } else {
    ordered_json sets = ordered_json::array();
    for (long long n = from; n <= to; ++n) sets.push_back(one(n));
    j["sets"] = sets;
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int cmd_verify(int b, int m, long long max_n, long long prefix_len, int threads,
               bool perturb) {
  const ClosedFormContext cf = closed_form_context(b, m);
  const Morphism phi = gtm_morphism(b, m);
  const Rational tol(1, 1000);

  std::optional<FridContext> frid;
  if (!cf.periodic) frid.emplace(phi, 0, static_cast<int>(max_n) + 2);

  long long checked = 0;
  for (long long N = 0; N <= max_n; ++N) {
    FrequencyRow row = frequency_set(cf, N);
    if (perturb && N == max_n / 2) {
      row.values.insert(*row.values.begin() + Rational(1, 7));
      std::cerr << "perturb: tampered closed-form set at N=" << N << "\n";
    }

    if (frid) {
      const auto multiset = frid->frequency_multiset(static_cast<int>(N));
      std::set<Rational> frid_values;
      Rational total = 0;
      for (const auto& [v, c] : multiset) {
        frid_values.insert(v);
        total += v * Rational(c);
      }
      if (total != Rational(1)) {
        std::cout << "MISMATCH N=" << N << ": Frid multiset sums to "
                  << fraction_string(total) << ", not 1\n";
        return kExitMismatch;
      }
      if (frid_values != row.values) {
        std::cout << "MISMATCH N=" << N << ": Frid distinct values differ from closed-form row "
                  << row.row << "\n";
        return kExitMismatch;
      }
    }

    const int len = static_cast<int>(N) + 1;
    if (len <= prefix_len) {
      const EstimateReport rep = estimate(phi, 0, len, prefix_len, nullptr, threads);
      for (const auto& [w, est] : rep.estimates) {
        const Rational exact = frid ? frid->frequency(w) : Rational(1, m);
        if (abs_value(est - exact) > tol) {
          std::cout << "MISMATCH N=" << N << ": empirical estimate for " << w.str()
                    << " is " << fraction_string(est) << ", exact "
                    << fraction_string(exact) << "\n";
          return kExitMismatch;
        }
        if (frid && !row.values.count(exact)) {
          std::cout << "MISMATCH N=" << N << ": exact frequency of observed factor "
                    << w.str() << " missing from closed-form set\n";
          return kExitMismatch;
        }
      }
    }
    ++checked;
  }
  std::cout << "verified t_{" << b << "," << m << "}: " << checked
            << " lengths, exact routes agree, empirical within "
            << fraction_string(tol) << "\n";
  return kExitOk;
}

int cmd_rauzy(int b, int m, int n, bool reduced, bool dot) {
  const ClosedFormContext cf = closed_form_context(b, m);
  const Morphism phi = gtm_morphism(b, m);
  if (cf.periodic) {
    if (reduced) {
      std::cerr << "rauzy: t_{" << b << "," << m
                << "} is periodic; it has no special factors to reduce to\n";
      return kExitMismatch;
    }
    const LanguageIndex idx = build_index(phi, 0, n + 2);
    const RauzyGraph g = rauzy(idx, constant_source(Rational(1, m)), n);
    std::cout << (dot ? export_dot(g) : export_json(g));
    return kExitOk;
  }
  const FridContext frid(phi, 0, n + 2);
  const RauzyGraph g = rauzy(frid.index(), frid_source(frid), n);
  if (!reduced) {
    std::cout << (dot ? export_dot(g) : export_json(g));
    return kExitOk;
  }
  const ReducedRauzyGraph r = reduce(g, frid.index());
  std::cout << (dot ? export_dot(r) : export_json(r));
  return kExitOk;
}

int cmd_bound(int b, int m, int n) {
  const ClosedFormContext cf = closed_form_context(b, m);
  if (cf.periodic) {
    std::cerr << "bound: t_{" << b << "," << m << "} is periodic; the bound needs q >= 2\n";
    return kExitUsage;
  }
  const Morphism phi = gtm_morphism(b, m);
  const FridContext frid(phi, 0, n + 2);
  const auto group = dihedral_group(m);
  const UpperBoundReport rep =
      upper_bound_report(frid.index(), frid_source(frid), group, n);
  ordered_json j = base_json();
  j["b"] = b;
  j["m"] = m;
  j["n"] = rep.n;
  j["gap"] = rep.complexity_gap;
  j["groupSize"] = rep.group_size;
  j["X"] = rep.bs_count;
  j["Y"] = rep.palindromic_bs_count;
  j["bound"] = fraction_string(rep.bound);
  j["observed"] = rep.observed;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factor frequencies of generalized Thue-Morse words"};
  app.require_subcommand(1);

  int b = 2, m = 2;
  auto add_bm = [&](CLI::App* sub) {
    sub->add_option("-b", b, "block length of the morphism")->required()->check(CLI::Range(2, 32));
    sub->add_option("-m", m, "alphabet size")->required()->check(CLI::Range(1, 32));
  };

  auto* fs = app.add_subcommand("freq-set", "Closed-form frequency set for factor length N+1");
  add_bm(fs);
  long long N = 0, from = 0, to = 0;
  auto* n_opt = fs->add_option("-N", N, "factor-length parameter");
  auto* from_opt = fs->add_option("--from", from, "range start");
  auto* to_opt = fs->add_option("--to", to, "range end");

  auto* vf = app.add_subcommand("verify", "Three-way check: closed form vs Frid vs empirical");
  add_bm(vf);
  long long max_n = 64, prefix_len = 1LL << 20;
  int threads = 1;
  bool perturb = false;
  vf->add_option("--max-n", max_n, "largest N checked");
  vf->add_option("--prefix", prefix_len, "empirical prefix length");
  vf->add_option("--threads", threads, "window-counting threads")->check(CLI::Range(1, 256));
  vf->add_flag("--perturb", perturb, "inject a fault to exercise the mismatch path");

  auto* rz = app.add_subcommand("rauzy", "Rauzy graph of a given order, DOT or JSON");
  add_bm(rz);
  int order = 1;
  rz->add_option("-n", order, "graph order")->required()->check(CLI::Range(1, 64));
  bool reduced = false, dot = false, json = false;
  rz->add_flag("--reduced", reduced, "contract non-special vertices");
  auto* dot_flag = rz->add_flag("--dot", dot, "emit DOT");
  rz->add_flag("--json", json, "emit JSON (default)")->excludes(dot_flag);

  auto* bd = app.add_subcommand("bound", "Distinct-frequency upper bound report");
  add_bm(bd);
  int bound_n = 1;
  bd->add_option("-n", bound_n, "factor length")->required()->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fs->parsed())
      return cmd_freq_set(b, m, N, n_opt->count() > 0, from, to,
                          from_opt->count() > 0 && to_opt->count() > 0);
    if (vf->parsed()) return cmd_verify(b, m, max_n, prefix_len, threads, perturb);
    if (rz->parsed()) return cmd_rauzy(b, m, order, reduced, dot);
    if (bd->parsed()) return cmd_bound(b, m, bound_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
