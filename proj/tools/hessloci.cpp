// hessloci: reproduce the Hessian-loci claims as exact certificates.
// Exit status: 0 when every claim passes, 1 when some claim fails, 2 on usage or
// runtime errors (budget exceeded, fit inconsistency, bad arguments).

#include "hessloci/cli/commands.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace hessloci;
using namespace hessloci::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for Hessian loci of cubic hypersurfaces"};
  app.require_subcommand(1);

  Options opt;
  std::uint32_t prime = 0;
  int n = 0;
  std::string cubic, json_path;
  bool timing = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prime", prime, "prime field characteristic")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "seed for random cubics and vectors");
    sub->add_option("--json", json_path, "write the report document to this path ('-' for stdout)");
    sub->add_flag("--slow", opt.slow, "include the long-running windows and enumerations");
    sub->add_flag("--timing", timing, "record wall-clock runtime in the report");
  };

  auto* ident = app.add_subcommand("identities", "Euler and Hessian identities on random instances");
  common(ident);
  ident->add_option("--n", n, "restrict to one n (default: 2,3,4,5)")->check(CLI::Range(1, 7));
  ident->add_option("--instances", opt.instances, "number of random instances")->check(CLI::PositiveNumber);
  ident->add_flag("--corrupt", opt.corrupt, "self-test: perturb one Hessian entry, claims must fail");

  auto* strata = app.add_subcommand("strata", "rank census, singular points of h_f, triangles");
  common(strata);
  strata->add_option("--n", n, "dimension of the projective space for random or Fermat cubics")->check(CLI::Range(1, 7));
  strata->add_option("--cubic", cubic, "named cubic: fermat, klein6, cuspidal3")
      ->check(CLI::IsMember({"fermat", "klein6", "cuspidal3"}));

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert windows and fitted polynomials of rank loci");
  common(hilbert);
  hilbert->add_option("--target", opt.target, "klein-surface, adler-curve, cubic-surface-points")
      ->check(CLI::IsMember({"klein-surface", "adler-curve", "cubic-surface-points"}));

  auto* chern = app.add_subcommand("chern", "closed-form intersection numbers");
  common(chern);
  auto* bott = app.add_subcommand("bott", "Bott vanishing table and Koszul certificates");
  common(bott);

  CLI11_PARSE(app, argc, argv);
  if (prime) opt.prime = prime;
  if (n) opt.n = n;
  if (!cubic.empty()) opt.cubic = cubic;

  try {
    auto t0 = std::chrono::steady_clock::now();
    auto* sub = app.get_subcommands().front();
    Report r = sub == ident     ? cmd_identities(opt)
               : sub == strata  ? cmd_strata(opt)
               : sub == hilbert ? cmd_hilbert(opt)
               : sub == chern   ? cmd_chern(opt)
                                : cmd_bott(opt);
    if (timing)
      r.set_runtime_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    if (json_path == "-") {
      std::cout << r.to_json().dump(2) << "\n";
    } else {
      std::cout << r.summary();
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot open " + json_path);
        out << r.to_json().dump(2) << "\n";
      }
    }
    return r.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "hessloci: " << e.what() << "\n";
    return 2;
  }
}
