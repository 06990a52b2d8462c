#pragma once

// One Report per subcommand. Every claim compares an expected value fixed here
// against a value recomputed from the library; nothing is copied across.

#include "hessloci/bott.hpp"
#include "hessloci/chern.hpp"
#include "hessloci/cli/report.hpp"
#include "hessloci/hessian.hpp"
#include "hessloci/hilbert.hpp"
#include "hessloci/strata.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hessloci::cli {

struct Options {
  std::optional<std::uint32_t> prime;
  std::uint64_t seed = 1;
  std::optional<int> n;
  std::optional<std::string> cubic;
  std::string target = "klein-surface";
  bool slow = false;
  bool corrupt = false;  // identities: perturb one Hessian entry before checking
  int instances = 1000;
};

namespace detail {

inline std::mt19937_64 seeded(std::uint64_t seed, std::uint32_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), salt};
  return std::mt19937_64(seq);
}

inline std::vector<std::uint32_t> random_vector(std::mt19937_64& rng, int n, std::uint32_t p) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(n));
  for (auto& c : v) c = static_cast<std::uint32_t>(rng() % p);
  return v;
}

inline CubicForm<PrimeField> random_cubic(std::mt19937_64& rng, int n, const PrimeField& F) {
  for (;;) {
    Polynomial<PrimeField> f(F, n + 1);
    for (const auto& m : monomials_of_degree(n + 1, 3)) f.add_term(m, static_cast<std::uint32_t>(rng() % F.modulus()));
    if (!f.is_zero()) return CubicForm<PrimeField>(std::move(f));
  }
}

/// H with x0 added to the (0,1) and (1,0) entries; still symmetric, no longer a Hessian.
inline HessianData<PrimeField> corrupted(HessianData<PrimeField> hd) {
  const int N = hd.matrix.size();
  auto e = hd.matrix.entries();
  auto x0 = Polynomial<PrimeField>::variable(hd.matrix.field(), hd.matrix.nvars(), 0);
  e[1] += x0;
  e[static_cast<std::size_t>(N)] += x0;
  hd.matrix = PolyMatrix<PrimeField>(N, std::move(e), true);
  return hd;
}

inline json point_list(const std::vector<ProjPoint>& pts, std::size_t cap = 16) {
  json a = json::array();
  for (std::size_t i = 0; i < pts.size() && i < cap; ++i) a.push_back(pts[i].to_string());
  return a;
}

inline json window_json(const HilbertWindow& w) {
  json v = json::array();
  for (auto x : w.values) v.push_back(x);
  return json{{"prime", w.prime}, {"d0", w.d0}, {"d1", w.d1}, {"values", v}};
}

inline json poly_json(const HilbertPolynomial& hp) {
  json c = json::array();
  for (const auto& r : hp.coeffs) c.push_back(exact(r));
  return json{{"text", hp.to_string()}, {"coeffs", c}};
}

}  // namespace detail

/// Euler identity on f and h_f, and the three Hessian identities, on random
/// (f, v, w) over two primes and n = 2..5 (or the single --n).
inline Report cmd_identities(const Options& o) {
  Report r("identities");
  const std::uint32_t P = o.prime.value_or(32003);
  const std::uint32_t Q = P == 65537 ? 32003 : 65537;
  std::vector<int> ns = o.n ? std::vector<int>{*o.n} : std::vector<int>{2, 3, 4, 5};
  r.inputs() = json{{"primes", {P, Q}}, {"seed", o.seed}, {"n", ns}, {"instances", o.instances}, {"corrupt", o.corrupt}};

  auto rng = detail::seeded(o.seed, 0x1d);
  const PrimeField FP(P), FQ(Q);
  int euler_f = 0, euler_h = 0, a = 0, b = 0, c = 0;
  for (int i = 0; i < o.instances; ++i) {
    const int n = ns[static_cast<std::size_t>(i) % ns.size()];
    const PrimeField& F = (static_cast<std::size_t>(i) / ns.size()) % 2 ? FQ : FP;
    auto f = detail::random_cubic(rng, n, F);
    auto hd = hessian_data(f);
    auto v = detail::random_vector(rng, n + 1, F.modulus());
    auto w = detail::random_vector(rng, n + 1, F.modulus());
    std::span<const std::uint32_t> vs(v), ws(w);
    euler_f += euler_identity_check(f.poly(), vs);
    euler_h += euler_identity_check(hd.hess, vs);
    auto m = check_magic_identities(f, o.corrupt ? detail::corrupted(hd) : hd, vs, ws);
    a += m.a;
    b += m.b;
    c += m.c;
  }
  const int N = o.instances;
  r.expect("euler.f", "v^3(f) = 3! f(v)", N, euler_f);
  r.expect("euler.hess", "v^(n+1)(h_f) = (n+1)! h_f(v)", N, euler_h);
  r.expect("hessian.a", "H_f(v) w = grad(vw(f)) = H_f(w) v", N, a);
  r.expect("hessian.b", "H_f(v) v = 2 grad f(v)", N, b);
  r.expect("hessian.c", "w^T H_f(v) w = 2 v(f)(w)", N, c);
  return r;
}

/// Rank census, pointwise singularity test for h_f, and the correspondence
/// Gamma_f = {H_f(x) y = 0} with its triangles.
inline Report cmd_strata(const Options& o) {
  Report r("strata");
  std::optional<CubicName> name;
  if (o.cubic) name = cubic_name_from_string(*o.cubic);
  int n = o.n.value_or(3);
  if (name == CubicName::klein6) n = 5;
  if (name == CubicName::cuspidal3) n = 2;
  const std::uint32_t p = o.prime.value_or(name == CubicName::klein6 ? 11 : 31);
  check_budget(n + 1, p, kEnumerationBudget);  // before the smoothness search, which is itself costly for large n
  auto f = name ? named_cubic(PrimeField(p), *name, n) : random_smooth_cubic(n, p, o.seed);
  r.inputs() = json{{"cubic", name ? to_string(*name) : "random"}, {"n", n}, {"prime", p}};
  if (!name) r.inputs()["seed"] = o.seed;
  r.inputs()["f"] = f.poly().to_string();

  HessianEvaluator ev(f);
  auto census = stratify(ev);
  auto cert = verify_theorem_A(ev);
  json counts = json::array();
  for (auto x : census.counts) counts.push_back(x);
  json lowest = json::array();
  for (const auto& l : census.lowest)
    lowest.push_back(json{{"rank", l.rank}, {"count", census.counts[static_cast<std::size_t>(l.rank)]},
                          {"points", detail::point_list(l.points)}});
  json ce = json::array();
  for (std::size_t i = 0; i < cert.counterexamples.size() && i < 16; ++i) {
    const auto& c = cert.counterexamples[i];
    ce.push_back(json{{"point", c.point.to_string()}, {"rank", c.rank}, {"gradient_vanishes", c.gradient_vanishes}});
  }
  r.facts() = json{{"rank_counts", counts},
                   {"lowest_ranks", lowest},
                   {"hessian_points", cert.hypersurface_points},
                   {"singular_points", cert.singular_points},
                   {"rank_at_most_n_minus_1", cert.low_rank_points},
                   {"counterexamples", ce},
                   {"counterexample_count", cert.counterexample_count},
                   {"caveat", cert.caveat}};

  if (name == CubicName::cuspidal3) {
    auto target = poly_parse(f.field(), "x0^2*x1", 3);
    auto s = proportionality_scalar(ev.data().hess, target);
    r.expect_proportional("cusp.hessian", "h_f = c * x0^2 x1", s ? json(*s) : json());
    std::vector<std::string> d1;
    for (const auto& x : rank_locus_points(ev, 1)) d1.push_back(x.to_string());
    r.expect_set("cusp.D1", "D_1(f) = {(0:0:1), (0:1:0)}", json{"(0:0:1)", "(0:1:0)"}, d1);
    bool strict = cert.counterexample_count > 0;
    for (const auto& c : cert.counterexamples) strict = strict && c.gradient_vanishes && c.rank > n - 1;
    r.expect("cusp.strict", "D_1(f) is a proper subset of Sing(H_f)", true, strict);
  } else if (name == CubicName::klein6) {
    r.expect("klein.D3", "D_3(f) has rational points", true, census.at_most(3) > 0);
  } else {
    r.expect("theoremA", "grad h_f(x) = 0 <=> rank H_f(x) <= n-1 on H_f(F_p)", 0,
             static_cast<std::int64_t>(cert.counterexample_count));
  }

  if (n <= 3 || o.slow) {
    auto pairs = gamma_pairs(ev);
    auto singular = gamma_singular_pairs(ev, pairs);
    auto tris = find_triangles(ev);
    std::set<std::string> from_tris, sing;
    for (const auto& t : tris)
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) from_tris.insert(t.v[i].to_string() + "|" + t.v[j].to_string());
    for (const auto& g : singular) sing.insert(g.x().to_string() + "|" + g.y().to_string());
    r.facts()["gamma_pairs"] = pairs.size();
    r.facts()["gamma_singular_pairs"] = singular.size();
    r.facts()["triangles"] = tris.size();
    r.expect_set("gamma.triangles", "singular points of Gamma_f = ordered edges of triangles", json(from_tris), json(sing));
  }
  return r;
}

/// Hilbert windows of rank-locus ideals and the invariants read off the fitted polynomial.
inline Report cmd_hilbert(const Options& o) {
  Report r("hilbert");
  const std::uint32_t p = o.prime.value_or(32003);
  r.inputs() = json{{"target", o.target}, {"prime", p}};
  if (o.target == "klein-surface") {
    auto f = named_cubic(PrimeField(p), CubicName::klein6, 5);
    auto I = rank_locus_ideal(hessian_data(f), 4);
    const int d1 = o.slow ? 11 : 8;
    const int fit_from = o.slow ? 6 : 2;
    auto w = hf_window(I, 0, d1);
    HilbertWindow tail{w.prime, fit_from, d1, {w.values.begin() + fit_from, w.values.end()}};
    auto fit = fit_hilbert_polynomial(tail, 2);
    auto inv = extract_invariants(fit.poly);
    r.facts() = json{{"window", detail::window_json(w)}, {"fit", detail::poly_json(fit.poly)}, {"fit_window", {fit_from, d1}}};
    std::vector<std::uint64_t> prefix(w.values.begin(), w.values.begin() + 6);
    r.expect("klein.prefix", "HF(d), d = 0..5", std::vector<std::uint64_t>{1, 6, 21, 56, 126, 231}, prefix);
    r.expect("klein.quintics", "dim I_5 = C(10,5) - HF(5)", 21, monomial_count(6, 5) - w.at(5));
    r.expect("klein.series", "HF = (1+3t+6t^2+10t^3+15t^4)/(1-t)^3 on the window", true,
             series_match(w, HilbertSeriesRat{{1, 3, 6, 10, 15}, 3}));
    r.expect("klein.fit", "HP(d) = (35/2)d^2 - (105/2)d + 56", "(35/2)*d^2 - (105/2)*d + 56", fit.poly.to_string());
    r.expect("klein.degree", "deg Y = 35", 35, exact(inv.degree));
    r.expect("klein.chi", "chi(O_Y) = 56", 56, exact(inv.chi));
  } else if (o.target == "adler-curve") {
    auto f = random_smooth_cubic(4, p, o.seed);
    r.inputs()["seed"] = o.seed;
    auto w = hf_window(rank_locus_ideal(hessian_data(f), 3), 8, 15);
    auto fit = fit_hilbert_polynomial(w, 2);
    auto inv = extract_invariants(fit.poly);
    r.facts() = json{{"window", detail::window_json(w)}, {"fit", detail::poly_json(fit.poly)}};
    r.expect("adler.fit", "HP(d) = 20d - 25", "(20)*d - 25", fit.poly.to_string());
    r.expect("adler.degree", "deg C = 20", 20, exact(inv.degree));
    r.expect("adler.genus", "g(C) = 1 - chi = 26", 26, exact(BigInt(1 - inv.chi)));
  } else if (o.target == "cubic-surface-points") {
    auto f = random_smooth_cubic(3, p, o.seed);
    r.inputs()["seed"] = o.seed;
    auto w = hf_window(rank_locus_ideal(hessian_data(f), 2), 8, 12);
    r.facts() = json{{"window", detail::window_json(w)}};
    r.expect("surface.points", "HF(d) = 10 for d = 8..12", std::vector<std::uint64_t>(5, 10), w.values);
  } else {
    throw std::invalid_argument("hilbert: unknown target '" + o.target +
                                "' (expected klein-surface, adler-curve or cubic-surface-points)");
  }
  return r;
}

/// Closed-form intersection numbers.
inline Report cmd_chern(const Options&) {
  Report r("chern");
  for (auto [n, k, d] : std::vector<std::array<int, 3>>{{3, 2, 10}, {4, 3, 20}, {5, 4, 35}})
    r.expect("degree_Q." + std::to_string(n) + std::to_string(k), "deg Q_" + std::to_string(k) + " in P(S^2 K^" +
             std::to_string(n + 1) + ")", d, exact(degree_Qk(n, k)));
  r.expect("codim.5_4", "codim Q_4 = C(3,2)", 3, expected_codim(5, 4));
  r.expect("canonical.5_4", "2K_Y = 6H", 6, canonical_double(5, 4));
  for (int s = 1; s <= 3; ++s) {
    auto c = smallest_locus_curve(s);
    r.facts()["smallest_locus_curve"].push_back(json{{"s", s}, {"n", c.n}, {"k", c.k}, {"degree", exact(c.degree)},
                                                     {"two_K", exact(c.two_k_coeff)}, {"genus", exact(c.genus)}});
  }
  r.expect("curve.s2", "s = 2: (n,k) = (4,3), degree 20, genus 26", json{4, 3, 20, 26},
           [] {
             auto c = smallest_locus_curve(2);
             return json{c.n, c.k, exact(c.degree), exact(c.genus)};
           }());
  r.expect("curve.s1", "s = 1: plane cubic, genus 1", json{2, 2, 3, 1}, [] {
    auto c = smallest_locus_curve(1);
    return json{c.n, c.k, exact(c.degree), exact(c.genus)};
  }());
  struct Row {
    int a, b, power;
    Rational v;
  };
  for (const auto& q : std::vector<Row>{{2, 1, 3, 35}, {3, 1, 4, 105}, {4, 1, 5, Rational(777, 4)}, {3, 2, 5, Rational(483, 4)}}) {
    auto got = q_schur_tworow(q.a, q.b, 5);
    r.expect("Q." + std::to_string(q.a) + std::to_string(q.b), "Q_{" + std::to_string(q.a) + "," + std::to_string(q.b) + "}",
             IntersectionClass::monomial(5, q.power, q.v).to_string(), got.to_string());
  }
  r.expect("euler", "e(Y) = deg c_2(Y) = 357", exact(Rational(357)), exact(pratt_euler()),
           "coefficients ((1,0)), ((2,0)), ((3,0)), ((2,1)) = 1, 3, 7, 3 are inputs");
  r.expect("euler.tabulated", "same sum from tabulated Q values", exact(Rational(357)), exact(pratt_euler(QSource::tabulated)));
  auto s = surface_invariants();
  r.expect("noether", "chi = (e + K^2)/12 = (357 + 315)/12", 56, exact(s.chi));
  r.expect("invariants", "(q, p_g, h^{1,1}) = (0, 55, 245)", json{0, 55, 245}, json{exact(s.q), exact(s.pg), exact(s.h11)},
           "q = 0 is an input");
  r.expect("chi_twist", "chi(O_Y(m)) = (35/2)m^2 - (105/2)m + 56", "(35/2)*d^2 - (105/2)*d + 56", s.chi_twist.to_string());
  r.expect("chi_twist.5", "chi(O_Y(5)) = 231", exact(Rational(231)), exact(s.chi_twist(Rational(5))));
  r.expect("eta", "p_g = 55 < 56 = h^0(O_Y(3))", true, eta_certificate(s.pg, 56),
           "h^0(O_Y(3)) = 56 is HF(3) of the Klein ideal; computed by the hilbert command, taken as input here");
  return r;
}

/// Bott table, Koszul certificates, isotropic profile, projective normality.
inline Report cmd_bott(const Options&) {
  Report r("bott");
  json expected = json::array(), computed = json::array();
  for (auto [i, j] : std::set<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}, {4, 7}, {6, 9}})
    expected.push_back(json{i, j});
  for (auto [i, j] : vanishing_table()) computed.push_back(json{i, j});
  r.expect_set("table", "(i,j) with H^i(wedge^j Sym^2 S) != 0 on Gr(4,6)", expected, computed);
  bool books = true;
  for (int j = 1; j <= 10; ++j) {
    BigInt total = 0;
    json summands = json::array();
    for (const auto& l : wedge_sym2_decompose(j, 4)) {
      total += schur_dimension(l, 4);
      summands.push_back(l.to_string());
    }
    books = books && total == BigInt(binomial(10, j));
    r.facts()["plethysm"][std::to_string(j)] = summands;
  }
  r.expect("rank", "sum dim S_lambda(C^4) = C(10,j), j = 1..10", true, books);
  for (auto [k, d] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {0, 1}, {0, 2}})
    r.expect("koszul." + std::to_string(k) + std::to_string(d),
             "H^" + std::to_string(k) + "(I_Z(" + std::to_string(d) + ")) = 0 certified", true, koszul_certificate(k, d));
  auto p = double_cover_profile(6, 4);
  r.expect("profile", "(h, families, family_dim, edim Z) for rank 4 on rank 6", json{2, 2, 1, 3},
           json{p.h, p.families, exact(p.family_dim), p.edim_Z});
  r.expect("normality", "chi series minus h^2 corrections = coordinate ring series through t^30", true,
           proj_normality_series_check());
  return r;
}

}  // namespace hessloci::cli
