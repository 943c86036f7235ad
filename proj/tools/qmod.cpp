// qmod: command-line front end. Every subcommand prints a report
// {"check", "seed", "prime", "pass", "data"}; exit status 0 = pass,
// 1 = verification failure, 2 = usage error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qmod/bn_invariants.hpp"
#include "qmod/pic_calculus.hpp"
#include "qmod/pic_json.hpp"
#include "qmod/quadric_json.hpp"
#include "qmod/quadric_lab.hpp"
#include "qmod/surface_lab.hpp"
#include "qmod/verify.hpp"

namespace {

using nlohmann::json;
using qmod::verify::RunContext;
using qmod::verify::report;

struct Globals {
  std::uint64_t prime = qmod::kDefaultPrime;
  std::uint64_t seed = 0;
  std::string format = "json";
  int repetitions = 1;
  bool dump = false;
};

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << "  " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void print(const json& j, const std::string& format) {
  if (format == "table") flatten(j, "", std::cout);
  else std::cout << j.dump(2) << "\n";
}

bool all_pass(const json& j) {
  if (j.is_array()) {
    for (const auto& e : j)
      if (!e.at("pass").get<bool>()) return false;
    return true;
  }
  return j.at("pass").get<bool>();
}

std::string frac(const qmod::Rational& q) { return qmod::to_fraction_string(q); }


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and modular checks for quadrics through curves, Brill-Noether counts and divisor classes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--prime", g.prime, "working prime (Miller-Rabin checked)")->envname("QMOD_PRIME");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--repetitions", g.repetitions, "run seeded commands for seed, seed+1, ...")
      ->check(CLI::PositiveNumber);
  app.add_flag("--dump", g.dump, "include matrices in the output");

  // Each subcommand registers a runner producing one report for a context.
  std::function<json(const RunContext&)> runner;
  bool seeded = false;
  const auto add = [&](const std::string& name, const std::string& help, bool uses_seed) {
    auto* sub = app.add_subcommand(name, help);
    sub->parse_complete_callback([&seeded, uses_seed] { seeded = uses_seed; });
    return sub;
  };

  std::int64_t gg = 0, r = 0, d = 0, k = 0, n = 0, e = 0, g_max = 40;
  std::vector<std::int64_t> ramification;

  auto* expected_dim = add("expected-dim", "expected dimension q(g,r,d,k) of rank-<=k quadrics", false);
  expected_dim->add_option("--g", gg)->required();
  expected_dim->add_option("--r", r)->required();
  expected_dim->add_option("--d", d)->required();
  expected_dim->add_option("--k", k)->required();
  expected_dim->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      return report("expected-dim", ctx, true,
                    {{"g", gg}, {"r", r}, {"d", d}, {"k", k}, {"value", qmod::bn::expected_dim_q(gg, r, d, k)}});
    };
  });

  auto* rho = add("rho", "Brill-Noether number", false);
  rho->add_option("--g", gg)->required();
  rho->add_option("--r", r)->required();
  rho->add_option("--d", d)->required();
  rho->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      return report("rho", ctx, true, {{"g", gg}, {"r", r}, {"d", d}, {"value", qmod::bn::brill_noether_rho(gg, r, d)}});
    };
  });

  auto* arho = add("adjusted-rho", "Brill-Noether number with ramification at one point", false);
  arho->add_option("--g", gg)->required();
  arho->add_option("--r", r)->required();
  arho->add_option("--d", d)->required();
  arho->add_option("--ramification", ramification, "comma-separated, length r+1")->delimiter(',')->required();
  arho->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const qmod::bn::RamificationSequence seq(ramification);
      return report("adjusted-rho", ctx, true,
                    {{"g", gg}, {"r", r}, {"d", d}, {"ramification", ramification},
                     {"value", qmod::bn::adjusted_rho(gg, r, d, seq)}});
    };
  });

  auto* ht = add("harris-tu", "degree A^k_e of the rank-<=k symmetric locus", false);
  ht->add_option("--e", e)->required();
  ht->add_option("--k", k)->required();
  ht->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      return report("harris-tu", ctx, true, {{"e", e}, {"k", k}, {"value", qmod::bn::harris_tu_degree(e, k).str()}});
    };
  });

  auto* cases = add("enumerate-cases", "(g, n, k) with q(g, g-n-1, 2g-2-n, k) = -1", false);
  cases->add_option("--g-max", g_max);
  cases->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      json list = json::array();
      for (const auto& c : qmod::bn::enumerate_quad_cases(g_max)) list.push_back({c.g, c.n, c.k});
      return report("enumerate-cases", ctx, true, {{"g_max", g_max}, {"cases", std::move(list)}});
    };
  });

  auto* qc = add("quad-class", "class of the rank-<=k quadric divisor on M_{g,n}", false);
  qc->add_option("--g", gg)->required();
  qc->add_option("--n", n)->required();
  qc->add_option("--k", k)->required();
  qc->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto c = qmod::pic::quad_class(static_cast<int>(gg), static_cast<int>(n), static_cast<int>(k));
      return report("quad-class", ctx, true,
                    {{"alpha", qmod::bn::harris_tu_degree(gg - n, k).str()},
                     {"a", frac(qmod::Rational(7 * gg - 9 * n + 6, gg - n))},
                     {"c", frac(qmod::Rational(gg + n - 6, gg - n))},
                     {"class", qmod::pic::to_json(c)}});
    };
  });

  std::int64_t dp_g = 15, dp_n = 8;
  auto* dp = add("dp-class", "virtual degenerate-pencil class", false);
  dp->add_option("--g", dp_g);
  dp->add_option("--n", dp_n);
  dp->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto c = qmod::pic::fr_dp_class(qmod::pic::chern_pair(static_cast<int>(dp_g), static_cast<int>(dp_n)));
      return report("dp-class", ctx, true, {{"class", qmod::pic::to_json(c)}});
    };
  });

  auto* zc = add("z-class", "averaged pullback of the degenerate-pencil divisor to M_{15,9}", false);
  zc->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      return report("z-class", ctx, true, {{"class", qmod::pic::to_json(qmod::pic::z_class_15_9())}});
    };
  });

  std::int64_t kc_g = 15, kc_n = 9;
  auto* kc = add("canonical-class", "canonical class of M_{g,n}-bar", false);
  kc->add_option("--g", kc_g);
  kc->add_option("--n", kc_n);
  kc->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto c = qmod::pic::canonical_class(static_cast<int>(kc_g), static_cast<int>(kc_n));
      return report("canonical-class", ctx, true, {{"class", qmod::pic::to_json(c)}});
    };
  });

  std::string cx = "25/297", cy = "2/297", cz = "13/66";
  bool solve = false;
  auto* cert = add("certificate", "K = x sum psi + y Z + z BN + E on M_{15,9}", false);
  cert->add_option("--x", cx);
  cert->add_option("--y", cy);
  cert->add_option("--z", cz);
  cert->add_flag("--solve", solve, "solve for x and y given z");
  cert->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto z = qmod::parse_fraction(cz);
      auto x = qmod::parse_fraction(cx);
      auto y = qmod::parse_fraction(cy);
      if (solve) std::tie(x, y) = qmod::pic::solve_certificate_multipliers(z);
      const auto rep = qmod::pic::general_type_certificate(x, y, z);
      return report("certificate", ctx, rep.pass, qmod::verify::certificate_json(rep));
    };
  });

  std::int64_t curve_r = 6;
  std::string over = "fp";
  auto* i2 = add("rnc-i2", "quadrics through the rational normal curve of P^r", false);
  i2->add_option("--r", curve_r);
  i2->add_option("--field", over)->check(CLI::IsMember({"fp", "q"}));
  i2->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto rr = static_cast<std::size_t>(curve_r);
      json data{{"r", curve_r}, {"field", over}, {"expected", rr * (rr - 1) / 2}};
      std::size_t dim = 0;
      if (over == "q") {
        const qmod::RationalField q;
        const auto sys = qmod::quad::i2_basis(qmod::quad::ParamCurve<qmod::RationalField>::rational_normal(q, rr));
        dim = sys.dimension();
        if (ctx.dump) data["i2"] = qmod::quad::system_json(sys);
      } else {
        const auto sys = qmod::quad::i2_basis(qmod::quad::ParamCurve<qmod::PrimeField>::rational_normal(ctx.field, rr));
        dim = sys.dimension();
        if (ctx.dump) data["i2"] = qmod::quad::system_json(sys);
      }
      data["dimension"] = dim;
      return report("rnc-i2", ctx, dim == rr * (rr - 1) / 2, std::move(data));
    };
  });

  std::optional<int> x_opt;
  auto* r3 = add("rank3-family", "dimension of rank-3 quadric families on the rational normal curve", true);
  r3->add_option("--r", curve_r);
  r3->add_option("--x", x_opt, "degree of the fixed part (default: every stratum)");
  r3->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const int rr = static_cast<int>(curve_r);
      std::vector<qmod::quad::Stratum> list;
      if (x_opt) list.push_back(qmod::quad::rank3_stratum(rr, *x_opt));
      else list = qmod::quad::strata(rr, 3);
      json strata = json::array();
      bool ok = true;
      for (const auto& s : list) {
        const int dim = qmod::quad::family_dimension(ctx.field, rr, 3, s, ctx.seed);
        ok = ok && dim == rr - 2;
        strata.push_back({{"m", s.m}, {"x", s.x}, {"dimension", dim}});
      }
      return report("rank3-family", ctx, ok,
                    {{"r", rr}, {"expected", qmod::bn::expected_dim_q(0, rr, rr, 3)}, {"strata", std::move(strata)}});
    };
  });

  std::optional<int> m_opt, mp_opt;
  auto* r4 = add("rank4-family", "dimension of rank-4 quadric families on the rational normal curve", true);
  r4->add_option("--r", curve_r);
  r4->add_option("--m", m_opt);
  r4->add_option("--m-prime", mp_opt);
  r4->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const int rr = static_cast<int>(curve_r);
      if (m_opt.has_value() != mp_opt.has_value()) throw qmod::DomainError("give both --m and --m-prime or neither");
      std::vector<qmod::quad::Stratum> list;
      if (m_opt) list.push_back(qmod::quad::rank4_stratum(rr, *m_opt, *mp_opt));
      else list = qmod::quad::strata(rr, 4);
      const auto expected = qmod::bn::expected_dim_q(0, rr, rr, 4);
      json strata = json::array();
      int best = -1;
      for (const auto& s : list) {
        const int dim = qmod::quad::family_dimension(ctx.field, rr, 4, s, ctx.seed);
        best = std::max(best, dim);
        strata.push_back({{"m", s.m}, {"m_prime", s.m_prime}, {"x", s.x}, {"dimension", dim}});
      }
      const bool ok = m_opt ? best <= expected : best == expected;
      return report("rank4-family", ctx, ok,
                    {{"r", rr}, {"expected", expected}, {"best", best}, {"strata", std::move(strata)}});
    };
  });

  int chords = 100;
  auto* sec = add("secant", "codimension of the chord condition on I_2 of the rational normal curve", true);
  sec->add_option("--r", curve_r);
  sec->add_option("--chords", chords)->check(CLI::PositiveNumber);
  sec->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto c = qmod::quad::ParamCurve<qmod::PrimeField>::rational_normal(ctx.field, static_cast<std::size_t>(curve_r));
      const auto sys = qmod::quad::i2_basis(c);
      auto rng = qmod::make_rng(ctx.seed, 0x5ec);
      std::map<std::size_t, int> hist;
      for (int t = 0; t < chords; ++t) {
        const auto t1 = ctx.field.random(rng);
        auto t2 = ctx.field.random(rng);
        while (t2 == t1) t2 = ctx.field.random(rng);
        ++hist[qmod::quad::secant_condition(c, sys, t1, t2)];
      }
      json h = json::object();
      for (const auto& [codim, count] : hist) h[std::to_string(codim)] = count;
      const bool ok = hist.size() == 1 && hist.count(1) == 1;
      return report("secant", ctx, ok, {{"r", curve_r}, {"i2_dimension", sys.dimension()}, {"codimension_histogram", h}});
    };
  });

  auto* g4 = add("genus4", "rank of the quadric through a random genus-4 canonical curve", true);
  g4->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto rank = qmod::quad::genus4_check(ctx.field, ctx.seed);
      return report("genus4", ctx, rank == 4, {{"rank", rank}});
    };
  });

  auto* g5 = add("genus5-net", "discriminant quintic of a random net of quadrics in P^4", true);
  g5->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto rep = qmod::quad::genus5_net_check(ctx.field, ctx.seed);
      return report("genus5-net", ctx, rep.pass(), qmod::verify::genus5_json(rep));
    };
  });

  std::size_t bl_trials = 3;
  bool no_base_locus = false;
  const auto dump_surface = [](const qmod::surf::BlowupReport& rep, const RunContext& ctx, json& data) {
    const auto cfg = qmod::surf::PointConfig::random(ctx.field, 15, rep.attempts.back());
    json pts = json::array();
    for (const auto& p : cfg.points()) pts.push_back({std::to_string(p[0].value()), std::to_string(p[1].value())});
    data["points"] = std::move(pts);
    const auto h = qmod::surf::interpolation_basis(cfg, qmod::surf::ns_H());
    for (const auto& b : h.basis) {
      json c = json::array();
      for (const auto& v : b.coeffs()) c.push_back(std::to_string(v.value()));
      data["H_basis"].push_back(std::move(c));
    }
    if (h.dimension() >= 2) data["i2"] = qmod::quad::system_json(qmod::surf::system_i2(h));
  };
  auto* bu = add("blowup-verify", "the 15-point blow-up: linear systems, quadrics in P^6, pencil discriminant", true);
  bu->add_option("--base-locus-trials", bl_trials);
  bu->add_flag("--no-base-locus", no_base_locus, "skip the base-locus evidence for |C|");
  bu->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto rep = qmod::surf::blowup_run(ctx.field, ctx.seed, bl_trials, !no_base_locus);
      auto data = qmod::verify::blowup_json(rep);
      if (ctx.dump) dump_surface(rep, ctx, data);
      return report("blowup-verify", ctx, rep.pass(), std::move(data));
    };
  });

  auto* pd = add("pencil-disc", "discriminant of the pencil of quadrics through the blown-up surface", true);
  pd->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      const auto rep = qmod::surf::blowup_run(ctx.field, ctx.seed);
      json data{{"attempt_seeds", rep.attempts}, {"i2_dimension", rep.i2_dimension}};
      if (rep.pencil) data["pencil"] = qmod::verify::pencil_json(*rep.pencil);
      if (ctx.dump) dump_surface(rep, ctx, data);
      const bool ok = rep.pencil && rep.pencil->nondegenerate() && rep.pencil->degree == 7;
      return report("pencil-disc", ctx, ok, std::move(data));
    };
  });

  std::string which = "all";
  auto* ver = add("verify", "acceptance checks: 'all' or one of the check names", true);
  ver->add_option("check", which, "check name or 'all'");
  ver->final_callback([&] {
    runner = [&](const RunContext& ctx) {
      if (which == "all") return qmod::verify::run_all(ctx);
      return qmod::verify::run_checks({which}, ctx);
    };
  });
  std::string names;
  for (const auto& [name, fn] : qmod::verify::checks()) names += (names.empty() ? "" : ", ") + name;
  ver->footer("checks: " + names);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    if (code == 0) return 0;
    std::cerr << "\n" << app.help();
    return 2;
  }

  try {
    const qmod::PrimeField field(g.prime);
    json out;
    const int reps = seeded ? g.repetitions : 1;
    if (reps == 1) {
      out = runner(RunContext{field, g.seed, g.dump});
    } else {
      out = json::array();
      for (int i = 0; i < reps; ++i) out.push_back(runner(RunContext{field, g.seed + static_cast<std::uint64_t>(i), g.dump}));
    }
    print(out, g.format);
    return all_pass(out) ? 0 : 1;
  } catch (const qmod::DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const qmod::ConfigurationError& err) {
    std::cerr << "configuration error: " << err.what() << "\n";
    return 2;
  }
}
