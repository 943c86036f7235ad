#pragma once

// The verification suite: one named check per acceptance criterion. Each
// check returns a JSON report {"check", "seed", "prime", "pass", "data"}.
// Seeded checks use seeds seed+1, seed+2, ...; exact checks ignore the seed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "qmod/bn_invariants.hpp"
#include "qmod/pic_calculus.hpp"
#include "qmod/pic_json.hpp"
#include "qmod/quadric_json.hpp"
#include "qmod/quadric_lab.hpp"
#include "qmod/surface_lab.hpp"

namespace qmod::verify {

using nlohmann::json;

struct RunContext {
  PrimeField field;
  std::uint64_t seed = 0;
  bool dump = false;
};

inline json report(const std::string& check, const RunContext& ctx, bool pass, json data) {
  return {{"check", check}, {"seed", ctx.seed}, {"prime", ctx.field.modulus()}, {"pass", pass}, {"data", std::move(data)}};
}

using quad::binary_form_json;
using quad::matrix_json;

// ---- criterion 1

inline json check_identities(const RunContext& ctx) {
  std::int64_t failures = 0;
  std::int64_t grid = 0;
  for (std::int64_t g = 4; g <= 40; ++g) {
    failures += bn::expected_dim_q(g, g - 1, 2 * g - 2, 3) != -1;
    failures += bn::expected_dim_q(g, g - 1, 2 * g - 2, 4) != g - 4;
  }
  for (std::int64_t r = 3; r <= 12; ++r) failures += bn::expected_dim_q(0, r, r, 3) != r - 2;
  for (std::int64_t g = 0; g < 25; ++g)
    for (std::int64_t r = 1; r <= 20; ++r)
      for (std::int64_t d = r; d < r + 20; ++d)
        for (std::int64_t k = 1; k <= std::min<std::int64_t>(r + 1, 5); ++k) {
          ++grid;
          failures += bn::expected_dim_q(g + 1, r, d + 1, k) != bn::expected_dim_q(g, r, d, k) - 1;
        }
  std::int64_t fiber = 0;
  for (std::int64_t g = 1; g <= 40; ++g)
    for (std::int64_t k = 1; k <= g + 1; ++k, ++fiber) failures += !bn::fiber_dim_identity(g, k);
  return report("identities", ctx, failures == 0,
                {{"failures", failures}, {"induction_cases", grid}, {"fiber_cases", fiber}});
}

// ---- criterion 2

inline json check_harris_tu(const RunContext& ctx) {
  bool ok = true;
  json table = json::object();
  for (std::int64_t e = 3; e <= 14; ++e)
    for (std::int64_t k = 3; k <= e; ++k) {
      BigInt a;
      try {
        a = bn::harris_tu_degree(e, k);
      } catch (const ConsistencyError&) {
        ok = false;
        continue;
      }
      table[std::to_string(e) + "," + std::to_string(k)] = a.str();
      if (k == e - 1) ok = ok && a == e;
      if (k == e - 2) ok = ok && a == binomial(e + 1, 3);
    }
  return report("harris-tu", ctx, ok, {{"degrees", std::move(table)}});
}

// ---- criterion 3

inline json check_quad_class(const RunContext& ctx) {
  const auto cases = bn::enumerate_quad_cases(40);
  std::size_t mismatches = 0;
  std::size_t bound_violations = 0;
  std::size_t identity_failures = 0;
  for (const auto& [g, n, k] : cases) {
    const auto c = pic::fr_sigma_class(pic::chern_pair(static_cast<int>(g), static_cast<int>(n)), k);
    const Rational alpha(bn::harris_tu_degree(g - n, k));
    bool same = c.lambda() == pic::Coefficient::exact(alpha * Rational(7 * g - 9 * n + 6, g - n)) &&
                c.b_irr() == pic::Coefficient::exact(alpha);
    for (const auto& p : c.psi()) same = same && p == pic::Coefficient::exact(alpha * Rational(g + n - 6, g - n));
    mismatches += !same;
    for (std::int64_t s = 0; s <= n; ++s) identity_failures += pic::tilde_b_quad(g, n, 0, s) != pic::b0s_rank4(g, n, s);
    for (std::int64_t s = 1; s <= n; ++s)
      for (std::int64_t i = 0; i < s; ++i)
        if (pic::is_boundary_divisor(static_cast<int>(g), static_cast<int>(n), static_cast<int>(i),
                                     static_cast<int>(s)))
          bound_violations += pic::tilde_b_quad(g, n, i, s) < 1;
  }
  for (std::int64_t s = 1; s <= 8; ++s)
    for (std::int64_t i = 0; i < s; ++i) bound_violations += pic::tilde_b_dp(i, s) < 7;
  const bool ok = !cases.empty() && mismatches == 0 && bound_violations == 0 && identity_failures == 0;
  return report("quad-class", ctx, ok,
                {{"cases", cases.size()},
                 {"closed_form_mismatches", mismatches},
                 {"rank4_identity_failures", identity_failures},
                 {"tilde_b_bound_violations", bound_violations}});
}

// ---- criterion 4

inline json check_dp_class(const RunContext& ctx) {
  const auto d = pic::fr_dp_class(pic::chern_pair(15, 8));
  pic::DivisorClass expected(15, 8);
  expected.set_lambda(pic::Coefficient::exact(6 * 39))
      .set_all_psi(pic::Coefficient::exact(6 * 17))
      .set_b_irr(pic::Coefficient::exact(6 * 7))
      .set_all_boundary(pic::Coefficient::exact(6 * 7));
  const auto z = pic::z_class_15_9();
  bool ok = d == expected && z.lambda() == pic::Coefficient::exact(351) && z.b_irr() == pic::Coefficient::exact(63);
  for (const auto& p : z.psi()) ok = ok && p == pic::Coefficient::exact(136);
  json data{{"dp_class", pic::to_json(d)}, {"z_class", pic::to_json(z)}};
  return report("dp-class", ctx, ok, std::move(data));
}

// ---- criterion 5

inline json certificate_json(const pic::CertificateReport& rep) {
  json psi = json::array();
  for (const auto& p : rep.psi_residuals) psi.push_back(to_fraction_string(p));
  json slots = json::array();
  for (const auto& s : rep.boundary) {
    json e{{"i", s.slot.i},
           {"s", s.slot.s},
           {"slack", pic::coefficient_to_json(s.slack)},
           {"verified", s.verified},
           {"z_bound", to_fraction_string(s.z_bound)}};
    if (s.required_z_bound) e["required_z_bound"] = to_fraction_string(*s.required_z_bound);
    slots.push_back(std::move(e));
  }
  return {{"x", to_fraction_string(rep.x)},
          {"y", to_fraction_string(rep.y)},
          {"z", to_fraction_string(rep.z)},
          {"lambda_residual", to_fraction_string(rep.lambda_residual)},
          {"psi_residuals", std::move(psi)},
          {"e_irr", pic::coefficient_to_json(rep.e_irr)},
          {"boundary", std::move(slots)},
          {"pass", rep.pass}};
}

inline json check_certificate(const RunContext& ctx) {
  const Rational x(25, 297);
  const Rational y(2, 297);
  const Rational z(13, 66);
  const auto rep = pic::general_type_certificate(x, y, z);
  const auto [sx, sy] = pic::solve_certificate_multipliers(z);
  bool zero_slots_reported = false;
  for (const auto& s : rep.boundary)
    if (s.slot.i == 0) zero_slots_reported = zero_slots_reported || s.verified || s.required_z_bound.has_value();
  const bool ok = rep.pass && rep.e_irr == pic::Coefficient::exact(0) && sx == x && sy == y && zero_slots_reported;
  return report("certificate", ctx, ok,
                {{"certificate", certificate_json(rep)},
                 {"solver", {{"z", to_fraction_string(z)}, {"x", to_fraction_string(sx)}, {"y", to_fraction_string(sy)}}}});
}

// ---- criterion 6

inline json check_rnc_quadrics(const RunContext& ctx) {
  const auto& field = ctx.field;
  bool ok = true;
  json dims = json::object();
  for (std::size_t r = 3; r <= 8; ++r) {
    const auto dim = quad::i2_basis(quad::ParamCurve<PrimeField>::rational_normal(field, r)).dimension();
    dims["fp"][std::to_string(r)] = dim;
    ok = ok && dim == r * (r - 1) / 2;
  }
  const RationalField q;
  for (std::size_t r = 3; r <= 6; ++r) {
    const auto dim = quad::i2_basis(quad::ParamCurve<RationalField>::rational_normal(q, r)).dimension();
    dims["q"][std::to_string(r)] = dim;
    ok = ok && dim == r * (r - 1) / 2;
  }
  json constructed = json::object();
  for (int r = 4; r <= 8; ++r) {
    const auto c = quad::ParamCurve<PrimeField>::rational_normal(field, static_cast<std::size_t>(r));
    const auto i2 = quad::i2_basis(c);
    auto rng = make_rng(ctx.seed, 0x6000 + static_cast<std::uint64_t>(r));
    int full3 = 0;
    int full4 = 0;
    bool in_span = true;
    const auto s3 = quad::strata(r, 3);
    std::vector<quad::Stratum> s4;
    for (const auto& s : quad::strata(r, 4))
      if (s.m_prime >= 2) s4.push_back(s);
    using BF = BinaryForm<PrimeField>;
    for (std::size_t t = 0; t < 100; ++t) {
      const auto& a = s3[t % s3.size()];
      const auto q3 = quad::rank3_quadric(field, BF::random(field, static_cast<std::size_t>(a.m), rng),
                                          BF::random(field, static_cast<std::size_t>(a.m), rng),
                                          BF::random(field, static_cast<std::size_t>(a.x), rng));
      const auto& b = s4[t % s4.size()];
      const auto q4 = quad::rank4_quadric(field, BF::random(field, static_cast<std::size_t>(b.m), rng),
                                          BF::random(field, static_cast<std::size_t>(b.m), rng),
                                          BF::random(field, static_cast<std::size_t>(b.m_prime), rng),
                                          BF::random(field, static_cast<std::size_t>(b.m_prime), rng),
                                          BF::random(field, static_cast<std::size_t>(b.x), rng));
      const auto r3 = q3.rank();
      const auto r4 = q4.rank();
      in_span = in_span && i2.contains(q3) && i2.contains(q4) && r3 <= 3 && r4 <= 4;
      full3 += r3 == 3;
      full4 += r4 == 4;
    }
    constructed[std::to_string(r)] = {{"rank3_full", full3}, {"rank4_full", full4}, {"in_i2", in_span}};
    ok = ok && in_span && full3 >= 99 && full4 >= 99;
  }
  json families = json::object();
  for (int r = 4; r <= 9; ++r) {
    for (const auto& s : quad::strata(r, 3)) {
      for (std::uint64_t k = 1; k <= 3; ++k) {
        const int dim = quad::family_dimension(field, r, 3, s, ctx.seed + k);
        families["rank3"][std::to_string(r)][std::to_string(s.x)].push_back(dim);
        ok = ok && dim == r - 2;
      }
    }
  }
  const int best4 = quad::best_family_dimension(field, 6, 4, ctx.seed + 1);
  const auto expected4 = bn::expected_dim_q(0, 6, 6, 4);
  families["rank4_r6_best"] = best4;
  families["rank4_r6_expected"] = expected4;
  ok = ok && best4 == expected4;
  return report("rnc-quadrics", ctx, ok,
                {{"i2_dimensions", std::move(dims)}, {"constructed", std::move(constructed)}, {"families", std::move(families)}});
}

// ---- criterion 7

inline json check_secant(const RunContext& ctx) {
  bool ok = true;
  json per_r = json::object();
  for (std::size_t r = 3; r <= 8; ++r) {
    const auto c = quad::ParamCurve<PrimeField>::rational_normal(ctx.field, r);
    const auto i2 = quad::i2_basis(c);
    auto rng = make_rng(ctx.seed, 0x7000 + r);
    std::map<std::size_t, int> histogram;
    for (int t = 0; t < 100; ++t) {
      const auto t1 = ctx.field.random(rng);
      auto t2 = ctx.field.random(rng);
      while (t2 == t1) t2 = ctx.field.random(rng);
      ++histogram[quad::secant_condition(c, i2, t1, t2)];
    }
    json h = json::object();
    for (const auto& [codim, count] : histogram) h[std::to_string(codim)] = count;
    per_r[std::to_string(r)] = std::move(h);
    ok = ok && histogram.size() == 1 && histogram.count(1) == 1;
  }
  return report("secant", ctx, ok, {{"codimension_histogram", std::move(per_r)}});
}

// ---- criterion 8

inline json genus5_json(const quad::Genus5Report& rep) {
  json seeds = json::array();
  for (auto s : rep.attempts) seeds.push_back(s);
  const auto& a = rep.analysis;
  return {{"attempt_seeds", std::move(seeds)},
          {"status", quad::net_status_name(a.status)},
          {"line_degree", a.line_degree},
          {"squarefree_on_line", a.squarefree_on_line},
          {"singular_scan_complete", a.singular_scan_complete},
          {"singular_points", a.singular_points},
          {"rank_le_3_points", a.low_rank_points},
          {"pass", rep.pass()}};
}

inline json check_canonical_curves(const RunContext& ctx) {
  bool ok = true;
  std::map<std::size_t, int> ranks;
  for (std::uint64_t s = 1; s <= 100; ++s) ++ranks[quad::genus4_check(ctx.field, ctx.seed + s)];
  ok = ranks.size() == 1 && ranks.count(4) == 1;
  json g4 = json::object();
  for (const auto& [rk, count] : ranks) g4[std::to_string(rk)] = count;
  json g5 = json::array();
  for (std::uint64_t s = 1; s <= 20; ++s) {
    const auto rep = quad::genus5_net_check(ctx.field, ctx.seed + s);
    ok = ok && rep.pass();
    auto j = genus5_json(rep);
    j["seed"] = ctx.seed + s;
    g5.push_back(std::move(j));
  }
  return report("canonical-curves", ctx, ok, {{"genus4_rank_histogram", std::move(g4)}, {"genus5_nets", std::move(g5)}});
}

// ---- criterion 9

inline json pencil_json(const surf::PencilReport& p) {
  const char* status = p.status == SquarefreeStatus::squarefree         ? "squarefree"
                       : p.status == SquarefreeStatus::repeated_factor ? "repeated_factor"
                                                                       : "identically_zero";
  return {{"discriminant", binary_form_json(p.discriminant)},
          {"degree", p.degree},
          {"proportional", p.proportional},
          {"status", status},
          {"nondegenerate", p.nondegenerate()}};
}

inline json base_locus_json(const surf::BaseLocusReport& b) {
  return {{"point_drops", b.drops},
          {"points_pass", b.points_pass},
          {"no_common_component", b.no_common_component},
          {"assigned_multiplicities", b.assigned_multiplicities},
          {"moving_residual", b.moving_residual},
          {"pass", b.pass()}};
}

inline json blowup_json(const surf::BlowupReport& rep) {
  json j{{"attempt_seeds", rep.attempts},
         {"h0_H", rep.h0_H},
         {"h0_C", rep.h0_C},
         {"h0_2H_minus_C", rep.h0_2H_minus_C},
         {"i2_dimension", rep.i2_dimension},
         {"i2_ranks", rep.i2_ranks},
         {"i2_annihilates_samples", rep.i2_annihilates_samples},
         {"C.H", rep.c_dot_h},
         {"genus_C", rep.genus_c},
         {"H.H", rep.h_squared},
         {"pass", rep.pass()}};
  if (rep.pencil) j["pencil"] = pencil_json(*rep.pencil);
  if (rep.base_locus) j["base_locus_C"] = base_locus_json(*rep.base_locus);
  return j;
}

inline json check_surface(const RunContext& ctx) {
  json runs = json::array();
  int passes = 0;
  for (std::uint64_t s = 1; s <= 20; ++s) {
    // base-locus evidence on the first run only; it is the expensive part
    const auto rep = surf::blowup_run(ctx.field, ctx.seed + s, 3, s == 1);
    passes += rep.pass();
    auto j = blowup_json(rep);
    j["seed"] = ctx.seed + s;
    runs.push_back(std::move(j));
  }
  const bool ns_ok = surf::ns_intersect(surf::ns_C(), surf::ns_H()) == 20 && surf::ns_genus(surf::ns_C()) == 15 &&
                     surf::ns_intersect(surf::ns_H(), surf::ns_H()) == 13;
  return report("surface", ctx, ns_ok && passes >= 19, {{"passes", passes}, {"runs", std::move(runs)}});
}

using Check = std::function<json(const RunContext&)>;

/// Checks keyed by name; std::map fixes the output order.
inline const std::map<std::string, Check>& checks() {
  static const std::map<std::string, Check> all{
      {"identities", check_identities},   {"harris-tu", check_harris_tu},
      {"quad-class", check_quad_class},   {"dp-class", check_dp_class},
      {"certificate", check_certificate}, {"rnc-quadrics", check_rnc_quadrics},
      {"secant", check_secant},           {"canonical-curves", check_canonical_curves},
      {"surface", check_surface}};
  return all;
}

/// Runs the named checks concurrently; results come back in name order.
inline json run_checks(const std::vector<std::string>& names, const RunContext& ctx) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::future<json>> futures;
  for (const auto& name : sorted) {
    const auto it = checks().find(name);
    if (it == checks().end()) throw DomainError("unknown check '" + name + "'");
    futures.push_back(std::async(std::launch::async, it->second, ctx));
  }
  json results = json::array();
  bool pass = true;
  for (auto& f : futures) {
    auto r = f.get();
    pass = pass && r["pass"].get<bool>();
    results.push_back(std::move(r));
  }
  return {{"seed", ctx.seed}, {"prime", ctx.field.modulus()}, {"pass", pass}, {"checks", std::move(results)}};
}

inline json run_all(const RunContext& ctx) {
  std::vector<std::string> names;
  for (const auto& [name, fn] : checks()) names.push_back(name);
  return run_checks(names, ctx);
}

}  // namespace qmod::verify
