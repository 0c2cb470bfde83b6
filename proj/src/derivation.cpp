#include "mordell/derivation.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace mordell {

namespace {

const std::vector<std::string> kPerturbable{"k", "u1", "u2", "u3", "v1", "v2", "v3", "w"};

MultiPoly bump_leading(const MultiPoly& p) {
  if (p.is_zero()) return MultiPoly(1);
  const auto& [exps, coeff] = *p.terms().begin();
  std::map<std::string, unsigned> powers;
  for (std::size_t i = 0; i < exps.size(); ++i) powers[p.variables()[i]] = exps[i];
  return p + MultiPoly::monomial(1, powers);
}

DerivationReport run(const symbolic::Inputs& in, const DerivationOptions& options) {
  if (options.perturb &&
      std::find(kPerturbable.begin(), kPerturbable.end(), *options.perturb) ==
          kPerturbable.end()) {
    throw InvalidArgument("cannot perturb '" + *options.perturb +
                          "'; expected one of k, u1, u2, u3, v1, v2, v3, w");
  }
  auto maybe_bump = [&](const std::string& name, MultiPoly p) {
    return options.perturb == name ? bump_leading(p) : p;
  };

  const MultiPoly A = in.a.pow(3), B = in.b.pow(3), C = in.c.pow(3);
  const MultiPoly r = MultiPoly::variable("r");
  const MultiPoly k_sym = MultiPoly::variable("k");
  const MultiPoly f = symbolic::cube_factor_product(in);
  const MultiPoly r_value = -8 * f;

  const MultiPoly k = maybe_bump("k", symbolic::k(in));
  std::array<MultiPoly, 3> u, v, vs;
  for (int i = 1; i <= 3; ++i) {
    u[i - 1] = maybe_bump("u" + std::to_string(i), symbolic::u(i, in));
    v[i - 1] = maybe_bump("v" + std::to_string(i), symbolic::v(i, in));
    vs[i - 1] = symbolic::v_scaled(i, in);
  }
  const MultiPoly ks = symbolic::k_scaled(in);
  auto w_tan = symbolic::tangent_w(in);
  if (options.perturb == "w") w_tan[0] = bump_leading(w_tan[0]);
  const std::array<MultiPoly, 3> params{in.a, in.b, in.c};
  const std::array<MultiPoly, 3> cubes{A, B, C};

  const PlaneCubic cubic = cubic_condition(in);
  const auto w = w_symbols();
  const TPair generic_t = solve_t_pair(in, w, k_sym);
  const TPair tangent_t = solve_t_pair(in, w_tan, k_sym);

  DerivationReport report;
  auto add = [&](std::string name, std::string statement, std::vector<MultiPoly> residuals) {
    report.checks.push_back({std::move(name), std::move(statement), std::move(residuals)});
  };

  // Linear substitution v_i = w_i t + k turns each elimination equation into
  // a linear equation for t once the root t = 0 is removed.
  {
    const auto& [n, d] = generic_t.t1;
    add("t1-solves-ab-elimination", "b^3((w1 t1 + k)^2 - k^2) = a^3((w2 t1 + k)^2 - k^2)",
        {B * (w[0] * w[0] * n * n + 2 * k_sym * w[0] * n * d) -
         A * (w[1] * w[1] * n * n + 2 * k_sym * w[1] * n * d)});
  }
  {
    const auto& [n, d] = generic_t.t2;
    add("t2-solves-ac-elimination", "c^3((w1 t2 + k)^2 - k^2) = a^3((w3 t2 + k)^2 - k^2)",
        {C * (w[0] * w[0] * n * n + 2 * k_sym * w[0] * n * d) -
         A * (w[2] * w[2] * n * n + 2 * k_sym * w[2] * n * d)});
  }
  add("t-equality-is-cubic-condition", "num(t1) den(t2) - num(t2) den(t1) = -2k F(w1, w2, w3)",
      {generic_t.t1.numerator * generic_t.t2.denominator -
       generic_t.t2.numerator * generic_t.t1.denominator + 2 * k_sym * cubic.polynomial()});
  add("cubic-contains-cubes", "F(a^3, b^3, c^3) = 0", {cubic.at(cubes)});
  add("cubic-contains-tangent-w", "F(w) = 0 at the tangent-derived w", {cubic.at(w_tan)});
  {
    const std::string statement = "tangent at (a^3, b^3, c^3) meets F again at w (projectively)";
    try {
      auto q = tangent_third_point(cubic, cubes);
      add("tangent-process-yields-w", statement,
          {q[1] * w_tan[2] - q[2] * w_tan[1], q[2] * w_tan[0] - q[0] * w_tan[2],
           q[0] * w_tan[1] - q[1] * w_tan[0]});
    } catch (const SingularPoint&) {
      add("tangent-process-yields-w", statement + " [vacuous: F is singular there]", {});
    } catch (const TangentContained&) {
      add("tangent-process-yields-w", statement + " [vacuous: tangent lies in F]", {});
    }
  }
  {
    const auto& [n, d] = tangent_t.t1;
    std::vector<MultiPoly> res;
    for (std::size_t i = 0; i < 3; ++i) {
      // v_i / k from the tangent w equals the scaled solution's v_i / k.
      res.push_back((w_tan[i] * n + k_sym * d) * ks - vs[i] * k_sym * d);
    }
    add("scaled-solution-from-tangent-w", "v_i = w_i t + k with t = t1 at the tangent w, up to scale r",
        std::move(res));
  }
  add("scaled-solution-ab-elimination", "b^3(v1^2 - k^2) = a^3(v2^2 - k^2) for the r-scaled solution",
      {B * (vs[0] * vs[0] - ks * ks) - A * (vs[1] * vs[1] - ks * ks)});
  add("scaled-solution-ac-elimination", "c^3(v1^2 - k^2) = a^3(v3^2 - k^2) for the r-scaled solution",
      {C * (vs[0] * vs[0] - ks * ks) - A * (vs[2] * vs[2] - ks * ks)});
  add("m-condition", "v1^2 - k^2 = -8 a^3 r^2 (a^3+b^3-c^3)(b^3+c^3-a^3)(c^3+a^3-b^3)",
      {vs[0] * vs[0] - ks * ks + 8 * A * r * r * f});
  add("m-equals-r-resolves", "a^3 m^3 = -8 a^3 r^2 f with m = r = -8 f",
      {(A * r.pow(3) + 8 * A * r * r * f).substitute({{"r", r_value}})});
  add("k-closed-form", "k = k_scaled at r = -8 f", {k - ks.substitute({{"r", r_value}})});
  {
    std::vector<MultiPoly> res;
    for (std::size_t i = 0; i < 3; ++i) res.push_back(u[i] - params[i] * r_value);
    add("u-closed-form", "u_i = (a, b, c)_i m with m = r = -8 f", std::move(res));
  }
  {
    std::vector<MultiPoly> res;
    for (std::size_t i = 0; i < 3; ++i) res.push_back(v[i] - vs[i].substitute({{"r", r_value}}));
    add("v-closed-form", "v_i = v_i(scaled) at r = -8 f", std::move(res));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    std::string idx = std::to_string(i + 1);
    add("on-curve-P" + idx, "v" + idx + "^2 = u" + idx + "^3 + k^2",
        {v[i] * v[i] - u[i].pow(3) - k * k});
  }
  return report;
}

}  // namespace

bool IdentityCheck::passed() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const MultiPoly& p) { return p.is_zero(); });
}

std::size_t IdentityCheck::residual_terms() const {
  return std::accumulate(residuals.begin(), residuals.end(), std::size_t{0},
                         [](std::size_t acc, const MultiPoly& p) { return acc + p.term_count(); });
}

bool DerivationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed(); });
}

const IdentityCheck& DerivationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("no identity named '" + name + "'");
}

DerivationReport verify_derivation(const DerivationOptions& options) {
  return run(symbolic::Inputs{}, options);
}

DerivationReport verify_derivation(const FamilyParams& params, const DerivationOptions& options) {
  return run({MultiPoly(params.a()), MultiPoly(params.b()), MultiPoly(params.c())}, options);
}

}  // namespace mordell
