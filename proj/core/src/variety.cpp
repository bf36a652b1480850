#include "fricke/variety.hpp"

#include "fricke/errors.hpp"
#include "fricke/pretzel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fricke {

namespace {

UniPoly S(std::int64_t k) { return chebyshev(k, 'y'); }

UniPoly uni_y(std::vector<Rational> coeffs) { return UniPoly(std::move(coeffs), 'y'); }

bool is_torus(std::int64_t n) { return n == 0 || n == 1 || n == 2; }

}  // namespace

Poly cubic_factor() {
  const Poly y = Poly::y();
  const Poly z = Poly::z();
  return Poly(-2) + Poly(3) * y - y.pow(3) + z * z;
}

VarietyData build_variety_data(std::int64_t n) {
  VarietyData d;
  d.n = n;
  d.Q = explicit_Q();
  d.Rn = explicit_Rn(n);

  const UniPoly s2 = S(n - 2);
  const UniPoly s3 = S(n - 3);
  const UniPoly y = UniPoly::variable('y');
  const UniPoly one = UniPoly::constant(1, 'y');
  const UniPoly two = UniPoly::constant(2, 'y');

  const Poly ys2 = compose_in_y(s2);
  const Poly ys3 = compose_in_y(s3);
  const Poly py = Poly::y();
  const Poly z2 = Poly::z() * Poly::z();
  d.alpha = (z2 + py - Poly(1)) * ys2 - py * z2 * ys3;
  d.beta = (py * py + py - Poly(1)) * ys2 - (py * py + py - Poly(2) + z2) * ys3;

  d.t0 = one + s2 * s3 - s3 * s3;
  d.t2 = -(two + s2 * s2 - s2 * s3);
  d.T = compose_in_y(d.t0) + compose_in_y(d.t2) * z2 + z2 * z2;

  const UniPoly y2 = y * y;
  d.p = (y + two) * s2 - (y2 + y - two) * s3;
  d.q = (y * s3 - s2) * ((y2 + y - one) * s2 - (y2 + y - two) * s3) - (y - one) * s2 * s3;
  return d;
}

Certificate identity_suite(std::int64_t n) {
  Certificate cert("elimination identities n=" + std::to_string(n));
  const VarietyData d = build_variety_data(n);
  const Poly x = Poly::x();
  const Poly y = Poly::y();
  const Poly z = Poly::z();
  const Poly z2 = z * z;
  const Poly s2 = chebyshev_y(n - 2);
  const Poly s3 = chebyshev_y(n - 3);

  cert.add_identity("clearing", z * d.Rn + s2 * d.Q, -d.alpha * x + d.beta * z);
  cert.add_identity("factorization",
                    z2 * d.beta * d.beta - (y * z2 + y - Poly(1)) * d.alpha * d.beta +
                        (y * y + z2 - Poly(3)) * d.alpha * d.alpha,
                    cubic_factor() * d.T);

  const UniPoly u2 = S(n - 2);
  const UniPoly u3 = S(n - 3);
  const UniPoly four = uni_y({4});
  const UniPoly diff = u2 - u3;
  cert.add("discriminant", d.t2 * d.t2 - four * d.t0 == (four + u2 * u2) * diff * diff);
  cert.add("t0-product", d.t0 == u2 * (u3 - S(n - 4)));
  cert.add("chebyshev-unit", u2 * u2 - uni_y({0, 1}) * u2 * u3 + u3 * u3 == uni_y({1}));
  cert.add_identity("R_n-reduced-form", d.Rn, explicit_Rn_reduced(n));

  // Restrictions to z = 0.
  cert.add_identity("Q|z=0", d.Q.substitute(Var::z, 0), x - x * y);
  cert.add_identity("R_n|x=z=0", d.Rn.substitute(Var::z, 0).substitute(Var::x, 0), compose_in_y(d.p));

  const Rational p2 = d.p.evaluate(Rational(2));
  cert.add("p(2)=4", p2 == 4, p2.get_str());
  const Rational q2 = d.q.evaluate(Rational(2));
  cert.add("q(2)=3n-11", q2 == 3 * n - 11, q2.get_str());

  const Poly T_y2 = d.T.substitute(Var::y, 2);
  cert.add_identity("T(2,z)", T_y2, z2 * z2 - Poly(Integer(n + 1)) * z2 + Poly(Integer(n - 1)));
  for (long zv : {2L, -2L}) {
    const Integer v = d.T.evaluate(Integer(0), Integer(2), Integer(zv));
    cert.add("T(2," + std::to_string(zv) + ")=11-3n", v == 11 - 3 * n, v.get_str());
  }
  return cert;
}

Certificate irreducibility_certificate(std::int64_t n) {
  if (is_torus(n)) throw TorusKnotError(n);
  Certificate cert("irreducibility of T n=" + std::to_string(n));
  const VarietyData d = build_variety_data(n);

  cert.add("t0-nonconstant", d.t0.degree() >= 1, d.t0.to_string());
  const Rational at2 = d.t0.evaluate(Rational(2));
  const Rational atm2 = d.t0.evaluate(Rational(-2));
  cert.add("t0(2)=n-1", at2 == n - 1, at2.get_str());
  cert.add("t0(-2)=(n-1)(5-2n)", atm2 == (n - 1) * (5 - 2 * n), atm2.get_str());

  // A factorisation (z^2 + f z + g)(z^2 - f z + g) forces g^2 = t0.
  const auto t0_root = is_perfect_square(d.t0.monic());
  cert.add("t0-not-square", !t0_root.has_value(), t0_root ? t0_root->to_string() : d.t0.to_string());
  const UniPoly g = uni_gcd(d.t0, d.t0.derivative());
  cert.set_output("t0_repeated_degree", g.degree());

  const UniPoly s2 = S(n - 2);
  cert.add("S_{n-2}-nonconstant", s2.degree() >= 1, s2.to_string());
  const UniPoly disc_factor = UniPoly::constant(4, 'y') + s2 * s2;
  const auto root = is_perfect_square(disc_factor);
  cert.add("4+S_{n-2}^2-not-square", !root.has_value(),
           root ? root->to_string() : disc_factor.to_string());

  for (long zv : {2L, -2L}) {
    const Integer v = d.T.evaluate(Integer(0), Integer(2), Integer(zv));
    cert.add("T(2," + std::to_string(zv) + ")!=0", v != 0, v.get_str());
  }
  return cert;
}

int component_count(std::int64_t n) { return component_report(n).count; }

ComponentReport component_report(std::int64_t n) {
  if (is_torus(n)) throw TorusKnotError(n);
  ComponentReport report;
  report.n = n;
  report.certificate = irreducibility_certificate(n);
  if (!report.certificate.pass())
    throw std::runtime_error("irreducibility certificate failed for n=" + std::to_string(n));

  const bool divisible = (2 * n + 1) % 3 == 0;
  // On {z = 0, y = 1}: Q vanishes and R_n = (3 - x^2) S_{n-2}(1).
  const Rational s_at_1 = S(n - 2).evaluate(Rational(1));
  const VarietyData d = build_variety_data(n);
  const Poly on_line_Q = d.Q.substitute(Var::z, 0).substitute(Var::y, 1);
  const Poly on_line_R = d.Rn.substitute(Var::z, 0).substitute(Var::y, 1);
  if (divisible) {
    report.certificate.add("S_{n-2}(1)=0", s_at_1 == 0, s_at_1.get_str());
    report.certificate.add("line-z=0,y=1-in-V", on_line_Q.is_zero() && on_line_R.is_zero());
  } else {
    report.certificate.add("S_{n-2}(1)=+-1", s_at_1 == 1 || s_at_1 == -1, s_at_1.get_str());
  }

  report.components = {"{-2 + 3*y - y^3 + z^2 = 0, x = z*beta/alpha}",
                       "{T(y,z) = 0, x = z*beta/alpha}"};
  if (divisible) report.components.emplace_back("{z = 0, y = 1}");
  report.count = static_cast<int>(report.components.size());
  report.certificate.set_output("component_count", report.count);
  return report;
}

Certificate numeric_spotchecks(std::int64_t n, double tol) {
  if (n < 4) throw ParameterError("numeric_spotchecks needs n >= 4, got " + std::to_string(n));
  if (!(tol > 0)) throw ParameterError("numeric_spotchecks needs a positive tolerance");
  Certificate cert("root formulas n=" + std::to_string(n));
  const double pi = std::numbers::pi;

  const UniPoly s2 = S(n - 2);
  double worst = 0;
  for (std::int64_t j = 1; j <= n - 2; ++j) {
    const double root = 2 * std::cos(static_cast<double>(j) * pi / static_cast<double>(n - 1));
    worst = std::max(worst, std::abs(s2.evaluate(root)));
  }
  cert.add("S_{n-2}-roots", worst < tol, std::to_string(worst));
  cert.add("S_{n-2}-degree", s2.degree() == n - 2 && s2.leading() == 1);

  const UniPoly diff = S(n - 3) - S(n - 4);
  worst = 0;
  for (std::int64_t j = 1; j <= n - 3; ++j) {
    const double root =
        2 * std::cos(static_cast<double>(2 * j - 1) * pi / static_cast<double>(2 * n - 5));
    worst = std::max(worst, std::abs(diff.evaluate(root)));
  }
  cert.add("S_{n-3}-S_{n-4}-roots", worst < tol, std::to_string(worst));
  cert.add("S_{n-3}-S_{n-4}-degree", diff.degree() == n - 3 && diff.leading() == 1);
  return cert;
}

}  // namespace fricke
