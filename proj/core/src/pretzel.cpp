#include "fricke/pretzel.hpp"

#include "fricke/numbers.hpp"

namespace fricke {

namespace {

const Word kA = Word::a();
const Word kW = Word::w();
const Word kAi = Word::a(-1);
const Word kWi = Word::w(-1);

Word awaW() { return kA * kW * kA * kWi; }

}  // namespace

PretzelWords pretzel_words(std::int64_t m, std::int64_t n) {
  PretzelWords out;
  out.m = m;
  out.n = n;
  out.u = awaW().pow(1 - m) * kW;

  const Word Wawa = kWi * kA * kW * kA;
  const std::int64_t l = floor_div(m, 2);
  out.s = (m == 2 * l) ? kA * Wawa.pow(-l) : Wawa.pow(-l);

  const std::int64_t k = floor_div(n, 2);
  if (n == 2 * k) {
    out.r = out.s * out.u.pow(k - 1) * kA * kW * kA * kWi * kAi * out.u.pow(-k);
  } else {
    out.r = out.s * out.u.pow(k) * kA * kW * kAi * kWi * kAi * out.u.pow(-k);
  }
  return out;
}

Presentation pretzel_presentation(std::int64_t m, std::int64_t n) {
  const Word u = pretzel_words(m, n).u;
  return {u.pow(n) * kA * kW * kAi * kWi * kAi, kAi * kWi * kA * kW * kA * u.pow(n - 1)};
}

bool verify_lemma31(std::int64_t m) {
  const PretzelWords pw = pretzel_words(m, 0);
  return pw.u == pw.s.reversed() * kW * pw.s && pw.u.is_palindrome();
}

bool verify_prop32(std::int64_t m, std::int64_t n) {
  const PretzelWords pw = pretzel_words(m, n);
  const Word& u = pw.u;
  const std::int64_t k = floor_div(n, 2);
  Word conjugated;
  if (n == 2 * k) {
    conjugated = u.pow(-k) * kAi * kWi * kA * kW * kA * u.pow(2 * k - 1) * kA * kW * kA * kWi *
                 kAi * u.pow(-k);
  } else {
    conjugated = u.pow(-k) * kAi * kWi * kAi * kW * kA * u.pow(2 * k + 1) * kA * kW * kAi * kWi *
                 kAi * u.pow(-k);
  }
  const Word relator = pw.relator();
  const Presentation p = pretzel_presentation(m, n);
  return relator == conjugated && relator.is_palindrome() &&
         conjugate_up_to_inversion(relator, p.lhs * p.rhs.inverse());
}

GeneratorSet pretzel_generators(std::int64_t m, std::int64_t n) {
  return thm5_generators(pretzel_words(m, n).r);
}

Poly explicit_Q() {
  const Poly x = Poly::x();
  const Poly y = Poly::y();
  const Poly z = Poly::z();
  return x - x * y + (x * x + y * y - Poly(3)) * z - x * y * z * z + z * z * z;
}

Poly explicit_Rn(std::int64_t n) {
  const Poly x = Poly::x();
  const Poly z = Poly::z();
  const auto S = [n](std::int64_t shift) { return chebyshev_y(n + shift); };
  return S(-2) + S(-3) - S(-4) - S(-5) - S(-2) * x * x + (S(-1) + S(-3) + S(-4)) * x * z -
         (S(-2) + S(-3)) * z * z;
}

Poly explicit_Rn_reduced(std::int64_t n) {
  const Poly x = Poly::x();
  const Poly y = Poly::y();
  const Poly z = Poly::z();
  const Poly s2 = chebyshev_y(n - 2);
  const Poly s3 = chebyshev_y(n - 3);
  return (y + Poly(2)) * s2 - (y * y + y - Poly(2)) * s3 - s2 * x * x +
         ((y - Poly(1)) * s2 + y * s3) * x * z - (s2 + s3) * z * z;
}

Word pretzel_r_word() { return kAi * kWi * kAi * kW * kA; }

Certificate verify_thm3(std::int64_t n) {
  Certificate cert("closed forms for the (-2,3," + std::to_string(2 * n + 1) + ")-pretzel knot");
  const GeneratorSet g = thm1_generators(pretzel_r_word(), n);
  cert.add_identity("Q", g.generators[0], explicit_Q());
  cert.add_identity("R_n", g.generators[1], explicit_Rn(n));
  cert.add_identity("R_n-reduced-form", explicit_Rn(n), explicit_Rn_reduced(n));
  return cert;
}

}  // namespace fricke
