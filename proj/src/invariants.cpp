#include "zbargmann/invariants.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>

#include "zbargmann/errors.hpp"
#include "zbargmann/io.hpp"
#include "zbargmann/random.hpp"

namespace zbargmann::invariants {
namespace {

constexpr std::size_t kMaxListedFailures = 25;

class Recorder {
 public:
  Recorder(std::string name, double tolerance) : tol_(tolerance), start_(std::chrono::steady_clock::now()) {
    r_.name = std::move(name);
  }

  void check(const std::string& what, double residual) { check(what, residual, tol_); }

  void check(const std::string& what, double residual, double tolerance) {
    ++r_.checks;
    if (std::isfinite(residual)) r_.worst_residual = std::max(r_.worst_residual, residual);
    if (!(residual <= tolerance)) fail(what + ": residual " + io::format_double(residual) + " > " +
                                       io::format_double(tolerance));
  }

  void expect(const std::string& what, bool ok) {
    ++r_.checks;
    if (!ok) fail(what);
  }

  void fail(const std::string& message) {
    r_.passed = false;
    if (r_.failures.size() < kMaxListedFailures) r_.failures.push_back(message);
  }

  void note(const std::string& message) { r_.notes.push_back(message); }

  // Runs body; an exception becomes a failure with its residual (if any).
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const InvariantViolation& e) {
      ++r_.checks;
      r_.worst_residual = std::max(r_.worst_residual, e.residual());
      fail(what + ": " + e.what());
    } catch (const std::exception& e) {
      ++r_.checks;
      fail(what + ": " + e.what());
    }
  }

  SuiteResult finish() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(r_);
  }

 private:
  SuiteResult r_;
  double tol_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<UnitCirclePoint> points(const SuiteConfig& cfg, CounterRng& rng) {
  std::vector<UnitCirclePoint> zs = cfg.zs;
  for (int k = 0; k < cfg.random_z; ++k) zs.push_back(random::unit_circle(rng));
  return zs;
}

std::string at_z(const char* what, UnitCirclePoint z) {
  return std::string(what) + " (z angle " + io::format_double(z.angle()) + ")";
}

double deviation_from(const ComplexMatrix& m, const ComplexMatrix& expected) { return max_abs_diff(m, expected); }

double op_norm(const ComplexMatrix& m) { return max_singular_value(m); }

std::vector<double> sorted_real_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigen(HermitianMatrix::from(m, 1e-8)).values;
}

}  // namespace

SuiteResult hilbert_suite(const SuiteConfig& cfg) {
  Recorder rec("hilbert", cfg.tolerance);
  const std::size_t d = cfg.d;
  rec.guarded("hilbert", [&] {
    const ComplexMatrix one = ComplexMatrix::identity(d);
    const ComplexMatrix f = fourier_matrix(d), x = shift_X(d), z = clock_Z(d);
    rec.check("F unitary", unitarity_residual(f));
    rec.check("X unitary", unitarity_residual(x));
    rec.check("Z unitary", unitarity_residual(z));
    rec.check("F^4 = 1", deviation_from(matrix_power(f, 4), one));
    rec.check("X^d = 1", deviation_from(matrix_power(x, static_cast<unsigned>(d)), one));
    rec.check("Z^d = 1", deviation_from(matrix_power(z, static_cast<unsigned>(d)), one));
    rec.check("Z X omega = X Z", deviation_from(root_of_unity(1, d) * (z * x), x * z));
    const auto sd = static_cast<std::int64_t>(d);
    for (std::int64_t a = 0; a < sd; ++a) {
      for (std::int64_t b = 0; b < sd; ++b) {
        for (std::int64_t c = 0; c < 2; ++c) rec.check("displacement unitary", unitarity_residual(displacement(d, a, b, c)));
        const ComplexMatrix p = displaced_parity(d, a, b);
        rec.check("displaced parity unitary", unitarity_residual(p));
        rec.check("displaced parity squares to 1", deviation_from(p * p, one));
        rec.check("displaced parity Hermitian", hermiticity_residual(p));
      }
    }
    CounterRng rng(cfg.seed, 0x41);
    for (int k = 0; k < 5; ++k) {
      const HermitianMatrix h = HermitianMatrix::from(random::hermitian(d, rng));
      const double t1 = 4.0 * rng.uniform() - 2.0, t2 = 4.0 * rng.uniform() - 2.0;
      const ComplexMatrix u1 = hermitian_expm(h, t1), u2 = hermitian_expm(h, t2);
      rec.check("expm unitary", unitarity_residual(u1));
      rec.check("expm group property", deviation_from(u1 * u2, hermitian_expm(h, t1 + t2)));
      for (cplx lambda : general_eigenvalues(u1)) rec.check("expm eigenvalue on unit circle", std::abs(std::abs(lambda) - 1.0));
    }
  });
  return rec.finish();
}

SuiteResult grothendieck_suite(const SuiteConfig& cfg) {
  Recorder rec("grothendieck", cfg.tolerance);
  const std::size_t n = cfg.d;
  rec.guarded("grothendieck", [&] {
    CounterRng rng(cfg.seed, 0x47);
    for (int k = 0; k < 10; ++k) {
      const ComplexMatrix theta = random::complex_matrix(n, rng);
      const GrothendieckReport rep = g_lower(theta, cfg.ascent);
      rec.check("g_lower <= g'", rep.g_lower - rep.g_prime);
      rec.check("g_lower <= ||theta||_1", rep.g_lower - rep.one_norm);
      const double c = classical_form(theta, rep.witness_a, rep.witness_b);
      rec.check("witness attains g_lower", std::abs(c - rep.g_lower) / std::max(1.0, c));

      const ComplexMatrix u = random::unitary(n, rng);
      rec.check("g' unitarily invariant", std::abs(g_prime(u * theta * u.adjoint()) - g_prime(theta)), 1e-8);

      std::vector<cplx> a(n), b(n);
      for (auto& e : a) e = random::unit_phase(rng) * rng.uniform();
      for (auto& e : b) e = random::unit_phase(rng) * rng.uniform();
      const UnitDiscVector va = UnitDiscVector::from(a), vb = UnitDiscVector::from(b);
      const ComplexMatrix qa = dequantisation_matrix(va.conjugated()).matrix();
      const ComplexMatrix qb = dequantisation_matrix(vb).matrix();
      rec.check("classical form as a trace",
                std::abs(classical_form(theta, va, vb) - std::abs(trace_product(qa.adjoint(), theta * qb))));
    }
    for (int k = 0; k < 10; ++k) {
      const Ket f = random::unit_ket(n, rng);
      const ComplexMatrix rho = outer(f, f);
      const double exact = g_pure(f);
      const double found = g_lower(rho, cfg.ascent).g_lower;
      rec.check("optimizer matches closed form for pure states", std::abs(found - exact) / exact, 1e-6);
      const ComplexMatrix v = random::rescaling(n, rng), w = random::rescaling(n, rng);
      rec.check("pure-state Q <= 1", quantum_form(rho, v, w, exact) - 1.0);
      const auto sn = static_cast<std::int64_t>(n);
      const auto a = static_cast<std::int64_t>(rng.next() % n), b = static_cast<std::int64_t>(rng.next() % n);
      rec.check("Weyl Q <= 1", weyl_q(f, a, b, static_cast<std::int64_t>(rng.next() % n)) - 1.0);
      rec.check("Wigner Q <= 1", wigner_q(f, a % sn, b % sn) - 1.0);
    }
    for (int k = 0; k < 5; ++k) {
      std::vector<cplx> diag(n);
      double total = 0.0;
      for (auto& e : diag) total += (e = rng.uniform() + 1e-3).real();
      for (auto& e : diag) e /= total;
      const ComplexMatrix rho = ComplexMatrix::diagonal(diag);
      const GEstimate g = g_estimate(rho, cfg.ascent);
      rec.check("diagonal density has g = 1", std::abs(g.value - 1.0));
      rec.check("diagonal density Q <= 1",
                quantum_form(rho, random::rescaling(n, rng), random::rescaling(n, rng), g.value) - 1.0);
    }
  });
  return rec.finish();
}

SuiteResult bargmann_suite(const SuiteConfig& cfg) {
  Recorder rec("bargmann", cfg.tolerance);
  const std::size_t d = cfg.d;
  rec.guarded("bargmann", [&] {
    CounterRng rng(cfg.seed, 0x42);
    const ComplexMatrix one = ComplexMatrix::identity(d), one2 = ComplexMatrix::identity(2 * d);
    const ComplexMatrix x = shift_X(d), vp = varpi(d), parity = x * vp;
    rec.check("varpi^2 = 1", deviation_from(vp * vp, one));
    rec.check("(X varpi)^2 = 1", deviation_from(parity * parity, one));
    for (const UnitCirclePoint z : points(cfg, rng)) {
      const UnitCirclePoint z2 = random::unit_circle(rng);
      const cplx zv = z.value(), z2v = z2.value();
      const SemiUnitary m = build_M(d, z), mm = build_M(d, z.negated()), m2 = build_M(d, z2);

      rec.check(at_z("M M^dagger = 1", z), deviation_from(m.matrix() * m.adjoint(), one));
      rec.check(at_z("M(-z) M(z)^dagger = 0", z), max_abs(mm.matrix() * m.adjoint()));
      rec.check(at_z("M(z1) M(z2)^dagger", z),
                deviation_from(m.matrix() * m2.adjoint(), (0.5 * (1.0 + zv * std::conj(z2v))) * one));

      const ComplexMatrix a = block_A(d, zv), am = block_A(d, -zv);
      rec.check(at_z("A(z1)A(z2*) + A(-z1)A(-z2*)", z),
                deviation_from(a * block_A(d, std::conj(z2v)) + am * block_A(d, -std::conj(z2v)),
                               (0.5 * (1.0 + zv * std::conj(z2v))) * one));
      rec.check(at_z("A(z)^dagger = A(z*)", z), deviation_from(a.adjoint(), block_A(d, std::conj(zv))));
      rec.check(at_z("A(z) + A(-z) = parity", z), deviation_from(a + am, parity));
      const ComplexMatrix kappa = a.adjoint() * a, kappa_m = am.adjoint() * am;
      rec.check(at_z("kappa(z) + kappa(-z) = 1", z), deviation_from(kappa + kappa_m, one));
      rec.check(at_z("lambda(z) + lambda(-z) = 0", z), max_abs(a.adjoint() * am + am.adjoint() * a));
      for (std::size_t i = 0; i < d; ++i) rec.check(at_z("kappa diagonal 1/2", z), std::abs(kappa(i, i) - 0.5));

      const ProjectorPair pp = projector(d, z);
      const ComplexMatrix& pi = pp.pi_plus;
      rec.check(at_z("Pi(z) + Pi(-z) = 1", z), deviation_from(pi + pp.pi_minus, one2));
      rec.check(at_z("Pi(z) Pi(-z) = 0", z), max_abs(pi * pp.pi_minus));
      rec.check(at_z("Pi idempotent", z), deviation_from(pi * pi, pi));
      rec.check(at_z("Pi Hermitian", z), hermiticity_residual(pi));
      rec.check(at_z("Tr Pi = d", z), std::abs(pi.trace() - static_cast<double>(d)));
      rec.check(at_z("M(z) Pi(z) = M(z)", z), deviation_from(m.matrix() * pi, m.matrix()));
      rec.check(at_z("M(-z) Pi(z) = 0", z), max_abs(mm.matrix() * pi));
      rec.check(at_z("N[Pi] = 1/sqrt 2", z), std::abs(rescaling_norm(pi) - 1.0 / std::sqrt(2.0)));
      for (std::size_t i = 0; i < 2 * d; ++i) {
        rec.check(at_z("Pi diagonal 1/2", z), std::abs(pi(i, i) - 0.5));
        if (d < 3) continue;
        std::size_t quarters = 0, zeros = 0;
        for (std::size_t j = 0; j < 2 * d; ++j) {
          if (j == i) continue;
          const double mod = std::abs(pi(i, j));
          if (std::abs(mod - 0.25) <= cfg.tolerance) ++quarters;
          else if (mod <= cfg.tolerance) ++zeros;
        }
        rec.expect(at_z("Pi row has four entries of modulus 1/4", z), quarters == 4 && zeros == 2 * d - 5);
      }
      if (d >= 3) rec.check(at_z("||Pi||_1 = 3d", z), std::abs(matrix_one_norm(pi) - 3.0 * static_cast<double>(d)));

      const auto family = coherent_family(d, z);
      ComplexMatrix resolution(d);
      for (const Ket& k : family) resolution += outer(k, k);
      resolution *= 0.5;
      rec.check(at_z("coherent family resolves the identity", z), deviation_from(resolution, one));
      for (std::size_t r = 0; r < d; ++r) {
        rec.check(at_z("X maps the z orbit into itself", z), max_abs_diff(x * family[r], family[(r + 1) % d]));
        rec.check(at_z("X maps the -z orbit into itself", z),
                  max_abs_diff(x * family[d + r], family[d + (r + 1) % d]));
        rec.check(at_z("orbits orthogonal", z), std::abs(inner(family[r], family[d + r])));
      }

      if (std::abs(1.0 + std::conj(zv) * z2v) > 1e-3) {
        const ComplexMatrix p12 = projector_pair_z(d, z, z2), p21 = projector_pair_z(d, z2, z);
        rec.check(at_z("Pi(z1,z2) idempotent", z), deviation_from(p12 * p12, p12));
        rec.check(at_z("Pi(z1,z2)^dagger = Pi(z2,z1)", z), deviation_from(p12.adjoint(), p21));
        rec.check(at_z("Tr Pi(z1,z2) = d", z), std::abs(p12.trace() - static_cast<double>(d)));
        const cplx factor = (2.0 + std::conj(zv) * z2v + zv * std::conj(z2v)) / 4.0;
        rec.check(at_z("Pi(z1) Pi(z2) = factor Pi(z1,z2)", z),
                  deviation_from(pi * projector(d, z2).pi_plus, factor * p12));

        const Ket v = random::complex_ket(d, rng);
        const BargmannVector v_at_z2 = to_bargmann_vec(v, z2);
        rec.check(at_z("vector representation change", z),
                  max_abs_diff(change_representation_vec(v_at_z2, z).entries, to_bargmann_vec(v, z).entries));
        const ComplexMatrix t = random::complex_matrix(d, rng);
        rec.check(at_z("matrix representation change", z),
                  deviation_from(change_representation_mat(to_bargmann_mat(t, z2), z2, z), to_bargmann_mat(t, z)));
      }

      const Ket v = random::complex_ket(d, rng), u = random::complex_ket(d, rng);
      const BargmannVector vb = to_bargmann_vec(v, z), ub = to_bargmann_vec(u, z);
      rec.check(at_z("vector round trip", z), max_abs_diff(from_bargmann_vec(vb), v));
      rec.check(at_z("scalar product preserved", z), std::abs(inner(vb.entries, ub.entries) - inner(v, u)));
      rec.expect(at_z("transform output is physical", z), is_physical_vec(vb.entries, z));
      rec.expect(at_z("v_B(-z) is not physical at z", z), !is_physical_vec(to_bargmann_vec(v, z.negated()).entries, z));

      const HermitianMatrix th = HermitianMatrix::from(random::hermitian(d, rng));
      const ComplexMatrix tb = to_bargmann_mat(th.matrix(), z);
      rec.check(at_z("trace preserved", z), std::abs(tb.trace() - th.matrix().trace()));
      std::vector<double> expected = hermitian_eigen(th).values;
      expected.resize(2 * d, 0.0);
      std::sort(expected.begin(), expected.end());
      const std::vector<double> got = sorted_real_eigenvalues(tb);
      double spec = 0.0;
      for (std::size_t k = 0; k < got.size(); ++k) spec = std::max(spec, std::abs(got[k] - expected[k]));
      rec.check(at_z("spectrum is the original plus d zeros", z), spec);
      rec.expect(at_z("transformed matrix is physical", z), is_physical_mat(tb, z));
      rec.check(at_z("matrix round trip", z), deviation_from(from_bargmann_mat(tb, z), th.matrix()));
      const ComplexMatrix s = random::complex_matrix(d, rng);
      rec.check(at_z("products map to products", z),
                deviation_from(to_bargmann_mat(s * th.matrix(), z), to_bargmann_mat(s, z) * tb));
      const ComplexMatrix ub_mat = to_bargmann_mat(random::unitary(d, rng), z);
      rec.check(at_z("unitary image satisfies T_B T_B^dagger = Pi", z), deviation_from(ub_mat * ub_mat.adjoint(), pi));
      rec.expect(at_z("identity on C^2d is not physical", z), !is_physical_mat(one2, z));

      rec.guarded(at_z("projected unitary is a rescaling matrix", z), [&] {
        rec.expect(at_z("projected unitary is a rescaling matrix", z),
                   projected_unitary_is_rescaling(random::unitary(2 * d, rng), pp));
      });
    }
  });
  return rec.finish();
}

SuiteResult dynamics_suite(const SuiteConfig& cfg, const std::optional<HermitianMatrix>& h_in) {
  Recorder rec("dynamics", cfg.tolerance);
  const std::size_t d = cfg.d;
  rec.guarded("dynamics", [&] {
    CounterRng rng(cfg.seed, 0x44);
    const HermitianMatrix h = h_in ? *h_in : HermitianMatrix::from(random::hermitian(2 * d, rng));
    if (h.dim() != 2 * d) throw InputError("dynamics suite: Hamiltonian must be 2d x 2d");
    const ComplexMatrix& hm = h.matrix();
    const std::vector<double> grid = time_grid(0.0, 2.0, 0.01);
    const UnitaryPropagator prop(h);

    auto zs = cfg.zs;
    for (int k = 0; k < std::min(cfg.random_z, 5); ++k) zs.push_back(random::unit_circle(rng));
    for (const UnitCirclePoint z : zs) {
      const ProjectorPair pp = projector(d, z), pm = projector(d, z.negated());
      const BargmannVector vb = to_bargmann_vec(random::unit_ket(d, rng), z);
      const DensityMatrix pure = DensityMatrix::pure(vb.entries);
      const DensityMatrix mixed = DensityMatrix::from(random::density(2 * d, rng));

      for (const DensityMatrix* rho0 : {&pure, &mixed}) {
        double trace_dev = 0.0;
        for (double t : grid) {
          const ComplexMatrix u = prop.at(t);
          trace_dev = std::max(trace_dev, std::abs((u * rho0->matrix() * u.adjoint()).trace() - 1.0));
        }
        rec.check(at_z("trace conserved", z), trace_dev, 1e-10);

        const CurrentSeries plus = current_series(*rho0, h, pp, grid);
        const CurrentSeries minus = current_series(*rho0, h, pm, grid);
        double anti = 0.0;
        for (std::size_t k = 0; k < grid.size(); ++k) anti = std::max(anti, std::abs(plus.j_values[k] + minus.j_values[k]));
        rec.check(at_z("J(Pi(z)) = -J(Pi(-z))", z), anti, 1e-10);
        rec.guarded(at_z("J matches the derivative of occupancy", z), [&] {
          validate_series(plus, h, pp);
          rec.expect(at_z("J matches the derivative of occupancy", z), true);
        });

        const TaylorCurrent tc = current_derivatives_at_zero(*rho0, h, pp, 2);
        ComplexMatrix nested = commutator(pp.pi_plus, hm);
        for (int k = 0; k < 3; ++k) nested = commutator(nested, hm);
        const double k_bound = op_norm(nested) / 6.0;
        for (double t : {0.01, 0.02, 0.03, 0.04, 0.05}) {
          rec.check(at_z("Taylor remainder within bound", z), std::abs(tc.evaluate(t) - current(*rho0, h, pp, t)),
                    k_bound * t * t * t + 1e-12);
        }
        double isolated = 0.0;
        for (double t : {0.0, 0.5, 1.0}) {
          isolated = std::max(isolated, std::abs(current_with_projector(*rho0, h, ComplexMatrix::identity(2 * d), t)));
        }
        rec.check(at_z("isolated current vanishes", z), isolated);
      }

      const double step = 1e-3;
      const ComplexMatrix c2 = commutator(commutator(pp.pi_plus, hm), hm);
      const double tol = step * step * std::max(10.0 * op_norm(c2), op_norm(commutator(c2, hm)) / 6.0) + 1e-9;
      for (double t : {0.05, 0.5, 1.5}) {
        const QSample lo = q_of_t(pure, h, pp, t - step, pure_state_g());
        const QSample hi = q_of_t(pure, h, pp, t + step, pure_state_g());
        rec.check(at_z("half derivative of Q g equals J", z),
                  std::abs(0.5 * (hi.q_times_g - lo.q_times_g) / (2.0 * step) - current(pure, h, pp, t)), tol);
      }
    }
  });
  return rec.finish();
}

SuiteResult strictness_suite(const SuiteConfig& cfg) {
  Recorder rec("strictness", cfg.tolerance);
  const std::size_t d = cfg.d;
  rec.guarded("strictness", [&] {
    std::vector<UnitCirclePoint> zs = cfg.zs;
    if (zs.empty()) zs.push_back(UnitCirclePoint::from_pi_fraction(1, 4));
    const double two_d = 2.0 * static_cast<double>(d);
    for (const UnitCirclePoint z : zs) {
      const ComplexMatrix pi = projector(d, z).pi_plus;
      const GrothendieckReport rep = g_lower(pi, cfg.ascent);
      rec.check(at_z("g_lower[Pi] <= min(g', ||Pi||_1)", z), rep.g_lower - rep.upper_bound());
      rec.check(at_z("certified bound min(g', ||Pi||_1) = 2d", z), std::abs(rep.upper_bound() - two_d));
      const double q = two_d / rep.g_lower;
      char buf[200];
      if (rep.g_lower < two_d - cfg.ascent.window_margin) {
        std::snprintf(buf, sizeof buf, "z angle %.6f: strict gap observed, g_lower = %.9f < %g, Q = %.9f", z.angle(),
                      rep.g_lower, two_d, q);
      } else {
        std::snprintf(buf, sizeof buf, "z angle %.6f: expected exception (g attains 2d), g_lower = %.9f, Q = %.9f",
                      z.angle(), rep.g_lower, q);
      }
      rec.note(buf);
    }
  });
  return rec.finish();
}

SuiteResult hermiticity_suite(const ComplexMatrix& h, double tolerance) {
  Recorder rec("hamiltonian", tolerance);
  if (!h.is_square()) {
    rec.fail("Hamiltonian is not square");
  } else {
    rec.check("Hermiticity ||H - H^dagger||_max", hermiticity_residual(h));
  }
  return rec.finish();
}

std::string format_result(const SuiteResult& r) {
  char head[256];
  std::snprintf(head, sizeof head, "%-13s %s  checks=%zu  worst residual=%.3e  time=%.3fs", r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.checks, r.worst_residual, r.seconds);
  std::string out = head;
  out += '\n';
  for (const auto& n : r.notes) out += "    note: " + n + "\n";
  for (const auto& f : r.failures) out += "    failed: " + f + "\n";
  return out;
}

}  // namespace zbargmann::invariants
