#include "tlforge/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tlforge {

std::string family_name(Family f) {
  switch (f) {
    case Family::Trivial: return "trivial";
    case Family::RankOne: return "rank-one";
    case Family::Sqrt2: return "sqrt2";
    case Family::Sqrt3: return "sqrt3";
    case Family::N4R4: return "n4r4";
    case Family::NRplus1: return "n-r-plus-1";
    case Family::Q2Block: return "q2-block";
    case Family::Q2Tensor: return "q2-tensor";
    case Family::Composite: return "composite";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  static const std::pair<std::string_view, Family> table[] = {
      {"trivial", Family::Trivial},   {"rank-one", Family::RankOne},
      {"sqrt2", Family::Sqrt2},       {"sqrt3", Family::Sqrt3},
      {"n4r4", Family::N4R4},         {"n-r-plus-1", Family::NRplus1},
      {"q2-block", Family::Q2Block},  {"q2-tensor", Family::Q2Tensor},
      {"composite", Family::Composite},
  };
  for (const auto& [k, v] : table)
    if (k == name) return v;
  return std::nullopt;
}

Matrix solution_matrix(const FamilyInstance& inst, const Tolerance& tol) {
  return inst.Q * projection_from_vs(inst.vs, tol);
}

TLSolution to_solution(const FamilyInstance& inst, const Tolerance& tol, Index cap) {
  return verify_all(solution_matrix(inst, tol), inst.n(), inst.Q, tol, cap,
                    family_name(inst.family));
}

static std::string fmt(Complex z) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

// Every constructor re-checks orthonormality; the families are exact, so a
// failure here signals a construction bug rather than user error.
static void enforce_orthonormal(const VSystem& vs, const char* who) {
  if (!check_orthonormal(vs).pass())
    throw std::logic_error(std::string(who) + ": constructed system not orthonormal");
}

FamilyInstance trivial(Index n) {
  if (n < 1) throw std::invalid_argument("trivial: n must be positive");
  FamilyInstance inst;
  inst.family = Family::Trivial;
  inst.Q = 1.0;
  inst.vs.n = n;
  for (Index a = 1; a <= n; ++a)
    for (Index b = 1; b <= n; ++b) inst.vs.mats.push_back(matrix_unit(n, a, b));
  inst.params["n"] = std::to_string(n);
  enforce_orthonormal(inst.vs, "trivial");
  return inst;
}

FamilyInstance rank_one(Index n, Complex z) {
  if (n < 1) throw std::invalid_argument("rank_one: n must be positive");
  if (z == Complex(0.0)) throw std::invalid_argument("rank_one: z must be nonzero");
  const double az = std::abs(z);
  double norm2 = 0.0;
  double Q = 0.0;
  for (Index k = 0; k < n; ++k) {
    norm2 += std::pow(az, 2.0 * static_cast<double>(k));
    Q += std::pow(az, static_cast<double>(2 * k + 1 - n));
  }
  const double gamma_n = 1.0 / std::sqrt(norm2);
  Matrix V = Matrix::Zero(n, n);
  Complex zk = 1.0;
  for (Index k = 0; k < n; ++k) {
    V += gamma_n * zk * matrix_unit(n, k + 1, n - k);
    zk *= z;
  }
  FamilyInstance inst;
  inst.family = Family::RankOne;
  inst.Q = Q;
  inst.vs.n = n;
  inst.vs.mats.push_back(std::move(V));
  inst.params["n"] = std::to_string(n);
  inst.params["z"] = fmt(z);
  enforce_orthonormal(inst.vs, "rank_one");
  return inst;
}

FamilyInstance q_sqrt2() {
  const double s = 1.0 / std::sqrt(2.0);
  FamilyInstance inst;
  inst.family = Family::Sqrt2;
  inst.Q = std::sqrt(2.0);
  inst.vs.n = 2;
  inst.vs.mats.push_back(s * (matrix_unit(2, 1, 1) + matrix_unit(2, 2, 2)));
  inst.vs.mats.push_back(s * (Complex(0, 1) * matrix_unit(2, 1, 2) + matrix_unit(2, 2, 1)));
  enforce_orthonormal(inst.vs, "q_sqrt2");
  return inst;
}

FamilyInstance q_sqrt3() {
  const double s = 1.0 / std::sqrt(3.0);
  const Complex q = std::polar(1.0, 2.0 * M_PI / 3.0);
  FamilyInstance inst;
  inst.family = Family::Sqrt3;
  inst.Q = std::sqrt(3.0);
  inst.vs.n = 3;
  inst.vs.mats.push_back(
      s * (matrix_unit(3, 1, 3) + matrix_unit(3, 2, 2) + matrix_unit(3, 3, 1)));
  inst.vs.mats.push_back(
      s * (q * matrix_unit(3, 1, 2) + matrix_unit(3, 2, 1) + matrix_unit(3, 3, 3)));
  inst.vs.mats.push_back(
      s * (matrix_unit(3, 1, 1) + std::conj(q) * matrix_unit(3, 2, 3) + matrix_unit(3, 3, 2)));
  enforce_orthonormal(inst.vs, "q_sqrt3");
  return inst;
}

Matrix V4Candidate::materialize(const std::array<Complex, 4>& z) const {
  Matrix V = Matrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i)
    V += static_cast<double>(sign[i]) * std::conj(z[static_cast<std::size_t>(coeff[i] - 1)]) *
         matrix_unit(4, i + 1, col[i]);
  return V;
}

V4Candidate n4r4_reference_completion() {
  return V4Candidate{{4, 3, 2, 1}, {3, 4, 1, 2}, {+1, +1, -1, -1}};
}

static std::array<Matrix, 3> n4r4_first_three(const std::array<Complex, 4>& z) {
  const Complex z1 = z[0], z2 = z[1], z3 = z[2], z4 = z[3];
  Matrix V1 = z1 * matrix_unit(4, 1, 2) + z2 * matrix_unit(4, 2, 3) +
              z3 * matrix_unit(4, 3, 4) + z4 * matrix_unit(4, 4, 1);
  Matrix V2 = z1 * matrix_unit(4, 1, 4) + z2 * matrix_unit(4, 2, 1) +
              z3 * matrix_unit(4, 3, 2) + z4 * matrix_unit(4, 4, 3);
  Matrix V3 = std::conj(z3) * matrix_unit(4, 1, 2) + std::conj(z4) * matrix_unit(4, 2, 1) -
              std::conj(z1) * matrix_unit(4, 3, 4) - std::conj(z2) * matrix_unit(4, 4, 3);
  return {std::move(V1), std::move(V2), std::move(V3)};
}

static double n4r4_Q(const std::array<Complex, 4>& z) {
  const double a = std::norm(z[0]) + std::norm(z[2]);
  const double b = std::norm(z[1]) + std::norm(z[3]);
  return 1.0 / std::sqrt(a * b);
}

FamilyInstance n4r4(Complex z1, Complex z2, Complex z3, Complex z4) {
  const std::array<Complex, 4> z{z1, z2, z3, z4};
  const double total = std::norm(z1) + std::norm(z2) + std::norm(z3) + std::norm(z4);
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("n4r4: moduli must satisfy sum |z_i|^2 = 1");
  if ((std::abs(z1) + std::abs(z3)) * (std::abs(z2) + std::abs(z4)) == 0.0)
    throw std::invalid_argument("n4r4: (|z1|+|z3|)(|z2|+|z4|) must be nonzero");
  auto first = n4r4_first_three(z);
  FamilyInstance inst;
  inst.family = Family::N4R4;
  inst.Q = n4r4_Q(z);
  inst.vs.n = 4;
  inst.vs.mats.assign(first.begin(), first.end());
  inst.vs.mats.push_back(n4r4_reference_completion().materialize(z));
  for (int i = 0; i < 4; ++i)
    inst.params["z" + std::to_string(i + 1)] = fmt(z[static_cast<std::size_t>(i)]);
  enforce_orthonormal(inst.vs, "n4r4");
  return inst;
}

FamilyInstance n_r_plus_1(Index n, Complex z1, Complex z2) {
  if (n < 2) throw std::invalid_argument("n_r_plus_1: n must be >= 2");
  if (z1 == Complex(0.0) || z2 == Complex(0.0))
    throw std::invalid_argument("n_r_plus_1: z1, z2 must be nonzero");
  const double c = 1.0 / std::sqrt(std::norm(z1) + std::norm(z2));
  FamilyInstance inst;
  inst.family = Family::NRplus1;
  inst.Q = std::abs(z1) / std::abs(z2) + std::abs(z2) / std::abs(z1);
  inst.vs.n = n;
  for (Index k = 1; k <= n - 1; ++k)
    inst.vs.mats.push_back(c * (z1 * matrix_unit(n, 1, k + 1) + z2 * matrix_unit(n, k + 1, 1)));
  inst.params["n"] = std::to_string(n);
  inst.params["z1"] = fmt(z1);
  inst.params["z2"] = fmt(z2);
  enforce_orthonormal(inst.vs, "n_r_plus_1");
  return inst;
}

FamilyInstance q2_block(Index n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("q2_block: n must be even >= 2");
  const Index h = n / 2;
  const double s = 1.0 / std::sqrt(2.0);
  FamilyInstance inst;
  inst.family = Family::Q2Block;
  inst.Q = 2.0;
  inst.vs.n = n;
  for (Index a = 1; a <= h; ++a)
    for (Index b = 1; b <= h; ++b) {
      Matrix M = Matrix::Zero(n, n);
      M.block(0, 0, h, h) = matrix_unit(h, a, b);
      M.block(h, h, h, h) = matrix_unit(h, a, b);
      inst.vs.mats.push_back(s * M);
    }
  inst.params["n"] = std::to_string(n);
  enforce_orthonormal(inst.vs, "q2_block");
  return inst;
}

FamilyInstance q2_tensor(Index n, Complex z) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("q2_tensor: n must be even >= 2");
  if (z == Complex(0.0)) throw std::invalid_argument("q2_tensor: z must be nonzero");
  const Index h = n / 2;
  const Matrix core =
      (matrix_unit(2, 1, 2) + z * matrix_unit(2, 2, 1)) / std::sqrt(1.0 + std::norm(z));
  FamilyInstance inst;
  inst.family = Family::Q2Tensor;
  inst.Q = std::abs(z) + 1.0 / std::abs(z);
  inst.vs.n = n;
  for (Index a = 1; a <= h; ++a)
    for (Index b = 1; b <= h; ++b)
      inst.vs.mats.push_back(kron(matrix_unit(h, a, b), core));
  inst.params["n"] = std::to_string(n);
  inst.params["z"] = fmt(z);
  enforce_orthonormal(inst.vs, "q2_tensor");
  return inst;
}

// ---------------------------------------------------------------------------
// Brute-force completion search
// ---------------------------------------------------------------------------

static std::array<Complex, 4> random_admissible_z(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    std::array<Complex, 4> z;
    double total = 0.0;
    for (auto& v : z) {
      v = Complex(gauss(rng), gauss(rng));
      total += std::norm(v);
    }
    const double scale = 1.0 / std::sqrt(total);
    for (auto& v : z) v *= scale;
    if ((std::abs(z[0]) + std::abs(z[2])) * (std::abs(z[1]) + std::abs(z[3])) > 1e-3)
      return z;
  }
}

std::vector<V4Candidate> derive_n4r4_completion(std::uint64_t seed, int trials,
                                                const Tolerance& tol) {
  std::mt19937_64 rng(seed);
  std::vector<std::array<Complex, 4>> zs;
  for (int t = 0; t < trials; ++t) zs.push_back(random_admissible_z(rng));

  std::array<int, 4> cols{1, 2, 3, 4};
  std::vector<std::array<int, 4>> perms;
  do {
    perms.push_back(cols);
  } while (std::next_permutation(cols.begin(), cols.end()));

  std::vector<V4Candidate> survivors;
  for (const auto& col : perms)
    for (const auto& coeff : perms)
      for (int bits = 0; bits < 16; ++bits) {
        V4Candidate cand;
        cand.col = col;
        cand.coeff = coeff;
        for (int i = 0; i < 4; ++i) cand.sign[i] = (bits >> i) & 1 ? -1 : +1;
        bool ok = true;
        for (const auto& z : zs) {
          VSystem vs;
          vs.n = 4;
          auto first = n4r4_first_three(z);
          vs.mats.assign(first.begin(), first.end());
          vs.mats.push_back(cand.materialize(z));
          if (!check_orthonormal(vs, tol).pass() ||
              !unitarity_criterion(vs, n4r4_Q(z), tol).pass()) {
            ok = false;
            break;
          }
        }
        if (ok) survivors.push_back(cand);
      }

  // Canonical order: positive leading signs first, reference pattern lands
  // in front.
  std::sort(survivors.begin(), survivors.end(),
            [](const V4Candidate& a, const V4Candidate& b) {
              return std::make_tuple(a.col, a.coeff,
                                     -a.sign[0], -a.sign[1], -a.sign[2], -a.sign[3]) <
                     std::make_tuple(b.col, b.coeff,
                                     -b.sign[0], -b.sign[1], -b.sign[2], -b.sign[3]);
            });
  return survivors;
}

}  // namespace tlforge
