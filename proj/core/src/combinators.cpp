#include "tlforge/combinators.hpp"

#include <cmath>

namespace tlforge {

FamilyInstance direct_sum(const FamilyInstance& a, const FamilyInstance& b) {
  if (a.r() != b.r())
    throw std::invalid_argument("direct_sum: ranks differ (" + std::to_string(a.r()) +
                                " vs " + std::to_string(b.r()) + ")");
  const Index n1 = a.n(), n2 = b.n();
  const double Q = a.Q + b.Q;
  const double c = 1.0 / std::sqrt(Q);
  FamilyInstance out;
  out.family = Family::Composite;
  out.Q = Q;
  out.vs.n = n1 + n2;
  for (Index k = 0; k < a.r(); ++k) {
    Matrix M = Matrix::Zero(n1 + n2, n1 + n2);
    M.block(0, 0, n1, n1) = std::sqrt(a.Q) * a.vs.mats[static_cast<std::size_t>(k)];
    M.block(n1, n1, n2, n2) = std::sqrt(b.Q) * b.vs.mats[static_cast<std::size_t>(k)];
    out.vs.mats.push_back(c * M);
  }
  out.params["op"] = "direct_sum";
  out.params["a"] = family_name(a.family);
  out.params["b"] = family_name(b.family);
  return out;
}

FamilyInstance product_rank_one(const FamilyInstance& a, const FamilyInstance& b) {
  if (b.r() != 1)
    throw std::invalid_argument("product_rank_one: second factor must have rank one");
  const Matrix& U = b.vs.mats.front();
  FamilyInstance out;
  out.family = Family::Composite;
  out.Q = a.Q * b.Q;
  out.vs.n = a.n() * b.n();
  for (const auto& V : a.vs.mats) out.vs.mats.push_back(kron(V, U));
  out.params["op"] = "product_rank_one";
  out.params["a"] = family_name(a.family);
  out.params["b"] = family_name(b.family);
  return out;
}

TLSolution fuse(const TLSolution& sol, const Tolerance& tol, Index cap) {
  const Index n = sol.n;
  pow_dim(n, 6, cap);  // verification of the fused solution runs in M_{n^6}
  const Matrix T12 = embed(sol.T, n, 1, 4, cap);
  const Matrix T23 = embed(sol.T, n, 2, 4, cap);
  const Matrix T34 = embed(sol.T, n, 3, 4, cap);
  const Matrix fused = T23 * T12 * T34 * T23;
  return verify_all(fused, n * n, sol.Q * sol.Q, tol, cap,
                    "fuse(" + sol.label + "), site " + std::to_string(n * n));
}

namespace {

// n = (r+1) k - m with k >= 1 and 0 <= m <= r; unique since m = -n mod (r+1).
struct Decomposition {
  Index k;
  Index m;
};

Decomposition decompose(Index r, Index n) {
  const Index p = r + 1;
  const Index m = (p - (n % p)) % p;
  return {(n + m) / p, m};
}

void require_admissible(Index r, Index n) {
  if (r < 2 || r > 4) throw std::invalid_argument("rank must be 2, 3 or 4");
  if (n <= r) throw std::invalid_argument("size must satisfy n > r");
  if (r == 3 && n == 5)
    throw std::invalid_argument("no rank-3 recipe exists for n = 5");
}

// |z| solving |z| + 1/|z| = q for q >= 2 (the larger root).
double modulus_for_q2(double q) {
  return (q + std::sqrt(std::max(0.0, q * q - 4.0))) / 2.0;
}

// |z| solving |z|^2 + 1 + 1/|z|^2 = q for q >= 3.
double modulus_for_q3(double q) {
  const double t = q - 1.0;
  return std::sqrt((t + std::sqrt(std::max(0.0, t * t - 4.0))) / 2.0);
}

FamilyInstance tunable_nrp1(Index r, double q) {
  // canonical representative: |z2| = 1, |z1| the larger root, zero phases
  return n_r_plus_1(r + 1, Complex(modulus_for_q2(q)), Complex(1.0));
}

FamilyInstance tunable_n4r4(double q) {
  // |z1|^2 + |z3|^2 = a with a(1-a) = 1/q^2, split evenly inside the pairs
  const double a = (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 / (q * q)))) / 2.0;
  const double u = std::sqrt(a / 2.0);
  const double v = std::sqrt((1.0 - a) / 2.0);
  return n4r4(Complex(u), Complex(v), Complex(u), Complex(v));
}

FamilyInstance fold_sum(std::vector<FamilyInstance> blocks) {
  FamilyInstance acc = std::move(blocks.front());
  for (std::size_t i = 1; i < blocks.size(); ++i) acc = direct_sum(acc, blocks[i]);
  return acc;
}

}  // namespace

double q_threshold(Index r, Index n) {
  require_admissible(r, n);
  const auto [k, m] = decompose(r, n);
  const double kd = static_cast<double>(k), md = static_cast<double>(m);
  switch (r) {
    case 2: return 2.0 * (kd - md) + md * std::sqrt(2.0);
    case 3: return 2.0 * (kd - md) + md * std::sqrt(3.0);
    default: return m <= 2 ? 2.0 * kd : 2.0 * kd - 1.0;
  }
}

FamilyInstance construct_small_rank(Index r, Index n, double q_target) {
  require_admissible(r, n);
  const double q_min = q_threshold(r, n);
  if (q_target < q_min - 1e-12 * (1.0 + q_min))
    throw std::invalid_argument("q_target " + std::to_string(q_target) +
                                " below threshold " + std::to_string(q_min));
  double slack = std::max(0.0, q_target - q_min);
  const auto [k, m] = decompose(r, n);

  // Product constructions for the sizes the block sums cannot reach with a
  // tunable component: (r=2, n=4) and (r=3, n in {6, 9}).
  if (r == 2 && n == 4) {
    FamilyInstance out =
        product_rank_one(q_sqrt2(), rank_one(2, Complex(modulus_for_q2(q_target / std::sqrt(2.0)))));
    out.params["recipe"] = "sqrt2 x rank-one(2)";
    return out;
  }
  if (r == 3 && (n == 6 || n == 9)) {
    const Index f = n / 3;
    const double qf = q_target / std::sqrt(3.0);
    const double mod = f == 2 ? modulus_for_q2(qf) : modulus_for_q3(qf);
    FamilyInstance out = product_rank_one(q_sqrt3(), rank_one(f, Complex(mod)));
    out.params["recipe"] = "sqrt3 x rank-one(" + std::to_string(f) + ")";
    return out;
  }

  std::vector<FamilyInstance> blocks;
  std::string recipe;
  auto add_fixed = [&](FamilyInstance b, const std::string& name) {
    blocks.push_back(std::move(b));
    recipe += recipe.empty() ? name : " + " + name;
  };
  auto add_tunable_nrp1 = [&](Index count) {
    for (Index i = 0; i < count; ++i) {
      const double q = 2.0 + (i == 0 ? slack : 0.0);
      if (i == 0) slack = 0.0;
      add_fixed(tunable_nrp1(r, q), "tunable(" + std::to_string(r + 1) + ")");
    }
  };

  if (r == 4 && m >= 3) {
    // 2k-1 cases: one copy of the trivial rank-4 solution (Q = 1, size 2)
    // plus, for m = 4, one generalized-permutation block.
    if (m == 4) {
      const bool slack_here = k == 2;  // no tunable two-entry block follows
      add_fixed(tunable_n4r4(2.0 + (slack_here ? slack : 0.0)), "n4r4");
      if (slack_here) slack = 0.0;
    }
    add_fixed(trivial(2), "trivial(2)");
    add_tunable_nrp1(m == 3 ? k - 1 : k - 2);
  } else {
    const bool no_tunable_tail = (k == m);
    for (Index i = 0; i < m; ++i) {
      switch (r) {
        case 2: add_fixed(q_sqrt2(), "sqrt2"); break;
        case 3: add_fixed(q_sqrt3(), "sqrt3"); break;
        default: {
          const bool slack_here = no_tunable_tail && i == 0;
          add_fixed(tunable_n4r4(2.0 + (slack_here ? slack : 0.0)), "n4r4");
          if (slack_here) slack = 0.0;
          break;
        }
      }
    }
    add_tunable_nrp1(k - m);
  }

  FamilyInstance out = fold_sum(std::move(blocks));
  out.params["recipe"] = recipe;
  out.params["r"] = std::to_string(r);
  out.params["n"] = std::to_string(n);
  out.params["q"] = std::to_string(q_target);
  return out;
}

}  // namespace tlforge
