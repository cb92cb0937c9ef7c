// Command-line front end: builds catalog families, verifies matrices against
// the defining relations, classifies (n, r, Q) triples, runs projector
// ladders, and combines solutions. Exit codes are the machine contract:
// 0 = ok/verified, 1 = verification failed, 2 = invalid input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tlforge/classify.hpp"
#include "tlforge/combinators.hpp"
#include "tlforge/jones_wenzl.hpp"
#include "tlforge/json_io.hpp"
#include "tlforge/parse.hpp"

namespace {

using namespace tlforge;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;

struct GlobalOptions {
  double abs_eps = 1e-9;
  double rank_eps = 1e-9;
  Index cap = kDefaultDimCap;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;

  Tolerance tol() const { return Tolerance{abs_eps, rank_eps}; }
};

void emit(const GlobalOptions& g, const Json& j) {
  if (g.format == "pretty")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
  if (!g.out.empty()) save_json_file(g.out, j);
}

// Family construction shared by build/jw: family name plus --n/--z flags.
struct FamilyArgs {
  std::string family;
  Index n = 0;
  std::string z;

  FamilyInstance make() const {
    const auto fam = family_from_name(family);
    if (!fam) throw std::invalid_argument("unknown family '" + family + "'");
    std::vector<Complex> zs;
    if (!z.empty()) zs = parse_complex_list(z);
    auto need_z = [&](std::size_t count) {
      if (zs.size() != count)
        throw std::invalid_argument("family '" + family + "' needs " +
                                    std::to_string(count) + " z value(s)");
    };
    switch (*fam) {
      case Family::Trivial: return trivial(n);
      case Family::RankOne: need_z(1); return rank_one(n, zs[0]);
      case Family::Sqrt2: return q_sqrt2();
      case Family::Sqrt3: return q_sqrt3();
      case Family::N4R4: need_z(4); return n4r4(zs[0], zs[1], zs[2], zs[3]);
      case Family::NRplus1: need_z(2); return n_r_plus_1(n, zs[0], zs[1]);
      case Family::Q2Block: return q2_block(n);
      case Family::Q2Tensor: need_z(1); return q2_tensor(n, zs[0]);
      case Family::Composite: break;
    }
    throw std::invalid_argument("family '" + family + "' is not constructible directly");
  }
};

void add_family_flags(CLI::App* cmd, FamilyArgs& args) {
  cmd->add_option("--family", args.family, "family name")->required();
  cmd->add_option("--n", args.n, "size parameter n");
  cmd->add_option("--z", args.z, "comma-separated complex parameters, e.g. 1+0i,0.5-0.5i");
}

Json instance_with_matrix(const FamilyInstance& inst, const Tolerance& tol) {
  Json j = family_to_json(inst);
  j["T"] = matrix_to_json(solution_matrix(inst, tol));
  return j;
}

FamilyInstance load_instance(const std::string& path) {
  return family_from_json(load_json_file(path));
}

int cmd_build(const GlobalOptions& g, const FamilyArgs& fargs, bool verify,
              bool validate_v4) {
  const FamilyInstance inst = fargs.make();
  Json j = instance_with_matrix(inst, g.tol());
  if (validate_v4) {
    const auto survivors = derive_n4r4_completion(g.seed, 3, g.tol());
    const auto ref = n4r4_reference_completion();
    bool patterns_match = !survivors.empty();
    for (const auto& s : survivors)
      patterns_match = patterns_match && s.col == ref.col && s.coeff == ref.coeff;
    j["v4_derivation"] = {{"seed", g.seed},
                          {"survivors", survivors.size()},
                          {"unique_support_pattern", patterns_match},
                          {"canonical_is_reference",
                           !survivors.empty() && survivors.front() == ref}};
  }
  int code = kExitOk;
  if (verify) {
    try {
      const TLSolution sol = to_solution(inst, g.tol(), g.cap);
      j["verified"] = true;
      j["rank"] = sol.r;
    } catch (const VerificationError& e) {
      j["verified"] = false;
      j["failure"] = {{"relation", e.relation()}, {"residual", e.residual()}};
      code = kExitVerificationFailed;
    }
  }
  emit(g, j);
  return code;
}

int cmd_verify(const GlobalOptions& g, const std::string& path, Index n, double Q) {
  const Json in = load_json_file(path);
  const Matrix T = matrix_from_json(in.contains("T") ? in.at("T") : in);
  if (T.rows() != n * n || T.cols() != n * n)
    throw std::invalid_argument("matrix is " + std::to_string(T.rows()) + "x" +
                                std::to_string(T.cols()) + ", expected n^2 = " +
                                std::to_string(n * n));
  Report rep = verify_hermitian_idempotent(T, Q, g.tol());
  Report t2 = verify_triple_relations(T, n, g.tol(), g.cap);
  rep.checks.insert(rep.checks.end(), t2.checks.begin(), t2.checks.end());
  Json j{{"n", n}, {"Q", Q}, {"checks", report_to_json(rep)}};
  if (rep.pass()) j["rank"] = rank(T, g.tol());
  emit(g, j);
  return rep.pass() ? kExitOk : kExitVerificationFailed;
}

int cmd_classify(const GlobalOptions& g, Index n, Index r, double Q) {
  emit(g, class_report_to_json(classify(n, r, Q, g.tol())));
  return kExitOk;
}

int cmd_jw(const GlobalOptions& g, const FamilyArgs& fargs, Index depth) {
  const FamilyInstance inst = fargs.make();
  const TLSolution sol = to_solution(inst, g.tol(), g.cap);
  const JwLadder ladder = jw_ladder(sol, depth, g.cap);
  for (Index N = 1; N <= ladder.depth(); ++N) {
    const Matrix& P = ladder.projector(N);
    double annihilation = 0.0;
    for (Index k = 1; k < N; ++k) {
      const Matrix S = embed(sol.T, sol.n, k, N, g.cap);
      annihilation = std::max(annihilation, (S * P).norm());
      annihilation = std::max(annihilation, (P * S).norm());
    }
    Json line{{"N", N},
              {"dim", P.rows()},
              {"trace", trace(P).real()},
              {"trace_formula", trace_formula(N, sol.n, sol.r)},
              {"idempotency_residual", (P * P - P).norm()},
              {"annihilation_residual", annihilation}};
    if (ladder.coeffs.size() >= N && !ladder.coeffs.is_infinite(N))
      line["coefficient"] = ladder.coeffs.at(N);
    else if (ladder.coeffs.size() >= N)
      line["coefficient"] = "infinite";
    std::cout << line.dump() << "\n";
  }
  Json tail{{"requested_depth", depth}, {"depth", ladder.depth()}};
  if (ladder.coeffs.first_infinite) tail["first_infinite_coefficient"] = *ladder.coeffs.first_infinite;
  std::cout << tail.dump() << "\n";
  return kExitOk;
}

int cmd_construct(const GlobalOptions& g, Index r, Index n, double Q) {
  const FamilyInstance inst = construct_small_rank(r, n, Q);
  Json j = instance_with_matrix(inst, g.tol());
  j["q_threshold"] = q_threshold(r, n);
  const TLSolution sol = to_solution(inst, g.tol(), g.cap);
  j["verified"] = true;
  j["rank"] = sol.r;
  emit(g, j);
  return kExitOk;
}

int cmd_sum(const GlobalOptions& g, const std::string& a, const std::string& b) {
  const FamilyInstance out = direct_sum(load_instance(a), load_instance(b));
  Json j = instance_with_matrix(out, g.tol());
  const TLSolution sol = to_solution(out, g.tol(), g.cap);
  j["verified"] = true;
  j["rank"] = sol.r;
  emit(g, j);
  return kExitOk;
}

int cmd_product(const GlobalOptions& g, const std::string& a, const std::string& b) {
  const FamilyInstance out = product_rank_one(load_instance(a), load_instance(b));
  Json j = instance_with_matrix(out, g.tol());
  const TLSolution sol = to_solution(out, g.tol(), g.cap);
  j["verified"] = true;
  j["rank"] = sol.r;
  emit(g, j);
  return kExitOk;
}

int cmd_fuse(const GlobalOptions& g, const std::string& input) {
  const FamilyInstance inst = load_instance(input);
  const TLSolution base = to_solution(inst, g.tol(), g.cap);
  const TLSolution fused = fuse(base, g.tol(), g.cap);
  Json j{{"site_dim", fused.n},
         {"Q", fused.Q},
         {"rank", fused.r},
         {"label", fused.label},
         {"T", matrix_to_json(fused.T)}};
  emit(g, j);
  return kExitOk;
}

int cmd_export(const GlobalOptions& g, const std::string& input, const std::string& what) {
  const FamilyInstance inst = load_instance(input);
  Json j;
  if (what == "T")
    j = matrix_to_json(solution_matrix(inst, g.tol()));
  else if (what == "vsystem")
    j = vsystem_to_json(inst.vs);
  else if (what == "W")
    j = matrix_to_json(w_matrix(inst.vs));
  else
    throw std::invalid_argument("export: --what must be T, vsystem or W");
  emit(g, j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb tensor representation toolkit"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--tol", g.abs_eps, "absolute tolerance for residual checks")
      ->capture_default_str();
  app.add_option("--rank-tol", g.rank_eps, "relative singular value cutoff for ranks")
      ->capture_default_str();
  app.add_option("--cap", g.cap, "largest tensor space dimension to materialize")
      ->envname("TLFORGE_CAP")
      ->check(CLI::Range(static_cast<Index>(16), static_cast<Index>(1) << 30))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized derivations")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  app.add_option("--out,-o", g.out, "also write the JSON result to this file");

  // build
  auto* build = app.add_subcommand("build", "construct a catalog family");
  FamilyArgs build_args;
  add_family_flags(build, build_args);
  bool build_verify = false, build_validate_v4 = false;
  build->add_flag("--verify", build_verify, "run full verification on the result");
  build->add_flag("--validate-v4", build_validate_v4,
                  "re-derive the fourth n4r4 matrix by brute force (seeded)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a matrix against the relations");
  std::string verify_file;
  Index verify_n = 0;
  double verify_q = 0.0;
  verify->add_option("--matrix", verify_file, "matrix JSON file (or build output)")->required();
  verify->add_option("--n", verify_n, "site dimension n")->required();
  verify->add_option("--q", verify_q, "Q value")->required();

  // classify
  auto* cls = app.add_subcommand("classify", "class and existence report for (n, r, Q)");
  Index cls_n = 0, cls_r = 0;
  double cls_q = 0.0;
  cls->add_option("--n", cls_n)->required();
  cls->add_option("--r", cls_r)->required();
  cls->add_option("--q", cls_q)->required();

  // jw
  auto* jw = app.add_subcommand("jw", "projector ladder traces and residuals (JSON lines)");
  FamilyArgs jw_args;
  add_family_flags(jw, jw_args);
  Index jw_depth = 3;
  jw->add_option("--depth", jw_depth, "ladder depth N")->required();

  // construct
  auto* construct = app.add_subcommand("construct", "rank 2..4 recipe at a target Q");
  Index con_r = 0, con_n = 0;
  double con_q = 0.0;
  construct->add_option("--r", con_r)->required();
  construct->add_option("--n", con_n)->required();
  construct->add_option("--q", con_q)->required();

  // sum / product / fuse
  auto* sum = app.add_subcommand("sum", "direct sum of two instances (same rank)");
  std::string sum_a, sum_b;
  sum->add_option("--a", sum_a, "first instance JSON")->required();
  sum->add_option("--b", sum_b, "second instance JSON")->required();

  auto* product = app.add_subcommand("product", "tensor product with a rank-one instance");
  std::string prod_a, prod_b;
  product->add_option("--a", prod_a, "instance JSON")->required();
  product->add_option("--b", prod_b, "rank-one instance JSON")->required();

  auto* fusecmd = app.add_subcommand("fuse", "fusion: squares Q and the rank");
  std::string fuse_in;
  fusecmd->add_option("--input", fuse_in, "instance JSON")->required();

  // export
  auto* exportcmd = app.add_subcommand("export", "emit T, the V-system or W as JSON");
  std::string export_in, export_what = "T";
  exportcmd->add_option("--input", export_in, "instance JSON")->required();
  exportcmd->add_option("--what", export_what, "T | vsystem | W")
      ->check(CLI::IsMember({"T", "vsystem", "W"}));

  // global flags may appear on either side of the subcommand
  for (auto* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*build) return cmd_build(g, build_args, build_verify, build_validate_v4);
    if (*verify) return cmd_verify(g, verify_file, verify_n, verify_q);
    if (*cls) return cmd_classify(g, cls_n, cls_r, cls_q);
    if (*jw) return cmd_jw(g, jw_args, jw_depth);
    if (*construct) return cmd_construct(g, con_r, con_n, con_q);
    if (*sum) return cmd_sum(g, sum_a, sum_b);
    if (*product) return cmd_product(g, prod_a, prod_b);
    if (*fusecmd) return cmd_fuse(g, fuse_in);
    if (*exportcmd) return cmd_export(g, export_in, export_what);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
