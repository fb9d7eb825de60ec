// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "kappa/kappa.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace kappa;

namespace {

struct Outcome
{
  bool ok = true;
  long long instances = 0;
  std::vector<std::string> problems;

  auto fail(std::string what) -> void {
    ok = false;
    if (problems.size() < 8)
      problems.push_back(std::move(what));
  }
};

// Every (κ, κ') pair computed by criteria 1 to 5, re-checked by criterion 6.
struct LadderLog
{
  long long checked = 0;
  std::vector<std::string> violations;

  auto record(const Graph & g, int kappa, int kappa_prime) -> void {
    ++checked;
    if (!bounds_hold(bounds_report(g), kappa, kappa_prime))
      violations.push_back(to_graph6(g) + " kappa=" + std::to_string(kappa) +
                           " kappa'=" + std::to_string(kappa_prime));
  }
};

LadderLog ladder;

auto corpus(int n) -> std::vector<Graph> {
  char name[32];
  std::snprintf(name, sizeof name, "cubic_%02d.g6", n);
  return load_graph6_corpus(std::filesystem::path(KAPPA_CORPUS_DIR) / name);
}

auto tag(const Graph & g) -> std::string { return to_graph6(g); }

auto criterion_1() -> Outcome {
  Outcome out;
  for (int q : {1, 3, 5})
    for (int p = 1; p * q <= 12; ++p) {
      auto g = complete_multipartite(p, q);
      int k = kappa_exact(g).value;
      int kp = kappa_prime_exact(g).value;
      ladder.record(g, k, kp);
      ++out.instances;
      if (k != p * q - p || kp != q)
        out.fail("G(" + std::to_string(p) + "," + std::to_string(q) + "): kappa=" + std::to_string(k) +
                 " kappa'=" + std::to_string(kp));
    }
  return out;
}

auto criterion_2() -> Outcome {
  Outcome out;
  for (int q : {2, 4})
    for (int p = 1; p * q <= 12; ++p) {
      auto g = complete_multipartite(p, q);
      int n = p * q;
      int k = kappa_exact(g).value;
      int kp = kappa_prime_exact(g).value;
      int oracle_kp = kappa_prime_oracle(g);
      ladder.record(g, k, kp);
      ++out.instances;
      if (k != std::max(n - p, n - q) || kp != oracle_kp || kp != p + q - 1)
        out.fail("G(" + std::to_string(p) + "," + std::to_string(q) + "): kappa=" + std::to_string(k) +
                 " kappa'=" + std::to_string(kp) + " oracle=" + std::to_string(oracle_kp));
    }
  return out;
}

auto criterion_3() -> Outcome {
  Outcome out;
  auto g = complete_multipartite(3, 3);
  int k = kappa_exact(g).value;
  int kp = kappa_prime_exact(g).value;
  ladder.record(g, k, kp);
  out.instances = 1;
  int kq = std::max(k, 9 - kp);
  if (kq != 6)
    out.fail("kappa_Q(G(3,3)) = " + std::to_string(kq));
  return out;
}

auto criterion_4() -> Outcome {
  Outcome out;
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, [&](const Graph & g) {
      int k = kappa_exact(g).value;
      int kp = kappa_prime_exact(g).value;
      ladder.record(g, k, kp);
      for (int r = 1; r <= 3; ++r) {
        auto gr = disjoint_copies(g, r);
        int kr = kappa_exact(gr).value;
        int kpr = kappa_prime_exact(gr).value;
        ladder.record(gr, kr, kpr);
        ++out.instances;
        if (kr != r * k || kpr != kp)
          out.fail(tag(g) + " r=" + std::to_string(r) + ": kappa=" + std::to_string(kr) +
                   " kappa'=" + std::to_string(kpr));
        if (gr.size() <= default_oracle_cap &&
            (kr != kappa_oracle(gr) || kpr != kappa_prime_oracle(gr)))
          out.fail(tag(gr) + ": solver disagrees with oracle");
      }
    });
  return out;
}

auto criterion_5() -> Outcome {
  Outcome out;
  auto check = [&](const Graph & g) {
    auto gbar = complement(g);
    int kp = kappa_prime_exact(g).value;
    int kbar = kappa_exact(gbar).value;
    ladder.record(g, kappa_exact(g).value, kp);
    ladder.record(gbar, kbar, kappa_prime_exact(gbar).value);
    ++out.instances;
    if (kp + kbar < g.size())
      out.fail(tag(g) + ": kappa'=" + std::to_string(kp) + " kappa(co)=" + std::to_string(kbar));
  };
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, check);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i)
    check(random_graph(6 + i % 3, rng));
  return out;
}

auto criterion_6() -> Outcome {
  Outcome out;
  out.instances = ladder.checked;
  for (const auto & v : ladder.violations)
    out.fail(v);
  if (ladder.checked == 0)
    out.fail("no instances recorded");
  return out;
}

auto criterion_7() -> Outcome {
  Outcome out;
  // (a) cycles
  for (int n = 3; n <= 12; ++n) {
    auto c = cycle_graph(n);
    int k = kappa_exact(c).value;
    bool code = find_perfect_code(c).has_value();
    ++out.instances;
    if (k != (2 * n) / 3)
      out.fail("(a) C" + std::to_string(n) + ": kappa=" + std::to_string(k) + ", floor(2n/3)=" +
               std::to_string((2 * n) / 3));
    bool at_bound = 3 * k == 2 * n;
    if (at_bound != (n % 3 == 0) || code != (n % 3 == 0))
      out.fail("(a) C" + std::to_string(n) + ": equality/code mismatch");
  }
  // (b) cubic graphs
  for (int n : {4, 6, 8})
    for (const auto & g : corpus(n)) {
      auto eq = check_kappa_equality(g);
      ++out.instances;
      bool hits = 4 * eq.kappa == 3 * n;
      bool code = find_perfect_code(g).has_value();
      if (hits != code || !eq.consistent())
        out.fail("(b) " + tag(g) + ": kappa=" + std::to_string(eq.kappa) +
                 " code=" + std::to_string(code));
      if (n % 4 != 0 && eq.kappa > 4)
        out.fail("(b) " + tag(g) + ": kappa=" + std::to_string(eq.kappa) + " exceeds 4");
    }
  // (c) applicable regular graphs on up to 8 vertices
  long long applicable = 0;
  auto check_prime = [&](const Graph & g) {
    if (!is_regular(g))
      return;
    auto eq = check_kappa_prime_equality(g);
    ++out.instances;
    if (!eq.applicable)
      return;
    ++applicable;
    if (!eq.consistent())
      out.fail("(c) " + tag(g) + ": kappa'=" + std::to_string(eq.kappa_prime));
  };
  for (int n = 1; n <= 7; ++n)
    for_each_graph(n, check_prime);
  for (int n : {4, 6, 8})
    for (const auto & g : corpus(n)) {
      check_prime(g);
      check_prime(complement(g));
    }
  for (int n = 3; n <= 8; ++n) {
    check_prime(cycle_graph(n));
    check_prime(complement(cycle_graph(n)));
    check_prime(complete_graph(n));
    check_prime(empty_graph(n));
  }
  for (int p = 1; p <= 4; ++p)
    for (int q = 1; p * q <= 8; ++q)
      check_prime(complete_multipartite(p, q));
  if (applicable == 0)
    out.fail("(c) no applicable graphs");
  return out;
}

auto criterion_8() -> Outcome {
  Outcome out;
  bool with_code = false;
  bool without_code_8 = false;
  for (int n : {4, 8})
    for (const auto & g : corpus(n)) {
      for (auto inst : {reduce_pc_to_kappa_ge(g), reduce_pc_to_kappa_prime_le(g)}) {
        auto check = verify_reduction(inst, g);
        ++out.instances;
        if (!check.agree())
          out.fail("(a) " + problem_name(inst.problem) + " " + tag(g) + ": " + check.evidence);
        with_code = with_code || check.source_side;
        without_code_8 = without_code_8 || (n == 8 && !check.source_side);
      }
    }
  if (!with_code || !without_code_8)
    out.fail("(a) corpus lacks a code-possessing or a code-free instance");
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, [&](const Graph & g) {
      for (int k = 1; k <= 3; ++k) {
        auto check = verify_reduction(reduce_to_qkappa(g, k), g);
        ++out.instances;
        if (!check.agree())
          out.fail("(b) " + tag(g) + " k=" + std::to_string(k) + ": " + check.evidence);
      }
    });
  return out;
}

auto criterion_9() -> Outcome {
  Outcome out;
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, [&](const Graph & g) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        auto b = VertexSet::from_mask(n, m);
        auto access = accessing_witness(g, b);
        auto block = non_accessing_witness(g, b);
        ++out.instances;
        if (access.has_value() == block.has_value())
          out.fail(tag(g) + " B=" + b.to_string() + ": both or neither witness");
        if (access && !is_valid_certificate(g, b, *access))
          out.fail(tag(g) + " B=" + b.to_string() + ": access witness invalid");
        if (block && !is_valid_certificate(g, b, *block))
          out.fail(tag(g) + " B=" + b.to_string() + ": block witness invalid");
      }
    });
  return out;
}

auto criterion_10() -> Outcome {
  Outcome out;
  auto check = [&](const Graph & g) {
    int k = kappa_exact(g).value;
    int kp = kappa_prime_exact(g).value;
    ++out.instances;
    if (k != kappa_oracle(g) || kp != kappa_prime_oracle(g))
      out.fail(tag(g) + ": solver kappa=" + std::to_string(k) + " kappa'=" + std::to_string(kp));
  };
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, check);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 500; ++i)
    check(random_graph(5 + i % 4, rng));
  return out;
}

struct Criterion
{
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

} // namespace

auto main() -> int {
  std::vector<Criterion> criteria{
      {1, "multipartite closed forms, q odd", 10, criterion_1},
      {2, "multipartite closed forms, q even", 30, criterion_2},
      {3, "kappa_Q of G(3,3)", 5, criterion_3},
      {4, "disjoint copies", 120, criterion_4},
      {5, "duality with the complement", 120, criterion_5},
      {6, "bound ladder on criteria 1-5", 1, criterion_6},
      {7, "perfect-code equivalences", 300, criterion_7},
      {8, "reduction verification", 600, criterion_8},
      {9, "access/block dichotomy", 60, criterion_9},
      {10, "oracle equivalence", 300, criterion_10},
  };
  bool all = true;
  for (const auto & c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception & e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s)
      out.fail("runtime " + std::to_string(secs) + " s over limit");
    all = all && out.ok;
    std::printf("%s criterion %d: %s (%lld instances, %.2f s)\n", out.ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), out.instances, secs);
    for (const auto & p : out.problems)
      std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
