// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "hfs/cfk/complex.hpp"
#include "hfs/cfk/region.hpp"
#include "hfs/cfk/staircase.hpp"
#include "hfs/cli.hpp"
#include "hfs/contact.hpp"
#include "hfs/error.hpp"
#include "hfs/f2/complex.hpp"
#include "hfs/heegaard.hpp"
#include "hfs/surgery.hpp"
#include "oracle/brute.hpp"
#include "support/corpus.hpp"

namespace {

using hfs::cfk::BifilteredComplex;
using hfs::cfk::Hand;
using hfs::cfk::staircase;
using json = nlohmann::json;

// Collects the first few failure notes of a criterion.
struct Check {
  bool ok = true;
  std::size_t cases = 0;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
};

std::string cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hfs::cli::run(args, out, err);
  if (code != 0) return "exit " + std::to_string(code) + ": " + err.str();
  return out.str();
}

int min_n(const BifilteredComplex& c) { return std::max(1, 2 * hfs::cfk::genus(c)); }

std::string text_of(const std::vector<hfs::cfk::Generator>& gens, const std::vector<hfs::cfk::Arrow>& arrows) {
  std::string s = "cfk v1\n";
  for (const auto& g : gens) {
    s += "generator " + g.label + " A=" + std::to_string(g.alexander);
    if (g.maslov) s += " M=" + std::to_string(*g.maslov);
    s += "\n";
  }
  for (const auto& a : arrows) s += "arrow " + a.src + " " + a.dst + " h=" + std::to_string(a.h) + "\n";
  return s;
}

Check farey_golden() {
  Check c;
  const auto r = json::parse(cli({"--json", "farey", "path", "--from", "1", "--to", "12/7"}));
  c.expect(r["results"]["surgeries"] == json::array({"2/1", "2/1", "7/4"}), "surgeries for 12/7");
  c.expect(r["results"]["back_slopes"] == json::array({"1/1", "3/2", "5/3", "12/7"}), "back slopes for 12/7");
  c.expect(cli({"farey", "path", "--from", "1", "--to", "12/7"}).find("surgeries: 2/1 2/1 7/4\n") !=
               std::string::npos,
           "text output for 12/7");
  for (int n = 1; n <= 20; ++n) {
    const auto s = json::parse(
        cli({"--json", "farey", "path", "--from", std::to_string(n), "--to", std::to_string(n + 1)}));
    c.expect(s["results"]["surgeries"] == json::array({"1/0"}), "integer hop from " + std::to_string(n));
  }
  return c;
}

Check hooks_figure() {
  Check c;
  const auto k = staircase(2, Hand::Left);
  hfs::surgery::Options opts;
  opts.oracle = true;
  for (int n = 4; n <= 12; ++n) {
    const auto t = hfs::surgery::core_hfk_table(k, n, opts);
    const std::string at = " at n=" + std::to_string(n);
    c.expect(t.row(1).rank_s == 1, "rank H(S_1) = 1" + at);
    c.expect(t.lowest_nonzero_sub_row() == 1, "S_1 is the lowest nonzero row" + at);
    c.expect(t.row(2).rank_s == 0, "H(S_2) = 0" + at);
    c.expect(t.row(0).rank_s != 0, "H(S_0) != 0" + at);
    c.expect(t.row(1).rel_a_q - t.row(1).rel_a_s == -n, "relA_Q(1) - relA_S(1) = -n" + at);
    c.expect(t.oracle_agrees(), "truncation oracle" + at);
    for (int m : {0, 1, 2}) c.expect(brute::sub_rank(k, m) == t.row(m).rank_s, "brute S_m" + at);
  }
  return c;
}

Check grading_equations() {
  Check c;
  for (const auto& [name, k] : fixtures::corpus()) {
    for (int n = min_n(k); n <= min_n(k) + 4; ++n) {
      const auto t = hfs::surgery::core_hfk_table(k, n);
      const std::string at = name + " n=" + std::to_string(n);
      for (const auto& a : t.rows) {
        c.expect(a.rel_a_s - a.rel_a_q == n, "A(S_m) - A(Q_m) = n for " + at);
        if (a.m == 0) c.expect(a.rel_a_s == 0, "baseline for " + at);
        for (const auto& b : t.rows) {
          c.expect(a.rel_a_s - b.rel_a_s == -(a.m - b.m), "A(S_i) - A(S_j) for " + at);
          c.expect(a.rel_a_q - b.rel_a_q == -(a.m - b.m), "A(Q_i) - A(Q_j) for " + at);
        }
      }
    }
  }
  return c;
}

Check lspace_ranks() {
  Check c;
  for (int k = 1; k <= 6; ++k) {
    const auto cx = staircase(k, Hand::Right);
    for (int n = 2 * k; n <= 2 * k + 4; ++n) {
      const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      std::size_t sum = 0, oracle = 0;
      for (int m : hfs::surgery::spinc_window(n)) {
        sum += hfs::surgery::hf_hat_surgery(cx, n, m).total;
        oracle += brute::hook_rank(cx, m);
      }
      c.expect(sum == static_cast<std::size_t>(n), "sum of rank H(X_m) = n at " + at);
      c.expect(oracle == sum, "brute-force X_m at " + at);
      c.expect(hfs::surgery::lspace_certificate(cx, n).holds, "certificate at " + at);
    }
  }
  return c;
}

Check contact_agreement() {
  using hfs::contact::Status;
  Check c;
  for (const auto& [name, k] : fixtures::corpus(10)) {
    if (!hfs::cfk::check_flip_symmetry(k)) continue;
    const bool nonzero = hfs::contact::contact_invariant_nonzero(k);
    for (int n = min_n(k); n <= min_n(k) + 4; ++n) {
      const auto v = hfs::contact::core_contact_nonzero(k, n);
      c.expect((v.status == Status::Nonvanishing) == nonzero, name + " n=" + std::to_string(n));
    }
  }
  for (int k = 1; k <= 10; ++k) {
    const auto r = staircase(k, Hand::Right), l = staircase(k, Hand::Left);
    c.expect(hfs::contact::core_contact_nonzero(r, 2 * k).status == Status::Nonvanishing,
             "right k=" + std::to_string(k));
    c.expect(hfs::contact::core_contact_nonzero(l, 2 * k).status == Status::Vanishing,
             "left k=" + std::to_string(k));
    c.expect(hfs::contact::contact_invariant_nonzero(r), "c(xi) right k=" + std::to_string(k));
    c.expect(!hfs::contact::contact_invariant_nonzero(l), "c(xi) left k=" + std::to_string(k));
  }
  return c;
}

Check n_independence() {
  Check c;
  for (const auto& [name, k] : fixtures::corpus()) {
    for (int n = min_n(k); n <= min_n(k) + 5; ++n) {
      for (int m : hfs::surgery::spinc_window(n)) {
        c.expect(hfs::surgery::hf_hat_surgery(k, n, m).total == hfs::surgery::hf_hat_surgery(k, n + 1, m).total,
                 name + " n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
    }
  }
  return c;
}

Check homological_algebra() {
  Check c;
  std::mt19937_64 rng(20240607);

  // Mutation corpus: random arrow insertions, judged by the brute checker.
  std::size_t corrupted = 0, clean = 0;
  for (const auto& [name, k] : fixtures::corpus(10)) {
    for (bool keep_maslov : {false, true}) {
      auto gens = k.generators();
      if (!keep_maslov) {
        for (auto& g : gens) g.maslov.reset();
      }
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      std::uniform_int_distribution<int> pick_h(0, 3);
      for (int rep = 0; rep < 60; ++rep) {
        auto arrows = k.arrows();
        const int inserts = 1 + rep % 3;
        for (int t = 0; t < inserts; ++t) {
          const hfs::cfk::Arrow a{gens[pick(rng)].label, gens[pick(rng)].label, pick_h(rng)};
          if (std::find(arrows.begin(), arrows.end(), a) == arrows.end()) arrows.push_back(a);
        }
        const bool valid = brute::valid(gens, arrows);
        bool rejected = false;
        try {
          hfs::cfk::parse_cfk(text_of(gens, arrows));
        } catch (const hfs::Error&) {
          rejected = true;
        }
        if (valid) {
          ++clean;
          c.expect(!rejected, "valid mutation of " + name + " was rejected");
        } else {
          ++corrupted;
          c.expect(rejected, "corrupted mutation of " + name + " was accepted");
        }
      }
    }
  }
  c.expect(corrupted >= 1000, "mutation corpus too small: " + std::to_string(corrupted));

  // Exactness of the long exact sequence on random small complexes.
  for (int rep = 0; rep < 1000; ++rep) {
    const auto cx = fixtures::random_f2(rng, 12);
    const auto sub = fixtures::random_subcomplex(cx, rng);
    const hfs::f2::ShortExactSequence ses(cx, sub);
    const auto map = ses.connecting_map();
    const auto h_sub = ses.sub_reduction().homology_rank();
    const auto h_quot = ses.quotient_reduction().homology_rank();
    c.expect(hfs::f2::total_homology_rank(cx) == h_sub + h_quot - 2 * map.rank(),
             "exactness on random complex " + std::to_string(rep));
    c.expect(ses.inclusion_rank() + map.rank() == h_sub, "image of delta = kernel of inclusion, " + std::to_string(rep));
  }
  std::cerr << "  mutations: " << corrupted << " corrupted, " << clean << " still valid\n";
  return c;
}

Check winding() {
  Check c;
  for (long long a = 1; a <= 200; ++a) {
    for (long long q = 1; q <= 200; ++q) {
      const auto r = hfs::heegaard::winding_distinct(a, q);
      const std::string at = "(" + std::to_string(a) + ", " + std::to_string(q) + ")";
      c.expect(r.distinct == (std::gcd(a, q) == 1), "gcd rule at " + at);
      if (!r.distinct) {
        const bool witnessed = r.witness && r.witness->first > 0 && r.witness->first < a &&
                               r.witness->second > 0 && r.witness->second < q &&
                               r.witness->first * q == r.witness->second * a;
        c.expect(witnessed, "witness at " + at);
      }
    }
  }
  return c;
}

Check two_step_inequality() {
  Check c;
  for (const auto& [name, k] : fixtures::corpus()) {
    for (int n = min_n(k); n <= min_n(k) + 4; ++n) {
      for (const auto& r : hfs::surgery::core_hfk_table(k, n).rows) {
        const std::string at = name + " n=" + std::to_string(n) + " m=" + std::to_string(r.m);
        c.expect(r.rank_x <= r.rank_s + r.rank_q, "inequality at " + at);
        c.expect((r.rank_s + r.rank_q - r.rank_x) % 2 == 0, "parity at " + at);
      }
    }
  }
  return c;
}

Check determinism(const std::string& data_dir) {
  Check c;
  const std::vector<std::vector<std::string>> commands = {
      {"--oracle", "surgery", "core-table", "--n", "7", data_dir + "/trefoil-left.cfk"},
      {"surgery", "lspace", "--n", "4", data_dir + "/trefoil-right.cfk"},
      {"contact", "verdict", "--slope", "5/2", data_dir + "/trefoil-right.cfk"},
      {"contact", "delta", data_dir + "/trefoil-left.cfk"},
      {"farey", "path", "--from", "1", "--to", "12/7"},
      {"heegaard", "grading", data_dir + "/model.dom", "--x", "x", "--y", "y"},
  };
  for (auto args : commands) {
    args.insert(args.begin(), "--json");
    const auto ref = cli(args);
    c.expect(ref.rfind("{", 0) == 0, "report for " + args[1] + " " + args[2]);
    for (int rep = 0; rep < 10; ++rep) c.expect(cli(args) == ref, "repeat " + std::to_string(rep));
    for (const char* t : {"1", "2", "4", "8"}) {
      auto threaded = args;
      threaded.insert(threaded.begin(), {"--threads", t});
      c.expect(cli(threaded) == ref, std::string("threads ") + t + " for " + args[1]);
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string data_dir = argc > 1 ? argv[1] : HFS_TEST_DATA;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"1 farey golden path", farey_golden},
      {"2 hooks figure (left staircase k=2)", hooks_figure},
      {"3 core grading equations", grading_equations},
      {"4 l-space ranks of right staircases", lspace_ranks},
      {"5 contact criteria agreement", contact_agreement},
      {"6 n-independence of X_m", n_independence},
      {"7 d^2 mutations and exactness", homological_algebra},
      {"8 winding distinctness 200x200", winding},
      {"9 two-step filtration inequality", two_step_inequality},
      {"10 determinism across runs and threads", [&] { return determinism(data_dir); }},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = body();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("threw: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (ms > 5000) {
      c.ok = false;
      c.notes.push_back("took " + std::to_string(ms) + " ms");
    }
    std::printf("[%s] %-42s %6zu checks %6lld ms\n", c.ok ? "PASS" : "FAIL", name.c_str(), c.cases,
                static_cast<long long>(ms));
    for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
    if (!c.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
